#include "liepow/weight_multiset.hpp"

#include <algorithm>
#include <stdexcept>

namespace liepow {

namespace {

void require_same_system(const WeightMultiset& u, const WeightMultiset& v) {
  if (!(*u.root_system() == *v.root_system()))
    throw std::invalid_argument("weight multisets over different root systems");
}

}  // namespace

std::uint64_t WeightMultiset::count(const Weight& w) const {
  auto it = counts_.find(w);
  return it == counts_.end() ? 0 : it->second;
}

void WeightMultiset::add(const Weight& w, std::uint64_t k) {
  if (k == 0) return;
  require_rank(*rs_, w);
  counts_[w] += k;
  size_ += k;
}

void WeightMultiset::remove(const Weight& w, std::uint64_t k) {
  if (k == 0) return;
  auto it = counts_.find(w);
  const std::uint64_t have = it == counts_.end() ? 0 : it->second;
  if (have < k)
    throw std::domain_error("not a sub-multiset: weight " + to_string(w) + " needed " +
                            std::to_string(k) + " times, present " + std::to_string(have));
  if (have == k)
    counts_.erase(it);
  else
    it->second -= k;
  size_ -= k;
}

std::vector<std::pair<Weight, std::uint64_t>> WeightMultiset::sorted() const {
  std::vector<std::pair<Weight, std::uint64_t>> out(counts_.begin(), counts_.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Weight> WeightMultiset::expanded() const {
  std::vector<Weight> out;
  out.reserve(size_);
  for (const auto& [w, k] : sorted()) out.insert(out.end(), k, w);
  return out;
}

bool WeightMultiset::operator==(const WeightMultiset& o) const {
  return *rs_ == *o.rs_ && size_ == o.size_ && counts_ == o.counts_;
}

WeightMultiset expand_orbits(RootSystemPtr rs, const DominantMultiplicities& dominant) {
  WeightMultiset out(rs);
  for (const auto& [mu, m] : dominant)
    for (const auto& w : weyl_orbit(*rs, mu)) out.add(w, m);
  return out;
}

WeightMultiset tensor(const WeightMultiset& u, const WeightMultiset& v) {
  require_same_system(u, v);
  WeightMultiset out(u.root_system());
  for (const auto& [a, ka] : u.counts())
    for (const auto& [b, kb] : v.counts()) out.add(a + b, ka * kb);
  return out;
}

WeightMultiset exterior_power(const WeightMultiset& v, int n) {
  if (n != 2 && n != 3) throw std::invalid_argument("exterior powers are supported for n = 2, 3");
  if (static_cast<std::uint64_t>(n) > v.size())
    throw std::invalid_argument("exterior power degree exceeds multiset size");
  const auto list = v.expanded();
  const std::size_t len = list.size();
  WeightMultiset out(v.root_system());
  for (std::size_t i = 0; i < len; ++i)
    for (std::size_t j = i + 1; j < len; ++j) {
      if (n == 2) {
        out.add(list[i] + list[j]);
        continue;
      }
      const Weight ij = list[i] + list[j];
      for (std::size_t k = j + 1; k < len; ++k) out.add(ij + list[k]);
    }
  return out;
}

WeightMultiset frobenius_twist(const WeightMultiset& v, std::uint32_t p, unsigned n) {
  int scale = 1;
  for (unsigned i = 0; i < n; ++i) scale *= static_cast<int>(p);
  WeightMultiset out(v.root_system());
  for (const auto& [w, k] : v.counts()) out.add(w.scaled(scale), k);
  return out;
}

WeightMultiset subtract(const WeightMultiset& v, const WeightMultiset& u) {
  require_same_system(u, v);
  WeightMultiset out = v;
  for (const auto& [w, k] : u.sorted()) out.remove(w, k);
  return out;
}

WeightMultiset lie3_multiset(const WeightMultiset& v) {
  if (v.size() < 2) throw std::invalid_argument("third Lie power needs at least two weights");
  WeightMultiset a2v_v = tensor(exterior_power(v, 2), v);
  if (v.size() == 2) return a2v_v;  // A^3 V = 0
  return subtract(a2v_v, exterior_power(v, 3));
}

WeightMultiset union_of(const WeightMultiset& u, const WeightMultiset& v) {
  require_same_system(u, v);
  WeightMultiset out = u;
  for (const auto& [w, k] : v.counts()) out.add(w, k);
  return out;
}

}  // namespace liepow
