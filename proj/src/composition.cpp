#include "liepow/composition.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace liepow {

MultiplicityOracle::MultiplicityOracle(RootSystemPtr rs, std::optional<std::uint32_t> p,
                                       std::shared_ptr<const ModularTable> table,
                                       const FreudenthalCache* cache)
    : rs_(std::move(rs)),
      prime_(p),
      table_(std::move(table)),
      cache_(cache),
      memo_(std::make_shared<Memo>()) {}

MultiplicityOracle MultiplicityOracle::freudenthal(RootSystemPtr rs, const FreudenthalCache* cache) {
  return MultiplicityOracle(std::move(rs), std::nullopt, nullptr, cache);
}

MultiplicityOracle MultiplicityOracle::modular(RootSystemPtr rs, std::uint32_t p,
                                               std::shared_ptr<const ModularTable> table,
                                               const FreudenthalCache* cache) {
  if (!table) throw std::runtime_error("modular oracle needs a decomposition table");
  if (!table->covers(rs->type(), rs->rank(), p))
    throw std::runtime_error("no modular data for " + rs->label() + " at p=" + std::to_string(p));
  return MultiplicityOracle(std::move(rs), p, std::move(table), cache);
}

std::string MultiplicityOracle::describe() const {
  return prime_ ? "modular p=" + std::to_string(*prime_) : std::string("freudenthal");
}

WeightMultiset MultiplicityOracle::weyl_locked(const Weight& lambda) const {
  if (auto it = memo_->weyl.find(lambda); it != memo_->weyl.end()) return it->second;
  auto ms = expand_orbits(rs_, liepow::freudenthal(*rs_, lambda, cache_));
  const BigInt expected = weyl_dim(*rs_, lambda);
  if (BigInt(ms.size()) != expected)
    throw std::logic_error("Freudenthal total " + std::to_string(ms.size()) +
                           " differs from Weyl dimension " + expected.str() + " for " +
                           to_string(lambda));
  memo_->weyl.emplace(lambda, ms);
  return ms;
}

WeightMultiset MultiplicityOracle::weyl_module(const Weight& lambda) const {
  require_rank(*rs_, lambda);
  std::lock_guard lock(memo_->mutex);
  return weyl_locked(lambda);
}

WeightMultiset MultiplicityOracle::irreducible_locked(const Weight& lambda,
                                                      std::vector<Weight>& stack) const {
  if (auto it = memo_->irreducible.find(lambda); it != memo_->irreducible.end()) return it->second;
  if (std::find(stack.begin(), stack.end(), lambda) != stack.end())
    throw std::runtime_error("cyclic modular data at " + to_string(lambda));
  if (!prime_) {
    auto ms = weyl_locked(lambda);
    memo_->irreducible.emplace(lambda, ms);
    return ms;
  }
  const auto* row = table_->row(rs_->type(), rs_->rank(), *prime_, lambda);
  if (!row)
    throw std::runtime_error("no modular data for L(" + to_shorthand(lambda) + ") of " +
                             rs_->label() + " at p=" + std::to_string(*prime_));
  stack.push_back(lambda);
  WeightMultiset ms = weyl_locked(lambda);
  for (const auto& [mu, mult] : *row) {
    if (mu == lambda) continue;
    const WeightMultiset sub = irreducible_locked(mu, stack);
    for (const auto& [w, k] : sub.counts()) ms.remove(w, k * mult);
  }
  stack.pop_back();
  memo_->irreducible.emplace(lambda, ms);
  return ms;
}

WeightMultiset MultiplicityOracle::irreducible(const Weight& lambda) const {
  require_rank(*rs_, lambda);
  if (!lambda.is_dominant()) throw std::invalid_argument("irreducible of non-dominant weight");
  std::lock_guard lock(memo_->mutex);
  std::vector<Weight> stack;
  return irreducible_locked(lambda, stack);
}

std::uint64_t MultiplicityOracle::irreducible_dim(const Weight& lambda) const {
  return irreducible(lambda).size();
}

WeightMultiset irreducible_multiset(const MultiplicityOracle& oracle, const Weight& lambda) {
  return oracle.irreducible(lambda);
}

std::uint64_t CompositionFactors::total_dim() const {
  std::uint64_t s = 0;
  for (const auto& e : entries) s += e.dim * e.multiplicity;
  return s;
}

bool CompositionFactors::multiplicity_free() const {
  return std::all_of(entries.begin(), entries.end(),
                     [](const FactorEntry& e) { return e.multiplicity == 1; });
}

namespace {

// With root coordinates, dominance is componentwise comparison.
std::vector<Rational> depth_of(const RootSystem& rs, const Weight& w) {
  return rs.root_coordinates(w);
}

bool leq(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

}  // namespace

CompositionFactors peel(const WeightMultiset& target, const MultiplicityOracle& oracle,
                        TieBreak tie_break) {
  if (target.empty()) throw std::invalid_argument("peel of an empty multiset");
  const auto& rs = *target.root_system();
  if (!(rs == *oracle.root_system()))
    throw std::invalid_argument("oracle and target use different root systems");

  // A non-dominant weight can only be maximal when its dominant representative
  // is missing; checking Weyl closure up front rules that out for every step.
  for (const auto& [w, k] : target.counts()) {
    if (w.is_dominant()) continue;
    const Weight top = dominant_representative(rs, w);
    if (target.count(top) != k)
      throw std::domain_error("malformed input: weight " + to_string(w) + " has multiplicity " +
                              std::to_string(k) + " but its dominant representative " +
                              to_string(top) + " has " + std::to_string(target.count(top)));
  }

  WeightMultiset remaining = target;
  std::map<Weight, std::uint64_t> found;
  std::map<Weight, std::uint64_t> dims;
  while (!remaining.empty()) {
    std::vector<Weight> candidates;
    for (const auto& [w, k] : remaining.counts())
      if (w.is_dominant()) candidates.push_back(w);
    if (candidates.empty())
      throw std::domain_error("malformed input: no dominant weight left in a nonempty multiset");
    std::sort(candidates.begin(), candidates.end());
    std::vector<std::vector<Rational>> depth;
    for (const auto& c : candidates) depth.push_back(depth_of(rs, c));
    std::vector<std::size_t> maximal;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      bool is_max = true;
      for (std::size_t j = 0; j < candidates.size() && is_max; ++j)
        if (j != i && leq(depth[i], depth[j])) is_max = false;
      if (is_max) maximal.push_back(i);
    }
    const Weight lambda =
        candidates[tie_break == TieBreak::LexLargest ? maximal.back() : maximal.front()];
    const WeightMultiset irr = oracle.irreducible(lambda);
    try {
      for (const auto& [w, k] : irr.sorted()) remaining.remove(w, k);
    } catch (const std::domain_error& e) {
      throw std::domain_error("oracle inconsistent with target while removing L(" +
                              to_shorthand(lambda) + "): " + e.what());
    }
    ++found[lambda];
    dims[lambda] = irr.size();
  }

  WeightMultiset rebuilt(target.root_system());
  for (const auto& [lambda, mult] : found) {
    const WeightMultiset irr = oracle.irreducible(lambda);
    for (const auto& [w, k] : irr.counts()) rebuilt.add(w, k * mult);
  }
  if (!(rebuilt == target))
    throw std::logic_error("composition factors do not reconstruct the input multiset");

  CompositionFactors out;
  for (const auto& [lambda, mult] : found) out.entries.push_back({lambda, dims[lambda], mult});
  std::sort(out.entries.begin(), out.entries.end(), [&](const FactorEntry& a, const FactorEntry& b) {
    Rational ha = 0, hb = 0;
    for (const auto& x : depth_of(rs, a.lambda)) ha += x;
    for (const auto& x : depth_of(rs, b.lambda)) hb += x;
    if (ha != hb) return ha > hb;
    return a.lambda > b.lambda;
  });
  return out;
}

std::string to_string(LiePower power) { return power == LiePower::A2 ? "a2" : "l3"; }

WeightMultiset lie_power_weights(const MultiplicityOracle& oracle, const Weight& lambda,
                                 LiePower power) {
  const WeightMultiset v = oracle.irreducible(lambda);
  return power == LiePower::A2 ? exterior_power(v, 2) : lie3_multiset(v);
}

namespace {

Weight fundamental(std::size_t rank, std::initializer_list<std::size_t> indices) {
  Weight w = Weight::zero(rank);
  for (auto i : indices) w.coords[i - 1] += 1;
  return w;
}

}  // namespace

std::vector<TableTarget> known_targets() {
  const PrimeRegime any_odd{"p>2", std::nullopt};
  const PrimeRegime above3{"p>3", std::nullopt};
  const PrimeRegime p3{"p=3", 3u};
  const PrimeRegime p5{"p=5", 5u};
  return {
      {"G2 L(λ1) A2", 'G', 2, fundamental(2, {1}), LiePower::A2, {p3, above3}},
      {"G2 L(λ2) A2", 'G', 2, fundamental(2, {2}), LiePower::A2, {above3}},
      {"F4 L(λ1) A2", 'F', 4, fundamental(4, {1}), LiePower::A2, {p3, above3}},
      {"F4 L(λ4) A2", 'F', 4, fundamental(4, {4}), LiePower::A2, {p3, above3}},
      {"E6 L(λ1) A2", 'E', 6, fundamental(6, {1}), LiePower::A2, {any_odd}},
      {"E6 L(λ6) A2", 'E', 6, fundamental(6, {6}), LiePower::A2, {any_odd}},
      {"E7 L(λ7) A2", 'E', 7, fundamental(7, {7}), LiePower::A2,
       {{"p=7", 7u}, {"p∉{2,7}", std::nullopt}}},
      {"E8 L(λ8) A2", 'E', 8, fundamental(8, {8}), LiePower::A2, {p3, p5, {"p>5", std::nullopt}}},
      {"E6 L(λ1) L3", 'E', 6, fundamental(6, {1}), LiePower::L3, {p3, p5, {"p>5", std::nullopt}}},
      {"E6 L(λ6) L3", 'E', 6, fundamental(6, {6}), LiePower::L3, {p3, p5, {"p>5", std::nullopt}}},
      {"E7 L(λ7) L3", 'E', 7, fundamental(7, {7}), LiePower::L3,
       {p3, {"p=7", 7u}, {"p=11", 11u}, {"p=19", 19u}, {"p∉{2,3,7,11,19}", std::nullopt}}},
      {"C28 L(λ1) A2", 'C', 28, fundamental(28, {1}), LiePower::A2, {{"p>2", std::nullopt}}},
      {"C28 L(λ1) L3", 'C', 28, fundamental(28, {1}), LiePower::L3,
       {{"p=19", 19u}, {"p∉{2,3,19}", std::nullopt}}},
  };
}

std::vector<TableRow> table_suite(const TableTarget& target,
                                  std::shared_ptr<const ModularTable> table,
                                  const FreudenthalCache* cache, TieBreak tie_break) {
  auto rs = build_root_system(target.type, target.rank);
  std::vector<TableRow> rows;
  for (const auto& regime : target.regimes) {
    TableRow row{target.id, regime, std::nullopt, {}};
    try {
      auto oracle = regime.prime ? MultiplicityOracle::modular(rs, *regime.prime, table, cache)
                                 : MultiplicityOracle::freudenthal(rs, cache);
      row.factors = peel(lie_power_weights(oracle, target.module_weight, target.power), oracle,
                         tie_break);
    } catch (const std::runtime_error& e) {
      row.diagnostic = e.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace liepow
