#include "liepow/root_system.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace liepow {

bool Weight::is_dominant() const {
  return std::all_of(coords.begin(), coords.end(), [](int c) { return c >= 0; });
}

bool Weight::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](int c) { return c == 0; });
}

Weight Weight::operator+(const Weight& o) const {
  if (o.rank() != rank()) throw std::invalid_argument("weight rank mismatch");
  Weight r = *this;
  for (std::size_t i = 0; i < rank(); ++i) r.coords[i] += o.coords[i];
  return r;
}

Weight Weight::operator-(const Weight& o) const {
  if (o.rank() != rank()) throw std::invalid_argument("weight rank mismatch");
  Weight r = *this;
  for (std::size_t i = 0; i < rank(); ++i) r.coords[i] -= o.coords[i];
  return r;
}

Weight Weight::scaled(int k) const {
  Weight r = *this;
  for (auto& c : r.coords) c *= k;
  return r;
}

std::size_t WeightHash::operator()(const Weight& w) const noexcept {
  std::uint64_t h = 1469598103934665603ull;
  for (int c : w.coords) {
    h ^= static_cast<std::uint32_t>(c);
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

std::string to_string(const Weight& w) {
  std::string s;
  for (std::size_t i = 0; i < w.rank(); ++i) {
    if (i) s += ',';
    s += std::to_string(w[i]);
  }
  return s;
}

std::string to_shorthand(const Weight& w) {
  std::string s;
  for (std::size_t i = 0; i < w.rank(); ++i) {
    int c = w[i];
    if (c == 0) continue;
    if (c < 0)
      s += '-';
    else if (!s.empty())
      s += '+';
    if (std::abs(c) != 1) s += std::to_string(std::abs(c));
    s += "λ" + std::to_string(i + 1);
  }
  return s.empty() ? "0" : s;
}

namespace {

std::vector<std::vector<int>> cartan_matrix(char type, std::size_t n) {
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) a[i][i] = 2;
  auto link = [&](std::size_t i, std::size_t j) {  // 1-based, simply laced edge
    a[i - 1][j - 1] = -1;
    a[j - 1][i - 1] = -1;
  };
  auto bad = [&] {
    throw std::invalid_argument(std::string("invalid root system ") + type + std::to_string(n));
  };
  switch (type) {
    case 'A':
      if (n < 1) bad();
      for (std::size_t i = 1; i < n; ++i) link(i, i + 1);
      break;
    case 'B':
    case 'C':
      if (n < 2) bad();
      for (std::size_t i = 1; i + 1 < n; ++i) link(i, i + 1);
      // <alpha_{n-1}, alpha_n^vee> is -2 when alpha_n is short (B), -1 when long (C).
      a[n - 2][n - 1] = type == 'B' ? -2 : -1;
      a[n - 1][n - 2] = type == 'B' ? -1 : -2;
      break;
    case 'D':
      if (n < 3) bad();
      for (std::size_t i = 1; i + 2 < n; ++i) link(i, i + 1);
      if (n == 3) {
        link(1, 2);
        link(1, 3);
      } else {
        link(n - 2, n - 1);
        link(n - 2, n);
      }
      break;
    case 'E':
      if (n < 6 || n > 8) bad();
      link(1, 3);
      link(2, 4);
      for (std::size_t i = 3; i < n; ++i) link(i, i + 1);
      break;
    case 'F':
      if (n != 4) bad();
      link(1, 2);
      link(3, 4);
      a[1][2] = -2;
      a[2][1] = -1;
      break;
    case 'G':
      if (n != 2) bad();
      a[0][1] = -1;
      a[1][0] = -3;
      break;
    default:
      bad();
  }
  return a;
}

// d_i with A_ij d_j = A_ji d_i, scaled so the smallest is 1.
std::vector<int> symmetrizer(const std::vector<std::vector<int>>& a) {
  const std::size_t n = a.size();
  std::vector<Rational> d(n, 0);
  d[0] = 1;
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    auto i = queue.front();
    queue.pop_front();
    for (std::size_t j = 0; j < n; ++j)
      if (j != i && a[i][j] != 0 && d[j] == 0) {
        d[j] = Rational(a[j][i]) * d[i] / a[i][j];
        queue.push_back(j);
      }
  }
  Rational lo = *std::min_element(d.begin(), d.end());
  std::vector<int> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    Rational r = d[i] / lo;
    if (denominator(r) != 1) throw std::logic_error("non-integral symmetrizer");
    out[i] = static_cast<int>(numerator(r));
  }
  return out;
}

std::vector<std::vector<Rational>> rational_inverse(const std::vector<std::vector<int>>& a) {
  const std::size_t n = a.size();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(2 * n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = a[i][j];
    m[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m[piv][c] == 0) ++piv;
    if (piv == n) throw std::logic_error("singular Cartan matrix");
    std::swap(m[piv], m[c]);
    Rational s = m[c][c];
    for (auto& x : m[c]) x /= s;
    for (std::size_t r = 0; r < n; ++r)
      if (r != c && m[r][c] != 0) {
        Rational f = m[r][c];
        for (std::size_t k = 0; k < 2 * n; ++k) m[r][k] -= f * m[c][k];
      }
  }
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = m[i][n + j];
  return inv;
}

std::vector<std::vector<int>> close_positive_roots(const std::vector<std::vector<int>>& a) {
  const std::size_t n = a.size();
  std::set<std::vector<int>> all;
  std::vector<std::vector<int>> level;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<int> r(n, 0);
    r[i] = 1;
    level.push_back(r);
    all.insert(r);
  }
  std::vector<std::vector<int>> ordered = level;
  while (!level.empty()) {
    std::set<std::vector<int>> next;
    for (const auto& beta : level)
      for (std::size_t i = 0; i < n; ++i) {
        int pair = 0;  // <beta, alpha_i^vee>
        for (std::size_t j = 0; j < n; ++j) pair += beta[j] * a[j][i];
        int r = 0;
        for (auto gamma = beta;;) {
          --gamma[i];
          if (!all.contains(gamma)) break;
          ++r;
        }
        if (r - pair > 0) {
          auto up = beta;
          ++up[i];
          if (!all.contains(up)) next.insert(up);
        }
      }
    level.assign(next.begin(), next.end());
    for (const auto& r : level) {
      all.insert(r);
      ordered.push_back(r);
    }
  }
  return ordered;
}

}  // namespace

RootSystemPtr build_root_system(char type, std::size_t rank) {
  std::shared_ptr<RootSystem> rs(new RootSystem());
  rs->type_ = type;
  rs->rank_ = rank;
  rs->cartan_ = cartan_matrix(type, rank);
  rs->d_ = symmetrizer(rs->cartan_);
  rs->inv_cartan_ = rational_inverse(rs->cartan_);
  rs->positive_roots_ = close_positive_roots(rs->cartan_);
  for (const auto& r : rs->positive_roots_) rs->positive_root_weights_.push_back(rs->root_weight(r));
  rs->form_.assign(rank, std::vector<Rational>(rank));
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t j = 0; j < rank; ++j) rs->form_[i][j] = rs->inv_cartan_[i][j] * rs->d_[j];
  return rs;
}

Weight RootSystem::simple_root(std::size_t i) const { return Weight(cartan_.at(i)); }

Weight RootSystem::root_weight(const std::vector<int>& root) const {
  Weight w = Weight::zero(rank_);
  for (std::size_t i = 0; i < rank_; ++i)
    if (root[i])
      for (std::size_t j = 0; j < rank_; ++j) w.coords[j] += root[i] * cartan_[i][j];
  return w;
}

std::int64_t RootSystem::pairing(const Weight& mu, const std::vector<int>& root) const {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < rank_; ++i)
    s += static_cast<std::int64_t>(root[i]) * d_[i] * mu[i];
  return s;
}

std::vector<Rational> RootSystem::root_coordinates(const Weight& w) const {
  require_rank(*this, w);
  std::vector<Rational> x(rank_, 0);
  for (std::size_t i = 0; i < rank_; ++i)
    if (w[i])
      for (std::size_t j = 0; j < rank_; ++j) x[j] += w[i] * inv_cartan_[i][j];
  return x;
}

void require_rank(const RootSystem& rs, const Weight& w) {
  if (w.rank() != rs.rank())
    throw std::invalid_argument("weight " + to_string(w) + " does not have rank " +
                                std::to_string(rs.rank()));
}

Weight simple_reflection(const RootSystem& rs, std::size_t i, const Weight& w) {
  require_rank(rs, w);
  if (i < 1 || i > rs.rank()) throw std::out_of_range("simple reflection index out of range");
  Weight out = w;
  const int c = w[i - 1];
  if (c == 0) return out;
  const auto& row = rs.cartan()[i - 1];
  for (std::size_t j = 0; j < rs.rank(); ++j) out.coords[j] -= c * row[j];
  return out;
}

Weight dominant_representative(const RootSystem& rs, const Weight& w) {
  require_rank(rs, w);
  Weight cur = w;
  for (;;) {
    std::size_t i = 0;
    while (i < cur.rank() && cur[i] >= 0) ++i;
    if (i == cur.rank()) return cur;
    cur = simple_reflection(rs, i + 1, cur);
  }
}

std::vector<Weight> weyl_orbit(const RootSystem& rs, const Weight& w) {
  // Every orbit element is reached from the dominant one by reflections s_i
  // applied to weights with positive i-th coordinate.
  const Weight top = dominant_representative(rs, w);
  std::unordered_set<Weight, WeightHash> seen{top};
  std::vector<Weight> frontier{top};
  std::size_t dominant_count = 0;
  while (!frontier.empty()) {
    std::vector<Weight> next;
    for (const auto& mu : frontier) {
      if (mu.is_dominant()) ++dominant_count;
      for (std::size_t i = 0; i < rs.rank(); ++i)
        if (mu[i] > 0) {
          Weight nu = simple_reflection(rs, i + 1, mu);
          if (seen.insert(nu).second) next.push_back(std::move(nu));
        }
    }
    frontier = std::move(next);
  }
  if (dominant_count != 1) throw std::logic_error("orbit with more than one dominant weight");
  std::vector<Weight> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t orbit_size(const RootSystem& rs, const Weight& w) { return weyl_orbit(rs, w).size(); }

bool dominance_leq(const RootSystem& rs, const Weight& mu, const Weight& lambda) {
  auto x = rs.root_coordinates(lambda - mu);
  return std::all_of(x.begin(), x.end(), [](const Rational& r) { return r >= 0; });
}

BigInt weyl_dim(const RootSystem& rs, const Weight& lambda) {
  require_rank(rs, lambda);
  if (!lambda.is_dominant()) throw std::invalid_argument("weyl_dim of non-dominant weight");
  const Weight shifted = lambda + rs.rho();
  const Weight rho = rs.rho();
  Rational prod = 1;
  for (const auto& root : rs.positive_roots())
    prod *= Rational(rs.pairing(shifted, root), rs.pairing(rho, root));
  if (denominator(prod) != 1) throw std::logic_error("non-integral Weyl dimension");
  return numerator(prod);
}

DominantMultiplicities freudenthal(const RootSystem& rs, const Weight& lambda,
                                   const FreudenthalCache* cache) {
  require_rank(rs, lambda);
  if (!lambda.is_dominant()) throw std::invalid_argument("freudenthal of non-dominant weight");
  DominantMultiplicities result;
  if (cache && cache->lookup && cache->lookup(rs, lambda, result)) return result;

  const std::size_t n = rs.rank();
  const auto& roots = rs.positive_roots();
  const auto& root_weights = rs.positive_root_weights();
  const auto& d = rs.root_length_factors();

  // Dominant weights below lambda, with root-coordinate depth lambda - mu.
  struct Node {
    Weight mu;
    std::vector<int> depth;
    int height;
  };
  std::vector<Node> nodes{{lambda, std::vector<int>(n, 0), 0}};
  std::unordered_set<Weight, WeightHash> seen{lambda};
  for (std::size_t k = 0; k < nodes.size(); ++k)
    for (std::size_t r = 0; r < roots.size(); ++r) {
      Weight nu = nodes[k].mu - root_weights[r];
      if (!nu.is_dominant() || !seen.insert(nu).second) continue;
      auto depth = nodes[k].depth;
      int h = 0;
      for (std::size_t i = 0; i < n; ++i) h += depth[i] += roots[r][i];
      nodes.push_back({std::move(nu), std::move(depth), h});
    }
  std::stable_sort(nodes.begin(), nodes.end(),
                   [](const Node& a, const Node& b) { return a.height < b.height; });

  std::unordered_map<Weight, std::uint64_t, WeightHash> mult{{lambda, 1}};
  for (const auto& node : nodes) {
    if (node.height == 0) continue;
    const Weight& mu = node.mu;
    // (lambda+rho, lambda+rho) - (mu+rho, mu+rho) = (lambda - mu, lambda + mu + 2 rho).
    BigInt lhs = 0;
    for (std::size_t i = 0; i < n; ++i)
      lhs += BigInt(node.depth[i]) * d[i] * (lambda[i] + mu[i] + 2);
    BigInt rhs = 0;
    for (std::size_t r = 0; r < roots.size(); ++r) {
      Weight nu = mu;
      for (int k = 1;; ++k) {
        bool below = true;
        for (std::size_t i = 0; i < n; ++i)
          if (node.depth[i] - k * roots[r][i] < 0) below = false;
        if (!below) break;
        nu = nu + root_weights[r];
        auto it = mult.find(dominant_representative(rs, nu));
        if (it != mult.end()) rhs += BigInt(it->second) * rs.pairing(nu, roots[r]);
      }
    }
    rhs *= 2;
    if (lhs <= 0 || rhs % lhs != 0)
      throw std::logic_error("Freudenthal recursion produced a non-integral multiplicity at " +
                             to_string(mu));
    BigInt m = rhs / lhs;
    if (m <= 0) throw std::logic_error("Freudenthal multiplicity vanished at " + to_string(mu));
    mult[mu] = static_cast<std::uint64_t>(m);
  }
  result.insert(mult.begin(), mult.end());
  if (cache && cache->store) cache->store(rs, lambda, result);
  return result;
}

}  // namespace liepow
