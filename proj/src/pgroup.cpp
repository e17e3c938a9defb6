#include "liepow/pgroup.hpp"

#include <stdexcept>

#include "liepow/mat_module.hpp"

namespace liepow {

namespace {

FVector random_vector(const PrimeField& f, std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> dist(0, f.prime() - 1);
  FVector v(n);
  for (auto& x : v) x = dist(rng);
  return v;
}

FVector add(const PrimeField& f, FVector a, const FVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = f.add(a[i], b[i]);
  return a;
}

FVector negate(const PrimeField& f, FVector a) {
  for (auto& x : a) x = f.neg(x);
  return a;
}

FVector sub(const PrimeField& f, FVector a, const FVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = f.sub(a[i], b[i]);
  return a;
}

FVector scale(const PrimeField& f, FVector a, Residue c) {
  for (auto& x : a) x = f.mul(x, c);
  return a;
}

FVector unit(std::size_t n, std::size_t i) {
  FVector v(n, 0);
  v.at(i) = 1;
  return v;
}

void require_length(const FVector& v, std::size_t n, const char* what) {
  if (v.size() != n) throw std::invalid_argument(std::string("wrong coordinate length for ") + what);
}

void require_proper(const Subspace& s, std::size_t ambient, const char* what) {
  if (s.ambient_dim() != ambient)
    throw std::invalid_argument(std::string(what) + " has the wrong ambient dimension");
}

}  // namespace

// ---- Gamma2 ----

Gamma2Group::Gamma2Group(PrimeField field, std::size_t d)
    : Gamma2Group(field, d, Subspace::zero(field, d * (d - 1) / 2)) {}

Gamma2Group::Gamma2Group(PrimeField field, std::size_t d, Subspace u)
    : field_(field), d_(d), lie_(LiePowerBasis::get(field, d)), u_(std::move(u)) {
  require_proper(u_, lie_->l2_dim(), "U");
}

std::size_t Gamma2Group::order_exponent() const { return d_ + u_.non_pivots().size(); }

Gamma2Element Gamma2Group::identity() const { return {FVector(d_, 0), FVector(lie_->l2_dim(), 0)}; }

Gamma2Element Gamma2Group::generator(std::size_t i) const {
  return {unit(d_, i), FVector(lie_->l2_dim(), 0)};
}

Gamma2Element Gamma2Group::make(FVector a, FVector b) const {
  require_length(a, d_, "V");
  require_length(b, lie_->l2_dim(), "L2");
  for (auto& x : a) x %= field_.prime();
  for (auto& x : b) x %= field_.prime();
  return {std::move(a), u_.coset_reduce(std::move(b))};
}

Gamma2Element Gamma2Group::multiply(const Element& x, const Element& y) const {
  FVector b = add(field_, add(field_, x.b, y.b), lie_->bracket_vv(x.a, y.a));
  return {add(field_, x.a, y.a), u_.coset_reduce(std::move(b))};
}

Gamma2Element Gamma2Group::inverse(const Element& x) const {
  return {negate(field_, x.a), u_.coset_reduce(negate(field_, x.b))};
}

Gamma2Element Gamma2Group::random(std::mt19937_64& rng) const {
  auto a = random_vector(field_, d_, rng);
  return make(std::move(a), random_vector(field_, lie_->l2_dim(), rng));
}

FVector Gamma2Group::frattini_coords(const Element& x) const {
  if (!is_zero(x.a)) throw std::invalid_argument("element is not in the Frattini subgroup");
  return x.b;
}

Gamma2Element Gamma2Group::from_frattini_coords(const FVector& v) const {
  return make(FVector(d_, 0), v);
}

Gamma2Element Gamma2Group::act(const FMatrix& g, const Element& x) const {
  if (!stabilizes(g, u_, InducedAction::ExteriorSquare))
    throw NotStabilized("matrix does not stabilize U");
  return make(vecmat(x.a, g), vecmat(x.b, exterior_square(g)));
}

// ---- Gamma3 ----

Gamma3Group::Gamma3Group(PrimeField field, std::size_t d)
    : Gamma3Group(field, d, Subspace::zero(field, LiePowerBasis::get(field, d)->l3_dim())) {}

Gamma3Group::Gamma3Group(PrimeField field, std::size_t d, Subspace w)
    : field_(field),
      d_(d),
      lie_(LiePowerBasis::get(field, d)),
      w_(std::move(w)),
      frattini_kernel_(Subspace::zero(field, 0)) {
  if (field.prime() <= 3) throw std::invalid_argument("the class-3 law needs p > 3");
  require_proper(w_, lie_->l3_dim(), "W");
  std::vector<FVector> rows;
  for (std::size_t i = 0; i < w_.dim(); ++i) {
    FVector v(lie_->l2_dim(), 0);
    const auto wi = w_.basis_vector(i);
    v.insert(v.end(), wi.begin(), wi.end());
    rows.push_back(std::move(v));
  }
  frattini_kernel_ = Subspace::span(field, frattini_ambient(), rows);
}

std::size_t Gamma3Group::order_exponent() const {
  return d_ + lie_->l2_dim() + w_.non_pivots().size();
}

Gamma3Element Gamma3Group::identity() const {
  return {FVector(d_, 0), FVector(lie_->l2_dim(), 0), FVector(lie_->l3_dim(), 0)};
}

Gamma3Element Gamma3Group::generator(std::size_t i) const {
  auto e = identity();
  e.a = unit(d_, i);
  return e;
}

Gamma3Element Gamma3Group::make(FVector a, FVector b, FVector c) const {
  require_length(a, d_, "V");
  require_length(b, lie_->l2_dim(), "L2");
  require_length(c, lie_->l3_dim(), "L3");
  for (auto* v : {&a, &b, &c})
    for (auto& x : *v) x %= field_.prime();
  return {std::move(a), std::move(b), w_.coset_reduce(std::move(c))};
}

Gamma3Element Gamma3Group::multiply(const Element& x, const Element& y) const {
  const auto& f = field_;
  const auto& lie = *lie_;
  // c + h + 3([b,f] - [g,a]) + [a, f, f - a]
  FVector twist = sub(f, lie.bracket_l2_v(x.b, y.a), lie.bracket_l2_v(y.b, x.a));
  FVector c = add(f, add(f, x.c, y.c), scale(f, std::move(twist), 3));
  c = add(f, std::move(c), lie.bracket_vvv(x.a, y.a, sub(f, y.a, x.a)));
  FVector b = add(f, add(f, x.b, y.b), lie.bracket_vv(x.a, y.a));
  return {add(f, x.a, y.a), std::move(b), w_.coset_reduce(std::move(c))};
}

Gamma3Element Gamma3Group::inverse(const Element& x) const {
  return {negate(field_, x.a), negate(field_, x.b), w_.coset_reduce(negate(field_, x.c))};
}

Gamma3Element Gamma3Group::random(std::mt19937_64& rng) const {
  auto a = random_vector(field_, d_, rng);
  auto b = random_vector(field_, lie_->l2_dim(), rng);
  return make(std::move(a), std::move(b), random_vector(field_, lie_->l3_dim(), rng));
}

FVector Gamma3Group::frattini_coords(const Element& x) const {
  if (!is_zero(x.a)) throw std::invalid_argument("element is not in the Frattini subgroup");
  FVector v = x.b;
  v.insert(v.end(), x.c.begin(), x.c.end());
  return v;
}

Gamma3Element Gamma3Group::from_frattini_coords(const FVector& v) const {
  require_length(v, frattini_ambient(), "Frattini coordinates");
  const auto mid = v.begin() + static_cast<std::ptrdiff_t>(lie_->l2_dim());
  return make(FVector(d_, 0), FVector(v.begin(), mid), FVector(mid, v.end()));
}

Gamma3Element Gamma3Group::act(const FMatrix& g, const Element& x) const {
  if (!stabilizes(g, w_, InducedAction::Lie3)) throw NotStabilized("matrix does not stabilize W");
  return make(vecmat(x.a, g), vecmat(x.b, exterior_square(g)), vecmat(x.c, lie_->lie3_action(g)));
}

// ---- E* ----

EStarGroup::EStarGroup(PrimeField field, std::size_t d)
    : EStarGroup(field, d, Subspace::zero(field, d + d * (d - 1) / 2)) {}

EStarGroup::EStarGroup(PrimeField field, std::size_t d, Subspace x)
    : field_(field),
      d_(d),
      p2_(field.prime() * field.prime()),
      lie_(LiePowerBasis::get(field, d)),
      x_(std::move(x)) {
  require_proper(x_, frattini_ambient(), "X");
}

std::size_t EStarGroup::order_exponent() const { return d_ + x_.non_pivots().size(); }

EStarElement EStarGroup::normalize(Element x) const {
  // m = r + p s; the pair (s, b) lives in the central Frattini subgroup and is reduced mod X.
  const std::uint32_t p = field_.prime();
  FVector v(frattini_ambient());
  for (std::size_t i = 0; i < d_; ++i) v[i] = x.m[i] / p;
  std::copy(x.b.begin(), x.b.end(), v.begin() + static_cast<std::ptrdiff_t>(d_));
  v = x_.coset_reduce(std::move(v));
  for (std::size_t i = 0; i < d_; ++i) x.m[i] = x.m[i] % p + p * v[i];
  std::copy(v.begin() + static_cast<std::ptrdiff_t>(d_), v.end(), x.b.begin());
  return x;
}

EStarElement EStarGroup::identity() const {
  return {std::vector<std::uint32_t>(d_, 0), FVector(lie_->l2_dim(), 0)};
}

EStarElement EStarGroup::generator(std::size_t i) const {
  auto e = identity();
  e.m.at(i) = 1;
  return e;
}

EStarElement EStarGroup::make(std::vector<std::uint32_t> m, FVector b) const {
  require_length(m, d_, "V mod p^2");
  require_length(b, lie_->l2_dim(), "L2");
  for (auto& x : m) x %= p2_;
  for (auto& x : b) x %= field_.prime();
  return normalize({std::move(m), std::move(b)});
}

EStarElement EStarGroup::multiply(const Element& x, const Element& y) const {
  const std::uint32_t p = field_.prime();
  Element out{x.m, add(field_, x.b, y.b)};
  FVector xa(d_), ya(d_);
  for (std::size_t i = 0; i < d_; ++i) {
    out.m[i] = (x.m[i] + y.m[i]) % p2_;
    xa[i] = x.m[i] % p;
    ya[i] = y.m[i] % p;
  }
  out.b = add(field_, std::move(out.b), lie_->bracket_vv(xa, ya));
  return normalize(std::move(out));
}

EStarElement EStarGroup::inverse(const Element& x) const {
  Element out{x.m, negate(field_, x.b)};
  for (auto& v : out.m) v = (p2_ - v) % p2_;
  return normalize(std::move(out));
}

EStarElement EStarGroup::random(std::mt19937_64& rng) const {
  std::uniform_int_distribution<std::uint32_t> dist(0, p2_ - 1);
  std::vector<std::uint32_t> m(d_);
  for (auto& v : m) v = dist(rng);
  return make(std::move(m), random_vector(field_, lie_->l2_dim(), rng));
}

FVector EStarGroup::frattini_coords(const Element& x) const {
  const std::uint32_t p = field_.prime();
  FVector v(frattini_ambient());
  for (std::size_t i = 0; i < d_; ++i) {
    if (x.m[i] % p) throw std::invalid_argument("element is not in the Frattini subgroup");
    v[i] = x.m[i] / p;
  }
  std::copy(x.b.begin(), x.b.end(), v.begin() + static_cast<std::ptrdiff_t>(d_));
  return v;
}

EStarElement EStarGroup::from_frattini_coords(const FVector& v) const {
  require_length(v, frattini_ambient(), "Frattini coordinates");
  std::vector<std::uint32_t> m(d_);
  for (std::size_t i = 0; i < d_; ++i) m[i] = field_.prime() * (v[i] % field_.prime());
  return make(std::move(m), FVector(v.begin() + static_cast<std::ptrdiff_t>(d_), v.end()));
}

FMatrix EStarGroup::frattini_action(const FMatrix& g) const {
  const FMatrix w = exterior_square(g);
  FMatrix out(field_, frattini_ambient(), frattini_ambient());
  for (std::size_t r = 0; r < d_; ++r)
    for (std::size_t c = 0; c < d_; ++c) out(r, c) = g(r, c);
  for (std::size_t r = 0; r < w.rows(); ++r)
    for (std::size_t c = 0; c < w.cols(); ++c) out(d_ + r, d_ + c) = w(r, c);
  return out;
}

EStarElement EStarGroup::act(const FMatrix& g, const Element& x) const {
  const FMatrix h = frattini_action(g);
  for (std::size_t i = 0; i < x_.dim(); ++i)
    if (!x_.contains(vecmat(x_.basis_vector(i), h))) throw NotStabilized("matrix does not stabilize X");
  std::vector<std::uint32_t> m(d_, 0);
  for (std::size_t j = 0; j < d_; ++j) {
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < d_; ++i) acc += static_cast<std::uint64_t>(x.m[i]) * g(i, j);
    m[j] = static_cast<std::uint32_t>(acc % p2_);
  }
  return make(std::move(m), vecmat(x.b, exterior_square(g)));
}

// ---- structure ----

namespace {

template <class G>
std::size_t quotient_dim(const G& g, const std::vector<FVector>& vecs) {
  const Subspace k = g.frattini_kernel();
  return sum(k, Subspace::span(g.field(), g.frattini_ambient(), vecs)).dim() - k.dim();
}

// Frattini-coordinate spans: adds the coordinates of the elements to vecs.
template <class G>
void collect(const G& g, const std::vector<typename G::Element>& elems, std::vector<FVector>& vecs) {
  for (const auto& e : elems) vecs.push_back(g.frattini_coords(e));
}

template <class G>
StructureReport report_for(const G& g, const SamplingConfig& config) {
  const std::uint32_t p = g.field().prime();
  const std::size_t d = g.d();
  std::mt19937_64 rng(config.seed);
  std::vector<typename G::Element> gens;
  for (std::size_t i = 0; i < d; ++i) gens.push_back(g.generator(i));

  std::vector<typename G::Element> comm2, comm3, powers;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) comm2.push_back(commutator2(g, gens[i], gens[j]));
  for (const auto& c : comm2)
    for (const auto& x : gens) comm3.push_back(commutator2(g, c, x));
  bool exponent_p = true;
  for (const auto& x : gens) powers.push_back(power(g, x, p));
  for (std::size_t s = 0; s < config.samples; ++s) powers.push_back(power(g, g.random(rng), p));
  for (const auto& x : powers) exponent_p = exponent_p && g.is_identity(x);

  StructureReport r;
  r.kind = g.kind();
  r.d = d;
  r.p = p;
  r.order_exponent = g.order_exponent();

  std::vector<FVector> derived, gamma3, pw;
  collect(g, comm3, gamma3);
  collect(g, comm2, derived);
  derived.insert(derived.end(), gamma3.begin(), gamma3.end());
  collect(g, powers, pw);
  std::vector<FVector> frattini = derived;
  frattini.insert(frattini.end(), pw.begin(), pw.end());
  r.derived_dim = quotient_dim(g, derived);
  r.gamma3_dim = quotient_dim(g, gamma3);
  r.power_dim = quotient_dim(g, pw);
  r.frattini_dim = quotient_dim(g, frattini);
  r.rank = r.order_exponent - r.frattini_dim;

  if (exponent_p) {
    r.exponent = r.order_exponent == 0 ? 1 : p;
  } else {
    for (const auto& x : gens)
      if (!g.is_identity(power(g, x, static_cast<std::uint64_t>(p) * p)))
        throw std::logic_error("element of order larger than p^2");
    r.exponent = static_cast<std::uint64_t>(p) * p;
  }

  if (r.order_exponent == 0)
    r.nilpotency_class = 0;
  else if (r.derived_dim == 0)
    r.nilpotency_class = 1;
  else if (r.gamma3_dim == 0)
    r.nilpotency_class = 2;
  else
    r.nilpotency_class = 3;
  if (r.nilpotency_class == 3)
    for (const auto& c : comm3)
      for (const auto& x : gens)
        if (!g.is_identity(commutator2(g, c, x))) throw std::logic_error("class exceeds 3");

  // Lower exponent-p central series: P1 = G, P_{i+1} = [P_i, G] P_i^p.
  auto next_layer = [&](const std::vector<FVector>& layer) {
    const Subspace span = Subspace::span(g.field(), g.frattini_ambient(), layer);
    std::vector<FVector> out;
    for (std::size_t i = 0; i < span.dim(); ++i) {
      const auto e = g.from_frattini_coords(span.basis_vector(i));
      for (const auto& x : gens) out.push_back(g.frattini_coords(commutator2(g, e, x)));
      out.push_back(g.frattini_coords(power(g, e, p)));
    }
    return out;
  };
  if (r.order_exponent == 0) {
    r.exponent_p_class = 0;
  } else if (r.frattini_dim == 0) {
    r.exponent_p_class = 1;
  } else {
    int cls = 2;
    std::vector<FVector> layer = frattini;
    for (;;) {
      layer = next_layer(layer);
      if (quotient_dim(g, layer) == 0) break;
      if (++cls > 8) throw std::logic_error("exponent-p class did not stabilize");
    }
    r.exponent_p_class = cls;
  }
  return r;
}

}  // namespace

StructureReport structure_report(const QuotientPGroup& g, const SamplingConfig& config) {
  return std::visit([&](const auto& grp) { return report_for(grp, config); }, g);
}

std::uint32_t prime_of(const QuotientPGroup& g) {
  return std::visit([](const auto& grp) { return grp.field().prime(); }, g);
}

std::size_t rank_of(const QuotientPGroup& g) {
  return std::visit([](const auto& grp) { return grp.d(); }, g);
}

bool is_automorphism_sample(const FMatrix& g, const QuotientPGroup& group, std::size_t trials,
                            std::uint64_t seed) {
  return std::visit(
      [&](const auto& grp) {
        std::mt19937_64 rng(seed);
        grp.act(g, grp.identity());  // stabilizer precondition
        for (std::size_t t = 0; t < trials; ++t) {
          const auto x = grp.random(rng);
          const auto y = grp.random(rng);
          if (!(grp.act(g, grp.multiply(x, y)) == grp.multiply(grp.act(g, x), grp.act(g, y))))
            return false;
        }
        return true;
      },
      group);
}

}  // namespace liepow
