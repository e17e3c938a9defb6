#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "liepow/lie_basis.hpp"
#include "liepow/linalg.hpp"
#include "liepow/subspace.hpp"

namespace liepow {

struct Gamma2Element {
  FVector a;  // V
  FVector b;  // L^2 V
  bool operator==(const Gamma2Element&) const = default;
};

struct Gamma3Element {
  FVector a;  // V
  FVector b;  // L^2 V
  FVector c;  // L^3 V
  bool operator==(const Gamma3Element&) const = default;
};

struct EStarElement {
  std::vector<std::uint32_t> m;  // residues mod p^2
  FVector b;                     // L^2 V over F_p
  bool operator==(const EStarElement&) const = default;
};

class NotStabilized : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// P_U: V x L^2 V with (a,b)(f,g) = (a+f, b+g+[a,f]), modulo 0 x U.
class Gamma2Group {
 public:
  using Element = Gamma2Element;

  Gamma2Group(PrimeField field, std::size_t d);
  Gamma2Group(PrimeField field, std::size_t d, Subspace u);

  const PrimeField& field() const { return field_; }
  std::size_t d() const { return d_; }
  const LiePowerBasis& lie() const { return *lie_; }
  const Subspace& kernel_subspace() const { return u_; }
  std::string kind() const { return "gamma2"; }
  // log_p of the order, from the number of normal forms.
  std::size_t order_exponent() const;

  Element identity() const;
  Element generator(std::size_t i) const;
  Element make(FVector a, FVector b) const;
  Element multiply(const Element& x, const Element& y) const;
  Element inverse(const Element& x) const;
  Element random(std::mt19937_64& rng) const;
  bool is_identity(const Element& x) const { return x == identity(); }

  // Elements of the Frattini subgroup {(0, b)} in coordinates b.
  std::size_t frattini_ambient() const { return lie_->l2_dim(); }
  const Subspace& frattini_kernel() const { return u_; }
  FVector frattini_coords(const Element& x) const;
  Element from_frattini_coords(const FVector& v) const;

  // (a g, b A^2(g)); throws NotStabilized if g does not stabilize U.
  Element act(const FMatrix& g, const Element& x) const;

 private:
  PrimeField field_;
  std::size_t d_;
  std::shared_ptr<const LiePowerBasis> lie_;
  Subspace u_;
};

// Q_W: V x L^2 V x L^3 V with the class-3 law, modulo 0 x 0 x W. Needs p > 3.
class Gamma3Group {
 public:
  using Element = Gamma3Element;

  Gamma3Group(PrimeField field, std::size_t d);
  Gamma3Group(PrimeField field, std::size_t d, Subspace w);

  const PrimeField& field() const { return field_; }
  std::size_t d() const { return d_; }
  const LiePowerBasis& lie() const { return *lie_; }
  const Subspace& kernel_subspace() const { return w_; }
  std::string kind() const { return "gamma3"; }
  std::size_t order_exponent() const;

  Element identity() const;
  Element generator(std::size_t i) const;
  Element make(FVector a, FVector b, FVector c) const;
  Element multiply(const Element& x, const Element& y) const;
  Element inverse(const Element& x) const;
  Element random(std::mt19937_64& rng) const;
  bool is_identity(const Element& x) const { return x == identity(); }

  // Frattini subgroup {(0, b, c)} in coordinates (b, c).
  std::size_t frattini_ambient() const { return lie_->l2_dim() + lie_->l3_dim(); }
  const Subspace& frattini_kernel() const { return frattini_kernel_; }
  FVector frattini_coords(const Element& x) const;
  Element from_frattini_coords(const FVector& v) const;

  Element act(const FMatrix& g, const Element& x) const;

 private:
  PrimeField field_;
  std::size_t d_;
  std::shared_ptr<const LiePowerBasis> lie_;
  Subspace w_;
  Subspace frattini_kernel_;
};

// E*/X with E* = {(m mod p^2, b)} and (m,b)(m',b') = (m+m', b+b'+[m mod p, m' mod p]).
// X is a subspace of F_p^d + L^2 V, identified with the Frattini subgroup by (p s, b) -> (s, b).
class EStarGroup {
 public:
  using Element = EStarElement;

  EStarGroup(PrimeField field, std::size_t d);
  EStarGroup(PrimeField field, std::size_t d, Subspace x);

  const PrimeField& field() const { return field_; }
  std::size_t d() const { return d_; }
  const LiePowerBasis& lie() const { return *lie_; }
  const Subspace& kernel_subspace() const { return x_; }
  std::string kind() const { return "estar"; }
  std::size_t order_exponent() const;

  Element identity() const;
  Element generator(std::size_t i) const;
  Element make(std::vector<std::uint32_t> m, FVector b) const;
  Element multiply(const Element& x, const Element& y) const;
  Element inverse(const Element& x) const;
  Element random(std::mt19937_64& rng) const;
  bool is_identity(const Element& x) const { return x == identity(); }

  std::size_t frattini_ambient() const { return d_ + lie_->l2_dim(); }
  const Subspace& frattini_kernel() const { return x_; }
  FVector frattini_coords(const Element& x) const;
  Element from_frattini_coords(const FVector& v) const;

  // Action of g on the Frattini coordinates: g on the first summand, A^2(g) on the second.
  FMatrix frattini_action(const FMatrix& g) const;
  // (m g~, b A^2(g)) with g~ the lift of g to entries in [0, p); throws NotStabilized.
  Element act(const FMatrix& g, const Element& x) const;

 private:
  Element normalize(Element x) const;

  PrimeField field_;
  std::size_t d_;
  std::uint32_t p2_;
  std::shared_ptr<const LiePowerBasis> lie_;
  Subspace x_;
};

using QuotientPGroup = std::variant<Gamma2Group, Gamma3Group, EStarGroup>;

template <class G>
typename G::Element power(const G& g, typename G::Element x, std::uint64_t k) {
  auto result = g.identity();
  while (k) {
    if (k & 1) result = g.multiply(result, x);
    x = g.multiply(x, x);
    k >>= 1;
  }
  return result;
}

// x^-1 y^-1 x y.
template <class G>
typename G::Element commutator2(const G& g, const typename G::Element& x,
                                const typename G::Element& y) {
  return g.multiply(g.multiply(g.inverse(x), g.inverse(y)), g.multiply(x, y));
}

template <class G>
typename G::Element commutator3(const G& g, const typename G::Element& x,
                                const typename G::Element& y, const typename G::Element& z) {
  return commutator2(g, commutator2(g, x, y), z);
}

struct StructureReport {
  std::string kind;
  std::size_t d = 0;
  std::uint32_t p = 0;
  std::size_t order_exponent = 0;  // |G| = p^order_exponent
  std::size_t rank = 0;            // dimension of the Frattini quotient
  std::uint64_t exponent = 0;
  int nilpotency_class = 0;
  int exponent_p_class = 0;
  std::size_t derived_dim = 0;  // log_p |G'|
  std::size_t gamma3_dim = 0;   // log_p |gamma_3(G)|
  std::size_t frattini_dim = 0;
  std::size_t power_dim = 0;  // log_p |G^p|
  bool operator==(const StructureReport&) const = default;
};

struct SamplingConfig {
  std::uint64_t seed = 0x5eed'0002;
  std::size_t samples = 100;
};

StructureReport structure_report(const QuotientPGroup& g, const SamplingConfig& config = {});
std::uint32_t prime_of(const QuotientPGroup& g);
std::size_t rank_of(const QuotientPGroup& g);

// Checks (xy)^g = x^g y^g on random pairs; throws NotStabilized first if g
// does not stabilize the kernel subspace.
bool is_automorphism_sample(const FMatrix& g, const QuotientPGroup& group, std::size_t trials,
                            std::uint64_t seed);

}  // namespace liepow
