#include "liepow/mat_module.hpp"

#include <fstream>
#include <sstream>
#include <algorithm>
#include <stdexcept>

#include "liepow/lie_basis.hpp"

namespace liepow {

MatModule::MatModule(PrimeField field, std::size_t dim, std::vector<FMatrix> gens, std::string label)
    : field_(field), dim_(dim), gens_(std::move(gens)), label_(std::move(label)) {
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    const auto& g = gens_[i];
    if (!(g.field() == field_) || g.rows() != dim_ || g.cols() != dim_)
      throw std::invalid_argument("generator " + std::to_string(i + 1) + " is not a " +
                                  std::to_string(dim_) + "x" + std::to_string(dim_) +
                                  " matrix over F_" + std::to_string(field_.prime()));
    if (dim_ > 0 && determinant(g) == 0)
      throw std::invalid_argument("generator " + std::to_string(i + 1) + " is singular");
  }
}

MatModule MatModule::transposed() const {
  std::vector<FMatrix> t;
  for (const auto& g : gens_) t.push_back(g.transpose());
  return MatModule(field_, dim_, std::move(t), label_ + "^T");
}

MatModule parse_generators(std::istream& in, const std::string& source_name) {
  auto fail = [&](const std::string& why) -> void {
    throw std::runtime_error(source_name + ": " + why);
  };
  long long d = 0, p = 0, n = 0;
  if (!(in >> d >> p >> n)) fail("expected header 'd p ngens'");
  if (d <= 0 || n < 0) fail("dimension must be positive and generator count nonnegative");
  if (p < 3 || !is_prime(static_cast<std::uint64_t>(p))) fail("p must be an odd prime");
  PrimeField f(static_cast<std::uint32_t>(p));
  std::vector<FMatrix> gens;
  for (long long k = 0; k < n; ++k) {
    FMatrix g(f, static_cast<std::size_t>(d), static_cast<std::size_t>(d));
    for (long long r = 0; r < d; ++r)
      for (long long c = 0; c < d; ++c) {
        long long x;
        if (!(in >> x))
          fail("generator " + std::to_string(k + 1) + " is truncated at row " + std::to_string(r + 1));
        if (x < 0 || x >= p)
          fail("entry " + std::to_string(x) + " of generator " + std::to_string(k + 1) +
               " is not a residue mod " + std::to_string(p));
        g(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) = static_cast<Residue>(x);
      }
    gens.push_back(std::move(g));
  }
  std::string extra;
  if (in >> extra) fail("trailing data after the last generator");
  try {
    return MatModule(f, static_cast<std::size_t>(d), std::move(gens), source_name);
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(source_name + ": " + e.what());
  }
}

MatModule load_generators(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open generator file " + path);
  return parse_generators(in, path);
}

void write_generators(std::ostream& out, const MatModule& m) {
  out << m.dim() << ' ' << m.field().prime() << ' ' << m.gens().size() << '\n';
  for (const auto& g : m.gens()) {
    for (std::size_t r = 0; r < g.rows(); ++r) {
      for (std::size_t c = 0; c < g.cols(); ++c) out << (c ? " " : "") << g(r, c);
      out << '\n';
    }
  }
}

std::size_t wedge_index(std::size_t d, std::size_t i, std::size_t j) {
  // Pairs (0,1),(0,2),...,(0,d-1),(1,2),...
  return i * (2 * d - i - 1) / 2 + (j - i - 1);
}

FMatrix exterior_square(const FMatrix& g) {
  const auto& f = g.field();
  const std::size_t d = g.rows();
  const std::size_t n = d * (d - 1) / 2;
  FMatrix out(f, n, n);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      const std::size_t row = wedge_index(d, i, j);
      for (std::size_t k = 0; k < d; ++k)
        for (std::size_t l = k + 1; l < d; ++l)
          out(row, wedge_index(d, k, l)) =
              f.sub(f.mul(g(i, k), g(j, l)), f.mul(g(i, l), g(j, k)));
    }
  return out;
}

MatModule exterior_square(const MatModule& m) {
  std::vector<FMatrix> gens;
  for (const auto& g : m.gens()) gens.push_back(exterior_square(g));
  return MatModule(m.field(), m.dim() * (m.dim() - 1) / 2, std::move(gens), "A2(" + m.label() + ")");
}

MatModule tensor_module(const MatModule& m, const MatModule& n) {
  if (m.gens().size() != n.gens().size())
    throw std::invalid_argument("tensor product needs matching generator lists");
  std::vector<FMatrix> gens;
  for (std::size_t i = 0; i < m.gens().size(); ++i) gens.push_back(kronecker(m.gens()[i], n.gens()[i]));
  return MatModule(m.field(), m.dim() * n.dim(), std::move(gens),
                   m.label() + " (x) " + n.label());
}

MatModule direct_sum(const MatModule& m, const MatModule& n) {
  if (m.gens().size() != n.gens().size())
    throw std::invalid_argument("direct sum needs matching generator lists");
  const std::size_t d = m.dim() + n.dim();
  std::vector<FMatrix> gens;
  for (std::size_t i = 0; i < m.gens().size(); ++i) {
    FMatrix g(m.field(), d, d);
    for (std::size_t r = 0; r < m.dim(); ++r)
      for (std::size_t c = 0; c < m.dim(); ++c) g(r, c) = m.gens()[i](r, c);
    for (std::size_t r = 0; r < n.dim(); ++r)
      for (std::size_t c = 0; c < n.dim(); ++c) g(m.dim() + r, m.dim() + c) = n.gens()[i](r, c);
    gens.push_back(std::move(g));
  }
  return MatModule(m.field(), d, std::move(gens), m.label() + " + " + n.label());
}

MatModule dual(const MatModule& m) {
  std::vector<FMatrix> gens;
  for (const auto& g : m.gens()) gens.push_back(inverse(g)->transpose());
  return MatModule(m.field(), m.dim(), std::move(gens), m.label() + "*");
}

Subspace a3_submodule(PrimeField field, std::size_t d) {
  const std::size_t n2 = d * (d - 1) / 2;
  const std::size_t amb = n2 * d;
  std::vector<FVector> vecs;
  const Residue minus_one = field.neg(1);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      for (std::size_t k = j + 1; k < d; ++k) {
        FVector v(amb, 0);
        v[wedge_index(d, i, j) * d + k] = 1;
        v[wedge_index(d, j, k) * d + i] = 1;
        v[wedge_index(d, i, k) * d + j] = minus_one;
        vecs.push_back(std::move(v));
      }
  return Subspace::span(field, amb, vecs);
}

bool is_invariant(const MatModule& m, const Subspace& s) {
  for (const auto& g : m.gens())
    for (std::size_t i = 0; i < s.dim(); ++i)
      if (!s.contains(vecmat(s.basis_vector(i), g))) return false;
  return true;
}

MatModule submodule(const MatModule& m, const Subspace& s) {
  if (s.ambient_dim() != m.dim()) throw std::invalid_argument("subspace ambient mismatch");
  std::vector<FMatrix> gens;
  for (const auto& g : m.gens()) {
    FMatrix r(m.field(), s.dim(), s.dim());
    for (std::size_t i = 0; i < s.dim(); ++i) {
      auto img = vecmat(s.basis_vector(i), g);
      if (!s.contains(img)) throw std::invalid_argument("subspace is not invariant");
      const auto c = s.coordinates(img);
      std::ranges::copy(c, r.row(i).begin());
    }
    gens.push_back(std::move(r));
  }
  return MatModule(m.field(), s.dim(), std::move(gens), "sub(" + m.label() + ")");
}

MatModule quotient(const MatModule& m, const Subspace& s) {
  if (s.ambient_dim() != m.dim()) throw std::invalid_argument("subspace ambient mismatch");
  const auto free = s.non_pivots();
  std::vector<FMatrix> gens;
  for (const auto& g : m.gens()) {
    FMatrix q(m.field(), free.size(), free.size());
    for (std::size_t a = 0; a < free.size(); ++a) {
      auto img = s.coset_reduce(g.row_vector(free[a]));
      for (std::size_t b = 0; b < free.size(); ++b) q(a, b) = img[free[b]];
    }
    gens.push_back(std::move(q));
  }
  return MatModule(m.field(), free.size(), std::move(gens), "quot(" + m.label() + ")");
}

FVector lift_from_quotient(const Subspace& s, const FVector& q) {
  const auto free = s.non_pivots();
  if (q.size() != free.size()) throw std::invalid_argument("quotient vector length mismatch");
  FVector v(s.ambient_dim(), 0);
  for (std::size_t a = 0; a < free.size(); ++a) v[free[a]] = q[a];
  return v;
}

MatModule lie3_module(const MatModule& m) {
  if (m.field().prime() <= 3) throw std::invalid_argument("third Lie power module needs p > 3");
  const MatModule t = tensor_module(exterior_square(m), m);
  const Subspace a3 = a3_submodule(m.field(), m.dim());
  if (!is_invariant(t, a3)) throw std::logic_error("A^3 V is not invariant in A^2 V (x) V");
  MatModule q = quotient(t, a3);
  return MatModule(q.field(), q.dim(), q.gens(), "L3(" + m.label() + ")");
}

Subspace spin(const MatModule& m, const std::vector<FVector>& seeds) {
  const auto& f = m.field();
  // Semi-echelon basis: each new row is reduced against all earlier rows.
  std::vector<FVector> rows;
  std::vector<std::size_t> pivots;
  auto reduce = [&](FVector v) {
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (v[pivots[i]]) axpy(f, v, f.neg(v[pivots[i]]), rows[i]);
    return v;
  };
  auto insert = [&](FVector v) {
    v = reduce(std::move(v));
    std::size_t piv = 0;
    while (piv < v.size() && v[piv] == 0) ++piv;
    if (piv == v.size()) return false;
    const Residue s = f.inv(v[piv]);
    for (auto& x : v) x = f.mul(x, s);
    rows.push_back(std::move(v));
    pivots.push_back(piv);
    return true;
  };
  for (const auto& s : seeds) {
    if (s.size() != m.dim()) throw std::invalid_argument("seed length mismatch");
    insert(s);
  }
  for (std::size_t next = 0; next < rows.size() && rows.size() < m.dim(); ++next)
    for (const auto& g : m.gens()) {
      insert(vecmat(rows[next], g));
      if (rows.size() == m.dim()) break;
    }
  return Subspace::span(f, m.dim(), rows);
}

FMatrix induced_matrix(const FMatrix& g, InducedAction action) {
  switch (action) {
    case InducedAction::Natural:
      return g;
    case InducedAction::ExteriorSquare:
      return exterior_square(g);
    case InducedAction::Lie3:
      return LiePowerBasis::get(g.field(), g.rows())->lie3_action(g);
  }
  throw std::logic_error("unknown action");
}

bool stabilizes(const FMatrix& g, const Subspace& s, InducedAction action) {
  const FMatrix h = induced_matrix(g, action);
  if (h.rows() != s.ambient_dim()) throw std::invalid_argument("subspace/action dimension mismatch");
  for (std::size_t i = 0; i < s.dim(); ++i)
    if (!s.contains(vecmat(s.basis_vector(i), h))) return false;
  return true;
}

InvariantForms invariant_forms(const MatModule& m) {
  const auto& f = m.field();
  const std::size_t d = m.dim();
  // Unknown B_kl at index k*d+l; equation (g, i, j): sum g_ik B_kl g_jl - B_ij = 0.
  FMatrix eqs(f, d * d, d * d * m.gens().size());
  for (std::size_t t = 0; t < m.gens().size(); ++t) {
    const auto& g = m.gens()[t];
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        const std::size_t col = t * d * d + i * d + j;
        for (std::size_t k = 0; k < d; ++k) {
          if (g(i, k) == 0) continue;
          for (std::size_t l = 0; l < d; ++l)
            eqs(k * d + l, col) = f.add(eqs(k * d + l, col), f.mul(g(i, k), g(j, l)));
        }
        eqs(i * d + j, col) = f.sub(eqs(i * d + j, col), 1);
      }
  }
  const Subspace sol = kernel(eqs);
  // The solution space is closed under transpose, so it splits into symmetric and alternating parts.
  std::vector<FVector> sym, alt;
  for (std::size_t b = 0; b < sol.dim(); ++b) {
    FVector s(d * d), a(d * d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        const Residue x = sol.basis()(b, i * d + j), y = sol.basis()(b, j * d + i);
        s[i * d + j] = f.add(x, y);
        a[i * d + j] = f.sub(x, y);
      }
    sym.push_back(std::move(s));
    alt.push_back(std::move(a));
  }
  InvariantForms out;
  for (auto [vecs, kind] : {std::pair{&sym, FormKind::Symmetric}, std::pair{&alt, FormKind::Alternating}}) {
    const Subspace part = Subspace::span(f, d * d, *vecs);
    for (std::size_t b = 0; b < part.dim(); ++b) {
      FMatrix gram(f, d, d);
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) gram(i, j) = part.basis()(b, i * d + j);
      const bool nondeg = determinant(gram) != 0;
      out.basis.push_back({std::move(gram), kind, nondeg});
    }
  }
  return out;
}

std::string to_string(FormKind kind) {
  switch (kind) {
    case FormKind::Symmetric:
      return "symmetric";
    case FormKind::Alternating:
      return "alternating";
  }
  return "?";
}

}  // namespace liepow
