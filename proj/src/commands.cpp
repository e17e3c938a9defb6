#include "liepow/commands.hpp"

#include <cctype>
#include <fstream>
#include <memory>
#include <random>
#include <sstream>
#include <variant>

#include "liepow/cache.hpp"
#include "liepow/composition.hpp"
#include "liepow/mat_module.hpp"
#include "liepow/meataxe.hpp"
#include "liepow/optimal_g2.hpp"
#include "liepow/pgroup.hpp"
#include "liepow/weight_syntax.hpp"

namespace liepow {

namespace {

MeatAxeConfig meataxe_config(const RunConfig& config) {
  MeatAxeConfig m;
  m.seed = config.seed;
  m.retry_bound = config.retry_bound;
  return m;
}

SamplingConfig sampling_config(const RunConfig& config) { return {config.seed + 1, config.samples}; }

// Keeps the optional disk cache alive for the duration of a command.
struct CacheScope {
  std::unique_ptr<DiskCache> disk;
  FreudenthalCache hooks;

  explicit CacheScope(const RunConfig& config) {
    if (config.cache_dir.empty()) return;
    disk = std::make_unique<DiskCache>(config.cache_dir);
    hooks = disk->freudenthal_hooks();
  }
  const FreudenthalCache* get() const { return disk ? &hooks : nullptr; }
};

std::shared_ptr<const ModularTable> load_table(const std::string& path) {
  const std::string p = path.empty() ? bundled_modular_data() : path;
  try {
    return std::make_shared<const ModularTable>(ModularTable::load(p));
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
}

std::vector<std::string> factor_cells(const FactorEntry& f) {
  return {to_shorthand(f.lambda), to_string(f.lambda), std::to_string(f.dim), std::to_string(f.multiplicity)};
}

std::string dims_string(const std::vector<std::size_t>& dims) {
  std::string s;
  for (std::size_t i = 0; i < dims.size(); ++i) s += (i ? "," : "") + std::to_string(dims[i]);
  return s;
}

// Weyl-dimension check for every factor's Weyl module, by orbit expansion.
void check_weyl_totals(Report& report, const RootSystemPtr& rs, const CompositionFactors& factors,
                       const FreudenthalCache* cache, const std::string& prefix) {
  auto oracle = MultiplicityOracle::freudenthal(rs, cache);
  bool ok = true;
  std::string detail;
  for (const auto& e : factors.entries) {
    const auto total = oracle.weyl_module(e.lambda).size();
    if (BigInt(total) != weyl_dim(*rs, e.lambda)) {
      ok = false;
      detail += to_shorthand(e.lambda) + " ";
    }
  }
  report.check(prefix + "Freudenthal totals equal Weyl dimensions", ok, ok ? "" : "mismatch at " + detail);
}

}  // namespace

std::string bundled_modular_data() { return std::string(LIEPOW_DATA_DIR) + "/modular_decompositions.txt"; }

Report cmd_factors(const FactorsArgs& args, const RunConfig& config) {
  Report report;
  report.command = "factors";
  report.config = config;

  const char type = static_cast<char>(std::toupper(static_cast<unsigned char>(args.type)));
  RootSystemPtr rs;
  Weight lambda;
  try {
    rs = build_root_system(type, args.rank);
    lambda = parse_weight(args.weight, args.rank);
    require_rank(*rs, lambda);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  if (!lambda.is_dominant()) throw UsageError("module weight must be dominant");
  LiePower power;
  if (args.power == "a2") {
    power = LiePower::A2;
  } else if (args.power == "l3") {
    power = LiePower::L3;
  } else {
    throw UsageError("--power must be a2 or l3");
  }
  std::optional<std::uint32_t> prime;
  if (args.prime_mode != "generic") {
    if (args.prime_mode.rfind("p=", 0) != 0) throw UsageError("--prime-mode must be 'generic' or 'p=N'");
    try {
      prime = static_cast<std::uint32_t>(std::stoul(args.prime_mode.substr(2)));
    } catch (const std::exception&) {
      throw UsageError("bad prime in --prime-mode '" + args.prime_mode + "'");
    }
    if (!is_prime(*prime) || *prime == 2) throw UsageError("--prime-mode needs an odd prime");
  }

  CacheScope cache(config);
  std::shared_ptr<const ModularTable> table;
  if (prime) table = load_table(args.modular_data);
  auto oracle = prime ? MultiplicityOracle::modular(rs, *prime, table, cache.get())
                      : MultiplicityOracle::freudenthal(rs, cache.get());

  const auto target = lie_power_weights(oracle, lambda, power);
  const auto factors = peel(target, oracle, TieBreak::LexLargest);
  const auto reversed = peel(target, oracle, TieBreak::LexSmallest);

  report.parameters = {
      {"root system", rs->label()},
      {"module", "L(" + to_shorthand(lambda) + ") = " + to_string(lambda)},
      {"module dimension", std::to_string(oracle.irreducible_dim(lambda))},
      {"power", to_string(power)},
      {"prime", prime ? "p=" + std::to_string(*prime) : "generic"},
      {"oracle", oracle.describe()},
      {"modular data", prime ? (args.modular_data.empty() ? bundled_modular_data() : args.modular_data) : "-"},
      {"target dimension", std::to_string(target.size())},
      {"multiplicity free", factors.multiplicity_free() ? "yes" : "no"},
  };
  ReportTable t{"composition factors", {"factor", "coordinates", "dim", "multiplicity"}, {}};
  for (const auto& e : factors.entries) t.rows.push_back(factor_cells(e));
  report.tables.push_back(std::move(t));

  report.check("dimension sum equals target", factors.total_dim() == target.size(),
               std::to_string(factors.total_dim()) + " vs " + std::to_string(target.size()));
  report.check("tie-break independence", factors == reversed);
  check_weyl_totals(report, rs, factors, cache.get(), "");
  return report;
}

Report cmd_tables(const std::string& modular_data, const RunConfig& config) {
  Report report;
  report.command = "tables";
  report.config = config;
  report.parameters = {{"modular data", modular_data.empty() ? bundled_modular_data() : modular_data}};
  CacheScope cache(config);
  const auto table = load_table(modular_data);
  for (const auto& target : known_targets()) {
    const auto rows = table_suite(target, table, cache.get(), TieBreak::LexLargest);
    const auto reversed = table_suite(target, table, cache.get(), TieBreak::LexSmallest);
    const auto rs = build_root_system(target.type, target.rank);
    ReportTable t{target.id, {"prime", "factor", "coordinates", "dim", "multiplicity"}, {}};
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const auto& row = rows[i];
      const std::string name = target.id + " " + row.regime.label + ": ";
      if (!row.factors) {
        t.rows.push_back({row.regime.label, "-", "-", "-", "-"});
        report.check(name + "computed", false, row.diagnostic);
        continue;
      }
      for (const auto& e : row.factors->entries) {
        auto cells = factor_cells(e);
        cells.insert(cells.begin(), row.regime.label);
        t.rows.push_back(std::move(cells));
      }
      report.check(name + "tie-break independence", reversed[i].factors == row.factors);
      check_weyl_totals(report, rs, *row.factors, cache.get(), name);
    }
    report.tables.push_back(std::move(t));
  }
  return report;
}

Report cmd_module(const ModuleArgs& args, const RunConfig& config) {
  Report report;
  report.command = "module";
  report.config = config;
  if (args.gens.empty()) throw UsageError("--gens is required");
  if (args.task != "factors" && args.task != "lattice" && args.task != "forms")
    throw UsageError("--task must be factors, lattice or forms");
  if (args.on != "v" && args.on != "a2" && args.on != "l3") throw UsageError("--on must be v, a2 or l3");

  std::optional<MatModule> v;
  try {
    v = load_generators(args.gens);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  const auto mcfg = meataxe_config(config);
  if (args.expect_g2) {
    for (const auto& c : validate_g2_module(*v, mcfg)) report.check("G2 validation: " + c.name, c.passed, c.detail);
  }
  if (args.on == "l3" && v->field().prime() <= 3) throw UsageError("L^3 V needs p > 3");
  const MatModule m = args.on == "v" ? *v : args.on == "a2" ? exterior_square(*v) : lie3_module(*v);

  report.parameters = {
      {"generators", args.gens},
      {"p", std::to_string(m.field().prime())},
      {"module", args.on == "v" ? "V" : args.on == "a2" ? "A^2 V" : "L^3 V"},
      {"dimension", std::to_string(m.dim())},
      {"task", args.task},
  };

  if (args.task == "factors") {
    const auto cf = composition_factors_matrix(m, mcfg);
    ReportTable series{"composition series (bottom to top)", {"position", "dim", "class"}, {}};
    for (std::size_t i = 0; i < cf.factors.size(); ++i)
      series.rows.push_back({std::to_string(i + 1), std::to_string(cf.factors[i].module.dim()),
                             std::to_string(cf.factors[i].class_id)});
    ReportTable classes{"isomorphism classes", {"class", "dim", "multiplicity"}, {}};
    const auto mult = cf.class_multiplicities();
    for (std::size_t c = 0; c < cf.class_reps.size(); ++c)
      classes.rows.push_back({std::to_string(c), std::to_string(cf.class_reps[c].dim()), std::to_string(mult[c])});
    report.tables.push_back(std::move(series));
    report.tables.push_back(std::move(classes));
    std::size_t total = 0;
    for (auto d : cf.dims()) total += d;
    report.check("factor dimensions sum to module dimension", total == m.dim(),
                 std::to_string(total) + " vs " + std::to_string(m.dim()));
    bool irreducible = true;
    for (const auto& c : cf.class_reps) irreducible &= is_irreducible(c, mcfg).verdict == Verdict::Irreducible;
    report.check("class representatives irreducible", irreducible);
  } else if (args.task == "lattice") {
    const auto lattice = socle_and_lattice(m, mcfg);
    report.parameters.emplace_back("shape", to_string(lattice.shape));
    report.parameters.emplace_back("factor dimensions", dims_string(lattice.factors.dims()));
    ReportTable nodes{"submodules", {"node", "dim"}, {}};
    for (std::size_t i = 0; i < lattice.nodes.size(); ++i)
      nodes.rows.push_back({std::to_string(i), std::to_string(lattice.nodes[i].dim())});
    ReportTable edges{"covering relations", {"lower", "upper", "dims"}, {}};
    for (const auto& [lo, hi] : lattice.edges)
      edges.rows.push_back({std::to_string(lo), std::to_string(hi),
                            std::to_string(lattice.nodes[lo].dim()) + " < " + std::to_string(lattice.nodes[hi].dim())});
    report.tables.push_back(std::move(nodes));
    report.tables.push_back(std::move(edges));

    bool invariant = true;
    for (const auto& n : lattice.nodes) invariant &= is_invariant(m, n);
    report.check("every node is a submodule", invariant);
    report.check("lattice runs from 0 to the whole module",
                 !lattice.nodes.empty() && lattice.nodes.front().dim() == 0 && lattice.nodes.back().dim() == m.dim());
    bool covers = true;
    for (const auto& [lo, hi] : lattice.edges) {
      const auto q = quotient(submodule(m, lattice.nodes[hi]), [&] {
        // lower node in coordinates of the upper one
        std::vector<FVector> rows;
        for (std::size_t i = 0; i < lattice.nodes[lo].dim(); ++i)
          rows.push_back(lattice.nodes[hi].coordinates(lattice.nodes[lo].basis_vector(i)));
        return Subspace::span(m.field(), lattice.nodes[hi].dim(), rows);
      }());
      covers &= contains(lattice.nodes[hi], lattice.nodes[lo]) && is_irreducible(q, mcfg).verdict == Verdict::Irreducible;
    }
    report.check("covering relations have irreducible quotients", covers);
    if (args.expect_g2 && args.on == "a2") {
      std::mt19937_64 rng(config.seed);
      const auto top = quotient(m, lattice.largest_maximal());
      report.check("quotient by largest maximal submodule is isomorphic to V",
                   find_isomorphism(top, *v, rng, mcfg).has_value(),
                   "maximal submodule of dim " + std::to_string(lattice.largest_maximal().dim()));
    }
  } else {
    const auto forms = invariant_forms(m);
    std::string summary = std::to_string(forms.dim()) + "-dim";
    if (forms.dim() == 1)
      summary += ", " + to_string(forms.basis[0].kind) + ", " +
                 (forms.basis[0].nondegenerate ? "non-degenerate" : "degenerate");
    report.parameters.emplace_back("invariant forms", summary);
    ReportTable t{"invariant bilinear forms", {"form", "kind", "non-degenerate", "rank"}, {}};
    for (std::size_t i = 0; i < forms.basis.size(); ++i) {
      const auto& f = forms.basis[i];
      t.rows.push_back({std::to_string(i), to_string(f.kind), f.nondegenerate ? "yes" : "no",
                        std::to_string(rank(f.gram))});
    }
    report.tables.push_back(std::move(t));
    bool invariant = true;
    for (const auto& f : forms.basis)
      for (const auto& g : m.gens()) invariant &= g * f.gram * g.transpose() == f.gram;
    report.check("forms are invariant under every generator", invariant);
  }
  return report;
}

namespace {

std::size_t binom2(std::size_t d) { return d * (d - 1) / 2; }

template <class G>
void group_battery(const G& g, Report& report, const RunConfig& config) {
  std::mt19937_64 rng(config.seed + 2);
  const auto p = g.field().prime();

  bool assoc = true;
  for (std::size_t i = 0; i < config.triples; ++i) {
    const auto x = g.random(rng), y = g.random(rng), z = g.random(rng);
    assoc &= g.multiply(g.multiply(x, y), z) == g.multiply(x, g.multiply(y, z));
  }
  report.check("associativity on random triples", assoc, std::to_string(config.triples) + " triples");

  bool inv = true;
  for (std::size_t i = 0; i < config.samples; ++i) {
    const auto x = g.random(rng);
    inv &= g.is_identity(g.multiply(x, g.inverse(x))) && g.is_identity(g.multiply(g.inverse(x), x));
  }
  report.check("inverses", inv);

  if constexpr (std::is_same_v<G, EStarGroup>) {
    bool order = true;
    for (std::size_t i = 0; i < g.d(); ++i) {
      const auto x = g.generator(i);
      order &= !g.is_identity(power(g, x, p)) && g.is_identity(power(g, x, std::uint64_t(p) * p));
    }
    report.check("generators have order p^2", order);
  } else {
    bool exp = true;
    for (std::size_t i = 0; i < config.samples; ++i) exp &= g.is_identity(power(g, g.random(rng), p));
    report.check("x^p = 1 on random elements", exp);
  }

  const std::size_t d = g.d();
  const auto& lie = g.lie();
  const auto& f = g.field();
  auto unit = [&](std::size_t i) {
    FVector e(d, 0);
    e[i] = 1;
    return e;
  };
  auto scaled = [&](FVector v, Residue c) {
    for (auto& x : v) x = f.mul(x, c);
    return v;
  };
  if constexpr (std::is_same_v<G, Gamma2Group>) {
    bool ok = true;
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        ok &= commutator2(g, g.generator(i), g.generator(j)) ==
              g.make(FVector(d, 0), scaled(lie.bracket_vv(unit(i), unit(j)), 2));
    report.check("[x_i, x_j] = (0, 2[e_i, e_j]) on generators", ok);
  } else if constexpr (std::is_same_v<G, Gamma3Group>) {
    bool ok = true;
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        for (std::size_t k = 0; k < d; ++k)
          ok &= commutator3(g, g.generator(i), g.generator(j), g.generator(k)) ==
                g.make(FVector(d, 0), FVector(lie.l2_dim(), 0),
                       scaled(lie.bracket_vvv(unit(i), unit(j), unit(k)), 12));
    report.check("[x_i, x_j, x_k] = (0, 0, 12[e_i, e_j, e_k]) on generators", ok);
  }
}

// Normal-form count: log_p of the order predicted by the construction.
std::size_t predicted_order(const QuotientPGroup& group) {
  return std::visit(
      [](const auto& g) -> std::size_t {
        using G = std::decay_t<decltype(g)>;
        const std::size_t d = g.d(), k = g.kernel_subspace().dim();
        if constexpr (std::is_same_v<G, Gamma2Group>) return d + binom2(d) - k;
        if constexpr (std::is_same_v<G, Gamma3Group>) return d + binom2(d) + (d * d * d - d) / 3 - k;
        return 2 * d + binom2(d) - k;
      },
      group);
}

void structure_table(const StructureReport& s, Report& report) {
  ReportTable t{"structure", {"field", "value"}, {}};
  t.rows = {
      {"kind", s.kind},
      {"d", std::to_string(s.d)},
      {"p", std::to_string(s.p)},
      {"order", "p^" + std::to_string(s.order_exponent)},
      {"rank", std::to_string(s.rank)},
      {"exponent", std::to_string(s.exponent)},
      {"nilpotency class", std::to_string(s.nilpotency_class)},
      {"exponent-p class", std::to_string(s.exponent_p_class)},
      {"derived subgroup", "p^" + std::to_string(s.derived_dim)},
      {"gamma_3", "p^" + std::to_string(s.gamma3_dim)},
      {"Frattini subgroup", "p^" + std::to_string(s.frattini_dim)},
      {"p-th powers", "p^" + std::to_string(s.power_dim)},
  };
  report.tables.push_back(std::move(t));
}

}  // namespace

Subspace parse_subspace(std::istream& in, const std::string& source_name, const PrimeField& field,
                        std::size_t ambient) {
  std::stringstream clean;
  std::string line;
  while (std::getline(in, line)) clean << line.substr(0, line.find('#')) << '\n';
  std::size_t n = 0, k = 0;
  if (!(clean >> n >> k)) throw UsageError(source_name + ": expected 'ambient k' header");
  if (n != ambient)
    throw UsageError(source_name + ": ambient dimension " + std::to_string(n) + " but the construction needs " +
                     std::to_string(ambient));
  std::vector<FVector> rows(k, FVector(n));
  for (auto& row : rows)
    for (auto& x : row) {
      long long v;
      if (!(clean >> v)) throw UsageError(source_name + ": too few entries");
      x = field.reduce(v);
    }
  std::string extra;
  if (clean >> extra) throw UsageError(source_name + ": trailing data '" + extra + "'");
  return Subspace::span(field, n, rows);
}

Subspace load_subspace(const std::string& path, const PrimeField& field, std::size_t ambient) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open subspace file " + path);
  return parse_subspace(in, path, field, ambient);
}

Report cmd_pgroup(const PGroupArgs& args, const RunConfig& config) {
  Report report;
  report.command = "pgroup";
  report.config = config;
  if (!is_prime(args.p) || args.p == 2) throw UsageError("--p must be an odd prime");
  if (args.d < 2) throw UsageError("--d must be at least 2");
  const PrimeField field(args.p);
  const bool optimal = args.build.rfind("optimal-g2-", 0) == 0;
  report.parameters = {{"build", args.build}, {"d", std::to_string(args.d)}, {"p", std::to_string(args.p)}};

  std::optional<QuotientPGroup> group;
  std::optional<OptimalG2> built;
  std::optional<MatModule> v;
  if (optimal) {
    if (args.d != 7) throw UsageError("optimal-g2 builds need --d 7");
    if (!args.subspace.empty()) throw UsageError("--subspace does not apply to optimal-g2 builds");
    G2Variant variant;
    if (args.build == "optimal-g2-normalizer") {
      variant = G2Variant::Normalizer;
    } else if (args.build == "optimal-g2-self") {
      variant = G2Variant::GroupItself;
    } else {
      throw UsageError("unknown build '" + args.build + "'");
    }
    const std::string path = args.gens.empty() ? g2_generator_path(args.p) : args.gens;
    try {
      v = load_generators(path);
    } catch (const std::exception& e) {
      throw UsageError(e.what());
    }
    if (v->field().prime() != args.p) throw UsageError(path + " is over the wrong field");
    report.parameters.emplace_back("generators", path);
    const auto mcfg = meataxe_config(config);
    const auto checks = validate_g2_module(*v, mcfg);
    for (const auto& c : checks) report.check("G2 validation: " + c.name, c.passed, c.detail);
    if (!all_passed(checks)) return report;
    built = build_optimal_g2(*v, variant, mcfg);
    group = built->group;
    report.parameters.emplace_back("kernel subspace", "dim " + std::to_string(std::visit(
                                                          [](const auto& g) { return g.kernel_subspace().dim(); },
                                                          *group)));
  } else {
    if (!args.gens.empty()) throw UsageError("--gens only applies to optimal-g2 builds");
    if (args.build == "gamma3" && args.p <= 3) throw UsageError("gamma3 needs p > 3");
    const auto lie = LiePowerBasis::get(field, args.d);
    std::size_t ambient;
    if (args.build == "gamma2") {
      ambient = lie->l2_dim();
    } else if (args.build == "gamma3") {
      ambient = lie->l3_dim();
    } else if (args.build == "estar") {
      ambient = args.d + lie->l2_dim();
    } else {
      throw UsageError("unknown build '" + args.build + "'");
    }
    const Subspace kernel =
        args.subspace.empty() ? Subspace::zero(field, ambient) : load_subspace(args.subspace, field, ambient);
    report.parameters.emplace_back("kernel subspace",
                                   args.subspace.empty() ? "0" : args.subspace + " (dim " + std::to_string(kernel.dim()) + ")");
    if (args.build == "gamma2") {
      group = Gamma2Group(field, args.d, kernel);
    } else if (args.build == "gamma3") {
      group = Gamma3Group(field, args.d, kernel);
    } else {
      group = EStarGroup(field, args.d, kernel);
    }
  }

  const auto s = structure_report(*group, sampling_config(config));
  structure_table(s, report);
  report.check("order matches the normal-form count", s.order_exponent == predicted_order(*group),
               "p^" + std::to_string(predicted_order(*group)));
  report.check("|G| = |G/Phi| |Phi|", s.order_exponent == s.rank + s.frattini_dim);
  report.check("Frattini quotient has rank d", s.rank == args.d);
  std::visit([&](const auto& g) { group_battery(g, report, config); }, *group);
  std::visit(
      [&](const auto& g) {
        using G = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<G, EStarGroup>) {
          report.check("Frattini subgroup is V + L^2 V modulo X",
                       s.frattini_dim == args.d + g.lie().l2_dim() - g.kernel_subspace().dim());
          report.check("exponent-p class at most 2", s.exponent_p_class <= 2);
        } else {
          report.check("derived subgroup equals Frattini subgroup", s.derived_dim == s.frattini_dim);
          report.check("exponent p", s.exponent == args.p);
          if constexpr (std::is_same_v<G, Gamma3Group>)
            report.check("gamma_3 is L^3 V modulo W", s.gamma3_dim == g.lie().l3_dim() - g.kernel_subspace().dim());
          else
            report.check("class at most 2", s.nilpotency_class <= 2);
        }
      },
      *group);

  if (built) {
    bool autos = true;
    try {
      for (std::size_t i = 0; i < v->gens().size(); ++i)
        autos &= is_automorphism_sample(v->gens()[i], *group, config.samples, config.seed + 3 + i);
    } catch (const NotStabilized&) {
      autos = false;
    }
    report.check("G2 generators induce automorphisms", autos);
    if (const auto* e = std::get_if<EStarGroup>(&*group)) {
      bool none = true;
      for (Residue mu = 2; mu < args.p; ++mu)
        none &= !stabilizes(e->frattini_action(FMatrix::scalar(field, 7, mu)), built->graph, InducedAction::Natural);
      report.check("no scalar other than 0 and 1 stabilizes M", none);
    }
  }
  return report;
}

}  // namespace liepow
