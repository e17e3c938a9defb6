#include <algorithm>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "liepow/composition.hpp"
#include "liepow/prime_field.hpp"
#include "liepow/weight_syntax.hpp"

namespace liepow {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(trim(item));
  return out;
}

}  // namespace

ModularTable ModularTable::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open modular data file " + path);
  return parse(in, path);
}

ModularTable ModularTable::parse(std::istream& in, const std::string& source_name) {
  ModularTable table;
  std::map<Key, RootSystemPtr> systems;
  std::string line;
  std::size_t lineno = 0;
  auto fail = [&](const std::string& why) {
    throw std::runtime_error(source_name + ":" + std::to_string(lineno) + ": " + why);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;

    const auto colon = line.find(':');
    const auto arrow = line.find("->");
    if (colon == std::string::npos || arrow == std::string::npos || arrow < colon)
      fail("expected 'TYPE RANK p : weight -> factors'");
    std::istringstream head(line.substr(0, colon));
    std::string type;
    std::size_t rank = 0;
    std::uint32_t p = 0;
    if (!(head >> type >> rank >> p) || type.size() != 1) fail("bad header");
    std::string extra;
    if (head >> extra) fail("trailing text in header");
    if (!is_prime(p) || p < 3) fail("p must be an odd prime");

    const Key key{type[0], rank, p};
    RootSystemPtr rs;
    try {
      rs = systems.contains(key) ? systems[key] : (systems[key] = build_root_system(type[0], rank));
    } catch (const std::invalid_argument& e) {
      fail(e.what());
    }

    Weight lambda;
    Factors factors;
    try {
      lambda = parse_weight(line.substr(colon + 1, arrow - colon - 1), rank);
      for (const auto& item : split(line.substr(arrow + 2), ';')) {
        if (item.empty()) continue;
        const auto star = item.find('*');
        if (star == std::string::npos) fail("factor '" + item + "' lacks '* multiplicity'");
        Weight mu = parse_weight(item.substr(0, star), rank);
        const std::string m = trim(item.substr(star + 1));
        std::size_t used = 0;
        const unsigned long mult = std::stoul(m, &used);
        if (used != m.size() || mult == 0) fail("bad multiplicity '" + m + "'");
        factors.emplace_back(std::move(mu), mult);
      }
    } catch (const std::invalid_argument& e) {
      fail(e.what());
    }

    if (!lambda.is_dominant()) fail("highest weight " + to_string(lambda) + " is not dominant");
    bool has_top = false;
    std::set<Weight> distinct;
    for (const auto& [mu, mult] : factors) {
      if (!distinct.insert(mu).second) fail("factor " + to_string(mu) + " listed twice");
      if (!mu.is_dominant()) fail("factor " + to_string(mu) + " is not dominant");
      if (mu == lambda) {
        if (mult != 1) fail("the top factor must have multiplicity 1");
        has_top = true;
      } else if (!dominance_leq(*rs, mu, lambda)) {
        fail("factor " + to_string(mu) + " is not below " + to_string(lambda));
      }
    }
    if (!has_top) fail("row for " + to_string(lambda) + " does not contain L(lambda) itself");
    auto& group = table.rows_[key];
    if (group.contains(lambda)) fail("duplicate row for " + to_string(lambda));
    std::sort(factors.begin(), factors.end());
    group.emplace(lambda, std::move(factors));
  }

  // Every co-factor needs its own row; irreducible dimensions must come out positive.
  for (const auto& [key, group] : table.rows_) {
    const auto& rs = systems.at(key);
    std::map<Weight, BigInt> dims;
    std::function<BigInt(const Weight&)> dim_of = [&](const Weight& lambda) -> BigInt {
      if (auto it = dims.find(lambda); it != dims.end()) return it->second;
      BigInt d = weyl_dim(*rs, lambda);
      for (const auto& [mu, mult] : group.at(lambda))
        if (mu != lambda) d -= BigInt(mult) * dim_of(mu);
      return dims[lambda] = d;
    };
    for (const auto& [lambda, factors] : group) {
      for (const auto& [mu, mult] : factors)
        if (!group.contains(mu))
          throw std::runtime_error(source_name + ": " + rs->label() + " p=" +
                                   std::to_string(std::get<2>(key)) + ": factor " + to_string(mu) +
                                   " of " + to_string(lambda) + " has no row of its own");
    }
    for (const auto& [lambda, factors] : group) {
      const BigInt d = dim_of(lambda);
      if (d < 1)
        throw std::runtime_error(source_name + ": " + rs->label() + " p=" +
                                 std::to_string(std::get<2>(key)) + ": row for " +
                                 to_string(lambda) + " leaves dim L = " + d.str() +
                                 ", factor dimensions exceed the Weyl module");
    }
  }
  return table;
}

const ModularTable::Factors* ModularTable::row(char type, std::size_t rank, std::uint32_t p,
                                               const Weight& lambda) const {
  auto it = rows_.find({type, rank, p});
  if (it == rows_.end()) return nullptr;
  auto jt = it->second.find(lambda);
  return jt == it->second.end() ? nullptr : &jt->second;
}

bool ModularTable::covers(char type, std::size_t rank, std::uint32_t p) const {
  return rows_.contains({type, rank, p});
}

std::size_t ModularTable::row_count() const {
  std::size_t n = 0;
  for (const auto& [key, group] : rows_) n += group.size();
  return n;
}

}  // namespace liepow
