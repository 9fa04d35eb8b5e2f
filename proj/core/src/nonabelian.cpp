// Copyright 2026 The trifourier Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
#include "trifourier/nonabelian.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <stdexcept>
#include <utility>

namespace trifourier {
namespace {

using Recipe = std::function<CycNum(const Permutation&)>;

struct SymmetricTable {
  std::vector<std::vector<int>> classes;
  std::vector<std::pair<std::string, std::vector<int>>> characters;
};

// Character tables of S_n indexed by cycle type.
const SymmetricTable& symmetric_table(int n) {
  static const std::map<int, SymmetricTable> tables = {
      {2, {{{1, 1}, {2}}, {{"1", {1, 1}}, {"eps", {1, -1}}}}},
      {3, {{{1, 1, 1}, {2, 1}, {3}}, {{"1", {1, 1, 1}}, {"r", {2, 0, -1}}, {"eps", {1, -1, 1}}}}},
      {4,
       {{{1, 1, 1, 1}, {2, 1, 1}, {2, 2}, {3, 1}, {4}},
        {{"1", {1, 1, 1, 1, 1}},
         {"lambda^1", {3, 1, -1, 0, -1}},
         {"sigma", {2, 0, 2, -1, 0}},
         {"lambda^2", {3, -1, -1, 0, 1}},
         {"lambda^3", {1, -1, 1, 1, -1}}}}},
      {5,
       {{{1, 1, 1, 1, 1}, {2, 1, 1, 1}, {2, 2, 1}, {3, 1, 1}, {3, 2}, {4, 1}, {5}},
        {{"1", {1, 1, 1, 1, 1, 1, 1}},
         {"lambda^1", {4, 2, 0, 1, -1, 0, -1}},
         {"nu", {5, 1, 1, -1, 1, -1, 0}},
         {"nu'", {5, -1, 1, -1, -1, 1, 0}},
         {"lambda^2", {6, 0, -2, 0, 0, 0, 1}},
         {"lambda^3", {4, -2, 0, 1, 1, 0, -1}},
         {"lambda^4", {1, -1, 1, 1, -1, -1, 1}}}}},
  };
  return tables.at(n);
}

int symmetric_value(int n, const std::string& label, const std::vector<int>& cycle_type) {
  const SymmetricTable& table = symmetric_table(n);
  const auto cls = std::find(table.classes.begin(), table.classes.end(), cycle_type);
  for (const auto& [name, row] : table.characters) {
    if (name == label) return row[static_cast<std::size_t>(cls - table.classes.begin())];
  }
  throw std::logic_error("no character " + label + " of S" + std::to_string(n));
}

// Cycle type of g on a g-stable set of points.
std::vector<int> cycle_type_on(const Permutation& g, const std::vector<int>& points) {
  std::vector<int> out;
  std::vector<int> seen;
  for (int p : points) {
    if (std::find(seen.begin(), seen.end(), p) != seen.end()) continue;
    int length = 0;
    for (int q = p; std::find(seen.begin(), seen.end(), q) == seen.end(); q = g(q)) {
      seen.push_back(q);
      ++length;
    }
    out.push_back(length);
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

int sign_on(const Permutation& g, const std::vector<int>& points) {
  int transpositions = 0;
  for (int length : cycle_type_on(g, points)) transpositions += length - 1;
  return transpositions % 2 == 0 ? 1 : -1;
}

// Least k with x^k = g on the given points.
int power_index(const Permutation& x, const Permutation& g, const std::vector<int>& points) {
  Permutation power(x.points());
  for (int k = 0; k < 60; ++k) {
    if (std::all_of(points.begin(), points.end(), [&](int p) { return power(p) == g(p); })) return k;
    power = x * power;
  }
  throw std::logic_error(g.to_string() + " is not a power of " + x.to_string());
}

CycNum power(const CycNum& base, int k) {
  CycNum out(1);
  for (int j = 0; j < k; ++j) out *= base;
  return out;
}

// Value at the generator for the labels used on cyclic centralizers.
CycNum generator_value(const std::string& label) {
  static const std::map<std::string, CycNum> values = {
      {"1", CycNum(1)},
      {"eps", CycNum(-1)},
      {"-1", CycNum(-1)},
      {"theta", CycNum::theta()},
      {"theta^2", power(CycNum::theta(), 2)},
      {"-theta", -CycNum::theta()},
      {"-theta^2", -power(CycNum::theta(), 2)},
      {"i", CycNum::i()},
      {"-i", -CycNum::i()},
      {"zeta", CycNum::zeta5()},
      {"zeta^2", power(CycNum::zeta5(), 2)},
      {"zeta^3", power(CycNum::zeta5(), 3)},
      {"zeta^4", power(CycNum::zeta5(), 4)},
  };
  return values.at(label);
}

std::vector<int> all_points(int n) {
  std::vector<int> out;
  for (int p = 1; p <= n; ++p) out.push_back(p);
  return out;
}

CharacterTable make_table(const PermutationGroup& group, std::string element, const Permutation& x,
                          const std::vector<std::pair<std::string, Recipe>>& characters) {
  CharacterTable table{std::move(element), x, group.centralizer(x), {}, {}};
  const auto classes = table.centralizer.conjugacy_classes();
  for (const auto& [label, recipe] : characters) {
    table.labels.push_back(label);
    std::vector<CycNum> row;
    for (const auto& cls : classes) row.push_back(recipe(cls.front()));
    table.values.push_back(std::move(row));
  }
  return table;
}

CharacterTable identity_table(const PermutationGroup& group) {
  const int n = group.points();
  std::vector<std::pair<std::string, Recipe>> characters;
  for (const auto& [label, row] : symmetric_table(n).characters) {
    characters.emplace_back(label, [n, label = label](const Permutation& g) {
      return CycNum(symmetric_value(n, label, g.cycle_type()));
    });
  }
  return make_table(group, "1", Permutation(n), characters);
}

CharacterTable cyclic_table(const PermutationGroup& group, std::string element, const Permutation& x,
                            const std::vector<std::string>& labels) {
  const std::vector<int> points = all_points(x.points());
  std::vector<std::pair<std::string, Recipe>> characters;
  for (const std::string& label : labels) {
    const CycNum v = generator_value(label);
    characters.emplace_back(label, [x, v, points](const Permutation& g) { return power(v, power_index(x, g, points)); });
  }
  return make_table(group, std::move(element), x, characters);
}

// Z((12)(34)), dihedral of order 8 acting on {1,2,3,4}.
CharacterTable dihedral_table(const PermutationGroup& group, const Permutation& x) {
  const std::vector<int> block{1, 2, 3, 4};
  const auto eps = [block](const Permutation& g) { return sign_on(g, block); };
  const auto eps1 = [](const Permutation& g) { return (g(1) == 1 || g(1) == 2) ? 1 : -1; };
  std::vector<std::pair<std::string, Recipe>> characters = {
      {"1", [](const Permutation&) { return CycNum(1); }},
      {"eps", [eps](const Permutation& g) { return CycNum(eps(g)); }},
      {"eps'", [eps1](const Permutation& g) { return CycNum(eps1(g)); }},
      {"eps''", [eps, eps1](const Permutation& g) { return CycNum(eps(g) * eps1(g)); }},
      {"r",
       [x, block](const Permutation& g) {
         const bool one = std::all_of(block.begin(), block.end(), [&](int p) { return g(p) == p; });
         const bool central = std::all_of(block.begin(), block.end(), [&](int p) { return g(p) == x(p); });
         return CycNum(one ? 2 : central ? -2 : 0);
       }},
  };
  return make_table(group, "g2'", x, characters);
}

// Z((12)) in S4 = <(12)> x <(34)>.
CharacterTable klein_table(const PermutationGroup& group, const Permutation& x) {
  const auto a = [](const Permutation& g) { return sign_on(g, {1, 2}); };
  const auto b = [](const Permutation& g) { return sign_on(g, {3, 4}); };
  std::vector<std::pair<std::string, Recipe>> characters = {
      {"1", [](const Permutation&) { return CycNum(1); }},
      {"eps", [a, b](const Permutation& g) { return CycNum(a(g) * b(g)); }},
      {"eps'", [a](const Permutation& g) { return CycNum(a(g)); }},
      {"eps''", [b](const Permutation& g) { return CycNum(b(g)); }},
  };
  return make_table(group, "g2", x, characters);
}

// Z((12)) in S5 = <(12)> x S{3,4,5}; "-" marks the sign of <(12)>.
CharacterTable s5_transposition_table(const PermutationGroup& group, const Permutation& x) {
  const std::vector<int> rest{3, 4, 5};
  const auto s = [](const Permutation& g) { return sign_on(g, {1, 2}); };
  const auto chi = [rest](const std::string& label) {
    return [rest, label](const Permutation& g) { return symmetric_value(3, label, cycle_type_on(g, rest)); };
  };
  std::vector<std::pair<std::string, Recipe>> characters;
  for (const std::string label : {"1", "r", "eps"}) {
    const auto c = chi(label);
    characters.emplace_back(label, [c](const Permutation& g) { return CycNum(c(g)); });
    characters.emplace_back(label == std::string("1") ? "-1" : "-" + label,
                            [c, s](const Permutation& g) { return CycNum(s(g) * c(g)); });
  }
  return make_table(group, "g2", x, characters);
}

// Z((123)) in S5 = <(123)> x <(45)>.
CharacterTable s5_three_cycle_table(const PermutationGroup& group, const Permutation& x) {
  const std::vector<int> cycle{1, 2, 3};
  const auto k = [x, cycle](const Permutation& g) { return power_index(x, g, cycle); };
  const auto s = [](const Permutation& g) { return sign_on(g, {4, 5}); };
  std::vector<std::pair<std::string, Recipe>> characters;
  for (int twist = 0; twist < 2; ++twist) {
    for (int e = 0; e < 3; ++e) {
      std::string label = twist ? "eps" : "";
      if (e > 0) {
        label += std::string(twist ? "*" : "") + (e == 1 ? "theta" : "theta^2");
      }
      if (label.empty()) label = "1";
      characters.emplace_back(label, [k, s, twist, e](const Permutation& g) {
        CycNum v = power(CycNum::theta(), (e * k(g)) % 3);
        return twist ? CycNum(s(g)) * v : v;
      });
    }
  }
  return make_table(group, "g3", x, characters);
}

std::string replace_all(std::string s, const std::string& from, const std::string& to) {
  for (std::size_t pos = 0; (pos = s.find(from, pos)) != std::string::npos; pos += to.size()) {
    s.replace(pos, from.size(), to);
  }
  return s;
}

}  // namespace

GroupName parse_group(const std::string& name) {
  std::string lower;
  for (char c : name) lower += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (lower == "s2") return GroupName::kS2;
  if (lower == "s3") return GroupName::kS3;
  if (lower == "s4") return GroupName::kS4;
  if (lower == "s5") return GroupName::kS5;
  throw std::invalid_argument("unsupported group '" + name + "' (expected s2, s3, s4 or s5)");
}

std::string group_string(GroupName group) {
  switch (group) {
    case GroupName::kS2: return "s2";
    case GroupName::kS3: return "s3";
    case GroupName::kS4: return "s4";
    case GroupName::kS5: return "s5";
  }
  return "?";
}

namespace {

const std::vector<std::pair<std::string, std::string>>& greek() {
  static const std::vector<std::pair<std::string, std::string>> table = {
      {"epsilon", "ε"}, {"eps", "ε"}, {"theta", "θ"}, {"lambda", "λ"}, {"zeta", "ζ"},
      {"nu", "ν"},      {"sigma", "σ"},
  };
  return table;
}

const std::vector<std::pair<std::string, std::string>>& superscripts() {
  static const std::vector<std::pair<std::string, std::string>> table = {
      {"^1", "¹"}, {"^2", "²"}, {"^3", "³"}, {"^4", "⁴"},
  };
  return table;
}

}  // namespace

std::string normalize_label(const std::string& label) {
  std::string out;
  for (char c : label) {
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  }
  out = replace_all(out, "″", "''");
  out = replace_all(out, "′", "'");
  out = replace_all(out, "−", "-");
  for (const auto& [ascii, glyph] : superscripts()) out = replace_all(out, glyph, ascii);
  for (const auto& [ascii, glyph] : greek()) {
    if (ascii != "epsilon") out = replace_all(out, glyph, ascii);
  }
  out = replace_all(out, "epsilon", "eps");
  // "eps theta" written without an operator.
  out = replace_all(out, "epstheta", "eps*theta");
  return out;
}

std::string display_label(const std::string& label) {
  std::string out = normalize_label(label);
  out = replace_all(out, "''", "″");
  out = replace_all(out, "'", "′");
  out = replace_all(out, "*", "");
  for (const auto& [ascii, glyph] : superscripts()) out = replace_all(out, ascii, glyph);
  for (const auto& [ascii, glyph] : greek()) {
    if (ascii != "epsilon") out = replace_all(out, ascii, glyph);
  }
  return out;
}

std::optional<std::size_t> CharacterTable::find(const std::string& label) const {
  const auto it = std::find(labels.begin(), labels.end(), normalize_label(label));
  if (it == labels.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels.begin());
}

Report CharacterTable::verify_orthogonality() const {
  Report report("characters " + element);
  const auto classes = centralizer.conjugacy_classes();
  const std::size_t order = centralizer.order();
  report.add("square", labels.size() == classes.size(),
             std::to_string(labels.size()) + " characters, " + std::to_string(classes.size()) + " classes");
  if (labels.size() != classes.size()) return report;

  std::size_t bad_rows = 0;
  for (std::size_t a = 0; a < labels.size(); ++a) {
    for (std::size_t b = 0; b < labels.size(); ++b) {
      CycNum sum;
      for (std::size_t c = 0; c < classes.size(); ++c) {
        sum += CycNum(static_cast<long>(classes[c].size())) * values[a][c] * values[b][c].conj();
      }
      if (sum != CycNum(a == b ? static_cast<long>(order) : 0L)) ++bad_rows;
    }
  }
  report.add("rows", bad_rows == 0, std::to_string(bad_rows) + " row pairs fail");

  std::size_t bad_columns = 0;
  for (std::size_t c = 0; c < classes.size(); ++c) {
    for (std::size_t e = 0; e < classes.size(); ++e) {
      CycNum sum;
      for (std::size_t a = 0; a < labels.size(); ++a) sum += values[a][c] * values[a][e].conj();
      const long expected = c == e ? static_cast<long>(order / classes[c].size()) : 0L;
      if (sum != CycNum(expected)) ++bad_columns;
    }
  }
  report.add("columns", bad_columns == 0, std::to_string(bad_columns) + " column pairs fail");

  const std::size_t unit = centralizer.class_index(Permutation(centralizer.points()));
  CycNum degrees;
  for (std::size_t a = 0; a < labels.size(); ++a) degrees += values[a][unit] * values[a][unit];
  report.add("degrees", degrees == CycNum(static_cast<long>(order)), "sum chi(1)^2 = " + degrees.to_string());
  return report;
}

NonabelianGroup NonabelianGroup::make(GroupName name) {
  const int n = name == GroupName::kS2 ? 2 : name == GroupName::kS3 ? 3 : name == GroupName::kS4 ? 4 : 5;
  NonabelianGroup out(name, PermutationGroup::symmetric(n));
  const PermutationGroup& g = out.group_;
  auto& tables = out.tables_;
  const auto cyc = [n](std::initializer_list<std::initializer_list<int>> cycles) {
    return Permutation::from_cycles(n, cycles);
  };

  tables.push_back(identity_table(g));
  switch (name) {
    case GroupName::kS2:
      tables.push_back(cyclic_table(g, "g2", cyc({{1, 2}}), {"1", "eps"}));
      break;
    case GroupName::kS3:
      tables.push_back(cyclic_table(g, "g2", cyc({{1, 2}}), {"1", "eps"}));
      tables.push_back(cyclic_table(g, "g3", cyc({{1, 2, 3}}), {"1", "theta", "theta^2"}));
      break;
    case GroupName::kS4:
      tables.push_back(klein_table(g, cyc({{1, 2}})));
      tables.push_back(dihedral_table(g, cyc({{1, 2}, {3, 4}})));
      tables.push_back(cyclic_table(g, "g3", cyc({{1, 2, 3}}), {"1", "theta", "theta^2"}));
      tables.push_back(cyclic_table(g, "g4", cyc({{1, 2, 3, 4}}), {"1", "i", "-1", "-i"}));
      break;
    case GroupName::kS5:
      tables.push_back(s5_transposition_table(g, cyc({{1, 2}})));
      tables.push_back(dihedral_table(g, cyc({{1, 2}, {3, 4}})));
      tables.push_back(s5_three_cycle_table(g, cyc({{1, 2, 3}})));
      tables.push_back(cyclic_table(g, "g4", cyc({{1, 2, 3, 4}}), {"1", "i", "-1", "-i"}));
      tables.push_back(cyclic_table(g, "g5", cyc({{1, 2, 3, 4, 5}}), {"1", "zeta", "zeta^2", "zeta^3", "zeta^4"}));
      tables.push_back(cyclic_table(g, "g6", cyc({{1, 2, 3}, {4, 5}}),
                                    {"1", "-1", "theta", "theta^2", "-theta", "-theta^2"}));
      break;
  }
  for (const CharacterTable& t : tables) {
    for (const std::string& label : t.labels) out.pairs_.push_back({t.element, label});
  }
  return out;
}

std::optional<std::size_t> NonabelianGroup::index(const MPair& pair) const {
  const MPair key{normalize_label(pair.x), normalize_label(pair.rho)};
  const auto it = std::find(pairs_.begin(), pairs_.end(), key);
  if (it == pairs_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - pairs_.begin());
}

std::size_t NonabelianGroup::require_index(const MPair& pair) const {
  const auto k = index(pair);
  if (!k) throw std::invalid_argument(pair.to_string() + " is not in M(" + group_string(name_) + ")");
  return *k;
}

CycMatrix nonabelian_ft(const NonabelianGroup& group) {
  const auto& tables = group.tables();
  const std::size_t n = group.pairs().size();
  CycMatrix ft(n, std::vector<CycNum>(n));

  std::size_t row0 = 0;
  for (const CharacterTable& a : tables) {
    std::size_t col0 = 0;
    for (const CharacterTable& b : tables) {
      // Group the sum by (class of g y g^-1 in Z(x), class of g^-1 x g in Z(y)).
      std::map<std::pair<std::size_t, std::size_t>, long> counts;
      for (const Permutation& g : group.group().elements()) {
        const Permutation gi = g.inverse();
        const Permutation u = g * b.x * gi;
        if (a.x * u != u * a.x) continue;
        const Permutation v = gi * a.x * g;
        ++counts[{a.centralizer.class_index(u), b.centralizer.class_index(v)}];
      }
      const mpq_class scale(1, static_cast<unsigned long>(a.centralizer.order() * b.centralizer.order()));
      for (std::size_t s = 0; s < a.labels.size(); ++s) {
        for (std::size_t t = 0; t < b.labels.size(); ++t) {
          CycNum sum;
          for (const auto& [key, count] : counts) {
            sum += CycNum(count) * a.values[s][key.first] * b.values[t][key.second].conj();
          }
          ft[row0 + s][col0 + t] = sum * CycNum(scale);
        }
      }
      col0 += b.labels.size();
    }
    row0 += a.labels.size();
  }
  return ft;
}

CycMatrix multiply(const CycMatrix& a, const CycMatrix& b) {
  const std::size_t n = a.size();
  const std::size_t m = b.empty() ? 0 : b.front().size();
  CycMatrix out(n, std::vector<CycNum>(m));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (a[r][k].is_zero()) continue;
      for (std::size_t c = 0; c < m; ++c) {
        if (!b[k][c].is_zero()) out[r][c] += a[r][k] * b[k][c];
      }
    }
  }
  return out;
}

CycMatrix kronecker(const CycMatrix& a, const CycMatrix& b) {
  const std::size_t p = a.size();
  const std::size_t q = b.size();
  CycMatrix out(p * q, std::vector<CycNum>(p * q));
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = 0; j < p; ++j) {
      if (a[i][j].is_zero()) continue;
      for (std::size_t k = 0; k < q; ++k) {
        for (std::size_t l = 0; l < q; ++l) out[i * q + k][j * q + l] = a[i][j] * b[k][l];
      }
    }
  }
  return out;
}

CycNum trace(const CycMatrix& m) {
  CycNum out;
  for (std::size_t k = 0; k < m.size(); ++k) out += m[k][k];
  return out;
}

bool is_identity(const CycMatrix& m) {
  for (std::size_t r = 0; r < m.size(); ++r) {
    for (std::size_t c = 0; c < m[r].size(); ++c) {
      if (m[r][c] != CycNum(r == c ? 1L : 0L)) return false;
    }
  }
  return true;
}

bool is_symmetric(const CycMatrix& m) {
  for (std::size_t r = 0; r < m.size(); ++r) {
    for (std::size_t c = r + 1; c < m.size(); ++c) {
      if (m[r][c] != m[c][r]) return false;
    }
  }
  return true;
}

Report verify_ft(const NonabelianGroup& group, const CycMatrix& ft) {
  Report report("nonabelian " + group_string(group.name()));
  for (const CharacterTable& t : group.tables()) report.merge(t.verify_orthogonality());
  report.add("size", ft.size() == group.pairs().size(), std::to_string(ft.size()) + " pairs");
  report.add("symmetric", is_symmetric(ft));
  report.add("involution", is_identity(multiply(ft, ft)), "FT^2 = 1");

  bool rational = true;
  bool real = true;
  for (const auto& row : ft) {
    for (const CycNum& v : row) {
      rational = rational && v.is_rational();
      real = real && v.is_real();
    }
  }
  report.add("real", real, "entries fixed by complex conjugation");
  if (group.name() != GroupName::kS5) report.add("rational", rational);
  report.add("trace", trace(ft).is_rational(), "trace " + trace(ft).to_string());
  return report;
}

Report verify_product(GroupName left, GroupName right) {
  Report report("product " + group_string(left) + "x" + group_string(right));
  const CycMatrix a = nonabelian_ft(NonabelianGroup::make(left));
  const CycMatrix b = nonabelian_ft(NonabelianGroup::make(right));
  const CycMatrix p = kronecker(a, b);
  report.add("size", p.size() == a.size() * b.size(), std::to_string(p.size()) + " pairs");
  report.add("symmetric", is_symmetric(p));
  report.add("involution", is_identity(multiply(p, p)));
  report.add("trace", trace(p) == trace(a) * trace(b), "trace " + trace(p).to_string());
  return report;
}

std::vector<CycNum> hyperplane_functional(const NonabelianGroup& group) {
  if (group.name() != GroupName::kS5) throw std::invalid_argument("the hyperplane lives in C[M(S5)]");
  std::vector<CycNum> phi(group.pairs().size());
  phi[group.require_index({"g5", "zeta"})] = 1;
  phi[group.require_index({"g5", "zeta^4"})] = 1;
  phi[group.require_index({"g5", "zeta^2"})] = -1;
  phi[group.require_index({"g5", "zeta^3"})] = -1;
  return phi;
}

HyperplaneResult hyperplane_check(const NonabelianGroup& group, const CycMatrix& ft) {
  HyperplaneResult result{Report("hyperplane"), CycNum()};
  const std::vector<CycNum> phi = hyperplane_functional(group);
  const std::size_t n = phi.size();
  std::vector<CycNum> image(n);
  for (std::size_t b = 0; b < n; ++b) {
    for (std::size_t a = 0; a < n; ++a) {
      if (!phi[a].is_zero()) image[b] += phi[a] * ft[a][b];
    }
  }
  const std::size_t pivot = group.require_index({"g5", "zeta"});
  result.lambda = image[pivot] / phi[pivot];
  std::size_t residual = 0;
  for (std::size_t b = 0; b < n; ++b) residual += image[b] != result.lambda * phi[b];
  result.report.add("invariant", residual == 0,
                    "phi F = " + result.lambda.to_string() + " phi, " + std::to_string(residual) + " coordinates off");
  result.report.add("lambda-unit", result.lambda == CycNum(1) || result.lambda == CycNum(-1),
                    "lambda = " + result.lambda.to_string());
  result.report.add("unit-pair-in-H", phi[group.require_index({"1", "1"})].is_zero());
  return result;
}

}  // namespace trifourier
