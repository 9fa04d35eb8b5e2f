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
#include "trifourier/new_basis.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "trifourier/integer_matrix.hpp"

namespace trifourier {
namespace {

// Piece listings, version 1. Each entry is [x, rho].
constexpr const char* kPieces = R"json({
  "version": 1,
  "s3": {
    "signs": [-1, -1, 1],
    "pieces": [
      [["1", "1"]],
      [["1", "r"]],
      [["1", "eps"], ["g2", "1"], ["g2", "eps"], ["g3", "1"], ["g3", "theta"], ["g3", "theta^2"]]
    ]
  },
  "s4": {
    "signs": [1, -1, 1, -1, 1],
    "pieces": [
      [["1", "1"]],
      [["1", "lambda^1"]],
      [["1", "sigma"]],
      [["1", "lambda^2"], ["g2", "1"], ["g2'", "1"], ["g2", "eps''"], ["g2", "eps'"]],
      [["g3", "1"], ["g4", "1"], ["g2'", "eps''"], ["g2'", "eps'"], ["g2'", "r"], ["g4", "-1"],
       ["1", "lambda^3"], ["g2", "eps"], ["g2'", "eps"], ["g3", "theta"], ["g3", "theta^2"],
       ["g4", "i"], ["g4", "-i"]]
    ]
  },
  "s5": {
    "signs": [-1, -1, 1, 1, 1, -1, -1, 1],
    "pieces": [
      [["g5", "zeta"]],
      [["1", "1"]],
      [["1", "lambda^1"]],
      [["1", "nu"]],
      [["1", "nu'"]],
      [["1", "lambda^2"], ["g2", "1"], ["g2", "-1"]],
      [["1", "lambda^3"], ["g2", "r"], ["g3", "1"], ["g2'", "1"], ["g2", "-r"], ["g2'", "r"],
       ["g3", "theta"], ["g3", "theta^2"]],
      [["g2'", "eps''"], ["g6", "1"], ["g2", "eps"], ["g3", "eps"], ["g4", "1"], ["g5", "1"],
       ["g2'", "eps'"], ["g4", "-1"], ["g6", "-1"], ["g6", "theta"], ["g6", "theta^2"],
       ["1", "lambda^4"], ["g2", "-eps"], ["g3", "eps*theta"], ["g3", "eps*theta^2"], ["g2'", "eps"],
       ["g6", "-theta"], ["g6", "-theta^2"], ["g4", "i"], ["g4", "-i"], ["g5", "zeta^2"],
       ["g5", "zeta^3"], ["g5", "zeta^4"]]
    ]
  }
})json";

std::string field_of(const std::vector<const CycNum*>& values) {
  bool rational = true;
  bool golden = true;
  bool real = true;
  for (const CycNum* v : values) {
    rational = rational && v->is_rational();
    if (!rational) golden = golden && v->in_golden_field();
    real = real && v->is_real();
  }
  if (rational) return "Q";
  if (golden) return "Q(sqrt5)";
  return real ? "R" : "C";
}

mpq_class parse_rational(const nlohmann::json& num, const nlohmann::json& den) {
  auto integer = [](const nlohmann::json& v) {
    if (v.is_string()) return mpz_class(v.get<std::string>());
    if (!v.is_number_integer()) throw std::invalid_argument("coefficients must be integers");
    return mpz_class(v.get<long>());
  };
  const mpz_class d = integer(den);
  if (d == 0) throw std::invalid_argument("zero denominator in basis file");
  mpq_class out(integer(num), d);
  out.canonicalize();
  return out;
}

MPair parse_pair(const nlohmann::json& value) {
  if (value.is_array() && value.size() == 2) {
    return {normalize_label(value[0].get<std::string>()), normalize_label(value[1].get<std::string>())};
  }
  return {normalize_label(value.at("x").get<std::string>()), normalize_label(value.at("rho").get<std::string>())};
}

}  // namespace

Variant parse_variant(const std::string& name) {
  if (name == "g2" || name == "G2") return Variant::kG2;
  if (name == "e" || name == "E") return Variant::kE;
  throw std::invalid_argument("unknown variant '" + name + "' (expected g2 or e)");
}

std::string variant_string(Variant variant) { return variant == Variant::kG2 ? "g2" : "e"; }

nlohmann::json NewBasis::to_json() const {
  nlohmann::json out;
  out["group"] = group_string(group);
  if (!variant.empty()) out["variant"] = variant;
  out["expansions"] = nlohmann::json::array();
  for (const Expansion& e : expansions) {
    nlohmann::json item;
    item["label"] = {{"x", e.label.x}, {"rho", e.label.rho}};
    item["terms"] = nlohmann::json::array();
    for (const BasisTerm& t : e.terms) {
      item["terms"].push_back({{"x", t.pair.x},
                               {"rho", t.pair.rho},
                               {"coeff_num", t.coefficient.get_num().get_si()},
                               {"coeff_den", t.coefficient.get_den().get_si()}});
    }
    out["expansions"].push_back(std::move(item));
  }
  return out;
}

NewBasis NewBasis::from_json(const nlohmann::json& document) {
  try {
    NewBasis out;
    out.group = parse_group(document.at("group").get<std::string>());
    out.variant = document.value("variant", std::string());
    for (const nlohmann::json& item : document.at("expansions")) {
      Expansion e;
      e.label = parse_pair(item.at("label"));
      for (const nlohmann::json& term : item.at("terms")) {
        const nlohmann::json one = 1;
        e.terms.push_back({parse_pair(term), parse_rational(term.at("coeff_num"), term.contains("coeff_den")
                                                                                      ? term.at("coeff_den")
                                                                                      : one)});
      }
      out.expansions.push_back(std::move(e));
    }
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed basis file: ") + e.what());
  }
}

NewBasis s3_new_basis(Variant variant) {
  const MPair one{"1", "1"}, r{"1", "r"}, eps{"1", "eps"}, g2{"g2", "1"}, g2e{"g2", "eps"}, g3{"g3", "1"},
      g3t{"g3", "theta"}, g3t2{"g3", "theta^2"};
  const MPair twist = variant == Variant::kG2 ? g2 : g2e;
  auto terms = [](std::initializer_list<std::pair<MPair, int>> list) {
    std::vector<BasisTerm> out;
    for (const auto& [pair, c] : list) out.push_back({pair, mpq_class(c)});
    return out;
  };
  NewBasis basis;
  basis.group = GroupName::kS3;
  basis.variant = variant_string(variant);
  basis.expansions = {
      {one, terms({{one, 1}})},
      {r, terms({{one, 1}, {r, 1}})},
      {eps, terms({{one, 1}, {r, 2}, {eps, 1}})},
      {g2, terms({{one, 1}, {r, 1}, {g2, 1}})},
      {g2e, terms({{one, 1}, {r, 1}, {g2e, 1}})},
      {g3, terms({{one, 1}, {g2, 1}, {g3, 1}})},
      {g3t, terms({{one, 1}, {twist, 1}, {g3t, 1}})},
      {g3t2, terms({{one, 1}, {twist, 1}, {g3t2, 1}})},
  };
  return basis;
}

PiecePartition piece_partition(GroupName group) {
  static const nlohmann::json data = nlohmann::json::parse(kPieces);
  const std::string key = group_string(group);
  if (!data.contains(key)) throw std::invalid_argument("no piece listing for " + key);
  PiecePartition out;
  out.group = group;
  out.version = data.at("version").get<int>();
  out.signs = data.at(key).at("signs").get<std::vector<int>>();
  for (const nlohmann::json& piece : data.at(key).at("pieces")) {
    std::vector<MPair> members;
    for (const nlohmann::json& pair : piece) members.push_back(parse_pair(pair));
    out.pieces.push_back(std::move(members));
  }
  return out;
}

TriangularResult verify_triangular(const NonabelianGroup& group, const CycMatrix& ft, const NewBasis& basis,
                                   const PiecePartition& partition) {
  TriangularResult result;
  result.report = Report("new basis " + group_string(group.name()) +
                         (basis.variant.empty() ? "" : " " + basis.variant));
  Report& report = result.report;
  const std::size_t n = group.pairs().size();
  auto fail = [&](const std::string& id, const std::string& why) {
    report.add(id, false, why);
    if (!result.first_violation) result.first_violation = why;
    return result;
  };

  if (basis.group != group.name() || partition.group != group.name()) {
    return fail("group", "basis, pieces and transform refer to different groups");
  }

  // Pieces must cover M exactly once.
  std::vector<std::size_t> piece_of(n, partition.pieces.size());
  for (std::size_t p = 0; p < partition.pieces.size(); ++p) {
    for (const MPair& pair : partition.pieces[p]) {
      const auto k = group.index(pair);
      if (!k) return fail("pieces", "piece " + std::to_string(p + 1) + " lists unknown " + pair.to_string());
      if (piece_of[*k] != partition.pieces.size()) return fail("pieces", pair.to_string() + " is listed twice");
      piece_of[*k] = p;
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    if (piece_of[k] == partition.pieces.size()) {
      return fail("pieces", group.pairs()[k].to_string() + " is in no piece");
    }
  }
  report.add("pieces", true, std::to_string(partition.pieces.size()) + " pieces cover M");

  // Expansion matrix N: column k is hat(pairs[k]).
  IntegerMatrix expansion(n, n);
  std::vector<bool> labelled(n, false);
  for (const Expansion& e : basis.expansions) {
    const auto k = group.index(e.label);
    if (!k) return fail("labels", "expansion label " + e.label.to_string() + " is not in M");
    if (labelled[*k]) return fail("labels", "two expansions for " + e.label.to_string());
    labelled[*k] = true;
    for (const BasisTerm& t : e.terms) {
      const auto a = group.index(t.pair);
      if (!a) return fail("labels", "hat" + e.label.to_string() + " uses unknown " + t.pair.to_string());
      if (t.coefficient.get_den() != 1 || !t.coefficient.get_num().fits_slong_p()) {
        return fail("integral", "hat" + e.label.to_string() + " has coefficient " + t.coefficient.get_str() +
                                    " on " + t.pair.to_string());
      }
      expansion(*a, *k) += t.coefficient.get_num().get_si();
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    if (!labelled[k]) return fail("labels", "no expansion for " + group.pairs()[k].to_string());
  }
  report.add("labels", true, std::to_string(n) + " expansions");

  const IntegerElimination solved = eliminate(expansion, IntegerMatrix::identity(n));
  if (!solved.solution) {
    return fail("unimodular", "expansion matrix has determinant " + solved.determinant.get_str());
  }
  report.add("unimodular", true, "determinant " + solved.determinant.get_str());
  const IntegerMatrix& inverse = *solved.solution;

  // T = N^-1 F N.
  CycMatrix fn(n, std::vector<CycNum>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (ft[a][b].is_zero()) continue;
      for (std::size_t k = 0; k < n; ++k) {
        if (expansion(b, k) != 0) fn[a][k] += ft[a][b] * CycNum(static_cast<long>(expansion(b, k)));
      }
    }
  }
  result.matrix.assign(n, std::vector<CycNum>(n));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t a = 0; a < n; ++a) {
      if (inverse(r, a) == 0) continue;
      const CycNum c(static_cast<long>(inverse(r, a)));
      for (std::size_t k = 0; k < n; ++k) {
        if (!fn[a][k].is_zero()) result.matrix[r][k] += c * fn[a][k];
      }
    }
  }
  const CycMatrix& t = result.matrix;

  std::vector<const CycNum*> all;
  for (const auto& row : t) {
    for (const CycNum& v : row) all.push_back(&v);
  }
  result.field = field_of(all);
  for (const auto& piece : partition.pieces) {
    std::vector<const CycNum*> column_values;
    for (const MPair& pair : piece) {
      const std::size_t k = group.require_index(pair);
      for (std::size_t r = 0; r < n; ++r) column_values.push_back(&t[r][k]);
    }
    result.piece_fields.push_back(field_of(column_values));
  }

  // Walk columns in piece order; rows in piece order too, so the first
  // violation reported is the earliest one in the partition.
  std::size_t violations = 0;
  std::string first;
  for (std::size_t p = 0; p < partition.pieces.size(); ++p) {
    for (const MPair& column : partition.pieces[p]) {
      const std::size_t b = group.require_index(column);
      for (const auto& row_piece : partition.pieces) {
        for (const MPair& row : row_piece) {
          const std::size_t a = group.require_index(row);
          if (a == b || t[a][b].is_zero() || piece_of[a] > p) continue;
          if (violations++ == 0) {
            first = "F(hat" + column.to_string() + ") has coefficient " + t[a][b].to_string() + " on hat" +
                    row.to_string() + " (piece " + std::to_string(piece_of[a] + 1) + ", column in piece " +
                    std::to_string(p + 1) + ")";
          }
        }
      }
    }
  }
  report.add("triangular", violations == 0,
             violations == 0 ? "each image is +-itself plus later pieces"
                             : std::to_string(violations) + " entries; first: " + first);
  if (violations != 0 && !result.first_violation) result.first_violation = first;

  result.signs.assign(n, std::nullopt);
  for (std::size_t k = 0; k < n; ++k) {
    if (t[k][k] == CycNum(1)) result.signs[k] = 1;
    if (t[k][k] == CycNum(-1)) result.signs[k] = -1;
  }
  for (std::size_t p = 0; p < partition.pieces.size(); ++p) {
    std::string bad;
    for (const MPair& pair : partition.pieces[p]) {
      const std::size_t k = group.require_index(pair);
      if (result.signs[k] != partition.signs[p]) {
        bad = "diagonal at hat" + pair.to_string() + " is " + t[k][k].to_string() + ", expected " +
              std::to_string(partition.signs[p]);
        break;
      }
    }
    report.add("sign-piece" + std::to_string(p + 1), bad.empty(),
               bad.empty() ? "sign " + std::to_string(partition.signs[p]) : bad);
    if (!bad.empty() && !result.first_violation) result.first_violation = bad;
  }

  if (group.name() == GroupName::kS5) {
    const std::vector<CycNum> phi = hyperplane_functional(group);
    const std::size_t exempt = group.require_index({"g5", "zeta"});
    std::string outside;
    for (std::size_t k = 0; k < n && outside.empty(); ++k) {
      if (k == exempt) continue;
      CycNum value;
      for (std::size_t a = 0; a < n; ++a) value += phi[a] * CycNum(static_cast<long>(expansion(a, k)));
      if (!value.is_zero()) outside = "hat" + group.pairs()[k].to_string() + " is not in the hyperplane";
    }
    report.add("hyperplane-members", outside.empty(), outside.empty() ? "all but hat(g5,zeta) lie in H" : outside);
  }
  return result;
}

Report verify_sign_trace(const NonabelianGroup& group, const CycMatrix& ft, const PiecePartition& partition) {
  Report report("sign-trace " + group_string(group.name()));
  long total = 0;
  for (std::size_t p = 0; p < partition.pieces.size(); ++p) {
    total += partition.signs[p] * static_cast<long>(partition.pieces[p].size());
  }
  const CycNum tr = trace(ft);
  report.add("sum", tr == CycNum(total),
             "sum of piece signs " + std::to_string(total) + ", trace " + tr.to_string());
  return report;
}

}  // namespace trifourier
