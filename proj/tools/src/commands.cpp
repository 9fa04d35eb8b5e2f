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
#include "trifourier/cli/commands.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "trifourier/dihedral.hpp"
#include "trifourier/family.hpp"
#include "trifourier/fourier.hpp"
#include "trifourier/integer_matrix.hpp"
#include "trifourier/nonabelian.hpp"
#include "trifourier/serialize.hpp"
#include "trifourier/tau.hpp"

namespace trifourier::cli {
namespace {

// z-commutation works on every delta function of V'; beyond this it is slow
// and adds nothing the smaller cases do not already cover.
constexpr int kCommutationLimit = 8;

int emit(const Report& report, Format format, Streams io) {
  if (format == Format::kJson) {
    io.out << report.to_json().dump(2) << '\n';
  } else {
    io.out << report.to_text();
  }
  return report.passed() ? 0 : 1;
}

Report family_suite(int dimension) {
  Report report("family D=" + std::to_string(dimension));
  const Family f = build_family(dimension);
  const auto members = f.members();
  report.add("size", f.size() == (std::size_t{1} << dimension), std::to_string(f.size()) + " members");

  std::size_t anisotropic = 0;
  for (const FamilyEntry& e : f.entries()) anisotropic += !is_isotropic(f.space(), e.space);
  report.add("isotropic", anisotropic == 0, std::to_string(anisotropic) + " members not isotropic");

  report.add("F=F'", build_family_prime(dimension).members() == members);
  report.add("F=F''", build_family_ucb(dimension, Orientation::kForward).members() == members);
  if (dimension >= 4) {
    report.add("F=F''-reverse", build_family_ucb(dimension, Orientation::kReverse).members() == members,
               "the other orientation of the generic embeddings");
  }
  report.merge(verify_fibers(f));
  return report;
}

Report fourier_suite(int dimension) {
  Report report("fourier D=" + std::to_string(dimension));
  const Family f = build_family(dimension);
  const SymplecticSpace& space = f.space();

  const mpz_class det = determinant(basis_matrix(f));
  report.add("unimodular", det == 1 || det == -1, "det B = " + det.get_str());

  std::size_t not_involutive = 0;
  const std::int64_t scale = std::int64_t{1} << dimension;
  for (const FamilyEntry& e : f.entries()) {
    std::vector<std::int64_t> psi(space.cardinality(), 0);
    for (Word x : e.space.elements()) psi[x] = 1;
    std::vector<std::int64_t> twice = scaled_phi(space, scaled_phi(space, psi));
    for (std::int64_t& v : psi) v *= scale;
    not_involutive += twice != psi;
  }
  report.add("involution", not_involutive == 0, std::to_string(not_involutive) + " basis vectors with Phi^2 != 1");

  report.merge(verify_triangularity(f, change_of_basis(f)));
  if (dimension >= 2 && dimension <= kCommutationLimit) report.merge(verify_z_commutation(dimension));
  return report;
}

Report dihedral_suite(int dimension) {
  Report report("dihedral D=" + std::to_string(dimension));
  report.merge(verify_dihedral_relations(dimension));
  if (dimension >= 2) report.merge(verify_tau_intertwining(dimension));
  report.merge(verify_family_stability(build_family(dimension)).report);
  return report;
}

Report counts_suite(int dimension) {
  Report report("counts D=" + std::to_string(dimension));
  report.merge(verify_counts(build_family(dimension)));
  report.merge(verify_binomial_identity(16));
  return report;
}

Report tau_suite(int dimension) {
  Report report("tau D=" + std::to_string(dimension));
  if (dimension < 2) {
    report.add("defined", true, "no tau maps for D = 0");
    return report;
  }
  const SymplecticSpace space = SymplecticSpace::make(dimension);
  for (int i = 1; i <= dimension + 1; ++i) {
    const LinearEmbedding t = tau(space, i);
    const std::string id = "tau" + std::to_string(i);
    report.add(id + "-consistent", t.images_consistent());
    report.add(id + "-injective", t.is_injective());
    report.add(id + "-form", t.preserves_form());
    report.add(id + "-complement", check_complement(space, i));
  }
  if (dimension >= 4) {
    report.merge(verify_composition_identity(dimension));
    std::size_t bad = 0;
    for (int source = 1; source <= dimension - 1; ++source) {
      for (int target = 1; target <= dimension + 1; ++target) {
        for (Orientation o : {Orientation::kForward, Orientation::kReverse}) {
          const LinearEmbedding t = generic_tau(space, source, target, o);
          bad += !(t.is_injective() && t.preserves_form() && t.images_consistent());
        }
      }
    }
    report.add("generic-embeddings", bad == 0, std::to_string(bad) + " vertex-pair maps fail");
    const int D = dimension;
    bool matches = generic_tau(space, D - 1, 1) == tau(space, 1) && generic_tau(space, D - 1, D + 1) == tau(space, D + 1);
    for (int i = 2; i <= D; ++i) matches = matches && generic_tau(space, i - 1, i) == tau(space, i);
    report.add("generic-restates-tau", matches, "tau_i as vertex-pair maps");
  }
  return report;
}

std::string coefficient(const CycNum& v) {
  const std::string s = v.to_string();
  return v.is_rational() ? s : "(" + s + ")";
}

std::ostream& print_ft(const NonabelianGroup& group, const CycMatrix& ft, std::ostream& out) {
  const auto& pairs = group.pairs();
  for (std::size_t b = 0; b < pairs.size(); ++b) {
    out << "F" << pairs[b].display() << " =";
    bool first = true;
    for (std::size_t a = 0; a < pairs.size(); ++a) {
      if (ft[a][b].is_zero()) continue;
      std::string c = coefficient(ft[a][b]);
      const bool negative = !first && c.front() == '-';
      if (negative) c.erase(0, 1);
      out << (first ? " " : negative ? " - " : " + ") << c << " " << pairs[a].display();
      first = false;
    }
    out << '\n';
  }
  return out;
}

nlohmann::json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

int report_basis(const NonabelianGroup& group, const CycMatrix& ft, const NewBasis& basis, Format format,
                 Streams io) {
  const PiecePartition partition = piece_partition(group.name());
  const TriangularResult result = verify_triangular(group, ft, basis, partition);
  if (format == Format::kJson) {
    nlohmann::json out = result.report.to_json();
    out["field"] = result.field;
    out["piece_fields"] = result.piece_fields;
    if (result.first_violation) out["first_violation"] = *result.first_violation;
    io.out << out.dump(2) << '\n';
  } else {
    io.out << result.report.to_text();
    if (!result.field.empty()) {
      io.out << "coefficients in " << result.field << "; per piece:";
      for (const std::string& f : result.piece_fields) io.out << ' ' << f;
      io.out << '\n';
    }
    if (result.first_violation) io.out << "first violation: " << *result.first_violation << '\n';
  }
  return result.report.passed() ? 0 : 1;
}

Format parse_format(const std::string& name) {
  if (name == "json") return Format::kJson;
  if (name == "csv") return Format::kCsv;
  return Format::kText;
}

}  // namespace

Report verify_suite(int dimension, const std::string& suite) {
  require_valid_dimension(dimension);
  if (suite == "family") return family_suite(dimension);
  if (suite == "fourier") return fourier_suite(dimension);
  if (suite == "dihedral") return dihedral_suite(dimension);
  if (suite == "counts") return counts_suite(dimension);
  if (suite == "tau") return tau_suite(dimension);
  if (suite == "all") {
    Report report("all D=" + std::to_string(dimension));
    for (const char* name : {"family", "counts", "tau", "fourier", "dihedral"}) {
      report.merge(verify_suite(dimension, name));
    }
    return report;
  }
  throw std::invalid_argument("unknown suite '" + suite + "'");
}

int run_family(int dimension, Format format, Streams io) {
  const Family f = build_family(dimension);
  if (format == Format::kJson) {
    io.out << family_json(f).dump(2) << '\n';
  } else {
    io.out << family_text(f);
  }
  return 0;
}

int run_matrix(int dimension, Format format, Streams io) {
  const Family f = build_family(dimension);
  const CobMatrix m = change_of_basis(f);
  if (format == Format::kCsv) {
    io.out << cob_csv(f, m);
  } else {
    io.out << cob_json(f, m).dump(2) << '\n';
  }
  return 0;
}

int run_verify(int dimension, const std::string& suite, Format format, Streams io) {
  return emit(verify_suite(dimension, suite), format, io);
}

int run_nonabelian(const NonabelianOptions& options, Streams io) {
  const NonabelianGroup group = NonabelianGroup::make(parse_group(options.group));
  const CycMatrix ft = nonabelian_ft(group);
  const std::string& check = options.check;

  if (check == "matrix") {
    if (options.format == Format::kJson) {
      io.out << ft_json(group, ft).dump(2) << '\n';
    } else {
      print_ft(group, ft, io.out);
    }
    return 0;
  }
  if (check == "involution") return emit(verify_ft(group, ft), options.format, io);
  if (check == "trace") {
    const CycNum tr = trace(ft);
    if (options.format == Format::kJson) {
      io.out << nlohmann::json{{"group", options.group}, {"trace", tr.to_string()}}.dump() << '\n';
    } else {
      io.out << tr.to_string() << '\n';
    }
    if (group.name() == GroupName::kS2) return 0;
    const Report replay = verify_sign_trace(group, ft, piece_partition(group.name()));
    if (!replay.passed()) io.err << replay.to_text();
    return replay.passed() ? 0 : 1;
  }
  if (check == "hyperplane") {
    if (group.name() != GroupName::kS5) throw CLI::ValidationError("--check hyperplane", "only defined for s5");
    return emit(hyperplane_check(group, ft).report, options.format, io);
  }
  if (check == "newbasis") {
    NewBasis basis;
    if (options.basis_path) {
      basis = NewBasis::from_json(read_json(*options.basis_path));
    } else if (group.name() == GroupName::kS3) {
      basis = s3_new_basis(parse_variant(options.variant));
    } else {
      throw CLI::ValidationError("--basis", "a basis file is required for " + options.group);
    }
    return report_basis(group, ft, basis, options.format, io);
  }
  throw CLI::ValidationError("--check", "unknown check '" + check + "'");
}

int run_verify_basis(const std::string& path, Format format, Streams io) {
  const NewBasis basis = NewBasis::from_json(read_json(path));
  const NonabelianGroup group = NonabelianGroup::make(basis.group);
  return report_basis(group, nonabelian_ft(group), basis, format, io);
}

int run_basis(const std::string& variant, Streams io) {
  io.out << s3_new_basis(parse_variant(variant)).to_json().dump(2) << '\n';
  return 0;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Triangularity of Fourier transforms on symplectic F2 spaces and on M(S_n)", "trifourier"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "trifourier 0.1.0");
  Streams io{out, err};

  int dimension = 0;
  std::string format = "text";
  const auto even = CLI::Validator(
      [](std::string& value) -> std::string {
        int d = 0;
        try {
          std::size_t used = 0;
          d = std::stoi(value, &used);
          if (used != value.size()) return "D must be an integer";
        } catch (const std::exception&) {
          return "D must be an integer";
        }
        if (d < 0 || d % 2 != 0) return "D must be even and non-negative";
        if (d > kMaxDimension) return "D must not exceed " + std::to_string(kMaxDimension);
        return {};
      },
      "EVEN");

  auto* family = app.add_subcommand("family", "Print F(V) grouped into fibers");
  family->add_option("--dim,-d", dimension, "Ambient dimension D")->required()->check(even);
  family->add_option("--format,-f", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  auto* matrix = app.add_subcommand("matrix", "Print the change-of-basis matrix of Phi");
  std::string matrix_format = "json";
  matrix->add_option("--dim,-d", dimension, "Ambient dimension D")->required()->check(even);
  matrix->add_option("--format,-f", matrix_format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  auto* verify = app.add_subcommand("verify", "Run invariant suites");
  std::string suite = "all";
  verify->add_option("--dim,-d", dimension, "Ambient dimension D")->required()->check(even);
  verify->add_option("--suite,-s", suite, "all, family, fourier, dihedral, counts or tau")
      ->check(CLI::IsMember(std::vector<std::string>(std::begin(kSuites), std::end(kSuites))));
  verify->add_option("--format,-f", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  auto* nonabelian = app.add_subcommand("nonabelian", "Non-abelian Fourier transform of S2..S5");
  NonabelianOptions options;
  std::string basis_path;
  nonabelian->add_option("--group,-g", options.group, "s2, s3, s4 or s5")
      ->check(CLI::IsMember({"s2", "s3", "s4", "s5"}));
  nonabelian->add_option("--variant", options.variant, "S3 basis variant: g2 or e")
      ->check(CLI::IsMember({"g2", "e"}));
  nonabelian->add_option("--check,-c", options.check, "matrix, involution, trace, hyperplane or newbasis")
      ->check(CLI::IsMember({"matrix", "involution", "trace", "hyperplane", "newbasis"}));
  nonabelian->add_option("--basis,-b", basis_path, "New-basis JSON file")->check(CLI::ExistingFile);
  nonabelian->add_option("--format,-f", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  auto* verify_basis = app.add_subcommand("verify-basis", "Check a new-basis JSON file");
  std::string verify_path;
  verify_basis->add_option("file", verify_path, "New-basis JSON file")->required()->check(CLI::ExistingFile);
  verify_basis->add_option("--format,-f", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  auto* basis = app.add_subcommand("basis", "Print the S3 new basis as JSON");
  std::string variant = "g2";
  basis->add_option("--variant", variant, "g2 or e")->check(CLI::IsMember({"g2", "e"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << "trifourier 0.1.0\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }

  try {
    if (family->parsed()) return run_family(dimension, parse_format(format), io);
    if (matrix->parsed()) return run_matrix(dimension, parse_format(matrix_format), io);
    if (verify->parsed()) return run_verify(dimension, suite, parse_format(format), io);
    if (nonabelian->parsed()) {
      if (!basis_path.empty()) options.basis_path = basis_path;
      options.format = parse_format(format);
      return run_nonabelian(options, io);
    }
    if (verify_basis->parsed()) return run_verify_basis(verify_path, parse_format(format), io);
    if (basis->parsed()) return run_basis(variant, io);
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}

}  // namespace trifourier::cli
