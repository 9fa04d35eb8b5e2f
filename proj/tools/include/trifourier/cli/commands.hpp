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
#ifndef TRIFOURIER_CLI_COMMANDS_HPP_
#define TRIFOURIER_CLI_COMMANDS_HPP_

#include <iosfwd>
#include <optional>
#include <string>

#include "trifourier/new_basis.hpp"
#include "trifourier/report.hpp"

namespace trifourier::cli {

enum class Format { kText, kJson, kCsv };

struct Streams {
  std::ostream& out;
  std::ostream& err;
};

/// Suites accepted by `verify`.
inline constexpr const char* kSuites[] = {"all", "family", "fourier", "dihedral", "counts", "tau"};

/// Runs one verification suite for dimension D. Throws DimensionError for a
/// bad D and std::invalid_argument for an unknown suite.
Report verify_suite(int dimension, const std::string& suite);

int run_family(int dimension, Format format, Streams io);
int run_matrix(int dimension, Format format, Streams io);
int run_verify(int dimension, const std::string& suite, Format format, Streams io);

struct NonabelianOptions {
  std::string group = "s3";
  std::string variant = "g2";
  std::string check = "involution";
  std::optional<std::string> basis_path;
  Format format = Format::kText;
};

int run_nonabelian(const NonabelianOptions& options, Streams io);
int run_verify_basis(const std::string& path, Format format, Streams io);
/// Writes the embedded S3 basis of the given variant as JSON.
int run_basis(const std::string& variant, Streams io);

/// Parses argv and dispatches. Exit code 0 on success, 1 on a failed check
/// or a usage error.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace trifourier::cli

#endif  // TRIFOURIER_CLI_COMMANDS_HPP_
