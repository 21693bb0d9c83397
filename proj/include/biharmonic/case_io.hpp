// Copyright (c) 2026 The biharmonic-disk authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0.txt
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// JSON case files and field files.
//
// Case file (every key optional, unknown keys rejected):
//
//   {
//     "schema": 1,
//     "f": {"fourier": [[mode, re, im], ...], "n_samples": N},
//     "h": {"samples": [[re, im], ...]},
//     "g": {"terms": [[a, b, re, im], ...]},
//     "quadrature": {"circle_nodes": 512, "disk_radial": 128, "disk_angular": 256,
//                    "centered_inner_panels": 32, "centered_outer_panels": 8,
//                    "centered_order": 8},
//     "seed": 42
//   }
//
// Missing boundary data is zero on 256 samples; a missing source is zero.

#pragma once

#include "biharmonic/solver.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace biharmonic {

inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr int kSchemaVersion = 1;

/// Malformed JSON; the message carries line and column.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Reading or writing a file failed.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CaseFile {
  Case data;
  QuadratureSizes sizes;
  std::optional<std::uint64_t> seed;

  friend bool operator==(const CaseFile&, const CaseFile&) = default;
};

/// Throws ParseError on bad JSON and ValidationError naming the offending
/// field (for example "g.terms[0]: negative exponent").
CaseFile parse_case_text(std::string_view text);
CaseFile parse_case(const std::filesystem::path& path);

/// Boundary data is written as samples, so parse_case_text(serialize_case(c))
/// reproduces c exactly.
std::string serialize_case(const CaseFile& c);

/// Field file: a header (schema, tool_version, fingerprint, n_r, n_theta,
/// with_gradient, columns) and one row [r, theta, re, im (, d_z re, d_z im,
/// d_zbar re, d_zbar im)] per node in lattice order; holes have null values
/// and are listed under "holes".
std::string serialize_field(const SolutionField& field);

/// Writes to a temporary file in the target directory and renames it into
/// place, so a failed write leaves no partial file. Throws IoError.
void write_file_atomically(const std::filesystem::path& path, std::string_view contents);

}  // namespace biharmonic
