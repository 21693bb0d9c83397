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


// Command implementations behind the command-line tool. Each returns the
// process exit status: 0 on success, 1 when a check fails or the numerical
// policy refuses the request, 2 on usage, parse and I/O errors.

#pragma once

#include "biharmonic/core.hpp"

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>

namespace biharmonic {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

struct CommandIo {
  std::ostream& out;
  std::ostream& err;
  /// When set, a JSON report is written here as well.
  std::optional<std::filesystem::path> report;
};

int cmd_identities(const CommandIo& io, std::optional<double> tolerance = std::nullopt);

int cmd_solve(const CommandIo& io, const std::filesystem::path& case_path, int n_r, int n_theta,
              bool with_gradient, const std::filesystem::path& out_path);

int cmd_verify(const CommandIo& io, const std::filesystem::path& case_path, double fd_h = 0.02,
               double fd_tolerance = 1e-6);

int cmd_lipschitz(const CommandIo& io, const std::filesystem::path& case_path);

enum class KernelName { f0, h0, g };

int cmd_kernel(const CommandIo& io, KernelName which, Complex z, std::optional<Complex> zeta);

}  // namespace biharmonic
