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


// biharmonic-disk: command-line front end.

#include "biharmonic/case_io.hpp"
#include "biharmonic/commands.hpp"

#include "CLI11.hpp"

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using biharmonic::Complex;

// "A,B" -> two numbers.
template <class T>
bool split_pair(const std::string& text, T& first, T& second) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) return false;
  std::istringstream a(text.substr(0, comma));
  std::istringstream b(text.substr(comma + 1));
  a >> first;
  b >> second;
  return !a.fail() && !b.fail() && a.eof() && b.eof();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Biharmonic Dirichlet problem on the unit disk: solver, identities and Lipschitz constants"};
  app.set_version_flag("--version", std::string(biharmonic::kToolVersion));
  app.require_subcommand(1);
  std::string report;
  app.add_option("--report", report, "Also write a JSON report to this path");

  std::optional<double> tol;
  auto* identities = app.add_subcommand("identities", "Check the integral identities and bounds");
  identities->add_option("--tol", tol, "Tolerance replacing every per-check tolerance");

  std::string case_path;
  std::string grid;
  std::string out_path;
  bool gradient = false;
  auto* solve = app.add_subcommand("solve", "Evaluate the solution on a polar grid");
  solve->add_option("--case", case_path, "Case file (JSON)")->required();
  solve->add_option("--grid", grid, "Grid size NR,NT")->required();
  solve->add_flag("--gradient", gradient, "Also write the Wirtinger gradient");
  solve->add_option("--out", out_path, "Field file to write")->required();

  double fd_h = 0.02;
  double fd_tol = 1e-6;
  auto* verify = app.add_subcommand("verify", "Run gradient, boundary-trace and PDE-residual checks on a case");
  verify->add_option("--case", case_path, "Case file (JSON)")->required();
  verify->add_option("--fd-h", fd_h, "Finite-difference spacing")->capture_default_str();
  verify->add_option("--fd-tol", fd_tol, "Tolerance of the PDE residual")->capture_default_str();

  auto* lipschitz = app.add_subcommand("lipschitz", "Report the Lipschitz constants of a case");
  lipschitz->add_option("--case", case_path, "Case file (JSON)")->required();

  std::string which;
  std::string z_text;
  std::string zeta_text;
  auto* kernel = app.add_subcommand("kernel", "Evaluate F0, H0 or G at a point");
  kernel->add_option("--which", which, "Kernel name")->required()->check(CLI::IsMember({"F0", "H0", "G"}));
  kernel->add_option("--z", z_text, "Point RE,IM")->required();
  kernel->add_option("--zeta", zeta_text, "Second point RE,IM (G only)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : biharmonic::kExitUsage;
  }

  biharmonic::CommandIo io{std::cout, std::cerr, std::nullopt};
  if (!report.empty()) io.report = report;

  if (*identities) return biharmonic::cmd_identities(io, tol);
  if (*solve) {
    int n_r = 0;
    int n_theta = 0;
    if (!split_pair(grid, n_r, n_theta)) {
      std::cerr << "invalid input: --grid expects NR,NT\n";
      return biharmonic::kExitUsage;
    }
    return biharmonic::cmd_solve(io, case_path, n_r, n_theta, gradient, out_path);
  }
  if (*verify) return biharmonic::cmd_verify(io, case_path, fd_h, fd_tol);
  if (*lipschitz) return biharmonic::cmd_lipschitz(io, case_path);

  double re = 0.0;
  double im = 0.0;
  if (!split_pair(z_text, re, im)) {
    std::cerr << "invalid input: --z expects RE,IM\n";
    return biharmonic::kExitUsage;
  }
  std::optional<Complex> zeta;
  if (!zeta_text.empty()) {
    double zr = 0.0;
    double zi = 0.0;
    if (!split_pair(zeta_text, zr, zi)) {
      std::cerr << "invalid input: --zeta expects RE,IM\n";
      return biharmonic::kExitUsage;
    }
    zeta = Complex(zr, zi);
  }
  const auto name = which == "F0" ? biharmonic::KernelName::f0
                    : which == "H0" ? biharmonic::KernelName::h0
                                    : biharmonic::KernelName::g;
  return biharmonic::cmd_kernel(io, name, Complex(re, im), zeta);
}
