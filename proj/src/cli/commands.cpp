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


#include "biharmonic/commands.hpp"

#include "biharmonic/case_io.hpp"
#include "biharmonic/green.hpp"
#include "biharmonic/kernels.hpp"
#include "biharmonic/lipschitz.hpp"
#include "biharmonic/verify.hpp"

#include "json.hpp"

#include <cstdio>
#include <vector>

namespace biharmonic {

using nlohmann::json;

namespace {

std::string format_number(Complex v) {
  char buf[96];
  if (v.imag() == 0.0) {
    std::snprintf(buf, sizeof buf, "%.12g", v.real());
  } else {
    std::snprintf(buf, sizeof buf, "%.12g%+.12gi", v.real(), v.imag());
  }
  return buf;
}

json complex_json(Complex v) { return json::array({v.real(), v.imag()}); }

const char* kind_name(CheckKind k) {
  switch (k) {
    case CheckKind::equality:
      return "equality";
    case CheckKind::upper_bound:
      return "upper_bound";
    case CheckKind::lower_bound:
      return "lower_bound";
  }
  return "?";
}

json checks_json(const std::vector<CheckResult>& checks) {
  json list = json::array();
  for (const auto& c : checks) {
    list.push_back({{"name", c.name},
                    {"kind", kind_name(c.kind)},
                    {"computed", complex_json(c.computed)},
                    {"expected", complex_json(c.expected)},
                    {"tolerance", c.tolerance},
                    {"margin", c.margin()},
                    {"passed", c.passed},
                    {"note", c.note}});
  }
  return list;
}

void print_checks(std::ostream& out, const std::vector<CheckResult>& checks) {
  char line[512];
  std::snprintf(line, sizeof line, "%-6s %-42s %-26s %-26s %s\n", "status", "check", "computed", "expected",
                "margin");
  out << line;
  for (const auto& c : checks) {
    std::snprintf(line, sizeof line, "%-6s %-42s %-26s %-26s %.3e%s%s\n", c.passed ? "PASS" : "FAIL",
                  c.name.c_str(), format_number(c.computed).c_str(), format_number(c.expected).c_str(), c.margin(),
                  c.note.empty() ? "" : "  ", c.note.c_str());
    out << line;
  }
}

// Writes the optional report; a failure here turns into exit status 2.
int finish(const CommandIo& io, json report, int status) {
  if (!io.report) return status;
  report["tool_version"] = kToolVersion;
  report["exit_status"] = status;
  try {
    write_file_atomically(*io.report, report.dump(2) + "\n");
  } catch (const IoError& e) {
    io.err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return status;
}

// Runs `body`, mapping the library's exception types to exit statuses.
template <class Body>
int guarded(const CommandIo& io, Body&& body) {
  try {
    return body();
  } catch (const IoError& e) {
    io.err << "error: " << e.what() << "\n";
  } catch (const ParseError& e) {
    io.err << "parse error: " << e.what() << "\n";
  } catch (const ValidationError& e) {
    io.err << "invalid input: " << e.what() << "\n";
  } catch (const PolicyError& e) {
    io.err << "policy violation: " << e.what() << "\n";
    return kExitCheckFailed;
  } catch (const DegenerateError& e) {
    io.err << "degenerate data: " << e.what() << "\n";
    return kExitCheckFailed;
  } catch (const DomainError& e) {
    io.err << "domain error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    io.err << "error: " << e.what() << "\n";
  }
  return kExitUsage;
}

}  // namespace

int cmd_identities(const CommandIo& io, std::optional<double> tolerance) {
  return guarded(io, [&] {
    if (tolerance && !(*tolerance >= 0.0)) throw ValidationError("--tol must be nonnegative");
    SuiteOptions options;
    options.tolerance = tolerance;
    std::vector<CheckResult> checks = identity_suite(options);
    std::vector<CheckResult> bounds = bound_suite(options);
    checks.insert(checks.end(), bounds.begin(), bounds.end());
    print_checks(io.out, checks);
    std::size_t failed = 0;
    for (const auto& c : checks) failed += c.passed ? 0 : 1;
    io.out << checks.size() - failed << "/" << checks.size() << " checks passed\n";
    const int status = failed == 0 ? kExitOk : kExitCheckFailed;
    return finish(io, {{"command", "identities"}, {"checks", checks_json(checks)}, {"passed", failed == 0}}, status);
  });
}

int cmd_solve(const CommandIo& io, const std::filesystem::path& case_path, int n_r, int n_theta, bool with_gradient,
              const std::filesystem::path& out_path) {
  return guarded(io, [&] {
    const CaseFile c = parse_case(case_path);
    const Solver solver(c.data, c.sizes);
    GridOptions options;
    options.with_gradient = with_gradient;
    const SolutionField field = solver.solve_grid(n_r, n_theta, options);
    write_file_atomically(out_path, serialize_field(field));
    io.out << "wrote " << field.nodes.size() << " rows to " << out_path.string() << " (fingerprint "
           << field.fingerprint << ")\n";
    const std::size_t holes = field.holes();
    if (holes > 0) io.err << "warning: " << holes << " nodes could not be evaluated\n";
    const int status = holes == 0 ? kExitOk : kExitCheckFailed;
    return finish(io,
                  {{"command", "solve"},
                   {"out", out_path.string()},
                   {"fingerprint", field.fingerprint},
                   {"rows", field.nodes.size()},
                   {"holes", holes}},
                  status);
  });
}

int cmd_verify(const CommandIo& io, const std::filesystem::path& case_path, double fd_h, double fd_tolerance) {
  return guarded(io, [&] {
    const CaseFile c = parse_case(case_path);
    const Solver solver(c.data, c.sizes);
    std::vector<CheckResult> checks =
        gradient_crosscheck(solver, {DiskPoint(0.0, 0.0), DiskPoint(0.3, 0.2), DiskPoint(0.0, -0.45),
                                     DiskPoint(0.6, 0.0), DiskPoint(-0.5, 0.5)});
    for (auto& t : boundary_trace_check(c.data, {0.98, 0.99}, {}, c.sizes)) checks.push_back(std::move(t));
    FdOptions fd;
    fd.tolerance = fd_tolerance;
    checks.push_back(fd_bilaplacian_residual(solver, fd_h, fd).check);
    print_checks(io.out, checks);
    const bool ok = all_passed(checks);
    io.out << (ok ? "all checks passed\n" : "some checks FAILED\n");
    return finish(io, {{"command", "verify"}, {"checks", checks_json(checks)}, {"passed", ok}},
                  ok ? kExitOk : kExitCheckFailed);
  });
}

int cmd_lipschitz(const CommandIo& io, const std::filesystem::path& case_path) {
  return guarded(io, [&] {
    const CaseFile c = parse_case(case_path);
    const Solver solver(c.data, c.sizes);
    const CaseAnalysis a = analyze_case(c.data, solver.rules());
    const SolutionField field = solver.solve_grid(32, 64);
    QuotientOptions q;
    if (c.seed) q.seed = *c.seed;
    const QuotientEstimate quotient = empirical_quotient_estimate(field, q);
    const LipschitzReport& r = a.report;

    char buf[160];
    auto row = [&](const char* name, double value) {
      std::snprintf(buf, sizeof buf, "%-28s %.12g\n", name, value);
      io.out << buf;
    };
    row("L (boundary Lipschitz)", r.l_boundary);
    row("|h|_inf", r.h_sup);
    row("|g|_inf (certified)", r.g_sup);
    row("|g|_inf (sampled)", a.g_sup_sampled);
    row("P", r.p_upper);
    row("A = |Phi_z(0)|^2", r.a_value);
    row("B = |Phi_zbar(0)|^2", r.b_value);
    row("Q = A - B", r.q_value);
    row("A (closed formula)", a.ab.literal_a);
    row("B (closed formula)", a.ab.literal_b);
    row("A (Green sign toggled)", a.ab.toggled_a);
    row("B (Green sign toggled)", a.ab.toggled_b);
    row("upper bound", r.upper_bound);
    row("lower bound", r.lower_bound);
    row("empirical quotient", quotient.value);
    std::snprintf(buf, sizeof buf, "%-28s %zu\n", "quotient pairs", quotient.pairs);
    io.out << buf;
    io.out << "verdict                      " << to_string(r.verdict) << "\n";

    json report = {{"command", "lipschitz"},
                   {"l_boundary", r.l_boundary},
                   {"h_sup", r.h_sup},
                   {"g_sup", r.g_sup},
                   {"g_sup_sampled", a.g_sup_sampled},
                   {"p_upper", r.p_upper},
                   {"a_value", r.a_value},
                   {"b_value", r.b_value},
                   {"q_value", r.q_value},
                   {"a_literal", a.ab.literal_a},
                   {"b_literal", a.ab.literal_b},
                   {"a_toggled", a.ab.toggled_a},
                   {"b_toggled", a.ab.toggled_b},
                   {"lower_bound", r.lower_bound},
                   {"upper_bound", r.upper_bound},
                   {"verdict", to_string(r.verdict)},
                   {"empirical_quotient", quotient.value},
                   {"quotient_pairs", quotient.pairs}};
    return finish(io, std::move(report), kExitOk);
  });
}

int cmd_kernel(const CommandIo& io, KernelName which, Complex z, std::optional<Complex> zeta) {
  return guarded(io, [&] {
    if (zeta && which != KernelName::g) throw ValidationError("--zeta only applies to G");
    const DiskPoint p(z);
    double value = 0.0;
    const char* name = "";
    switch (which) {
      case KernelName::f0:
        name = "F0";
        value = f0_eval(p);
        break;
      case KernelName::h0:
        name = "H0";
        value = h0_eval(p);
        break;
      case KernelName::g:
        name = "G";
        if (!zeta) throw ValidationError("--zeta is required for G");
        value = g_eval(p, DiskPoint(*zeta));
        break;
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    io.out << name << " = " << buf << "\n";
    json report = {{"command", "kernel"}, {"which", name}, {"z", complex_json(z)}, {"value", value}};
    if (zeta) report["zeta"] = complex_json(*zeta);
    return finish(io, std::move(report), kExitOk);
  });
}

}  // namespace biharmonic
