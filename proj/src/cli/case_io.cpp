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


#include "biharmonic/case_io.hpp"

#include "json.hpp"

#include <algorithm>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <unistd.h>

namespace biharmonic {

using nlohmann::json;

namespace {

[[noreturn]] void invalid(const std::string& field, const std::string& what) {
  throw ValidationError(field + ": " + what);
}

void reject_unknown(const json& obj, const std::string& field, std::initializer_list<const char*> allowed) {
  if (!obj.is_object()) invalid(field, "expected an object");
  for (const auto& [key, value] : obj.items()) {
    if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return key == a; })) {
      invalid(field.empty() ? key : field + "." + key, "unknown key");
    }
  }
}

double number(const json& v, const std::string& field) {
  if (!v.is_number()) invalid(field, "expected a number");
  return v.get<double>();
}

long long integer(const json& v, const std::string& field) {
  if (!v.is_number_integer()) invalid(field, "expected an integer");
  return v.get<long long>();
}

const json& array(const json& v, const std::string& field, std::size_t arity = 0) {
  if (!v.is_array()) invalid(field, "expected an array");
  if (arity != 0 && v.size() != arity) invalid(field, "expected " + std::to_string(arity) + " entries");
  return v;
}

BoundaryData parse_boundary(const json& spec, const std::string& field) {
  reject_unknown(spec, field, {"fourier", "n_samples", "samples"});
  const bool has_fourier = spec.contains("fourier");
  const bool has_samples = spec.contains("samples");
  if (has_fourier && has_samples) invalid(field, "give either \"fourier\" or \"samples\", not both");
  if (spec.contains("n_samples") && !has_fourier) invalid(field + ".n_samples", "only allowed with \"fourier\"");
  try {
    if (has_samples) {
      std::vector<Complex> samples;
      const json& list = array(spec["samples"], field + ".samples");
      for (std::size_t k = 0; k < list.size(); ++k) {
        const std::string at = field + ".samples[" + std::to_string(k) + "]";
        const json& pair = array(list[k], at, 2);
        samples.emplace_back(number(pair[0], at), number(pair[1], at));
      }
      return BoundaryData(std::move(samples));
    }
    std::vector<FourierMode> modes;
    if (has_fourier) {
      const json& list = array(spec["fourier"], field + ".fourier");
      for (std::size_t k = 0; k < list.size(); ++k) {
        const std::string at = field + ".fourier[" + std::to_string(k) + "]";
        const json& triple = array(list[k], at, 3);
        const long long mode = integer(triple[0], at);
        if (mode < -(1LL << 20) || mode > (1LL << 20)) invalid(at, "mode out of range");
        modes.push_back({static_cast<int>(mode), Complex(number(triple[1], at), number(triple[2], at))});
      }
    }
    int n = 0;
    if (spec.contains("n_samples")) {
      const long long v = integer(spec["n_samples"], field + ".n_samples");
      if (v < 4 || v > (1LL << 22)) invalid(field + ".n_samples", "must lie in [4, 2^22]");
      n = static_cast<int>(v);
    }
    return BoundaryData::from_fourier(modes, n);
  } catch (const ValidationError& e) {
    const std::string msg = e.what();
    if (msg.rfind(field, 0) == 0) throw;
    invalid(field, msg);
  }
}

SourceTerm parse_source(const json& spec) {
  reject_unknown(spec, "g", {"terms"});
  std::vector<Monomial> terms;
  if (spec.contains("terms")) {
    const json& list = array(spec["terms"], "g.terms");
    for (std::size_t k = 0; k < list.size(); ++k) {
      const std::string at = "g.terms[" + std::to_string(k) + "]";
      const json& quad = array(list[k], at, 4);
      const long long a = integer(quad[0], at);
      const long long b = integer(quad[1], at);
      if (a < 0 || b < 0) invalid(at, "negative exponent");
      if (a > SourceTerm::kMaxExponent || b > SourceTerm::kMaxExponent) {
        invalid(at, "exponent exceeds " + std::to_string(SourceTerm::kMaxExponent));
      }
      terms.push_back({static_cast<int>(a), static_cast<int>(b), Complex(number(quad[2], at), number(quad[3], at))});
    }
  }
  return SourceTerm(std::move(terms));
}

QuadratureSizes parse_sizes(const json& spec) {
  reject_unknown(spec, "quadrature",
                 {"circle_nodes", "disk_radial", "disk_angular", "centered_inner_panels", "centered_outer_panels",
                  "centered_order"});
  QuadratureSizes s;
  auto read = [&](const char* key, int& target, long long lo, long long hi) {
    if (!spec.contains(key)) return;
    const std::string at = std::string("quadrature.") + key;
    const long long v = integer(spec[key], at);
    if (v < lo || v > hi) invalid(at, "must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    target = static_cast<int>(v);
  };
  read("circle_nodes", s.circle_nodes, 4, kMaxCircleNodes);
  read("disk_radial", s.disk_radial, 1, 4096);
  read("disk_angular", s.disk_angular, 1, 65536);
  read("centered_inner_panels", s.centered.inner_panels, 1, 4096);
  read("centered_outer_panels", s.centered.outer_panels, 1, 4096);
  read("centered_order", s.centered.order, 1, 64);
  return s;
}

json boundary_json(const BoundaryData& d) {
  json samples = json::array();
  for (const Complex& v : d.samples()) samples.push_back({v.real(), v.imag()});
  return {{"samples", std::move(samples)}};
}

}  // namespace

CaseFile parse_case_text(std::string_view text) {
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // Translate the byte offset into line and column.
    const std::size_t offset = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    const std::size_t line = 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + offset, '\n'));
    const std::size_t last_nl = text.rfind('\n', offset == 0 ? 0 : offset - 1);
    const std::size_t column = last_nl == std::string_view::npos || offset == 0 ? offset + 1 : offset - last_nl;
    throw ParseError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + e.what());
  }
  reject_unknown(root, "", {"schema", "f", "h", "g", "quadrature", "seed"});
  if (root.contains("schema") && integer(root["schema"], "schema") != kSchemaVersion) {
    invalid("schema", "unsupported version (expected " + std::to_string(kSchemaVersion) + ")");
  }
  CaseFile c;
  if (root.contains("f")) c.data.f = parse_boundary(root["f"], "f");
  if (root.contains("h")) c.data.h = parse_boundary(root["h"], "h");
  if (root.contains("g")) c.data.g = parse_source(root["g"]);
  if (root.contains("quadrature")) c.sizes = parse_sizes(root["quadrature"]);
  if (root.contains("seed")) {
    const json& s = root["seed"];
    if (!s.is_number_unsigned()) invalid("seed", "expected a nonnegative integer");
    c.seed = s.get<std::uint64_t>();
  }
  return c;
}

CaseFile parse_case(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open case file " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  if (in.bad()) throw IoError("cannot read case file " + path.string());
  return parse_case_text(text.str());
}

std::string serialize_case(const CaseFile& c) {
  json root;
  root["schema"] = kSchemaVersion;
  root["f"] = boundary_json(c.data.f);
  root["h"] = boundary_json(c.data.h);
  json terms = json::array();
  for (const auto& t : c.data.g.terms()) terms.push_back({t.a, t.b, t.c.real(), t.c.imag()});
  root["g"] = {{"terms", std::move(terms)}};
  root["quadrature"] = {{"circle_nodes", c.sizes.circle_nodes},
                        {"disk_radial", c.sizes.disk_radial},
                        {"disk_angular", c.sizes.disk_angular},
                        {"centered_inner_panels", c.sizes.centered.inner_panels},
                        {"centered_outer_panels", c.sizes.centered.outer_panels},
                        {"centered_order", c.sizes.centered.order}};
  if (c.seed) root["seed"] = *c.seed;
  return root.dump(2) + "\n";
}

std::string serialize_field(const SolutionField& field) {
  json root;
  root["schema"] = kSchemaVersion;
  root["tool_version"] = kToolVersion;
  root["fingerprint"] = field.fingerprint;
  root["n_r"] = field.n_r;
  root["n_theta"] = field.n_theta;
  root["with_gradient"] = field.with_gradient;
  json columns = {"r", "theta", "re", "im"};
  if (field.with_gradient) {
    for (const char* name : {"dz_re", "dz_im", "dzbar_re", "dzbar_im"}) columns.push_back(name);
  }
  root["columns"] = std::move(columns);
  json rows = json::array();
  json holes = json::array();
  for (std::size_t k = 0; k < field.nodes.size(); ++k) {
    const FieldNode& node = field.nodes[k];
    json row = {node.r, node.theta};
    if (node.value) {
      row.push_back(node.value->real());
      row.push_back(node.value->imag());
    } else {
      row.push_back(nullptr);
      row.push_back(nullptr);
      holes.push_back({{"row", k}, {"error", node.error}});
    }
    if (field.with_gradient) {
      if (node.gradient) {
        for (double v : {node.gradient->d_z.real(), node.gradient->d_z.imag(), node.gradient->d_zbar.real(),
                         node.gradient->d_zbar.imag()}) {
          row.push_back(v);
        }
      } else {
        for (int i = 0; i < 4; ++i) row.push_back(nullptr);
      }
    }
    rows.push_back(std::move(row));
  }
  root["rows"] = std::move(rows);
  root["holes"] = std::move(holes);
  return root.dump() + "\n";
}

void write_file_atomically(const std::filesystem::path& path, std::string_view contents) {
  namespace fs = std::filesystem;
  const fs::path dir = path.has_parent_path() ? path.parent_path() : fs::path(".");
  const fs::path tmp = dir / ("." + path.filename().string() + ".tmp." + std::to_string(::getpid()));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + path.string());
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    out.close();
    if (!out) {
      std::error_code ec;
      fs::remove(tmp, ec);
      throw IoError("failed while writing " + path.string());
    }
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw IoError("cannot move output into place at " + path.string());
  }
}

}  // namespace biharmonic
