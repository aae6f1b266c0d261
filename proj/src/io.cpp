// Copyright 2026 The squarepack Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "squarepack/io.hpp"

#include <fstream>

namespace squarepack::io {
namespace {

template <typename T>
T get(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    fail(ErrorKind::kParseError, std::string("missing field '") + key + "'");
  }
  return j.at(key).get<T>();
}

template <typename T>
std::optional<T> get_opt(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

// Runs a reader, mapping the JSON library's type errors onto kParseError.
template <typename F>
auto guarded(const char* what, F&& read) {
  try {
    return read();
  } catch (const json::exception& e) {
    fail(ErrorKind::kParseError, std::string(what) + ": " + e.what());
  }
}

}  // namespace

json to_json(const Rectangle& rect) {
  json j{{"w", rect.width()}, {"h", rect.height()}};
  if (rect.x() != 0.0 || rect.y() != 0.0) {
    j["x"] = rect.x();
    j["y"] = rect.y();
  }
  return j;
}

Rectangle rectangle_from_json(const json& j) {
  return guarded("rect", [&] {
    return Rectangle(get<double>(j, "w"), get<double>(j, "h"),
                     get_opt<double>(j, "x").value_or(0.0),
                     get_opt<double>(j, "y").value_or(0.0));
  });
}

json to_json(const Packing& packing) {
  json placements = json::array();
  for (const Placement& p : packing.placements) {
    placements.push_back({{"side", p.side}, {"x", p.x}, {"y", p.y}});
  }
  return {{"rect", to_json(packing.rect)}, {"placements", placements}};
}

Packing packing_from_json(const json& j) {
  return guarded("packing", [&] {
    Packing p{rectangle_from_json(get<json>(j, "rect")), {}};
    const json list = get<json>(j, "placements");
    if (!list.is_array()) fail(ErrorKind::kParseError, "placements must be an array");
    for (const json& e : list) {
      const double side = get<double>(e, "side");
      if (!(side >= 0.0)) fail(ErrorKind::kParseError, "negative side in packing");
      p.placements.push_back({side, get<double>(e, "x"), get<double>(e, "y")});
    }
    return p;
  });
}

json to_json(const Instance& inst) {
  return {{"sides", std::vector<double>(inst.sides().begin(), inst.sides().end())},
          {"total_area", inst.total_area()}};
}

Instance instance_from_json(const json& j) {
  return guarded("instance", [&] {
    auto sides = get<std::vector<double>>(j, "sides");
    for (double s : sides) {
      if (!(s >= 0.0)) fail(ErrorKind::kParseError, "negative side in instance");
    }
    return Instance(std::move(sides), get_opt<double>(j, "total_area"));
  });
}

json to_json(const VerificationReport& report) {
  json violations = json::array();
  for (const Violation& v : report.violations) {
    json e{{"kind", v.kind == Violation::Kind::kOutside ? "outside" : "overlap"},
           {"first", v.first},
           {"amount", v.amount}};
    if (v.kind == Violation::Kind::kOverlap) e["second"] = v.second;
    violations.push_back(e);
  }
  return {{"valid", report.valid}, {"violations", violations}};
}

VerificationReport verification_report_from_json(const json& j) {
  return guarded("verification report", [&] {
    VerificationReport r;
    r.valid = get<bool>(j, "valid");
    for (const json& e : get<json>(j, "violations")) {
      Violation v;
      const auto kind = get<std::string>(e, "kind");
      if (kind == "outside") {
        v.kind = Violation::Kind::kOutside;
      } else if (kind == "overlap") {
        v.kind = Violation::Kind::kOverlap;
        v.second = get<std::size_t>(e, "second");
      } else {
        fail(ErrorKind::kParseError, "unknown violation kind '" + kind + "'");
      }
      v.first = get<std::size_t>(e, "first");
      v.amount = get<double>(e, "amount");
      r.violations.push_back(v);
    }
    return r;
  });
}

json to_json(const FloorCertificate& cert) {
  return {{"name", cert.name},       {"lower", cert.lower},
          {"upper", cert.upper},     {"value", cert.value},
          {"certified", cert.certified}, {"digits", cert.digits}};
}

json to_json(const HarmonicCheck& check) {
  return {{"first", check.first}, {"last", check.last}, {"sum", check.sum},
          {"ln_bound", check.ln_bound}, {"passed", check.passed}};
}

json to_json(const ConstantsReport& r) {
  json j{{"F", r.F},
         {"F_value", r.F_value},
         {"c", r.c},
         {"delta_simple", r.delta_simple},
         {"N0_simple", r.N0_simple},
         {"N1", r.N1},
         {"N", r.N},
         {"digits", r.digits}};
  if (r.delta_refined) j["delta_refined"] = *r.delta_refined;
  if (r.delta1) j["delta1"] = *r.delta1;
  if (r.N0_integral) j["N0_integral"] = *r.N0_integral;
  if (r.N1_integral) j["N1_integral"] = *r.N1_integral;
  if (r.N_integral) j["N_integral"] = *r.N_integral;
  json certs = json::array();
  for (const auto& c : r.floor_certificates) certs.push_back(to_json(c));
  j["floor_certificates"] = certs;
  json checks = json::array();
  for (const auto& h : r.harmonic_checks) checks.push_back(to_json(h));
  j["harmonic_checks"] = checks;
  return j;
}

ConstantsReport constants_report_from_json(const json& j) {
  return guarded("constants report", [&] {
    ConstantsReport r;
    r.F = get<std::string>(j, "F");
    r.F_value = get<std::string>(j, "F_value");
    r.c = get<std::string>(j, "c");
    r.delta_simple = get<std::string>(j, "delta_simple");
    r.delta_refined = get_opt<std::string>(j, "delta_refined");
    r.delta1 = get_opt<std::string>(j, "delta1");
    r.N0_simple = get<std::int64_t>(j, "N0_simple");
    r.N1 = get<std::int64_t>(j, "N1");
    r.N = get<std::int64_t>(j, "N");
    r.N0_integral = get_opt<std::int64_t>(j, "N0_integral");
    r.N1_integral = get_opt<std::int64_t>(j, "N1_integral");
    r.N_integral = get_opt<std::int64_t>(j, "N_integral");
    r.digits = get<int>(j, "digits");
    for (const json& c : get<json>(j, "floor_certificates")) {
      r.floor_certificates.push_back(
          {get<std::string>(c, "name"), get<std::string>(c, "lower"),
           get<std::string>(c, "upper"), get<std::int64_t>(c, "value"),
           get<bool>(c, "certified"), get<int>(c, "digits")});
    }
    for (const json& h : get<json>(j, "harmonic_checks")) {
      r.harmonic_checks.push_back(
          {get<std::uint64_t>(h, "first"), get<std::uint64_t>(h, "last"),
           get<double>(h, "sum"), get<double>(h, "ln_bound"),
           get<bool>(h, "passed")});
    }
    if (r.floor_certificates.empty() || !r.all_certified()) {
      fail(ErrorKind::kFloorUncertified,
           "constants report carries an uncertified floor");
    }
    return r;
  });
}

json to_json(const PackParams& p) {
  return {{"F", p.F},   {"c", p.c},
          {"N0", p.N0}, {"N1", p.N1},
          {"N", p.N},   {"s1_threshold", p.s1_threshold},
          {"toy", p.toy}};
}

PackParams pack_params_from_json(const json& j) {
  return guarded("params", [&] {
    PackParams p;
    p.F = get<double>(j, "F");
    p.c = get_opt<double>(j, "c").value_or(0.0);
    if (p.c == 0.0 && p.F >= 1.0) p.c = compute_c(p.F);
    p.N0 = get<std::int64_t>(j, "N0");
    p.N1 = get<std::int64_t>(j, "N1");
    p.N = get<std::int64_t>(j, "N");
    p.s1_threshold = get_opt<double>(j, "s1_threshold").value_or(0.1);
    p.toy = get_opt<bool>(j, "toy").value_or(false);
    validate(p);
    return p;
  });
}

json to_json(const ReductionResult& r) {
  json j{{"case", std::string(1, case_letter(r.which))},
         {"packing", to_json(r.packing)},
         {"params", to_json(r.params)}};
  if (r.index) j["index"] = *r.index;
  return j;
}

ReductionResult reduction_result_from_json(const json& j) {
  return guarded("reduction result", [&] {
    ReductionResult r;
    const auto which = get<std::string>(j, "case");
    if (which == "a") {
      r.which = ReductionCase::kSmallS1;
    } else if (which == "b") {
      r.which = ReductionCase::kGlue;
    } else if (which == "c") {
      r.which = ReductionCase::kWhitespace;
    } else {
      fail(ErrorKind::kParseError, "unknown case '" + which + "'");
    }
    r.packing = packing_from_json(get<json>(j, "packing"));
    r.params = pack_params_from_json(get<json>(j, "params"));
    r.index = get_opt<std::size_t>(j, "index");
    return r;
  });
}

json to_json(const WhitespaceResult& result) {
  json steps = json::array();
  for (const WhitespaceStep& s : result.steps) {
    steps.push_back({{"tail_index", s.tail_index},
                     {"side", s.side},
                     {"region_area", s.region_area},
                     {"bound", s.bound},
                     {"center", {s.center.x, s.center.y}}});
  }
  return {{"packing", to_json(result.packing)}, {"steps", steps}};
}

WhitespaceResult whitespace_result_from_json(const json& j) {
  return guarded("whitespace result", [&] {
    WhitespaceResult r;
    r.packing = packing_from_json(get<json>(j, "packing"));
    for (const json& e : get<json>(j, "steps")) {
      const auto center = get<std::vector<double>>(e, "center");
      if (center.size() != 2) fail(ErrorKind::kParseError, "center needs two numbers");
      r.steps.push_back({get<std::size_t>(e, "tail_index"), get<double>(e, "side"),
                         get<double>(e, "region_area"), get<double>(e, "bound"),
                         {center[0], center[1]}});
    }
    return r;
  });
}

json error_json(ErrorKind kind, const std::string& message) {
  return {{"error", {{"kind", std::string(to_string(kind))}, {"message", message}}}};
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::kIoError, "cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    fail(ErrorKind::kParseError, "'" + path + "': " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorKind::kIoError, "cannot write '" + path + "'");
  out << text;
  if (!out) fail(ErrorKind::kIoError, "write to '" + path + "' failed");
}

}  // namespace squarepack::io
