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


#include "squarepack/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <charconv>
#include <cmath>
#include <optional>
#include <ostream>

#include "squarepack/constants.hpp"
#include "squarepack/errors.hpp"
#include "squarepack/io.hpp"
#include "squarepack/reduction.hpp"
#include "squarepack/shelf.hpp"
#include "squarepack/svg.hpp"
#include "squarepack/whitespace.hpp"

namespace squarepack {
namespace {

double parse_decimal(const std::string& text, const char* what) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(v)) {
    fail(ErrorKind::kParseError,
         std::string(what) + " must be a decimal number, got '" + text + "'");
  }
  return v;
}

Rectangle parse_rect(const std::string& text) {
  const auto sep = text.find('x');
  if (sep == std::string::npos) {
    fail(ErrorKind::kParseError, "--rect must look like WxH, got '" + text + "'");
  }
  return Rectangle(parse_decimal(text.substr(0, sep), "rect width"),
                   parse_decimal(text.substr(sep + 1), "rect height"));
}

void emit(std::ostream& out, const io::json& j) { out << j.dump(2) << "\n"; }

struct Options {
  std::string F;
  std::string instance;
  std::string packing;
  std::string base;
  std::string tail;
  std::string rect;
  std::string mode;
  std::string tol = "1e-12";
  std::string c;
  std::string scale;
  std::string output;
  std::string toy_params;
  std::optional<std::size_t> n;
  std::optional<std::size_t> tail_from;
  int digits = kDefaultDigits;
  bool refined = false;
  bool integral = false;
  bool no_harmonic = false;
  bool attempt = false;
  bool trace = false;
};

int cmd_constants(const Options& o, std::ostream& out) {
  ConstantsOptions opts;
  opts.refined = o.refined;
  opts.integral = o.integral;
  opts.check_harmonic = !o.no_harmonic;
  opts.digits = o.digits;
  emit(out, io::to_json(compute_constants(FactorSpec::parse(o.F), opts)));
  return 0;
}

int cmd_pack(const Options& o, std::ostream& out) {
  const Instance inst = io::instance_from_json(io::read_json_file(o.instance));
  const auto policy =
      o.attempt ? PreconditionPolicy::kAttempt : PreconditionPolicy::kEnforce;
  Packing p;
  if (o.mode == "small-s1") {
    if (o.F.empty()) fail(ErrorKind::kParseError, "small-s1 needs --F");
    p = small_s1_pack(inst, FactorSpec::parse(o.F).value());
  } else {
    if (o.rect.empty()) fail(ErrorKind::kParseError, o.mode + " needs --rect");
    const Rectangle rect = parse_rect(o.rect);
    p = o.mode == "moon-moser" ? moon_moser_pack(inst, rect, policy)
                               : meir_moser_pack(inst, rect, policy);
  }
  emit(out, io::to_json(p));
  return 0;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const Packing p = io::packing_from_json(io::read_json_file(o.packing));
  const double tol = parse_decimal(o.tol, "--tol");
  if (!(tol >= 0.0)) fail(ErrorKind::kPreconditionViolated, "--tol must be >= 0");
  const VerificationReport report = verify_packing(p, tol);
  emit(out, io::to_json(report));
  return report.valid ? 0 : 1;
}

int cmd_whitespace(const Options& o, std::ostream& out) {
  WhitespaceJob job;
  job.base = io::packing_from_json(io::read_json_file(o.base));
  job.tail = io::instance_from_json(io::read_json_file(o.tail));
  job.F = FactorSpec::parse(o.F).value();
  job.c = o.c.empty() ? compute_c(job.F) : parse_decimal(o.c, "--c");
  job.n = o.n;
  const WhitespaceResult r = whitespace_pack_traced(job);
  emit(out, o.trace ? io::to_json(r) : io::to_json(r.packing));
  return 0;
}

int cmd_reduce(const Options& o, std::ostream& out) {
  const Instance inst = io::instance_from_json(io::read_json_file(o.instance));
  const FactorSpec F = FactorSpec::parse(o.F);
  PackParams params;
  if (o.toy_params.empty()) {
    params = PackParams::certified(F);
  } else {
    io::json j = io::read_json_file(o.toy_params);
    if (!j.is_object()) fail(ErrorKind::kParseError, "toy params must be an object");
    const double Fv = F.value();
    if (j.contains("F") && j["F"].is_number() &&
        std::fabs(j["F"].get<double>() - Fv) > 1e-12) {
      fail(ErrorKind::kPreconditionViolated, "toy params disagree with --F");
    }
    j["F"] = Fv;
    j["toy"] = true;
    params = io::pack_params_from_json(j);
  }
  emit(out, io::to_json(reduce_and_pack(inst, params)));
  return 0;
}

int cmd_render(const Options& o, std::ostream& out) {
  const Packing p = io::packing_from_json(io::read_json_file(o.packing));
  const double scale = parse_decimal(o.scale, "--scale");
  const SvgDocument doc = o.tail_from ? render_svg(p, scale, *o.tail_from)
                                      : render_svg(p, scale);
  if (o.output.empty()) {
    out << doc.to_string();
  } else {
    io::write_text_file(o.output, doc.to_string());
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Square packing toolkit", "squarepack"};
  app.require_subcommand(1);
  Options o;

  auto* constants = app.add_subcommand("constants", "Certified constants report");
  constants->add_option("--F", o.F, "Area factor (decimal or 'novotny')")->required();
  constants->add_flag("--refined", o.refined, "Also compute the refined delta");
  constants->add_flag("--integral-n0", o.integral, "Also use the integral N0");
  constants->add_flag("--no-harmonic", o.no_harmonic,
                      "Skip the direct harmonic-sum certificate");
  constants->add_option("--digits", o.digits, "Starting precision in digits");

  auto* pack = app.add_subcommand("pack", "Pack an instance by a criterion");
  pack->add_option("--mode", o.mode)
      ->required()
      ->check(CLI::IsMember({"moon-moser", "meir-moser", "small-s1"}));
  pack->add_option("--instance", o.instance)->required();
  pack->add_option("--rect", o.rect, "WxH");
  pack->add_option("--F", o.F, "Area factor for small-s1");
  pack->add_flag("--attempt", o.attempt, "Run even if the criterion fails");

  auto* verify = app.add_subcommand("verify", "Verify a packing");
  verify->add_option("--packing", o.packing)->required();
  verify->add_option("--tol", o.tol);

  auto* whitespace = app.add_subcommand("whitespace", "Pack a tail into whitespace");
  whitespace->add_option("--base", o.base)->required();
  whitespace->add_option("--tail", o.tail)->required();
  whitespace->add_option("--F", o.F)->required();
  whitespace->add_option("--c", o.c, "Defaults to c(F)");
  whitespace->add_option("--n", o.n, "Base square count");
  whitespace->add_flag("--trace", o.trace, "Include per-step region areas");

  auto* reduce = app.add_subcommand("reduce", "Run the case analysis");
  reduce->add_option("--instance", o.instance)->required();
  reduce->add_option("--F", o.F)->required();
  reduce->add_option("--toy-params", o.toy_params);

  auto* render = app.add_subcommand("render", "Render a packing as SVG");
  render->add_option("--packing", o.packing)->required();
  render->add_option("--scale", o.scale)->required();
  render->add_option("-o,--output", o.output);
  render->add_option("--tail-from", o.tail_from);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    emit(err, io::error_json(ErrorKind::kParseError, e.what()));
    return 1;
  }

  try {
    if (constants->parsed()) return cmd_constants(o, out);
    if (pack->parsed()) return cmd_pack(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    if (whitespace->parsed()) return cmd_whitespace(o, out);
    if (reduce->parsed()) return cmd_reduce(o, out);
    if (render->parsed()) return cmd_render(o, out);
  } catch (const Error& e) {
    emit(err, io::error_json(e.kind(), e.what()));
    return 1;
  }
  return 1;
}

}  // namespace squarepack
