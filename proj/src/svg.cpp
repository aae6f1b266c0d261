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


#include "squarepack/svg.hpp"

#include <charconv>
#include <cmath>

#include "squarepack/errors.hpp"

namespace squarepack {
namespace {

// Shortest round-trip decimal form.
std::string fmt(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

}  // namespace

SvgDocument render_svg(const Packing& packing, double scale,
                       std::size_t tail_from) {
  if (!(scale > 0.0) || !std::isfinite(scale)) {
    fail(ErrorKind::kPreconditionViolated, "scale must be positive");
  }
  const Rectangle& r = packing.rect;
  SvgDocument doc;
  doc.width = r.width() * scale;
  doc.height = r.height() * scale;
  doc.elements.reserve(packing.placements.size() + 1);
  doc.elements.push_back({0.0, 0.0, doc.width, doc.height, "enclosing"});
  for (std::size_t i = 0; i < packing.placements.size(); ++i) {
    const Placement& p = packing.placements[i];
    doc.elements.push_back({(p.x - r.x()) * scale, (p.y - r.y()) * scale,
                            p.side * scale, p.side * scale,
                            i >= tail_from ? "tail" : "prefix"});
  }
  return doc;
}

std::string SvgDocument::to_string() const {
  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
         fmt(width) + "\" height=\"" + fmt(height) + "\" viewBox=\"0 0 " +
         fmt(width) + " " + fmt(height) + "\">\n";
  out += "<style>"
         ".enclosing{fill:#ffffff;stroke:#000000}"
         ".prefix{fill:#8fb3d9;stroke:#1f3b57}"
         ".tail{fill:#f2b36f;stroke:#6b3d0c}"
         "</style>\n";
  out += "<g transform=\"translate(0," + fmt(height) + ") scale(1,-1)\">\n";
  for (const SvgRect& e : elements) {
    out += "<rect class=\"" + e.css_class + "\" x=\"" + fmt(e.x) + "\" y=\"" +
           fmt(e.y) + "\" width=\"" + fmt(e.width) + "\" height=\"" +
           fmt(e.height) + "\" vector-effect=\"non-scaling-stroke\"/>\n";
  }
  out += "</g>\n</svg>\n";
  return out;
}

}  // namespace squarepack
