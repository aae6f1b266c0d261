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


#pragma once

#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "squarepack/geometry.hpp"

namespace squarepack {

struct SvgRect {
  double x = 0.0;
  double y = 0.0;
  double width = 0.0;
  double height = 0.0;
  std::string css_class;  // "enclosing", "prefix" or "tail"
};

struct SvgDocument {
  double width = 0.0;  // pixels
  double height = 0.0;
  std::vector<SvgRect> elements;  // enclosing rect first, then placements

  std::string to_string() const;
};

// Placements at index >= tail_from are classed "tail", earlier ones
// "prefix". Coordinates are placement coordinates (relative to the
// rectangle's corner) times scale; a group transform flips y so the origin
// sits bottom-left. kPreconditionViolated unless scale > 0.
SvgDocument render_svg(const Packing& packing, double scale,
                       std::size_t tail_from =
                           std::numeric_limits<std::size_t>::max());

}  // namespace squarepack
