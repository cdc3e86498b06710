#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "chatelet/surface.hpp"

namespace chatelet {

// One surface per file, as a small JSON record:
//   {"a": -1, "f": [0, 1, 0, 1, 0], "label": "optional"}
// where f lists (c0..c4) with f(x) = c0 x^4 + c1 x^3 + c2 x^2 + c3 x + c4.
struct SurfaceSpec {
    int64_t a = 0;
    std::array<int64_t, 5> f{};
    std::string label;

    std::string to_json() const;
};

// Throws ParseError naming the offending field.
SurfaceSpec parse_surface_spec(const std::string& text);
SurfaceSpec load_surface_spec(const std::string& path);

// Parse + hypothesis validation in one step.
Surface load_surface(const std::string& path);

}  // namespace chatelet
