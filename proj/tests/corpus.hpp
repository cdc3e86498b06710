#pragma once

// Shared regression corpus: a < 0 surfaces with hand-derived Picard ranks,
// mixing degree 3 and 4 and all three rank values. Rank entries follow
// from the quadratic square-class test (a * disc square), the odd-degree
// obstruction, and the known quadratic subfields of the quartic fields
// involved; every entry is re-checked by the prime-scanning probe in the
// acceptance suite.

#include <array>
#include <cstdint>
#include <vector>

#include "chatelet/surface.hpp"

struct CorpusEntry {
    int64_t a;
    std::array<int64_t, 5> f;  // c0..c4
    int rho;
    const char* label;
};

inline const std::vector<CorpusEntry>& counting_corpus() {
    static const std::vector<CorpusEntry> corpus = {
        {-1, {0, 1, 0, 1, 0}, 3, "x^3+x, a=-1"},
        {-1, {0, 1, 0, -1, 0}, 2, "x^3-x, a=-1"},
        {-1, {0, 1, 0, 0, 2}, 2, "x^3+2, a=-1"},
        {-1, {1, 0, 3, 0, 2}, 3, "(x^2+1)(x^2+2), a=-1"},
        {-1, {1, 0, 5, 0, 4}, 4, "(x^2+1)(x^2+4), a=-1"},
        {-2, {0, 1, 0, 1, 0}, 2, "x^3+x, a=-2"},
        {-2, {1, 0, 3, 0, 2}, 3, "(x^2+1)(x^2+2), a=-2"},
        {-2, {1, 0, 20, 0, 36}, 4, "(x^2+2)(x^2+18), a=-2"},
        {-5, {1, 0, 0, 0, 1}, 2, "x^4+1, a=-5"},
        {-1, {1, 0, 0, 0, 1}, 3, "x^4+1, a=-1"},
        {-2, {1, 0, 0, 0, 1}, 3, "x^4+1, a=-2"},
        {-1, {1, 0, 0, 1, 1}, 2, "x^4+x+1, a=-1"},
        {-1, {0, 1, 0, 1, 1}, 2, "x^3+x+1, a=-1"},
        {-3, {0, 1, 0, -1, 0}, 2, "x^3-x, a=-3"},
        {-3, {1, 0, 4, 0, 3}, 3, "(x^2+1)(x^2+3), a=-3"},
        {-3, {1, 0, 15, 0, 36}, 4, "(x^2+3)(x^2+12), a=-3"},
        {-1, {1, 0, 2, 0, 2}, 3, "x^4+2x^2+2, a=-1"},
        {-6, {0, 1, 0, 1, 0}, 2, "x^3+x, a=-6"},
        {-1, {1, 0, 5, 0, 6}, 2, "(x^2+2)(x^2+3), a=-1"},
        {-1, {1, -1, 1, -1, 0}, 3, "x(x-1)(x^2+1), a=-1"},
        {-1, {1, 0, 3, 0, -4}, 3, "(x^2-1)(x^2+4), a=-1"},
        {-2, {1, 0, 10, 0, 16}, 4, "(x^2+2)(x^2+8), a=-2"},
        {-1, {0, 2, 0, 2, 0}, 3, "2x^3+2x, a=-1"},
        {-1, {-1, 0, 0, 0, -1}, 3, "-x^4-1 (no rational points), a=-1"},
        {-5, {0, 1, 0, 5, 0}, 3, "x(x^2+5), a=-5"},
        {-6, {1, 0, 30, 0, 144}, 4, "(x^2+6)(x^2+24), a=-6"},
    };
    return corpus;
}

inline chatelet::Surface make_surface(const CorpusEntry& e) {
    return chatelet::Surface::validate(e.a, e.f, e.label);
}
