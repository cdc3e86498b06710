#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "chatelet/arith.hpp"
#include "chatelet/surface.hpp"

namespace chatelet {

// Height condition applied to a solution (y, z, t) over the fiber (u, v).
enum class HeightMode {
    FullNorm,  // sup norm of (v^2 t, u v t, u^2 t, y, z) <= B  (torsor height)
    FiberBox,  // max(v^2 |t|, |y|, |z|) <= B                   (per-fiber box)
};

// Primitive solution (y, z, t) over the primitive fiber (u, v):
// y^2 - a z^2 = t^2 F(u,v), gcd(y,z,t) = 1, gcd(u,v) = 1, t != 0.
struct TorsorPoint {
    int64_t y = 0, z = 0, t = 0;
    int64_t u = 0, v = 0;

    // Exact re-check of every invariant plus the height condition.
    bool check(const Surface& s, int64_t B, HeightMode mode) const;
    // Image (v^2 t, u v t, u^2 t, y, z) in P^4.
    std::array<int64_t, 5> p4_image() const;
};

struct CountOptions {
    int64_t max_B = 20000;       // torsor enumeration budget
    int64_t oracle_max_B = 500;  // P^4 oracle budget
    int workers = 0;             // 0: CHATELET_WORKERS env, else hardware
    std::function<void(const std::string&)> progress;  // diagnostic sink
};

struct TorsorCount {
    int64_t T = 0;
    int64_t N = 0;  // T / 4, division exact (asserted)
};

// Exact count of primitive (y,z,t) over one fiber under the given height
// mode, both signs of t. Degenerate fibers (F(u,v) = 0) contribute exactly
// (0,0,+-1). Requires a < 0 and gcd(u,v) = 1; FiberBox additionally needs
// v != 0. Optionally materializes the points.
int64_t fiber_count(const Surface& s, int64_t u, int64_t v, int64_t B, HeightMode mode,
                    std::vector<TorsorPoint>* points = nullptr);

// T(B): all primitive (y,z,t;u,v) with sup norm of (v^2 t, uvt, u^2 t, y, z)
// at most B, and N(B) = T(B)/4. Every primitive (u,v) participates; there
// is no |u| <= |v| restriction here.
TorsorCount torsor_count(const Surface& s, int64_t B, const CountOptions& opt = {});

struct FiberSummary {
    int64_t u = 0, v = 0;
    int64_t F = 0;      // F(u, v)
    int64_t count = 0;  // fiber_count in FullNorm mode
};

// Per-fiber breakdown over representatives (v >= 1, plus (1,0)); each row
// stands for itself and its mirror (-u,-v), which has identical F and
// count, so T = 2 * sum of counts.
std::vector<FiberSummary> torsor_fiber_breakdown(const Surface& s, int64_t B,
                                                 const CountOptions& opt = {});

// N(B) recomputed through the P^4 model: half the number of primitive
// 5-vectors of sup norm <= B on the del Pezzo surface, by direct nested
// enumeration pruned on x0 x2 = x1^2. Independent of the torsor pipeline.
int64_t oracle_count(const Surface& s, int64_t B, const CountOptions& opt = {});

struct IsotropyVerdict {
    mpq_class theta;              // isotropy weight of |F(u,v)|
    bool locally_solvable = false;  // conic has points in R and every Q_p
};

// Requires F(u,v) != 0 (degenerate fibers are handled exactly by
// fiber_count and are rejected here).
IsotropyVerdict isotropy_filter(const Surface& s, int64_t u, int64_t v);

// S(U,V) = sum over |u| <= U, |v| <= V of the sieve weight of |F(u,v)|,
// with weight 0 at F = 0; no primitivity restriction. Exact.
mpq_class sieve_sum(const Surface& s, int64_t U, int64_t V, const CountOptions& opt = {});

struct EulerProduct {
    mpq_class value;  // exact rational
    double approx = 1.0;
    uint64_t limit = 0;
    uint64_t primes_used = 0;  // primes contributing a factor != 1
};

// prod over primes p <= U, p not dividing 2 a disc(g) lc(g), of
// (1 + rho_g(p) (a/p) / p). Exact; evaluated with a segmented prime
// iterator.
EulerProduct euler_product(const IntPoly& g, int64_t a, uint64_t U);
EulerProduct euler_product(const RatPoly& g, int64_t a, uint64_t U);

struct FactorEuler {
    std::string factor;  // printable monic factor
    bool member = false;  // sqrt(a) in Q[x]/(factor)
    EulerProduct product;
};

// Factor-wise products E_{f_1}(U), ..., E_{f_r}(U) for the surface's f.
std::vector<FactorEuler> euler_products_by_factor(const Surface& s, uint64_t U);

struct FilterStats {
    int64_t B = 0;
    int64_t fibers = 0;             // |u| <= |v| <= sqrt(B), primitive, F != 0
    int64_t theta_zero = 0;         // killed by the isotropy weight
    int64_t locally_unsolvable = 0; // killed by the exact local test
    int64_t degenerate = 0;         // F = 0 fibers excluded from the set
};

FilterStats filter_stats(const Surface& s, int64_t B, const CountOptions& opt = {});

struct FiberBoxBound {
    double max_ratio = 0.0;  // max of M v^2 / (B 2^{omega(|F|)})
    int64_t at_u = 0, at_v = 0;
    int64_t fibers = 0;
};

// Empirical check of the per-fiber bound M_{u,v}(B) << 2^{omega(F)} (1 + B/v^2)
// over the |u| <= |v| fibers: the observed constant is reported, not pinned.
FiberBoxBound fiber_box_bound_stats(const Surface& s, int64_t B, const CountOptions& opt = {});

struct CountRow {
    int64_t B = 0;
    int64_t N = 0;
    int64_t T = 0;
    double ratio = 0.0;  // N / (B (ln B)^{rho - 1})
    std::optional<double> beta_secant;  // slope of log N between grid points
};

struct DyadicRow {
    int i = 0, j = 0;        // |u| in (2^i, 2^{i+1}], |v| in (2^j, 2^{j+1}]
    mpq_class block;         // sum of weight/v^2 over the block
    mpq_class box_bound;     // S(2^{i+1}, 2^{j+1}) / 2^{2j}
};

struct CountReport {
    std::string engine_version;
    std::string norm;  // "sup"
    int64_t a = 0;
    std::array<int64_t, 5> f{};
    std::string label;
    int rho = 0;
    bool oracle_checked = false;
    std::vector<CountRow> rows;
    std::vector<DyadicRow> dyadic;  // diagnostic blocks for the last grid B
    int64_t dyadic_B = 0;

    std::string to_csv() const;
    std::string to_json() const;
};

struct GrowthOptions : CountOptions {
    bool with_oracle = false;  // assert N == oracle_count per row (small B)
    bool dyadic = false;       // append the dyadic diagnostic
};

// Grid must be strictly increasing with every value >= 2.
CountReport growth_report(const Surface& s, const std::vector<int64_t>& grid,
                          const GrowthOptions& opt = {});

}  // namespace chatelet
