#include "chatelet/count.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <future>
#include <sstream>
#include <thread>

#include "chatelet/checked.hpp"
#include "chatelet/prime_sieve.hpp"

namespace chatelet {

namespace {

int resolve_workers(const CountOptions& opt) {
    if (opt.workers > 0) return opt.workers;
    if (const char* env = std::getenv("CHATELET_WORKERS")) {
        int n = std::atoi(env);
        if (n > 0) return n;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

// Splits [begin, end] into contiguous chunks and evaluates fn(lo, hi) on a
// thread per chunk. Partials come back in chunk order, so any exact
// reduction is schedule-independent.
template <typename Partial, typename Fn>
std::vector<Partial> run_stripes(int64_t begin, int64_t end, int workers, Fn fn) {
    std::vector<Partial> partials;
    if (begin > end) return partials;
    int64_t span = end - begin + 1;
    int chunks = static_cast<int>(std::min<int64_t>(workers, span));
    if (chunks <= 1) {
        partials.push_back(fn(begin, end));
        return partials;
    }
    std::vector<std::future<Partial>> futs;
    int64_t chunk = span / chunks;
    int64_t rem = span % chunks;
    int64_t lo = begin;
    for (int i = 0; i < chunks; ++i) {
        int64_t hi = lo + chunk - 1 + (i < rem ? 1 : 0);
        futs.push_back(std::async(std::launch::async, [=]() { return fn(lo, hi); }));
        lo = hi + 1;
    }
    for (auto& f : futs) partials.push_back(f.get());
    return partials;
}

int64_t gcd3(int64_t x, int64_t y, int64_t z) {
    return static_cast<int64_t>(
        std::gcd(std::gcd(checked_abs_u64(x), checked_abs_u64(y)), checked_abs_u64(z)));
}

// Count and optionally collect the primitive solutions over one fiber,
// t > 0 only; the caller doubles for -t. F must be the exact form value.
int64_t fiber_positive_t(const Surface& s, int64_t u, int64_t v, int64_t F, int64_t B,
                         int64_t tmax, std::vector<TorsorPoint>* points) {
    if (tmax < 1) return 0;
    if (F < 0) return 0;  // a < 0 makes y^2 - a z^2 positive semidefinite
    if (F == 0) {
        // y = z = 0 forced; gcd(0,0,t) = t keeps only t = 1.
        if (points) {
            points->push_back({0, 0, 1, u, v});
            points->push_back({0, 0, -1, u, v});
        }
        return 1;
    }
    const int64_t abs_a = -s.a();
    int64_t count = 0;
    for (int64_t t = 1; t <= tmax; ++t) {
        int64_t m = checked_mul(checked_mul(t, t), F);
        int64_t zmax = static_cast<int64_t>(isqrt_u64(static_cast<uint64_t>(m / abs_a)));
        zmax = std::min(zmax, B);
        for (int64_t z = 0; z <= zmax; ++z) {
            uint64_t rest = static_cast<uint64_t>(m - abs_a * z * z);
            uint64_t y;
            if (!perfect_square_u64(rest, &y)) continue;
            if (y > static_cast<uint64_t>(B)) continue;
            int64_t ys = static_cast<int64_t>(y);
            if (gcd3(ys, z, t) != 1) continue;
            int64_t mult = (ys > 0 ? 2 : 1) * (z > 0 ? 2 : 1);
            count += mult;
            if (points) {
                for (int sy : {1, -1}) {
                    if (ys == 0 && sy < 0) continue;
                    for (int sz : {1, -1}) {
                        if (z == 0 && sz < 0) continue;
                        for (int st : {1, -1}) {
                            points->push_back({sy * ys, sz * z, st * t, u, v});
                        }
                    }
                }
            }
        }
    }
    return count;
}

// Height weight that bounds |t|: the largest of the P^4 monomial weights
// for FullNorm, or v^2 for the per-fiber box.
int64_t t_weight(int64_t u, int64_t v, HeightMode mode) {
    int64_t uu = checked_mul(u, u);
    int64_t vv = checked_mul(v, v);
    return mode == HeightMode::FullNorm ? std::max(uu, vv) : vv;
}

}  // namespace

bool TorsorPoint::check(const Surface& s, int64_t B, HeightMode mode) const {
    if (t == 0) return false;
    if (gcd3(y, z, t) != 1) return false;
    if (std::gcd(checked_abs_u64(u), checked_abs_u64(v)) != 1) return false;
    mpz_class lhs = mpz_class(y) * y - mpz_class(s.a()) * z * z;
    mpz_class rhs = mpz_class(t) * t * s.form().eval_z(mpz_class(u), mpz_class(v));
    if (lhs != rhs) return false;
    mpz_class bb(B);
    mpz_class vt = abs(mpz_class(v) * v * t);
    mpz_class ut = abs(mpz_class(u) * u * t);
    mpz_class uvt = abs(mpz_class(u) * v * t);
    if (abs(mpz_class(y)) > bb || abs(mpz_class(z)) > bb || vt > bb) return false;
    if (mode == HeightMode::FullNorm && (ut > bb || uvt > bb)) return false;
    return true;
}

std::array<int64_t, 5> TorsorPoint::p4_image() const {
    return {checked_mul(checked_mul(v, v), t), checked_mul(checked_mul(u, v), t),
            checked_mul(checked_mul(u, u), t), y, z};
}

int64_t fiber_count(const Surface& s, int64_t u, int64_t v, int64_t B, HeightMode mode,
                    std::vector<TorsorPoint>* points) {
    s.require_counting_regime();
    if (B < 1) throw InvalidArgument("fiber_count: B must be positive");
    if (std::gcd(checked_abs_u64(u), checked_abs_u64(v)) != 1) {
        throw InvalidArgument("fiber_count: (u,v) must be coprime");
    }
    if (mode == HeightMode::FiberBox && v == 0) {
        throw InvalidArgument("fiber_count: the per-fiber box needs v != 0");
    }
    int64_t w = t_weight(u, v, mode);
    int64_t tmax = w > 0 ? B / w : 0;
    int64_t F = eval_form(s.form(), u, v);
    int64_t half = fiber_positive_t(s, u, v, F, B, tmax, points);
    return 2 * half;
}

namespace {

struct StripeResult {
    int64_t T = 0;
    std::vector<FiberSummary> fibers;
};

StripeResult torsor_stripe(const Surface& s, int64_t B, int64_t v_lo, int64_t v_hi,
                           bool keep_fibers) {
    StripeResult out;
    int64_t root = static_cast<int64_t>(isqrt_u64(static_cast<uint64_t>(B)));
    for (int64_t v = v_lo; v <= v_hi; ++v) {
        int64_t vv = v * v;
        for (int64_t u = -root; u <= root; ++u) {
            if (std::gcd(checked_abs_u64(u), static_cast<uint64_t>(v)) != 1) continue;
            int64_t w = std::max(u * u, vv);
            int64_t tmax = B / w;
            if (tmax < 1) continue;
            int64_t F = eval_form(s.form(), u, v);
            int64_t c = 2 * fiber_positive_t(s, u, v, F, B, tmax, nullptr);
            // The mirror fiber (-u,-v) has the same form value and count.
            out.T = checked_add(out.T, 2 * c);
            if (keep_fibers && c > 0) out.fibers.push_back({u, v, F, c});
        }
    }
    return out;
}

std::pair<int64_t, std::vector<FiberSummary>> torsor_scan(const Surface& s, int64_t B,
                                                          const CountOptions& opt,
                                                          bool keep_fibers) {
    s.require_counting_regime();
    if (B < 1) throw InvalidArgument("torsor_count: B must be positive");
    if (B > opt.max_B) {
        throw BudgetError("torsor_count: B = " + std::to_string(B) +
                          " exceeds the enumeration budget " + std::to_string(opt.max_B));
    }
    int64_t root = static_cast<int64_t>(isqrt_u64(static_cast<uint64_t>(B)));
    int workers = resolve_workers(opt);
    auto partials = run_stripes<StripeResult>(
        1, root, workers,
        [&](int64_t lo, int64_t hi) { return torsor_stripe(s, B, lo, hi, keep_fibers); });

    int64_t T = 0;
    std::vector<FiberSummary> fibers;
    // Fibers (1,0) and (-1,0): the only primitive pairs with v = 0.
    {
        int64_t F = eval_form(s.form(), 1, 0);
        int64_t c = 2 * fiber_positive_t(s, 1, 0, F, B, B, nullptr);
        T = checked_add(T, 2 * c);
        if (keep_fibers && c > 0) fibers.push_back({1, 0, F, c});
    }
    for (auto& part : partials) {
        T = checked_add(T, part.T);
        if (keep_fibers) {
            fibers.insert(fibers.end(), part.fibers.begin(), part.fibers.end());
        }
    }
    if (opt.progress) {
        opt.progress("torsor B=" + std::to_string(B) + " done (T=" + std::to_string(T) + ")");
    }
    return {T, std::move(fibers)};
}

}  // namespace

TorsorCount torsor_count(const Surface& s, int64_t B, const CountOptions& opt) {
    auto [T, fibers] = torsor_scan(s, B, opt, false);
    if (T % 4 != 0) throw Error("internal: T(B) not divisible by 4");
    return {T, T / 4};
}

std::vector<FiberSummary> torsor_fiber_breakdown(const Surface& s, int64_t B,
                                                 const CountOptions& opt) {
    auto [T, fibers] = torsor_scan(s, B, opt, true);
    (void)T;
    std::sort(fibers.begin(), fibers.end(), [](const FiberSummary& a, const FiberSummary& b) {
        return std::pair(a.v, a.u) < std::pair(b.v, b.u);
    });
    return fibers;
}

namespace {

// Local exact square root for the oracle; kept separate from the torsor
// pipeline's helpers on purpose.
bool oracle_square(int64_t n, int64_t* root) {
    if (n < 0) return false;
    int64_t r = static_cast<int64_t>(std::llround(std::sqrt(static_cast<double>(n))));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    if (r * r != n) return false;
    *root = r;
    return true;
}

int64_t gcd5(const std::array<int64_t, 5>& x) {
    uint64_t g = 0;
    for (int64_t c : x) g = std::gcd(g, checked_abs_u64(c));
    return static_cast<int64_t>(g);
}

}  // namespace

int64_t oracle_count(const Surface& s, int64_t B, const CountOptions& opt) {
    s.require_counting_regime();
    if (B < 0) throw InvalidArgument("oracle_count: B must be nonnegative");
    if (B > opt.oracle_max_B) {
        throw BudgetError("oracle_count: B = " + std::to_string(B) +
                          " exceeds the oracle budget " + std::to_string(opt.oracle_max_B));
    }
    if (B == 0) return 0;
    const auto& q = s.delpezzo().q;
    const int64_t abs_a = -s.a();
    int64_t total = 0;
    for (int64_t x0 = -B; x0 <= B; ++x0) {
        for (int64_t x2 = -B; x2 <= B; ++x2) {
            int64_t prod = x0 * x2;
            int64_t r;
            if (!oracle_square(prod, &r)) continue;
            const int n_x1 = (r == 0) ? 1 : 2;
            for (int ix = 0; ix < n_x1; ++ix) {
                int64_t x1 = (ix == 0) ? r : -r;
                int64_t Q = checked_add(
                    checked_add(checked_mul(q[0], x0 * x0), checked_mul(q[1], x0 * x1)),
                    checked_add(checked_add(checked_mul(q[2], x0 * x2), checked_mul(q[3], x1 * x2)),
                                checked_mul(q[4], x2 * x2)));
                if (Q < 0) continue;
                int64_t x3_hi = std::min(B, static_cast<int64_t>(isqrt_u64(static_cast<uint64_t>(Q))));
                for (int64_t x3 = 0; x3 <= x3_hi; ++x3) {
                    int64_t rest = Q - x3 * x3;
                    if (rest % abs_a != 0) continue;
                    int64_t w = rest / abs_a;
                    int64_t x4;
                    if (!oracle_square(w, &x4)) continue;
                    if (x4 > B) continue;
                    if (gcd5({x0, x1, x2, x3, x4}) != 1) continue;
                    int64_t mult = (x3 > 0 ? 2 : 1) * (x4 > 0 ? 2 : 1);
                    total += mult;
                }
            }
        }
    }
    if (total % 2 != 0) throw Error("internal: odd primitive-vector count on the model");
    return total / 2;
}

IsotropyVerdict isotropy_filter(const Surface& s, int64_t u, int64_t v) {
    int64_t F = eval_form(s.form(), u, v);
    if (F == 0) {
        throw InvalidArgument("isotropy_filter: degenerate fiber (F(u,v) = 0)");
    }
    IsotropyVerdict verdict;
    verdict.theta = isotropy_weight(factorize(F), s.a());
    verdict.locally_solvable = locally_isotropic(s.a(), F);
    return verdict;
}

mpq_class sieve_sum(const Surface& s, int64_t U, int64_t V, const CountOptions& opt) {
    if (U < 0 || V < 0) throw InvalidArgument("sieve_sum: U, V must be nonnegative");
    const int64_t a = s.a();
    auto row_weight = [&](int64_t u, int64_t v) -> mpq_class {
        int64_t F = eval_form(s.form(), u, v);
        if (F == 0) return mpq_class(0);  // weight of 0 is 0 by convention
        return sieve_weight(factorize(F), a);
    };

    int workers = resolve_workers(opt);
    auto partials = run_stripes<mpq_class>(1, V, workers, [&](int64_t lo, int64_t hi) {
        mpq_class acc(0);
        for (int64_t v = lo; v <= hi; ++v) {
            for (int64_t u = -U; u <= U; ++u) acc += row_weight(u, v);
        }
        return acc;
    });

    mpq_class total(0);
    for (const auto& part : partials) total += part;
    mpq_class axis(0);
    for (int64_t u = 1; u <= U; ++u) axis += row_weight(u, 0);
    // (u,v) and (-u,-v) carry the same weight; (0,0) carries none.
    return 2 * (total + axis);
}

EulerProduct euler_product(const IntPoly& g, int64_t a, uint64_t U) {
    require_nonsquare(a);
    if (U < 2) throw InvalidArgument("euler_product: U must be >= 2");
    if (g.degree() < 1) throw InvalidArgument("euler_product: polynomial must be nonconstant");

    mpz_class bad = mpz_class(2) * mpz_class(a) * mpz_class(g.leading());
    if (g.degree() >= 2) bad *= discriminant(g);
    bad = abs(bad);

    mpz_class num = 1, den = 1;
    uint64_t used = 0;
    SegmentedPrimeSieve sieve(U);
    sieve.for_each([&](uint64_t p) {
        if (mpz_divisible_ui_p(bad.get_mpz_t(), p)) return true;
        int64_t rho = count_roots_mod_p(g, p);
        if (rho == 0) return true;
        int chi = jacobi(a, p);  // p odd: 2 | bad always
        if (chi == 0) return true;
        num *= mpz_class(static_cast<long>(p)) + rho * chi;
        den *= mpz_class(static_cast<long>(p));
        ++used;
        return true;
    });

    EulerProduct out;
    out.value = mpq_class(num, den);
    out.value.canonicalize();
    out.approx = out.value.get_d();
    out.limit = U;
    out.primes_used = used;
    return out;
}

EulerProduct euler_product(const RatPoly& g, int64_t a, uint64_t U) {
    return euler_product(integer_model(g), a, U);
}

std::vector<FactorEuler> euler_products_by_factor(const Surface& s, uint64_t U) {
    std::vector<FactorEuler> out;
    const auto& fq = s.factorization();
    for (size_t i = 0; i < fq.factors.size(); ++i) {
        FactorEuler fe;
        fe.factor = fq.factors[i].first.to_string();
        fe.member = s.factor_membership()[i];
        fe.product = euler_product(fq.factors[i].first, s.a(), U);
        out.push_back(std::move(fe));
    }
    return out;
}

FilterStats filter_stats(const Surface& s, int64_t B, const CountOptions& opt) {
    if (B < 1) throw InvalidArgument("filter_stats: B must be positive");
    int64_t root = static_cast<int64_t>(isqrt_u64(static_cast<uint64_t>(B)));

    struct Part {
        int64_t fibers = 0, theta_zero = 0, unsolvable = 0, degenerate = 0;
    };
    int workers = resolve_workers(opt);
    auto partials = run_stripes<Part>(1, root, workers, [&](int64_t lo, int64_t hi) {
        Part part;
        for (int64_t v = lo; v <= hi; ++v) {
            for (int64_t u = -v; u <= v; ++u) {
                if (std::gcd(checked_abs_u64(u), static_cast<uint64_t>(v)) != 1) continue;
                int64_t F = eval_form(s.form(), u, v);
                if (F == 0) {
                    part.degenerate += 1;
                    continue;
                }
                part.fibers += 1;
                IsotropyVerdict iv = isotropy_filter(s, u, v);
                if (iv.theta == 0) part.theta_zero += 1;
                if (!iv.locally_solvable) part.unsolvable += 1;
            }
        }
        return part;
    });

    FilterStats stats;
    stats.B = B;
    for (const Part& p : partials) {
        // Each representative (v >= 1) also stands for its mirror (-u,-v).
        stats.fibers += 2 * p.fibers;
        stats.theta_zero += 2 * p.theta_zero;
        stats.locally_unsolvable += 2 * p.unsolvable;
        stats.degenerate += 2 * p.degenerate;
    }
    return stats;
}

FiberBoxBound fiber_box_bound_stats(const Surface& s, int64_t B, const CountOptions& opt) {
    s.require_counting_regime();
    if (B < 1) throw InvalidArgument("fiber_box_bound_stats: B must be positive");
    int64_t root = static_cast<int64_t>(isqrt_u64(static_cast<uint64_t>(B)));
    FiberBoxBound out;
    for (int64_t v = 1; v <= root; ++v) {
        for (int64_t u = -v; u <= v; ++u) {
            if (std::gcd(checked_abs_u64(u), static_cast<uint64_t>(v)) != 1) continue;
            int64_t F = eval_form(s.form(), u, v);
            if (F == 0) continue;
            out.fibers += 1;
            int64_t M = fiber_count(s, u, v, B, HeightMode::FiberBox);
            if (M == 0) continue;
            int omega = factorize(F).omega();
            double ratio = static_cast<double>(M) * static_cast<double>(v) * static_cast<double>(v) /
                           (static_cast<double>(B) * std::ldexp(1.0, omega));
            if (ratio > out.max_ratio) {
                out.max_ratio = ratio;
                out.at_u = u;
                out.at_v = v;
            }
        }
    }
    (void)opt;
    return out;
}

}  // namespace chatelet
