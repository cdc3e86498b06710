#include "chatelet/poly.hpp"

#include <algorithm>
#include <sstream>

#include "chatelet/arith.hpp"
#include "chatelet/checked.hpp"

namespace chatelet {

int IntPoly::degree() const {
    for (int i = 0; i < 5; ++i) {
        if (c[i] != 0) return 4 - i;
    }
    return -1;
}

int64_t IntPoly::leading() const {
    for (int i = 0; i < 5; ++i) {
        if (c[i] != 0) return c[i];
    }
    return 0;
}

bool IntPoly::is_zero() const { return degree() < 0; }

int64_t IntPoly::eval(int64_t x) const {
    int64_t acc = 0;
    for (int i = 0; i < 5; ++i) acc = checked_add(checked_mul(acc, x), c[i]);
    return acc;
}

mpz_class IntPoly::eval_z(const mpz_class& x) const {
    mpz_class acc = 0;
    for (int i = 0; i < 5; ++i) acc = acc * x + c[i];
    return acc;
}

namespace {

std::string monomial_str(int64_t coeff, const std::string& var, int pow, bool first) {
    std::ostringstream os;
    if (coeff == 0) return "";
    if (first) {
        if (coeff < 0) os << "-";
    } else {
        os << (coeff < 0 ? " - " : " + ");
    }
    uint64_t mag = checked_abs_u64(coeff);
    if (mag != 1 || pow == 0) os << mag;
    if (pow > 0) {
        os << var;
        if (pow > 1) os << "^" << pow;
    }
    return os.str();
}

}  // namespace

std::string IntPoly::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (int i = 0; i < 5; ++i) {
        std::string m = monomial_str(c[i], "x", 4 - i, first);
        if (!m.empty()) {
            out += m;
            first = false;
        }
    }
    return out;
}

int64_t BinaryForm::eval(int64_t u, int64_t v) const {
    // c0 u^4 + c1 u^3 v + c2 u^2 v^2 + c3 u v^3 + c4 v^4, Horner in u.
    int64_t acc = 0;
    int64_t vpow = 1;
    for (int i = 0; i < 5; ++i) {
        acc = checked_add(checked_mul(acc, u), checked_mul(c[i], vpow));
        if (i < 4) vpow = checked_mul(vpow, v);
    }
    return acc;
}

mpz_class BinaryForm::eval_z(const mpz_class& u, const mpz_class& v) const {
    mpz_class acc = 0;
    mpz_class vpow = 1;
    for (int i = 0; i < 5; ++i) {
        acc = acc * u + c[i] * vpow;
        if (i < 4) vpow *= v;
    }
    return acc;
}

std::string BinaryForm::to_string() const {
    bool all_zero = true;
    std::string out;
    bool first = true;
    for (int i = 0; i < 5; ++i) {
        if (c[i] == 0) continue;
        all_zero = false;
        std::ostringstream os;
        if (first) {
            if (c[i] < 0) os << "-";
        } else {
            os << (c[i] < 0 ? " - " : " + ");
        }
        uint64_t mag = checked_abs_u64(c[i]);
        int up = 4 - i, vp = i;
        if (mag != 1 || (up == 0 && vp == 0)) os << mag;
        if (up > 0) { os << "u"; if (up > 1) os << "^" << up; }
        if (vp > 0) { os << "v"; if (vp > 1) os << "^" << vp; }
        out += os.str();
        first = false;
    }
    return all_zero ? "0" : out;
}

BinaryForm homogenize(const IntPoly& f) {
    int d = f.degree();
    if (d != 3 && d != 4) throw InvalidArgument("homogenize: degree must be 3 or 4");
    return BinaryForm{f.c};
}

int64_t eval_form(const BinaryForm& F, int64_t u, int64_t v) { return F.eval(u, v); }

namespace {

// Fraction-free Bareiss determinant; exact over Z.
mpz_class det_bareiss(std::vector<std::vector<mpz_class>> m) {
    const size_t n = m.size();
    mpz_class denom = 1;
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
            if (swap_row == n) return 0;
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                mpz_class num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_class q;
                mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), denom.get_mpz_t());
                m[i][j] = q;
            }
            m[i][k] = 0;
        }
        denom = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

// Sylvester resultant of integer polynomials given ascending.
mpz_class resultant(const std::vector<mpz_class>& f, const std::vector<mpz_class>& g) {
    int df = static_cast<int>(f.size()) - 1;
    int dg = static_cast<int>(g.size()) - 1;
    size_t n = static_cast<size_t>(df + dg);
    std::vector<std::vector<mpz_class>> m(n, std::vector<mpz_class>(n, mpz_class(0)));
    for (int row = 0; row < dg; ++row) {
        for (int i = 0; i <= df; ++i) m[row][row + i] = f[df - i];
    }
    for (int row = 0; row < df; ++row) {
        for (int i = 0; i <= dg; ++i) m[dg + row][row + i] = g[dg - i];
    }
    return det_bareiss(std::move(m));
}

}  // namespace

mpz_class discriminant(const IntPoly& f) {
    int n = f.degree();
    if (n < 2) throw InvalidArgument("discriminant: degree must be at least 2");
    std::vector<mpz_class> fa, da;  // ascending coefficients of f and f'
    for (int k = 0; k <= n; ++k) fa.push_back(mpz_class(f.c[4 - k]));
    for (int k = 1; k <= n; ++k) da.push_back(mpz_class(f.c[4 - k]) * k);
    mpz_class res = resultant(fa, da);
    mpz_class lc(f.leading());
    mpz_class disc;
    mpz_divexact(disc.get_mpz_t(), res.get_mpz_t(), lc.get_mpz_t());
    if (((n * (n - 1)) / 2) % 2 != 0) disc = -disc;
    return disc;
}

// --- root counting mod p ------------------------------------------------

namespace {

// Dense polynomial over F_p, ascending coefficients, trailing zeros stripped.
struct PolyModP {
    uint64_t p;
    std::vector<uint64_t> a;

    void strip() {
        while (!a.empty() && a.back() == 0) a.pop_back();
    }
    int deg() const { return static_cast<int>(a.size()) - 1; }
};

PolyModP reduce_mod_p(const IntPoly& f, uint64_t p) {
    PolyModP r{p, {}};
    r.a.resize(5);
    for (int k = 0; k <= 4; ++k) {
        int64_t c = f.c[4 - k];
        int64_t m = c % static_cast<int64_t>(p);
        if (m < 0) m += static_cast<int64_t>(p);
        r.a[k] = static_cast<uint64_t>(m);
    }
    r.strip();
    return r;
}

PolyModP mul_mod(const PolyModP& x, const PolyModP& y) {
    PolyModP r{x.p, {}};
    if (x.a.empty() || y.a.empty()) return r;
    r.a.assign(x.a.size() + y.a.size() - 1, 0);
    for (size_t i = 0; i < x.a.size(); ++i) {
        if (x.a[i] == 0) continue;
        for (size_t j = 0; j < y.a.size(); ++j) {
            r.a[i + j] = (r.a[i + j] + mulmod_u64(x.a[i], y.a[j], x.p)) % x.p;
        }
    }
    r.strip();
    return r;
}

// x mod m, m monic-normalized on the fly (m nonconstant).
PolyModP rem_mod(PolyModP x, const PolyModP& m) {
    uint64_t p = x.p;
    uint64_t lead_inv = powmod_u64(m.a.back(), p - 2, p);
    while (x.deg() >= m.deg()) {
        uint64_t scale = mulmod_u64(x.a.back(), lead_inv, p);
        size_t shift = x.a.size() - m.a.size();
        for (size_t i = 0; i < m.a.size(); ++i) {
            uint64_t sub = mulmod_u64(scale, m.a[i], p);
            uint64_t& slot = x.a[shift + i];
            slot = (slot + p - sub) % p;
        }
        x.strip();
        if (x.a.empty()) break;
    }
    return x;
}

PolyModP gcd_mod(PolyModP a, PolyModP b) {
    while (!b.a.empty()) {
        PolyModP r = rem_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

}  // namespace

int64_t count_roots_mod_p(const IntPoly& f, uint64_t p) {
    if (!is_prime(p)) throw InvalidArgument("count_roots_mod_p: p must be prime");
    if (f.is_zero()) throw InvalidArgument("count_roots_mod_p: zero polynomial");
    PolyModP fp = reduce_mod_p(f, p);
    if (fp.a.empty()) return static_cast<int64_t>(p);  // f vanishes identically mod p
    if (fp.deg() == 0) return 0;
    if (fp.deg() == 1) return 1;  // a x + b with a nonzero: one root
    // #roots = deg gcd(x^p - x, f mod p). Compute x^p mod f by binary
    // exponentiation, then subtract x.
    PolyModP x{p, {0, 1}};
    PolyModP acc{p, {1}};
    PolyModP base = rem_mod(x, fp);
    uint64_t e = p;
    while (e > 0) {
        if (e & 1) acc = rem_mod(mul_mod(acc, base), fp);
        base = rem_mod(mul_mod(base, base), fp);
        e >>= 1;
    }
    // acc = x^p mod fp; form acc - x.
    if (acc.a.size() < 2) acc.a.resize(2, 0);
    acc.a[1] = (acc.a[1] + p - 1) % p;
    acc.strip();
    PolyModP g = gcd_mod(fp, acc);
    return std::max(0, g.deg());
}

// --- RatPoly --------------------------------------------------------------

RatPoly::RatPoly(std::vector<mpq_class> ascending) : a_(std::move(ascending)) { normalize(); }

void RatPoly::normalize() {
    while (!a_.empty() && a_.back() == 0) a_.pop_back();
}

RatPoly RatPoly::from_int(const IntPoly& f) {
    std::vector<mpq_class> a;
    for (int k = 0; k <= 4; ++k) a.emplace_back(f.c[4 - k]);
    return RatPoly(std::move(a));
}

RatPoly RatPoly::constant(const mpq_class& v) { return RatPoly({v}); }

RatPoly RatPoly::x_power(int k) {
    std::vector<mpq_class> a(static_cast<size_t>(k) + 1, mpq_class(0));
    a.back() = 1;
    return RatPoly(std::move(a));
}

const mpq_class& RatPoly::leading() const {
    static const mpq_class zero(0);
    return a_.empty() ? zero : a_.back();
}

mpq_class RatPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(a_.size())) return mpq_class(0);
    return a_[static_cast<size_t>(k)];
}

mpq_class RatPoly::eval(const mpq_class& x) const {
    mpq_class acc(0);
    for (auto it = a_.rbegin(); it != a_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

RatPoly RatPoly::derivative() const {
    std::vector<mpq_class> d;
    for (size_t k = 1; k < a_.size(); ++k) d.push_back(a_[k] * mpq_class(static_cast<long>(k)));
    return RatPoly(std::move(d));
}

RatPoly RatPoly::monic() const {
    if (is_zero()) throw InvalidArgument("monic: zero polynomial");
    std::vector<mpq_class> m;
    for (const auto& q : a_) m.push_back(q / a_.back());
    return RatPoly(std::move(m));
}

RatPoly RatPoly::shifted(const mpq_class& c) const {
    // Horner-style composition with (x + c).
    RatPoly acc;
    RatPoly xc({c, mpq_class(1)});
    for (auto it = a_.rbegin(); it != a_.rend(); ++it) {
        acc = acc * xc + RatPoly::constant(*it);
    }
    return acc;
}

RatPoly RatPoly::scaled_var(const mpq_class& k) const {
    std::vector<mpq_class> out;
    mpq_class pw(1);
    for (size_t i = 0; i < a_.size(); ++i) {
        out.push_back(a_[i] * pw);
        pw *= k;
    }
    return RatPoly(std::move(out));
}

RatPoly RatPoly::operator+(const RatPoly& o) const {
    std::vector<mpq_class> s(std::max(a_.size(), o.a_.size()), mpq_class(0));
    for (size_t i = 0; i < a_.size(); ++i) s[i] += a_[i];
    for (size_t i = 0; i < o.a_.size(); ++i) s[i] += o.a_[i];
    return RatPoly(std::move(s));
}

RatPoly RatPoly::operator-(const RatPoly& o) const {
    std::vector<mpq_class> s(std::max(a_.size(), o.a_.size()), mpq_class(0));
    for (size_t i = 0; i < a_.size(); ++i) s[i] += a_[i];
    for (size_t i = 0; i < o.a_.size(); ++i) s[i] -= o.a_[i];
    return RatPoly(std::move(s));
}

RatPoly RatPoly::operator*(const RatPoly& o) const {
    if (is_zero() || o.is_zero()) return RatPoly();
    std::vector<mpq_class> s(a_.size() + o.a_.size() - 1, mpq_class(0));
    for (size_t i = 0; i < a_.size(); ++i) {
        if (a_[i] == 0) continue;
        for (size_t j = 0; j < o.a_.size(); ++j) s[i + j] += a_[i] * o.a_[j];
    }
    return RatPoly(std::move(s));
}

RatPoly RatPoly::operator*(const mpq_class& s) const {
    std::vector<mpq_class> out;
    for (const auto& q : a_) out.push_back(q * s);
    return RatPoly(std::move(out));
}

std::pair<RatPoly, RatPoly> RatPoly::divmod(const RatPoly& d) const {
    if (d.is_zero()) throw InvalidArgument("divmod: division by zero polynomial");
    std::vector<mpq_class> r(a_);
    int dd = d.degree();
    int dr = static_cast<int>(r.size()) - 1;
    if (dr < dd) return {RatPoly(), *this};
    std::vector<mpq_class> q(static_cast<size_t>(dr - dd) + 1, mpq_class(0));
    for (int k = dr; k >= dd; --k) {
        mpq_class coef = r[static_cast<size_t>(k)] / d.a_.back();
        q[static_cast<size_t>(k - dd)] = coef;
        if (coef == 0) continue;
        for (int i = 0; i <= dd; ++i) {
            r[static_cast<size_t>(k - dd + i)] -= coef * d.a_[static_cast<size_t>(i)];
        }
    }
    r.resize(static_cast<size_t>(std::max(dd, 0)));
    return {RatPoly(std::move(q)), RatPoly(std::move(r))};
}

std::string RatPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        mpq_class c = coeff(k);
        if (c == 0) continue;
        bool neg = c < 0;
        mpq_class mag = neg ? mpq_class(-c) : c;
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        if (mag != 1 || k == 0) os << mag.get_str();
        if (k > 0) {
            os << "x";
            if (k > 1) os << "^" << k;
        }
        first = false;
    }
    return os.str();
}

RatPoly gcd_monic(RatPoly a, RatPoly b) {
    while (!b.is_zero()) {
        RatPoly r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.monic();
}

RatPoly FactorizationQ::reassemble() const {
    RatPoly prod = RatPoly::constant(content);
    for (const auto& [g, m] : factors) {
        for (int i = 0; i < m; ++i) prod = prod * g;
    }
    return prod;
}

// --- factorization over Q -------------------------------------------------

namespace {

std::vector<int64_t> signed_divisors(int64_t n) {
    // All divisors of |n|, both signs.
    FactoredInteger f = factorize(n);
    std::vector<uint64_t> divs{1};
    for (const auto& [p, e] : f.factors) {
        size_t old = divs.size();
        uint64_t pe = 1;
        for (int i = 1; i <= e; ++i) {
            pe *= p;
            for (size_t j = 0; j < old; ++j) divs.push_back(divs[j] * pe);
        }
    }
    std::vector<int64_t> out;
    for (uint64_t d : divs) {
        out.push_back(static_cast<int64_t>(d));
        out.push_back(-static_cast<int64_t>(d));
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Integer model as ascending mpz coefficients plus the removed rational
// content, so content * model == input exactly.
std::pair<std::vector<mpz_class>, mpq_class> primitive_model(const RatPoly& f) {
    mpz_class den_lcm = 1;
    for (int k = 0; k <= f.degree(); ++k) {
        mpq_class c = f.coeff(k);
        mpz_class d = c.get_den();
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
        den_lcm = den_lcm / g * d;
    }
    std::vector<mpz_class> zs;
    mpz_class num_gcd = 0;
    for (int k = 0; k <= f.degree(); ++k) {
        mpq_class c = f.coeff(k) * mpq_class(den_lcm);
        zs.push_back(c.get_num());  // denominator is 1 by construction
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), zs.back().get_mpz_t());
    }
    if (num_gcd == 0) num_gcd = 1;
    if (zs.back() < 0) num_gcd = -num_gcd;
    for (auto& z : zs) {
        mpz_class q;
        mpz_divexact(q.get_mpz_t(), z.get_mpz_t(), num_gcd.get_mpz_t());
        z = q;
    }
    mpq_class content(num_gcd, den_lcm);
    content.canonicalize();
    return {zs, content};
}


// All monic linear factors (x - root), removed from poly as found.
std::vector<mpq_class> extract_rational_roots(RatPoly& poly) {
    std::vector<mpq_class> roots;
    bool progress = true;
    while (progress && poly.degree() >= 1) {
        progress = false;
        // Root zero first.
        if (poly.coeff(0) == 0) {
            roots.emplace_back(0);
            auto [q, r] = poly.divmod(RatPoly({mpq_class(0), mpq_class(1)}));
            poly = q;
            progress = true;
            continue;
        }
        auto [zs, content] = primitive_model(poly);
        (void)content;
        mpz_class lead = zs.back(), cons = zs.front();
        if (!lead.fits_slong_p() || !cons.fits_slong_p()) {
            throw OverflowError("rational root search: coefficients exceed int64");
        }
        for (int64_t p : signed_divisors(cons.get_si())) {
            bool found = false;
            for (int64_t q : signed_divisors(lead.get_si())) {
                if (q <= 0) continue;  // denominators positive; sign lives in p
                if (std::gcd(checked_abs_u64(p), static_cast<uint64_t>(q)) != 1) continue;
                mpq_class cand(p, q);
                cand.canonicalize();
                if (poly.eval(cand) == 0) {
                    roots.push_back(cand);
                    auto [quot, rem] = poly.divmod(RatPoly({-cand, mpq_class(1)}));
                    if (!rem.is_zero()) throw Error("internal: nonzero remainder after root division");
                    poly = quot;
                    found = true;
                    progress = true;
                    break;
                }
            }
            if (found) break;
        }
    }
    return roots;
}

// Exhaustive search for a factorization of a primitive integer quartic
// (no rational roots) into two integer quadratics. Returns the two monic
// factors if found.
bool split_quartic(const std::vector<mpz_class>& zs, RatPoly& g1, RatPoly& g2) {
    const mpz_class& A = zs[4];
    const mpz_class& B = zs[3];
    const mpz_class& C = zs[2];
    const mpz_class& D = zs[1];
    const mpz_class& E = zs[0];
    if (!A.fits_slong_p() || !E.fits_slong_p()) {
        throw OverflowError("quadratic factor search: coefficients exceed int64");
    }
    // Landau-Mignotte bound on |b1| over all integer quadratic factors.
    mpz_class norm2 = 0;
    for (const auto& z : zs) norm2 += z * z;
    mpz_class norm = sqrt(norm2) + 1;
    mpz_class b_bound = 4 * norm;  // 2^deg(g) * ||f||_2, deg(g) = 2

    for (int64_t a1 : signed_divisors(A.get_si())) {
        if (a1 <= 0) continue;  // overall sign normalization
        mpz_class a2q = A / a1;
        for (int64_t c1 : signed_divisors(E.get_si())) {
            mpz_class a2 = a2q;
            mpz_class c2 = E / c1;
            // Solve a2 b1 + a1 b2 = B ; c2 b1 + c1 b2 = D.
            mpz_class det = a2 * c1 - mpz_class(a1) * c2;
            if (det != 0) {
                mpz_class num1 = B * c1 - mpz_class(a1) * D;
                mpz_class num2 = a2 * D - B * c2;
                if (num1 % det != 0 || num2 % det != 0) continue;
                mpz_class b1 = num1 / det;
                mpz_class b2 = num2 / det;
                if (mpz_class(a1) * c2 + a2 * c1 + b1 * b2 != C) continue;
                g1 = RatPoly({mpq_class(c1), mpq_class(b1), mpq_class(a1)}).monic();
                g2 = RatPoly({mpq_class(c2), mpq_class(b2), mpq_class(a2)}).monic();
                return true;
            }
            // Degenerate system: scan b1 within the coefficient bound.
            for (mpz_class b1 = -b_bound * a1; b1 <= b_bound * a1; ++b1) {
                mpz_class rem = B - a2 * b1;
                if (rem % a1 != 0) continue;
                mpz_class b2 = rem / a1;
                if (c2 * b1 + c1 * b2 != D) continue;
                if (mpz_class(a1) * c2 + a2 * c1 + b1 * b2 != C) continue;
                g1 = RatPoly({mpq_class(c1), mpq_class(b1), mpq_class(a1)}).monic();
                g2 = RatPoly({mpq_class(c2), mpq_class(b2), mpq_class(a2)}).monic();
                return true;
            }
        }
    }
    return false;
}

}  // namespace

FactorizationQ factor_over_Q(const RatPoly& f) {
    if (f.is_zero()) throw InvalidArgument("factor_over_Q: zero polynomial");
    if (f.degree() > 4) throw InvalidArgument("factor_over_Q: degree must be <= 4");

    FactorizationQ out;
    out.content = f.leading();
    if (f.degree() == 0) {
        out.content = f.coeff(0);
        return out;
    }
    RatPoly work = f.monic();

    // Squarefree kernel; multiplicities are recovered afterwards by
    // repeated division (degree <= 4 keeps this cheap).
    RatPoly sf = work;
    RatPoly g = gcd_monic(work, work.derivative());
    if (g.degree() >= 1) sf = work.divmod(g).first.monic();

    std::vector<RatPoly> irreducibles;
    RatPoly rest = sf;
    for (const mpq_class& root : extract_rational_roots(rest)) {
        irreducibles.push_back(RatPoly({-root, mpq_class(1)}));
    }
    if (rest.degree() == 2 || rest.degree() == 3) {
        // No rational roots: irreducible at these degrees.
        irreducibles.push_back(rest.monic());
    } else if (rest.degree() == 4) {
        auto [zs, content] = primitive_model(rest);
        (void)content;
        RatPoly g1, g2;
        if (split_quartic(zs, g1, g2)) {
            irreducibles.push_back(g1);
            irreducibles.push_back(g2);
        } else {
            irreducibles.push_back(rest.monic());
        }
    } else if (rest.degree() == 1) {
        irreducibles.push_back(rest.monic());
    }

    // Deduplicate (sf is squarefree so factors are distinct) and recover
    // multiplicities against the full polynomial.
    for (const RatPoly& h : irreducibles) {
        int mult = 0;
        RatPoly probe = work;
        while (true) {
            auto [q, r] = probe.divmod(h);
            if (!r.is_zero()) break;
            probe = q;
            ++mult;
        }
        out.factors.emplace_back(h, mult);
        work = probe;
    }
    if (work.degree() != 0) throw Error("internal: factorization left a nonconstant cofactor");
    out.content = out.content * work.coeff(0);  // residual unit from monic bookkeeping
    return out;
}

FactorizationQ factor_over_Q(const IntPoly& f) { return factor_over_Q(RatPoly::from_int(f)); }

RatPoly resolvent_cubic(const RatPoly& g) {
    if (g.degree() != 4) throw InvalidArgument("resolvent_cubic: expected a quartic");
    if (g.leading() != 1) throw InvalidArgument("resolvent_cubic: quartic must be monic");
    if (g.coeff(3) != 0) throw InvalidArgument("resolvent_cubic: quartic must be depressed");
    mpq_class p = g.coeff(2), q = g.coeff(1), r = g.coeff(0);
    return RatPoly({4 * p * r - q * q, -4 * r, -p, mpq_class(1)});
}

IntPoly integer_model(const RatPoly& g) {
    if (g.is_zero()) throw InvalidArgument("integer_model: zero polynomial");
    if (g.degree() > 4) throw InvalidArgument("integer_model: degree must be <= 4");
    auto [zs, content] = primitive_model(g);
    (void)content;
    IntPoly out;
    for (int k = 0; k <= g.degree(); ++k) {
        if (!zs[static_cast<size_t>(k)].fits_slong_p()) {
            throw OverflowError("integer_model: coefficient exceeds int64");
        }
        out.c[static_cast<size_t>(4 - k)] = zs[static_cast<size_t>(k)].get_si();
    }
    return out;
}

}  // namespace chatelet
