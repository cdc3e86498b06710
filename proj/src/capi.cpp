#include "chatelet.h"

#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <string>

#include "chatelet/count.hpp"
#include "chatelet/spec_io.hpp"
#include "chatelet/version.hpp"

using nlohmann::json;

namespace {

thread_local std::string g_last_error;

chatelet_progress_fn g_progress_fn = nullptr;
void* g_progress_user = nullptr;

void emit_progress(const std::string& msg) {
    if (g_progress_fn) g_progress_fn(msg.c_str(), g_progress_user);
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

chatelet_status classify(const std::exception& e) {
    g_last_error = e.what();
    if (dynamic_cast<const chatelet::ParseError*>(&e)) return CHATELET_ERR_PARSE;
    if (dynamic_cast<const chatelet::HypothesisError*>(&e)) return CHATELET_ERR_HYPOTHESIS;
    if (dynamic_cast<const chatelet::RegimeError*>(&e)) return CHATELET_ERR_REGIME;
    if (dynamic_cast<const chatelet::BudgetError*>(&e)) return CHATELET_ERR_BUDGET;
    if (dynamic_cast<const chatelet::OverflowError*>(&e)) return CHATELET_ERR_OVERFLOW;
    if (dynamic_cast<const chatelet::InvalidArgument*>(&e)) return CHATELET_ERR_INVALID;
    return CHATELET_ERR_INTERNAL;
}

template <typename Fn>
chatelet_status guarded(Fn&& fn) {
    try {
        fn();
        return CHATELET_OK;
    } catch (const std::exception& e) {
        return classify(e);
    } catch (...) {
        g_last_error = "unknown error";
        return CHATELET_ERR_INTERNAL;
    }
}

json surface_echo(const chatelet::Surface& s) {
    json j;
    j["a"] = s.a();
    j["f"] = s.f().c;
    if (!s.label().empty()) j["label"] = s.label();
    return j;
}

chatelet::CountOptions make_options(int64_t max_B, int64_t oracle_max_B) {
    chatelet::CountOptions opt;
    if (max_B > 0) opt.max_B = max_B;
    if (oracle_max_B > 0) opt.oracle_max_B = oracle_max_B;
    opt.progress = [](const std::string& m) { emit_progress(m); };
    return opt;
}

// Exact rationals go into reports verbatim while they stay printable;
// Euler products at U = 10^6 have ~10^5-digit numerators, so past this
// cap only the decimal rendering and the digit counts are kept.
constexpr size_t kRationalRenderCap = 400;

void euler_to_json(json& slot, const chatelet::EulerProduct& ep) {
    slot["value"] = ep.approx;
    slot["primes_used"] = ep.primes_used;
    std::string num = ep.value.get_num().get_str();
    std::string den = ep.value.get_den().get_str();
    if (num.size() + den.size() <= kRationalRenderCap) {
        slot["rational"] = num + "/" + den;
    } else {
        slot["numerator_digits"] = num.size();
        slot["denominator_digits"] = den.size();
    }
}

}  // namespace

extern "C" {

struct chatelet_surface {
    chatelet::Surface impl;
};

const char* chatelet_version(void) { return chatelet::kEngineVersion; }

const char* chatelet_last_error(void) { return g_last_error.c_str(); }

void chatelet_string_free(char* s) { std::free(s); }

void chatelet_set_progress(chatelet_progress_fn fn, void* user) {
    g_progress_fn = fn;
    g_progress_user = user;
}

chatelet_status chatelet_surface_create(int64_t a, const int64_t f_desc[5],
                                        chatelet_surface** out) {
    if (!f_desc || !out) {
        g_last_error = "null argument";
        return CHATELET_ERR_INVALID;
    }
    return guarded([&] {
        std::array<int64_t, 5> c;
        std::copy(f_desc, f_desc + 5, c.begin());
        *out = new chatelet_surface{chatelet::Surface::validate(a, c)};
    });
}

chatelet_status chatelet_surface_parse(const char* json_text, chatelet_surface** out) {
    if (!json_text || !out) {
        g_last_error = "null argument";
        return CHATELET_ERR_INVALID;
    }
    return guarded([&] {
        chatelet::SurfaceSpec spec = chatelet::parse_surface_spec(json_text);
        *out = new chatelet_surface{chatelet::Surface::validate(spec.a, spec.f, spec.label)};
    });
}

chatelet_status chatelet_surface_load(const char* path, chatelet_surface** out) {
    if (!path || !out) {
        g_last_error = "null argument";
        return CHATELET_ERR_INVALID;
    }
    return guarded([&] { *out = new chatelet_surface{chatelet::load_surface(path)}; });
}

void chatelet_surface_free(chatelet_surface* s) { delete s; }

chatelet_status chatelet_validate_report(const char* json_text, char** out_json) {
    if (!json_text || !out_json) {
        g_last_error = "null argument";
        return CHATELET_ERR_INVALID;
    }
    *out_json = nullptr;
    chatelet::SurfaceSpec spec;
    try {
        spec = chatelet::parse_surface_spec(json_text);
    } catch (const std::exception& e) {
        chatelet_status st = classify(e);
        json j;
        j["valid"] = false;
        j["error"] = e.what();
        j["checks"] = json::array({{{"name", "parse"}, {"ok", false}, {"detail", e.what()}}});
        *out_json = dup_string(j.dump(2));
        return st;
    }

    json checks = json::array();
    checks.push_back({{"name", "parse"}, {"ok", true}, {"detail", "record has a and f(c0..c4)"}});

    bool a_nonzero = spec.a != 0;
    checks.push_back({{"name", "a_nonzero"},
                      {"ok", a_nonzero},
                      {"detail", "a = " + std::to_string(spec.a)}});
    bool a_nonsquare = a_nonzero && !chatelet::is_square_int(spec.a);
    checks.push_back({{"name", "a_nonsquare"},
                      {"ok", a_nonsquare},
                      {"detail", "a = " + std::to_string(spec.a)}});

    chatelet::IntPoly f = chatelet::IntPoly::from_desc(spec.f);
    int deg = f.degree();
    bool deg_ok = (deg == 3 || deg == 4);
    checks.push_back({{"name", "degree"},
                      {"ok", deg_ok},
                      {"detail", "deg f = " + std::to_string(deg) + " (f = " + f.to_string() + ")"}});

    bool disc_ok = false;
    std::string disc_str = "undefined";
    if (deg >= 2) {
        mpz_class d = chatelet::discriminant(f);
        disc_ok = d != 0;
        disc_str = d.get_str();
    }
    checks.push_back({{"name", "squarefree"},
                      {"ok", disc_ok},
                      {"detail", "disc f = " + disc_str}});

    bool valid = a_nonzero && a_nonsquare && deg_ok && disc_ok;
    json j;
    j["checks"] = checks;
    j["surface"]["a"] = spec.a;
    j["surface"]["f"] = spec.f;
    if (!spec.label.empty()) j["surface"]["label"] = spec.label;
    if (valid) {
        try {
            chatelet::Surface s = chatelet::Surface::validate(spec.a, spec.f, spec.label);
            j["rho"] = s.picard_rank();
            j["counting_regime"] = (spec.a < 0);
        } catch (const std::exception& e) {
            valid = false;
            j["error"] = e.what();
        }
    }
    j["valid"] = valid;
    if (!valid) g_last_error = "surface hypotheses violated";
    *out_json = dup_string(j.dump(2));
    return valid ? CHATELET_OK : CHATELET_ERR_HYPOTHESIS;
}

int chatelet_picard_rank(const chatelet_surface* s) {
    if (!s) return -1;
    return s->impl.picard_rank();
}

chatelet_status chatelet_rank_report(const chatelet_surface* s, uint64_t probe_bound,
                                     char** out_json) {
    if (!s || !out_json) {
        g_last_error = "null argument";
        return CHATELET_ERR_INVALID;
    }
    return guarded([&] {
        uint64_t bound = probe_bound ? probe_bound : 10000;
        const chatelet::Surface& surf = s->impl;
        json j;
        j["surface"] = surface_echo(surf);
        j["rho"] = surf.picard_rank();
        j["probe_bound"] = bound;
        j["factors"] = json::array();
        const auto& fq = surf.factorization();
        for (size_t i = 0; i < fq.factors.size(); ++i) {
            const auto& [g, mult] = fq.factors[i];
            bool member = surf.factor_membership()[i];
            chatelet::ProbeResult probe = chatelet::membership_probe(g, surf.a(), bound);
            bool certified = probe.verdict == chatelet::ProbeVerdict::CertifiedNonmember;
            if (certified && member) {
                throw chatelet::Error("membership test and probe disagree on " + g.to_string());
            }
            json row;
            row["poly"] = g.to_string();
            row["degree"] = g.degree();
            row["multiplicity"] = mult;
            row["contains_sqrt_a"] = member;
            row["probe"] = certified ? "certified-nonmember" : "consistent-with-member";
            if (certified) row["probe_witness"] = probe.witness_prime;
            j["factors"].push_back(row);
        }
        j["content"] = fq.content.get_str();
        *out_json = dup_string(j.dump(2));
    });
}

chatelet_status chatelet_count(const chatelet_surface* s, int64_t B, int64_t max_B,
                               int64_t* T, int64_t* N) {
    if (!s || !T || !N) {
        g_last_error = "null argument";
        return CHATELET_ERR_INVALID;
    }
    return guarded([&] {
        chatelet::TorsorCount tc =
            chatelet::torsor_count(s->impl, B, make_options(max_B, 0));
        *T = tc.T;
        *N = tc.N;
    });
}

chatelet_status chatelet_oracle_count(const chatelet_surface* s, int64_t B,
                                      int64_t oracle_max_B, int64_t* N) {
    if (!s || !N) {
        g_last_error = "null argument";
        return CHATELET_ERR_INVALID;
    }
    return guarded([&] {
        *N = chatelet::oracle_count(s->impl, B, make_options(0, oracle_max_B));
    });
}

chatelet_status chatelet_growth_report(const chatelet_surface* s, const int64_t* grid,
                                       size_t grid_len, int flags, int64_t max_B,
                                       int64_t oracle_max_B, char** out_csv,
                                       char** out_json) {
    if (!s || !grid || grid_len == 0) {
        g_last_error = "null argument or empty grid";
        return CHATELET_ERR_INVALID;
    }
    return guarded([&] {
        chatelet::GrowthOptions opt;
        static_cast<chatelet::CountOptions&>(opt) = make_options(max_B, oracle_max_B);
        opt.with_oracle = (flags & CHATELET_GROWTH_ORACLE) != 0;
        opt.dyadic = (flags & CHATELET_GROWTH_DYADIC) != 0;
        std::vector<int64_t> g(grid, grid + grid_len);
        chatelet::CountReport report = chatelet::growth_report(s->impl, g, opt);
        if (out_csv) *out_csv = dup_string(report.to_csv());
        if (out_json) *out_json = dup_string(report.to_json());
    });
}

chatelet_status chatelet_sieve_sum(const chatelet_surface* s, int64_t U, int64_t V,
                                   char** out_rational, double* out_value) {
    if (!s) {
        g_last_error = "null argument";
        return CHATELET_ERR_INVALID;
    }
    return guarded([&] {
        mpq_class sum = chatelet::sieve_sum(s->impl, U, V, make_options(0, 0));
        if (out_rational) {
            *out_rational = dup_string(sum.get_num().get_str() + "/" + sum.get_den().get_str());
        }
        if (out_value) *out_value = sum.get_d();
    });
}

chatelet_status chatelet_euler_report(const chatelet_surface* s, uint64_t U,
                                      char** out_json) {
    if (!s || !out_json) {
        g_last_error = "null argument";
        return CHATELET_ERR_INVALID;
    }
    return guarded([&] {
        const chatelet::Surface& surf = s->impl;
        json j;
        j["surface"] = surface_echo(surf);
        j["U"] = U;
        j["rho"] = surf.picard_rank();

        chatelet::EulerProduct whole = chatelet::euler_product(surf.f(), surf.a(), U);
        euler_to_json(j["whole"], whole);

        j["factors"] = json::array();
        double product_of_factors = 1.0;
        for (const auto& fe : chatelet::euler_products_by_factor(surf, U)) {
            json row;
            row["poly"] = fe.factor;
            row["contains_sqrt_a"] = fe.member;
            euler_to_json(row, fe.product);
            product_of_factors *= fe.product.approx;
            j["factors"].push_back(row);
        }
        j["product_of_factors"] = product_of_factors;
        *out_json = dup_string(j.dump(2));
    });
}

chatelet_status chatelet_filter_stats(const chatelet_surface* s, int64_t B,
                                      char** out_json) {
    if (!s || !out_json) {
        g_last_error = "null argument";
        return CHATELET_ERR_INVALID;
    }
    return guarded([&] {
        chatelet::FilterStats st = chatelet::filter_stats(s->impl, B, make_options(0, 0));
        json j;
        j["surface"] = surface_echo(s->impl);
        j["B"] = st.B;
        j["fibers"] = st.fibers;
        j["theta_zero"] = st.theta_zero;
        j["locally_unsolvable"] = st.locally_unsolvable;
        j["degenerate_excluded"] = st.degenerate;
        j["theta_zero_fraction"] =
            st.fibers ? static_cast<double>(st.theta_zero) / st.fibers : 0.0;
        j["locally_unsolvable_fraction"] =
            st.fibers ? static_cast<double>(st.locally_unsolvable) / st.fibers : 0.0;
        *out_json = dup_string(j.dump(2));
    });
}

}  // extern "C"
