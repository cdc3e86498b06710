#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <sstream>

#include "chatelet/count.hpp"
#include "chatelet/version.hpp"

namespace chatelet {

namespace {

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.15g", v);
    return buf;
}

// Block sum of weight/v^2 over |u| in (2^i, 2^{i+1}], |v| in (2^j, 2^{j+1}].
mpq_class dyadic_block(const Surface& s, int i, int j) {
    int64_t u_lo = (i < 0) ? 1 : ((int64_t)1 << i) + 1;
    int64_t u_hi = (int64_t)1 << (i + 1);
    int64_t v_lo = ((int64_t)1 << j) + 1;
    int64_t v_hi = (int64_t)1 << (j + 1);
    mpq_class acc(0);
    for (int64_t v = v_lo; v <= v_hi; ++v) {
        mpq_class inv_v2(1, v * v);
        for (int64_t u = u_lo; u <= u_hi; ++u) {
            mpq_class w(0);
            int64_t F = eval_form(s.form(), u, v);
            if (F != 0) w = sieve_weight(factorize(F), s.a());
            // four sign quadrants; F(-u,-v) = F(u,v), F(u,-v) needs its own term
            mpq_class w2(0);
            int64_t F2 = eval_form(s.form(), u, -v);
            if (F2 != 0) w2 = sieve_weight(factorize(F2), s.a());
            acc += (2 * w + 2 * w2) * inv_v2;
        }
    }
    return acc;
}

}  // namespace

CountReport growth_report(const Surface& s, const std::vector<int64_t>& grid,
                          const GrowthOptions& opt) {
    s.require_counting_regime();
    if (grid.empty()) throw InvalidArgument("growth_report: empty grid");
    for (size_t i = 0; i < grid.size(); ++i) {
        if (grid[i] < 2) throw InvalidArgument("growth_report: grid values must be >= 2");
        if (i > 0 && grid[i] <= grid[i - 1]) {
            throw InvalidArgument("growth_report: grid must be strictly increasing");
        }
    }

    CountReport report;
    report.engine_version = kEngineVersion;
    report.norm = kNormTag;
    report.a = s.a();
    report.f = s.f().c;
    report.label = s.label();
    report.rho = s.picard_rank();
    report.oracle_checked = opt.with_oracle;

    for (int64_t B : grid) {
        TorsorCount tc = torsor_count(s, B, opt);
        if (opt.with_oracle) {
            int64_t oracle = oracle_count(s, B, opt);
            if (oracle != tc.N) {
                throw Error("pipeline mismatch at B = " + std::to_string(B) + ": torsor N = " +
                            std::to_string(tc.N) + ", model count = " + std::to_string(oracle));
            }
        }
        CountRow row;
        row.B = B;
        row.N = tc.N;
        row.T = tc.T;
        double lb = std::log(static_cast<double>(B));
        row.ratio = static_cast<double>(tc.N) /
                    (static_cast<double>(B) * std::pow(lb, report.rho - 1));
        if (!report.rows.empty()) {
            const CountRow& prev = report.rows.back();
            if (prev.N > 0 && tc.N > 0) {
                row.beta_secant = (std::log(static_cast<double>(tc.N)) -
                                   std::log(static_cast<double>(prev.N))) /
                                  (std::log(static_cast<double>(B)) -
                                   std::log(static_cast<double>(prev.B)));
            }
        }
        report.rows.push_back(row);
        if (opt.progress) {
            opt.progress("growth row B=" + std::to_string(B) + " N=" + std::to_string(tc.N));
        }
    }

    if (opt.dyadic) {
        int64_t B = grid.back();
        report.dyadic_B = B;
        int jmax = 0;
        while (((int64_t)1 << (2 * (jmax + 1))) <= B) ++jmax;  // 2^j <= sqrt(B)
        for (int j = 0; j <= jmax; ++j) {
            for (int i = -1; i < j; ++i) {
                DyadicRow row;
                row.i = i;
                row.j = j;
                row.block = dyadic_block(s, i, j);
                mpq_class box = sieve_sum(s, (int64_t)1 << (i + 1), (int64_t)1 << (j + 1), opt);
                row.box_bound = box / mpq_class((int64_t)1 << (2 * j));
                report.dyadic.push_back(std::move(row));
            }
        }
    }
    return report;
}

std::string CountReport::to_csv() const {
    std::ostringstream os;
    os << "B,N,T,ratio,beta_secant\n";
    for (const CountRow& r : rows) {
        os << r.B << "," << r.N << "," << r.T << "," << fmt_double(r.ratio) << ",";
        if (r.beta_secant) os << fmt_double(*r.beta_secant);
        os << "\n";
    }
    return os.str();
}

std::string CountReport::to_json() const {
    nlohmann::json j;
    j["engine_version"] = engine_version;
    j["norm"] = norm;
    j["surface"]["a"] = a;
    j["surface"]["f"] = f;
    if (!label.empty()) j["surface"]["label"] = label;
    j["rho"] = rho;
    j["oracle_checked"] = oracle_checked;
    j["rows"] = nlohmann::json::array();
    for (const CountRow& r : rows) {
        nlohmann::json row;
        row["B"] = r.B;
        row["N"] = r.N;
        row["T"] = r.T;
        row["ratio"] = r.ratio;
        if (r.beta_secant) {
            row["beta_secant"] = *r.beta_secant;
        } else {
            row["beta_secant"] = nullptr;
        }
        j["rows"].push_back(row);
    }
    if (!dyadic.empty()) {
        j["dyadic_B"] = dyadic_B;
        j["dyadic"] = nlohmann::json::array();
        for (const DyadicRow& d : dyadic) {
            nlohmann::json row;
            row["i"] = d.i;
            row["j"] = d.j;
            row["block"] = d.block.get_str();
            row["block_value"] = d.block.get_d();
            row["box_bound"] = d.box_bound.get_str();
            row["box_bound_value"] = d.box_bound.get_d();
            j["dyadic"].push_back(row);
        }
    }
    return j.dump(2);
}

}  // namespace chatelet
