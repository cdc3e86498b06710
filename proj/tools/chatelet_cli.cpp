// Batch front end: validate / rank / count / sieve over one-surface spec
// files. All data output goes to stdout (or files given by flags); progress
// and diagnostics go to stderr. Exit codes follow chatelet_status, so
// parse, hypothesis, regime, budget and overflow failures are
// distinguishable by scripts.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "chatelet.h"

namespace {

constexpr int kUsageExit = 64;

void progress_to_stderr(const char* msg, void*) { std::fprintf(stderr, "[chatelet] %s\n", msg); }

int fail(chatelet_status st) {
    std::fprintf(stderr, "error: %s\n", chatelet_last_error());
    return static_cast<int>(st);
}

struct OwnedString {
    char* ptr = nullptr;
    ~OwnedString() { chatelet_string_free(ptr); }
    std::string str() const { return ptr ? std::string(ptr) : std::string(); }
};

struct OwnedSurface {
    chatelet_surface* ptr = nullptr;
    ~OwnedSurface() { chatelet_surface_free(ptr); }
};

bool write_output(const std::string& path, const std::string& content) {
    if (path == "-") {
        std::fputs(content.c_str(), stdout);
        return true;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::fprintf(stderr, "error: cannot write %s\n", path.c_str());
        return false;
    }
    out << content;
    return true;
}

// Grid forms: "4096", "16,32,64", or "2^4..2^12" (powers of two).
bool parse_grid(const std::string& spec, std::vector<int64_t>& grid) {
    grid.clear();
    auto range_pos = spec.find("..");
    if (range_pos != std::string::npos && spec.rfind("2^", 0) == 0) {
        int lo = 0, hi = 0;
        if (std::sscanf(spec.c_str(), "2^%d..2^%d", &lo, &hi) != 2) return false;
        if (lo < 1 || hi < lo || hi > 62) return false;
        for (int e = lo; e <= hi; ++e) grid.push_back(int64_t(1) << e);
        return true;
    }
    size_t start = 0;
    while (start <= spec.size()) {
        size_t comma = spec.find(',', start);
        std::string tok = spec.substr(start, comma == std::string::npos ? std::string::npos
                                                                        : comma - start);
        if (tok.empty()) return false;
        try {
            grid.push_back(std::stoll(tok));
        } catch (...) {
            return false;
        }
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return !grid.empty();
}

std::string read_file(const std::string& path, bool& ok) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        ok = false;
        return "";
    }
    ok = true;
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

int cmd_validate(const std::string& path, const std::string& json_out) {
    bool ok = false;
    std::string text = read_file(path, ok);
    if (!ok) {
        std::fprintf(stderr, "error: cannot open %s\n", path.c_str());
        return CHATELET_ERR_PARSE;
    }
    OwnedString report;
    chatelet_status st = chatelet_validate_report(text.c_str(), &report.ptr);
    if (!report.ptr) return fail(st);
    if (!json_out.empty()) {
        if (!write_output(json_out, report.str())) return CHATELET_ERR_INTERNAL;
    }
    auto j = nlohmann::json::parse(report.str());
    for (const auto& check : j["checks"]) {
        std::printf("%-12s %-4s %s\n", check["name"].get<std::string>().c_str(),
                    check["ok"].get<bool>() ? "ok" : "FAIL",
                    check["detail"].get<std::string>().c_str());
    }
    if (j["valid"].get<bool>()) {
        std::printf("valid surface; rho = %d%s\n", j["rho"].get<int>(),
                    j["counting_regime"].get<bool>() ? "" : " (a > 0: counting disabled)");
        return 0;
    }
    std::printf("rejected\n");
    return static_cast<int>(st);
}

int cmd_rank(const std::string& path, uint64_t probe_bound, const std::string& json_out) {
    OwnedSurface s;
    chatelet_status st = chatelet_surface_load(path.c_str(), &s.ptr);
    if (st != CHATELET_OK) return fail(st);
    OwnedString report;
    st = chatelet_rank_report(s.ptr, probe_bound, &report.ptr);
    if (st != CHATELET_OK) return fail(st);
    if (!json_out.empty()) {
        if (!write_output(json_out, report.str())) return CHATELET_ERR_INTERNAL;
    }
    auto j = nlohmann::json::parse(report.str());
    std::printf("rho = %d\n", j["rho"].get<int>());
    std::printf("%-24s %-5s %-5s %-18s %s\n", "factor", "deg", "mult", "sqrt(a) member",
                "probe");
    for (const auto& row : j["factors"]) {
        std::string probe = row["probe"].get<std::string>();
        if (row.contains("probe_witness")) {
            probe += " (p=" + std::to_string(row["probe_witness"].get<uint64_t>()) + ")";
        }
        std::printf("%-24s %-5d %-5d %-18s %s\n", row["poly"].get<std::string>().c_str(),
                    row["degree"].get<int>(), row["multiplicity"].get<int>(),
                    row["contains_sqrt_a"].get<bool>() ? "yes" : "no", probe.c_str());
    }
    return 0;
}

int cmd_count(const std::string& path, int64_t B, const std::string& grid_spec, bool oracle,
              bool dyadic, int64_t budget, int64_t oracle_budget, const std::string& csv_out,
              const std::string& json_out) {
    OwnedSurface s;
    chatelet_status st = chatelet_surface_load(path.c_str(), &s.ptr);
    if (st != CHATELET_OK) return fail(st);

    if (B > 0) {
        int64_t T = 0, N = 0;
        st = chatelet_count(s.ptr, B, budget, &T, &N);
        if (st != CHATELET_OK) return fail(st);
        std::printf("B = %lld: N = %lld, T = %lld\n", static_cast<long long>(B),
                    static_cast<long long>(N), static_cast<long long>(T));
        if (oracle) {
            int64_t N2 = 0;
            st = chatelet_oracle_count(s.ptr, B, oracle_budget, &N2);
            if (st != CHATELET_OK) return fail(st);
            if (N2 != N) {
                std::fprintf(stderr, "error: model recount %lld != torsor count %lld\n",
                             static_cast<long long>(N2), static_cast<long long>(N));
                return CHATELET_ERR_INTERNAL;
            }
            std::printf("model recount agrees: N = %lld\n", static_cast<long long>(N2));
        }
        return 0;
    }

    std::vector<int64_t> grid;
    if (!parse_grid(grid_spec, grid)) {
        std::fprintf(stderr, "error: bad grid spec '%s'\n", grid_spec.c_str());
        return kUsageExit;
    }
    int flags = (oracle ? CHATELET_GROWTH_ORACLE : 0) | (dyadic ? CHATELET_GROWTH_DYADIC : 0);
    OwnedString csv, json;
    st = chatelet_growth_report(s.ptr, grid.data(), grid.size(), flags, budget, oracle_budget,
                                &csv.ptr, &json.ptr);
    if (st != CHATELET_OK) return fail(st);
    if (!csv_out.empty()) {
        if (!write_output(csv_out, csv.str())) return CHATELET_ERR_INTERNAL;
    }
    if (!json_out.empty()) {
        if (!write_output(json_out, json.str())) return CHATELET_ERR_INTERNAL;
    }
    if (csv_out.empty() && json_out.empty()) std::fputs(csv.str().c_str(), stdout);
    return 0;
}

int cmd_sieve(const std::string& path, const std::vector<int64_t>& sum_args, int64_t euler_U,
              int64_t stats_B, const std::string& json_out) {
    OwnedSurface s;
    chatelet_status st = chatelet_surface_load(path.c_str(), &s.ptr);
    if (st != CHATELET_OK) return fail(st);

    if (!sum_args.empty()) {
        OwnedString rational;
        double value = 0;
        st = chatelet_sieve_sum(s.ptr, sum_args[0], sum_args[1], &rational.ptr, &value);
        if (st != CHATELET_OK) return fail(st);
        std::printf("S(%lld, %lld) = %s = %.15g\n", static_cast<long long>(sum_args[0]),
                    static_cast<long long>(sum_args[1]), rational.ptr, value);
        if (!json_out.empty()) {
            nlohmann::json j{{"U", sum_args[0]}, {"V", sum_args[1]},
                             {"rational", rational.str()}, {"value", value}};
            if (!write_output(json_out, j.dump(2) + "\n")) return CHATELET_ERR_INTERNAL;
        }
        return 0;
    }
    if (euler_U > 0) {
        OwnedString report;
        st = chatelet_euler_report(s.ptr, static_cast<uint64_t>(euler_U), &report.ptr);
        if (st != CHATELET_OK) return fail(st);
        if (!json_out.empty()) {
            if (!write_output(json_out, report.str())) return CHATELET_ERR_INTERNAL;
        }
        auto j = nlohmann::json::parse(report.str());
        auto render = [](const nlohmann::json& slot) {
            std::string out;
            if (slot.contains("rational")) out = slot["rational"].get<std::string>() + " = ";
            char buf[64];
            std::snprintf(buf, sizeof(buf), "%.15g", slot["value"].get<double>());
            return out + buf;
        };
        std::printf("E_f(%lld) = %s\n", static_cast<long long>(euler_U),
                    render(j["whole"]).c_str());
        for (const auto& row : j["factors"]) {
            std::printf("  factor %-20s member=%-3s E(%lld) = %s\n",
                        row["poly"].get<std::string>().c_str(),
                        row["contains_sqrt_a"].get<bool>() ? "yes" : "no",
                        static_cast<long long>(euler_U), render(row).c_str());
        }
        return 0;
    }
    if (stats_B > 0) {
        OwnedString report;
        st = chatelet_filter_stats(s.ptr, stats_B, &report.ptr);
        if (st != CHATELET_OK) return fail(st);
        if (!json_out.empty()) {
            if (!write_output(json_out, report.str())) return CHATELET_ERR_INTERNAL;
        }
        auto j = nlohmann::json::parse(report.str());
        std::printf("B = %lld: fibers = %lld, theta-killed = %lld (%.4f), "
                    "locally unsolvable = %lld (%.4f), degenerate excluded = %lld\n",
                    j["B"].get<long long>(), j["fibers"].get<long long>(),
                    j["theta_zero"].get<long long>(), j["theta_zero_fraction"].get<double>(),
                    j["locally_unsolvable"].get<long long>(),
                    j["locally_unsolvable_fraction"].get<double>(),
                    j["degenerate_excluded"].get<long long>());
        return 0;
    }
    std::fprintf(stderr, "error: sieve needs one of --sum, --euler, --filter-stats\n");
    return kUsageExit;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact point counting and sieve diagnostics for Chatelet surfaces"};
    app.require_subcommand(1);
    chatelet_set_progress(progress_to_stderr, nullptr);

    std::string path, json_out, csv_out, grid_spec;
    uint64_t probe_bound = 10000;
    int64_t B = 0, budget = 0, oracle_budget = 0, euler_U = 0, stats_B = 0;
    std::vector<int64_t> sum_args;
    bool oracle = false, dyadic = false;

    auto* validate = app.add_subcommand("validate", "Check the surface hypotheses of a spec file");
    validate->add_option("path", path, "surface spec file")->required();
    validate->add_option("--json", json_out, "write the JSON report to this path ('-' = stdout)");

    auto* rank = app.add_subcommand("rank", "Factor f and compute the Picard rank");
    rank->add_option("path", path, "surface spec file")->required();
    rank->add_option("--probe-bound", probe_bound, "prime bound for the membership cross-check");
    rank->add_option("--json", json_out, "write the JSON report to this path");

    auto* count = app.add_subcommand("count", "Exact N(B), T(B) and growth reports");
    count->add_option("path", path, "surface spec file")->required();
    auto* b_opt = count->add_option("--B", B, "single height bound");
    auto* grid_opt = count->add_option("--grid", grid_spec, "grid: '16,32,64' or '2^4..2^12'");
    b_opt->excludes(grid_opt);
    count->add_flag("--oracle", oracle, "recount through the P^4 model and assert equality");
    count->add_flag("--dyadic", dyadic, "append the dyadic block diagnostic to the JSON report");
    count->add_option("--budget", budget, "largest admissible B (default 20000)");
    count->add_option("--oracle-budget", oracle_budget, "largest admissible oracle B (default 500)");
    count->add_option("--csv", csv_out, "write CSV rows to this path ('-' = stdout)");
    count->add_option("--json", json_out, "write the JSON mirror to this path");

    auto* sieve = app.add_subcommand("sieve", "S(U,V), Euler products, filter statistics");
    sieve->add_option("path", path, "surface spec file")->required();
    auto* sum_opt = sieve->add_option("--sum", sum_args, "U V: evaluate S(U,V)")->expected(2);
    auto* euler_opt = sieve->add_option("--euler", euler_U, "prime bound U for the Euler products");
    auto* stats_opt = sieve->add_option("--filter-stats", stats_B, "height B for filter statistics");
    sum_opt->excludes(euler_opt)->excludes(stats_opt);
    euler_opt->excludes(stats_opt);
    sieve->add_option("--json", json_out, "write the JSON report to this path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kUsageExit;
    }

    if (validate->parsed()) return cmd_validate(path, json_out);
    if (rank->parsed()) return cmd_rank(path, probe_bound, json_out);
    if (count->parsed()) {
        if (B <= 0 && grid_spec.empty()) {
            std::fprintf(stderr, "error: count needs --B or --grid\n");
            return kUsageExit;
        }
        return cmd_count(path, B, grid_spec, oracle, dyadic, budget, oracle_budget, csv_out,
                         json_out);
    }
    if (sieve->parsed()) return cmd_sieve(path, sum_args, euler_U, stats_B, json_out);
    return kUsageExit;
}
