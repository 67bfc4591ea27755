// nestwork: arc diagrams of set partitions and partial matchings on the
// command line. Count and enumerate the pattern-avoiding classes, print
// the generating-function triangles, apply the alpha/beta/gamma
// bijections, and run the self-verification suites.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "nestwork/bijections.hpp"
#include "nestwork/enumerate.hpp"
#include "nestwork/json_io.hpp"
#include "nestwork/series.hpp"
#include "nestwork/verify.hpp"

namespace {

using nestwork::BigInt;
using nestwork::BruteForceGuard;
using nestwork::ClassId;
using ordered_json = nlohmann::ordered_json;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream file(path);
    if (!file) throw std::invalid_argument("cannot open input file '" + path + "'");
    std::ostringstream buf;
    buf << file.rdbuf();
    return buf.str();
}

BigInt closed_form_count(ClassId c, int n, std::optional<int> k) {
    auto one = [&](int kk) -> BigInt {
        switch (c) {
            case ClassId::P: return nestwork::count_p(n, kk);
            case ClassId::Q: return nestwork::count_q(n, kk);
            case ClassId::R: return nestwork::count_r(n, kk);
            case ClassId::T: return nestwork::count_t(n, kk);
            default: throw std::invalid_argument("no closed form for class M or S");
        }
    };
    if (k) return one(*k);
    BigInt sum = 0;
    const int k_hi = (c == ClassId::T) ? n - 1 : n / 2;
    for (int kk = 0; kk <= k_hi; ++kk) sum += one(kk);
    return sum;
}

int run_count(ClassId cls, int n, std::optional<int> k, bool brute,
              const BruteForceGuard& guard) {
    const bool closed_form_available =
        cls == ClassId::P || cls == ClassId::Q || cls == ClassId::R || cls == ClassId::T;
    BigInt result;
    if (brute || !closed_form_available) {
        if (k) {
            result = nestwork::count_bruteforce(cls, n, *k, guard);
        } else {
            result = 0;
            for (const auto& [key, value] : nestwork::count_table_bruteforce(cls, n, guard).entries)
                result += value;
        }
    } else {
        result = closed_form_count(cls, n, k);
    }
    std::cout << result.str() << "\n";
    return 0;
}

int run_enumerate(ClassId cls, int n, std::optional<int> k, const BruteForceGuard& guard) {
    if (n > guard.limit_for(cls))
        throw nestwork::guard_error("enumeration refused: n=" + std::to_string(n) +
                                    " exceeds the limit " + std::to_string(guard.limit_for(cls)) +
                                    " (override with NESTWORK_MAX_BRUTE_N)");
    nestwork::ClassMemberStream stream = nestwork::class_members(cls, n, k);
    while (auto d = stream.next()) std::cout << nestwork::to_json_string(*d) << "\n";
    return 0;
}

int run_gf(const std::string& which, int order, bool y1) {
    nestwork::BivariatePoly poly = [&] {
        if (which == "P") return nestwork::gf_p(order);
        if (which == "Q") return nestwork::gf_q(order);
        if (which == "RT") return nestwork::gf_rt(order);
        throw std::invalid_argument("gf: --which must be P, Q or RT");
    }();
    ordered_json out;
    out["which"] = which;
    out["order"] = order;
    // Coefficients as decimal strings: they outgrow 64-bit integers well
    // inside desk-scale orders.
    if (y1) {
        auto sums = ordered_json::array();
        for (int n = 0; n <= order; ++n) {
            BigInt sum = 0;
            for (int k = 0; k <= n; ++k) sum += poly.coeff(n, k);
            sums.push_back(sum.str());
        }
        out["row_sums"] = std::move(sums);
    } else {
        auto triangle = ordered_json::array();
        for (int n = 0; n <= order; ++n) {
            auto row = ordered_json::array();
            for (int k = 0; k <= n; ++k) row.push_back(poly.coeff(n, k).str());
            triangle.push_back(std::move(row));
        }
        out["triangle"] = std::move(triangle);
    }
    std::cout << out.dump() << "\n";
    return 0;
}

int run_map(const std::string& bijection, bool inverse, const std::string& input_path) {
    const std::string text = read_input(input_path);
    if (bijection == "alpha" || bijection == "gamma") {
        const nestwork::Diagram in = nestwork::diagram_from_json(text);
        nestwork::Diagram out = bijection == "alpha"
                                    ? (inverse ? nestwork::alpha_inv(in) : nestwork::alpha(in))
                                    : (inverse ? nestwork::gamma_inv(in) : nestwork::gamma(in));
        std::cout << nestwork::to_json_string(out) << "\n";
        return 0;
    }
    if (bijection == "beta") {
        if (inverse) {
            const nestwork::IntervalProfile profile = nestwork::profile_from_json(text);
            std::cout << nestwork::to_json_string(nestwork::beta_inv(profile)) << "\n";
        } else {
            const nestwork::Diagram in = nestwork::diagram_from_json(text);
            std::cout << nestwork::to_json_string(nestwork::beta(in)) << "\n";
        }
        return 0;
    }
    throw std::invalid_argument("map: --bijection must be alpha, beta or gamma");
}

int run_verify(const std::string& suite, int max_n, const BruteForceGuard& guard) {
    const nestwork::VerifyReport report = nestwork::run_verify_suite(suite, max_n, guard);
    ordered_json out;
    out["suite"] = report.suite;
    out["max_n"] = report.max_n;
    out["pass"] = report.pass;
    auto checks = ordered_json::array();
    for (const auto& check : report.checks) {
        ordered_json c;
        c["name"] = check.name;
        c["pass"] = check.pass;
        if (!check.pass) c["counterexample"] = check.detail;
        checks.push_back(std::move(c));
    }
    out["checks"] = std::move(checks);
    std::cout << out.dump() << "\n";
    return report.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"arc diagrams of partitions and partial matchings: pattern-avoiding "
                 "classes, generating functions, and the alpha/beta/gamma bijections"};
    app.require_subcommand(1);

    int max_brute_n = 0;
    app.add_option("--max-brute-n", max_brute_n,
                   "override the brute-force enumeration limits (default 16 for "
                   "matchings, 12 for partitions; env NESTWORK_MAX_BRUTE_N)");

    std::string cls_name;
    int n = 0;
    int k_value = -1;
    bool brute = false;

    CLI::App* count = app.add_subcommand("count", "count class members (one integer)");
    count->add_option("--class", cls_name, "class: M, S, P, Q, R or T")->required();
    count->add_option("--n", n, "number of vertices")->required();
    auto* count_k = count->add_option("--k", k_value, "arc count (block count for S)");
    count->add_flag("--brute-force", brute, "count by exhaustive enumeration");

    CLI::App* enumerate =
        app.add_subcommand("enumerate", "list class members as JSON lines");
    enumerate->add_option("--class", cls_name, "class: M, S, P, Q, R or T")->required();
    enumerate->add_option("--n", n, "number of vertices")->required();
    auto* enum_k = enumerate->add_option("--k", k_value, "arc count (block count for S)");
    std::string format = "jsonl";
    enumerate->add_option("--format", format, "output format (jsonl)")
        ->check(CLI::IsMember({"jsonl"}));

    std::string which;
    int order = 0;
    bool y1 = false;
    CLI::App* gf = app.add_subcommand("gf", "print a generating-function triangle as JSON");
    gf->add_option("--which", which, "series: P, Q or RT")->required();
    gf->add_option("--order", order, "truncation order in x")->required();
    gf->add_flag("--y1", y1, "print row sums (the y = 1 specialization)");

    std::string bijection;
    bool inverse = false;
    std::string input_path;
    CLI::App* map_cmd = app.add_subcommand("map", "apply a bijection to a JSON diagram");
    map_cmd->add_option("--bijection", bijection, "alpha, beta or gamma")->required();
    map_cmd->add_flag("--inverse", inverse, "apply the inverse map");
    map_cmd->add_option("--input", input_path, "input file ('-' for stdin)")->required();

    std::string suite = "all";
    int max_n = 8;
    CLI::App* verify = app.add_subcommand("verify", "run a named invariant suite");
    verify->add_option("--suite", suite,
                       "oracle, roundtrip-alpha, roundtrip-beta, roundtrip-gamma, oeis, "
                       "statistics or all");
    verify->add_option("--max-n", max_n, "largest vertex count to check");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    BruteForceGuard guard = BruteForceGuard::from_env();
    if (max_brute_n > 0) {
        guard.max_matching_n = max_brute_n;
        guard.max_partition_n = max_brute_n;
    }

    try {
        if (count->parsed())
            return run_count(nestwork::parse_class(cls_name), n,
                             count_k->count() ? std::optional<int>(k_value) : std::nullopt,
                             brute, guard);
        if (enumerate->parsed())
            return run_enumerate(nestwork::parse_class(cls_name), n,
                                 enum_k->count() ? std::optional<int>(k_value) : std::nullopt,
                                 guard);
        if (gf->parsed()) return run_gf(which, order, y1);
        if (map_cmd->parsed()) return run_map(bijection, inverse, input_path);
        if (verify->parsed()) return run_verify(suite, max_n, guard);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
