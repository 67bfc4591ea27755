#include "nestwork/verify.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "nestwork/bijections.hpp"
#include "nestwork/json_io.hpp"
#include "nestwork/patterns.hpp"
#include "nestwork/series.hpp"

namespace nestwork {

namespace {

// Row sums of the P and Q count triangles (A124380 and A024428).
const std::vector<long long> kRowSumsP = {1, 2, 4, 9, 22, 57, 157, 453, 1368, 4290};
const std::vector<long long> kRowSumsQ = {1, 1, 2, 4, 8, 18, 42, 102, 260, 684, 1860};

void fail(VerifyCheck& check, std::string detail) {
    if (!check.pass) return;  // keep the first counterexample
    check.pass = false;
    check.detail = std::move(detail);
}

VerifyCheck check_oracle(ClassId c, int max_n, const BruteForceGuard& guard) {
    VerifyCheck check{std::string("oracle-") + to_string(c), true, ""};
    const int cap = std::min(max_n, guard.limit_for(c));
    const int n_lo = (c == ClassId::P || c == ClassId::T) ? 1 : 0;
    for (int n = n_lo; n <= cap; ++n) {
        const CountTable table = count_table_bruteforce(c, n, guard);
        const int k_hi = (c == ClassId::T) ? std::max(n - 1, 0) : n / 2;
        for (int k = 0; k <= k_hi; ++k) {
            BigInt closed;
            switch (c) {
                case ClassId::P: closed = count_p(n, k); break;
                case ClassId::Q: closed = count_q(n, k); break;
                case ClassId::R: closed = count_r(n, k); break;
                case ClassId::T: closed = count_t(n, k); break;
                default: return check;
            }
            const auto it = table.entries.find({n, k});
            const BigInt brute = it == table.entries.end() ? BigInt(0) : it->second;
            if (closed != brute)
                fail(check, "class " + std::string(to_string(c)) + " at n=" +
                                std::to_string(n) + " k=" + std::to_string(k) + ": closed form " +
                                closed.str() + " != brute force " + brute.str());
        }
    }
    return check;
}

std::vector<VerifyCheck> suite_oracle(int max_n, const BruteForceGuard& guard) {
    return {check_oracle(ClassId::P, max_n, guard), check_oracle(ClassId::Q, max_n, guard),
            check_oracle(ClassId::R, max_n, guard), check_oracle(ClassId::T, max_n, guard)};
}

std::vector<VerifyCheck> suite_roundtrip_alpha(int max_n, const BruteForceGuard& guard) {
    VerifyCheck roundtrip{"alpha-roundtrip", true, ""};
    VerifyCheck membership{"alpha-image-in-Q", true, ""};
    VerifyCheck bijective{"alpha-bijective", true, ""};
    const int cap = std::min(max_n, guard.max_partition_n);
    // Images of the partitions of [m] with k arcs, keyed by (m+k-1, k).
    std::map<std::pair<int, int>, std::set<Diagram>> images;
    for (int m = 0; m <= cap; ++m) {
        PartitionStream stream = all_partitions(m);
        while (auto p = stream.next()) {
            const Diagram image = alpha(*p);
            if (alpha_inv(image) != *p)
                fail(roundtrip, to_json_string(*p));
            if (!in_class(image, ClassId::Q) || image.arc_count() != p->arc_count())
                fail(membership, to_json_string(*p));
            if (p->arc_count() >= 1) {
                const int k = p->arc_count();
                if (image.vertex_count() != p->vertex_count() + k - 1)
                    fail(membership, to_json_string(*p));
                images[{p->vertex_count() + k - 1, k}].insert(image);
            }
        }
    }
    for (const auto& [key, set] : images)
        if (BigInt(set.size()) != count_q(key.first, key.second))
            fail(bijective, "image of alpha at Q(" + std::to_string(key.first) + "," +
                                std::to_string(key.second) + ") has " +
                                std::to_string(set.size()) + " matchings, expected " +
                                count_q(key.first, key.second).str());
    return {roundtrip, membership, bijective};
}

std::vector<VerifyCheck> suite_roundtrip_beta(int max_n, const BruteForceGuard& guard) {
    VerifyCheck roundtrip{"beta-roundtrip", true, ""};
    VerifyCheck from_comps{"beta-from-compositions", true, ""};
    const int cap = std::min(max_n, guard.max_matching_n);
    for (int n = 0; n <= cap; ++n) {
        ClassMemberStream stream = class_members(ClassId::R, n);
        while (auto m = stream.next())
            if (beta_inv(beta(*m)) != *m) fail(roundtrip, to_json_string(*m));
    }
    for (int intervals = 1; intervals <= 4; ++intervals) {
        const int parts = intervals * (intervals + 1) / 2;
        for (int total = 0; total <= 4; ++total) {
            CompositionStream stream = compositions(total, parts);
            while (auto comp = stream.next()) {
                const IntervalProfile profile = IntervalProfile::from_flat(*comp);
                const Diagram built = beta_inv(profile);
                if (!in_class(built, ClassId::R) || beta(built) != profile)
                    fail(from_comps, to_json_string(profile));
            }
        }
    }
    return {roundtrip, from_comps};
}

std::vector<VerifyCheck> suite_roundtrip_gamma(int max_n, const BruteForceGuard& guard) {
    VerifyCheck roundtrip{"gamma-roundtrip", true, ""};
    VerifyCheck membership{"gamma-image-in-T", true, ""};
    VerifyCheck bijective{"gamma-bijective", true, ""};
    const int cap = std::min(max_n, guard.max_matching_n);
    std::map<std::pair<int, int>, std::set<Diagram>> images;
    for (int n = 0; n <= cap; ++n) {
        ClassMemberStream stream = class_members(ClassId::R, n);
        while (auto m = stream.next()) {
            const Diagram image = gamma(*m);
            if (gamma_inv(image) != *m) fail(roundtrip, to_json_string(*m));
            if (!in_class(image, ClassId::T) || image.arc_count() != m->arc_count())
                fail(membership, to_json_string(*m));
            const int k = m->arc_count();
            if (k >= 1) {
                if (image.vertex_count() != n - k + 1) fail(membership, to_json_string(*m));
                images[{n - k + 1, k}].insert(image);
            }
        }
    }
    for (const auto& [key, set] : images)
        if (BigInt(set.size()) != count_t(key.first, key.second))
            fail(bijective, "image of gamma at T(" + std::to_string(key.first) + "," +
                                std::to_string(key.second) + ") has " +
                                std::to_string(set.size()) + " partitions, expected " +
                                count_t(key.first, key.second).str());
    return {roundtrip, membership, bijective};
}

std::vector<VerifyCheck> suite_oeis(int max_n, const BruteForceGuard&) {
    VerifyCheck p_sums{"oeis-P-row-sums", true, ""};
    VerifyCheck q_sums{"oeis-Q-row-sums", true, ""};
    const int cap_p = std::min<int>(max_n, static_cast<int>(kRowSumsP.size()));
    for (int n = 1; n <= cap_p; ++n) {
        BigInt sum = 0;
        for (int k = 0; 2 * k <= n; ++k) sum += count_p(n, k);
        if (sum != kRowSumsP[n - 1])
            fail(p_sums, "sum_k P(" + std::to_string(n) + ",k) = " + sum.str() +
                             ", expected " + std::to_string(kRowSumsP[n - 1]));
    }
    const int cap_q = std::min<int>(max_n + 1, static_cast<int>(kRowSumsQ.size()));
    for (int n = 1; n <= cap_q; ++n) {
        const BigInt value = gn_poly(n)(1);
        if (value != kRowSumsQ[n - 1])
            fail(q_sums, "g_" + std::to_string(n) + "(1) = " + value.str() + ", expected " +
                             std::to_string(kRowSumsQ[n - 1]));
    }
    return {p_sums, q_sums};
}

std::vector<VerifyCheck> suite_statistics(int max_n, const BruteForceGuard& guard) {
    VerifyCheck alpha_stat{"alpha-transients-to-left-crossings", true, ""};
    VerifyCheck gamma_stat{"gamma-left-crossings-to-transients", true, ""};
    const int cap_part = std::min(max_n, guard.max_partition_n);
    for (int m = 0; m <= cap_part; ++m) {
        PartitionStream stream = all_partitions(m);
        while (auto p = stream.next())
            if (count_transients(*p) != count_left_crossings(alpha(*p)))
                fail(alpha_stat, to_json_string(*p));
    }
    const int cap_match = std::min(max_n, guard.max_matching_n);
    for (int n = 0; n <= cap_match; ++n) {
        ClassMemberStream stream = class_members(ClassId::R, n);
        while (auto m = stream.next())
            if (count_left_crossings(*m) != count_transients(gamma(*m)))
                fail(gamma_stat, to_json_string(*m));
    }
    return {alpha_stat, gamma_stat};
}

}  // namespace

const std::vector<std::string>& verify_suite_names() {
    static const std::vector<std::string> names = {
        "oracle",          "roundtrip-alpha", "roundtrip-beta",
        "roundtrip-gamma", "oeis",            "statistics",
        "all"};
    return names;
}

VerifyReport run_verify_suite(std::string_view suite, int max_n, const BruteForceGuard& guard) {
    VerifyReport report;
    report.suite = std::string(suite);
    report.max_n = max_n;
    if (max_n < 0) throw std::domain_error("verify: max-n must be nonnegative");

    auto append = [&](std::vector<VerifyCheck> checks) {
        for (auto& c : checks) report.checks.push_back(std::move(c));
    };
    const bool all = suite == "all";
    bool known = all;
    if (all || suite == "oracle") append(suite_oracle(max_n, guard)), known = true;
    if (all || suite == "roundtrip-alpha") append(suite_roundtrip_alpha(max_n, guard)), known = true;
    if (all || suite == "roundtrip-beta") append(suite_roundtrip_beta(max_n, guard)), known = true;
    if (all || suite == "roundtrip-gamma") append(suite_roundtrip_gamma(max_n, guard)), known = true;
    if (all || suite == "oeis") append(suite_oeis(max_n, guard)), known = true;
    if (all || suite == "statistics") append(suite_statistics(max_n, guard)), known = true;
    if (!known)
        throw std::invalid_argument("verify: unknown suite '" + report.suite + "'");

    report.pass = std::all_of(report.checks.begin(), report.checks.end(),
                              [](const VerifyCheck& c) { return c.pass; });
    return report;
}

}  // namespace nestwork
