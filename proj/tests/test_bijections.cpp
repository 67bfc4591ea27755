#include <map>
#include <set>

#include "doctest.h"
#include "nestwork/bijections.hpp"
#include "nestwork/enumerate.hpp"
#include "nestwork/patterns.hpp"

using namespace nestwork;

namespace {

// The worked 15-vertex matching with interval profile
// (0,2,0,0),(1,0,1),(1,0),(1).
const Blocks kR15Example({{1, 6}, {2, 7}, {3}, {4, 8}, {5, 14}, {9}, {10, 11}, {12}, {13, 15}});

// The 18-vertex matching and the 11-vertex partition it maps to under
// gamma; both carry statistic value 5.
const Diagram kGammaMatching(18, {{1, 9},
                                  {2, 10},
                                  {3, 15},
                                  {5, 11},
                                  {6, 12},
                                  {7, 16},
                                  {8, 17},
                                  {14, 18}});
const Blocks kGammaPartition({{1, 3, 5, 8}, {2, 4, 6, 9, 11}, {7, 10}});

}  // namespace

TEST_CASE("compositions stream, first part largest first") {
    CompositionStream stream = compositions(1, 3);
    CHECK(stream.next()->parts() == std::vector<int>{1, 0, 0});
    CHECK(stream.next()->parts() == std::vector<int>{0, 1, 0});
    CHECK(stream.next()->parts() == std::vector<int>{0, 0, 1});
    CHECK_FALSE(stream.next().has_value());

    BigInt count = 0;
    CompositionStream big = compositions(6, 10);
    while (big.next()) ++count;
    CHECK(count == 5005);

    CompositionStream zeros = compositions(0, 4);
    CHECK(zeros.next()->parts() == std::vector<int>{0, 0, 0, 0});
    CHECK_FALSE(zeros.next().has_value());

    CompositionStream empty = compositions(0, 0);
    CHECK(empty.next()->size() == 0);
    CHECK_FALSE(empty.next().has_value());
    CHECK_THROWS_AS(compositions(1, 0), std::domain_error);
}

TEST_CASE("interval profile validation and flattening") {
    const IntervalProfile p({{0, 2, 0, 0}, {1, 0, 1}, {1, 0}, {1}});
    CHECK(p.interval_count() == 4);
    CHECK(p.total() == 6);
    CHECK(p.flatten().parts() == std::vector<int>{0, 2, 0, 0, 1, 0, 1, 1, 0, 1});
    CHECK(IntervalProfile::from_flat(p.flatten()) == p);

    CHECK_THROWS_AS(IntervalProfile({{0, 1}, {1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(IntervalProfile({{-1}}), std::invalid_argument);
    CHECK_THROWS_AS(IntervalProfile({}), std::invalid_argument);
    CHECK_THROWS_AS(IntervalProfile::from_flat(Composition({1, 2})), std::invalid_argument);
}

TEST_CASE("alpha maps the S(8,3) example to the Q(12,5) matching") {
    const Diagram p = from_blocks(Blocks({{1, 5}, {2, 3, 4, 7}, {6, 8}}));
    const Diagram image = alpha(p);
    CHECK(to_blocks(image) ==
          Blocks({{1, 8}, {2}, {3, 6}, {4, 7}, {5, 11}, {9}, {10, 12}}));
    CHECK(image.vertex_count() == 12);
    CHECK(image.arc_count() == 5);
    CHECK(in_class(image, ClassId::Q));
    CHECK(alpha_inv(image) == p);
    CHECK(count_transients(p) == count_left_crossings(image));
}

TEST_CASE("alpha degenerate cases") {
    const Diagram singletons(4, {});
    CHECK(alpha(singletons) == singletons);  // no origins, no 2-paths

    const Diagram one_arc = from_blocks(Blocks({{1, 2}, {3}}));
    CHECK(alpha(one_arc) == one_arc);  // k = 1 adds k-1 = 0 vertices
    CHECK(alpha_inv(one_arc) == one_arc);
}

TEST_CASE("alpha_inv validates its domain") {
    CHECK_THROWS_AS(alpha_inv(Diagram(4, {{1, 4}, {2, 3}})), std::invalid_argument);  // left nesting
    CHECK_THROWS_AS(alpha_inv(Diagram(4, {{1, 2}, {3, 4}})), std::invalid_argument);  // neighbor alignment
    CHECK_THROWS_AS(alpha_inv(Diagram(3, {{1, 2}, {2, 3}})), std::invalid_argument);  // not a matching
}

TEST_CASE("alpha round-trips over all partitions of [m], m <= 7") {
    for (int m = 0; m <= 7; ++m) {
        PartitionStream stream = all_partitions(m);
        while (auto p = stream.next()) {
            const Diagram image = alpha(*p);
            CHECK(in_class(image, ClassId::Q));
            CHECK(image.arc_count() == p->arc_count());
            if (p->arc_count() >= 1)
                CHECK(image.vertex_count() == p->vertex_count() + p->arc_count() - 1);
            if (alpha_inv(image) != *p) FAIL("alpha round trip failed at m=" << m);
            if (count_transients(*p) != count_left_crossings(image))
                FAIL("alpha statistic mismatch at m=" << m);
        }
    }
}

TEST_CASE("alpha is onto Q: exhaustive surjectivity at small sizes") {
    // Images of partitions of [m] with k arcs, keyed by (m+k-1, k),
    // compared against the Q class enumerated directly.
    std::map<std::pair<int, int>, std::set<Diagram>> images;
    for (int m = 0; m <= 7; ++m) {
        PartitionStream stream = all_partitions(m);
        while (auto p = stream.next()) {
            const int k = p->arc_count();
            if (k >= 1) images[{m + k - 1, k}].insert(alpha(*p));
        }
    }
    for (const auto& [key, set] : images) {
        const auto [n, k] = key;
        if (n > 8) continue;
        std::set<Diagram> q_class;
        ClassMemberStream stream = class_members(ClassId::Q, n, k);
        while (auto d = stream.next()) q_class.insert(*d);
        CHECK(set == q_class);
    }
}

TEST_CASE("beta maps the R(15,6) example to its flat composition") {
    const Diagram m = from_blocks(kR15Example);
    REQUIRE(in_class(m, ClassId::R));
    const IntervalProfile profile = beta(m);
    CHECK(profile.blocks() ==
          std::vector<std::vector<int>>{{0, 2, 0, 0}, {1, 0, 1}, {1, 0}, {1}});
    CHECK(profile.flatten().parts() == std::vector<int>{0, 2, 0, 0, 1, 0, 1, 1, 0, 1});
    CHECK(beta_inv(profile) == m);
}

TEST_CASE("beta degenerate cases") {
    CHECK(beta(Diagram()).blocks() == std::vector<std::vector<int>>{{0}});
    CHECK(beta(Diagram(2, {{1, 2}})).blocks() == std::vector<std::vector<int>>{{1}});
    // all-zero profile with m intervals: m-1 singletons, no arcs
    CHECK(beta_inv(IntervalProfile({{0, 0, 0}, {0, 0}, {0}})) == Diagram(2, {}));
    CHECK_THROWS_AS(beta(Diagram(4, {{1, 2}, {3, 4}})), std::invalid_argument);
}

TEST_CASE("beta round-trips over class R up to 9 vertices") {
    for (int n = 0; n <= 9; ++n) {
        ClassMemberStream stream = class_members(ClassId::R, n);
        while (auto m = stream.next()) {
            const IntervalProfile profile = beta(*m);
            CHECK(profile.total() == m->arc_count());
            if (beta_inv(profile) != *m) FAIL("beta round trip failed at n=" << n);
        }
    }
}

TEST_CASE("beta_inv round-trips over compositions, total <= 4, up to 4 intervals") {
    for (int intervals = 1; intervals <= 4; ++intervals) {
        const int parts = intervals * (intervals + 1) / 2;
        for (int total = 0; total <= 4; ++total) {
            CompositionStream stream = compositions(total, parts);
            while (auto flat = stream.next()) {
                const IntervalProfile profile = IntervalProfile::from_flat(*flat);
                const Diagram built = beta_inv(profile);
                CHECK(in_class(built, ClassId::R));
                CHECK(built.vertex_count() == (intervals - 1) + 2 * total);
                if (beta(built) != profile)
                    FAIL("beta_inv round trip failed at intervals=" << intervals);
            }
        }
    }
}

TEST_CASE("gamma maps the 18-vertex matching to the 11-vertex partition") {
    REQUIRE(in_class(kGammaMatching, ClassId::R));
    const Diagram image = gamma(kGammaMatching);
    CHECK(to_blocks(image) == kGammaPartition);
    CHECK(image.vertex_count() == 11);
    CHECK(in_class(image, ClassId::T));
    CHECK(count_left_crossings(kGammaMatching) == 5);
    CHECK(count_transients(image) == 5);
    CHECK(gamma_inv(image) == kGammaMatching);
}

TEST_CASE("gamma degenerate cases") {
    const Diagram arc2(2, {{1, 2}});
    CHECK(gamma(arc2) == arc2);
    CHECK(gamma_inv(arc2) == arc2);
    const Diagram singles(3, {});
    CHECK(gamma(singles) == singles);
    CHECK(gamma_inv(singles) == singles);
}

TEST_CASE("gamma validates its domain") {
    CHECK_THROWS_AS(gamma(Diagram(4, {{1, 4}, {2, 3}})), std::invalid_argument);
    CHECK_THROWS_AS(gamma(Diagram(3, {{1, 2}, {2, 3}})), std::invalid_argument);
    // partition with a right nesting: arcs (1,4) and (2,3)
    CHECK_THROWS_AS(gamma_inv(Diagram(4, {{1, 4}, {2, 3}})), std::invalid_argument);
}

TEST_CASE("gamma round-trips over R(n,k), n <= 8, onto T(n-k+1,k)") {
    std::map<std::pair<int, int>, std::set<Diagram>> images;
    for (int n = 0; n <= 8; ++n) {
        ClassMemberStream stream = class_members(ClassId::R, n);
        while (auto m = stream.next()) {
            const Diagram image = gamma(*m);
            CHECK(in_class(image, ClassId::T));
            CHECK(image.arc_count() == m->arc_count());
            if (gamma_inv(image) != *m) FAIL("gamma round trip failed at n=" << n);
            if (count_left_crossings(*m) != count_transients(image))
                FAIL("gamma statistic mismatch at n=" << n);
            const int k = m->arc_count();
            if (k >= 1) {
                CHECK(image.vertex_count() == n - k + 1);
                images[{n - k + 1, k}].insert(image);
            }
        }
    }
    for (const auto& [key, set] : images) {
        std::set<Diagram> t_class;
        ClassMemberStream stream = class_members(ClassId::T, key.first, key.second);
        while (auto d = stream.next()) t_class.insert(*d);
        CHECK(set == t_class);
    }
}

TEST_CASE("arc counts are conserved by all maps") {
    for (int n = 0; n <= 7; ++n) {
        PartitionStream partitions = all_partitions(n);
        while (auto p = partitions.next())
            CHECK(alpha(*p).arc_count() == p->arc_count());
        ClassMemberStream r_members = class_members(ClassId::R, n);
        while (auto m = r_members.next()) {
            CHECK(gamma(*m).arc_count() == m->arc_count());
            CHECK(beta(*m).total() == m->arc_count());
        }
    }
}
