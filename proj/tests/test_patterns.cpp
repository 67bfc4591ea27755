#include <random>

#include "doctest.h"
#include "nestwork/diagram.hpp"
#include "nestwork/enumerate.hpp"
#include "nestwork/patterns.hpp"
#include "test_support.hpp"

using namespace nestwork;

TEST_CASE("left crossings of the 18-vertex matching, in listing order") {
    const Diagram d(18, {{1, 9}, {2, 10}, {3, 15}, {5, 11}, {6, 12}, {7, 16}, {8, 17}, {14, 18}});
    const auto occ = occurrences(d, PatternKind::LeftCrossing);
    REQUIRE(occ.size() == 5);
    CHECK(occ[0].arcs == std::vector<Arc>{{1, 9}, {2, 10}});
    CHECK(occ[1].arcs == std::vector<Arc>{{2, 10}, {3, 15}});
    CHECK(occ[2].arcs == std::vector<Arc>{{5, 11}, {6, 12}});
    CHECK(occ[3].arcs == std::vector<Arc>{{6, 12}, {7, 16}});
    CHECK(occ[4].arcs == std::vector<Arc>{{7, 16}, {8, 17}});
    CHECK(count_left_crossings(d) == 5);
}

TEST_CASE("neighbor alignments") {
    CHECK(occurrences(Diagram(6, {{1, 4}, {3, 5}}), PatternKind::NeighborAlignment).empty());
    const auto occ = occurrences(Diagram(6, {{1, 3}, {4, 6}}), PatternKind::NeighborAlignment);
    REQUIRE(occ.size() == 1);
    CHECK(occ[0].arcs == std::vector<Arc>{{1, 3}, {4, 6}});
}

TEST_CASE("a single arc realizes no two-arc pattern") {
    const Diagram d(2, {{1, 2}});
    for (PatternKind k : {PatternKind::Nesting, PatternKind::LeftNesting,
                          PatternKind::RightNesting, PatternKind::Crossing,
                          PatternKind::LeftCrossing, PatternKind::RightCrossing,
                          PatternKind::Alignment, PatternKind::NeighborAlignment})
        CHECK(occurrences(d, k).empty());
    CHECK(occurrences(d, Pattern::k_crossing(2)).empty());
}

TEST_CASE("avoids") {
    CHECK(avoids(Diagram(6, {{1, 4}, {3, 5}}), {PatternKind::NeighborAlignment}));
    CHECK_FALSE(avoids(Diagram(4, {{1, 3}, {2, 4}}), {PatternKind::LeftCrossing}));
    CHECK(avoids(Diagram(2, {{1, 2}}),
                 {PatternKind::Nesting, PatternKind::LeftNesting, PatternKind::RightNesting,
                  PatternKind::Crossing, PatternKind::LeftCrossing, PatternKind::RightCrossing,
                  PatternKind::Alignment, PatternKind::NeighborAlignment}));
}

TEST_CASE("count_transients") {
    CHECK(count_transients(from_blocks(Blocks({{1, 3, 5, 8}, {2, 4, 6, 9, 11}, {7, 10}}))) == 5);
    CHECK(count_transients(from_blocks(Blocks({{1, 5}, {2, 3, 4, 7}, {6, 8}}))) == 2);
    CHECK(count_transients(Diagram(6, {{1, 4}, {3, 5}})) == 0);
}

TEST_CASE("adjacent patterns specialize their classical versions (exhaustive n <= 8)") {
    auto is_sublist = [](const std::vector<PatternOccurrence>& part,
                         const std::vector<PatternOccurrence>& whole) {
        std::size_t i = 0;
        for (const auto& occ : part) {
            while (i < whole.size() && whole[i].arcs != occ.arcs) ++i;
            if (i == whole.size()) return false;
            ++i;
        }
        return true;
    };
    for (int n = 0; n <= 8; ++n) {
        PartitionStream stream = all_partitions(n);
        while (auto d = stream.next()) {
            const auto nests = occurrences(*d, PatternKind::Nesting);
            const auto crossings = occurrences(*d, PatternKind::Crossing);
            if (!is_sublist(occurrences(*d, PatternKind::LeftNesting), nests))
                FAIL("left nesting not a nesting at n=" << n);
            if (!is_sublist(occurrences(*d, PatternKind::RightNesting), nests))
                FAIL("right nesting not a nesting at n=" << n);
            if (!is_sublist(occurrences(*d, PatternKind::LeftCrossing), crossings))
                FAIL("left crossing not a crossing at n=" << n);
            if (!is_sublist(occurrences(*d, PatternKind::RightCrossing), crossings))
                FAIL("right crossing not a crossing at n=" << n);
            if (!is_sublist(occurrences(*d, PatternKind::NeighborAlignment),
                            occurrences(*d, PatternKind::Alignment)))
                FAIL("neighbor alignment not an alignment at n=" << n);
            // 2-crossings are exactly the crossings.
            const auto kc = occurrences(*d, Pattern::k_crossing(2));
            REQUIRE(kc.size() == crossings.size());
            for (std::size_t t = 0; t < kc.size(); ++t)
                if (kc[t].arcs != crossings[t].arcs) FAIL("2-crossing mismatch");
        }
    }
}

TEST_CASE("k-crossings") {
    const Diagram triple(6, {{1, 4}, {2, 5}, {3, 6}});
    CHECK(occurrences(triple, Pattern::k_crossing(3)).size() == 1);
    CHECK(occurrences(triple, Pattern::k_crossing(2)).size() == 3);
    CHECK(occurrences(triple, Pattern::k_crossing(4)).empty());
    CHECK_THROWS_AS(Pattern::k_crossing(1), std::invalid_argument);
}

TEST_CASE("scan agrees with the definitional double implementation") {
    std::mt19937 rng(20250810);
    for (int trial = 0; trial < 400; ++trial) {
        const Diagram d = (trial % 2 == 0) ? testsupport::random_partition(rng, 12)
                                           : testsupport::random_matching(rng, 14);
        for (const std::string& name :
             {std::string("nesting"), std::string("left-nesting"), std::string("right-nesting"),
              std::string("crossing"), std::string("left-crossing"),
              std::string("right-crossing"), std::string("alignment"),
              std::string("neighbor-alignment")}) {
            const Pattern p = Pattern::parse(name);
            const auto occ = occurrences(d, p);
            if (static_cast<int>(occ.size()) != testsupport::naive_pair_count(d, name))
                FAIL("count mismatch for " << name);
            for (const auto& o : occ)
                if (!realizes(p, o.arcs)) FAIL("occurrence fails re-evaluation for " << name);
        }
    }
}

TEST_CASE("avoids distributes over unions of pattern sets") {
    std::mt19937 rng(4242);
    const std::vector<Pattern> k1 = {PatternKind::NeighborAlignment, PatternKind::LeftNesting};
    const std::vector<Pattern> k2 = {PatternKind::RightNesting};
    std::vector<Pattern> k12 = k1;
    k12.insert(k12.end(), k2.begin(), k2.end());
    for (int trial = 0; trial < 200; ++trial) {
        const Diagram d = testsupport::random_matching(rng, 12);
        CHECK(avoids(d, std::span<const Pattern>(k12)) ==
              (avoids(d, std::span<const Pattern>(k1)) && avoids(d, std::span<const Pattern>(k2))));
    }
}

TEST_CASE("pattern names parse and print") {
    for (const char* name : {"nesting", "left-nesting", "right-nesting", "crossing",
                             "left-crossing", "right-crossing", "alignment",
                             "neighbor-alignment", "k-crossing:3"})
        CHECK(Pattern::parse(name).name() == name);
    CHECK_THROWS_AS(Pattern::parse("zigzag"), std::invalid_argument);
    CHECK_THROWS_AS(Pattern::parse("k-crossing:x"), std::invalid_argument);
    CHECK_THROWS_AS(Pattern::parse("k-crossing:1"), std::invalid_argument);
}
