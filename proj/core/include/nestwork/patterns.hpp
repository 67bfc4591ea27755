#pragma once

#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nestwork/diagram.hpp"

namespace nestwork {

// The neighbor/classical patterns. For two arcs (i1,j1), (i2,j2) with
// i1 < i2 the defining conditions are:
//
//   nesting            i1 < i2 < j2 < j1
//   left nesting       nesting with i2 = i1 + 1
//   right nesting      nesting with j1 = j2 + 1
//   crossing           i1 < i2 < j1 < j2
//   left crossing      crossing with i2 = i1 + 1
//   right crossing     crossing with j2 = j1 + 1
//   alignment          i1 < j1 < i2 < j2
//   neighbor alignment alignment with i2 = j1 + 1
//
// A k-crossing is k arcs with i1 < ... < ik < j1 < ... < jk.
enum class PatternKind {
    Nesting,
    LeftNesting,
    RightNesting,
    Crossing,
    LeftCrossing,
    RightCrossing,
    Alignment,
    NeighborAlignment,
    KCrossing,
};

class Pattern {
public:
    // Implicit on purpose: avoids(d, {PatternKind::LeftNesting, ...}).
    Pattern(PatternKind kind);
    static Pattern k_crossing(int k);  // k >= 2

    PatternKind kind() const { return kind_; }
    // Number of arcs in one occurrence (2, or k for a k-crossing).
    int order() const { return k_; }

    // CLI-facing names: "nesting", "left-nesting", ..., "k-crossing:<k>".
    std::string name() const;
    static Pattern parse(std::string_view name);

    friend bool operator==(const Pattern&, const Pattern&) = default;

private:
    Pattern(PatternKind kind, int k) : kind_(kind), k_(k) {}
    PatternKind kind_;
    int k_;
};

struct PatternOccurrence {
    Pattern pattern;
    std::vector<Arc> arcs;  // ordered by left endpoint
};

// True iff `arcs` (ordered by left endpoint) satisfies the defining
// inequalities of `p`. This is the single source of truth for the
// pattern semantics; occurrence listings re-use it.
bool realizes(const Pattern& p, std::span<const Arc> arcs);

// Complete, duplicate-free occurrence list, lexicographic by arc tuple.
std::vector<PatternOccurrence> occurrences(const Diagram& d, const Pattern& p);

bool contains(const Diagram& d, const Pattern& p);
bool avoids(const Diagram& d, std::span<const Pattern> patterns);
bool avoids(const Diagram& d, std::initializer_list<Pattern> patterns);

// Vertices that are both a right-hand and a left-hand endpoint.
int count_transients(const Diagram& d);

// Occurrence count of the left-crossing pattern; the statistic exchanged
// with count_transients by the alpha and gamma bijections.
int count_left_crossings(const Diagram& d);

}  // namespace nestwork
