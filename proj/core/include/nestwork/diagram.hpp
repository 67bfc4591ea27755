#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace nestwork {

// Arc with left-hand endpoint `left` and right-hand endpoint `right`,
// 1 <= left < right. Vertices are 1-indexed throughout.
struct Arc {
    int left = 0;
    int right = 0;
    friend auto operator<=>(const Arc&, const Arc&) = default;
};

enum class Role { Singleton, Origin, Transient, Destination };

const char* to_string(Role r);

// Linear representation shared by set partitions and partial matchings:
// n vertices on a line, each block {i1 < i2 < ... < im} contributing the
// arcs (i1,i2), ..., (i_{m-1},i_m). Every vertex is the left endpoint of
// at most one arc and the right endpoint of at most one arc, so the arcs
// decompose into vertex-disjoint increasing paths. Immutable once built.
class Diagram {
public:
    Diagram() = default;  // the empty diagram on zero vertices
    Diagram(int n, std::vector<Arc> arcs);

    int vertex_count() const { return n_; }
    int arc_count() const { return static_cast<int>(arcs_.size()); }
    const std::vector<Arc>& arcs() const { return arcs_; }

    Role role_of(int v) const;  // throws std::out_of_range unless 1 <= v <= n
    bool is_partial_matching() const;  // true iff no vertex is a Transient

    // Right endpoint of the arc starting at v, if any.
    std::optional<int> arc_from(int v) const;
    // Left endpoint of the arc ending at v, if any.
    std::optional<int> arc_to(int v) const;

    friend bool operator==(const Diagram&, const Diagram&) = default;
    friend auto operator<=>(const Diagram&, const Diagram&) = default;

private:
    int n_ = 0;
    std::vector<Arc> arcs_;  // sorted by left endpoint
};

// A set partition of {1..n}: disjoint nonempty blocks covering {1..n}.
// Canonical form: each block ascending, blocks ordered by their minimum.
class Blocks {
public:
    Blocks() = default;  // the empty partition (n = 0)
    explicit Blocks(std::vector<std::vector<int>> blocks);

    int vertex_count() const { return n_; }
    int block_count() const { return static_cast<int>(blocks_.size()); }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }

    friend bool operator==(const Blocks&, const Blocks&) = default;

private:
    std::vector<std::vector<int>> blocks_;
    int n_ = 0;
};

Diagram from_blocks(const Blocks& b);
Blocks to_blocks(const Diagram& d);

}  // namespace nestwork
