#pragma once

#include <optional>
#include <vector>

#include "nestwork/bigint.hpp"
#include "nestwork/diagram.hpp"

namespace nestwork {

// Sequence of nonnegative integers; components may be zero.
class Composition {
public:
    Composition() = default;
    explicit Composition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return static_cast<int>(parts_.size()); }
    int total() const { return total_; }

    friend bool operator==(const Composition&, const Composition&) = default;

private:
    std::vector<int> parts_;
    int total_ = 0;
};

// All compositions of `total` into `parts` components, first part
// largest first: (t,0,...,0), ..., (0,...,0,t). binom(total+parts-1, total)
// items. parts = 0 is allowed only with total = 0 (one empty composition).
class CompositionStream {
public:
    CompositionStream(int total, int parts);
    std::optional<Composition> next();

private:
    int parts_;
    bool done_ = false;
    std::vector<int> cur_;
    bool advance();
};

CompositionStream compositions(int total, int parts);

// The per-interval destination counts induced by a matching whose
// singletons cut the vertex line into m intervals: block i (1-indexed)
// has one entry per interval i..m, so block lengths are m, m-1, ..., 1
// and the flattened length is binom(m+1, 2).
class IntervalProfile {
public:
    explicit IntervalProfile(std::vector<std::vector<int>> blocks);
    IntervalProfile(std::initializer_list<std::vector<int>> blocks);
    static IntervalProfile from_flat(const Composition& flat);

    int interval_count() const { return static_cast<int>(blocks_.size()); }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }
    Composition flatten() const;
    int total() const;

    friend bool operator==(const IntervalProfile&, const IntervalProfile&) = default;

private:
    std::vector<std::vector<int>> blocks_;
};

// The three constructive bijections. Domains are validated eagerly:
// a precondition violation throws std::invalid_argument and nothing is
// produced. All maps preserve the number of arcs.

// Partition -> partial matching avoiding neighbor alignments and left
// nestings. A partition of [m] with k >= 1 arcs maps to a matching on
// m+k-1 vertices; arcless partitions are fixed points. The number of
// transients of the input equals the number of left crossings of the
// output.
Diagram alpha(const Diagram& partition);

// Inverse of alpha. Requires a partial matching avoiding neighbor
// alignments and left nestings.
Diagram alpha_inv(const Diagram& matching);

// Matching avoiding neighbor alignments and both nestings -> its
// interval profile. The profile determines the matching uniquely.
IntervalProfile beta(const Diagram& matching);

// Inverse of beta: rebuilds the unique matching with the given profile.
// A profile with m intervals and total K yields a matching on
// (m-1) + 2K vertices avoiding all three patterns.
Diagram beta_inv(const IntervalProfile& profile);

// Matching avoiding all three neighbor patterns -> partition avoiding
// right nestings. A matching on n vertices with k >= 1 arcs maps to a
// partition of [n-k+1]; arcless matchings are fixed points. The number
// of left crossings of the input equals the number of transients of
// the output.
Diagram gamma(const Diagram& matching);

// Inverse of gamma. Requires a partition avoiding right nestings.
Diagram gamma_inv(const Diagram& partition);

}  // namespace nestwork
