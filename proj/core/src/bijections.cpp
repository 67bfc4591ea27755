#include "nestwork/bijections.hpp"

#include <algorithm>
#include <climits>
#include <stdexcept>
#include <string>
#include <utility>

#include "nestwork/patterns.hpp"

namespace nestwork {

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_) {
        if (p < 0) throw std::invalid_argument("Composition: negative part");
        total_ += p;
    }
}

CompositionStream::CompositionStream(int total, int parts) : parts_(parts) {
    if (total < 0 || parts < 0)
        throw std::domain_error("compositions: total and parts must be nonnegative");
    if (parts == 0) {
        if (total > 0)
            throw std::domain_error("compositions: positive total needs at least one part");
        return;  // the single empty composition
    }
    cur_.assign(parts, 0);
    cur_[0] = total;
}

bool CompositionStream::advance() {
    // Move one unit from the rightmost movable position one slot to the
    // right, pulling everything after it back in.
    for (int i = parts_ - 2; i >= 0; --i) {
        if (cur_[i] > 0) {
            int moved = 1;
            for (int j = i + 1; j < parts_; ++j) {
                moved += cur_[j];
                cur_[j] = 0;
            }
            cur_[i] -= 1;
            cur_[i + 1] = moved;
            return true;
        }
    }
    return false;
}

std::optional<Composition> CompositionStream::next() {
    if (done_) return std::nullopt;
    Composition out{cur_};
    if (!advance()) done_ = true;
    return out;
}

CompositionStream compositions(int total, int parts) { return CompositionStream(total, parts); }

IntervalProfile::IntervalProfile(std::vector<std::vector<int>> blocks)
    : blocks_(std::move(blocks)) {
    const int m = static_cast<int>(blocks_.size());
    if (m == 0) throw std::invalid_argument("IntervalProfile: needs at least one interval");
    for (int i = 0; i < m; ++i) {
        if (static_cast<int>(blocks_[i].size()) != m - i)
            throw std::invalid_argument("IntervalProfile: block " + std::to_string(i + 1) +
                                        " must have " + std::to_string(m - i) + " entries");
        for (int v : blocks_[i])
            if (v < 0) throw std::invalid_argument("IntervalProfile: negative entry");
    }
}

IntervalProfile::IntervalProfile(std::initializer_list<std::vector<int>> blocks)
    : IntervalProfile(std::vector<std::vector<int>>(blocks)) {}

IntervalProfile IntervalProfile::from_flat(const Composition& flat) {
    const int len = flat.size();
    int m = 0;
    while (m * (m + 1) / 2 < len) ++m;
    if (m == 0 || m * (m + 1) / 2 != len)
        throw std::invalid_argument("IntervalProfile: flat length " + std::to_string(len) +
                                    " is not a positive triangular number");
    std::vector<std::vector<int>> blocks(m);
    auto it = flat.parts().begin();
    for (int i = 0; i < m; ++i) {
        blocks[i].assign(it, it + (m - i));
        it += m - i;
    }
    return IntervalProfile(std::move(blocks));
}

Composition IntervalProfile::flatten() const {
    std::vector<int> flat;
    for (const auto& b : blocks_) flat.insert(flat.end(), b.begin(), b.end());
    return Composition(std::move(flat));
}

int IntervalProfile::total() const {
    int t = 0;
    for (const auto& b : blocks_)
        for (int v : b) t += v;
    return t;
}

namespace {

// Mutable arc diagram under construction. Vertices are stable token
// ids; the left-to-right order lives in a separate sequence, so
// inserting or deleting a vertex never touches arc endpoints and the
// final labels are simply the positions.
class TokenDiagram {
public:
    TokenDiagram() = default;
    explicit TokenDiagram(const Diagram& d) {
        seq_.resize(d.vertex_count());
        for (int i = 0; i < d.vertex_count(); ++i) seq_[i] = i;
        next_token_ = d.vertex_count();
        for (const Arc& a : d.arcs()) arcs_.push_back({a.left - 1, a.right - 1});
        reindex();
    }

    struct TokArc {
        int left;
        int right;
    };

    int size() const { return static_cast<int>(seq_.size()); }
    std::vector<TokArc>& arcs() { return arcs_; }
    const std::vector<TokArc>& arcs() const { return arcs_; }

    int position_of(int tok) const { return pos_[tok]; }  // 1-indexed
    int token_at(int pos) const { return seq_[pos - 1]; }

    // Fresh token placed so it ends up at position pos (1 <= pos <= size+1).
    int insert_token_at(int pos) {
        const int tok = next_token_++;
        seq_.insert(seq_.begin() + (pos - 1), tok);
        reindex();
        return tok;
    }

    void erase_token(int tok) {
        seq_.erase(seq_.begin() + (position_of(tok) - 1));
        reindex();
    }

    bool is_left_endpoint(int tok) const {
        return std::any_of(arcs_.begin(), arcs_.end(),
                           [&](const TokArc& a) { return a.left == tok; });
    }
    bool is_right_endpoint(int tok) const {
        return std::any_of(arcs_.begin(), arcs_.end(),
                           [&](const TokArc& a) { return a.right == tok; });
    }
    bool is_singleton(int tok) const {
        return !is_left_endpoint(tok) && !is_right_endpoint(tok);
    }

    // Left-only endpoints in position order.
    std::vector<int> origins() const {
        std::vector<int> out;
        for (int tok : seq_)
            if (is_left_endpoint(tok) && !is_right_endpoint(tok)) out.push_back(tok);
        return out;
    }

    Diagram to_diagram() const {
        std::vector<Arc> arcs;
        arcs.reserve(arcs_.size());
        for (const TokArc& a : arcs_)
            arcs.push_back({position_of(a.left), position_of(a.right)});
        return Diagram(size(), std::move(arcs));
    }

private:
    std::vector<int> seq_;
    std::vector<int> pos_;  // token id -> 1-indexed position, -1 if erased
    std::vector<TokArc> arcs_;
    int next_token_ = 0;

    void reindex() {
        pos_.assign(next_token_, -1);
        for (int i = 0; i < size(); ++i) pos_[seq_[i]] = i + 1;
    }
};

bool has_right_nesting(const TokenDiagram& t) {
    const auto& arcs = t.arcs();
    for (std::size_t a = 0; a < arcs.size(); ++a) {
        const int la = t.position_of(arcs[a].left);
        const int ra = t.position_of(arcs[a].right);
        for (std::size_t b = 0; b < arcs.size(); ++b) {
            if (a == b) continue;
            const int lb = t.position_of(arcs[b].left);
            const int rb = t.position_of(arcs[b].right);
            if (la < lb && rb < ra && ra == rb + 1) return true;
        }
    }
    return false;
}

// Fresh singleton immediately before every origin except the first.
void add_pre_origin_singletons(TokenDiagram& t) {
    const std::vector<int> origins = t.origins();
    for (std::size_t i = 1; i < origins.size(); ++i)
        t.insert_token_at(t.position_of(origins[i]));
}

// Drop the singleton immediately before every origin except the first,
// where there is one.
void drop_pre_origin_singletons(TokenDiagram& t) {
    const std::vector<int> origins = t.origins();
    for (std::size_t i = origins.size(); i-- > 1;) {
        const int pos = t.position_of(origins[i]);
        if (pos < 2) continue;
        const int before = t.token_at(pos - 1);
        if (t.is_singleton(before)) t.erase_token(before);
    }
}

std::vector<int> singleton_positions(const Diagram& d) {
    std::vector<char> endpoint(d.vertex_count() + 1, 0);
    for (const Arc& a : d.arcs()) endpoint[a.left] = endpoint[a.right] = 1;
    std::vector<int> singles;
    for (int v = 1; v <= d.vertex_count(); ++v)
        if (!endpoint[v]) singles.push_back(v);
    return singles;
}

// blocks[i-1][j-i] = number of arcs with origin in interval i and
// destination in interval j, the intervals being the maximal runs of
// non-singleton vertices between consecutive singletons.
std::vector<std::vector<int>> profile_blocks(const Diagram& d) {
    const std::vector<int> singles = singleton_positions(d);
    const int m = static_cast<int>(singles.size()) + 1;
    auto interval_of = [&](int v) {
        return static_cast<int>(std::upper_bound(singles.begin(), singles.end(), v) -
                                singles.begin()) +
               1;
    };
    std::vector<std::vector<int>> blocks(m);
    for (int i = 0; i < m; ++i) blocks[i].assign(m - i, 0);
    for (const Arc& a : d.arcs()) {
        const int i = interval_of(a.left);
        const int j = interval_of(a.right);
        blocks[i - 1][j - i] += 1;
    }
    return blocks;
}

void require_class_r(const Diagram& m, const char* who) {
    if (!m.is_partial_matching() ||
        !avoids(m, {PatternKind::NeighborAlignment, PatternKind::LeftNesting,
                    PatternKind::RightNesting}))
        throw std::invalid_argument(
            std::string(who) +
            ": input must be a partial matching with no neighbor alignments and no nestings "
            "on adjacent endpoints");
}

}  // namespace

Diagram alpha(const Diagram& partition) {
    TokenDiagram t(partition);
    add_pre_origin_singletons(t);
    for (;;) {
        // The 2-path (i,j),(j,k) whose middle vertex j is leftmost.
        int best_a = -1, best_b = -1, best_mid = INT_MAX;
        auto& arcs = t.arcs();
        for (std::size_t a = 0; a < arcs.size(); ++a)
            for (std::size_t b = 0; b < arcs.size(); ++b) {
                if (arcs[a].right != arcs[b].left) continue;
                const int mid = t.position_of(arcs[a].right);
                if (mid < best_mid) {
                    best_mid = mid;
                    best_a = static_cast<int>(a);
                    best_b = static_cast<int>(b);
                }
            }
        if (best_a < 0) break;
        // Split the transient: a new vertex right after i takes over as
        // the left endpoint of the second arc, leaving the left crossing
        // (i, j+1), (i+1, k+1).
        const int w = t.insert_token_at(t.position_of(arcs[best_a].left) + 1);
        arcs[best_b].left = w;
    }
    return t.to_diagram();
}

Diagram alpha_inv(const Diagram& matching) {
    if (!matching.is_partial_matching() ||
        !avoids(matching, {PatternKind::NeighborAlignment, PatternKind::LeftNesting}))
        throw std::invalid_argument(
            "alpha_inv: input must be a partial matching avoiding neighbor alignments "
            "and left nestings");
    TokenDiagram t(matching);
    for (;;) {
        // Rightmost left crossing: arcs (i,j1), (i+1,j2) with i largest.
        int best_a = -1, best_b = -1, best_pos = -1;
        auto& arcs = t.arcs();
        for (std::size_t a = 0; a < arcs.size(); ++a) {
            const int la = t.position_of(arcs[a].left);
            const int ra = t.position_of(arcs[a].right);
            for (std::size_t b = 0; b < arcs.size(); ++b) {
                if (a == b) continue;
                const int lb = t.position_of(arcs[b].left);
                const int rb = t.position_of(arcs[b].right);
                if (lb == la + 1 && lb < ra && ra < rb && la > best_pos) {
                    best_pos = la;
                    best_a = static_cast<int>(a);
                    best_b = static_cast<int>(b);
                }
            }
        }
        if (best_a < 0) break;
        // Merge the crossing back into a 2-path through j1.
        const int w = arcs[best_b].left;
        arcs[best_b].left = arcs[best_a].right;
        t.erase_token(w);
    }
    drop_pre_origin_singletons(t);
    return t.to_diagram();
}

IntervalProfile beta(const Diagram& matching) {
    require_class_r(matching, "beta");
    return IntervalProfile(profile_blocks(matching));
}

Diagram beta_inv(const IntervalProfile& profile) {
    const int m = profile.interval_count();
    const auto& blocks = profile.blocks();
    std::vector<int> origin_count(m + 1, 0), dest_count(m + 1, 0);
    for (int i = 1; i <= m; ++i) {
        for (int v : blocks[i - 1]) origin_count[i] += v;
        for (int i2 = 1; i2 <= i; ++i2) dest_count[i] += blocks[i2 - 1][i - i2];
    }
    // Interval i holds its origins, then its destinations, then the
    // separating singleton.
    std::vector<std::vector<int>> origin_labels(m + 1), dest_labels(m + 1);
    int label = 0;
    for (int i = 1; i <= m; ++i) {
        for (int c = 0; c < origin_count[i]; ++c) origin_labels[i].push_back(++label);
        for (int c = 0; c < dest_count[i]; ++c) dest_labels[i].push_back(++label);
        if (i < m) ++label;
    }
    const int n = label;
    // Origins of interval i pair with the earliest destinations still
    // unprocessed, taken interval by interval, forming one crossing.
    std::vector<int> next_unprocessed(m + 1, 0);
    std::vector<Arc> arcs;
    for (int i = 1; i <= m; ++i) {
        std::vector<int> chosen;
        for (int j = i; j <= m; ++j)
            for (int c = 0; c < blocks[i - 1][j - i]; ++c)
                chosen.push_back(dest_labels[j][next_unprocessed[j]++]);
        for (std::size_t u = 0; u < chosen.size(); ++u)
            arcs.push_back({origin_labels[i][u], chosen[u]});
    }
    return Diagram(n, std::move(arcs));
}

Diagram gamma(const Diagram& matching) {
    require_class_r(matching, "gamma");
    const auto blocks = profile_blocks(matching);
    const int m = static_cast<int>(blocks.size());

    TokenDiagram t;
    std::vector<int> separators;
    for (int i = 0; i < m - 1; ++i) separators.push_back(t.insert_token_at(t.size() + 1));

    auto interval_first = [&](int i) {
        return i == 1 ? 1 : t.position_of(separators[i - 2]) + 1;
    };
    auto interval_last = [&](int i) {
        return i == m ? t.size() : t.position_of(separators[i - 1]) - 1;
    };
    auto interval_end_slot = [&](int i) {
        return i == m ? t.size() + 1 : t.position_of(separators[i - 1]);
    };
    auto right_endpoints_in = [&](int i, int after_pos) {
        std::vector<int> toks;
        for (int p = std::max(interval_first(i), after_pos + 1); p <= interval_last(i); ++p)
            if (t.is_right_endpoint(t.token_at(p))) toks.push_back(t.token_at(p));
        return toks;
    };

    for (int i = 1; i <= m; ++i) {
        int path_len = 0;
        for (int v : blocks[i - 1]) path_len += v;
        if (path_len == 0) continue;
        // Path origin: immediately before the leftmost right endpoint
        // already in interval i, else at the end of the interval.
        const auto seen = right_endpoints_in(i, 0);
        int prev = t.insert_token_at(seen.empty() ? interval_end_slot(i)
                                                  : t.position_of(seen.front()));
        for (int j = i; j <= m; ++j) {
            for (int c = 0; c < blocks[i - 1][j - i]; ++c) {
                // Candidate slots: before each right endpoint past prev in
                // interval j, then the interval end. Exactly one of them
                // creates no right nesting.
                std::vector<int> candidates;
                for (int rtok : right_endpoints_in(j, t.position_of(prev)))
                    candidates.push_back(t.position_of(rtok));
                candidates.push_back(interval_end_slot(j));
                int chosen_pos = -1, feasible = 0;
                for (int pos : candidates) {
                    const int d = t.insert_token_at(pos);
                    t.arcs().push_back({prev, d});
                    const bool ok = !has_right_nesting(t);
                    t.arcs().pop_back();
                    t.erase_token(d);
                    if (ok) {
                        ++feasible;
                        if (chosen_pos < 0) chosen_pos = pos;
                    }
                }
                if (feasible != 1)
                    throw std::logic_error("gamma: arc insertion slot not unique (" +
                                           std::to_string(feasible) + " feasible slots)");
                const int d = t.insert_token_at(chosen_pos);
                t.arcs().push_back({prev, d});
                prev = d;
            }
        }
    }
    drop_pre_origin_singletons(t);
    return t.to_diagram();
}

Diagram gamma_inv(const Diagram& partition) {
    if (!avoids(partition, {PatternKind::RightNesting}))
        throw std::invalid_argument("gamma_inv: input must be a partition with no right nestings");
    TokenDiagram t(partition);
    add_pre_origin_singletons(t);
    const Diagram aug = t.to_diagram();

    const std::vector<int> singles = singleton_positions(aug);
    const int m = static_cast<int>(singles.size()) + 1;
    auto interval_of = [&](int v) {
        return static_cast<int>(std::upper_bound(singles.begin(), singles.end(), v) -
                                singles.begin()) +
               1;
    };

    // Per-interval path compositions: entry j-i of block i counts the
    // right endpoints in interval j of the path starting in interval i.
    std::vector<std::vector<int>> blocks(m);
    for (int i = 0; i < m; ++i) blocks[i].assign(m - i, 0);
    for (int v = 1; v <= aug.vertex_count(); ++v) {
        if (aug.role_of(v) != Role::Origin) continue;
        const int i = interval_of(v);
        for (int w = v; auto nxt = aug.arc_from(w); w = *nxt) {
            const int j = interval_of(*nxt);
            if (j < i) throw std::logic_error("gamma_inv: path runs backwards");
            blocks[i - 1][j - i] += 1;
        }
    }
    return beta_inv(IntervalProfile(std::move(blocks)));
}

}  // namespace nestwork
