#include "nestwork/patterns.hpp"

#include <charconv>
#include <stdexcept>

namespace nestwork {

Pattern::Pattern(PatternKind kind) : kind_(kind), k_(2) {
    if (kind == PatternKind::KCrossing)
        throw std::invalid_argument("Pattern: use Pattern::k_crossing(k) for k-crossings");
}

Pattern Pattern::k_crossing(int k) {
    if (k < 2) throw std::invalid_argument("Pattern: k-crossing requires k >= 2");
    return Pattern(PatternKind::KCrossing, k);
}

std::string Pattern::name() const {
    switch (kind_) {
        case PatternKind::Nesting: return "nesting";
        case PatternKind::LeftNesting: return "left-nesting";
        case PatternKind::RightNesting: return "right-nesting";
        case PatternKind::Crossing: return "crossing";
        case PatternKind::LeftCrossing: return "left-crossing";
        case PatternKind::RightCrossing: return "right-crossing";
        case PatternKind::Alignment: return "alignment";
        case PatternKind::NeighborAlignment: return "neighbor-alignment";
        case PatternKind::KCrossing: return "k-crossing:" + std::to_string(k_);
    }
    return "?";
}

Pattern Pattern::parse(std::string_view name) {
    if (name == "nesting") return PatternKind::Nesting;
    if (name == "left-nesting") return PatternKind::LeftNesting;
    if (name == "right-nesting") return PatternKind::RightNesting;
    if (name == "crossing") return PatternKind::Crossing;
    if (name == "left-crossing") return PatternKind::LeftCrossing;
    if (name == "right-crossing") return PatternKind::RightCrossing;
    if (name == "alignment") return PatternKind::Alignment;
    if (name == "neighbor-alignment") return PatternKind::NeighborAlignment;
    constexpr std::string_view prefix = "k-crossing:";
    if (name.substr(0, prefix.size()) == prefix) {
        const std::string_view num = name.substr(prefix.size());
        int k = 0;
        auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), k);
        if (ec != std::errc{} || ptr != num.data() + num.size())
            throw std::invalid_argument("Pattern::parse: bad k in '" + std::string(name) + "'");
        return k_crossing(k);
    }
    throw std::invalid_argument("Pattern::parse: unknown pattern '" + std::string(name) + "'");
}

namespace {

bool pair_realizes(PatternKind kind, const Arc& a, const Arc& b) {
    // a and b ordered by left endpoint: a.left < b.left.
    switch (kind) {
        case PatternKind::Nesting:
            return a.left < b.left && b.right < a.right;
        case PatternKind::LeftNesting:
            return b.left == a.left + 1 && b.right < a.right;
        case PatternKind::RightNesting:
            return a.left < b.left && a.right == b.right + 1;
        case PatternKind::Crossing:
            return b.left < a.right && a.right < b.right;
        case PatternKind::LeftCrossing:
            return b.left == a.left + 1 && b.left < a.right && a.right < b.right;
        case PatternKind::RightCrossing:
            return b.left < a.right && b.right == a.right + 1;
        case PatternKind::Alignment:
            return a.right < b.left;
        case PatternKind::NeighborAlignment:
            return b.left == a.right + 1;
        case PatternKind::KCrossing:
            break;
    }
    throw std::logic_error("pair_realizes: not a two-arc pattern");
}

}  // namespace

bool realizes(const Pattern& p, std::span<const Arc> arcs) {
    if (p.kind() == PatternKind::KCrossing) {
        if (static_cast<int>(arcs.size()) != p.order()) return false;
        for (std::size_t t = 0; t + 1 < arcs.size(); ++t)
            if (arcs[t].left >= arcs[t + 1].left || arcs[t].right >= arcs[t + 1].right)
                return false;
        return arcs.back().left < arcs.front().right;
    }
    if (arcs.size() != 2) return false;
    if (arcs[0].left >= arcs[1].left) return false;
    return pair_realizes(p.kind(), arcs[0], arcs[1]);
}

namespace {

// Visits every candidate arc tuple in lexicographic order; stops early
// when the visitor returns false.
template <typename Visitor>
void scan(const Diagram& d, const Pattern& p, Visitor&& visit) {
    const auto& arcs = d.arcs();  // sorted by left endpoint
    const int m = static_cast<int>(arcs.size());
    if (p.kind() != PatternKind::KCrossing) {
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j)
                if (pair_realizes(p.kind(), arcs[i], arcs[j]))
                    if (!visit(std::vector<Arc>{arcs[i], arcs[j]})) return;
        return;
    }
    const int k = p.order();
    if (k > m) return;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    std::vector<Arc> tuple(k);
    while (true) {
        for (int i = 0; i < k; ++i) tuple[i] = arcs[idx[i]];
        if (realizes(p, tuple))
            if (!visit(tuple)) return;
        int i = k - 1;
        while (i >= 0 && idx[i] == m - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

std::vector<PatternOccurrence> occurrences(const Diagram& d, const Pattern& p) {
    std::vector<PatternOccurrence> out;
    scan(d, p, [&](std::vector<Arc> arcs) {
        out.push_back({p, std::move(arcs)});
        return true;
    });
    return out;
}

bool contains(const Diagram& d, const Pattern& p) {
    bool found = false;
    scan(d, p, [&](const std::vector<Arc>&) {
        found = true;
        return false;
    });
    return found;
}

bool avoids(const Diagram& d, std::span<const Pattern> patterns) {
    for (const Pattern& p : patterns)
        if (contains(d, p)) return false;
    return true;
}

bool avoids(const Diagram& d, std::initializer_list<Pattern> patterns) {
    return avoids(d, std::span<const Pattern>(patterns.begin(), patterns.size()));
}

int count_transients(const Diagram& d) {
    std::vector<char> is_left(d.vertex_count() + 1, 0);
    for (const Arc& a : d.arcs()) is_left[a.left] = 1;
    int count = 0;
    for (const Arc& a : d.arcs())
        if (is_left[a.right]) ++count;
    return count;
}

int count_left_crossings(const Diagram& d) {
    int count = 0;
    const auto& arcs = d.arcs();
    for (std::size_t i = 0; i < arcs.size(); ++i)
        for (std::size_t j = i + 1; j < arcs.size(); ++j)
            if (pair_realizes(PatternKind::LeftCrossing, arcs[i], arcs[j])) ++count;
    return count;
}

}  // namespace nestwork
