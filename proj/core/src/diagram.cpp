#include "nestwork/diagram.hpp"

#include <algorithm>
#include <stdexcept>

namespace nestwork {

const char* to_string(Role r) {
    switch (r) {
        case Role::Singleton: return "singleton";
        case Role::Origin: return "origin";
        case Role::Transient: return "transient";
        case Role::Destination: return "destination";
    }
    return "?";
}

Diagram::Diagram(int n, std::vector<Arc> arcs) : n_(n), arcs_(std::move(arcs)) {
    if (n_ < 0) throw std::invalid_argument("Diagram: vertex count must be nonnegative");
    std::sort(arcs_.begin(), arcs_.end());
    std::vector<char> left_used(n_ + 1, 0), right_used(n_ + 1, 0);
    for (const Arc& a : arcs_) {
        if (a.left < 1 || a.right > n_ || a.left >= a.right)
            throw std::invalid_argument("Diagram: arc (" + std::to_string(a.left) + "," +
                                        std::to_string(a.right) + ") out of range for n=" +
                                        std::to_string(n_));
        if (left_used[a.left]++)
            throw std::invalid_argument("Diagram: vertex " + std::to_string(a.left) +
                                        " is the left endpoint of two arcs");
        if (right_used[a.right]++)
            throw std::invalid_argument("Diagram: vertex " + std::to_string(a.right) +
                                        " is the right endpoint of two arcs");
    }
}

std::optional<int> Diagram::arc_from(int v) const {
    auto it = std::lower_bound(arcs_.begin(), arcs_.end(), v,
                               [](const Arc& a, int x) { return a.left < x; });
    if (it != arcs_.end() && it->left == v) return it->right;
    return std::nullopt;
}

std::optional<int> Diagram::arc_to(int v) const {
    for (const Arc& a : arcs_)
        if (a.right == v) return a.left;
    return std::nullopt;
}

Role Diagram::role_of(int v) const {
    if (v < 1 || v > n_)
        throw std::out_of_range("Diagram::role_of: vertex " + std::to_string(v) +
                                " not in 1.." + std::to_string(n_));
    const bool is_left = arc_from(v).has_value();
    const bool is_right = arc_to(v).has_value();
    if (is_left && is_right) return Role::Transient;
    if (is_left) return Role::Origin;
    if (is_right) return Role::Destination;
    return Role::Singleton;
}

bool Diagram::is_partial_matching() const {
    std::vector<char> is_left(n_ + 1, 0);
    for (const Arc& a : arcs_) is_left[a.left] = 1;
    for (const Arc& a : arcs_)
        if (is_left[a.right]) return false;
    return true;
}

Blocks::Blocks(std::vector<std::vector<int>> blocks) : blocks_(std::move(blocks)) {
    int total = 0;
    for (auto& b : blocks_) {
        if (b.empty()) throw std::invalid_argument("Blocks: empty block");
        std::sort(b.begin(), b.end());
        total += static_cast<int>(b.size());
    }
    std::sort(blocks_.begin(), blocks_.end(),
              [](const auto& x, const auto& y) { return x.front() < y.front(); });
    std::vector<char> seen(total + 1, 0);
    for (const auto& b : blocks_)
        for (int v : b) {
            if (v < 1 || v > total)
                throw std::invalid_argument("Blocks: element " + std::to_string(v) +
                                            " outside 1.." + std::to_string(total));
            if (seen[v]++)
                throw std::invalid_argument("Blocks: element " + std::to_string(v) +
                                            " appears twice");
        }
    n_ = total;
}

Diagram from_blocks(const Blocks& b) {
    std::vector<Arc> arcs;
    for (const auto& block : b.blocks())
        for (std::size_t i = 0; i + 1 < block.size(); ++i)
            arcs.push_back({block[i], block[i + 1]});
    return Diagram(b.vertex_count(), std::move(arcs));
}

Blocks to_blocks(const Diagram& d) {
    const int n = d.vertex_count();
    std::vector<int> next(n + 1, 0);
    std::vector<char> is_right(n + 1, 0);
    for (const Arc& a : d.arcs()) {
        next[a.left] = a.right;
        is_right[a.right] = 1;
    }
    std::vector<std::vector<int>> blocks;
    for (int v = 1; v <= n; ++v) {
        if (is_right[v]) continue;  // not the minimum of its block
        std::vector<int> block;
        for (int w = v; w != 0; w = next[w]) block.push_back(w);
        blocks.push_back(std::move(block));
    }
    return Blocks(std::move(blocks));
}

}  // namespace nestwork
