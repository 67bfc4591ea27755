#include "nestwork/enumerate.hpp"

#include <cstdlib>

#include "nestwork/series.hpp"

namespace nestwork {

const char* to_string(ClassId c) {
    switch (c) {
        case ClassId::M: return "M";
        case ClassId::S: return "S";
        case ClassId::P: return "P";
        case ClassId::Q: return "Q";
        case ClassId::R: return "R";
        case ClassId::T: return "T";
    }
    return "?";
}

ClassId parse_class(std::string_view name) {
    if (name == "M") return ClassId::M;
    if (name == "S") return ClassId::S;
    if (name == "P") return ClassId::P;
    if (name == "Q") return ClassId::Q;
    if (name == "R") return ClassId::R;
    if (name == "T") return ClassId::T;
    throw std::invalid_argument("unknown class '" + std::string(name) + "' (expected M/S/P/Q/R/T)");
}

const std::vector<Pattern>& class_avoided_patterns(ClassId c) {
    static const std::vector<Pattern> none;
    static const std::vector<Pattern> p = {PatternKind::NeighborAlignment};
    static const std::vector<Pattern> q = {PatternKind::NeighborAlignment,
                                           PatternKind::LeftNesting};
    static const std::vector<Pattern> r = {PatternKind::NeighborAlignment,
                                           PatternKind::LeftNesting, PatternKind::RightNesting};
    static const std::vector<Pattern> t = {PatternKind::RightNesting};
    switch (c) {
        case ClassId::M:
        case ClassId::S: return none;
        case ClassId::P: return p;
        case ClassId::Q: return q;
        case ClassId::R: return r;
        case ClassId::T: return t;
    }
    return none;
}

bool in_class(const Diagram& d, ClassId c) {
    switch (c) {
        case ClassId::M:
        case ClassId::P:
        case ClassId::Q:
        case ClassId::R:
            if (!d.is_partial_matching()) return false;
            break;
        case ClassId::S:
        case ClassId::T:
            break;  // every valid diagram is a partition
    }
    const auto& avoided = class_avoided_patterns(c);
    return avoids(d, std::span<const Pattern>(avoided.data(), avoided.size()));
}

int class_parameter(const Diagram& d, ClassId c) {
    if (c == ClassId::S) return d.vertex_count() - d.arc_count();
    return d.arc_count();
}

// --- partition stream (restricted growth strings) -----------------------

PartitionStream::PartitionStream(int n) : n_(n) {
    if (n < 0) throw std::domain_error("all_partitions: n must be nonnegative");
    rgs_.assign(n_, 0);
    prefix_max_.assign(n_, 0);
}

Diagram PartitionStream::current() const {
    std::vector<Arc> arcs;
    std::vector<int> last(n_, 0);  // last vertex seen with each rgs value
    for (int i = 0; i < n_; ++i) {
        const int v = rgs_[i];
        if (last[v] != 0) arcs.push_back({last[v], i + 1});
        last[v] = i + 1;
    }
    return Diagram(n_, std::move(arcs));
}

bool PartitionStream::advance() {
    for (int i = n_ - 1; i >= 1; --i) {
        if (rgs_[i] <= prefix_max_[i - 1]) {
            ++rgs_[i];
            prefix_max_[i] = std::max(prefix_max_[i - 1], rgs_[i]);
            for (int j = i + 1; j < n_; ++j) {
                rgs_[j] = 0;
                prefix_max_[j] = prefix_max_[i];
            }
            return true;
        }
    }
    return false;
}

std::optional<Diagram> PartitionStream::next() {
    if (done_) return std::nullopt;
    Diagram d = current();
    if (n_ == 0 || !advance()) done_ = true;
    return d;
}

// --- matching stream (DFS over the fate of the smallest free vertex) ----

MatchingStream::MatchingStream(int n) : n_(n), partner_(n + 1, -1) {
    if (n < 0) throw std::domain_error("all_partial_matchings: n must be nonnegative");
}

void MatchingStream::descend() {
    for (int v = 1; v <= n_; ++v)
        if (partner_[v] == -1) {
            partner_[v] = 0;
            stack_.push_back({v, 0});
        }
}

Diagram MatchingStream::current() const {
    std::vector<Arc> arcs;
    for (int v = 1; v <= n_; ++v)
        if (partner_[v] > v) arcs.push_back({v, partner_[v]});
    return Diagram(n_, std::move(arcs));
}

std::optional<Diagram> MatchingStream::next() {
    if (done_) return std::nullopt;
    if (!started_) {
        started_ = true;
        descend();
        return current();
    }
    while (!stack_.empty()) {
        const Choice c = stack_.back();
        stack_.pop_back();
        partner_[c.v] = -1;
        if (c.partner > 0) partner_[c.partner] = -1;
        int j = (c.partner == 0 ? c.v : c.partner) + 1;
        while (j <= n_ && partner_[j] != -1) ++j;
        if (j <= n_) {
            partner_[c.v] = j;
            partner_[j] = c.v;
            stack_.push_back({c.v, j});
            descend();
            return current();
        }
    }
    done_ = true;
    return std::nullopt;
}

PartitionStream all_partitions(int n) { return PartitionStream(n); }
MatchingStream all_partial_matchings(int n) { return MatchingStream(n); }

// --- class member stream -------------------------------------------------

namespace {

bool class_uses_matchings(ClassId c) {
    switch (c) {
        case ClassId::M:
        case ClassId::P:
        case ClassId::Q:
        case ClassId::R: return true;
        case ClassId::S:
        case ClassId::T: return false;
    }
    return false;
}

}  // namespace

ClassMemberStream::ClassMemberStream(ClassId c, int n, std::optional<int> k)
    : class_(c),
      k_(k),
      base_(class_uses_matchings(c)
                ? std::variant<PartitionStream, MatchingStream>(MatchingStream(n))
                : std::variant<PartitionStream, MatchingStream>(PartitionStream(n))) {}

std::optional<Diagram> ClassMemberStream::next() {
    for (;;) {
        std::optional<Diagram> d =
            std::visit([](auto& stream) { return stream.next(); }, base_);
        if (!d) return std::nullopt;
        if (k_ && class_parameter(*d, class_) != *k_) continue;
        const auto& avoided = class_avoided_patterns(class_);
        if (!avoids(*d, std::span<const Pattern>(avoided.data(), avoided.size()))) continue;
        return d;
    }
}

ClassMemberStream class_members(ClassId c, int n, std::optional<int> k) {
    return ClassMemberStream(c, n, k);
}

// --- closed forms ----------------------------------------------------------

BigInt count_p(int n, int k) {
    if (n < 1 || k < 0 || 2 * k > n)
        throw std::domain_error("count_p: need n >= 1 and 0 <= k <= n/2");
    // P(n,k) = P(n-1,k) + (n-k) P(n-2,k-1), P(1,0) = P(2,0) = P(2,1) = 1.
    std::vector<std::vector<BigInt>> row(n + 1);
    for (int m = 1; m <= n; ++m) {
        row[m].assign(m / 2 + 1, 0);
        for (int j = 0; 2 * j <= m; ++j) {
            if (m == 1 || m == 2) {
                row[m][j] = 1;
                continue;
            }
            BigInt v = (2 * j <= m - 1) ? row[m - 1][j] : BigInt(0);
            if (j >= 1 && 2 * (j - 1) <= m - 2) v += BigInt(m - j) * row[m - 2][j - 1];
            row[m][j] = v;
        }
    }
    return row[n][k];
}

BigInt count_q(int n, int k) {
    if (n < 0 || k < 0 || 2 * k > n)
        throw std::domain_error("count_q: need n >= 0 and 0 <= k <= n/2");
    // Q(n,k) = S(n+1-k, n+1-2k): read off the partition <-> matching
    // bijection, reindexed from S(n-k, n-2k) = Q(n-1, k).
    return stirling2(n + 1 - k, n + 1 - 2 * k);
}

BigInt count_r(int n, int k) {
    if (n < 0 || k < 0 || 2 * k > n + 1)
        throw std::domain_error("count_r: need n >= 0 and 0 <= 2k <= n+1");
    if (k == 0) return 1;
    // A matching in R(n,k) has s-1 singletons cutting [n] into s intervals;
    // it is determined by a composition of k into binom(s+1,2) parts.
    const long long s = n - 2 * k + 1;
    const long long parts = s * (s + 1) / 2;
    return binomial(k + parts - 1, k);
}

BigInt count_t(int n, int k) {
    if (n < 1 || k < 0 || k > n - 1)
        throw std::domain_error("count_t: need n >= 1 and 0 <= k <= n-1");
    // Coefficient of x^n y^k in sum_m x^m / (1-xy)^binom(m+1,2).
    const long long m = n - k;
    return binomial(m * (m + 1) / 2 + k - 1, k);
}

// --- brute force ------------------------------------------------------------

BruteForceGuard BruteForceGuard::from_env() {
    BruteForceGuard g;
    if (const char* env = std::getenv("NESTWORK_MAX_BRUTE_N")) {
        const int v = std::atoi(env);
        if (v > 0) {
            g.max_matching_n = v;
            g.max_partition_n = v;
        }
    }
    return g;
}

int BruteForceGuard::limit_for(ClassId c) const {
    return class_uses_matchings(c) ? max_matching_n : max_partition_n;
}

namespace {

void check_guard(ClassId c, int n, const BruteForceGuard& guard) {
    const int limit = guard.limit_for(c);
    if (n > limit)
        throw guard_error("brute-force enumeration refused: n=" + std::to_string(n) +
                          " exceeds the limit " + std::to_string(limit) + " for class " +
                          to_string(c) + " (override with NESTWORK_MAX_BRUTE_N)");
}

}  // namespace

BigInt count_bruteforce(ClassId c, int n, int k, const BruteForceGuard& guard) {
    check_guard(c, n, guard);
    BigInt count = 0;
    ClassMemberStream stream(c, n, k);
    while (stream.next()) ++count;
    return count;
}

CountTable count_table_bruteforce(ClassId c, int n, const BruteForceGuard& guard) {
    check_guard(c, n, guard);
    CountTable table{c, {}};
    ClassMemberStream stream(c, n);
    while (auto d = stream.next()) ++table.entries[{n, class_parameter(*d, c)}];
    return table;
}

}  // namespace nestwork
