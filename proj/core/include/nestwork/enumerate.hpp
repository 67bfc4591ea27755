#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "nestwork/bigint.hpp"
#include "nestwork/diagram.hpp"
#include "nestwork/patterns.hpp"

namespace nestwork {

// M  all partial matchings            (k counts arcs)
// S  all set partitions               (k counts blocks)
// P  matchings, no neighbor alignment (k counts arcs)
// Q  P plus no left nesting
// R  Q plus no right nesting
// T  partitions, no right nesting     (k counts arcs)
enum class ClassId { M, S, P, Q, R, T };

const char* to_string(ClassId c);
ClassId parse_class(std::string_view name);

// The avoidance set defining the class; empty for M and S.
const std::vector<Pattern>& class_avoided_patterns(ClassId c);

// Membership ignoring the (n,k) parameters.
bool in_class(const Diagram& d, ClassId c);

// The k-statistic of the class: arc count, except block count for S.
int class_parameter(const Diagram& d, ClassId c);

// Streams every partition of [n] exactly once as a Diagram, in the
// lexicographic order of restricted growth strings. Bell(n) items.
class PartitionStream {
public:
    explicit PartitionStream(int n);
    std::optional<Diagram> next();

private:
    int n_;
    bool done_ = false;
    std::vector<int> rgs_;
    std::vector<int> prefix_max_;
    Diagram current() const;
    bool advance();
};

// Streams every partial matching of [n] exactly once: vertex 1 is a
// singleton first, then matched to 2, 3, ..., recursively. I(n) items
// (the telephone numbers).
class MatchingStream {
public:
    explicit MatchingStream(int n);
    std::optional<Diagram> next();

private:
    struct Choice {
        int v;
        int partner;  // 0 = singleton
    };
    int n_;
    bool started_ = false;
    bool done_ = false;
    std::vector<int> partner_;  // 1-indexed; -1 undecided, 0 singleton
    std::vector<Choice> stack_;
    void descend();
    Diagram current() const;
};

PartitionStream all_partitions(int n);
MatchingStream all_partial_matchings(int n);

// Members of class c on [n]; if k is given, restricted to that value of
// the class parameter. Deterministic: base stream order, filtered.
class ClassMemberStream {
public:
    ClassMemberStream(ClassId c, int n, std::optional<int> k = std::nullopt);
    std::optional<Diagram> next();

private:
    ClassId class_;
    std::optional<int> k_;
    std::variant<PartitionStream, MatchingStream> base_;
};

ClassMemberStream class_members(ClassId c, int n, std::optional<int> k = std::nullopt);

// Closed-form counts (exact, arbitrary precision). Out-of-range (n,k)
// throws std::domain_error.
BigInt count_p(int n, int k);  // n >= 1, 0 <= k <= n/2
BigInt count_q(int n, int k);  // n >= 0, 0 <= k <= n/2
BigInt count_r(int n, int k);  // n >= 0, 0 <= 2k <= n+1
BigInt count_t(int n, int k);  // n >= 1, 0 <= k <= n-1

// Triangle of counts for one class, filled by exhaustive enumeration.
struct CountTable {
    ClassId cls;
    std::map<std::pair<int, int>, BigInt> entries;  // (n,k) -> count
};

// Enumeration ceilings for the brute-force oracle. NESTWORK_MAX_BRUTE_N
// overrides both limits.
struct BruteForceGuard {
    int max_matching_n = 16;
    int max_partition_n = 12;
    static BruteForceGuard from_env();
    int limit_for(ClassId c) const;
};

class guard_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// |class_members(c, n, k)| by exhaustion; throws guard_error beyond the
// enumeration ceiling.
BigInt count_bruteforce(ClassId c, int n, int k,
                        const BruteForceGuard& guard = BruteForceGuard::from_env());

// One sweep over all of [n]: every k bucket at once.
CountTable count_table_bruteforce(ClassId c, int n,
                                  const BruteForceGuard& guard = BruteForceGuard::from_env());

}  // namespace nestwork
