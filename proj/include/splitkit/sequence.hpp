#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace splitkit {

using Degree = std::int64_t;

/// (out-degree, in-degree) of one vertex.
struct DegreePair {
    Degree out = 0;
    Degree in = 0;

    friend bool operator==(const DegreePair&, const DegreePair&) = default;
};

/// Degree sequence d = {(d_i^+, d_i^-)} of a labeled digraph. Indices are 0-based.
class IntegerPairSequence {
public:
    IntegerPairSequence() = default;
    explicit IntegerPairSequence(std::vector<DegreePair> pairs) : pairs_(std::move(pairs)) {}
    IntegerPairSequence(std::initializer_list<DegreePair> pairs) : pairs_(pairs) {}

    std::size_t size() const noexcept { return pairs_.size(); }
    bool empty() const noexcept { return pairs_.empty(); }
    const DegreePair& operator[](std::size_t i) const { return pairs_[i]; }
    std::span<const DegreePair> pairs() const noexcept { return pairs_; }

    auto begin() const noexcept { return pairs_.begin(); }
    auto end() const noexcept { return pairs_.end(); }

    Degree out_sum() const noexcept;
    Degree in_sum() const noexcept;

    friend bool operator==(const IntegerPairSequence&, const IntegerPairSequence&) = default;

private:
    std::vector<DegreePair> pairs_;
};

/// Throws NegativeDegreeError or OutOfRangeError for the first offending index.
void validate(const IntegerPairSequence& seq);
bool is_valid(const IntegerPairSequence& seq) noexcept;

/// Positive lexicographic order: out-degree first, in-degree breaks ties.
/// `greater` means `a` comes first in a non-increasing arrangement.
std::strong_ordering compare_pos(const DegreePair& a, const DegreePair& b) noexcept;
/// Negative lexicographic order: in-degree first, out-degree breaks ties.
std::strong_ordering compare_neg(const DegreePair& a, const DegreePair& b) noexcept;

/// Permutations pi_bar (positive order) and pi_under (negative order).
/// pos_perm[i] is the original index placed at position i.
struct ProperOrdering {
    std::vector<std::size_t> pos_perm;
    std::vector<std::size_t> neg_perm;

    /// Inverse permutations: position of original index v.
    std::vector<std::size_t> pos_rank() const;
    std::vector<std::size_t> neg_rank() const;
};

/// Sorts non-increasing under both orders; equal pairs keep ascending index
/// order in both, which makes the pair tie-consistent.
ProperOrdering proper_order(const IntegerPairSequence& seq);

/// The reordered sequences d_bar and d_under.
std::vector<DegreePair> apply_permutation(const IntegerPairSequence& seq,
                                          std::span<const std::size_t> perm);

} // namespace splitkit
