#include "splitkit/sequence.hpp"

#include <algorithm>
#include <numeric>

#include "splitkit/errors.hpp"

namespace splitkit {

Degree IntegerPairSequence::out_sum() const noexcept {
    Degree total = 0;
    for (const auto& p : pairs_) total += p.out;
    return total;
}

Degree IntegerPairSequence::in_sum() const noexcept {
    Degree total = 0;
    for (const auto& p : pairs_) total += p.in;
    return total;
}

void validate(const IntegerPairSequence& seq) {
    const auto bound = static_cast<Degree>(seq.size()) - 1;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        const auto& p = seq[i];
        if (p.out < 0 || p.in < 0) throw NegativeDegreeError(i);
        if (p.out > bound || p.in > bound) throw OutOfRangeError(i);
    }
}

bool is_valid(const IntegerPairSequence& seq) noexcept {
    const auto bound = static_cast<Degree>(seq.size()) - 1;
    return std::all_of(seq.begin(), seq.end(), [bound](const DegreePair& p) {
        return p.out >= 0 && p.in >= 0 && p.out <= bound && p.in <= bound;
    });
}

std::strong_ordering compare_pos(const DegreePair& a, const DegreePair& b) noexcept {
    if (auto c = a.out <=> b.out; c != 0) return c;
    return a.in <=> b.in;
}

std::strong_ordering compare_neg(const DegreePair& a, const DegreePair& b) noexcept {
    if (auto c = a.in <=> b.in; c != 0) return c;
    return a.out <=> b.out;
}

namespace {

template <typename Compare>
std::vector<std::size_t> sorted_indices(const IntegerPairSequence& seq, Compare cmp) {
    std::vector<std::size_t> perm(seq.size());
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    // stable_sort keeps equal pairs in ascending index order
    std::stable_sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
        return cmp(seq[a], seq[b]) > 0;
    });
    return perm;
}

std::vector<std::size_t> invert(const std::vector<std::size_t>& perm) {
    std::vector<std::size_t> inv(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) inv[perm[i]] = i;
    return inv;
}

} // namespace

std::vector<std::size_t> ProperOrdering::pos_rank() const { return invert(pos_perm); }
std::vector<std::size_t> ProperOrdering::neg_rank() const { return invert(neg_perm); }

ProperOrdering proper_order(const IntegerPairSequence& seq) {
    return {sorted_indices(seq, compare_pos), sorted_indices(seq, compare_neg)};
}

std::vector<DegreePair> apply_permutation(const IntegerPairSequence& seq,
                                          std::span<const std::size_t> perm) {
    std::vector<DegreePair> out;
    out.reserve(perm.size());
    for (auto idx : perm) out.push_back(seq[idx]);
    return out;
}

} // namespace splitkit
