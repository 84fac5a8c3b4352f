#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "splitkit/partition.hpp"
#include "splitkit/sequence.hpp"

namespace splitkit {

/// Split partition measure in its out-degree form (sigma_bar). For a
/// balanced sequence it equals the in-degree form; otherwise the two differ
/// by sum(d-) - sum(d+) and this one is returned.
Degree partition_measure(const IntegerPairSequence& d, const QuadPartition& p);

/// |S+-|(k-1) + |S-|k + sum_{S+ u S0} d- - sum_{S+- u S+} d+
Degree partition_measure_pos(const IntegerPairSequence& d, const QuadPartition& p);
/// |S+-|(l-1) + |S+|l + sum_{S- u S0} d+ - sum_{S+- u S-} d-
Degree partition_measure_neg(const IntegerPairSequence& d, const QuadPartition& p);

/// Partition generated by the first k entries of the positive order and the
/// first l entries of the negative order.
QuadPartition induced_partition(const IntegerPairSequence& d, const ProperOrdering& ord,
                                std::size_t k, std::size_t l);

/// (N+1) x (N+1) matrix of induced-partition measures, indexed (k, l).
class SplittanceMatrix {
public:
    SplittanceMatrix() : SplittanceMatrix(0) {}
    explicit SplittanceMatrix(std::size_t n) : n_(n), cells_((n + 1) * (n + 1), 0) {}

    /// N; the matrix has N+1 rows and columns.
    std::size_t order() const noexcept { return n_; }
    std::size_t dim() const noexcept { return n_ + 1; }

    Degree operator()(std::size_t k, std::size_t l) const { return cells_[k * (n_ + 1) + l]; }
    Degree& operator()(std::size_t k, std::size_t l) { return cells_[k * (n_ + 1) + l]; }
    Degree at(std::size_t k, std::size_t l) const;

    /// (0,N) and (N,0): the trivial partitions V = S- and V = S+.
    bool is_trivial_corner(std::size_t k, std::size_t l) const noexcept {
        return (k == 0 && l == n_) || (k == n_ && l == 0);
    }

    friend bool operator==(const SplittanceMatrix&, const SplittanceMatrix&) = default;

private:
    std::size_t n_;
    std::vector<Degree> cells_;
};

/// O(N^2) prefix-sum evaluation. Requires a valid sequence.
SplittanceMatrix splittance_matrix(const IntegerPairSequence& d);
/// Evaluates partition_measure on every induced partition, O(N^3).
SplittanceMatrix splittance_matrix_literal(const IntegerPairSequence& d);

/// Row-major first cell attaining the minimum outside the trivial corners.
/// Empty for N = 0, where every cell is a trivial corner.
std::optional<std::pair<std::size_t, std::size_t>> minimizing_cell(const SplittanceMatrix& sigma);

/// Minimum arc edits to reach a split digraph. Throws NotDigraphicError, and
/// EmptySequenceError for N = 0 (the null digraph has only trivial partitions).
Degree digraph_splittance(const IntegerPairSequence& d);

/// Turning points of the rows and columns of the splittance matrix.
/// m_bar[l] bounds the non-increasing run of column l, m_under[k] that of row k.
struct MaximalSequences {
    std::vector<std::size_t> m_bar;
    std::vector<std::size_t> m_under;
};

MaximalSequences maximal_sequences(const IntegerPairSequence& d, const ProperOrdering& ord);

/// Fulkerson slacks in positive (s_bar) and negative (s_under) order, k = 0..N.
struct SlackPair {
    std::vector<Degree> s_bar;
    std::vector<Degree> s_under;
};

SlackPair fulkerson_slack(const IntegerPairSequence& d);

/// min{s_bar_1..s_bar_{N-1}, s_under_1..s_under_{N-1}}; empty for N < 2.
std::optional<Degree> min_interior_slack(const SlackPair& slack);

/// False for sequences that fail validation.
bool is_digraphic(const IntegerPairSequence& d);

/// Throws NotDigraphicError. False for N = 0.
bool is_split_sequence(const IntegerPairSequence& d);

/// Induced partition of one zero cell of the splittance matrix.
struct InducedSplitPartition {
    std::size_t k = 0;
    std::size_t l = 0;
    QuadPartition partition;
    /// Cell (0,0) or (N,N); still a non-trivial partition for N >= 1.
    bool corner = false;
};

/// One entry per zero cell outside the trivial corners, row-major.
/// Throws NotDigraphicError.
std::vector<InducedSplitPartition> split_partitions(const IntegerPairSequence& d);

} // namespace splitkit
