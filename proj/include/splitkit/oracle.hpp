#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "splitkit/digraph.hpp"
#include "splitkit/sequence.hpp"

namespace splitkit::oracle {

/// Limits for the exhaustive searches.
struct EnumerationBudget {
    /// Arc-space enumeration (2^(n(n-1)) digraphs): enumerate_digraphs, brute_splittance.
    std::size_t max_vertices = 4;
    /// 4^N partition enumeration in brute_min_partition_measure.
    std::uint64_t max_partitions = std::uint64_t{1} << 16;
    /// Backtracking realization search.
    std::size_t max_search_vertices = 8;
    std::uint64_t sample_seed = 20140101;

    /// Every bound derived from a single vertex count (4^n partitions).
    static EnumerationBudget for_vertices(std::size_t n);
};

/// Minimum partition measure over all non-trivial 4^N assignments.
/// Throws BudgetExceededError, EmptySequenceError.
Degree brute_min_partition_measure(const IntegerPairSequence& d, const EnumerationBudget& budget = {});

/// Any realization found by backtracking, or nullopt. Throws BudgetExceededError.
std::optional<Digraph> brute_realize(const IntegerPairSequence& d, const EnumerationBudget& budget = {});

/// Whether some non-trivial partition satisfies the arc constraints, by 4^n enumeration.
bool is_split_digraph(const Digraph& g);

/// Minimum Hamming distance in arc space to a split digraph, by iterative
/// deepening on the edit radius. Throws BudgetExceededError, EmptySequenceError.
Degree brute_splittance(const Digraph& g, const EnumerationBudget& budget = {});

/// 2^(n(n-1)); requires n(n-1) < 64.
std::uint64_t digraph_count(std::size_t n);

/// Bit b of `code` is the b-th ordered pair (u,v), u != v, in row-major order.
Digraph digraph_from_code(std::size_t n, std::uint64_t code);
std::uint64_t digraph_code(const Digraph& g);

using DigraphVisitor = std::function<void(const Digraph&)>;

/// Every labeled digraph on n vertices exactly once, in code order.
/// Throws BudgetExceededError when n exceeds budget.max_vertices.
void enumerate_digraphs(std::size_t n, const EnumerationBudget& budget, const DigraphVisitor& visit);

/// Codes in [first, last) only; disjoint ranges can be processed independently.
void enumerate_digraphs(std::size_t n, std::uint64_t first, std::uint64_t last,
                        const EnumerationBudget& budget, const DigraphVisitor& visit);

/// `count` digraphs with each arc present independently with probability 1/2.
std::vector<Digraph> sample_digraphs(std::size_t n, std::size_t count, std::uint64_t seed);

} // namespace splitkit::oracle
