#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "splitkit/partition.hpp"
#include "splitkit/sequence.hpp"

namespace splitkit {

/// Arc (tail, head), read tail -> head.
struct Arc {
    std::size_t from = 0;
    std::size_t to = 0;

    friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// Simple loopless labeled digraph on vertices [0, n). Immutable.
class Digraph {
public:
    Digraph() = default;
    explicit Digraph(std::size_t n) : n_(n) {}
    /// Throws InvalidDigraphError on loops, duplicates, or labels >= n.
    Digraph(std::size_t n, std::vector<Arc> arcs);

    std::size_t vertex_count() const noexcept { return n_; }
    std::size_t arc_count() const noexcept { return arcs_.size(); }
    /// Sorted ascending.
    const std::vector<Arc>& arcs() const noexcept { return arcs_; }
    bool has_arc(std::size_t from, std::size_t to) const noexcept;

    /// Row u has bit v set iff u -> v. Requires n <= 64.
    std::vector<std::uint64_t> adjacency_rows() const;

    friend bool operator==(const Digraph&, const Digraph&) = default;

private:
    std::size_t n_ = 0;
    std::vector<Arc> arcs_;
};

/// Arc additions and removals that turn a digraph into one with a given split partition.
struct EditSet {
    std::vector<Arc> add;
    std::vector<Arc> remove;

    std::size_t size() const noexcept { return add.size() + remove.size(); }
    bool empty() const noexcept { return add.empty() && remove.empty(); }

    friend bool operator==(const EditSet&, const EditSet&) = default;
};

IntegerPairSequence degree_sequence(const Digraph& g);

/// True iff p is non-trivial, every arc from S+- u S+ to S+- u S- is present,
/// and no arc runs from S- u S0 to S+ u S0.
bool verify_split_partition(const Digraph& g, const QuadPartition& p);

/// Missing forced arcs go in `add`, present forbidden arcs in `remove`.
EditSet edit_set(const Digraph& g, const QuadPartition& p);

/// Throws InvalidDigraphError if an addition already exists or a removal does not.
Digraph apply(const Digraph& g, const EditSet& edits);

struct Repair {
    EditSet edits;
    QuadPartition partition;
};

/// Minimal repair via the first minimizing cell of the splittance matrix.
/// Throws EmptySequenceError for the null digraph.
Repair repair(const Digraph& g);

} // namespace splitkit
