#include "splitkit/digraph.hpp"

#include <algorithm>
#include <cassert>
#include <string>

#include "splitkit/errors.hpp"
#include "splitkit/splittance.hpp"

namespace splitkit {

namespace {

std::string arc_text(const Arc& a) {
    return "(" + std::to_string(a.from) + "," + std::to_string(a.to) + ")";
}

void require_partition_of(const Digraph& g, const QuadPartition& p) {
    if (p.size() != g.vertex_count())
        throw IndexOutOfRangeError("partition covers " + std::to_string(p.size()) +
                                   " vertices, digraph has " + std::to_string(g.vertex_count()));
}

} // namespace

Digraph::Digraph(std::size_t n, std::vector<Arc> arcs) : n_(n), arcs_(std::move(arcs)) {
    for (const auto& a : arcs_) {
        if (a.from >= n_ || a.to >= n_) throw InvalidDigraphError("arc " + arc_text(a) + " outside vertex range");
        if (a.from == a.to) throw InvalidDigraphError("self-loop at vertex " + std::to_string(a.from));
    }
    std::sort(arcs_.begin(), arcs_.end());
    if (auto dup = std::adjacent_find(arcs_.begin(), arcs_.end()); dup != arcs_.end())
        throw InvalidDigraphError("duplicate arc " + arc_text(*dup));
}

bool Digraph::has_arc(std::size_t from, std::size_t to) const noexcept {
    return std::binary_search(arcs_.begin(), arcs_.end(), Arc{from, to});
}

std::vector<std::uint64_t> Digraph::adjacency_rows() const {
    if (n_ > 64) throw InvalidDigraphError("adjacency bitset view needs n <= 64");
    std::vector<std::uint64_t> rows(n_, 0);
    for (const auto& a : arcs_) rows[a.from] |= std::uint64_t{1} << a.to;
    return rows;
}

IntegerPairSequence degree_sequence(const Digraph& g) {
    std::vector<DegreePair> pairs(g.vertex_count());
    for (const auto& a : g.arcs()) {
        ++pairs[a.from].out;
        ++pairs[a.to].in;
    }
    return IntegerPairSequence(std::move(pairs));
}

bool verify_split_partition(const Digraph& g, const QuadPartition& p) {
    require_partition_of(g, p);
    if (!p.non_trivial()) return false;
    const std::size_t n = g.vertex_count();
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = 0; v < n; ++v) {
            if (u == v) continue;
            const bool arc = g.has_arc(u, v);
            if (is_source_block(p[u]) && is_target_block(p[v]) && !arc) return false;
            if (!is_source_block(p[u]) && !is_target_block(p[v]) && arc) return false;
        }
    }
    return true;
}

EditSet edit_set(const Digraph& g, const QuadPartition& p) {
    require_partition_of(g, p);
    const std::size_t n = g.vertex_count();
    EditSet edits;
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = 0; v < n; ++v) {
            if (u == v) continue;
            const bool arc = g.has_arc(u, v);
            if (is_source_block(p[u]) && is_target_block(p[v]) && !arc) edits.add.push_back({u, v});
            else if (!is_source_block(p[u]) && !is_target_block(p[v]) && arc) edits.remove.push_back({u, v});
        }
    }
    return edits;
}

Digraph apply(const Digraph& g, const EditSet& edits) {
    std::vector<Arc> arcs = g.arcs();
    for (const auto& a : edits.remove) {
        auto it = std::lower_bound(arcs.begin(), arcs.end(), a);
        if (it == arcs.end() || *it != a) throw InvalidDigraphError("cannot remove absent arc " + arc_text(a));
        arcs.erase(it);
    }
    for (const auto& a : edits.add) {
        if (g.has_arc(a.from, a.to)) throw InvalidDigraphError("cannot add present arc " + arc_text(a));
        arcs.push_back(a);
    }
    return Digraph(g.vertex_count(), std::move(arcs));
}

Repair repair(const Digraph& g) {
    if (g.vertex_count() == 0) throw EmptySequenceError();
    const auto d = degree_sequence(g);
    const auto sigma = splittance_matrix(d);
    const auto [k, l] = *minimizing_cell(sigma);
    auto partition = induced_partition(d, proper_order(d), k, l);
    auto edits = edit_set(g, partition);
    assert(static_cast<Degree>(edits.size()) == sigma(k, l));
    return {std::move(edits), std::move(partition)};
}

} // namespace splitkit
