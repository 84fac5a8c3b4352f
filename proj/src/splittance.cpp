#include "splitkit/splittance.hpp"

#include <algorithm>
#include <cassert>

#include "splitkit/errors.hpp"

namespace splitkit {

namespace {

void require_partition_of(const IntegerPairSequence& d, const QuadPartition& p) {
    if (p.size() != d.size())
        throw IndexOutOfRangeError("partition covers " + std::to_string(p.size()) +
                                   " vertices, sequence has " + std::to_string(d.size()));
}

void require_digraphic(const IntegerPairSequence& d) {
    if (!is_digraphic(d)) throw NotDigraphicError();
}

} // namespace

Degree partition_measure_pos(const IntegerPairSequence& d, const QuadPartition& p) {
    require_partition_of(d, p);
    const auto k = static_cast<Degree>(p.k());
    Degree value = static_cast<Degree>(p.count(Block::PlusMinus)) * (k - 1) +
                   static_cast<Degree>(p.count(Block::Minus)) * k;
    for (std::size_t v = 0; v < d.size(); ++v) {
        const Block b = p[v];
        if (b == Block::Plus || b == Block::Zero) value += d[v].in;
        if (is_source_block(b)) value -= d[v].out;
    }
    return value;
}

Degree partition_measure_neg(const IntegerPairSequence& d, const QuadPartition& p) {
    require_partition_of(d, p);
    const auto l = static_cast<Degree>(p.l());
    Degree value = static_cast<Degree>(p.count(Block::PlusMinus)) * (l - 1) +
                   static_cast<Degree>(p.count(Block::Plus)) * l;
    for (std::size_t v = 0; v < d.size(); ++v) {
        const Block b = p[v];
        if (b == Block::Minus || b == Block::Zero) value += d[v].out;
        if (is_target_block(b)) value -= d[v].in;
    }
    return value;
}

Degree partition_measure(const IntegerPairSequence& d, const QuadPartition& p) {
    const Degree value = partition_measure_pos(d, p);
    assert(d.out_sum() != d.in_sum() || value == partition_measure_neg(d, p));
    return value;
}

QuadPartition induced_partition(const IntegerPairSequence& d, const ProperOrdering& ord,
                                std::size_t k, std::size_t l) {
    const std::size_t n = d.size();
    if (k > n || l > n)
        throw IndexOutOfRangeError("induced partition index (" + std::to_string(k) + "," +
                                   std::to_string(l) + ") outside [0," + std::to_string(n) + "]");
    std::vector<bool> in_a(n, false), in_b(n, false);
    for (std::size_t i = 0; i < k; ++i) in_a[ord.pos_perm[i]] = true;
    for (std::size_t i = 0; i < l; ++i) in_b[ord.neg_perm[i]] = true;

    std::vector<Block> assignment(n);
    for (std::size_t v = 0; v < n; ++v) {
        if (in_a[v]) assignment[v] = in_b[v] ? Block::PlusMinus : Block::Plus;
        else assignment[v] = in_b[v] ? Block::Minus : Block::Zero;
    }
    return QuadPartition(std::move(assignment));
}

Degree SplittanceMatrix::at(std::size_t k, std::size_t l) const {
    if (k > n_ || l > n_)
        throw IndexOutOfRangeError("splittance matrix index out of range");
    return (*this)(k, l);
}

SplittanceMatrix splittance_matrix(const IntegerPairSequence& d) {
    validate(d);
    const std::size_t n = d.size();
    const auto ord = proper_order(d);
    const auto neg_rank = ord.neg_rank();

    // Sigma_kl = kl - |A_k n B_l| + sum_{not B_l} d- - sum_{A_k} d+
    std::vector<Degree> in_outside_b(n + 1);
    Degree in_total = d.in_sum();
    in_outside_b[0] = in_total;
    for (std::size_t l = 1; l <= n; ++l) in_outside_b[l] = in_outside_b[l - 1] - d[ord.neg_perm[l - 1]].in;

    SplittanceMatrix sigma(n);
    std::vector<Degree> overlap(n + 1, 0); // |A_k n B_l| for the current k
    Degree out_in_a = 0;
    for (std::size_t k = 0; k <= n; ++k) {
        if (k > 0) {
            const std::size_t v = ord.pos_perm[k - 1];
            out_in_a += d[v].out;
            for (std::size_t l = neg_rank[v] + 1; l <= n; ++l) ++overlap[l];
        }
        const auto kk = static_cast<Degree>(k);
        for (std::size_t l = 0; l <= n; ++l)
            sigma(k, l) = kk * static_cast<Degree>(l) - overlap[l] + in_outside_b[l] - out_in_a;
    }
    return sigma;
}

SplittanceMatrix splittance_matrix_literal(const IntegerPairSequence& d) {
    validate(d);
    const std::size_t n = d.size();
    const auto ord = proper_order(d);
    SplittanceMatrix sigma(n);
    for (std::size_t k = 0; k <= n; ++k)
        for (std::size_t l = 0; l <= n; ++l)
            sigma(k, l) = partition_measure(d, induced_partition(d, ord, k, l));
    return sigma;
}

std::optional<std::pair<std::size_t, std::size_t>> minimizing_cell(const SplittanceMatrix& sigma) {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    for (std::size_t k = 0; k < sigma.dim(); ++k) {
        for (std::size_t l = 0; l < sigma.dim(); ++l) {
            if (sigma.is_trivial_corner(k, l)) continue;
            if (!best || sigma(k, l) < sigma(best->first, best->second)) best.emplace(k, l);
        }
    }
    return best;
}

Degree digraph_splittance(const IntegerPairSequence& d) {
    require_digraphic(d);
    if (d.empty()) throw EmptySequenceError();
    const auto sigma = splittance_matrix(d);
    const auto cell = minimizing_cell(sigma);
    const Degree value = sigma(cell->first, cell->second);
    assert(d.size() < 2 || value == *min_interior_slack(fulkerson_slack(d)));
    return value;
}

MaximalSequences maximal_sequences(const IntegerPairSequence& d, const ProperOrdering& ord) {
    const std::size_t n = d.size();
    const auto pos_rank = ord.pos_rank();
    const auto neg_rank = ord.neg_rank();
    MaximalSequences ms{std::vector<std::size_t>(n + 1, 0), std::vector<std::size_t>(n + 1, 0)};

    for (std::size_t l = 0; l <= n; ++l) {
        const Degree threshold = static_cast<Degree>(l) - 1;
        for (std::size_t i = n; i >= 1; --i) {
            const std::size_t v = ord.pos_perm[i - 1];
            const Degree out = d[v].out;
            if (out > threshold || (out == threshold && neg_rank[v] < l)) {
                ms.m_bar[l] = i;
                break;
            }
        }
    }
    for (std::size_t k = 0; k <= n; ++k) {
        const Degree threshold = static_cast<Degree>(k) - 1;
        for (std::size_t j = n; j >= 1; --j) {
            const std::size_t v = ord.neg_perm[j - 1];
            const Degree in = d[v].in;
            if (in > threshold || (in == threshold && pos_rank[v] < k)) {
                ms.m_under[k] = j;
                break;
            }
        }
    }
    return ms;
}

namespace {

// sum_{i<=k} min(head_i, k-1) + sum_{i>k} min(tail_i, k) - sum_{i<=k} lead_i over
// an ordered sequence, where `cap` picks the capped coordinate and `lead` the other.
template <typename Cap, typename Lead>
std::vector<Degree> slack_in_order(const std::vector<DegreePair>& ordered, Cap cap, Lead lead) {
    const std::size_t n = ordered.size();
    std::vector<Degree> slack(n + 1, 0);
    for (std::size_t k = 0; k <= n; ++k) {
        const auto kk = static_cast<Degree>(k);
        Degree value = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (i < k) value += std::min(cap(ordered[i]), kk - 1) - lead(ordered[i]);
            else value += std::min(cap(ordered[i]), kk);
        }
        slack[k] = value;
    }
    return slack;
}

} // namespace

SlackPair fulkerson_slack(const IntegerPairSequence& d) {
    validate(d);
    const auto ord = proper_order(d);
    const auto in = [](const DegreePair& p) { return p.in; };
    const auto out = [](const DegreePair& p) { return p.out; };
    return {slack_in_order(apply_permutation(d, ord.pos_perm), in, out),
            slack_in_order(apply_permutation(d, ord.neg_perm), out, in)};
}

std::optional<Degree> min_interior_slack(const SlackPair& slack) {
    const std::size_t n = slack.s_bar.size() - 1;
    if (n < 2) return std::nullopt;
    const auto bar = std::min_element(slack.s_bar.begin() + 1, slack.s_bar.begin() + n);
    const auto under = std::min_element(slack.s_under.begin() + 1, slack.s_under.begin() + n);
    return std::min(*bar, *under);
}

bool is_digraphic(const IntegerPairSequence& d) {
    if (!is_valid(d)) return false;
    if (d.out_sum() != d.in_sum()) return false;
    const auto slack = fulkerson_slack(d);
    const auto non_negative = [](Degree s) { return s >= 0; };
    return std::all_of(slack.s_bar.begin() + 1, slack.s_bar.end(), non_negative) &&
           std::all_of(slack.s_under.begin() + 1, slack.s_under.end(), non_negative);
}

bool is_split_sequence(const IntegerPairSequence& d) {
    require_digraphic(d);
    if (d.empty()) return false;
    const auto sigma = splittance_matrix(d);
    const auto cell = minimizing_cell(sigma);
    const bool zero_cell = sigma(cell->first, cell->second) == 0;
    if (d.size() < 2) return zero_cell;
    const bool zero_slack = *min_interior_slack(fulkerson_slack(d)) == 0;
    assert(zero_slack == zero_cell);
    return zero_slack;
}

std::vector<InducedSplitPartition> split_partitions(const IntegerPairSequence& d) {
    require_digraphic(d);
    const std::size_t n = d.size();
    std::vector<InducedSplitPartition> out;
    if (n == 0) return out;
    const auto ord = proper_order(d);
    const auto sigma = splittance_matrix(d);
    for (std::size_t k = 0; k <= n; ++k) {
        for (std::size_t l = 0; l <= n; ++l) {
            if (sigma.is_trivial_corner(k, l) || sigma(k, l) != 0) continue;
            const bool corner = (k == 0 && l == 0) || (k == n && l == n);
            out.push_back({k, l, induced_partition(d, ord, k, l), corner});
        }
    }
    return out;
}

} // namespace splitkit
