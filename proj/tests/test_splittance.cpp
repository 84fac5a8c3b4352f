#include <doctest.h>

#include <algorithm>
#include <random>

#include "splitkit/errors.hpp"
#include "splitkit/oracle.hpp"
#include "splitkit/splittance.hpp"
#include "splitkit/undirected.hpp"
#include "support/generators.hpp"

using namespace splitkit;

namespace {

SplittanceMatrix matrix_of(const std::vector<std::vector<Degree>>& rows) {
    SplittanceMatrix m(rows.size() - 1);
    for (std::size_t k = 0; k < rows.size(); ++k)
        for (std::size_t l = 0; l < rows.size(); ++l) m(k, l) = rows[k][l];
    return m;
}

const std::vector<std::vector<Degree>> kExample1Matrix = {
    {10, 7, 5, 3, 1, 0}, {6, 4, 2, 1, 0, 0}, {3, 2, 1, 0, 0, 1},
    {1, 1, 1, 1, 2, 3},  {0, 1, 2, 3, 4, 6}, {0, 1, 3, 5, 7, 10},
};

const std::vector<std::vector<Degree>> kExample2Matrix = {
    {16, 12, 9, 6, 3, 0}, {12, 8, 6, 4, 2, 0}, {9, 6, 4, 3, 2, 1},
    {6, 4, 3, 2, 2, 2},   {3, 2, 2, 2, 2, 3},  {0, 0, 1, 2, 3, 4},
};

// Two directed triangles through vertex 0; oracle splittance 1.
IntegerPairSequence non_split_sequence() { return {{2, 2}, {1, 1}, {1, 1}, {1, 1}}; }

QuadPartition make_partition(std::initializer_list<Block> blocks) { return QuadPartition(std::vector<Block>(blocks)); }

constexpr Block PM = Block::PlusMinus;
constexpr Block P = Block::Plus;
constexpr Block M = Block::Minus;
constexpr Block Z = Block::Zero;

std::vector<IntegerPairSequence> random_digraphic(std::uint64_t seed, std::size_t count, std::size_t max_n) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> size(1, max_n);
    std::vector<IntegerPairSequence> out;
    for (std::size_t i = 0; i < count; ++i) out.push_back(testing::random_digraphic_sequence(rng, size(rng)));
    return out;
}

Degree min_non_corner(const SplittanceMatrix& sigma) {
    const auto cell = *minimizing_cell(sigma);
    return sigma(cell.first, cell.second);
}

} // namespace

TEST_CASE("partition measure examples") {
    const auto d = testing::example1();
    CHECK(partition_measure(d, make_partition({Z, PM, PM, Z, M})) == 0);
    CHECK(partition_measure(d, QuadPartition(5, P)) == 0);
    CHECK(partition_measure(d, QuadPartition(5, M)) == 0);
    // all arcs must go: S0 = V
    CHECK(partition_measure(d, QuadPartition(5, Z)) == 10);
    CHECK_THROWS_AS(partition_measure(d, QuadPartition(4, Z)), IndexOutOfRangeError);
}

TEST_CASE("both measure forms agree on balanced sequences") {
    std::mt19937_64 rng(101);
    std::uniform_int_distribution<std::size_t> size(0, 7);
    for (int trial = 0; trial < 200; ++trial) {
        const auto d = testing::random_balanced_sequence(rng, size(rng));
        const auto p = testing::random_partition(rng, d.size());
        CHECK(partition_measure_pos(d, p) == partition_measure_neg(d, p));
    }
}

TEST_CASE("measure forms differ by the degree-sum imbalance") {
    const IntegerPairSequence d{{1, 0}, {1, 0}, {0, 1}};
    const auto p = make_partition({P, Z, M});
    CHECK(partition_measure_pos(d, p) - partition_measure_neg(d, p) == d.in_sum() - d.out_sum());
}

TEST_CASE("induced partitions") {
    const auto d = testing::example1();
    const auto ord = proper_order(d);
    CHECK(induced_partition(d, ord, 2, 3) == make_partition({Z, PM, PM, Z, M}));
    CHECK(induced_partition(d, ord, 0, 0) == QuadPartition(5, Z));
    CHECK(induced_partition(d, ord, 5, 5) == QuadPartition(5, PM));
    CHECK(induced_partition(d, ord, 5, 0) == QuadPartition(5, P));
    CHECK_THROWS_AS(induced_partition(d, ord, 6, 0), IndexOutOfRangeError);
    CHECK_THROWS_AS(induced_partition(d, ord, 0, 6), IndexOutOfRangeError);
}

TEST_CASE("splittance matrix of example 1") {
    const auto sigma = splittance_matrix(testing::example1());
    CHECK(sigma == matrix_of(kExample1Matrix));
    CHECK(splittance_matrix_literal(testing::example1()) == sigma);
}

TEST_CASE("splittance matrix of the directed extension of (4 3 3 3 3)") {
    const auto sigma = splittance_matrix(testing::example2());
    CHECK(sigma == matrix_of(kExample2Matrix));
    std::vector<Degree> half_diag;
    for (std::size_t k = 0; k <= 5; ++k) {
        CHECK(sigma(k, k) % 2 == 0);
        half_diag.push_back(sigma(k, k) / 2);
        for (std::size_t l = 0; l <= 5; ++l) CHECK(sigma(k, l) == sigma(l, k));
    }
    CHECK(half_diag == std::vector<Degree>{8, 4, 2, 1, 1, 2});
}

TEST_CASE("tiny splittance matrices") {
    CHECK(splittance_matrix(IntegerPairSequence{{0, 0}}) == SplittanceMatrix(1));
    const auto empty = splittance_matrix(IntegerPairSequence{});
    CHECK(empty.dim() == 1);
    CHECK(empty(0, 0) == 0);
    CHECK_THROWS_AS(splittance_matrix(IntegerPairSequence{{1, 0}}), OutOfRangeError);
    CHECK_THROWS_AS(SplittanceMatrix(2).at(3, 0), IndexOutOfRangeError);
}

TEST_CASE("prefix-sum matrix equals per-cell evaluation") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<std::size_t> size(0, 10);
    for (int trial = 0; trial < 200; ++trial) {
        const auto d = trial % 2 ? testing::random_valid_sequence(rng, size(rng))
                                 : testing::random_balanced_sequence(rng, size(rng));
        CHECK(splittance_matrix(d) == splittance_matrix_literal(d));
    }
}

TEST_CASE("trivial corners vanish and digraphic matrices are non-negative") {
    for (const auto& d : random_digraphic(17, 200, 10)) {
        const auto sigma = splittance_matrix(d);
        const auto n = d.size();
        CHECK(sigma(0, n) == 0);
        CHECK(sigma(n, 0) == 0);
        for (std::size_t k = 0; k <= n; ++k)
            for (std::size_t l = 0; l <= n; ++l) CHECK(sigma(k, l) >= 0);
    }
}

TEST_CASE("digraph splittance") {
    CHECK(digraph_splittance(testing::example1()) == 0);
    CHECK(digraph_splittance(testing::example2()) == 0);
    CHECK(digraph_splittance(non_split_sequence()) == 1);
    CHECK(digraph_splittance(IntegerPairSequence{{0, 0}}) == 0);
    CHECK_THROWS_AS(digraph_splittance(IntegerPairSequence{{1, 0}, {0, 0}}), NotDigraphicError);
    CHECK_THROWS_AS(digraph_splittance(IntegerPairSequence{}), EmptySequenceError);
}

TEST_CASE("digraph splittance equals the partition-enumeration minimum for n <= 4") {
    for (std::size_t n = 1; n <= 4; ++n) {
        oracle::enumerate_digraphs(n, {}, [](const Digraph& g) {
            const auto d = degree_sequence(g);
            CHECK(digraph_splittance(d) == oracle::brute_min_partition_measure(d));
        });
    }
}

TEST_CASE("maximal sequences") {
    const auto d = testing::example1();
    const auto ms = maximal_sequences(d, proper_order(d));
    CHECK(ms.m_under[0] == 5);
    CHECK(ms.m_bar[0] == 5);
    const auto sigma = matrix_of(kExample1Matrix);
    for (std::size_t k = 0; k <= 5; ++k) {
        Degree row_min = sigma(k, 0), col_min = sigma(0, k);
        for (std::size_t j = 0; j <= 5; ++j) {
            row_min = std::min(row_min, sigma(k, j));
            col_min = std::min(col_min, sigma(j, k));
        }
        CHECK(sigma(k, ms.m_under[k]) == row_min);
        CHECK(sigma(ms.m_bar[k], k) == col_min);
    }

    const auto d2 = testing::example2();
    const auto ms2 = maximal_sequences(d2, proper_order(d2));
    const auto sigma2 = matrix_of(kExample2Matrix);
    for (std::size_t k = 0; k <= 5; ++k) {
        Degree row_min = sigma2(k, 0);
        for (std::size_t j = 0; j <= 5; ++j) row_min = std::min(row_min, sigma2(k, j));
        CHECK(sigma2(k, ms2.m_under[k]) == row_min);
    }
}

TEST_CASE("Fulkerson slack") {
    const auto ext = fulkerson_slack(testing::example2());
    CHECK(ext.s_bar == std::vector<Degree>{0, 0, 1, 2, 2, 0});
    CHECK(ext.s_under == std::vector<Degree>{0, 0, 1, 2, 2, 0});
    CHECK(fulkerson_slack(testing::example1()).s_bar == std::vector<Degree>{0, 0, 0, 1, 0, 0});
    const auto single = fulkerson_slack(IntegerPairSequence{{0, 0}});
    CHECK(single.s_bar == std::vector<Degree>{0, 0});
    CHECK(single.s_under == std::vector<Degree>{0, 0});
    CHECK_FALSE(min_interior_slack(single).has_value());
    CHECK(min_interior_slack(ext) == 0);
}

TEST_CASE("slack sequences agree with the undirected slack on symmetric extensions") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        std::uniform_int_distribution<std::size_t> size(1, 9);
        const std::size_t n = size(rng);
        std::uniform_int_distribution<Degree> pick(0, static_cast<Degree>(n) - 1);
        std::vector<Degree> d(n);
        std::vector<DegreePair> pairs;
        for (auto& x : d) {
            x = pick(rng);
            pairs.push_back({x, x});
        }
        const IntegerPairSequence ext(pairs);
        const auto slack = fulkerson_slack(ext);
        const auto eg = undirected::eg_slack(d);
        // the head sums coincide while the k-th largest degree is at least k-1
        const auto sorted = undirected::sorted_non_increasing(d);
        for (std::size_t k = 1; k < n; ++k) {
            if (sorted[k - 1] >= static_cast<Degree>(k) - 1) CHECK(slack.s_bar[k] == eg[k]);
        }
        CHECK(slack.s_bar.back() == 0);
        CHECK(slack.s_under == slack.s_bar);
        const auto sigma = splittance_matrix(ext);
        const auto half = undirected::splittance_sequence(d);
        for (std::size_t k = 0; k <= n; ++k) {
            CHECK(sigma(k, k) == half[k].twice());
            for (std::size_t l = 0; l <= n; ++l) CHECK(sigma(k, l) == sigma(l, k));
        }
    }
}

TEST_CASE("digraphicality") {
    CHECK(is_digraphic(testing::example1()));
    CHECK(is_digraphic(testing::example2()));
    CHECK_FALSE(is_digraphic(IntegerPairSequence{{1, 0}}));
    CHECK_FALSE(is_digraphic(IntegerPairSequence{{1, 0}, {0, 0}}));
    CHECK(is_digraphic(IntegerPairSequence{}));
    // balanced and in range, but a vertex would need a loop
    CHECK_FALSE(is_digraphic(IntegerPairSequence{{1, 1}, {0, 0}}));
    CHECK_FALSE(is_digraphic(IntegerPairSequence{{2, 2}, {0, 0}, {0, 0}}));
    CHECK_FALSE(is_digraphic(IntegerPairSequence{{0, -1}, {-1, 0}}));
}

TEST_CASE("split sequences") {
    CHECK(is_split_sequence(testing::example1()));
    CHECK(is_split_sequence(testing::example2()));
    for (std::size_t n = 1; n <= 6; ++n) CHECK(is_split_sequence(degree_sequence(testing::complete_digraph(n))));
    CHECK_FALSE(is_split_sequence(non_split_sequence()));
    CHECK_FALSE(is_split_sequence(IntegerPairSequence{}));
    CHECK_THROWS_AS(is_split_sequence(IntegerPairSequence{{1, 0}, {0, 0}}), NotDigraphicError);
}

TEST_CASE("split partitions of example 1") {
    const auto found = split_partitions(testing::example1());
    CHECK(found.size() == 5);
    const auto hit = std::find_if(found.begin(), found.end(), [](const InducedSplitPartition& sp) {
        return sp.k == 2 && sp.l == 3;
    });
    REQUIRE(hit != found.end());
    CHECK(hit->partition == make_partition({Z, PM, PM, Z, M}));
    for (const auto& sp : found) {
        CHECK(sp.partition.non_trivial());
        CHECK(partition_measure(testing::example1(), sp.partition) == 0);
        CHECK_FALSE(sp.corner);
    }
}

TEST_CASE("split partitions: non-split and corner cases") {
    CHECK(split_partitions(non_split_sequence()).empty());
    CHECK(split_partitions(IntegerPairSequence{}).empty());
    CHECK_THROWS_AS(split_partitions(IntegerPairSequence{{1, 0}, {0, 0}}), NotDigraphicError);

    // empty digraph: (0,0) is a corner zero, and a non-corner zero coexists
    const auto empty = split_partitions(IntegerPairSequence(std::vector<DegreePair>(3)));
    REQUIRE_FALSE(empty.empty());
    CHECK(empty.front().corner);
    CHECK(std::any_of(empty.begin(), empty.end(), [](const auto& sp) { return !sp.corner; }));

    const auto complete = split_partitions(degree_sequence(testing::complete_digraph(3)));
    CHECK(std::any_of(complete.begin(), complete.end(), [](const auto& sp) {
        return sp.corner && sp.partition == QuadPartition(3, Block::PlusMinus);
    }));
    CHECK(std::any_of(complete.begin(), complete.end(), [](const auto& sp) { return !sp.corner; }));
}

TEST_CASE("split iff a zero exists off the trivial corners, for random digraphic sequences") {
    for (const auto& d : random_digraphic(23, 300, 10)) {
        const auto sigma = splittance_matrix(d);
        const bool zero = min_non_corner(sigma) == 0;
        CHECK(is_split_sequence(d) == zero);
        CHECK(split_partitions(d).empty() == !zero);
        if (d.size() >= 2 && zero) {
            const auto found = split_partitions(d);
            CHECK(std::any_of(found.begin(), found.end(), [](const auto& sp) { return !sp.corner; }));
        }
    }
}

TEST_CASE("induced partitions dominate their complements") {
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<std::size_t> size(1, 10);
    for (int trial = 0; trial < 200; ++trial) {
        const auto d = testing::random_valid_sequence(rng, size(rng));
        const auto ord = proper_order(d);
        const std::size_t n = d.size();
        std::uniform_int_distribution<std::size_t> index(0, n);
        const auto p = induced_partition(d, ord, index(rng), index(rng));
        for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t b = 0; b < n; ++b) {
                if (is_source_block(p[a]) && !is_source_block(p[b])) CHECK(compare_pos(d[a], d[b]) >= 0);
                if (is_target_block(p[a]) && !is_target_block(p[b])) CHECK(compare_neg(d[a], d[b]) >= 0);
            }
        }
    }
}

TEST_CASE("row and column shape around the maximal sequences") {
    for (const auto& d : random_digraphic(31, 300, 10)) {
        const auto sigma = splittance_matrix(d);
        const auto ms = maximal_sequences(d, proper_order(d));
        const std::size_t n = d.size();
        for (std::size_t k = 0; k <= n; ++k) {
            for (std::size_t l = 1; l <= n; ++l) {
                if (l <= ms.m_under[k]) CHECK(sigma(k, l) <= sigma(k, l - 1));
                else CHECK(sigma(k, l) > sigma(k, l - 1));
                if (l <= ms.m_bar[k]) CHECK(sigma(l, k) <= sigma(l - 1, k));
                else CHECK(sigma(l, k) > sigma(l - 1, k));
            }
        }
    }
}
