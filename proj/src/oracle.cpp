#include "splitkit/oracle.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <string>

#include "splitkit/errors.hpp"

namespace splitkit::oracle {

EnumerationBudget EnumerationBudget::for_vertices(std::size_t n) {
    EnumerationBudget b;
    b.max_vertices = n;
    b.max_search_vertices = n;
    b.max_partitions = n >= 32 ? std::numeric_limits<std::uint64_t>::max() : std::uint64_t{1} << (2 * n);
    return b;
}

namespace {

std::uint64_t partition_count(std::size_t n) {
    if (n >= 32) return std::numeric_limits<std::uint64_t>::max();
    return std::uint64_t{1} << (2 * n);
}

QuadPartition partition_from_code(std::size_t n, std::uint64_t code) {
    QuadPartition p(n, Block::Zero);
    for (std::size_t v = 0; v < n; ++v, code >>= 2) p.set(v, static_cast<Block>(code & 3));
    return p;
}

// Definition-level measure, kept separate from the library's evaluation.
Degree measure(const IntegerPairSequence& d, const QuadPartition& p) {
    Degree both = 0, minus = 0, k = 0, in_sum = 0, out_sum = 0;
    for (std::size_t v = 0; v < d.size(); ++v) {
        switch (p[v]) {
        case Block::PlusMinus: ++both; ++k; out_sum += d[v].out; break;
        case Block::Plus: ++k; out_sum += d[v].out; in_sum += d[v].in; break;
        case Block::Minus: ++minus; break;
        case Block::Zero: in_sum += d[v].in; break;
        }
    }
    return both * (k - 1) + minus * k + in_sum - out_sum;
}

std::size_t arc_bits(std::size_t n) { return n * (n == 0 ? 0 : n - 1); }

std::size_t arc_bit(std::size_t n, std::size_t u, std::size_t v) {
    return u * (n - 1) + (v < u ? v : v - 1);
}

/// Forced and forbidden arc masks of one partition in code space.
struct ArcConstraint {
    std::uint64_t forced = 0;
    std::uint64_t forbidden = 0;
    friend auto operator<=>(const ArcConstraint&, const ArcConstraint&) = default;
};

std::vector<ArcConstraint> split_constraints(std::size_t n) {
    std::vector<ArcConstraint> out;
    for (std::uint64_t code = 0; code < partition_count(n); ++code) {
        const auto p = partition_from_code(n, code);
        if (!p.non_trivial()) continue;
        ArcConstraint c;
        for (std::size_t u = 0; u < n; ++u) {
            for (std::size_t v = 0; v < n; ++v) {
                if (u == v) continue;
                const auto bit = std::uint64_t{1} << arc_bit(n, u, v);
                if (is_source_block(p[u]) && is_target_block(p[v])) c.forced |= bit;
                if (!is_source_block(p[u]) && !is_target_block(p[v])) c.forbidden |= bit;
            }
        }
        out.push_back(c);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool satisfies_any(std::uint64_t code, const std::vector<ArcConstraint>& constraints) {
    return std::any_of(constraints.begin(), constraints.end(), [code](const ArcConstraint& c) {
        return (code & c.forced) == c.forced && (code & c.forbidden) == 0;
    });
}

constexpr std::size_t kTableVertices = 4;

/// Split test in code space; tabulated for small n, constraint scan otherwise.
class SplitTest {
public:
    explicit SplitTest(std::size_t n) : constraints_(split_constraints(n)) {
        if (n > kTableVertices) return;
        table_.resize(digraph_count(n));
        for (std::uint64_t code = 0; code < table_.size(); ++code) table_[code] = satisfies_any(code, constraints_);
    }

    bool operator()(std::uint64_t code) const {
        return table_.empty() ? satisfies_any(code, constraints_) : static_cast<bool>(table_[code]);
    }

private:
    std::vector<ArcConstraint> constraints_;
    std::vector<bool> table_;
};

// Built once per n and shared across threads.
std::shared_ptr<const SplitTest> split_test(std::size_t n) {
    static std::mutex mutex;
    static std::map<std::size_t, std::shared_ptr<const SplitTest>> cache;
    std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
    auto test = std::make_shared<const SplitTest>(n);
    cache.emplace(n, test);
    return test;
}

class Realizer {
public:
    explicit Realizer(const IntegerPairSequence& d) : d_(d), n_(d.size()), in_left_(n_) {
        for (std::size_t v = 0; v < n_; ++v) in_left_[v] = d[v].in;
    }

    std::optional<Digraph> run() {
        if (!place(0)) return std::nullopt;
        return Digraph(n_, arcs_);
    }

private:
    bool place(std::size_t u) {
        if (u == n_) return std::all_of(in_left_.begin(), in_left_.end(), [](Degree x) { return x == 0; });
        return choose(u, 0, d_[u].out);
    }

    // Picks `need` more heads for tail u among vertices >= v.
    bool choose(std::size_t u, std::size_t v, Degree need) {
        if (need == 0) return feasible_after(u) && place(u + 1);
        for (; v < n_; ++v) {
            if (v == u || in_left_[v] == 0) continue;
            --in_left_[v];
            arcs_.push_back({u, v});
            if (choose(u, v + 1, need - 1)) return true;
            arcs_.pop_back();
            ++in_left_[v];
        }
        return false;
    }

    // Vertex v can still receive from tails u+1.., excluding itself.
    bool feasible_after(std::size_t u) const {
        for (std::size_t v = 0; v < n_; ++v) {
            const auto tails = static_cast<Degree>(n_ - u - 1) - (v > u ? 1 : 0);
            if (in_left_[v] > tails) return false;
        }
        return true;
    }

    const IntegerPairSequence& d_;
    std::size_t n_;
    std::vector<Degree> in_left_;
    std::vector<Arc> arcs_;
};

void require_arc_space(std::size_t n, const EnumerationBudget& budget) {
    if (n > budget.max_vertices || arc_bits(n) >= 63)
        throw BudgetExceededError("arc-space enumeration on " + std::to_string(n) +
                                  " vertices exceeds budget of " + std::to_string(budget.max_vertices));
}

} // namespace

Degree brute_min_partition_measure(const IntegerPairSequence& d, const EnumerationBudget& budget) {
    const std::size_t n = d.size();
    if (n == 0) throw EmptySequenceError();
    if (partition_count(n) > budget.max_partitions)
        throw BudgetExceededError("4^" + std::to_string(n) + " partitions exceed budget");
    Degree best = std::numeric_limits<Degree>::max();
    for (std::uint64_t code = 0; code < partition_count(n); ++code) {
        const auto p = partition_from_code(n, code);
        if (p.non_trivial()) best = std::min(best, measure(d, p));
    }
    return best;
}

std::optional<Digraph> brute_realize(const IntegerPairSequence& d, const EnumerationBudget& budget) {
    if (d.size() > budget.max_search_vertices)
        throw BudgetExceededError("realization search on " + std::to_string(d.size()) + " vertices exceeds budget");
    const auto bound = static_cast<Degree>(d.size()) - 1;
    for (const auto& p : d)
        if (p.out < 0 || p.in < 0 || p.out > bound || p.in > bound) return std::nullopt;
    if (d.out_sum() != d.in_sum()) return std::nullopt;
    return Realizer(d).run();
}

bool is_split_digraph(const Digraph& g) {
    const std::size_t n = g.vertex_count();
    for (std::uint64_t code = 0; code < partition_count(n); ++code) {
        const auto p = partition_from_code(n, code);
        if (!p.non_trivial()) continue;
        bool ok = true;
        for (std::size_t u = 0; u < n && ok; ++u) {
            for (std::size_t v = 0; v < n && ok; ++v) {
                if (u == v) continue;
                const bool arc = g.has_arc(u, v);
                if (is_source_block(p[u]) && is_target_block(p[v])) ok = arc;
                else if (!is_source_block(p[u]) && !is_target_block(p[v])) ok = !arc;
            }
        }
        if (ok) return true;
    }
    return false;
}

Degree brute_splittance(const Digraph& g, const EnumerationBudget& budget) {
    const std::size_t n = g.vertex_count();
    if (n == 0) throw EmptySequenceError();
    require_arc_space(n, budget);
    if (is_split_digraph(g)) return 0;
    const auto is_split = split_test(n);
    const std::uint64_t code = digraph_code(g);
    const std::size_t bits = arc_bits(n);
    for (std::size_t radius = 1; radius <= bits; ++radius) {
        // Gosper's hack over all `bits`-bit masks with `radius` bits set
        std::uint64_t flip = (std::uint64_t{1} << radius) - 1;
        const std::uint64_t limit = std::uint64_t{1} << bits;
        while (flip < limit) {
            if ((*is_split)(code ^ flip)) return static_cast<Degree>(radius);
            const std::uint64_t low = flip & (~flip + 1);
            const std::uint64_t ripple = flip + low;
            flip = (((ripple ^ flip) >> 2) / low) | ripple;
        }
    }
    // unreachable for n >= 1: S0 = V is always attainable
    throw std::logic_error("no split digraph within full edit radius");
}

std::uint64_t digraph_count(std::size_t n) {
    if (arc_bits(n) >= 64) throw BudgetExceededError("digraph count overflows 64 bits");
    return std::uint64_t{1} << arc_bits(n);
}

Digraph digraph_from_code(std::size_t n, std::uint64_t code) {
    std::vector<Arc> arcs;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v)
            if (u != v && (code >> arc_bit(n, u, v)) & 1) arcs.push_back({u, v});
    return Digraph(n, std::move(arcs));
}

std::uint64_t digraph_code(const Digraph& g) {
    const std::size_t n = g.vertex_count();
    if (arc_bits(n) >= 64) throw BudgetExceededError("digraph code overflows 64 bits");
    std::uint64_t code = 0;
    for (const auto& a : g.arcs()) code |= std::uint64_t{1} << arc_bit(n, a.from, a.to);
    return code;
}

void enumerate_digraphs(std::size_t n, const EnumerationBudget& budget, const DigraphVisitor& visit) {
    require_arc_space(n, budget);
    enumerate_digraphs(n, 0, digraph_count(n), budget, visit);
}

void enumerate_digraphs(std::size_t n, std::uint64_t first, std::uint64_t last,
                        const EnumerationBudget& budget, const DigraphVisitor& visit) {
    require_arc_space(n, budget);
    last = std::min(last, digraph_count(n));
    for (std::uint64_t code = first; code < last; ++code) visit(digraph_from_code(n, code));
}

std::vector<Digraph> sample_digraphs(std::size_t n, std::size_t count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(0.5);
    std::vector<Digraph> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        std::vector<Arc> arcs;
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v = 0; v < n; ++v)
                if (u != v && coin(rng)) arcs.push_back({u, v});
        out.emplace_back(n, std::move(arcs));
    }
    return out;
}

} // namespace splitkit::oracle
