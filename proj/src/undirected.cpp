#include "splitkit/undirected.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <numeric>
#include <ostream>

#include "splitkit/errors.hpp"

namespace splitkit::undirected {

std::ostream& operator<<(std::ostream& os, const HalfInteger& v) {
    if (v.is_integer()) return os << v.integer();
    return os << v.twice() << "/2";
}

void validate(std::span<const Degree> degrees) {
    const auto bound = static_cast<Degree>(degrees.size()) - 1;
    for (std::size_t i = 0; i < degrees.size(); ++i) {
        if (degrees[i] < 0) throw NegativeDegreeError(i);
        if (degrees[i] > bound) throw OutOfRangeError(i);
    }
}

std::vector<Degree> sorted_non_increasing(std::span<const Degree> degrees) {
    std::vector<Degree> d(degrees.begin(), degrees.end());
    std::sort(d.begin(), d.end(), std::greater<>());
    return d;
}

std::size_t corrected_durfee(std::span<const Degree> degrees) {
    if (degrees.empty()) throw EmptySequenceError();
    const auto d = sorted_non_increasing(degrees);
    // d is non-increasing and k-1 increasing, so the qualifying k form a prefix
    std::size_t m = 0;
    for (std::size_t k = 1; k <= d.size(); ++k) {
        if (d[k - 1] >= static_cast<Degree>(k) - 1) m = k;
        else break;
    }
    return m;
}

std::vector<HalfInteger> splittance_sequence(std::span<const Degree> degrees) {
    const auto d = sorted_non_increasing(degrees);
    const Degree total = std::accumulate(d.begin(), d.end(), Degree{0});
    std::vector<HalfInteger> sigma;
    sigma.reserve(d.size() + 1);
    Degree head = 0;
    for (std::size_t k = 0; k <= d.size(); ++k) {
        if (k > 0) head += d[k - 1];
        const auto kk = static_cast<Degree>(k);
        sigma.push_back(HalfInteger::from_twice(kk * (kk - 1) - head + (total - head)));
    }
    return sigma;
}

std::vector<Degree> eg_slack(std::span<const Degree> degrees) {
    const auto d = sorted_non_increasing(degrees);
    const std::size_t n = d.size();
    std::vector<Degree> slack(n + 1);
    Degree head = 0;
    for (std::size_t k = 0; k <= n; ++k) {
        if (k > 0) head += d[k - 1];
        const auto kk = static_cast<Degree>(k);
        Degree tail = 0;
        for (std::size_t i = k; i < n; ++i) tail += std::min(d[i], kk);
        slack[k] = kk * (kk - 1) - head + tail;
    }
    return slack;
}

bool is_graphic(std::span<const Degree> degrees) {
    if (std::any_of(degrees.begin(), degrees.end(), [](Degree x) { return x < 0; })) return false;
    const Degree total = std::accumulate(degrees.begin(), degrees.end(), Degree{0});
    if (total % 2 != 0) return false;
    const auto slack = eg_slack(degrees);
    return std::all_of(slack.begin() + 1, slack.end(), [](Degree s) { return s >= 0; });
}

Degree undirected_splittance(std::span<const Degree> degrees) {
    if (!is_graphic(degrees)) throw NotGraphicError();
    if (degrees.empty()) return 0;
    const auto sigma = splittance_sequence(degrees);
    const auto m = corrected_durfee(degrees);
    assert(sigma[m] == *std::min_element(sigma.begin(), sigma.end()));
    assert(sigma[m].is_integer());
    return sigma[m].integer();
}

bool is_split_undirected(std::span<const Degree> degrees) {
    const bool by_splittance = undirected_splittance(degrees) == 0;
    if (!degrees.empty()) {
        [[maybe_unused]] const bool by_slack = eg_slack(degrees)[corrected_durfee(degrees)] == 0;
        assert(by_splittance == by_slack);
    }
    return by_splittance;
}

} // namespace splitkit::undirected
