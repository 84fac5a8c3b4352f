#pragma once

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

#include "splitkit/sequence.hpp"

namespace splitkit::undirected {

/// Exact value in (1/2)Z, stored doubled.
class HalfInteger {
public:
    constexpr HalfInteger() = default;
    static constexpr HalfInteger from_twice(Degree twice) { return HalfInteger(twice); }
    static constexpr HalfInteger from_integer(Degree v) { return HalfInteger(2 * v); }

    constexpr Degree twice() const noexcept { return twice_; }
    constexpr bool is_integer() const noexcept { return twice_ % 2 == 0; }
    /// Only meaningful when is_integer().
    constexpr Degree integer() const noexcept { return twice_ / 2; }

    friend constexpr auto operator<=>(const HalfInteger&, const HalfInteger&) = default;

private:
    constexpr explicit HalfInteger(Degree twice) : twice_(twice) {}
    Degree twice_ = 0;
};

std::ostream& operator<<(std::ostream& os, const HalfInteger& v);

/// Checks entries against [0, N-1].
void validate(std::span<const Degree> degrees);

/// Copy sorted non-increasing.
std::vector<Degree> sorted_non_increasing(std::span<const Degree> degrees);

/// Corrected Durfee number, 1-based: max k with d_k >= k-1.
std::size_t corrected_durfee(std::span<const Degree> degrees);

/// sigma_k for k = 0..N.
std::vector<HalfInteger> splittance_sequence(std::span<const Degree> degrees);

/// Erdos-Gallai slack s_k for k = 0..N.
std::vector<Degree> eg_slack(std::span<const Degree> degrees);

bool is_graphic(std::span<const Degree> degrees);

/// sigma_m(d); throws NotGraphicError.
Degree undirected_splittance(std::span<const Degree> degrees);

/// sigma_m(d) == 0, cross-checked against s_m(d) == 0; throws NotGraphicError.
bool is_split_undirected(std::span<const Degree> degrees);

} // namespace splitkit::undirected
