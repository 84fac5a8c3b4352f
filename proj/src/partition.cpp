#include "splitkit/partition.hpp"

#include <algorithm>

namespace splitkit {

std::size_t QuadPartition::count(Block b) const noexcept {
    return static_cast<std::size_t>(std::count(assignment_.begin(), assignment_.end(), b));
}

std::vector<std::size_t> QuadPartition::members(Block b) const {
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < assignment_.size(); ++v)
        if (assignment_[v] == b) out.push_back(v);
    return out;
}

bool QuadPartition::non_trivial() const noexcept {
    const auto n = assignment_.size();
    return count(Block::Plus) != n && count(Block::Minus) != n;
}

} // namespace splitkit
