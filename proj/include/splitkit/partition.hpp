#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace splitkit {

/// Block of a four-way split partition {S+-, S+, S-, S0}.
enum class Block : std::uint8_t { PlusMinus, Plus, Minus, Zero };

/// Assignment of every vertex index to one block.
class QuadPartition {
public:
    QuadPartition() = default;
    explicit QuadPartition(std::vector<Block> assignment) : assignment_(std::move(assignment)) {}
    /// All n vertices in one block.
    QuadPartition(std::size_t n, Block fill) : assignment_(n, fill) {}

    std::size_t size() const noexcept { return assignment_.size(); }
    Block operator[](std::size_t v) const { return assignment_[v]; }
    void set(std::size_t v, Block b) { assignment_.at(v) = b; }
    const std::vector<Block>& assignment() const noexcept { return assignment_; }

    std::size_t count(Block b) const noexcept;
    std::vector<std::size_t> members(Block b) const;

    /// |S+- u S+|
    std::size_t k() const noexcept { return count(Block::PlusMinus) + count(Block::Plus); }
    /// |S+- u S-|
    std::size_t l() const noexcept { return count(Block::PlusMinus) + count(Block::Minus); }

    /// False when V = S+ or V = S-.
    bool non_trivial() const noexcept;

    friend bool operator==(const QuadPartition&, const QuadPartition&) = default;

private:
    std::vector<Block> assignment_;
};

/// Source side of the forced arcs: S+- or S+.
constexpr bool is_source_block(Block b) noexcept { return b == Block::PlusMinus || b == Block::Plus; }
/// Target side of the forced arcs: S+- or S-.
constexpr bool is_target_block(Block b) noexcept { return b == Block::PlusMinus || b == Block::Minus; }

} // namespace splitkit
