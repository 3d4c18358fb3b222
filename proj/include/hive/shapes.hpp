#pragma once

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace hive {

/// True iff the sequence is weakly decreasing with every part >= 0.
bool is_dominant(std::span<const int> parts);

/// A non-negative dominant integer sequence, identified with its Young
/// diagram. Trailing zeros are dropped on construction, so (2,1) and
/// (2,1,0) compare equal.
class Partition {
public:
    Partition() = default;

    /// Throws std::invalid_argument if `parts` is not dominant.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts);

    const std::vector<int>& parts() const noexcept { return parts_; }

    /// Part i (0-based); zero past the stored length.
    int operator[](std::size_t i) const noexcept {
        return i < parts_.size() ? parts_[i] : 0;
    }

    /// Number of nonzero parts.
    std::size_t length() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }

    /// |κ|
    int size() const noexcept;

    /// Parts zero-padded (never truncated) to at least `n` entries.
    std::vector<int> padded(std::size_t n) const;

    /// Containment of Young diagrams: inner_i <= (*this)_i for all i.
    bool contains(const Partition& inner) const noexcept;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend std::strong_ordering operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

std::string to_string(const Partition& p);
std::ostream& operator<<(std::ostream& os, const Partition& p);

/// Parses "3,2,1" (trailing zeros optional). Throws std::invalid_argument.
Partition parse_partition(const std::string& text);

/// Partitions of exactly d with at most max_parts parts, lexicographically
/// descending.
std::vector<Partition> partitions_of(int d, int max_parts);

/// All partitions with |κ| <= d and at most max_parts parts: graded by size,
/// then lexicographically descending inside each size.
std::vector<Partition> partitions_up_to(int d, int max_parts);

/// Componentwise sum μ + ν.
Partition sum(const Partition& a, const Partition& b);

/// μ ∪ ν: the parts of both, merged and sorted decreasingly.
Partition union_of(const Partition& a, const Partition& b);

/// Dominance order a ⊴ b on partitions of the same size.
bool dominated_by(const Partition& a, const Partition& b);

/// λ/μ. Both are read zero-padded to a common length.
struct SkewShape {
    Partition outer;
    Partition inner;

    /// Throws std::invalid_argument unless inner ⊆ outer.
    SkewShape(Partition outer_, Partition inner_);

    std::size_t rows() const noexcept { return outer.length(); }
    int cells() const noexcept { return outer.size() - inner.size(); }
    friend bool operator==(const SkewShape&, const SkewShape&) = default;
};

} // namespace hive
