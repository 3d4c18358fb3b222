#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "hive/shapes.hpp"

namespace hive {

using Entry = std::int64_t;

/// Thrown when an entry list cannot be read as a triangular array.
class ShapeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Thrown when two hives (or polynomials) of different rank are combined.
class RankMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Thrown when a value that must be a hive is not one.
class InvalidHive : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Number of entries of the GL(n) triangular array, (n+1)(n+2)/2.
constexpr int triangle_size(int n) noexcept { return (n + 1) * (n + 2) / 2; }

/// 0-based offset of h_{ij} (1-based, 1 <= j <= i) in row-major order
/// h_11, h_21, h_22, h_31, ...
constexpr int triangle_index(int i, int j) noexcept { return (i - 1) * i / 2 + (j - 1); }

/// An unconstrained integer triangular array (h_ij), 1 <= j <= i <= n+1.
class TriangularArray {
public:
    TriangularArray() = default;

    /// All-zero array for GL(n).
    explicit TriangularArray(int n);

    /// Row-major flat entries. Throws ShapeError unless the count is
    /// (n+1)(n+2)/2 for some n >= 1.
    static TriangularArray from_flat(std::vector<Entry> entries);

    /// Rows of lengths 1, 2, ..., n+1. Throws ShapeError otherwise.
    static TriangularArray from_rows(const std::vector<std::vector<Entry>>& rows);

    int rank() const noexcept { return n_; }
    Entry at(int i, int j) const { return entries_[triangle_index(i, j)]; }
    Entry& at(int i, int j) { return entries_[triangle_index(i, j)]; }
    std::span<const Entry> flat() const noexcept { return entries_; }
    std::vector<std::vector<Entry>> rows() const;

    friend bool operator==(const TriangularArray&, const TriangularArray&) = default;
    friend auto operator<=>(const TriangularArray&, const TriangularArray&) = default;

private:
    int n_ = 0;
    std::vector<Entry> entries_;
};

/// The three boundary sequences of a triangular array, each of length n:
/// lambda from the right edge a_i = h_{i+1,i+1} - h_{ii}, mu from the left
/// edge b_i = h_{i+1,1} - h_{i1}, nu from the bottom edge
/// c_i = h_{n+1,i+1} - h_{n+1,i}.
struct BoundarySequences {
    std::vector<Entry> a;
    std::vector<Entry> b;
    std::vector<Entry> c;
};

BoundarySequences boundary_sequences(const TriangularArray& t);

/// Which defining condition failed.
enum class Condition {
    Corner,        ///< h_11 = 0
    RightEdge,     ///< a_h non-negative dominant (index i refers to a_i)
    LeftEdge,      ///< b_h non-negative dominant
    BottomEdge,    ///< c_h non-negative dominant
    RhombusFirst,  ///< h_ij + h_{i+1,j+1} >= h_{i+1,j} + h_{i,j+1},  1 <= j < i <= n
    RhombusSecond, ///< h_ij + h_{i,j+1} >= h_{i+1,j+1} + h_{i-1,j},  1 <= j < i <= n
    RhombusThird,  ///< h_{i+1,j} + h_ij >= h_{i+1,j+1} + h_{i,j-1},  1 < j <= i <= n
};

const char* to_string(Condition c) noexcept;

struct Violation {
    Condition condition;
    int i = 0;
    int j = 0;
    Entry lhs = 0; ///< side that must be >= rhs
    Entry rhs = 0;

    std::string describe() const;
    friend bool operator==(const Violation&, const Violation&) = default;
};

struct HiveCheck;

struct Boundary {
    Partition lambda;
    Partition mu;
    Partition nu;
    friend bool operator==(const Boundary&, const Boundary&) = default;
};

std::string to_string(const Boundary& b);

/// A hive for GL(n): a triangular array with h_11 = 0, all rhombus
/// inequalities, and non-negative dominant boundary. Immutable; the only
/// way to obtain one is through validation.
class Hive {
public:
    /// Checks every condition and reports all failures.
    static HiveCheck validate(const TriangularArray& t);

    /// Throws InvalidHive listing the violations.
    static Hive make(const TriangularArray& t);
    static Hive from_flat(int n, std::vector<Entry> entries);

    static Hive zero(int n);

    int rank() const noexcept { return array_.rank(); }
    Entry at(int i, int j) const { return array_.at(i, j); }
    std::span<const Entry> flat() const noexcept { return array_.flat(); }
    const TriangularArray& array() const noexcept { return array_; }

    /// h_{n+1,n+1}, which equals |lambda| = |mu| + |nu|.
    Entry degree() const { return array_.at(rank() + 1, rank() + 1); }

    Boundary boundary() const;

    bool is_zero() const noexcept;

    friend bool operator==(const Hive&, const Hive&) = default;
    friend auto operator<=>(const Hive&, const Hive&) = default;

private:
    explicit Hive(TriangularArray t) : array_(std::move(t)) {}
    TriangularArray array_;
};

/// Either a hive or the complete list of violated conditions.
struct HiveCheck {
    std::optional<Hive> hive;
    std::vector<Violation> violations;

    explicit operator bool() const noexcept { return hive.has_value(); }
};

/// Entrywise sum. Throws RankMismatch; checks for overflow.
Hive add(const Hive& a, const Hive& b);
inline Hive operator+(const Hive& a, const Hive& b) { return add(a, b); }

/// a - b, if that difference is again a hive.
std::optional<Hive> try_subtract(const Hive& a, const Hive& b);

/// Total order used for sorting hive lists: degree first, then coordinates.
bool degree_then_coordinates(const Hive& a, const Hive& b);

/// Text picture of the triangle, one row per line, centred.
std::string render(const TriangularArray& t);

/// One linear form over the row-major coordinates with all four (or two)
/// non-zero coefficients listed; the constraint is sum >= 0.
struct SparseInequality {
    Condition condition;
    int i = 0;
    int j = 0;
    std::vector<std::pair<int, int>> terms; ///< (coordinate, coefficient)
};

/// Non-negativity of each boundary increment, in the order
/// b_1..b_n, c_1..c_n, a_1..a_n.
std::vector<SparseInequality> boundary_increment_inequalities(int n);

/// All 3 n(n-1)/2 rhombus inequalities: second family (i = 2..n, j < i),
/// third family (i = 2..n, 2 <= j <= i), first family (i = 2..n, j < i).
std::vector<SparseInequality> rhombus_inequalities(int n);

} // namespace hive
