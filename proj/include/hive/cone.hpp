#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hive/hive.hpp"

namespace hive {

/// Linear description of the hive cone over the row-major coordinates:
/// a vector is a hive iff every row has a non-negative dot product with it
/// and every equation row has dot product zero.
struct InequalitySystem {
    int n = 0;
    std::vector<std::vector<int>> rows;
    std::vector<std::vector<int>> equations;

    bool contains(std::span<const Entry> point) const;
};

/// 3n boundary rows (b, c, a edges) followed by the three rhombus families,
/// plus the single equation h_11 = 0. For n = 4 this is, row for row, the
/// Normaliz input describing the GL(4) hive cone.
InequalitySystem cone_inequalities(int n);

/// Every hive of degree <= max_degree, sorted by degree then coordinates.
std::vector<Hive> hives_up_to_degree(int n, int max_degree, unsigned threads = 0);

/// Irreducible hives of degree <= max_degree, sorted by degree then
/// coordinates. A hive is reducible iff some nonzero hive of strictly
/// smaller degree can be subtracted from it leaving a hive; it suffices to
/// try the irreducibles already found at lower degrees.
std::vector<Hive> hilbert_basis(int n, int max_degree, unsigned threads = 0);

/// sum(left) = sum(right) in the hive monoid. Indices are 1-based into
/// ConePresentation::basis.
struct BinomialRelation {
    std::string name;
    std::vector<int> left;
    std::vector<int> right;
};

struct ConePresentation {
    int n = 0;
    std::vector<Hive> basis; ///< h_1, h_2, ... in the published order
    std::vector<int> degrees;
    std::vector<BinomialRelation> relations;

    const Hive& at(int index) const { return basis.at(index - 1); }
};

/// Published Hilbert basis and relations of HA(n), n = 2, 3, 4. The data are
/// checked on construction (every element is a hive of the stated degree).
/// Throws std::out_of_range for other n.
const ConePresentation& cone_presentation(int n);

/// Raised when a hive cannot be written over a presentation's basis.
class NoDecomposition : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Sorted multiset of 1-based basis indices summing to h. Depth-first over
/// indices in published order, never decreasing along a branch, so the
/// result is the lexicographically smallest sorted index list.
std::vector<int> decompose(const Hive& h, const ConePresentation& pres);

/// Every sorted index multiset summing to h.
std::vector<std::vector<int>> all_decompositions(const Hive& h, const ConePresentation& pres);

Hive sum_of(const std::vector<int>& indices, const ConePresentation& pres);

struct RelationCheck {
    std::string name;
    bool holds = false;
    /// First differing coordinate (row-major, 0-based) when the check fails.
    std::optional<int> coordinate;
    Entry left_value = 0;
    Entry right_value = 0;
};

std::vector<RelationCheck> verify_relations(const ConePresentation& pres);

/// Normaliz input: row count, dimension, rows, "inequalities", then the
/// equation block.
std::string export_appendix_inequalities(int n);

/// Normaliz cone-by-generators input with grading by the last coordinate.
/// Generators are listed in lexicographic coordinate order.
std::string export_appendix_generators(const ConePresentation& pres);

/// "r1: h1 + h7 + h9 = h6 + h15"
std::string to_string(const BinomialRelation& r);

} // namespace hive
