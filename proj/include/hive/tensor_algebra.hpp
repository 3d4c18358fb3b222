#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "hive/cone.hpp"
#include "hive/hive.hpp"
#include "hive/polynomial.hpp"

namespace hive {

/// Raised when a value that the presentations pin down (a weight, an
/// initial monomial, an identity) does not come out as expected.
class ConsistencyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// coefficient * product of the minors named by `columns`.
struct MinorProduct {
    int coefficient = 1;
    std::vector<ColumnTableau> columns;
};

/// A generator written as a signed sum of minor products.
struct GeneratorSpec {
    std::vector<MinorProduct> terms;
    Weight expected_weight;
};

/// Generators g_1..g_m of TA(n) (m = 5, 10, 20 for n = 2, 3, 4). g_i
/// corresponds to the Hilbert basis hive h_i of the same index.
struct GeneratorTable {
    int n = 0;
    std::vector<GeneratorSpec> specs;
    std::vector<Polynomial> generators;
    std::vector<int> basis_map; ///< basis_map[i-1] = index of the hive matching g_i

    const Polynomial& at(int i) const { return generators.at(i - 1); }
};

/// Column tableaux and expected weights of the published generators, before
/// any expansion. Throws std::out_of_range outside n = 2, 3, 4.
std::vector<GeneratorSpec> generator_specs(int n);

Polynomial expand(int n, const std::vector<MinorProduct>& terms);

/// Expands every generator and checks its weight, that all raising
/// operators kill it, and that its initial monomial is the one attached to
/// the matching basis hive. Throws ConsistencyError naming the generator.
GeneratorTable build_generators(int n);

/// Cached build_generators(n).
const GeneratorTable& generator_table(int n);

/// prod_i x_ii^{mu_i} * prod_{i,j} y_ij^{t_ij}, with mu and t read off the
/// LR tableau of h.
Monomial lemma_initial_monomial(const Hive& h);

struct HighestWeightVector {
    Boundary boundary;
    Hive hive;
    std::vector<int> decomposition; ///< sorted generator indices
    Polynomial polynomial;
    Monomial initial;
};

/// Product of the generators named by `decomposition`, which must sum (as
/// basis hives) to h. Checks weight, annihilation and initial monomial.
HighestWeightVector lift(const Hive& h, const std::vector<int>& decomposition);

/// lift(h, decompose(h, cone_presentation(n))). Propagates NoDecomposition.
HighestWeightVector highest_weight_vector(int n, const Hive& h);

/// One lifted vector per hive with the given boundary. Throws
/// ConsistencyError if two of them share an initial monomial.
std::vector<HighestWeightVector> hwv_basis(int n, const Partition& lambda, const Partition& mu,
                                           const Partition& nu, unsigned threads = 0);

/// sum of sign * product of generators.
struct GeneratorRelation {
    std::string name;
    std::vector<std::pair<int, std::vector<int>>> terms;
};

/// Published relations among the generators: none for n = 2, one for
/// n = 3, fifteen for n = 4.
std::vector<GeneratorRelation> presentation_relations(int n);

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

bool all_passed(const std::vector<CheckResult>& results);

/// Each generator: weight matches the table, every raising operator gives
/// zero, initial monomial matches its hive.
std::vector<CheckResult> verify_generators(int n);

/// Expands each relation; passes iff the result is the zero polynomial.
std::vector<CheckResult> verify_presentation_relations(int n);

/// Rank of the Jacobian of g_1..g_5 in the 8 variables of GL(2) at
/// `samples` random points with entries in [-9, 9] (points where every
/// generator vanishes are skipped), plus distinctness of the initial
/// monomials. Passes if some point gives rank 5.
std::vector<CheckResult> verify_independence(int n, unsigned samples = 5,
                                             std::uint64_t seed = 20240601);

/// (a) Desnanot-Jacobi for generic 3x3, 4x4, 5x5 matrices;
/// (b) straightening identities between products of minors;
/// (c) for n = 4, Desnanot-Jacobi on three bordered matrices: every
///     bordered minor is identified with a signed minor, and r^_1, r^_3,
///     r^_5 are recovered as explicit combinations of the resulting
///     quadratic identity and (b).
std::vector<CheckResult> verify_classical_identities(int n);

} // namespace hive
