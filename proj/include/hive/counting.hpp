#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "hive/hive.hpp"
#include "hive/shapes.hpp"

namespace hive {

using BigInt = mpz_class;

struct Triple {
    Partition lambda;
    Partition mu;
    Partition nu;
    friend bool operator==(const Triple&, const Triple&) = default;
};

/// Calls `visit` once for every hive with boundary (lambda, mu, nu). The
/// three edges are fixed by partial sums of mu (left), lambda (right) and
/// |mu| plus partial sums of nu (bottom); interior entries are assigned
/// row by row, each within the interval cut out by the rhombus inequalities
/// whose other corners are already known.
void visit_hives(int n, const Partition& lambda, const Partition& mu, const Partition& nu,
                 const std::function<void(const TriangularArray&)>& visit);

std::vector<Hive> enumerate_hives(int n, const Partition& lambda, const Partition& mu,
                                  const Partition& nu);

/// Number of hives with boundary (lambda, mu, nu): the LR coefficient
/// c^lambda_{mu nu} for GL(n). Zero when |lambda| != |mu| + |nu| or any
/// partition has more than n parts.
std::int64_t lr_coefficient(int n, const Partition& lambda, const Partition& mu,
                            const Partition& nu);

/// Triples with |lambda| = d = |mu| + |nu| and at most n parts each that can
/// carry a nonzero coefficient: mu, nu inside lambda and
/// mu ∪ nu ⊴ lambda ⊴ mu + nu.
std::vector<Triple> candidate_triples(int n, int d);

/// Runs `work(k)` for k in [0, count) on up to `threads` workers
/// (0 = hardware concurrency).
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& work);

/// m_d: sum of c^lambda_{mu nu} over all triples of degree d.
BigInt md_sum(int n, int d, unsigned threads = 0);

/// Coefficients m_0 .. m_D of a Hilbert-Poincare series.
struct SeriesPrefix {
    std::vector<BigInt> coefficients;

    int max_degree() const noexcept { return static_cast<int>(coefficients.size()) - 1; }
    /// "1, 2, 6, 10"
    std::string coefficient_list() const;
    /// "1 + 2 t + 6 t^2 + 10 t^3 + O(t^4)"
    std::string polynomial() const;
    friend bool operator==(const SeriesPrefix&, const SeriesPrefix&) = default;
};

SeriesPrefix hp_series_enumerated(int n, int max_degree, unsigned threads = 0);

/// numerator(t) / prod_e (1 - t^e), expanded through t^max_degree.
SeriesPrefix hp_series_closed_form(const std::vector<BigInt>& numerator,
                                   const std::vector<int>& denominator_exponents, int max_degree);

/// Closed-form rational function of the series for HA(n), n = 2, 3, 4.
struct ClosedForm {
    std::vector<BigInt> numerator;
    std::vector<int> denominator_exponents; ///< one entry per factor (1 - t^e)
};

/// Throws std::out_of_range for n outside {2, 3, 4}.
ClosedForm closed_form_data(int n);

/// Schur-function oracle, independent of hives and tableaux-to-hive maps:
/// expands s_mu * s_nu in n variables as an explicit polynomial and peels
/// off leading Schur terms. Returns lambda -> c^lambda_{mu nu} (nonzero only).
std::map<Partition, std::int64_t> schur_product_expansion(int n, const Partition& mu,
                                                          const Partition& nu);

std::int64_t lr_via_schur(int n, const Partition& lambda, const Partition& mu,
                          const Partition& nu);

} // namespace hive
