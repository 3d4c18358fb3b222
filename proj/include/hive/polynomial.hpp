#pragma once

#include <compare>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace hive {

/// Variables x_ij, y_ij (1 <= i, j <= n) are numbered row by row across the
/// n x 2n matrix [X | Y]:
///   id = (i-1)*2n + (kind == Y ? n : 0) + (j-1).
/// Lexicographic order treats a smaller id as the larger variable, so
/// x_11 > ... > x_1n > y_11 > ... > y_1n > x_21 > ...
enum class VarKind { X, Y };

struct Variable {
    VarKind kind;
    int row;
    int col;
    friend bool operator==(const Variable&, const Variable&) = default;
};

int variable_id(int n, VarKind kind, int row, int col);
Variable variable_of(int n, int id);
/// "x11" / "y23"
std::string variable_name(int n, int id);

/// Sparse exponent vector: (id, exponent) pairs, ids ascending, no zero
/// exponents.
class Monomial {
public:
    Monomial() = default;
    static Monomial variable(int id, int exponent = 1);
    /// Throws std::invalid_argument on negative exponents; drops zeros.
    static Monomial from_pairs(std::vector<std::pair<int, int>> pairs);

    const std::vector<std::pair<int, int>>& factors() const noexcept { return factors_; }
    int exponent(int id) const noexcept;
    int degree() const noexcept;
    bool is_one() const noexcept { return factors_.empty(); }

    /// Exponent of `id` lowered by one; requires exponent(id) >= 1.
    Monomial lowered(int id) const;

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    friend bool operator==(const Monomial&, const Monomial&) = default;

    /// Pure lex with smaller ids dominating.
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

private:
    std::vector<std::pair<int, int>> factors_;
};

using VariableNamer = std::function<std::string(int)>;

struct Term {
    Monomial monomial;
    mpz_class coefficient;
};

class NotHomogeneous : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Exact polynomial with integer coefficients. `rank` is n for polynomials
/// in the x/y variables of GL(n); rank 0 marks a formal polynomial whose
/// variable ids carry no matrix meaning. Operands of different rank are
/// rejected with RankMismatch.
class Polynomial {
public:
    using TermMap = std::map<Monomial, mpz_class, std::greater<>>;

    Polynomial() = default;
    explicit Polynomial(int rank) : rank_(rank) {}

    static Polynomial constant(int rank, const mpz_class& c);
    static Polynomial variable(int rank, int id);
    static Polynomial x(int n, int i, int j);
    static Polynomial y(int n, int i, int j);
    static Polynomial from_terms(int rank, const std::vector<Term>& terms);

    int rank() const noexcept { return rank_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    /// Terms in decreasing order.
    const TermMap& terms() const noexcept { return terms_; }
    mpz_class coefficient(const Monomial& m) const;

    Polynomial& operator+=(const Polynomial& q);
    Polynomial& operator-=(const Polynomial& q);
    Polynomial& operator*=(const mpz_class& c);

    friend Polynomial operator+(Polynomial p, const Polynomial& q) { return p += q; }
    friend Polynomial operator-(Polynomial p, const Polynomial& q) { return p -= q; }
    friend Polynomial operator-(Polynomial p) { return p *= -1; }
    friend Polynomial operator*(Polynomial p, const mpz_class& c) { return p *= c; }
    friend Polynomial operator*(const mpz_class& c, Polynomial p) { return p *= c; }
    friend Polynomial operator*(const Polynomial& p, const Polynomial& q);
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    Polynomial derivative(int id) const;

    /// Value at a point given by `values[id]`.
    mpz_class evaluate(const std::vector<mpz_class>& values) const;

    /// Terms in decreasing order, variables as x[i][j] / y[i][j] (or via
    /// `namer`), e.g. "x[1][1]*y[2][1] - x[2][1]*y[1][1]".
    std::string to_string(const VariableNamer& namer = {}) const;

private:
    void check_rank(const Polynomial& q) const;
    void add_term(const Monomial& m, const mpz_class& c);

    int rank_ = 0;
    TermMap terms_;
};

std::string to_string(const Monomial& m, int rank, const VariableNamer& namer = {});

/// Leading term. Throws std::domain_error on the zero polynomial.
Term initial_term(const Polynomial& p);
inline Monomial initial_monomial(const Polynomial& p) { return initial_term(p).monomial; }

/// Torus weight of a monomial for GL(n): lambda_i is the degree in row i of
/// [X | Y], mu_j the degree in x-column j, nu_j the degree in y-column j.
struct Weight {
    std::vector<int> lambda;
    std::vector<int> mu;
    std::vector<int> nu;
    friend bool operator==(const Weight&, const Weight&) = default;
};

std::string to_string(const Weight& w);
Weight monomial_weight(int n, const Monomial& m);

/// Common weight of all terms. Throws NotHomogeneous naming two terms that
/// disagree, std::domain_error for the zero polynomial.
Weight weight(const Polynomial& p);

/// Simple raising operator number k (1 <= k <= n-1) on tensor factor
/// 1 (rows), 2 (x columns) or 3 (y columns):
///   1: sum_j x_kj d/dx_{k+1,j} + y_kj d/dy_{k+1,j}
///   2: sum_i x_ik d/dx_{i,k+1}
///   3: sum_i y_ik d/dy_{i,k+1}
/// Throws std::out_of_range for a bad factor or k.
Polynomial raising_derivation(int factor, int k, const Polynomial& p);

/// True iff all 3(n-1) raising operators annihilate p.
bool is_highest_weight(const Polynomial& p);

/// A single-column tableau: `empty` blank boxes on top of the strictly
/// increasing entries. It names the minor of [X | Y] on rows
/// 1..empty+k and columns 1..empty (of X) and j_1..j_k (of Y).
struct ColumnTableau {
    int empty = 0;
    std::vector<int> entries;

    int height() const noexcept { return empty + static_cast<int>(entries.size()); }
    friend auto operator<=>(const ColumnTableau&, const ColumnTableau&) = default;
    friend bool operator==(const ColumnTableau&, const ColumnTableau&) = default;
};

/// "[ , ,1,2]"
std::string to_string(const ColumnTableau& c);

/// Throws std::invalid_argument unless 1 <= height <= n, entries strictly
/// increase and lie in 1..n.
void validate_column(int n, const ColumnTableau& c);

using PolyMatrix = std::vector<std::vector<Polynomial>>;

/// Determinant by expansion along the first row. All entries must share a
/// rank; a 0 x 0 matrix has determinant 1 of rank `rank`.
Polynomial determinant(const PolyMatrix& a, int rank);

/// The submatrix of [X | Y] named by the column tableau.
PolyMatrix minor_matrix(int n, const ColumnTableau& c);
Polynomial minor(int n, const ColumnTableau& c);

/// Product of the minors of several columns, e.g. [ , ,2][1].
Polynomial minor_product(int n, const std::vector<ColumnTableau>& columns);

} // namespace hive
