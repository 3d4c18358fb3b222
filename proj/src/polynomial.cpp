#include "hive/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "hive/hive.hpp"

namespace hive {

int variable_id(int n, VarKind kind, int row, int col) {
    if (row < 1 || row > n || col < 1 || col > n)
        throw std::out_of_range("variable index (" + std::to_string(row) + "," +
                                std::to_string(col) + ") outside 1.." + std::to_string(n));
    return (row - 1) * 2 * n + (kind == VarKind::Y ? n : 0) + (col - 1);
}

Variable variable_of(int n, int id) {
    if (n < 1 || id < 0 || id >= 2 * n * n) throw std::out_of_range("variable id out of range");
    int row = id / (2 * n) + 1;
    int rest = id % (2 * n);
    return rest < n ? Variable{VarKind::X, row, rest + 1} : Variable{VarKind::Y, row, rest - n + 1};
}

std::string variable_name(int n, int id) {
    auto v = variable_of(n, id);
    return (v.kind == VarKind::X ? "x" : "y") + std::to_string(v.row) + std::to_string(v.col);
}

// ---- Monomial ---------------------------------------------------------------

Monomial Monomial::variable(int id, int exponent) {
    return from_pairs({{id, exponent}});
}

Monomial Monomial::from_pairs(std::vector<std::pair<int, int>> pairs) {
    std::sort(pairs.begin(), pairs.end());
    Monomial m;
    for (auto [id, e] : pairs) {
        if (e < 0) throw std::invalid_argument("negative exponent");
        if (e == 0) continue;
        if (!m.factors_.empty() && m.factors_.back().first == id)
            m.factors_.back().second += e;
        else
            m.factors_.emplace_back(id, e);
    }
    return m;
}

int Monomial::exponent(int id) const noexcept {
    auto it = std::lower_bound(factors_.begin(), factors_.end(), std::make_pair(id, 0));
    return (it != factors_.end() && it->first == id) ? it->second : 0;
}

int Monomial::degree() const noexcept {
    int d = 0;
    for (auto [id, e] : factors_) d += e;
    return d;
}

Monomial Monomial::lowered(int id) const {
    Monomial m = *this;
    auto it = std::lower_bound(m.factors_.begin(), m.factors_.end(), std::make_pair(id, 0));
    if (it == m.factors_.end() || it->first != id) throw std::logic_error("exponent already zero");
    if (--it->second == 0) m.factors_.erase(it);
    return m;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial m;
    auto& out = m.factors_;
    out.reserve(a.factors_.size() + b.factors_.size());
    auto p = a.factors_.begin(), q = b.factors_.begin();
    while (p != a.factors_.end() || q != b.factors_.end()) {
        if (q == b.factors_.end() || (p != a.factors_.end() && p->first < q->first))
            out.push_back(*p++);
        else if (p == a.factors_.end() || q->first < p->first)
            out.push_back(*q++);
        else {
            out.emplace_back(p->first, p->second + q->second);
            ++p;
            ++q;
        }
    }
    return m;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    auto p = a.factors_.begin(), q = b.factors_.begin();
    while (p != a.factors_.end() && q != b.factors_.end()) {
        if (p->first != q->first)
            return p->first < q->first ? std::strong_ordering::greater : std::strong_ordering::less;
        if (p->second != q->second) return p->second <=> q->second;
        ++p;
        ++q;
    }
    if (p != a.factors_.end()) return std::strong_ordering::greater;
    if (q != b.factors_.end()) return std::strong_ordering::less;
    return std::strong_ordering::equal;
}

std::string to_string(const Monomial& m, int rank, const VariableNamer& namer) {
    if (m.is_one()) return "1";
    std::ostringstream os;
    bool first = true;
    for (auto [id, e] : m.factors()) {
        if (!first) os << '*';
        first = false;
        if (namer)
            os << namer(id);
        else if (rank > 0) {
            auto v = variable_of(rank, id);
            os << (v.kind == VarKind::X ? 'x' : 'y') << '[' << v.row << "][" << v.col << ']';
        } else
            os << "v" << id;
        if (e != 1) os << '^' << e;
    }
    return os.str();
}

// ---- Polynomial -------------------------------------------------------------

Polynomial Polynomial::constant(int rank, const mpz_class& c) {
    Polynomial p(rank);
    p.add_term(Monomial{}, c);
    return p;
}

Polynomial Polynomial::variable(int rank, int id) {
    if (rank > 0) variable_of(rank, id);
    Polynomial p(rank);
    p.add_term(Monomial::variable(id), 1);
    return p;
}

Polynomial Polynomial::x(int n, int i, int j) { return variable(n, variable_id(n, VarKind::X, i, j)); }
Polynomial Polynomial::y(int n, int i, int j) { return variable(n, variable_id(n, VarKind::Y, i, j)); }

Polynomial Polynomial::from_terms(int rank, const std::vector<Term>& terms) {
    Polynomial p(rank);
    for (const auto& t : terms) {
        if (rank > 0)
            for (auto [id, e] : t.monomial.factors()) variable_of(rank, id);
        p.add_term(t.monomial, t.coefficient);
    }
    return p;
}

mpz_class Polynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? mpz_class(0) : it->second;
}

void Polynomial::check_rank(const Polynomial& q) const {
    if (rank_ != q.rank_)
        throw RankMismatch("polynomials of rank " + std::to_string(rank_) + " and " +
                           std::to_string(q.rank_));
}

void Polynomial::add_term(const Monomial& m, const mpz_class& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& q) {
    check_rank(q);
    for (const auto& [m, c] : q.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& q) {
    check_rank(q);
    for (const auto& [m, c] : q.terms_) add_term(m, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(const mpz_class& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, coeff] : terms_) coeff *= c;
    return *this;
}

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
    p.check_rank(q);
    Polynomial r(p.rank_);
    mpz_class prod;
    for (const auto& [mp, cp] : p.terms_)
        for (const auto& [mq, cq] : q.terms_) {
            prod = cp * cq;
            r.add_term(mp * mq, prod);
        }
    return r;
}

Polynomial Polynomial::derivative(int id) const {
    Polynomial r(rank_);
    for (const auto& [m, c] : terms_) {
        int e = m.exponent(id);
        if (e == 0) continue;
        r.add_term(m.lowered(id), c * e);
    }
    return r;
}

mpz_class Polynomial::evaluate(const std::vector<mpz_class>& values) const {
    mpz_class total = 0, term, power;
    for (const auto& [m, c] : terms_) {
        term = c;
        for (auto [id, e] : m.factors()) {
            if (id < 0 || static_cast<std::size_t>(id) >= values.size())
                throw std::out_of_range("no value for variable " + std::to_string(id));
            mpz_pow_ui(power.get_mpz_t(), values[id].get_mpz_t(), static_cast<unsigned long>(e));
            term *= power;
        }
        total += term;
    }
    return total;
}

std::string Polynomial::to_string(const VariableNamer& namer) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        mpz_class mag = abs(c);
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        if (m.is_one())
            os << mag;
        else {
            if (mag != 1) os << mag << '*';
            os << hive::to_string(m, rank_, namer);
        }
    }
    return os.str();
}

Term initial_term(const Polynomial& p) {
    if (p.is_zero()) throw std::domain_error("the zero polynomial has no initial term");
    const auto& [m, c] = *p.terms().begin();
    return {m, c};
}

// ---- weights and derivations ------------------------------------------------

std::string to_string(const Weight& w) {
    auto seq = [](const std::vector<int>& v) {
        std::ostringstream os;
        os << '(';
        for (std::size_t k = 0; k < v.size(); ++k) os << (k ? "," : "") << v[k];
        os << ')';
        return os.str();
    };
    return "lambda=" + seq(w.lambda) + " mu=" + seq(w.mu) + " nu=" + seq(w.nu);
}

Weight monomial_weight(int n, const Monomial& m) {
    Weight w{std::vector<int>(n, 0), std::vector<int>(n, 0), std::vector<int>(n, 0)};
    for (auto [id, e] : m.factors()) {
        auto v = variable_of(n, id);
        w.lambda[v.row - 1] += e;
        (v.kind == VarKind::X ? w.mu : w.nu)[v.col - 1] += e;
    }
    return w;
}

Weight weight(const Polynomial& p) {
    if (p.rank() < 1) throw std::invalid_argument("weight needs a polynomial in x and y");
    if (p.is_zero()) throw std::domain_error("the zero polynomial has no weight");
    const auto& first = p.terms().begin()->first;
    const Weight w = monomial_weight(p.rank(), first);
    for (const auto& [m, c] : p.terms())
        if (monomial_weight(p.rank(), m) != w)
            throw NotHomogeneous("terms " + to_string(first, p.rank()) + " and " +
                                 to_string(m, p.rank()) + " have different weights");
    return w;
}

namespace {

// sum over pairs of target * d/d(source)
Polynomial apply_derivation(const Polynomial& p, const std::vector<std::pair<int, int>>& pairs) {
    Polynomial r(p.rank());
    for (auto [source, target] : pairs) {
        Polynomial d = p.derivative(source);
        if (!d.is_zero()) r += d * Polynomial::variable(p.rank(), target);
    }
    return r;
}

} // namespace

Polynomial raising_derivation(int factor, int k, const Polynomial& p) {
    const int n = p.rank();
    if (n < 1) throw std::invalid_argument("raising operators need a polynomial in x and y");
    if (k < 1 || k > n - 1)
        throw std::out_of_range("raising operator index " + std::to_string(k) + " outside 1.." +
                                std::to_string(n - 1));
    std::vector<std::pair<int, int>> pairs;
    switch (factor) {
    case 1:
        for (int j = 1; j <= n; ++j)
            for (VarKind kind : {VarKind::X, VarKind::Y})
                pairs.emplace_back(variable_id(n, kind, k + 1, j), variable_id(n, kind, k, j));
        break;
    case 2:
        for (int i = 1; i <= n; ++i)
            pairs.emplace_back(variable_id(n, VarKind::X, i, k + 1), variable_id(n, VarKind::X, i, k));
        break;
    case 3:
        for (int i = 1; i <= n; ++i)
            pairs.emplace_back(variable_id(n, VarKind::Y, i, k + 1), variable_id(n, VarKind::Y, i, k));
        break;
    default: throw std::out_of_range("tensor factor must be 1, 2 or 3");
    }
    return apply_derivation(p, pairs);
}

bool is_highest_weight(const Polynomial& p) {
    for (int factor = 1; factor <= 3; ++factor)
        for (int k = 1; k < p.rank(); ++k)
            if (!raising_derivation(factor, k, p).is_zero()) return false;
    return true;
}

// ---- minors -----------------------------------------------------------------

std::string to_string(const ColumnTableau& c) {
    std::ostringstream os;
    os << '[';
    bool first = true;
    for (int e = 0; e < c.empty; ++e, first = false) os << (first ? " " : ", ");
    for (int v : c.entries) {
        os << (first ? "" : ",") << v;
        first = false;
    }
    os << ']';
    return os.str();
}

void validate_column(int n, const ColumnTableau& c) {
    if (c.empty < 0) throw std::invalid_argument("negative number of empty boxes");
    if (c.height() < 1 || c.height() > n)
        throw std::invalid_argument("column " + to_string(c) + " has height outside 1.." +
                                    std::to_string(n));
    for (std::size_t k = 0; k < c.entries.size(); ++k) {
        if (c.entries[k] < 1 || c.entries[k] > n)
            throw std::invalid_argument("entry outside 1.." + std::to_string(n) + " in " + to_string(c));
        if (k > 0 && c.entries[k] <= c.entries[k - 1])
            throw std::invalid_argument("entries must increase strictly in " + to_string(c));
    }
}

Polynomial determinant(const PolyMatrix& a, int rank) {
    const std::size_t m = a.size();
    for (const auto& row : a)
        if (row.size() != m) throw std::invalid_argument("determinant of a non-square matrix");
    if (m == 0) return Polynomial::constant(rank, 1);
    if (m == 1) return a[0][0];
    Polynomial total(rank);
    for (std::size_t c = 0; c < m; ++c) {
        if (a[0][c].is_zero()) continue;
        PolyMatrix sub(m - 1);
        for (std::size_t r = 1; r < m; ++r)
            for (std::size_t k = 0; k < m; ++k)
                if (k != c) sub[r - 1].push_back(a[r][k]);
        Polynomial term = a[0][c] * determinant(sub, rank);
        if (c % 2 == 0)
            total += term;
        else
            total -= term;
    }
    return total;
}

PolyMatrix minor_matrix(int n, const ColumnTableau& c) {
    validate_column(n, c);
    PolyMatrix a(c.height());
    for (int i = 1; i <= c.height(); ++i) {
        for (int j = 1; j <= c.empty; ++j) a[i - 1].push_back(Polynomial::x(n, i, j));
        for (int j : c.entries) a[i - 1].push_back(Polynomial::y(n, i, j));
    }
    return a;
}

Polynomial minor(int n, const ColumnTableau& c) { return determinant(minor_matrix(n, c), n); }

Polynomial minor_product(int n, const std::vector<ColumnTableau>& columns) {
    Polynomial p = Polynomial::constant(n, 1);
    for (const auto& c : columns) p = p * minor(n, c);
    return p;
}

} // namespace hive
