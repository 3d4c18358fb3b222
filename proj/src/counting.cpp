#include "hive/counting.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace hive {

namespace {

bool fits(int n, const Partition& p) { return static_cast<int>(p.length()) <= n; }

struct BoundInequality {
    int coefficient = 0; // +1 or -1 on the cell being assigned
    std::vector<std::pair<int, int>> others; // (coordinate, coefficient)
};

// Interior search plan for one rank, reusable across boundaries.
struct InteriorPlan {
    std::vector<int> cells;                          // coordinates in assignment order
    std::vector<std::vector<BoundInequality>> bounds; // per cell
    std::vector<std::vector<std::pair<int, int>>> boundary_only;
};

InteriorPlan make_plan(int n) {
    InteriorPlan plan;
    std::vector<int> order(triangle_size(n), -1);
    for (int i = 3; i <= n; ++i)
        for (int j = 2; j < i; ++j) {
            order[triangle_index(i, j)] = static_cast<int>(plan.cells.size());
            plan.cells.push_back(triangle_index(i, j));
        }
    plan.bounds.resize(plan.cells.size());
    for (const auto& ineq : rhombus_inequalities(n)) {
        int last = -1;
        for (auto [coord, coef] : ineq.terms) last = std::max(last, order[coord]);
        if (last < 0) {
            plan.boundary_only.push_back(ineq.terms);
            continue;
        }
        BoundInequality b;
        for (auto [coord, coef] : ineq.terms) {
            if (order[coord] == last)
                b.coefficient = coef;
            else
                b.others.emplace_back(coord, coef);
        }
        plan.bounds[last].push_back(std::move(b));
    }
    return plan;
}

const InteriorPlan& plan_for(int n) {
    static std::mutex mutex;
    static std::map<int, InteriorPlan> plans;
    std::lock_guard lock(mutex);
    auto it = plans.find(n);
    if (it == plans.end()) it = plans.emplace(n, make_plan(n)).first;
    return it->second;
}

} // namespace

void visit_hives(int n, const Partition& lambda, const Partition& mu, const Partition& nu,
                 const std::function<void(const TriangularArray&)>& visit) {
    if (n < 1) throw std::invalid_argument("rank must be >= 1");
    if (!fits(n, lambda) || !fits(n, mu) || !fits(n, nu)) return;
    if (lambda.size() != mu.size() + nu.size()) return;

    TriangularArray t(n);
    Entry left = 0, right = 0;
    for (int i = 1; i <= n + 1; ++i) {
        t.at(i, 1) = left;
        t.at(i, i) = right;
        left += mu[i - 1];
        right += lambda[i - 1];
    }
    Entry bottom = mu.size();
    for (int j = 1; j <= n + 1; ++j) {
        t.at(n + 1, j) = bottom;
        bottom += nu[j - 1];
    }

    const InteriorPlan& plan = plan_for(n);
    std::vector<Entry> h(t.flat().begin(), t.flat().end());
    auto eval = [&](const std::vector<std::pair<int, int>>& terms) {
        Entry s = 0;
        for (auto [coord, coef] : terms) s += coef * h[coord];
        return s;
    };
    for (const auto& terms : plan.boundary_only)
        if (eval(terms) < 0) return;

    auto rec = [&](auto& self, std::size_t k) -> void {
        if (k == plan.cells.size()) {
            visit(TriangularArray::from_flat(h));
            return;
        }
        Entry lo = std::numeric_limits<Entry>::min();
        Entry hi = std::numeric_limits<Entry>::max();
        for (const auto& b : plan.bounds[k]) {
            Entry rest = eval(b.others);
            if (b.coefficient > 0)
                lo = std::max(lo, -rest);
            else
                hi = std::min(hi, rest);
        }
        if (lo == std::numeric_limits<Entry>::min() || hi == std::numeric_limits<Entry>::max())
            throw std::logic_error("unbounded interior hive entry");
        for (Entry v = lo; v <= hi; ++v) {
            h[plan.cells[k]] = v;
            self(self, k + 1);
        }
    };
    rec(rec, 0);
}

std::vector<Hive> enumerate_hives(int n, const Partition& lambda, const Partition& mu,
                                  const Partition& nu) {
    std::vector<Hive> out;
    visit_hives(n, lambda, mu, nu, [&](const TriangularArray& t) { out.push_back(Hive::make(t)); });
    return out;
}

std::int64_t lr_coefficient(int n, const Partition& lambda, const Partition& mu,
                            const Partition& nu) {
    std::int64_t count = 0;
    visit_hives(n, lambda, mu, nu, [&](const TriangularArray&) { ++count; });
    return count;
}

std::vector<Triple> candidate_triples(int n, int d) {
    std::vector<Triple> out;
    const auto lambdas = partitions_of(d, n);
    for (int k = 0; k <= d; ++k) {
        const auto mus = partitions_of(k, n);
        const auto nus = partitions_of(d - k, n);
        for (const auto& mu : mus)
            for (const auto& nu : nus) {
                const Partition lo = union_of(mu, nu);
                const Partition hi = sum(mu, nu);
                for (const auto& lambda : lambdas) {
                    if (!lambda.contains(mu) || !lambda.contains(nu)) continue;
                    if (!dominated_by(lo, lambda) || !dominated_by(lambda, hi)) continue;
                    out.push_back({lambda, mu, nu});
                }
            }
    }
    return out;
}

void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& work) {
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(count, 1)));
    if (threads <= 1) {
        for (std::size_t k = 0; k < count; ++k) work(k);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w)
        pool.emplace_back([&] {
            try {
                for (std::size_t k = next++; k < count; k = next++) work(k);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next = count;
            }
        });
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
}

BigInt md_sum(int n, int d, unsigned threads) {
    if (d < 0) throw std::invalid_argument("degree must be >= 0");
    const auto triples = candidate_triples(n, d);
    std::vector<std::int64_t> counts(triples.size(), 0);
    parallel_for(triples.size(), threads, [&](std::size_t k) {
        counts[k] = lr_coefficient(n, triples[k].lambda, triples[k].mu, triples[k].nu);
    });
    BigInt total = 0;
    for (auto c : counts) total += static_cast<long>(c);
    return total;
}

std::string SeriesPrefix::coefficient_list() const {
    std::ostringstream os;
    for (std::size_t d = 0; d < coefficients.size(); ++d) os << (d ? ", " : "") << coefficients[d];
    return os.str();
}

std::string SeriesPrefix::polynomial() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t d = 0; d < coefficients.size(); ++d) {
        const BigInt& c = coefficients[d];
        if (c == 0) continue;
        BigInt mag = abs(c);
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        if (mag != 1 || d == 0) os << mag;
        if (d > 0) os << (mag != 1 ? " " : "") << "t";
        if (d > 1) os << "^" << d;
    }
    if (first) os << "0";
    os << " + O(t^" << coefficients.size() << ")";
    return os.str();
}

SeriesPrefix hp_series_enumerated(int n, int max_degree, unsigned threads) {
    SeriesPrefix s;
    for (int d = 0; d <= max_degree; ++d) s.coefficients.push_back(md_sum(n, d, threads));
    return s;
}

SeriesPrefix hp_series_closed_form(const std::vector<BigInt>& numerator,
                                   const std::vector<int>& denominator_exponents, int max_degree) {
    if (max_degree < 0) throw std::invalid_argument("max degree must be >= 0");
    SeriesPrefix s;
    s.coefficients.assign(max_degree + 1, 0);
    for (std::size_t k = 0; k < numerator.size() && static_cast<int>(k) <= max_degree; ++k)
        s.coefficients[k] = numerator[k];
    for (int e : denominator_exponents) {
        if (e <= 0) throw std::invalid_argument("denominator exponents must be positive");
        // Multiply by 1/(1 - t^e) = 1 + t^e + t^2e + ...
        for (int k = e; k <= max_degree; ++k) s.coefficients[k] += s.coefficients[k - e];
    }
    return s;
}

ClosedForm closed_form_data(int n) {
    auto big = [](std::initializer_list<long> xs) {
        std::vector<BigInt> v;
        for (long x : xs) v.emplace_back(x);
        return v;
    };
    auto repeat = [](std::initializer_list<std::pair<int, int>> spec) {
        std::vector<int> v;
        for (auto [e, times] : spec) v.insert(v.end(), times, e);
        return v;
    };
    switch (n) {
    case 2: return {big({1}), repeat({{1, 2}, {2, 3}})};
    case 3: return {big({1, 0, 0, 0, 0, 0, -1}), repeat({{1, 2}, {2, 3}, {3, 4}, {4, 1}})};
    case 4:
        return {big({1,   -2, -2, 10, -2,  -24, 22, 32,  -54, -18, 80, -14, -72, 34, 44, -18, -25,
                     -18, 44, 34, -72, -14, 80, -18, -54, 32,  22,  -24, -2, 10, -2, -2,  1}),
                repeat({{1, 4}, {2, 6}, {12, 4}})};
    default: throw std::out_of_range("closed-form series known only for n = 2, 3, 4");
    }
}

// ---- Schur-function oracle ----------------------------------------------

namespace {

using Exponents = std::vector<int>;
using SymPoly = std::map<Exponents, std::int64_t, std::greater<>>;

SymPoly schur_polynomial(int n, const Partition& shape) {
    SymPoly out;
    if (static_cast<int>(shape.length()) > n) return out;
    const int rows = static_cast<int>(shape.length());
    std::vector<std::vector<int>> grid(rows);
    for (int r = 0; r < rows; ++r) grid[r].assign(shape[r], 0);
    Exponents weight(n, 0);
    // Semistandard fillings, row-major.
    auto rec = [&](auto& self, int r, int c) -> void {
        if (r == rows) {
            ++out[weight];
            return;
        }
        if (c == shape[r]) {
            self(self, r + 1, 0);
            return;
        }
        int lo = 1;
        if (c > 0) lo = std::max(lo, grid[r][c - 1]);
        if (r > 0) lo = std::max(lo, grid[r - 1][c] + 1);
        for (int v = lo; v <= n; ++v) {
            grid[r][c] = v;
            ++weight[v - 1];
            self(self, r, c + 1);
            --weight[v - 1];
        }
    };
    rec(rec, 0, 0);
    return out;
}

SymPoly multiply(const SymPoly& a, const SymPoly& b) {
    SymPoly out;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            Exponents e(ea.size());
            for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
            out[e] += ca * cb;
        }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

} // namespace

std::map<Partition, std::int64_t> schur_product_expansion(int n, const Partition& mu,
                                                          const Partition& nu) {
    std::map<Partition, std::int64_t> out;
    SymPoly rest = multiply(schur_polynomial(n, mu), schur_polynomial(n, nu));
    while (!rest.empty()) {
        // The lex-leading monomial of a symmetric polynomial is dominant.
        const auto [lead, coeff] = *rest.begin();
        Partition lambda(lead);
        out[lambda] = coeff;
        for (const auto& [e, c] : schur_polynomial(n, lambda)) {
            auto& slot = rest[e];
            slot -= coeff * c;
            if (slot == 0) rest.erase(e);
        }
    }
    return out;
}

std::int64_t lr_via_schur(int n, const Partition& lambda, const Partition& mu,
                          const Partition& nu) {
    if (!fits(n, lambda) || !fits(n, mu) || !fits(n, nu)) return 0;
    if (lambda.size() != mu.size() + nu.size()) return 0;
    auto expansion = schur_product_expansion(n, mu, nu);
    auto it = expansion.find(lambda);
    return it == expansion.end() ? 0 : it->second;
}

} // namespace hive
