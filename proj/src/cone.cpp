#include "hive/cone.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>

#include "hive/counting.hpp"

namespace hive {

bool InequalitySystem::contains(std::span<const Entry> point) const {
    auto dot = [&](const std::vector<int>& row) {
        __int128 s = 0;
        for (std::size_t k = 0; k < row.size(); ++k) s += static_cast<__int128>(row[k]) * point[k];
        return s;
    };
    if (point.size() != static_cast<std::size_t>(triangle_size(n))) return false;
    for (const auto& r : rows)
        if (dot(r) < 0) return false;
    for (const auto& e : equations)
        if (dot(e) != 0) return false;
    return true;
}

InequalitySystem cone_inequalities(int n) {
    if (n < 1) throw std::invalid_argument("rank must be >= 1");
    InequalitySystem sys;
    sys.n = n;
    const int dim = triangle_size(n);
    auto dense = [&](const SparseInequality& s) {
        std::vector<int> row(dim, 0);
        for (auto [coord, coef] : s.terms) row[coord] += coef;
        return row;
    };
    for (const auto& s : boundary_increment_inequalities(n)) sys.rows.push_back(dense(s));
    for (const auto& s : rhombus_inequalities(n)) sys.rows.push_back(dense(s));
    std::vector<int> corner(dim, 0);
    corner[0] = 1;
    sys.equations.push_back(corner);
    return sys;
}

std::vector<Hive> hives_up_to_degree(int n, int max_degree, unsigned threads) {
    std::vector<Hive> out;
    for (int d = 0; d <= max_degree; ++d) {
        const auto triples = candidate_triples(n, d);
        std::vector<std::vector<Hive>> found(triples.size());
        parallel_for(triples.size(), threads, [&](std::size_t k) {
            found[k] = enumerate_hives(n, triples[k].lambda, triples[k].mu, triples[k].nu);
        });
        for (auto& f : found) out.insert(out.end(), f.begin(), f.end());
    }
    std::sort(out.begin(), out.end(), degree_then_coordinates);
    return out;
}

std::vector<Hive> hilbert_basis(int n, int max_degree, unsigned threads) {
    if (max_degree < 1) throw std::invalid_argument("degree bound must be >= 1");
    const auto all = hives_up_to_degree(n, max_degree, threads);
    std::vector<Hive> basis;
    std::size_t start = 0;
    while (start < all.size()) {
        const Entry d = all[start].degree();
        std::size_t end = start;
        while (end < all.size() && all[end].degree() == d) ++end;
        if (d > 0) {
            std::vector<char> irreducible(end - start, 0);
            parallel_for(end - start, threads, [&](std::size_t k) {
                const Hive& h = all[start + k];
                irreducible[k] = std::none_of(basis.begin(), basis.end(), [&](const Hive& b) {
                    return try_subtract(h, b).has_value();
                });
            });
            for (std::size_t k = 0; k < irreducible.size(); ++k)
                if (irreducible[k]) basis.push_back(all[start + k]);
        }
        start = end;
    }
    return basis;
}

namespace {

ConePresentation build(int n, const std::vector<std::vector<Entry>>& flat,
                       const std::vector<int>& degrees,
                       std::vector<BinomialRelation> relations) {
    ConePresentation p;
    p.n = n;
    for (const auto& f : flat) p.basis.push_back(Hive::from_flat(n, f));
    p.degrees = degrees;
    p.relations = std::move(relations);
    for (std::size_t k = 0; k < p.basis.size(); ++k)
        if (p.basis[k].degree() != p.degrees.at(k))
            throw std::logic_error("basis element " + std::to_string(k + 1) + " has degree " +
                                   std::to_string(p.basis[k].degree()));
    return p;
}

ConePresentation gl2() {
    return build(2,
                 {{0, 0, 1, 0, 1, 2},
                  {0, 1, 1, 1, 2, 2},
                  {0, 1, 1, 1, 1, 1},
                  {0, 1, 1, 2, 2, 2},
                  {0, 0, 1, 0, 1, 1}},
                 {2, 2, 1, 2, 1}, {});
}

ConePresentation gl3() {
    return build(3,
                 {{0, 0, 1, 0, 1, 1, 0, 1, 1, 1},
                  {0, 0, 1, 0, 1, 2, 0, 1, 2, 3},
                  {0, 0, 1, 0, 1, 2, 0, 1, 2, 2},
                  {0, 1, 1, 1, 1, 1, 1, 1, 1, 1},
                  {0, 1, 1, 1, 2, 2, 1, 2, 2, 2},
                  {0, 1, 1, 1, 2, 2, 1, 2, 3, 3},
                  {0, 1, 1, 2, 2, 2, 2, 2, 2, 2},
                  {0, 1, 1, 2, 2, 2, 2, 3, 3, 3},
                  {0, 1, 1, 2, 2, 2, 3, 3, 3, 3},
                  {0, 1, 2, 2, 3, 3, 2, 3, 4, 4}},
                 {1, 3, 2, 1, 2, 3, 2, 3, 3, 4}, {{"r", {1, 6, 7}, {5, 10}}});
}

ConePresentation gl4() {
    return build(4,
                 {{0, 0, 1, 0, 1, 1, 0, 1, 1, 1, 0, 1, 1, 1, 1},
                  {0, 0, 1, 0, 1, 2, 0, 1, 2, 2, 0, 1, 2, 2, 2},
                  {0, 0, 1, 0, 1, 2, 0, 1, 2, 3, 0, 1, 2, 3, 3},
                  {0, 0, 1, 0, 1, 2, 0, 1, 2, 3, 0, 1, 2, 3, 4},
                  {0, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1},
                  {0, 1, 1, 1, 2, 2, 1, 2, 2, 2, 1, 2, 2, 2, 2},
                  {0, 1, 1, 1, 2, 2, 1, 2, 3, 3, 1, 2, 3, 3, 3},
                  {0, 1, 1, 1, 2, 2, 1, 2, 3, 3, 1, 2, 3, 4, 4},
                  {0, 1, 1, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2},
                  {0, 1, 1, 2, 2, 2, 2, 3, 3, 3, 2, 3, 3, 3, 3},
                  {0, 1, 1, 2, 2, 2, 2, 3, 3, 3, 2, 3, 4, 4, 4},
                  {0, 1, 1, 2, 2, 2, 3, 3, 3, 3, 3, 3, 3, 3, 3},
                  {0, 1, 1, 2, 2, 2, 3, 3, 3, 3, 3, 4, 4, 4, 4},
                  {0, 1, 1, 2, 2, 2, 3, 3, 3, 3, 4, 4, 4, 4, 4},
                  {0, 1, 2, 2, 3, 3, 2, 3, 4, 4, 2, 3, 4, 4, 4},
                  {0, 1, 2, 2, 3, 3, 2, 3, 4, 4, 2, 3, 4, 5, 5},
                  {0, 1, 2, 2, 3, 4, 2, 4, 5, 5, 2, 4, 5, 6, 6},
                  {0, 1, 2, 2, 3, 3, 3, 4, 4, 4, 3, 4, 5, 5, 5},
                  {0, 1, 2, 2, 3, 4, 3, 4, 5, 5, 3, 4, 5, 6, 6},
                  {0, 2, 2, 3, 4, 4, 4, 5, 5, 5, 4, 5, 6, 6, 6}},
                 {1, 2, 3, 4, 1, 2, 3, 4, 2, 3, 4, 3, 4, 4, 4, 5, 6, 5, 6, 6},
                 {{"r1", {1, 7, 9}, {6, 15}},
                  {"r2", {1, 8, 9}, {6, 16}},
                  {"r3", {1, 11, 12}, {10, 18}},
                  {"r4", {6, 11, 12}, {10, 20}},
                  {"r5", {2, 8, 10}, {7, 17}},
                  {"r6", {2, 8, 12}, {7, 19}},
                  {"r7", {6, 18}, {1, 20}},
                  {"r8", {7, 16}, {8, 15}},
                  {"r9", {10, 19}, {12, 17}},
                  {"r10", {15, 17}, {2, 10, 16}},
                  {"r11", {15, 19}, {2, 12, 16}},
                  {"r12", {15, 20}, {7, 9, 18}},
                  {"r13", {16, 20}, {8, 9, 18}},
                  {"r14", {17, 20}, {6, 11, 19}},
                  {"r15", {17, 18}, {1, 11, 19}}});
}

void check_rank(const Hive& h, const ConePresentation& pres) {
    if (h.rank() != pres.n)
        throw RankMismatch("hive of rank " + std::to_string(h.rank()) +
                           " against a presentation for GL(" + std::to_string(pres.n) + ")");
}

// Calls found(indices) for sorted index lists summing to h; stops when it
// returns true.
template <class Found>
bool search(const Hive& h, const ConePresentation& pres, std::size_t first,
            std::vector<int>& chosen, Found&& found) {
    if (h.is_zero()) return found(chosen);
    for (std::size_t k = first; k < pres.basis.size(); ++k) {
        if (pres.basis[k].degree() > h.degree()) continue;
        auto rest = try_subtract(h, pres.basis[k]);
        if (!rest) continue;
        chosen.push_back(static_cast<int>(k) + 1);
        bool stop = search(*rest, pres, k, chosen, found);
        chosen.pop_back();
        if (stop) return true;
    }
    return false;
}

} // namespace

const ConePresentation& cone_presentation(int n) {
    static const ConePresentation p2 = gl2();
    static const ConePresentation p3 = gl3();
    static const ConePresentation p4 = gl4();
    switch (n) {
    case 2: return p2;
    case 3: return p3;
    case 4: return p4;
    default: throw std::out_of_range("presentations are available for n = 2, 3, 4 only");
    }
}

std::vector<int> decompose(const Hive& h, const ConePresentation& pres) {
    check_rank(h, pres);
    std::vector<int> chosen, result;
    bool ok = search(h, pres, 0, chosen, [&](const std::vector<int>& c) {
        result = c;
        return true;
    });
    if (!ok) {
        std::ostringstream os;
        os << "hive does not decompose over the GL(" << pres.n << ") basis:\n" << render(h.array());
        throw NoDecomposition(os.str());
    }
    return result;
}

std::vector<std::vector<int>> all_decompositions(const Hive& h, const ConePresentation& pres) {
    check_rank(h, pres);
    std::vector<std::vector<int>> out;
    std::vector<int> chosen;
    search(h, pres, 0, chosen, [&](const std::vector<int>& c) {
        out.push_back(c);
        return false;
    });
    return out;
}

Hive sum_of(const std::vector<int>& indices, const ConePresentation& pres) {
    Hive total = Hive::zero(pres.n);
    for (int i : indices) total = total + pres.at(i);
    return total;
}

std::vector<RelationCheck> verify_relations(const ConePresentation& pres) {
    std::vector<RelationCheck> out;
    for (const auto& r : pres.relations) {
        RelationCheck c;
        c.name = r.name;
        const Hive l = sum_of(r.left, pres), rhs = sum_of(r.right, pres);
        c.holds = (l == rhs);
        for (std::size_t k = 0; k < l.flat().size() && !c.holds; ++k)
            if (l.flat()[k] != rhs.flat()[k]) {
                c.coordinate = static_cast<int>(k);
                c.left_value = l.flat()[k];
                c.right_value = rhs.flat()[k];
                break;
            }
        out.push_back(c);
    }
    return out;
}

namespace {

std::string join(const std::vector<int>& row) {
    std::ostringstream os;
    for (std::size_t k = 0; k < row.size(); ++k) os << (k ? " " : "") << row[k];
    return os.str();
}

} // namespace

std::string export_appendix_inequalities(int n) {
    const auto sys = cone_inequalities(n);
    const std::size_t boundary_rows = 3 * static_cast<std::size_t>(n);
    std::ostringstream os;
    os << sys.rows.size() << '\n' << triangle_size(n) << '\n';
    for (std::size_t r = 0; r < sys.rows.size(); ++r) {
        os << join(sys.rows[r]);
        if (r == 0) os << "  /*the boundary is nonnegative dominant*/";
        if (r == boundary_rows) os << "  /* the rhombus conditions */";
        os << '\n';
    }
    os << "inequalities\n\n";
    os << sys.equations.size() << '\n' << triangle_size(n) << '\n';
    for (const auto& e : sys.equations) os << join(e) << "    /* h_11 = 0 */\n";
    os << "equations\n";
    return os.str();
}

std::string export_appendix_generators(const ConePresentation& pres) {
    std::vector<std::vector<Entry>> rows;
    for (const auto& h : pres.basis) rows.emplace_back(h.flat().begin(), h.flat().end());
    std::sort(rows.begin(), rows.end());
    const int dim = triangle_size(pres.n);
    std::ostringstream os;
    os << "amb_space " << dim << '\n' << "cone " << rows.size() << '\n';
    for (const auto& r : rows) {
        for (Entry e : r) os << ' ' << e;
        os << '\n';
    }
    os << "\ngrading\n";
    for (int k = 0; k < dim; ++k) os << ' ' << (k + 1 == dim ? 1 : 0);
    os << "\n\n";
    return os.str();
}

std::string to_string(const BinomialRelation& r) {
    auto side = [](const std::vector<int>& v) {
        std::ostringstream os;
        for (std::size_t k = 0; k < v.size(); ++k) os << (k ? " + " : "") << 'h' << v[k];
        return os.str();
    };
    return r.name + ": " + side(r.left) + " = " + side(r.right);
}

} // namespace hive
