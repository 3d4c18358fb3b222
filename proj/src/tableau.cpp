#include "hive/tableau.hpp"

#include <sstream>
#include <stdexcept>

namespace hive {

struct TableauAccess {
    static LRTableau make(int n, SkewShape shape, Filling rows, Partition content) {
        return LRTableau(n, std::move(shape), std::move(rows), std::move(content));
    }
};

int LRTableau::count(int i, int j) const {
    if (i < 1 || i > static_cast<int>(rows_.size())) return 0;
    int c = 0;
    for (int v : rows_[i - 1]) c += (v == j);
    return c;
}

const char* to_string(TableauDefect d) noexcept {
    switch (d) {
    case TableauDefect::TooManyRows: return "too-many-rows";
    case TableauDefect::InnerCell: return "inner-cell";
    case TableauDefect::EntryRange: return "entry-range";
    case TableauDefect::RowOrder: return "row-order";
    case TableauDefect::ColumnOrder: return "column-order";
    case TableauDefect::Lattice: return "lattice";
    }
    return "?";
}

std::string TableauViolation::describe() const {
    std::ostringstream os;
    os << to_string(defect) << " at row " << row << ", column " << col;
    return os.str();
}

TableauCheck validate_tableau(int n, const SkewShape& shape, const Filling& filling) {
    const auto& outer = shape.outer;
    const auto& inner = shape.inner;
    const std::size_t rows = outer.length();
    if (filling.size() != rows)
        throw ShapeError("filling has " + std::to_string(filling.size()) + " rows, shape has " +
                         std::to_string(rows));
    for (std::size_t r = 0; r < rows; ++r)
        if (static_cast<int>(filling[r].size()) != outer[r])
            throw ShapeError("row " + std::to_string(r + 1) + " has " +
                             std::to_string(filling[r].size()) + " cells, shape needs " +
                             std::to_string(outer[r]));

    TableauCheck result;
    auto fail = [&](TableauDefect d, std::size_t r, int c) {
        result.violation = TableauViolation{d, static_cast<int>(r) + 1, c + 1};
        return result;
    };
    if (static_cast<int>(rows) > n) return fail(TableauDefect::TooManyRows, n, 0);

    std::vector<int> seen(n + 2, 0);
    for (std::size_t r = 0; r < rows; ++r) {
        for (int c = outer[r] - 1; c >= 0; --c) {
            int v = filling[r][c];
            if (c < inner[r]) {
                if (v != 0) return fail(TableauDefect::InnerCell, r, c);
                continue;
            }
            if (v == 0) return fail(TableauDefect::InnerCell, r, c);
            if (v < 1 || v > n) return fail(TableauDefect::EntryRange, r, c);
            if (c + 1 < outer[r] && v > filling[r][c + 1]) return fail(TableauDefect::RowOrder, r, c);
            if (r > 0 && c < outer[r - 1] && c >= inner[r - 1] && v <= filling[r - 1][c])
                return fail(TableauDefect::ColumnOrder, r, c);
            ++seen[v];
            if (v > 1 && seen[v] > seen[v - 1]) return fail(TableauDefect::Lattice, r, c);
        }
    }
    std::vector<int> content;
    for (int v = 1; v <= n; ++v) content.push_back(seen[v]);
    result.tableau = TableauAccess::make(n, shape, filling, Partition(std::move(content)));
    return result;
}

LRTableau make_tableau(int n, const SkewShape& shape, const Filling& filling) {
    auto check = validate_tableau(n, shape, filling);
    if (!check) throw std::invalid_argument("not an LR tableau: " + check.violation->describe());
    return *std::move(check.tableau);
}

std::vector<LRTableau> enumerate_tableaux(int n, const Partition& lambda, const Partition& mu,
                                          const Partition& nu) {
    std::vector<LRTableau> out;
    if (static_cast<int>(lambda.length()) > n || static_cast<int>(mu.length()) > n ||
        static_cast<int>(nu.length()) > n)
        return out;
    if (!lambda.contains(mu) || lambda.size() != mu.size() + nu.size()) return out;

    const SkewShape shape(lambda, mu);
    const std::size_t rows = lambda.length();
    Filling grid(rows);
    for (std::size_t r = 0; r < rows; ++r) grid[r].assign(lambda[r], 0);

    std::vector<std::pair<int, int>> cells; // reverse reading order
    for (std::size_t r = 0; r < rows; ++r)
        for (int c = lambda[r] - 1; c >= mu[r]; --c) cells.emplace_back(static_cast<int>(r), c);

    std::vector<int> used(n + 2, 0);
    auto rec = [&](auto& self, std::size_t k) -> void {
        if (k == cells.size()) {
            out.push_back(TableauAccess::make(n, shape, grid, nu));
            return;
        }
        auto [r, c] = cells[k];
        int lo = 1, hi = n;
        if (r > 0 && c < lambda[r - 1] && c >= mu[r - 1]) lo = grid[r - 1][c] + 1;
        if (c + 1 < lambda[r]) hi = std::min(hi, grid[r][c + 1]);
        hi = std::min(hi, r + 1); // lattice words put nothing above r+1 in row r+1
        for (int v = lo; v <= hi; ++v) {
            if (used[v] >= nu[v - 1]) continue;
            if (v > 1 && used[v] >= used[v - 1]) continue;
            ++used[v];
            grid[r][c] = v;
            self(self, k + 1);
            grid[r][c] = 0;
            --used[v];
        }
    };
    rec(rec, 0);
    return out;
}

Hive tableau_to_hive(const LRTableau& t) {
    const int n = t.rank();
    const auto& shape = t.shape();
    TriangularArray a(n);
    for (int i = 1; i <= n + 1; ++i) {
        for (int j = 1; j <= i; ++j) {
            Entry total = 0;
            for (int r = 0; r < i - 1 && r < static_cast<int>(t.rows().size()); ++r) {
                total += shape.inner[r];
                for (int v : t.rows()[r])
                    if (v != 0 && v <= j - 1) ++total;
            }
            a.at(i, j) = total;
        }
    }
    return Hive::make(a);
}

LRTableau hive_to_tableau(const Hive& h) {
    const int n = h.rank();
    const Boundary b = h.boundary();
    // Number of entries equal to j among the first r rows.
    auto prefix = [&](int r, int j) -> Entry {
        if (r == 0 || j > r) return 0;
        return h.at(r + 1, j + 1) - h.at(r + 1, j);
    };
    Filling rows(b.lambda.length());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const int i = static_cast<int>(r) + 1;
        rows[r].assign(b.mu[r], 0);
        for (int j = 1; j <= i; ++j) {
            Entry t_ij = prefix(i, j) - prefix(i - 1, j);
            if (t_ij < 0)
                throw std::logic_error("negative row count t_" + std::to_string(i) +
                                       std::to_string(j) + " from a valid hive");
            rows[r].insert(rows[r].end(), static_cast<std::size_t>(t_ij), j);
        }
        if (static_cast<int>(rows[r].size()) != b.lambda[r])
            throw std::logic_error("row length mismatch while inverting hive");
    }
    return make_tableau(n, SkewShape(b.lambda, b.mu), rows);
}

std::string render(const LRTableau& t) {
    std::ostringstream os;
    for (std::size_t r = 0; r < t.rows().size(); ++r) {
        if (r) os << '/';
        for (int v : t.rows()[r]) {
            if (v == 0)
                os << '.';
            else
                os << v;
        }
    }
    return os.str();
}

} // namespace hive
