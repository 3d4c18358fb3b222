#include "hive/hive.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace hive {

namespace {

// Returns n with (n+1)(n+2)/2 == count, or 0.
int rank_for_count(std::size_t count) {
    for (int n = 1; triangle_size(n) <= static_cast<long long>(count); ++n)
        if (static_cast<std::size_t>(triangle_size(n)) == count) return n;
    return 0;
}

Entry checked_add(Entry a, Entry b) {
    Entry r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("hive entry overflow");
    return r;
}

Entry checked_sub(Entry a, Entry b) {
    Entry r;
    if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("hive entry overflow");
    return r;
}

void check_edge(const std::vector<Entry>& s, Condition cond, std::vector<Violation>& out) {
    const int n = static_cast<int>(s.size());
    for (int i = 1; i < n; ++i)
        if (s[i - 1] < s[i]) out.push_back({cond, i, i + 1, s[i - 1], s[i]});
    if (n > 0 && s[n - 1] < 0) out.push_back({cond, n, 0, s[n - 1], 0});
}

} // namespace

TriangularArray::TriangularArray(int n) : n_(n), entries_(triangle_size(n), 0) {
    if (n < 1) throw ShapeError("triangular array rank must be >= 1");
}

TriangularArray TriangularArray::from_flat(std::vector<Entry> entries) {
    int n = rank_for_count(entries.size());
    if (n == 0)
        throw ShapeError("entry count " + std::to_string(entries.size()) +
                         " is not (n+1)(n+2)/2 for any n >= 1");
    TriangularArray t;
    t.n_ = n;
    t.entries_ = std::move(entries);
    return t;
}

TriangularArray TriangularArray::from_rows(const std::vector<std::vector<Entry>>& rows) {
    if (rows.size() < 2) throw ShapeError("a triangular array needs at least 2 rows");
    std::vector<Entry> flat;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != r + 1)
            throw ShapeError("row " + std::to_string(r + 1) + " has " +
                             std::to_string(rows[r].size()) + " entries, expected " +
                             std::to_string(r + 1));
        flat.insert(flat.end(), rows[r].begin(), rows[r].end());
    }
    return from_flat(std::move(flat));
}

std::vector<std::vector<Entry>> TriangularArray::rows() const {
    std::vector<std::vector<Entry>> out;
    for (int i = 1; i <= n_ + 1; ++i) {
        auto& row = out.emplace_back();
        for (int j = 1; j <= i; ++j) row.push_back(at(i, j));
    }
    return out;
}

BoundarySequences boundary_sequences(const TriangularArray& t) {
    const int n = t.rank();
    BoundarySequences s;
    for (int i = 1; i <= n; ++i) {
        s.a.push_back(t.at(i + 1, i + 1) - t.at(i, i));
        s.b.push_back(t.at(i + 1, 1) - t.at(i, 1));
        s.c.push_back(t.at(n + 1, i + 1) - t.at(n + 1, i));
    }
    return s;
}

const char* to_string(Condition c) noexcept {
    switch (c) {
    case Condition::Corner: return "corner";
    case Condition::RightEdge: return "right-edge";
    case Condition::LeftEdge: return "left-edge";
    case Condition::BottomEdge: return "bottom-edge";
    case Condition::RhombusFirst: return "rhombus-1";
    case Condition::RhombusSecond: return "rhombus-2";
    case Condition::RhombusThird: return "rhombus-3";
    }
    return "?";
}

std::string Violation::describe() const {
    std::ostringstream os;
    os << to_string(condition) << " (" << i << "," << j << "): ";
    if (condition == Condition::Corner)
        os << "h_11 = " << lhs << ", expected 0";
    else
        os << lhs << " < " << rhs;
    return os.str();
}

std::string to_string(const Boundary& b) {
    return "lambda=" + to_string(b.lambda) + " mu=" + to_string(b.mu) + " nu=" + to_string(b.nu);
}

HiveCheck Hive::validate(const TriangularArray& t) {
    HiveCheck result;
    const int n = t.rank();
    auto& out = result.violations;
    if (n < 1) throw ShapeError("empty triangular array");

    if (t.at(1, 1) != 0) out.push_back({Condition::Corner, 1, 1, t.at(1, 1), 0});

    auto s = boundary_sequences(t);
    check_edge(s.a, Condition::RightEdge, out);
    check_edge(s.b, Condition::LeftEdge, out);
    check_edge(s.c, Condition::BottomEdge, out);

    auto h = [&](int i, int j) { return static_cast<__int128>(t.at(i, j)); };
    auto push = [&](Condition c, int i, int j, __int128 lhs, __int128 rhs) {
        if (lhs < rhs) out.push_back({c, i, j, static_cast<Entry>(lhs), static_cast<Entry>(rhs)});
    };
    for (int i = 2; i <= n; ++i)
        for (int j = 1; j < i; ++j)
            push(Condition::RhombusFirst, i, j, h(i, j) + h(i + 1, j + 1), h(i + 1, j) + h(i, j + 1));
    for (int i = 2; i <= n; ++i)
        for (int j = 1; j < i; ++j)
            push(Condition::RhombusSecond, i, j, h(i, j) + h(i, j + 1), h(i + 1, j + 1) + h(i - 1, j));
    for (int i = 2; i <= n; ++i)
        for (int j = 2; j <= i; ++j)
            push(Condition::RhombusThird, i, j, h(i + 1, j) + h(i, j), h(i + 1, j + 1) + h(i, j - 1));

    if (out.empty()) result.hive = Hive(t);
    return result;
}

Hive Hive::make(const TriangularArray& t) {
    auto check = validate(t);
    if (!check) {
        std::ostringstream os;
        os << "not a hive:";
        for (const auto& v : check.violations) os << "\n  " << v.describe();
        throw InvalidHive(os.str());
    }
    return *std::move(check.hive);
}

Hive Hive::from_flat(int n, std::vector<Entry> entries) {
    auto t = TriangularArray::from_flat(std::move(entries));
    if (t.rank() != n)
        throw ShapeError("expected " + std::to_string(triangle_size(n)) + " entries for GL(" +
                         std::to_string(n) + ")");
    return make(t);
}

Hive Hive::zero(int n) { return Hive(TriangularArray(n)); }

Boundary Hive::boundary() const {
    auto s = boundary_sequences(array_);
    auto to_part = [](const std::vector<Entry>& v) {
        return Partition(std::vector<int>(v.begin(), v.end()));
    };
    return {to_part(s.a), to_part(s.b), to_part(s.c)};
}

bool Hive::is_zero() const noexcept {
    return std::all_of(flat().begin(), flat().end(), [](Entry e) { return e == 0; });
}

Hive add(const Hive& a, const Hive& b) {
    if (a.rank() != b.rank())
        throw RankMismatch("cannot add hives of rank " + std::to_string(a.rank()) + " and " +
                           std::to_string(b.rank()));
    std::vector<Entry> sum(a.flat().size());
    for (std::size_t k = 0; k < sum.size(); ++k) sum[k] = checked_add(a.flat()[k], b.flat()[k]);
    return Hive::make(TriangularArray::from_flat(std::move(sum)));
}

std::optional<Hive> try_subtract(const Hive& a, const Hive& b) {
    if (a.rank() != b.rank())
        throw RankMismatch("cannot subtract hives of rank " + std::to_string(a.rank()) + " and " +
                           std::to_string(b.rank()));
    std::vector<Entry> diff(a.flat().size());
    for (std::size_t k = 0; k < diff.size(); ++k) diff[k] = checked_sub(a.flat()[k], b.flat()[k]);
    auto check = Hive::validate(TriangularArray::from_flat(std::move(diff)));
    return std::move(check.hive);
}

bool degree_then_coordinates(const Hive& a, const Hive& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return std::lexicographical_compare(a.flat().begin(), a.flat().end(), b.flat().begin(),
                                        b.flat().end());
}

std::string render(const TriangularArray& t) {
    const int n = t.rank();
    std::size_t width = 1;
    for (Entry e : t.flat()) width = std::max(width, std::to_string(e).size());
    // Even cell width so that each row shifts by exactly half a cell.
    const std::size_t cell = 2 * ((width + 2) / 2);
    std::ostringstream os;
    for (int i = 1; i <= n + 1; ++i) {
        os << std::string((n + 1 - i) * cell / 2, ' ');
        for (int j = 1; j <= i; ++j) {
            auto s = std::to_string(t.at(i, j));
            os << std::string(cell - s.size(), ' ') << s;
        }
        os << '\n';
    }
    return os.str();
}

std::vector<SparseInequality> boundary_increment_inequalities(int n) {
    std::vector<SparseInequality> rows;
    auto ix = triangle_index;
    for (int i = 1; i <= n; ++i)
        rows.push_back({Condition::LeftEdge, i, 1, {{ix(i, 1), -1}, {ix(i + 1, 1), 1}}});
    for (int i = 1; i <= n; ++i)
        rows.push_back({Condition::BottomEdge, n + 1, i, {{ix(n + 1, i), -1}, {ix(n + 1, i + 1), 1}}});
    for (int i = 1; i <= n; ++i)
        rows.push_back({Condition::RightEdge, i, i, {{ix(i, i), -1}, {ix(i + 1, i + 1), 1}}});
    return rows;
}

std::vector<SparseInequality> rhombus_inequalities(int n) {
    std::vector<SparseInequality> rows;
    auto ix = triangle_index;
    for (int i = 2; i <= n; ++i)
        for (int j = 1; j < i; ++j)
            rows.push_back({Condition::RhombusSecond, i, j,
                            {{ix(i, j), 1}, {ix(i, j + 1), 1}, {ix(i + 1, j + 1), -1}, {ix(i - 1, j), -1}}});
    for (int i = 2; i <= n; ++i)
        for (int j = 2; j <= i; ++j)
            rows.push_back({Condition::RhombusThird, i, j,
                            {{ix(i + 1, j), 1}, {ix(i, j), 1}, {ix(i + 1, j + 1), -1}, {ix(i, j - 1), -1}}});
    for (int i = 2; i <= n; ++i)
        for (int j = 1; j < i; ++j)
            rows.push_back({Condition::RhombusFirst, i, j,
                            {{ix(i, j), 1}, {ix(i + 1, j + 1), 1}, {ix(i + 1, j), -1}, {ix(i, j + 1), -1}}});
    return rows;
}

} // namespace hive
