#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hive/hive.hpp"
#include "hive/shapes.hpp"

namespace hive {

/// Row i holds outer_i cells; 0 marks a cell of the inner diagram.
using Filling = std::vector<std::vector<int>>;

/// A Littlewood-Richardson tableau for GL(n): a semistandard filling of a
/// skew diagram with 1..n whose reverse reading word is a lattice word.
class LRTableau {
public:
    int rank() const noexcept { return n_; }
    const SkewShape& shape() const noexcept { return shape_; }
    const Filling& rows() const noexcept { return rows_; }
    const Partition& content() const noexcept { return content_; }

    /// t_ij: number of boxes in row i (1-based) containing j.
    int count(int i, int j) const;

    friend bool operator==(const LRTableau&, const LRTableau&) = default;

private:
    friend struct TableauAccess;
    LRTableau(int n, SkewShape shape, Filling rows, Partition content)
        : n_(n), shape_(std::move(shape)), rows_(std::move(rows)), content_(std::move(content)) {}

    int n_;
    SkewShape shape_;
    Filling rows_;
    Partition content_;
};

enum class TableauDefect {
    TooManyRows,  ///< outer diagram has more than n rows
    InnerCell,    ///< inner cell not 0, or skew cell left empty
    EntryRange,   ///< entry outside 1..n
    RowOrder,     ///< decrease along a row
    ColumnOrder,  ///< no strict increase down a column
    Lattice,      ///< reverse reading word is not a lattice word
};

const char* to_string(TableauDefect d) noexcept;

struct TableauViolation {
    TableauDefect defect;
    int row = 0; ///< 1-based
    int col = 0; ///< 1-based
    std::string describe() const;
};

struct TableauCheck {
    std::optional<LRTableau> tableau;
    std::optional<TableauViolation> violation;
    explicit operator bool() const noexcept { return tableau.has_value(); }
};

/// Checks the filling against `shape` for GL(n). Cells are visited in the
/// reverse reading order (rows top to bottom, each right to left) and the
/// first failure is reported. Throws ShapeError if the row count or a row
/// length disagrees with the outer diagram.
TableauCheck validate_tableau(int n, const SkewShape& shape, const Filling& filling);

/// Like validate_tableau, but throws std::invalid_argument on a violation.
LRTableau make_tableau(int n, const SkewShape& shape, const Filling& filling);

/// Every LR tableau on lambda/mu with content nu for GL(n). Cells are filled
/// in reverse reading order, trying entries in increasing order, with the
/// lattice condition checked on each prefix. Empty when the data admit none
/// (size mismatch, mu not inside lambda, more than n rows).
std::vector<LRTableau> enumerate_tableaux(int n, const Partition& lambda, const Partition& mu,
                                          const Partition& nu);

/// h_ij = number of boxes in the first i-1 rows that are empty or hold an
/// entry at most j-1.
Hive tableau_to_hive(const LRTableau& t);

/// Inverse of tableau_to_hive. Row i gets mu_i empty boxes followed by t_ij
/// copies of j, where t_ij = (h_{i+1,j+1} - h_{i+1,j}) - (h_{i,j+1} - h_{i,j})
/// and the second bracket is read as 0 when j = i.
LRTableau hive_to_tableau(const Hive& h);

/// Rows separated by '/', empty boxes as '.', e.g. "..1/.2/1".
std::string render(const LRTableau& t);

} // namespace hive
