#include "extop/linsolve.hpp"

#include <algorithm>
#include <stdexcept>

namespace extop {

void LinearSystem::add_row(std::vector<Rational> row, Rational b) {
    if (static_cast<int>(row.size()) != n_unknowns)
        throw std::domain_error("LinearSystem: row width mismatch");
    rows.push_back(std::move(row));
    rhs.push_back(std::move(b));
}

SolveResult solve_exact(const LinearSystem& sys) {
    auto a = sys.rows;
    auto b = sys.rhs;
    const int ncols = sys.n_unknowns;
    const int nrows = static_cast<int>(a.size());

    std::vector<int> pivot_col_of_row;
    int row = 0;
    for (int col = 0; col < ncols && row < nrows; ++col) {
        int pivot = -1;
        for (int r = row; r < nrows; ++r)
            if (!a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)].is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(a[static_cast<std::size_t>(pivot)], a[static_cast<std::size_t>(row)]);
        std::swap(b[static_cast<std::size_t>(pivot)], b[static_cast<std::size_t>(row)]);

        Rational inv = Rational(1) / a[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
        for (int c = col; c < ncols; ++c)
            a[static_cast<std::size_t>(row)][static_cast<std::size_t>(c)] *= inv;
        b[static_cast<std::size_t>(row)] *= inv;

        for (int r = 0; r < nrows; ++r) {
            if (r == row) continue;
            Rational factor = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
            if (factor.is_zero()) continue;
            for (int c = col; c < ncols; ++c)
                a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] -=
                    factor * a[static_cast<std::size_t>(row)][static_cast<std::size_t>(c)];
            b[static_cast<std::size_t>(r)] -= factor * b[static_cast<std::size_t>(row)];
        }
        pivot_col_of_row.push_back(col);
        ++row;
    }

    SolveResult res;
    res.rank = row;
    res.nullity = ncols - row;
    res.consistent = true;
    for (int r = row; r < nrows; ++r)
        if (!b[static_cast<std::size_t>(r)].is_zero()) res.consistent = false;
    if (res.consistent) {
        res.particular.assign(static_cast<std::size_t>(ncols), Rational(0));
        for (int r = 0; r < row; ++r)
            res.particular[static_cast<std::size_t>(pivot_col_of_row[static_cast<std::size_t>(r)])] =
                b[static_cast<std::size_t>(r)];
    }
    return res;
}

Rational max_residual(const LinearSystem& sys, const std::vector<Rational>& x) {
    if (static_cast<int>(x.size()) != sys.n_unknowns)
        throw std::domain_error("max_residual: candidate size mismatch");
    Rational worst(0);
    for (std::size_t r = 0; r < sys.rows.size(); ++r) {
        Rational acc(0);
        for (std::size_t c = 0; c < x.size(); ++c) acc += sys.rows[r][c] * x[c];
        worst = std::max(worst, (acc - sys.rhs[r]).abs());
    }
    return worst;
}

}  // namespace extop
