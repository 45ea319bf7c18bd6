#pragma once

#include <vector>

#include "extop/rational.hpp"

namespace extop {

/// Dense linear system A x = b over the rationals.
struct LinearSystem {
    std::vector<std::vector<Rational>> rows;  // each of size n_unknowns
    std::vector<Rational> rhs;                // same length as rows
    int n_unknowns = 0;

    void add_row(std::vector<Rational> row, Rational b);
};

struct SolveResult {
    bool consistent = false;
    int rank = 0;
    int nullity = 0;                    // n_unknowns - rank
    std::vector<Rational> particular;   // a solution, when consistent
};

/// Exact Gauss-Jordan elimination; no pivoting heuristics are needed since
/// the arithmetic is exact.
SolveResult solve_exact(const LinearSystem& sys);

/// Largest residual |A x - b| entry for a candidate solution; 0 iff x solves
/// the system.
Rational max_residual(const LinearSystem& sys, const std::vector<Rational>& x);

}  // namespace extop
