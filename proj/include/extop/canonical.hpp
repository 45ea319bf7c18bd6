#pragma once

#include "extop/combinat.hpp"
#include "extop/kernel.hpp"

namespace extop {

/// Coefficient of delta_{chi_B} in phi(chi_A) for the canonical kernel, as a
/// function of a = |A|, b = |B| (B inside A), for a > m:
/// (-1)^{m-b} C(a-b-1, m-b).
BigInt canonical_coefficient(int a, int b, int m);

/// The canonical extension operator from sigma_m to sigma_n over a ground of
/// size N:
///   phi(chi_A) = sum_{B subset A, |B| <= m} (-1)^{m-|B|} C(|A|-|B|-1, m-|B|)
///                delta_{chi_B}                          for |A| > m,
///   phi(chi_A) = delta_{chi_A}                          for |A| <= m.
ExtensionKernel canonical_kernel(int ground_size, int m, int n);

/// True iff pushing phi(chi_A) forward under C -> C & B reproduces phi(chi_B).
/// This is the kernel-level form of sequential continuity along chi_{C U D} ->
/// chi_D, checked with zero tolerance. Requires B inside A.
bool continuity_pushforward_check(const ExtensionKernel& k, const Subset& a, const Subset& b);

/// psi(m-d, r-p, r-d-1): the exact coefficient of f(chi_D) in the limit of
/// T f(chi_{A_k}) along a shrinking sequence, where r = |A_k|, p = |B| and
/// d = |D|. Preconditions: d <= min(p, m), m < r, p <= r.
BigInt limit_coefficient(int m, int r, int p, int d);

/// Closed form the limit coefficient must match:
///   p >  m:          (-1)^{m-d} C(p-d-1, m-d)
///   p <= m, d == p:  1   (a phi(m-p, r-m, m-p) instance)
///   p <= m, d <  p:  0
BigInt limit_coefficient_expected(int m, int r, int p, int d);

/// Symmetry-reduced description of all norm-bounded natural families of
/// extension operators over grounds of size <= pmax. Unknown c(a,i,j) is the
/// coefficient phi(chi_A){chi_B} for |A| = a, |A & B| = i, |B \ A| = j.
struct NaturalitySystem {
    int m = 0;
    int n = 0;
    int pmax = 0;
    struct Unknown {
        int a, i, j;
    };
    std::vector<Unknown> unknowns;
    int equation_count = 0;
    int solution_dim = 0;
    bool contains_canonical = false;
};

/// Builds and solves exactly the linear system expressing (i) the extension
/// property on points of size <= m and (ii) commutation with the standard
/// inclusion (plus a transposed variant) between every pair of ground sizes
/// q < p <= pmax. Throws if the system is inconsistent, which cannot happen
/// since the canonical assignment always solves it.
NaturalitySystem natural_solution_space(int m, int n, int pmax);

}  // namespace extop
