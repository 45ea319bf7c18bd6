#include "extop/canonical.hpp"

#include <map>
#include <set>
#include <stdexcept>
#include <tuple>
#include <utility>

#include "extop/linsolve.hpp"

namespace extop {

BigInt canonical_coefficient(int a, int b, int m) {
    if (b > m || a <= m) throw std::domain_error("canonical_coefficient: need b <= m < a");
    int sign = ((m - b) % 2 == 0) ? 1 : -1;
    return sign * binom(a - b - 1, m - b);
}

ExtensionKernel canonical_kernel(int ground_size, int m, int n) {
    if (!(0 <= m && m < n && n <= ground_size))
        throw std::domain_error("canonical_kernel: need 0 <= m < n <= ground size");
    ExtensionKernel k(ground_size, m, n);
    for (const Subset& a : enumerate_points(k.domain())) {
        if (a.card() <= m) {
            k.set_entry(a, SignedMeasure::dirac(a));
            continue;
        }
        SignedMeasure mu;
        for (const Subset& b : enumerate_subsets_of(a))
            if (b.card() <= m)
                mu.add(b, Rational(canonical_coefficient(a.card(), b.card(), m)));
        k.set_entry(a, std::move(mu));
    }
    return k;
}

bool continuity_pushforward_check(const ExtensionKernel& k, const Subset& a, const Subset& b) {
    if (!b.subset_of(a))
        throw std::domain_error("continuity_pushforward_check: B must be a subset of A");
    return intersect_pushforward(k.at(a), b) == k.at(b);
}

BigInt limit_coefficient(int m, int r, int p, int d) {
    if (!(0 <= d && d <= std::min(p, m) && m < r && p <= r))
        throw std::domain_error("limit_coefficient: arguments outside the admissible range");
    return psi(m - d, r - p, r - d - 1);
}

BigInt limit_coefficient_expected(int m, int /*r*/, int p, int d) {
    if (p > m) {
        int sign = ((m - d) % 2 == 0) ? 1 : -1;
        return sign * binom(p - d - 1, m - d);
    }
    return d == p ? BigInt(1) : BigInt(0);
}

namespace {

// Index layout for the symmetry-reduced unknowns c(a,i,j), a <= n,
// i <= min(a,m), i+j <= m.
struct UnknownIndex {
    std::map<std::tuple<int, int, int>, int> pos;
    std::vector<NaturalitySystem::Unknown> list;

    UnknownIndex(int m, int n) {
        for (int a = 0; a <= n; ++a)
            for (int i = 0; i <= std::min(a, m); ++i)
                for (int j = 0; i + j <= m; ++j) {
                    pos[{a, i, j}] = static_cast<int>(list.size());
                    list.push_back({a, i, j});
                }
    }

    int at(int a, int i, int j) const {
        auto it = pos.find({a, i, j});
        if (it == pos.end())
            throw std::logic_error("naturality unknowns: index out of range");
        return it->second;
    }
};

// Commutation of the symmetric family with one explicit injection u, obtained
// by evaluating e_u . T_q = T_p . e_u on indicator functions: for every point
// A of sigma_n(2^[p]) and every atom B' of sigma_m(2^[q]),
//   c(|A'|, |A' & B'|, |B' \ A'|) = sum over B in sigma_m(2^[p]) with
//   u^{-1}(B) = B' of c(|A|, |A & B|, |B \ A|),   A' = u^{-1}(A).
void add_commutation_rows(LinearSystem& sys, const UnknownIndex& idx, const Injection& u,
                          int m, int n) {
    SigmaSpace big(GroundSet(u.target_size), std::min(n, u.target_size));
    SigmaSpace big_atoms(GroundSet(u.target_size), std::min(m, u.target_size));
    SigmaSpace small_atoms(GroundSet(u.source_size), std::min(m, u.source_size));
    auto points = enumerate_points(big);
    auto atoms_p = enumerate_points(big_atoms);
    auto atoms_q = enumerate_points(small_atoms);

    for (const Subset& a : points) {
        Subset a_pre = u.preimage(a);
        for (const Subset& bq : atoms_q) {
            std::vector<Rational> row(static_cast<std::size_t>(sys.n_unknowns), Rational(0));
            int lhs = idx.at(a_pre.card(), (a_pre & bq).card(), bq.minus(a_pre).card());
            row[static_cast<std::size_t>(lhs)] += Rational(1);
            for (const Subset& bp : atoms_p) {
                if (!(u.preimage(bp) == bq)) continue;
                int rhs = idx.at(a.card(), (a & bp).card(), bp.minus(a).card());
                row[static_cast<std::size_t>(rhs)] -= Rational(1);
            }
            bool all_zero = true;
            for (const Rational& c : row)
                if (!c.is_zero()) {
                    all_zero = false;
                    break;
                }
            if (!all_zero) sys.add_row(std::move(row), Rational(0));
        }
    }
}

std::vector<Rational> canonical_assignment(const UnknownIndex& idx, int m) {
    std::vector<Rational> x(idx.list.size(), Rational(0));
    for (std::size_t t = 0; t < idx.list.size(); ++t) {
        const auto& [a, i, j] = idx.list[t];
        if (j != 0) continue;  // canonical measures live inside A
        if (a <= m)
            x[t] = Rational(i == a ? 1 : 0);
        else
            x[t] = Rational(canonical_coefficient(a, i, m));
    }
    return x;
}

}  // namespace

NaturalitySystem natural_solution_space(int m, int n, int pmax) {
    if (!(0 <= m && m < n && n <= pmax))
        throw std::domain_error("natural_solution_space: need 0 <= m < n <= pmax");

    UnknownIndex idx(m, n);
    LinearSystem sys;
    sys.n_unknowns = static_cast<int>(idx.list.size());

    // Extension equations: c(a, i, j) = [i = a, j = 0] for a <= m.
    for (std::size_t t = 0; t < idx.list.size(); ++t) {
        const auto& [a, i, j] = idx.list[t];
        if (a > m) continue;
        std::vector<Rational> row(idx.list.size(), Rational(0));
        row[t] = Rational(1);
        sys.add_row(std::move(row), Rational(i == a && j == 0 ? 1 : 0));
    }

    // Commutation with one inclusion per pair of ground sizes, plus a variant
    // composed with a transposition; the variant rows are redundant under the
    // symmetry reduction and serve as a cross-check.
    for (int p = 1; p <= pmax; ++p)
        for (int q = 0; q < p; ++q) {
            add_commutation_rows(sys, idx, Injection::inclusion(q, p), m, n);
            if (q >= 1) {
                std::vector<int> img(static_cast<std::size_t>(q));
                for (int i = 0; i < q; ++i) img[static_cast<std::size_t>(i)] = i;
                img[0] = p - 1;  // send 0 to the top element instead
                add_commutation_rows(sys, idx, Injection(q, p, std::move(img)), m, n);
            }
        }

    // Most commutation rows repeat across injection pairs; eliminate exact
    // duplicates before the solve.
    LinearSystem dedup;
    dedup.n_unknowns = sys.n_unknowns;
    std::set<std::pair<std::vector<Rational>, Rational>> seen;
    for (std::size_t r = 0; r < sys.rows.size(); ++r)
        if (seen.insert({sys.rows[r], sys.rhs[r]}).second)
            dedup.add_row(sys.rows[r], sys.rhs[r]);

    SolveResult res = solve_exact(dedup);
    if (!res.consistent)
        throw std::runtime_error("naturality system inconsistent");

    NaturalitySystem out;
    out.m = m;
    out.n = n;
    out.pmax = pmax;
    out.unknowns = idx.list;
    out.equation_count = static_cast<int>(dedup.rows.size());
    out.solution_dim = res.nullity;
    out.contains_canonical = max_residual(dedup, canonical_assignment(idx, m)).is_zero();
    return out;
}

}  // namespace extop
