#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "extop/kernel.hpp"

namespace extop {

/// Set-valued map S on finite subsets of the ground set, with a finite
/// description: either an evaluator restricted to inputs of cardinality <=
/// arity (larger inputs map to the empty set), or an explicit table whose
/// unlisted inputs map to the empty set.
class SetValuedMap {
public:
    using Evaluator = std::function<Subset(const Subset&)>;
    using Table = std::map<Subset, Subset, SubsetCardLex>;

    static SetValuedMap bounded(int arity, Evaluator eval);
    static SetValuedMap from_table(Table table);

    Subset operator()(const Subset& a) const;

    /// Inputs with a possibly nonempty image among the subsets of pool.
    std::vector<Subset> relevant_inputs_within(const Subset& pool) const;

    /// Enforces S(A) & A = empty over all A in [X]^{<= m}; throws
    /// std::invalid_argument on a violation.
    void require_disjoint_images(int ground_size, int m) const;

    bool is_table() const { return !eval_; }
    const Table& table() const { return table_; }
    int arity() const { return arity_; }

private:
    SetValuedMap() = default;
    int arity_ = 0;
    Evaluator eval_;
    Table table_;
};

/// Backtracking search for Y in [X]^p with S(A) & Y = empty for every
/// A in [Y]^{<= m}. Returns the lexicographically first witness, or nothing
/// when the finite ground admits none (existence is only guaranteed for
/// gigantic grounds).
std::optional<Subset> greedy_free_set(const SetValuedMap& s, int ground_size, int m, int p);

/// Ordered witness z_1 < ... < z_n with z_j never hit by S evaluated on index
/// sets lying entirely above or entirely below j.
struct ChainWitness {
    std::vector<int> z;

    Subset as_subset() const { return Subset::from_members(z); }
};

/// Two-phase block construction: forward, disjoint blocks of size
/// block_size each avoiding every S-image of the earlier blocks; backward,
/// one element per block avoiding the S-images of the later choices.
/// Returns nothing when a block cannot be filled or no backward choice fits.
std::optional<ChainWitness> block_free_chain(const SetValuedMap& s, int ground_size, int n,
                                             int block_size);

/// Exhaustive check of the witness property: z_j not in S({z_i : i in I})
/// whenever j < min(I) or j > max(I), including I = empty (every j).
bool verify_chain_witness(const SetValuedMap& s, const ChainWitness& z);

/// Exclusion set S_A inside X \ A, grown greedily until every B containing A
/// with |B| <= n and B & S_A = empty satisfies
/// |phi(chi_B)(O_{B'}) - 1| < eps' for all B' inside A.
Subset extract_S_A(const ExtensionKernel& k, const Subset& a, const Rational& eps_prime);

struct CertificateRegion {
    std::string kind;     // "atom" for { chi_{A_i} }, "cylinder" for the signed remainder
    Subset window;        // A_i for atoms, tilde A_i for cylinders
    Subset excluded_lo;   // A_{i-1}, cylinders only
    Subset excluded_hi;   // A_i, cylinders only
    Rational mass;

    bool contains(const Subset& point) const;
};

/// Certificate that tv_norm(phi(chi_Z)) >= (2n-2m+1)(1 - 3 eps') for the
/// chain witness Z: the n-m+1 window atoms carry mass ~ 1 and the n-m
/// punctured cylinders carry mass ~ -1. Soundness is underwritten by the
/// always-disjoint partition {window atoms} + {everything else}, whose masses
/// already force the bound; the cylinder regions themselves can overlap when
/// m <= 2 (regions_disjoint records whether they do not).
struct LowerBoundCertificate {
    ChainWitness z;
    SignedMeasure mu;
    Rational epsilon_prime;
    std::vector<CertificateRegion> regions;
    bool regions_disjoint = false;
    Rational partition_bound;  // sum of |masses| over the disjoint partition
    Rational certified_bound;  // (2n-2m+1)(1 - 3 eps')
    Rational tv;               // tv_norm(mu), always >= certified_bound
};

/// Runs the full lower-bound pipeline on an extension kernel: extracts the
/// sets S_A, searches a chain witness, measures the regions and assembles the
/// certificate. Returns nothing when the finite ground yields no witness;
/// throws "certificate invalid" if a derived region mass falls outside its
/// tolerance (an implementation fault, not an input condition).
std::optional<LowerBoundCertificate> lower_bound_certificate(const ExtensionKernel& k,
                                                             const Rational& epsilon);

/// As above with explicit eps' and block size overrides (defaults are
/// eps/(3(2n-2m+1)) and max(1, N/(2n))).
std::optional<LowerBoundCertificate> lower_bound_certificate(const ExtensionKernel& k,
                                                             const Rational& epsilon,
                                                             const Rational& eps_prime,
                                                             int block_size);

}  // namespace extop
