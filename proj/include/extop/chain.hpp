#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "extop/kernel.hpp"

namespace extop {

enum class OrderMode { Random, Reverse, Natural };

OrderMode order_mode_from_string(const std::string& s);
std::string to_string(OrderMode mode);

/// For each element beta of the ordered ground set {0..N-1}, a total order on
/// its predecessors {0..beta-1}; orders[beta][0] is the first element. This is
/// the finite stand-in for the omega-type beta-orders.
struct BetaOrderFamily {
    int ground_size = 0;
    OrderMode mode = OrderMode::Natural;
    std::uint64_t seed = 0;
    std::vector<std::vector<int>> orders;

    /// Position of x in the order below beta (0 = earliest). Requires x < beta.
    int position(int beta, int x) const;

    /// The family induced on a subset Y, reindexed to {0..|Y|-1}.
    BetaOrderFamily induced_on(const Subset& y) const;
};

/// mode = natural: 0,1,...,beta-1; reverse: beta-1,...,0; random: seeded
/// permutations, identical across runs for a fixed (mode, seed).
BetaOrderFamily make_beta_orders(int ground_size, OrderMode mode, std::uint64_t seed);

/// Gamma_i(A): the m-1 elements of {alpha_1..alpha_{i-1}} that come earliest
/// in the order below alpha_i, where A = {alpha_1 < ... < alpha_k} and i is
/// 1-based with m <= i <= k.
Subset gamma_set(const Subset& a, int i, const BetaOrderFamily& family, int m);

/// The chain extension operator: for |A| = k > m,
///   phi(chi_A) = sum_{i=m}^{k} delta_{ {alpha_i} U Gamma_i(A) }
///              - sum_{i=m+1}^{k} delta_{ Gamma_i(A) },
/// coincident atoms merged by coefficient addition; delta_{chi_A} for
/// |A| <= m. Its norm never exceeds 2n-2m+1.
ExtensionKernel chain_kernel(int ground_size, const BetaOrderFamily& family, int m, int n);

struct ChainNormReport {
    Rational norm;
    long bound = 0;        // 2n - 2m + 1
    bool attained = false;
    Subset witness;        // meaningful when attained
};

ChainNormReport chain_norm_report(const ExtensionKernel& k);

/// Lateness of a scenario (B, C): every escaping element c in C occurs after
/// every persistent element of B in the order below each beta in B that
/// dominates c. This is the finite shadow of the initial-segment property of
/// omega-type orders.
bool is_late_scenario(const BetaOrderFamily& family, const Subset& b, const Subset& c);

/// With B, C disjoint, |B U C| <= n and the scenario late: does pushing
/// phi(chi_{B U C}) forward under D -> D & B reproduce phi(chi_B)?
/// Throws "scenario not late" when the precondition fails.
bool late_continuity_check(const BetaOrderFamily& family, int m, int n, const Subset& b,
                           const Subset& c);

/// Same check against a kernel built once by the caller (for scenario scans).
bool late_continuity_check(const ExtensionKernel& prebuilt, const BetaOrderFamily& family,
                           const Subset& b, const Subset& c);

}  // namespace extop
