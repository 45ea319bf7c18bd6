#pragma once

#include <map>
#include <vector>

#include "extop/kernel.hpp"
#include "extop/measure.hpp"

namespace extop {

/// Finitely supported vector with rational coordinates; zero entries are not
/// stored. Used for the signed inputs of the square/abs reductions.
using SparseVector = std::map<int, Rational>;

Rational l1_mass(const SparseVector& v);

/// Point of the positive l1-ball B+_lambda: nonnegative rational coordinates
/// with coordinate sum <= lambda.
struct BallPoint {
    SparseVector coords;
    Rational lambda;

    BallPoint(SparseVector c, Rational lam);

    Rational coord(int i) const {
        auto it = coords.find(i);
        return it == coords.end() ? Rational(0) : it->second;
    }

    friend bool operator==(const BallPoint&, const BallPoint&) = default;
};

/// Complementary ramp pair g0 + g1 = 1 with a rational threshold
/// 1/(m+1) < epsilon < 1/m: g1 vanishes up to epsilon, reaches 1 at 1/m and
/// is linear in between. Piecewise-linear keeps every evaluation exact.
struct RampPair {
    int m = 1;
    Rational epsilon;

    RampPair(int m_, Rational eps);
    static RampPair standard(int m_);  // epsilon = midpoint of (1/(m+1), 1/m)

    Rational g1(const Rational& t) const;
    Rational g0(const Rational& t) const { return Rational(1) - g1(t); }
};

/// The point n^{-1} chi_A of the lattice set S_n inside B+_1.
BallPoint lattice_point(const Subset& a, int n);

/// F_z = { i : z_i > epsilon }; automatically of cardinality <= m on B+_1.
Subset support_F(const BallPoint& z, const RampPair& ramp);

/// R* delta_z: the measure on S_m giving subset A of F_z the weight
/// prod_{i in F_z} g_{chi_A(i)}(z_i). Nonnegative, sums to exactly 1.
SignedMeasure regular_weights(const BallPoint& z, const RampPair& ramp);

/// Rf(z) = sum_A weight(A) f(m^{-1} chi_A), with f keyed by the subset A.
/// Throws when f misses a subset the weights touch.
Rational regular_apply(const PointFunction& f, const BallPoint& z, const RampPair& ramp);

/// The finitely-supported variant of the formula: sums over A inside
/// F_z & H only. Agrees with regular_apply whenever f depends only on
/// coordinates in H.
Rational regular_apply_local(const PointFunction& f, const BallPoint& z, const RampPair& ramp,
                             const Subset& h);

/// Coordinatewise signed square; l1 mass of the image equals the squared l2
/// mass of the input. Requires sum of squares <= lambda.
SparseVector signed_square_map(const SparseVector& w, const Rational& lambda);

/// Inverse of the signed square on exact squares; throws when a coordinate is
/// not the square of a rational.
SparseVector signed_square_inverse(const SparseVector& y);

/// Coordinatewise absolute value: the retraction of B_lambda onto B+_lambda.
BallPoint abs_retract(const SparseVector& z, const Rational& lambda);

/// Candidate operator T: C(B+_1) -> C(B+_mu) evaluated only where the
/// composition harness needs it: one finitely supported measure on B+_1
/// points per subset A with |A| <= m+k (the scaled lattice point of A).
struct BallKernelStub {
    Rational mu;  // outer ball radius
    int m = 1;
    int k = 1;
    int ground_size = 0;
    using Entry = std::vector<std::pair<BallPoint, Rational>>;
    std::map<Subset, Entry, SubsetCardLex> entries;
};

struct ComposeReport {
    Rational norm_e;
    Rational stub_sup_tv;
    bool extension_ok = false;   // whether E satisfies the extension property
    long bound = 0;              // 2k + 1
    bool norm_within_sup = false;
    // hypotheses of the contradiction argument, reported not chosen
    bool hyp_m_gt_k = false;
    bool hyp_k_gt_stub_norm = false;
    bool hyp_radius = false;     // 1 + k/m < mu
};

/// E = r T R at kernel level: phi_E(chi_A) is the regular_weights-pushforward
/// of the stub's measure at the scaled lattice point of A. Throws
/// "stub incomplete" when an entry is missing.
std::pair<ExtensionKernel, ComposeReport> compose_E(const BallKernelStub& stub,
                                                    const RampPair& ramp);

}  // namespace extop
