#include "extop/ball.hpp"

#include <stdexcept>

namespace extop {

Rational l1_mass(const SparseVector& v) {
    Rational t(0);
    for (const auto& [i, x] : v) t += x.abs();
    return t;
}

BallPoint::BallPoint(SparseVector c, Rational lam) : lambda(std::move(lam)) {
    Rational total(0);
    for (const auto& [i, x] : c) {
        if (i < 0 || i >= 64) throw std::domain_error("BallPoint: coordinate index out of range");
        if (x.sign() < 0) throw std::domain_error("BallPoint: negative coordinate");
        if (x.is_zero()) continue;
        total += x;
        coords.emplace(i, x);
    }
    if (total > lambda) throw std::domain_error("BallPoint: coordinate sum exceeds lambda");
}

RampPair::RampPair(int m_, Rational eps) : m(m_), epsilon(std::move(eps)) {
    if (m < 1) throw std::domain_error("RampPair: m must be >= 1");
    if (!(Rational(1, m + 1) < epsilon && epsilon < Rational(1, m)))
        throw std::domain_error("RampPair: epsilon must lie strictly in (1/(m+1), 1/m)");
}

RampPair RampPair::standard(int m_) {
    if (m_ < 1) throw std::domain_error("RampPair: m must be >= 1");
    return RampPair(m_, (Rational(1, m_ + 1) + Rational(1, m_)) / Rational(2));
}

Rational RampPair::g1(const Rational& t) const {
    if (t <= epsilon) return Rational(0);
    Rational top(1, m);
    if (t >= top) return Rational(1);
    return (t - epsilon) / (top - epsilon);
}

BallPoint lattice_point(const Subset& a, int n) {
    if (n < 1) throw std::domain_error("lattice_point: n must be >= 1");
    if (a.card() > n) throw std::domain_error("lattice_point: |A| exceeds n");
    SparseVector c;
    for (int i : a.members()) c.emplace(i, Rational(1, n));
    return BallPoint(std::move(c), Rational(1));
}

Subset support_F(const BallPoint& z, const RampPair& ramp) {
    Subset f;
    for (const auto& [i, x] : z.coords)
        if (x > ramp.epsilon) f = f.with(i);
    return f;
}

SignedMeasure regular_weights(const BallPoint& z, const RampPair& ramp) {
    Subset f = support_F(z, ramp);
    SignedMeasure out;
    for (const Subset& a : enumerate_subsets_of(f)) {
        Rational w(1);
        for (int i : f.members()) {
            Rational zi = z.coord(i);
            w *= a.contains(i) ? ramp.g1(zi) : ramp.g0(zi);
            if (w.is_zero()) break;
        }
        out.add(a, w);
    }
    return out;
}

Rational regular_apply(const PointFunction& f, const BallPoint& z, const RampPair& ramp) {
    Rational acc(0);
    SignedMeasure weights = regular_weights(z, ramp);
    for (const auto& [a, w] : weights.atoms()) {
        auto it = f.find(a);
        if (it == f.end())
            throw std::invalid_argument("regular_apply: incomplete function (missing " +
                                        a.to_string() + ")");
        acc += w * it->second;
    }
    return acc;
}

Rational regular_apply_local(const PointFunction& f, const BallPoint& z, const RampPair& ramp,
                             const Subset& h) {
    Subset fh = support_F(z, ramp) & h;
    Rational acc(0);
    for (const Subset& a : enumerate_subsets_of(fh)) {
        Rational w(1);
        for (int i : fh.members()) {
            Rational zi = z.coord(i);
            w *= a.contains(i) ? ramp.g1(zi) : ramp.g0(zi);
            if (w.is_zero()) break;
        }
        if (w.is_zero()) continue;
        auto it = f.find(a);
        if (it == f.end())
            throw std::invalid_argument("regular_apply_local: incomplete function");
        acc += w * it->second;
    }
    return acc;
}

SparseVector signed_square_map(const SparseVector& w, const Rational& lambda) {
    Rational sq(0);
    SparseVector out;
    for (const auto& [i, x] : w) {
        if (x.is_zero()) continue;
        Rational y = x * x;
        sq += y;
        out.emplace(i, x.sign() < 0 ? -y : y);
    }
    if (sq > lambda) throw std::domain_error("signed_square_map: squared mass exceeds lambda");
    return out;
}

namespace {

Rational exact_sqrt(const Rational& y) {
    BigInt num = y.num(), den = y.den();
    BigInt rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    if (rn * rn != num || rd * rd != den)
        throw std::domain_error("signed_square_inverse: coordinate is not an exact square");
    return Rational(rn, rd);
}

}  // namespace

SparseVector signed_square_inverse(const SparseVector& y) {
    SparseVector out;
    for (const auto& [i, v] : y) {
        if (v.is_zero()) continue;
        Rational root = exact_sqrt(v.abs());
        out.emplace(i, v.sign() < 0 ? -root : root);
    }
    return out;
}

BallPoint abs_retract(const SparseVector& z, const Rational& lambda) {
    if (l1_mass(z) > lambda) throw std::domain_error("abs_retract: l1 mass exceeds lambda");
    SparseVector c;
    for (const auto& [i, x] : z)
        if (!x.is_zero()) c.emplace(i, x.abs());
    return BallPoint(std::move(c), lambda);
}

std::pair<ExtensionKernel, ComposeReport> compose_E(const BallKernelStub& stub,
                                                    const RampPair& ramp) {
    if (stub.m < 1 || stub.k < 1)
        throw std::domain_error("compose_E: need m >= 1 and k >= 1");
    if (ramp.m != stub.m) throw std::domain_error("compose_E: ramp built for a different m");

    ExtensionKernel e(stub.ground_size, stub.m, stub.m + stub.k);
    Rational sup_tv(0);
    for (const Subset& a : enumerate_points(e.domain())) {
        auto it = stub.entries.find(a);
        if (it == stub.entries.end())
            throw std::invalid_argument("stub incomplete: no measure at point " + a.to_string());
        SignedMeasure phi;
        Rational tv(0);
        for (const auto& [point, coeff] : it->second) {
            phi += regular_weights(point, ramp).scaled(coeff);
            tv += coeff.abs();
        }
        sup_tv = std::max(sup_tv, tv);
        e.set_entry(a, std::move(phi));
    }

    ComposeReport rep;
    rep.norm_e = operator_norm(e);
    rep.stub_sup_tv = sup_tv;
    rep.extension_ok = is_extension_kernel(e);
    rep.bound = 2L * stub.k + 1;
    rep.norm_within_sup = rep.norm_e <= sup_tv;
    rep.hyp_m_gt_k = stub.m > stub.k;
    rep.hyp_k_gt_stub_norm = Rational(stub.k) > sup_tv;
    rep.hyp_radius = Rational(1) + Rational(stub.k) / Rational(stub.m) < stub.mu;
    return {std::move(e), rep};
}

}  // namespace extop
