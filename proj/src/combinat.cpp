#include "extop/combinat.hpp"

#include <algorithm>
#include <stdexcept>

namespace extop {

BinomialTable::BinomialTable(int limit) : limit_(limit), zero_(0) {
    if (limit < 0) throw std::domain_error("BinomialTable: negative limit");
    rows_.resize(static_cast<std::size_t>(limit) + 1);
    for (int a = 0; a <= limit; ++a) {
        auto& row = rows_[static_cast<std::size_t>(a)];
        row.resize(static_cast<std::size_t>(a) + 1);
        row[0] = 1;
        row[static_cast<std::size_t>(a)] = 1;
        for (int b = 1; b < a; ++b)
            row[static_cast<std::size_t>(b)] =
                rows_[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b - 1)] +
                rows_[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b)];
    }
}

const BigInt& BinomialTable::at(int a, int b) const {
    if (a < 0 || b < 0 || b > a) return zero_;
    if (a > limit_) throw std::domain_error("BinomialTable: argument above limit");
    return rows_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
}

BigInt binom(long a, long b) {
    if (a < 0 || b < 0 || b > a) return BigInt(0);
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
    return out;
}

namespace {

int parity_sign(long e) { return (e % 2 == 0) ? 1 : -1; }

}  // namespace

BigInt theta(long p, long q, long r, long s, long t) {
    if (p < 0 || q < 0 || r < 0 || s < 0 || t < 0 ||
        p > std::min(std::min(q, r), std::min(s, t)) || t > s)
        throw std::domain_error("theta: arguments outside the admissible range");
    BigInt sum(0);
    for (long i = 0; i <= p; ++i)
        sum += parity_sign(q - i) * binom(r, i) * binom(s - i, t - i);
    return sum;
}

BigInt phi(long k, long l, long m) {
    if (k < 0 || l < 1 || m < 0 || m > k + l)
        throw std::domain_error("phi: arguments outside the admissible range");
    BigInt sum(0);
    for (long i = 0; i <= m; ++i)
        sum += parity_sign(m - i) * binom(k + l, i) * binom(m + l - i - 1, m - i);
    return sum;
}

BigInt psi(long k, long m, long s) {
    if (k < 0 || m < 0 || s < k)
        throw std::domain_error("psi: arguments outside the admissible range");
    BigInt sum(0);
    long j = std::min(k, m);
    for (long i = 0; i <= j; ++i)
        sum += parity_sign(k - i) * binom(m, i) * binom(s - i, k - i);
    return sum;
}

BigInt norm_formula(long m, long n) {
    if (m < 0 || m >= n) throw std::domain_error("norm_formula: need 0 <= m < n");
    BigInt sum(0);
    for (long k = 0; k <= m; ++k) sum += binom(n, k) * binom(n - k - 1, m - k);
    return sum;
}

namespace {

void record(IdentityReport& rep, std::vector<long> params, const BigInt& got,
            const BigInt& expected) {
    ++rep.cases_checked;
    if (got != expected)
        rep.counterexamples.push_back({std::move(params), got.get_str(), expected.get_str()});
}

// theta(p,q+1,r,s,t) = -theta(p,q,r,s,t)
IdentityReport check_theta0(int lim) {
    IdentityReport rep{"Theta0", 0, {}};
    for (long p = 0; p <= lim; ++p)
        for (long q = p; q <= lim; ++q)
            for (long r = p; r <= lim; ++r)
                for (long s = p; s <= lim; ++s)
                    for (long t = p; t <= s && t <= lim; ++t)
                        record(rep, {p, q, r, s, t}, theta(p, q + 1, r, s, t),
                               -theta(p, q, r, s, t));
    return rep;
}

// theta(p,q,r+1,s+1,p) = theta(p,q,r,s,p)
IdentityReport check_theta1(int lim) {
    IdentityReport rep{"Theta1", 0, {}};
    for (long p = 0; p <= lim; ++p)
        for (long q = p; q <= lim; ++q)
            for (long r = p; r <= lim; ++r)
                for (long s = p; s <= lim; ++s)
                    record(rep, {p, q, r, s}, theta(p, q, r + 1, s + 1, p),
                           theta(p, q, r, s, p));
    return rep;
}

// theta(p+1,q+1,p+1,s+1,t) = -theta(p,q,p,s,t) for p <= t-1
IdentityReport check_theta2(int lim) {
    IdentityReport rep{"Theta2", 0, {}};
    for (long p = 0; p <= lim; ++p)
        for (long q = p; q <= lim; ++q)
            for (long s = p; s <= lim; ++s)
                for (long t = p + 1; t <= s && t <= lim; ++t)
                    record(rep, {p, q, s, t}, theta(p + 1, q + 1, p + 1, s + 1, t),
                           -theta(p, q, p, s, t));
    return rep;
}

// phi(k,l,k) = 1
IdentityReport check_phi1(int lim) {
    IdentityReport rep{"Phi1", 0, {}};
    for (long k = 0; k <= lim; ++k)
        for (long l = 1; l <= lim; ++l)
            record(rep, {k, l}, phi(k, l, k), BigInt(1));
    return rep;
}

// phi(k,l,m) = 0 for k < m <= k+l
IdentityReport check_phi2(int lim) {
    IdentityReport rep{"Phi2", 0, {}};
    for (long k = 0; k <= lim; ++k)
        for (long l = 1; l <= lim; ++l)
            for (long m = k + 1; m <= k + l && m <= lim; ++m)
                record(rep, {k, l, m}, phi(k, l, m), BigInt(0));
    return rep;
}

// theta(k+l,k+l,k+l,n+l-1,n) = 0 for n >= k+l
IdentityReport check_phi3(int lim) {
    IdentityReport rep{"Phi3", 0, {}};
    for (long k = 0; k <= lim; ++k)
        for (long l = 1; k + l <= lim; ++l)
            for (long n = k + l; n + l - 1 <= lim; ++n)
                record(rep, {k, l, n}, theta(k + l, k + l, k + l, n + l - 1, n), BigInt(0));
    return rep;
}

// psi(k,m,s) = (-1)^k C(s-m,k) for s >= k+m
IdentityReport check_psi1(int lim) {
    IdentityReport rep{"Psi1", 0, {}};
    for (long k = 0; k <= lim; ++k)
        for (long m = 0; m <= lim; ++m)
            for (long s = k + m; s <= lim; ++s)
                record(rep, {k, m, s}, psi(k, m, s), parity_sign(k) * binom(s - m, k));
    return rep;
}

// psi(k,m,s) = 0 for k >= 1, m <= s < k+m
IdentityReport check_psi2(int lim) {
    IdentityReport rep{"Psi2", 0, {}};
    for (long k = 1; k <= lim; ++k)
        for (long m = 0; m <= lim; ++m)
            for (long s = std::max(k, m); s < k + m && s <= lim; ++s)
                record(rep, {k, m, s}, psi(k, m, s), BigInt(0));
    return rep;
}

}  // namespace

std::vector<IdentityReport> verify_identity_suite(int limit) {
    if (limit < 1) throw std::domain_error("verify_identity_suite: limit must be >= 1");
    return {check_theta0(limit), check_theta1(limit), check_theta2(limit),
            check_phi1(limit),   check_phi2(limit),   check_phi3(limit),
            check_psi1(limit),   check_psi2(limit)};
}

}  // namespace extop
