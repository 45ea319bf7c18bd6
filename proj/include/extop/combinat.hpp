#pragma once

#include <string>
#include <vector>

#include "extop/rational.hpp"

namespace extop {

/// Memoized Pascal-triangle table of exact binomial coefficients C(a,b) for
/// 0 <= b <= a <= limit.
class BinomialTable {
public:
    explicit BinomialTable(int limit);

    int limit() const { return limit_; }

    /// C(a,b); out-of-range arguments (b < 0, b > a, a < 0) give 0.
    const BigInt& at(int a, int b) const;

private:
    int limit_;
    std::vector<std::vector<BigInt>> rows_;
    BigInt zero_;
};

/// C(a,b) with the same out-of-range-gives-0 convention, no table needed.
BigInt binom(long a, long b);

// Alternating binomial sums. Arguments are validated against their
// admissibility ranges; violations throw std::domain_error.

/// theta(p,q,r,s,t) = sum_{i=0}^{p} (-1)^{q-i} C(r,i) C(s-i, t-i),
/// for p <= min(q,r,s,t) and t <= s.
BigInt theta(long p, long q, long r, long s, long t);

/// phi(k,l,m) = sum_{i=0}^{m} (-1)^{m-i} C(k+l, i) C(m+l-i-1, m-i),
/// for l >= 1 and m <= k+l.
BigInt phi(long k, long l, long m);

/// psi(k,m,s) = sum_{i=0}^{min(k,m)} (-1)^{k-i} C(m,i) C(s-i, k-i),
/// for s >= k.
BigInt psi(long k, long m, long s);

/// ||T_X|| = sum_{k=0}^{m} C(n,k) C(n-k-1, m-k), for m < n.
BigInt norm_formula(long m, long n);

struct Counterexample {
    std::vector<long> params;
    std::string got;
    std::string expected;
};

struct IdentityReport {
    std::string name;
    long cases_checked = 0;
    std::vector<Counterexample> counterexamples;

    bool ok() const { return counterexamples.empty(); }
};

/// Checks each of the eight sum identities at every admissible parameter
/// tuple with all parameters <= limit. Failures are collected per identity,
/// never thrown.
std::vector<IdentityReport> verify_identity_suite(int limit);

}  // namespace extop
