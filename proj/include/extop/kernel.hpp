#pragma once

#include <map>
#include <vector>

#include "extop/measure.hpp"
#include "extop/subset.hpp"

namespace extop {

/// Measure-valued kernel of an extension operator T: C(sigma_m) -> C(sigma_n)
/// over a common finite ground set: for every point chi_A with |A| <= n it
/// holds the measure phi(chi_A) = T*(delta_{chi_A}) on sigma_m.
///
/// The extension property (phi(chi_A) = delta_{chi_A} for |A| <= m, all atoms
/// of cardinality <= m) is a checkable predicate, not a constructor guarantee:
/// kernels can also represent candidate operators that fail it.
class ExtensionKernel {
public:
    using EntryMap = std::map<Subset, SignedMeasure, SubsetCardLex>;

    // m = n is allowed here (the identity kernel); the constructions that
    // genuinely extend require m < n themselves.
    ExtensionKernel(int ground_size, int m, int n)
        : ground_(ground_size), m_(m), n_(n) {
        if (m < 0 || n < 0 || m > n)
            throw std::domain_error("ExtensionKernel: need 0 <= m <= n");
    }

    int ground_size() const { return ground_.size; }
    int m() const { return m_; }
    int n() const { return n_; }
    GroundSet ground() const { return ground_; }
    SigmaSpace domain() const { return SigmaSpace(ground_, std::min(n_, ground_.size)); }

    void set_entry(const Subset& point, SignedMeasure mu) {
        if (!ground_.holds(point) || point.card() > n_)
            throw std::domain_error("ExtensionKernel: point outside the domain");
        entries_[point] = std::move(mu);
    }

    bool has_entry(const Subset& point) const { return entries_.count(point) != 0; }

    const SignedMeasure& at(const Subset& point) const {
        auto it = entries_.find(point);
        if (it == entries_.end())
            throw std::domain_error("ExtensionKernel: no entry for point " + point.to_string());
        return it->second;
    }

    const EntryMap& entries() const { return entries_; }

    friend bool operator==(const ExtensionKernel&, const ExtensionKernel&) = default;

private:
    GroundSet ground_;
    int m_;
    int n_;
    EntryMap entries_;
};

/// True iff every entry with |A| <= m is exactly delta_{chi_A}, every point of
/// the domain has an entry, and every atom has cardinality <= m.
bool is_extension_kernel(const ExtensionKernel& k);

/// sup over points of tv_norm(phi(chi_A)); exact. This is ||T|| for the
/// operator the kernel represents.
Rational operator_norm(const ExtensionKernel& k);

/// A point whose entry attains operator_norm, first in (card, lex) order.
Subset operator_norm_witness(const ExtensionKernel& k);

/// Function on the points of a sigma-space, represented exactly.
using PointFunction = std::map<Subset, Rational, SubsetCardLex>;

/// (Tf)(chi_A) = sum_B phi(chi_A){chi_B} f(chi_B) for every domain point A.
/// Throws "incomplete function" if f misses a point in some entry's support.
PointFunction apply_kernel(const ExtensionKernel& k, const PointFunction& f);

/// Injective map between two ground sets; image(i) = target element of source
/// element i.
struct Injection {
    int source_size = 0;
    int target_size = 0;
    std::vector<int> image;

    Injection(int src, int tgt, std::vector<int> img);

    static Injection inclusion(int src, int tgt);

    /// u^{-1}(A) as a subset of the source ground.
    Subset preimage(const Subset& a) const;
    /// u(B) as a subset of the target ground.
    Subset forward(const Subset& b) const;
};

/// e_u(f)(chi_A) = f(chi_{u^{-1}(A)}), materialized on sigma_cap(2^target).
PointFunction pullback_function(const Injection& u, const PointFunction& f, int cap);

/// Kernel of the restricted operator T|_Y = r . T . e on ground Y, obtained by
/// intersect-pushforward of each entry and reindexing Y to {0..|Y|-1}.
ExtensionKernel restrict_kernel(const ExtensionKernel& k, const Subset& y);

/// Reindex a subset of Y to the ground {0..|Y|-1} induced by Y's order.
Subset reindex_into(const Subset& s, const Subset& y);

}  // namespace extop
