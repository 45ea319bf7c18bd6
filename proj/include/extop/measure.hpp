#pragma once

#include <functional>
#include <map>

#include "extop/rational.hpp"
#include "extop/subset.hpp"

namespace extop {

/// Finitely supported signed measure on points chi_A of a sigma-space,
/// i.e. a finite map Subset -> Rational. Zero coefficients are never stored,
/// so support queries, equality and the total-variation norm are canonical.
class SignedMeasure {
public:
    using AtomMap = std::map<Subset, Rational, SubsetListLex>;

    SignedMeasure() = default;

    static SignedMeasure dirac(const Subset& a) {
        SignedMeasure mu;
        mu.add(a, Rational(1));
        return mu;
    }

    void add(const Subset& atom, const Rational& coeff) {
        if (coeff.is_zero()) return;
        auto [it, inserted] = atoms_.try_emplace(atom, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second.is_zero()) atoms_.erase(it);
        }
    }

    Rational coeff(const Subset& atom) const {
        auto it = atoms_.find(atom);
        return it == atoms_.end() ? Rational(0) : it->second;
    }

    const AtomMap& atoms() const { return atoms_; }
    std::size_t support_size() const { return atoms_.size(); }
    bool is_zero() const { return atoms_.empty(); }

    /// Sum of |coefficient| over all atoms; the dual norm on C(K)*.
    Rational tv_norm() const {
        Rational t(0);
        for (const auto& [atom, c] : atoms_) t += c.abs();
        return t;
    }

    /// mu(whole space) = sum of all coefficients.
    Rational total_mass() const {
        Rational t(0);
        for (const auto& [atom, c] : atoms_) t += c;
        return t;
    }

    /// mu(O_B) where O_B = { chi_C : B subset of C } is the superset cylinder.
    Rational cylinder_mass(const Subset& base) const {
        Rational t(0);
        for (const auto& [atom, c] : atoms_)
            if (base.subset_of(atom)) t += c;
        return t;
    }

    SignedMeasure& operator+=(const SignedMeasure& o) {
        for (const auto& [atom, c] : o.atoms_) add(atom, c);
        return *this;
    }
    SignedMeasure& operator-=(const SignedMeasure& o) {
        for (const auto& [atom, c] : o.atoms_) add(atom, -c);
        return *this;
    }
    friend SignedMeasure operator+(SignedMeasure a, const SignedMeasure& b) { return a += b; }
    friend SignedMeasure operator-(SignedMeasure a, const SignedMeasure& b) { return a -= b; }

    SignedMeasure scaled(const Rational& factor) const {
        SignedMeasure out;
        for (const auto& [atom, c] : atoms_) out.add(atom, c * factor);
        return out;
    }

    friend bool operator==(const SignedMeasure&, const SignedMeasure&) = default;

private:
    AtomMap atoms_;
};

/// Image measure under a total map on atoms; masses at equal images are
/// summed and zero results dropped, so total variation never increases.
SignedMeasure pushforward(const SignedMeasure& mu,
                          const std::function<Subset(const Subset&)>& h);

/// pushforward under C -> C & mask (the weak* limit surrogate).
SignedMeasure intersect_pushforward(const SignedMeasure& mu, const Subset& mask);

}  // namespace extop
