#include "extop/measure.hpp"

namespace extop {

SignedMeasure pushforward(const SignedMeasure& mu,
                          const std::function<Subset(const Subset&)>& h) {
    SignedMeasure out;
    for (const auto& [atom, c] : mu.atoms()) out.add(h(atom), c);
    return out;
}

SignedMeasure intersect_pushforward(const SignedMeasure& mu, const Subset& mask) {
    SignedMeasure out;
    for (const auto& [atom, c] : mu.atoms()) out.add(atom & mask, c);
    return out;
}

}  // namespace extop
