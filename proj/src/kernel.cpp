#include "extop/kernel.hpp"

#include <algorithm>

namespace extop {

bool is_extension_kernel(const ExtensionKernel& k) {
    for (const Subset& point : enumerate_points(k.domain()))
        if (!k.has_entry(point)) return false;
    for (const auto& [point, mu] : k.entries()) {
        for (const auto& [atom, c] : mu.atoms())
            if (atom.card() > k.m()) return false;
        if (point.card() <= k.m() && mu != SignedMeasure::dirac(point)) return false;
    }
    return true;
}

Rational operator_norm(const ExtensionKernel& k) {
    Rational best(0);
    for (const auto& [point, mu] : k.entries()) best = std::max(best, mu.tv_norm());
    return best;
}

Subset operator_norm_witness(const ExtensionKernel& k) {
    Rational best = operator_norm(k);
    for (const auto& [point, mu] : k.entries())
        if (mu.tv_norm() == best) return point;
    return Subset{};
}

PointFunction apply_kernel(const ExtensionKernel& k, const PointFunction& f) {
    PointFunction out;
    for (const auto& [point, mu] : k.entries()) {
        Rational value(0);
        for (const auto& [atom, c] : mu.atoms()) {
            auto it = f.find(atom);
            if (it == f.end())
                throw std::invalid_argument("apply_kernel: incomplete function (missing " +
                                            atom.to_string() + ")");
            value += c * it->second;
        }
        out[point] = value;
    }
    return out;
}

Injection::Injection(int src, int tgt, std::vector<int> img)
    : source_size(src), target_size(tgt), image(std::move(img)) {
    if (src < 0 || tgt < 0 || static_cast<int>(image.size()) != src)
        throw std::domain_error("Injection: image size must equal source size");
    Subset seen;
    for (int y : image) {
        if (y < 0 || y >= tgt) throw std::domain_error("Injection: image element out of range");
        if (seen.contains(y)) throw std::domain_error("Injection: map is not injective");
        seen = seen.with(y);
    }
}

Injection Injection::inclusion(int src, int tgt) {
    if (src > tgt) throw std::domain_error("Injection: inclusion needs source <= target");
    std::vector<int> img(static_cast<std::size_t>(src));
    for (int i = 0; i < src; ++i) img[static_cast<std::size_t>(i)] = i;
    return Injection(src, tgt, std::move(img));
}

Subset Injection::preimage(const Subset& a) const {
    Subset out;
    for (int i = 0; i < source_size; ++i)
        if (a.contains(image[static_cast<std::size_t>(i)])) out = out.with(i);
    return out;
}

Subset Injection::forward(const Subset& b) const {
    Subset out;
    for (int i : b.members()) {
        if (i >= source_size) throw std::domain_error("Injection: subset outside source ground");
        out = out.with(image[static_cast<std::size_t>(i)]);
    }
    return out;
}

PointFunction pullback_function(const Injection& u, const PointFunction& f, int cap) {
    PointFunction out;
    SigmaSpace target(GroundSet(u.target_size), cap);
    for (const Subset& a : enumerate_points(target)) {
        auto it = f.find(u.preimage(a));
        if (it == f.end())
            throw std::invalid_argument("pullback_function: incomplete function");
        out[a] = it->second;
    }
    return out;
}

Subset reindex_into(const Subset& s, const Subset& y) {
    if (!s.subset_of(y)) throw std::domain_error("reindex_into: subset not inside Y");
    std::vector<int> order = y.members();
    Subset out;
    for (int pos = 0; pos < static_cast<int>(order.size()); ++pos)
        if (s.contains(order[static_cast<std::size_t>(pos)])) out = out.with(pos);
    return out;
}

ExtensionKernel restrict_kernel(const ExtensionKernel& k, const Subset& y) {
    if (!k.ground().holds(y))
        throw std::domain_error("restrict_kernel: Y is not a subset of the ground set");
    ExtensionKernel out(y.card(), k.m(), k.n());
    for (const Subset& z : enumerate_points(out.domain())) {
        Subset z_in_x;
        std::vector<int> order = y.members();
        for (int pos : z.members()) z_in_x = z_in_x.with(order[static_cast<std::size_t>(pos)]);
        SignedMeasure pushed = intersect_pushforward(k.at(z_in_x), y);
        SignedMeasure reindexed;
        for (const auto& [atom, c] : pushed.atoms()) reindexed.add(reindex_into(atom, y), c);
        out.set_entry(z, std::move(reindexed));
    }
    return out;
}

}  // namespace extop
