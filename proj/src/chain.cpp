#include "extop/chain.hpp"

#include <algorithm>
#include <stdexcept>

#include "extop/rng.hpp"

namespace extop {

OrderMode order_mode_from_string(const std::string& s) {
    if (s == "random") return OrderMode::Random;
    if (s == "reverse") return OrderMode::Reverse;
    if (s == "natural") return OrderMode::Natural;
    throw std::invalid_argument("unknown order mode '" + s + "'");
}

std::string to_string(OrderMode mode) {
    switch (mode) {
        case OrderMode::Random: return "random";
        case OrderMode::Reverse: return "reverse";
        case OrderMode::Natural: return "natural";
    }
    throw std::logic_error("unreachable");
}

int BetaOrderFamily::position(int beta, int x) const {
    if (beta < 0 || beta >= static_cast<int>(orders.size()) || x < 0 || x >= beta)
        throw std::domain_error("BetaOrderFamily: position query outside {0..beta-1}");
    const auto& ord = orders[static_cast<std::size_t>(beta)];
    for (int pos = 0; pos < beta; ++pos)
        if (ord[static_cast<std::size_t>(pos)] == x) return pos;
    throw std::logic_error("BetaOrderFamily: order is not a permutation");
}

BetaOrderFamily BetaOrderFamily::induced_on(const Subset& y) const {
    std::vector<int> elems = y.members();
    BetaOrderFamily out;
    out.ground_size = static_cast<int>(elems.size());
    out.mode = mode;
    out.seed = seed;
    out.orders.resize(elems.size());
    for (std::size_t bi = 0; bi < elems.size(); ++bi) {
        int beta = elems[bi];
        // keep only predecessors that survive in Y, reindexed
        for (int x : orders[static_cast<std::size_t>(beta)]) {
            auto it = std::find(elems.begin(), elems.begin() + static_cast<long>(bi), x);
            if (it != elems.begin() + static_cast<long>(bi))
                out.orders[bi].push_back(static_cast<int>(it - elems.begin()));
        }
    }
    return out;
}

BetaOrderFamily make_beta_orders(int ground_size, OrderMode mode, std::uint64_t seed) {
    if (ground_size < 0 || ground_size > 64)
        throw std::domain_error("make_beta_orders: ground size must be in [0, 64]");
    BetaOrderFamily fam;
    fam.ground_size = ground_size;
    fam.mode = mode;
    fam.seed = seed;
    fam.orders.resize(static_cast<std::size_t>(ground_size));
    for (int beta = 0; beta < ground_size; ++beta) {
        auto& ord = fam.orders[static_cast<std::size_t>(beta)];
        switch (mode) {
            case OrderMode::Natural:
                for (int x = 0; x < beta; ++x) ord.push_back(x);
                break;
            case OrderMode::Reverse:
                for (int x = beta - 1; x >= 0; --x) ord.push_back(x);
                break;
            case OrderMode::Random: {
                Rng rng(seed * 0x51cc2a10f1ebce9fULL + static_cast<std::uint64_t>(beta) + 1);
                ord = rng.permutation(beta);
                break;
            }
        }
    }
    return fam;
}

Subset gamma_set(const Subset& a, int i, const BetaOrderFamily& family, int m) {
    std::vector<int> elems = a.members();
    int k = static_cast<int>(elems.size());
    if (m < 1) throw std::domain_error("gamma_set: m must be >= 1");
    if (i < m || i > k) throw std::domain_error("gamma_set: index i must satisfy m <= i <= |A|");
    int alpha_i = elems[static_cast<std::size_t>(i - 1)];
    Subset predecessors;
    for (int t = 0; t < i - 1; ++t) predecessors = predecessors.with(elems[static_cast<std::size_t>(t)]);
    Subset out;
    int taken = 0;
    for (int x : family.orders[static_cast<std::size_t>(alpha_i)]) {
        if (taken == m - 1) break;
        if (predecessors.contains(x)) {
            out = out.with(x);
            ++taken;
        }
    }
    if (taken != m - 1) throw std::logic_error("gamma_set: fewer than m-1 predecessors");
    return out;
}

ExtensionKernel chain_kernel(int ground_size, const BetaOrderFamily& family, int m, int n) {
    if (!(1 <= m && m < n && n <= ground_size))
        throw std::domain_error("chain_kernel: need 1 <= m < n <= ground size");
    if (family.ground_size != ground_size)
        throw std::domain_error("chain_kernel: order family ground size mismatch");
    ExtensionKernel k(ground_size, m, n);
    for (const Subset& a : enumerate_points(k.domain())) {
        int card = a.card();
        if (card <= m) {
            k.set_entry(a, SignedMeasure::dirac(a));
            continue;
        }
        std::vector<int> elems = a.members();
        SignedMeasure mu;
        for (int i = m; i <= card; ++i) {
            Subset gamma = gamma_set(a, i, family, m);
            mu.add(gamma.with(elems[static_cast<std::size_t>(i - 1)]), Rational(1));
            if (i >= m + 1) mu.add(gamma, Rational(-1));
        }
        k.set_entry(a, std::move(mu));
    }
    return k;
}

ChainNormReport chain_norm_report(const ExtensionKernel& k) {
    ChainNormReport rep;
    rep.norm = operator_norm(k);
    rep.bound = 2L * k.n() - 2L * k.m() + 1;
    rep.attained = (rep.norm == Rational(rep.bound));
    if (rep.attained) rep.witness = operator_norm_witness(k);
    return rep;
}

bool is_late_scenario(const BetaOrderFamily& family, const Subset& b, const Subset& c) {
    if (!(b & c).empty()) return false;
    for (int beta : b.members())
        for (int cc : c.members()) {
            if (cc >= beta) continue;
            for (int bb : b.members())
                if (bb < beta && family.position(beta, cc) < family.position(beta, bb))
                    return false;
        }
    return true;
}

bool late_continuity_check(const ExtensionKernel& prebuilt, const BetaOrderFamily& family,
                           const Subset& b, const Subset& c) {
    if (!(b & c).empty())
        throw std::domain_error("late_continuity_check: B and C must be disjoint");
    if ((b | c).card() > prebuilt.n())
        throw std::domain_error("late_continuity_check: |B U C| exceeds n");
    if (!is_late_scenario(family, b, c))
        throw std::domain_error("scenario not late");
    return intersect_pushforward(prebuilt.at(b | c), b) == prebuilt.at(b);
}

bool late_continuity_check(const BetaOrderFamily& family, int m, int n, const Subset& b,
                           const Subset& c) {
    return late_continuity_check(chain_kernel(family.ground_size, family, m, n), family, b, c);
}

}  // namespace extop
