#include "extop/freeset.hpp"

#include <algorithm>
#include <stdexcept>

namespace extop {

SetValuedMap SetValuedMap::bounded(int arity, Evaluator eval) {
    if (arity < 0) throw std::domain_error("SetValuedMap: negative arity");
    SetValuedMap s;
    s.arity_ = arity;
    s.eval_ = std::move(eval);
    return s;
}

SetValuedMap SetValuedMap::from_table(Table table) {
    SetValuedMap s;
    for (const auto& [in, out] : table) s.arity_ = std::max(s.arity_, in.card());
    s.table_ = std::move(table);
    return s;
}

Subset SetValuedMap::operator()(const Subset& a) const {
    if (eval_) return a.card() <= arity_ ? eval_(a) : Subset{};
    auto it = table_.find(a);
    return it == table_.end() ? Subset{} : it->second;
}

std::vector<Subset> SetValuedMap::relevant_inputs_within(const Subset& pool) const {
    std::vector<Subset> out;
    if (eval_) {
        for (int k = 0; k <= std::min(arity_, pool.card()); ++k)
            for (const Subset& a : enumerate_k_subsets_of(pool, k)) out.push_back(a);
    } else {
        for (const auto& [in, img] : table_)
            if (in.subset_of(pool)) out.push_back(in);
        // the empty input is always relevant (maps to empty when unlisted)
        if (table_.find(Subset{}) == table_.end()) out.push_back(Subset{});
    }
    return out;
}

void SetValuedMap::require_disjoint_images(int ground_size, int m) const {
    Subset full = GroundSet(ground_size).full();
    for (int k = 0; k <= std::min(m, ground_size); ++k)
        for (const Subset& a : enumerate_k_subsets_of(full, k))
            if (!((*this)(a) & a).empty())
                throw std::invalid_argument("SetValuedMap: image of " + a.to_string() +
                                            " meets its argument");
}

namespace {

// Adding y to the partial free set Y stays consistent iff y avoids every
// image of a subset of Y, and every subset through y has an image avoiding
// Y U {y}.
bool free_set_extension_ok(const SetValuedMap& s, const Subset& y_partial, int y, int m) {
    Subset grown = y_partial.with(y);
    for (int k = 0; k <= std::min(m, y_partial.card()); ++k)
        for (const Subset& a : enumerate_k_subsets_of(y_partial, k))
            if (s(a).contains(y)) return false;
    for (int k = 0; k < std::min(m, grown.card()); ++k)
        for (const Subset& rest : enumerate_k_subsets_of(y_partial, k))
            if (!((s(rest.with(y)) & grown)).empty()) return false;
    return true;
}

bool free_set_search(const SetValuedMap& s, int ground_size, int m, int p, int start,
                     Subset& partial) {
    if (partial.card() == p) return true;
    for (int y = start; y < ground_size; ++y) {
        if (ground_size - y < p - partial.card()) break;
        if (!free_set_extension_ok(s, partial, y, m)) continue;
        partial = partial.with(y);
        if (free_set_search(s, ground_size, m, p, y + 1, partial)) return true;
        partial = partial.without(y);
    }
    return false;
}

}  // namespace

std::optional<Subset> greedy_free_set(const SetValuedMap& s, int ground_size, int m, int p) {
    if (p < 0 || m < 0) throw std::domain_error("greedy_free_set: negative parameters");
    s.require_disjoint_images(ground_size, m);
    Subset partial;
    if (free_set_search(s, ground_size, m, p, 0, partial)) return partial;
    return std::nullopt;
}

namespace {

Subset forbidden_union(const SetValuedMap& s, const Subset& pool) {
    Subset out;
    for (const Subset& a : s.relevant_inputs_within(pool)) out = out | s(a);
    return out;
}

bool backward_pick(const SetValuedMap& s, const std::vector<Subset>& blocks, int j,
                   std::vector<int>& chosen) {
    if (j < 0) return true;
    Subset tail;
    for (std::size_t t = static_cast<std::size_t>(j) + 1; t < blocks.size(); ++t)
        tail = tail.with(chosen[t]);
    Subset forbidden = forbidden_union(s, tail);
    for (int cand : blocks[static_cast<std::size_t>(j)].members()) {
        if (forbidden.contains(cand)) continue;
        chosen[static_cast<std::size_t>(j)] = cand;
        if (backward_pick(s, blocks, j - 1, chosen)) return true;
    }
    return false;
}

}  // namespace

std::optional<ChainWitness> block_free_chain(const SetValuedMap& s, int ground_size, int n,
                                             int block_size) {
    if (block_size < 1) throw std::domain_error("block_free_chain: block size must be >= 1");
    if (n < 1) throw std::domain_error("block_free_chain: need n >= 1");

    std::vector<Subset> blocks;
    Subset used;
    for (int j = 0; j < n; ++j) {
        Subset forbidden = forbidden_union(s, used);
        Subset block;
        for (int x = 0; x < ground_size && block.card() < block_size; ++x)
            if (!used.contains(x) && !forbidden.contains(x)) block = block.with(x);
        if (block.card() < block_size) return std::nullopt;
        blocks.push_back(block);
        used = used | block;
    }

    std::vector<int> chosen(static_cast<std::size_t>(n), -1);
    if (!backward_pick(s, blocks, n - 1, chosen)) return std::nullopt;
    // blocks are filled smallest-first against monotone forbidden sets, so
    // the per-block choices are already increasing
    for (int j = 1; j < n; ++j)
        if (chosen[static_cast<std::size_t>(j - 1)] >= chosen[static_cast<std::size_t>(j)])
            throw std::logic_error("block_free_chain: blocks out of order");
    return ChainWitness{chosen};
}

bool verify_chain_witness(const SetValuedMap& s, const ChainWitness& w) {
    int n = static_cast<int>(w.z.size());
    for (int i = 1; i < n; ++i)
        if (w.z[static_cast<std::size_t>(i - 1)] >= w.z[static_cast<std::size_t>(i)])
            throw std::domain_error("verify_chain_witness: witness must be strictly increasing");

    Subset all = Subset::from_members(w.z);
    for (const Subset& index_set : enumerate_subsets_of(all)) {
        // index_set holds the chosen z values; recover lo/hi by rank
        Subset image = s(index_set);
        for (int j = 0; j < n; ++j) {
            int zj = w.z[static_cast<std::size_t>(j)];
            bool outside = index_set.empty() ||
                           zj < index_set.min_element() || zj > index_set.max_element();
            if (outside && image.contains(zj)) return false;
        }
    }
    return true;
}

Subset extract_S_A(const ExtensionKernel& k, const Subset& a, const Rational& eps_prime) {
    if (a.card() > k.m()) throw std::domain_error("extract_S_A: |A| must be <= m");
    if (eps_prime <= Rational(0)) throw std::domain_error("extract_S_A: eps' must be positive");

    Subset s_a;
    Subset full = k.ground().full();
    auto bases = enumerate_subsets_of(a);
    while (true) {
        std::map<int, long> violation_count;
        Subset pool = full.minus(a).minus(s_a);
        // B = A itself (extra = 0) contributes no removable element; a kernel
        // whose own entry at chi_A misbehaves is beyond what S_A can fix.
        for (int extra = 0; extra + a.card() <= k.n(); ++extra) {
            for (const Subset& d : enumerate_k_subsets_of(pool, extra)) {
                Subset b = a | d;
                const SignedMeasure& mu = k.at(b);
                for (const Subset& base : bases) {
                    if ((mu.cylinder_mass(base) - Rational(1)).abs() < eps_prime) continue;
                    for (int x : d.members()) ++violation_count[x];
                }
            }
        }
        if (violation_count.empty()) return s_a;
        int pick = -1;
        long best = -1;
        for (const auto& [x, cnt] : violation_count)
            if (cnt > best) {
                best = cnt;
                pick = x;
            }
        s_a = s_a.with(pick);
    }
}

bool CertificateRegion::contains(const Subset& point) const {
    if (kind == "atom") return point == window;
    return window.subset_of(point) && point != excluded_lo && point != excluded_hi;
}

std::optional<LowerBoundCertificate> lower_bound_certificate(const ExtensionKernel& k,
                                                             const Rational& epsilon) {
    int n = std::min(k.n(), k.ground_size());
    long width = 2L * n - 2L * k.m() + 1;
    Rational eps_prime = epsilon / Rational(3 * width);
    int block = std::max(1, k.ground_size() / (2 * n));
    return lower_bound_certificate(k, epsilon, eps_prime, block);
}

std::optional<LowerBoundCertificate> lower_bound_certificate(const ExtensionKernel& k,
                                                             const Rational& epsilon,
                                                             const Rational& eps_prime,
                                                             int block_size) {
    if (epsilon <= Rational(0)) throw std::domain_error("lower_bound_certificate: eps > 0 required");
    const int m = k.m();
    const int n = std::min(k.n(), k.ground_size());
    const long width = 2L * n - 2L * m + 1;

    // S_A for every A in [X]^{<= m}; larger inputs map to the empty set.
    SetValuedMap::Table table;
    Subset full = k.ground().full();
    for (int card = 0; card <= m; ++card)
        for (const Subset& a : enumerate_k_subsets_of(full, card)) {
            Subset img = extract_S_A(k, a, eps_prime);
            if (!img.empty()) table[a] = img;
        }
    SetValuedMap s = SetValuedMap::from_table(std::move(table));

    auto witness = block_free_chain(s, k.ground_size(), n, block_size);
    if (!witness) return std::nullopt;
    if (!verify_chain_witness(s, *witness))
        throw std::logic_error("block_free_chain returned an unverified witness");

    LowerBoundCertificate cert;
    cert.z = *witness;
    cert.mu = k.at(cert.z.as_subset());
    cert.epsilon_prime = eps_prime;

    // mu(O_empty) ~ 1 is forced because the witness also dodges S_empty; it
    // anchors the partition bound below.
    if ((cert.mu.total_mass() - Rational(1)).abs() >= eps_prime)
        throw std::runtime_error("certificate invalid: total mass out of tolerance");

    auto window = [&](int i, int len) {  // {z_i, ..., z_{i+len-1}}, i 1-based
        Subset w;
        for (int t = 0; t < len; ++t)
            w = w.with(cert.z.z[static_cast<std::size_t>(i - 1 + t)]);
        return w;
    };

    for (int i = 1; i <= n - m + 1; ++i) {
        CertificateRegion r;
        r.kind = "atom";
        r.window = window(i, m);
        r.mass = cert.mu.coeff(r.window);
        if ((r.mass - Rational(1)).abs() >= eps_prime)
            throw std::runtime_error("certificate invalid: window atom mass out of tolerance");
        cert.regions.push_back(std::move(r));
    }
    for (int i = 2; i <= n - m + 1; ++i) {
        CertificateRegion r;
        r.kind = "cylinder";
        r.window = window(i, m - 1);
        r.excluded_lo = window(i - 1, m);
        r.excluded_hi = window(i, m);
        r.mass = cert.mu.cylinder_mass(r.window) - cert.mu.coeff(r.excluded_lo) -
                 cert.mu.coeff(r.excluded_hi);
        if ((r.mass + Rational(1)).abs() >= Rational(3) * eps_prime)
            throw std::runtime_error("certificate invalid: cylinder mass out of tolerance");
        cert.regions.push_back(std::move(r));
    }

    // Pairwise disjointness of the regions as point sets of sigma_m; fails
    // only for m <= 2 at larger n, where the punctured cylinders overlap.
    cert.regions_disjoint = true;
    SigmaSpace atoms(k.ground(), m);
    auto points = enumerate_points(atoms);
    for (std::size_t r1 = 0; r1 + 1 < cert.regions.size() && cert.regions_disjoint; ++r1)
        for (std::size_t r2 = r1 + 1; r2 < cert.regions.size() && cert.regions_disjoint;
             ++r2)
            for (const Subset& pt : points)
                if (cert.regions[r1].contains(pt) && cert.regions[r2].contains(pt)) {
                    cert.regions_disjoint = false;
                    break;
                }

    // Sound partition: the n-m+1 window atoms, plus the rest of the space.
    Rational partition = 0;
    Rational rest_mass = cert.mu.total_mass();
    for (int i = 1; i <= n - m + 1; ++i) {
        Rational am = cert.mu.coeff(window(i, m));
        partition += am.abs();
        rest_mass -= am;
    }
    partition += rest_mass.abs();
    cert.partition_bound = partition;

    cert.certified_bound = Rational(width) * (Rational(1) - Rational(3) * eps_prime);
    cert.tv = cert.mu.tv_norm();
    if (cert.certified_bound > cert.partition_bound || cert.certified_bound > cert.tv)
        throw std::runtime_error("certificate invalid: certified bound exceeds measured mass");
    return cert;
}

}  // namespace extop
