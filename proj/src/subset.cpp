#include "extop/subset.hpp"

namespace extop {

std::vector<Subset> enumerate_k_subsets_of(const Subset& s, int k) {
    std::vector<Subset> out;
    std::vector<int> pool = s.members();
    int n = static_cast<int>(pool.size());
    if (k < 0 || k > n) return out;
    if (k == 0) {
        out.push_back(Subset{});
        return out;
    }
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
        Subset cur;
        for (int i : idx) cur = cur.with(pool[static_cast<std::size_t>(i)]);
        out.push_back(cur);
        // next k-combination of {0..n-1} in lexicographic order
        int pos = k - 1;
        while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == n - k + pos) --pos;
        if (pos < 0) break;
        ++idx[static_cast<std::size_t>(pos)];
        for (int i = pos + 1; i < k; ++i)
            idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
    }
    return out;
}

std::vector<Subset> enumerate_points(const SigmaSpace& space) {
    std::vector<Subset> out;
    Subset full = space.ground.full();
    int top = std::min(space.cap, space.ground.size);
    for (int k = 0; k <= top; ++k) {
        auto layer = enumerate_k_subsets_of(full, k);
        out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
}

std::vector<Subset> enumerate_subsets_of(const Subset& s) {
    std::vector<Subset> out;
    std::uint64_t bits = s.bits();
    // standard submask walk, reordered to start from the empty set
    std::uint64_t sub = 0;
    while (true) {
        out.push_back(Subset(sub));
        if (sub == bits) break;
        sub = (sub - bits) & bits;
    }
    return out;
}

}  // namespace extop
