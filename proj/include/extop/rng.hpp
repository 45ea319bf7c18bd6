#pragma once

#include <cstdint>
#include <vector>

namespace extop {

/// splitmix64 stream; platform-independent and stable across runs, which the
/// seeded CLI modes and test fixtures rely on.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform-ish value in [0, bound); modulo bias is irrelevant here, only
    /// determinism matters.
    std::uint64_t below(std::uint64_t bound) { return bound == 0 ? 0 : next() % bound; }

    int range(int lo, int hi) {  // inclusive bounds
        return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    /// Fisher-Yates permutation of {0..k-1}.
    std::vector<int> permutation(int k) {
        std::vector<int> p(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) p[static_cast<std::size_t>(i)] = i;
        for (int i = k - 1; i > 0; --i) {
            int j = static_cast<int>(below(static_cast<std::uint64_t>(i) + 1));
            std::swap(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(j)]);
        }
        return p;
    }

private:
    std::uint64_t state_;
};

}  // namespace extop
