#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace extop {

/// Subset of a ground set {0..N-1}, stored as a bit mask. Ground sets are
/// capped at 64 elements, which covers every desk-scale computation here.
class Subset {
public:
    constexpr Subset() : bits_(0) {}
    constexpr explicit Subset(std::uint64_t bits) : bits_(bits) {}
    Subset(std::initializer_list<int> members) : bits_(0) {
        for (int e : members) *this = with(e);
    }

    static Subset from_members(const std::vector<int>& members) {
        Subset s;
        for (int e : members) s = s.with(e);
        return s;
    }

    std::uint64_t bits() const { return bits_; }
    int card() const { return std::popcount(bits_); }
    bool empty() const { return bits_ == 0; }
    bool contains(int e) const { return (bits_ >> e) & 1u; }
    bool subset_of(const Subset& o) const { return (bits_ & ~o.bits_) == 0; }

    Subset with(int e) const {
        check_index(e);
        return Subset(bits_ | (std::uint64_t{1} << e));
    }
    Subset without(int e) const {
        check_index(e);
        return Subset(bits_ & ~(std::uint64_t{1} << e));
    }

    friend Subset operator&(Subset a, Subset b) { return Subset(a.bits_ & b.bits_); }
    friend Subset operator|(Subset a, Subset b) { return Subset(a.bits_ | b.bits_); }
    Subset minus(const Subset& o) const { return Subset(bits_ & ~o.bits_); }

    /// Members in increasing order.
    std::vector<int> members() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(card()));
        for (std::uint64_t b = bits_; b != 0; b &= b - 1)
            out.push_back(std::countr_zero(b));
        return out;
    }

    int min_element() const {
        if (bits_ == 0) throw std::domain_error("Subset: min of empty set");
        return std::countr_zero(bits_);
    }
    int max_element() const {
        if (bits_ == 0) throw std::domain_error("Subset: max of empty set");
        return 63 - std::countl_zero(bits_);
    }

    std::string to_string() const {
        std::string s = "{";
        bool first = true;
        for (int e : members()) {
            if (!first) s += ",";
            s += std::to_string(e);
            first = false;
        }
        return s + "}";
    }

    friend bool operator==(const Subset&, const Subset&) = default;

private:
    static void check_index(int e) {
        if (e < 0 || e >= 64) throw std::domain_error("Subset: element index out of range");
    }
    std::uint64_t bits_;
};

/// Orders subsets by their sorted member lists, lexicographically; a strict
/// prefix precedes its extensions ({0} < {0,1} < {0,2} < {1}).
struct SubsetListLex {
    bool operator()(const Subset& a, const Subset& b) const {
        std::uint64_t x = a.bits(), y = b.bits();
        if (x == y) return false;
        std::uint64_t diff = x ^ y;
        int first = std::countr_zero(diff);
        std::uint64_t low = (std::uint64_t{1} << first) - 1;
        // Members below the first difference agree; whoever owns the first
        // differing element has the smaller list unless the other list has
        // already ended there.
        if ((y & low) == y) return false;  // b is a strict prefix of a
        if ((x & low) == x) return true;   // a is a strict prefix of b
        return (x >> first) & 1u;
    }
};

/// Orders subsets by cardinality first, then list-lexicographically.
struct SubsetCardLex {
    bool operator()(const Subset& a, const Subset& b) const {
        if (a.card() != b.card()) return a.card() < b.card();
        return SubsetListLex{}(a, b);
    }
};

struct GroundSet {
    int size = 0;

    explicit GroundSet(int n) : size(n) {
        if (n < 0 || n > 64) throw std::domain_error("GroundSet: size must be in [0, 64]");
    }

    friend bool operator==(const GroundSet&, const GroundSet&) = default;

    Subset full() const {
        return size == 64 ? Subset(~std::uint64_t{0})
                          : Subset((std::uint64_t{1} << size) - 1);
    }
    bool holds(const Subset& s) const { return s.subset_of(full()); }
};

/// The point set of sigma_cap(2^X): all subsets of X with at most cap elements.
struct SigmaSpace {
    GroundSet ground;
    int cap = 0;

    SigmaSpace(GroundSet g, int cap_) : ground(g), cap(cap_) {
        if (cap_ < 0) throw std::domain_error("SigmaSpace: negative cap");
    }
};

/// All subsets of {0..ground-1} with cardinality <= cap, in (cardinality,
/// lexicographic) order. Exhaustive; intended for desk-scale ground sets.
std::vector<Subset> enumerate_points(const SigmaSpace& space);

/// All subsets of the given set (including itself and the empty set).
std::vector<Subset> enumerate_subsets_of(const Subset& s);

/// All subsets of `s` with cardinality exactly k, in lexicographic order.
std::vector<Subset> enumerate_k_subsets_of(const Subset& s, int k);

}  // namespace extop
