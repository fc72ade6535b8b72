#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "nesto/errors.hpp"

namespace nesto {

/// Hard upper bound on ground sizes: subsets are single machine words.
inline constexpr int kMaxGround = 64;

/// A subset of a ground set [m] = {1,...,m}, m <= 64, stored as a bit mask.
/// Element i occupies bit i-1.  Plain value type; the ground size is carried
/// by the containing BuildingSet or passed alongside where it matters.
class Subset {
  public:
    constexpr Subset() = default;
    constexpr explicit Subset(std::uint64_t mask) : mask_(mask) {}

    /// Builds a subset from 1-based indices.  Throws input_error on indices
    /// outside [1, 64] or duplicates.
    static Subset of(const std::vector<int>& indices);

    /// Full ground set {1,...,m}.
    static Subset ground(int m);

    /// Singleton {i}.
    static constexpr Subset singleton(int i) { return Subset(std::uint64_t{1} << (i - 1)); }

    /// Parses "{1,2,4}" (ascending or not; canonicalized).  Throws input_error.
    static Subset parse(const std::string& text);

    constexpr std::uint64_t mask() const { return mask_; }
    constexpr bool empty() const { return mask_ == 0; }
    constexpr int size() const { return std::popcount(mask_); }
    constexpr bool contains(int i) const { return (mask_ >> (i - 1)) & 1; }
    constexpr bool subset_of(const Subset& other) const { return (mask_ & ~other.mask_) == 0; }
    constexpr bool intersects(const Subset& other) const { return (mask_ & other.mask_) != 0; }
    constexpr bool disjoint(const Subset& other) const { return (mask_ & other.mask_) == 0; }

    constexpr Subset unite(const Subset& other) const { return Subset(mask_ | other.mask_); }
    constexpr Subset intersect(const Subset& other) const { return Subset(mask_ & other.mask_); }
    constexpr Subset minus(const Subset& other) const { return Subset(mask_ & ~other.mask_); }

    /// Smallest element, or 0 if empty.
    constexpr int min_element() const {
        return mask_ == 0 ? 0 : std::countr_zero(mask_) + 1;
    }

    /// Largest element, or 0 if empty.
    constexpr int max_element() const {
        return mask_ == 0 ? 0 : 64 - std::countl_zero(mask_);
    }

    /// Ascending 1-based indices.
    std::vector<int> elements() const;

    /// "{1,2,4}"; "{}" when empty.
    std::string str() const;

    constexpr bool operator==(const Subset&) const = default;

    /// Lexicographic order on the ascending index sequences: the set whose
    /// first differing element is smaller comes first, and a strict prefix
    /// precedes its extensions ({1,4} < {2,3}, {1} < {1,2}).
    constexpr bool lex_less(const Subset& other) const {
        std::uint64_t diff = mask_ ^ other.mask_;
        if (diff == 0) return false;
        std::uint64_t low = diff & (~diff + 1);
        std::uint64_t above = ~(low | (low - 1));
        if (mask_ & low) return (other.mask_ & above) != 0;
        return (mask_ & above) == 0;
    }

  private:
    std::uint64_t mask_ = 0;
};

/// Canonical order used everywhere for deterministic output:
/// cardinality first, then lexicographic on ascending indices.
constexpr bool canonical_less(const Subset& a, const Subset& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.lex_less(b);
}

}  // namespace nesto
