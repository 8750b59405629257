#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "cofin/upset.hpp"

namespace cofin {

// Strictly increasing injection of the naturals, identified with its infinite
// image: the map sends k to the k-th member of the image. Composition,
// ordering and meets all reduce to exact set computations on the image.
class EnumMap {
public:
    explicit EnumMap(UpSet image);
    static EnumMap identity() { return EnumMap(UpSet::naturals()); }
    static EnumMap evens() { return EnumMap(UpSet::residue(2, 0)); }

    const UpSet& image() const { return image_; }
    std::uint64_t operator()(std::uint64_t k) const { return select(image_, k); }
    bool is_identity() const { return image_ == UpSet::naturals(); }
    // image cofinite: the submonoid closed under meets; otherwise the map sits
    // in the two-sided ideal of co-infinite-image maps
    bool cofinite_image() const { return is_cofinite(image_); }
    bool coinfinite_image() const { return is_split(image_); }

    bool operator==(const EnumMap&) const = default;

private:
    UpSet image_;
};

inline bool operator<(const EnumMap& a, const EnumMap& b) { return a.image() < b.image(); }

EnumMap compose(const EnumMap& u, const EnumMap& v);  // u after v
// u factors through v, i.e. Im(u) ⊆ Im(v).
bool leq(const EnumMap& u, const EnumMap& v);
// Greatest lower bound when the images intersect infinitely; nullopt otherwise.
std::optional<EnumMap> meet(const EnumMap& u, const EnumMap& v);
// The w with compose(v, w) == u, when leq(u, v).
std::optional<EnumMap> factor_through(const EnumMap& u, const EnumMap& v);

// Enumeration of the complement of a finite set K.
EnumMap sigma(const UpSet& k_finite);
inline EnumMap sigma_point(std::uint64_t n) { return sigma(UpSet::singleton(n)); }
// Single-point factors [s_{k_r}, ..., s_{k_1}] (k_1 < ... < k_r) whose
// composition in listed order equals sigma(K).
std::vector<EnumMap> factor_sigma(const UpSet& k_finite);

// Factors a co-infinite-image map u as compose(v, w) with both factors
// co-infinite; throws DomainError when the image of u is cofinite.
std::pair<EnumMap, EnumMap> split_coinfinite(const EnumMap& u);
// Constant thinning map: compose(u, densify(u)) always has co-infinite image.
EnumMap densify(const EnumMap& u);

// For u, v with cofinite images: (h, k) with compose(u,h) == compose(v,k),
// both equal to the enumeration of Im(u) ∩ Im(v). Throws when either image is
// co-infinite (images may then be disjoint).
std::pair<EnumMap, EnumMap> atomic_complete(const EnumMap& u, const EnumMap& v);

// Finite-fiber endomap fragment: a tabulated prefix spliced onto an EnumMap
// tail, the index-of-first-member-at-least map of an infinite set, or the
// least-member-at-least rounding map. Enough to evaluate pointwise and to push
// sets through exactly.
class FiniteMap {
public:
    // f(n) = table[n] for n < table.size(), tail(n) otherwise. The tail is
    // injective, so fibers stay finite whatever the table holds.
    struct Prefixed {
        std::vector<std::uint64_t> table;
        EnumMap tail;
    };
    struct RankMap { UpSet of; };   // n -> index of first member >= n
    struct RoundUp { UpSet of; };   // n -> least member >= n

    static FiniteMap prefixed(std::vector<std::uint64_t> table, EnumMap tail);
    static FiniteMap rank_map(UpSet infinite_set);
    static FiniteMap round_up(UpSet infinite_set);
    // Deterministic finite map with f(m) = n: zero table up to m, n at m, and a
    // tail that never revisits the table values.
    static FiniteMap pinned(std::uint64_t m, std::uint64_t n);

    std::uint64_t operator()(std::uint64_t n) const;
    UpSet preimage(const UpSet& s) const;
    // Forward image of an arbitrary set; Prefixed only (the laws exercised
    // here never need partial images of rank/rounding maps).
    UpSet image_of(const UpSet& s) const;
    UpSet full_image() const;

    std::uint64_t cut() const;
    const Prefixed* as_prefixed() const { return std::get_if<Prefixed>(&kind_); }

private:
    std::variant<Prefixed, RankMap, RoundUp> kind_;
    explicit FiniteMap(std::variant<Prefixed, RankMap, RoundUp> k) : kind_(std::move(k)) {}
};

inline FiniteMap retraction(const UpSet& a) { return FiniteMap::rank_map(a); }
inline FiniteMap idempotent(const UpSet& a) { return FiniteMap::round_up(a); }

// The strict record positions {n : f(k) < f(n) for all k < n} of a Prefixed
// map; always co-finite here because the tail increases. Restricted to this
// set, f is strictly increasing, so f resumes being an EnumMap along it.
UpSet record_positions(const FiniteMap& f);

}  // namespace cofin
