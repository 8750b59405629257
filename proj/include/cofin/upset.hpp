#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "cofin/error.hpp"

namespace cofin {

using Bits = std::vector<std::uint8_t>;

enum class SetTag { Finite, Cofinite, Split };

// Trichotomy tag; count is |A| for Finite, |complement| for Cofinite, 0 for Split.
struct SetClass {
    SetTag tag;
    std::uint64_t count = 0;
    bool operator==(const SetClass&) const = default;
};

// Ultimately periodic subset of the naturals, kept in canonical form:
// membership of n is prefix[n] for n < threshold and wheel[(n - threshold) mod period]
// otherwise. Canonical means the wheel has minimal period and the threshold is
// minimal for that period, so structural equality coincides with set equality.
// Values are immutable after construction.
class UpSet {
public:
    UpSet() = default;  // empty set

    // Normalizes an arbitrary raw encoding. period must be >= 1.
    static UpSet from_raw(Bits prefix, Bits wheel);
    // Reads threshold + period bits out of a window of known-valid bounds.
    static UpSet from_window(const Bits& window, std::uint64_t threshold, std::uint64_t period);

    static UpSet empty();
    static UpSet naturals();
    static UpSet finite(std::vector<std::uint64_t> elems);
    static UpSet singleton(std::uint64_t n) { return finite({n}); }
    // {modulus*k + rep : k in N}
    static UpSet residue(std::uint64_t modulus, std::uint64_t rep);
    // {n : n >= t}
    static UpSet from_threshold(std::uint64_t t);

    bool contains(std::uint64_t n) const;

    std::uint64_t threshold() const { return prefix_.size(); }
    std::uint64_t period() const { return wheel_.size(); }
    const Bits& prefix() const { return prefix_; }
    const Bits& wheel() const { return wheel_; }

    std::uint64_t prefix_ones() const;
    std::uint64_t wheel_ones() const;  // members per period

    bool is_empty() const { return prefix_ones() == 0 && wheel_ones() == 0; }

    bool operator==(const UpSet&) const = default;

private:
    Bits prefix_;      // length = threshold
    Bits wheel_{0};    // length = period >= 1
    void canonicalize();
};

// Deterministic total order (threshold, period, prefix, wheel).
int compare(const UpSet& a, const UpSet& b);
inline bool operator<(const UpSet& a, const UpSet& b) { return compare(a, b) < 0; }

SetClass classify(const UpSet& a);
bool is_finite(const UpSet& a);
bool is_cofinite(const UpSet& a);
bool is_split(const UpSet& a);
bool is_infinite(const UpSet& a);
// Exact size; throws DomainError on infinite sets.
std::uint64_t cardinality(const UpSet& a);
std::vector<std::uint64_t> elements(const UpSet& a);  // finite sets only

enum class SetOp { Union, Intersect, Difference };

UpSet combine(SetOp op, const UpSet& a, const UpSet& b);
UpSet set_union(const UpSet& a, const UpSet& b);
UpSet set_intersect(const UpSet& a, const UpSet& b);
UpSet set_difference(const UpSet& a, const UpSet& b);
UpSet complement(const UpSet& a);

bool subset(const UpSet& a, const UpSet& b);
// A \ B finite.
bool almost_subset(const UpSet& a, const UpSet& b);

// k-th member in increasing order (0-based). Throws EnumerationOutOfRange when
// a is finite and k >= |a|.
std::uint64_t select(const UpSet& a, std::uint64_t k);
// Number of members strictly below n. Total.
std::uint64_t rank(const UpSet& a, std::uint64_t n);

// (even-indexed members, odd-indexed members); requires a infinite.
std::pair<UpSet, UpSet> split_alternate(const UpSet& a);

// Forward image {select(base, s) : s in s_set} of s_set under the increasing
// enumeration of base; base must be infinite. Exact.
UpSet image_under(const UpSet& base, const UpSet& s_set);
// Preimage {k : select(base, k) in s_set}; base must be infinite. Exact.
UpSet preimage_under(const UpSet& base, const UpSet& s_set);

// The purely periodic set that agrees with a from its threshold on (phase kept
// relative to position 0). Used as the class representative for "equal modulo
// a finite difference".
UpSet periodic_extension(const UpSet& a);

}  // namespace cofin
