#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cofin/error.hpp"
#include "cofin/report.hpp"

namespace cofin::fin {

// X = {0, ..., n-1}; subsets are n-bit masks. Families stay enumerable only at
// desk scale, so n is capped at 5.
struct FinUniverse {
    unsigned n = 0;
    explicit FinUniverse(unsigned n_) : n(n_) {
        if (n > 5) throw DomainError("finite universe capped at n = 5");
    }
    std::uint32_t full_mask() const { return n == 0 ? 0u : ((1u << n) - 1u); }
    std::uint32_t subset_count() const { return 1u << n; }
};

// Family of subsets of a FinUniverse, members sorted ascending by mask.
class FinFamily {
public:
    FinFamily(FinUniverse u, std::vector<std::uint32_t> members);

    const FinUniverse& universe() const { return u_; }
    const std::vector<std::uint32_t>& members() const { return members_; }
    bool has(std::uint32_t mask) const;
    bool empty() const { return members_.empty(); }

    bool is_upper() const { return upper_; }
    bool is_filter() const { return filter_; }
    bool is_lower() const;
    bool is_ideal() const;  // bornology: nonempty, lower, union-closed

    bool operator==(const FinFamily& o) const { return u_.n == o.u_.n && members_ == o.members_; }

private:
    FinUniverse u_;
    std::vector<std::uint32_t> members_;
    bool upper_ = false, filter_ = false;
};

std::string mask_to_string(FinUniverse u, std::uint32_t mask);
std::string family_to_string(const FinFamily& f);

// {W : A ⊆ W}
FinFamily principal_filter(FinUniverse u, std::uint32_t a_mask);
// {W : A ∩ W != ∅} (an upper family; a filter only when |A| = 1)
FinFamily meet_family(FinUniverse u, std::uint32_t a_mask);
// cofinite supersets of A; on a finite universe every subset is cofinite
FinFamily cofinite_superset_family(FinUniverse u, std::uint32_t a_mask);

// Largest filter inside a nonempty upper family: {x : ∀y in S, x∩y in S}.
FinFamily interior(const FinFamily& s);

// Every filter on the universe, sorted by member vector. Exhaustive family scan
// for n <= 4; for n = 5 built from principal filters (the scan would be 2^32
// families), which the n <= 4 scan cross-validates.
std::vector<FinFamily> all_filters(FinUniverse u);

// Heyting implication computed two independent ways: as the largest filter H
// with H ∩ F ⊆ G over the full filter list, and by the closed formula
// {A : ∀U in F, A ∪ U in G}.
FinFamily heyting_bruteforce(const FinFamily& f, const FinFamily& g);
FinFamily heyting_formula(const FinFamily& f, const FinFamily& g);
FinFamily fin_negate(const FinFamily& f);

// Smallest filter containing every listed mask; the empty family generates the
// indiscrete filter {X}.
FinFamily generated_filter(FinUniverse u, std::span<const std::uint32_t> family);

// Complements every member; filters and bornologies swap.
FinFamily dualize(const FinFamily& f);

std::uint32_t limit_mask(const FinFamily& f);   // intersection of members
std::uint32_t extent_mask(const FinFamily& f);  // union of members

// Full adjunction / double-negation law suite on one universe (n <= 4).
// Report items carry the "clu1." prefix used by the CLI check command.
Report adjunction_suite(FinUniverse u);

}  // namespace cofin::fin
