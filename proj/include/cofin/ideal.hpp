#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cofin/emonoid.hpp"
#include "cofin/report.hpp"
#include "cofin/upset.hpp"

namespace cofin {

enum class GenKind { Principal, Almost };

// Principal(A): every map whose image sits inside A.
// Almost(A):    every map whose image leaves A only finitely often.
// Supports are infinite; Almost supports are kept as their phase-0 periodic
// extension so that equal-up-to-finite supports collapse to one encoding.
struct Gen {
    GenKind kind;
    UpSet support;
    bool operator==(const Gen&) const = default;
};

int compare(const Gen& a, const Gen& b);

// Finitely generated right ideal of the monoid of enumerating maps, in the
// class closed under negation and double negation: unions of Principal and
// Almost generators, plus the whole monoid (Principal(N)), the empty ideal,
// and the built-in ideal of all co-infinite-image maps. Canonical form drops
// generators absorbed by others, so structural equality is ideal equality.
class IdealExpr {
public:
    static IdealExpr empty() { return IdealExpr{}; }
    static IdealExpr top() { return principal(UpSet::naturals()); }
    static IdealExpr coinfinite();  // the ideal called L in the CLI
    static IdealExpr principal(UpSet infinite_support);
    static IdealExpr almost(UpSet infinite_support);
    // Principal(A) for infinite A, the empty ideal for finite A.
    static IdealExpr content(const UpSet& a);
    // Throws LimitError when the coinfinite ideal is joined with generators it
    // does not absorb (the union then leaves the representable class).
    static IdealExpr union_of(const IdealExpr& a, const IdealExpr& b);

    bool is_empty() const { return !coinf_ && gens_.empty(); }
    bool is_coinfinite() const { return coinf_; }
    bool is_top() const;
    const std::vector<Gen>& generators() const { return gens_; }
    // Union of generator supports (dense iff cofinite).
    UpSet support_union() const;

    bool operator==(const IdealExpr&) const = default;

private:
    bool coinf_ = false;
    std::vector<Gen> gens_;
    IdealExpr() = default;
    void canonicalize();
};

bool member(const EnumMap& u, const IdealExpr& ideal);

struct Containment {
    bool holds = false;
    std::optional<EnumMap> witness;  // in lhs, not in rhs; set when !holds
};

// Decides lhs ⊆ rhs; a failing answer carries a separating witness that is
// re-verified against member() before being returned.
Containment subseteq(const IdealExpr& lhs, const IdealExpr& rhs);

// The ideal {v : compose(u, v) in ideal}. Exact within the class.
IdealExpr action(const EnumMap& u, const IdealExpr& ideal);

// {u : action(u, ideal) is empty}: Almost of the support-union's complement.
IdealExpr negate(const IdealExpr& ideal);
IdealExpr double_negate(const IdealExpr& ideal);

struct TopologyTag {
    bool dense = false;
    std::optional<EnumMap> witness;  // kills the ideal under action; set when !dense
};

// Dense = the double negation is the whole monoid. The non-dense witness is
// machine-checked (its action on the ideal must come out empty) before return.
TopologyTag is_dense(const IdealExpr& ideal);
// For dense ideals: a v with compose(query, v) in ideal, verified before return.
EnumMap dense_response(const IdealExpr& ideal, const EnumMap& query);

UpSet extent(const IdealExpr& ideal);  // throws DomainError on the empty ideal
bool is_extended(const IdealExpr& ideal);

// Density of the content ideal; must agree with classify() == Cofinite.
bool cofinite_via_density(const UpSet& a);

// u in (lhs -> rhs) via action containment; the implication itself may leave
// the representable class, so only membership is offered.
bool implication_member(const EnumMap& u, const IdealExpr& lhs, const IdealExpr& rhs);

// Whether the two ideals intersect; meets_witness exhibits a common member.
bool meets(const IdealExpr& a, const IdealExpr& b);
std::optional<EnumMap> meets_witness(const IdealExpr& a, const IdealExpr& b);

// Membership in the translate {compose(u, v) : v co-infinite} of the
// coinfinite ideal by a cofinite-image u, and a density response for it.
bool translate_member(const EnumMap& u_cofinite, const EnumMap& w);
EnumMap translate_response(const EnumMap& u_cofinite, const EnumMap& query);

// Dense iff extended and every sampled co-infinite map below the extent
// bounds a member. Includes a targeted sample that is guaranteed to expose
// extended-but-not-dense ideals, so the verdict matches is_dense exactly.
Report density_analysis(const IdealExpr& ideal, std::uint64_t seed, int samples);

// Samples maps f in a dense ideal probe_in and reports density of
// action(f, ideal) against the local-condition prediction.
Report local_condition_probe(const IdealExpr& ideal, const IdealExpr& probe_in,
                             std::uint64_t seed, int samples);

}  // namespace cofin
