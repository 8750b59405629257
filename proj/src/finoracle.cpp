#include "cofin/finoracle.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

namespace cofin::fin {

namespace {

std::vector<std::uint32_t> sorted_unique(std::vector<std::uint32_t> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

}  // namespace

FinFamily::FinFamily(FinUniverse u, std::vector<std::uint32_t> members)
    : u_(u), members_(sorted_unique(std::move(members))) {
    for (auto m : members_)
        if (m > u_.full_mask()) throw DomainError("member mask outside universe");
    upper_ = true;
    for (auto m : members_) {
        // every superset of m must be present
        std::uint32_t rest = u_.full_mask() & ~m;
        for (std::uint32_t s = rest; upper_; s = (s - 1) & rest) {
            if (!has(m | s)) upper_ = false;
            if (s == 0) break;
        }
        if (!upper_) break;
    }
    filter_ = upper_ && !members_.empty();
    if (filter_) {
        for (std::size_t i = 0; i < members_.size() && filter_; ++i)
            for (std::size_t j = i; j < members_.size() && filter_; ++j)
                if (!has(members_[i] & members_[j])) filter_ = false;
    }
}

bool FinFamily::has(std::uint32_t mask) const {
    return std::binary_search(members_.begin(), members_.end(), mask);
}

bool FinFamily::is_lower() const {
    for (auto m : members_) {
        for (std::uint32_t s = m; ; s = (s - 1) & m) {
            if (!has(s)) return false;
            if (s == 0) break;
        }
    }
    return true;
}

bool FinFamily::is_ideal() const {
    if (members_.empty() || !is_lower()) return false;
    for (auto a : members_)
        for (auto b : members_)
            if (!has(a | b)) return false;
    return true;
}

std::string mask_to_string(FinUniverse u, std::uint32_t mask) {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (unsigned i = 0; i < u.n; ++i) {
        if (mask & (1u << i)) {
            if (!first) os << ',';
            os << i;
            first = false;
        }
    }
    os << '}';
    return os.str();
}

std::string family_to_string(const FinFamily& f) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < f.members().size(); ++i) {
        if (i) os << ' ';
        os << mask_to_string(f.universe(), f.members()[i]);
    }
    os << ']';
    return os.str();
}

FinFamily principal_filter(FinUniverse u, std::uint32_t a_mask) {
    std::vector<std::uint32_t> ms;
    for (std::uint32_t w = 0; w < u.subset_count(); ++w)
        if ((a_mask & ~w) == 0) ms.push_back(w);
    return {u, std::move(ms)};
}

FinFamily meet_family(FinUniverse u, std::uint32_t a_mask) {
    std::vector<std::uint32_t> ms;
    for (std::uint32_t w = 0; w < u.subset_count(); ++w)
        if ((a_mask & w) != 0) ms.push_back(w);
    return {u, std::move(ms)};
}

FinFamily cofinite_superset_family(FinUniverse u, std::uint32_t a_mask) {
    // every subset of a finite universe is cofinite, so no complement-size test
    std::vector<std::uint32_t> ms;
    for (std::uint32_t w = 0; w < u.subset_count(); ++w)
        if ((a_mask & ~w) == 0) ms.push_back(w);
    return {u, std::move(ms)};
}

FinFamily interior(const FinFamily& s) {
    if (s.empty() || !s.is_upper())
        throw DomainError("interior requires a nonempty upper family");
    FinUniverse u = s.universe();
    std::vector<std::uint32_t> ms;
    for (std::uint32_t x = 0; x < u.subset_count(); ++x) {
        bool all = true;
        for (auto y : s.members())
            if (!s.has(x & y)) { all = false; break; }
        if (all) ms.push_back(x);
    }
    return {u, std::move(ms)};
}

namespace {

std::vector<FinFamily> enumerate_filters(FinUniverse u) {
    std::vector<FinFamily> out;
    if (u.n <= 4) {
        std::uint64_t family_count = 1ull << u.subset_count();
        for (std::uint64_t enc = 0; enc < family_count; ++enc) {
            std::vector<std::uint32_t> ms;
            for (std::uint32_t m = 0; m < u.subset_count(); ++m)
                if (enc & (1ull << m)) ms.push_back(m);
            FinFamily fam(u, std::move(ms));
            if (fam.is_filter()) out.push_back(std::move(fam));
        }
    } else {
        for (std::uint32_t a = 0; a < u.subset_count(); ++a)
            out.push_back(principal_filter(u, a));
    }
    std::sort(out.begin(), out.end(),
              [](const FinFamily& a, const FinFamily& b) { return a.members() < b.members(); });
    return out;
}

}  // namespace

std::vector<FinFamily> all_filters(FinUniverse u) {
    static std::mutex mu;
    static std::vector<FinFamily> cache[6];
    std::lock_guard<std::mutex> lock(mu);
    if (cache[u.n].empty()) cache[u.n] = enumerate_filters(u);
    return cache[u.n];
}

FinFamily heyting_bruteforce(const FinFamily& f, const FinFamily& g) {
    if (!f.is_filter() || !g.is_filter())
        throw DomainError("heyting implication requires filters");
    FinUniverse u = f.universe();
    const FinFamily* best = nullptr;
    auto filters = all_filters(u);
    std::vector<const FinFamily*> ok;
    for (const auto& h : filters) {
        // H ∩ F ⊆ G (family intersection)
        bool good = true;
        for (auto m : h.members())
            if (f.has(m) && !g.has(m)) { good = false; break; }
        if (good) {
            ok.push_back(&h);
            if (!best || h.members().size() > best->members().size()) best = &h;
        }
    }
    if (!best) throw Error("implication candidates empty (indiscrete always qualifies)");
    // the satisfying filters are closed under join, so the largest contains all
    for (auto* h : ok)
        for (auto m : h->members())
            if (!best->has(m)) throw Error("implication brute force: no greatest candidate");
    return *best;
}

FinFamily heyting_formula(const FinFamily& f, const FinFamily& g) {
    if (!f.is_filter() || !g.is_filter())
        throw DomainError("heyting implication requires filters");
    FinUniverse u = f.universe();
    std::vector<std::uint32_t> ms;
    for (std::uint32_t a = 0; a < u.subset_count(); ++a) {
        bool all = true;
        for (auto m : f.members())
            if (!g.has(a | m)) { all = false; break; }
        if (all) ms.push_back(a);
    }
    return {u, std::move(ms)};
}

FinFamily fin_negate(const FinFamily& f) {
    FinUniverse u = f.universe();
    return heyting_formula(f, principal_filter(u, u.full_mask()));
}

FinFamily generated_filter(FinUniverse u, std::span<const std::uint32_t> family) {
    std::uint32_t core = u.full_mask();
    for (auto m : family) core &= m;
    return principal_filter(u, core);
}

FinFamily dualize(const FinFamily& f) {
    std::vector<std::uint32_t> ms;
    ms.reserve(f.members().size());
    for (auto m : f.members()) ms.push_back(f.universe().full_mask() & ~m);
    return {f.universe(), std::move(ms)};
}

std::uint32_t limit_mask(const FinFamily& f) {
    std::uint32_t acc = f.universe().full_mask();
    for (auto m : f.members()) acc &= m;
    return acc;
}

std::uint32_t extent_mask(const FinFamily& f) {
    std::uint32_t acc = 0;
    for (auto m : f.members()) acc |= m;
    return acc;
}

Report adjunction_suite(FinUniverse u) {
    if (u.n > 4) throw DomainError("adjunction suite capped at n = 4");
    Report r{"clu1", {}};
    auto filters = all_filters(u);
    const std::uint32_t X = u.full_mask();
    auto C = [&](std::uint32_t a) { return cofinite_superset_family(u, a); };
    auto U = [&](std::uint32_t a) { return principal_filter(u, a); };
    FinFamily frechet = C(0);  // all cofinite subsets = P(X) here
    FinFamily discrete = U(0);

    {
        bool ok = true;
        std::string ce;
        for (std::uint32_t a = 0; a <= X && ok; ++a) {
            if (limit_mask(C(a)) != a || limit_mask(U(a)) != a) {
                ok = false;
                ce = "A=" + mask_to_string(u, a);
            }
        }
        r.add("clu1.i", ok, ce);
    }
    {
        bool ok = true;
        std::string ce;
        for (std::uint32_t a = 0; a <= X && ok; ++a) {
            FinFamily ca = C(a), ua = U(a);
            for (const auto& f : filters) {
                std::uint32_t lf = limit_mask(f);
                bool c_le_f = std::includes(f.members().begin(), f.members().end(),
                                            ca.members().begin(), ca.members().end());
                bool f_le_u = std::includes(ua.members().begin(), ua.members().end(),
                                            f.members().begin(), f.members().end());
                if (c_le_f != ((lf & ~a) == 0) || f_le_u != ((a & ~lf) == 0)) {
                    ok = false;
                    ce = "A=" + mask_to_string(u, a) + " F=" + family_to_string(f);
                    break;
                }
            }
        }
        r.add("clu1.ii", ok, ce);
    }
    {
        bool ok = true;
        std::string ce;
        for (std::uint32_t a = 0; a <= X && ok; ++a) {
            FinFamily ca = C(a);
            for (const auto& f : filters) {
                std::vector<std::uint32_t> meet;
                for (auto m : ca.members())
                    if (f.has(m)) meet.push_back(m);
                if (FinFamily(u, meet) != C(a | limit_mask(f))) {
                    ok = false;
                    ce = "A=" + mask_to_string(u, a) + " F=" + family_to_string(f);
                    break;
                }
            }
        }
        r.add("clu1.iii", ok, ce);
    }
    {
        bool ok = true;
        std::string ce;
        for (const auto& f : filters) {
            FinFamily via_limit = U(limit_mask(f));
            FinFamily via_impl = heyting_formula(frechet, f);
            FinFamily via_dnn = fin_negate(fin_negate(f));
            if (via_limit != via_impl || via_limit != via_dnn) {
                ok = false;
                ce = "F=" + family_to_string(f);
                break;
            }
        }
        r.add("clu1.iv", ok, ce);
    }
    {
        bool ok = true;
        std::string ce;
        for (const auto& f : filters) {
            bool dense = fin_negate(fin_negate(f)) == discrete;
            if (dense != (limit_mask(f) == 0)) {
                ok = false;
                ce = "F=" + family_to_string(f);
                break;
            }
        }
        r.add("clu1.v", ok, ce);
    }
    {
        bool ok = true;
        std::string ce;
        std::size_t fixed = 0;
        for (const auto& f : filters) {
            bool is_fixed = fin_negate(fin_negate(f)) == f;
            bool principal = f == U(limit_mask(f));
            if (is_fixed != principal) {
                ok = false;
                ce = "F=" + family_to_string(f);
                break;
            }
            if (is_fixed) ++fixed;
        }
        if (ok && fixed != u.subset_count()) {
            ok = false;
            ce = "fixed-point count " + std::to_string(fixed);
        }
        r.add("clu1.vi", ok, ce);
    }
    {
        // finite case: cofinite supersets coincide with all supersets
        bool ok = true;
        std::string ce;
        for (std::uint32_t a = 0; a <= X && ok; ++a)
            if (C(a) != U(a)) {
                ok = false;
                ce = "A=" + mask_to_string(u, a);
            }
        r.add("clu1.finite-case", ok, ce);
    }
    {
        // the loose remark, verified in its principal reading: every filter is
        // U(A) for a unique A
        bool ok = filters.size() == u.subset_count();
        std::string ce;
        for (const auto& f : filters)
            if (f != U(limit_mask(f))) {
                ok = false;
                ce = "F=" + family_to_string(f);
                break;
            }
        r.add("clu1.principal", ok, ce);
        r.add("clu1.unique-dense", [&] {
            for (const auto& f : filters)
                if ((limit_mask(f) == 0) != (f == discrete)) return false;
            return true;
        }(), "");
    }
    return r;
}

}  // namespace cofin::fin
