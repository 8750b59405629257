#include <doctest.h>

#include <algorithm>

#include "cofin/finoracle.hpp"

using namespace cofin;
using namespace cofin::fin;

TEST_CASE("interior of upper families") {
    FinUniverse u{3};
    CHECK(interior(meet_family(u, u.full_mask())) == principal_filter(u, u.full_mask()));
    CHECK(interior(meet_family(u, 0b011)) == principal_filter(u, 0b011));
    // every nonempty meet-family has the principal filter as interior
    for (std::uint32_t a = 1; a <= u.full_mask(); ++a)
        CHECK(interior(meet_family(u, a)) == principal_filter(u, a));
    // a filter is its own interior
    for (const auto& f : all_filters(u)) CHECK(interior(f) == f);
    // meet families are filters exactly for singletons
    for (std::uint32_t a = 1; a <= u.full_mask(); ++a) {
        bool single = (a & (a - 1)) == 0;
        CHECK(meet_family(u, a).is_filter() == single);
    }
    CHECK_THROWS_AS(interior(FinFamily(u, {})), DomainError);
    CHECK_THROWS_AS(interior(FinFamily(u, {0b001})), DomainError);
}

TEST_CASE("interior is the largest filter inside every nonempty upper family") {
    for (unsigned n = 1; n <= 3; ++n) {
        FinUniverse u{n};
        auto filters = all_filters(u);
        std::uint64_t family_count = 1ull << u.subset_count();
        for (std::uint64_t enc = 1; enc < family_count; ++enc) {
            std::vector<std::uint32_t> ms;
            for (std::uint32_t m = 0; m < u.subset_count(); ++m)
                if (enc & (1ull << m)) ms.push_back(m);
            FinFamily fam(u, std::move(ms));
            if (!fam.is_upper()) continue;
            FinFamily inner = interior(fam);
            CHECK(inner.is_filter());
            for (auto m : inner.members()) CHECK(fam.has(m));
            // maximal for the defining condition: everything outside the
            // interior breaks it on some member
            for (std::uint32_t x = 0; x < u.subset_count(); ++x) {
                bool satisfies = true;
                for (auto y : fam.members())
                    if (!fam.has(x & y)) satisfies = false;
                CHECK(inner.has(x) == satisfies);
            }
            CHECK((inner == fam) == fam.is_filter());
        }
    }
}

TEST_CASE("filter enumeration finds exactly the principal filters") {
    CHECK(all_filters(FinUniverse{0}).size() == 1);
    CHECK(all_filters(FinUniverse{2}).size() == 4);
    CHECK(all_filters(FinUniverse{3}).size() == 8);
    CHECK(all_filters(FinUniverse{4}).size() == 16);
    // n = 5 uses the principal construction; the exhaustive scans above are
    // its cross-check at small n
    auto five = all_filters(FinUniverse{5});
    CHECK(five.size() == 32);
    for (unsigned n = 0; n <= 4; ++n) {
        FinUniverse u{n};
        auto filters = all_filters(u);
        for (const auto& f : filters) CHECK(f == principal_filter(u, limit_mask(f)));
        CHECK(std::is_sorted(filters.begin(), filters.end(),
                             [](const FinFamily& a, const FinFamily& b) {
                                 return a.members() < b.members();
                             }));
    }
    CHECK_THROWS_AS(FinUniverse{6}, DomainError);
}

TEST_CASE("heyting implication: formula equals brute force") {
    for (unsigned n = 1; n <= 3; ++n) {
        FinUniverse u{n};
        auto filters = all_filters(u);
        for (const auto& f : filters)
            for (const auto& g : filters)
                CHECK(heyting_formula(f, g) == heyting_bruteforce(f, g));
        // the discrete filter is the unit: P(X) -> G = G
        for (const auto& g : filters)
            CHECK(heyting_formula(principal_filter(u, 0), g) == g);
    }
    // negation is the principal filter of the complement
    FinUniverse u{3};
    for (std::uint32_t a = 0; a <= u.full_mask(); ++a)
        CHECK(fin_negate(principal_filter(u, a)) ==
              principal_filter(u, u.full_mask() & ~a));
}

TEST_CASE("adjunction suite passes on every universe") {
    for (unsigned n = 1; n <= 4; ++n) {
        Report r = adjunction_suite(FinUniverse{n});
        for (const auto& item : r.items) {
            INFO(item.id << " " << item.detail);
            CHECK(item.pass);
        }
    }
}

TEST_CASE("generated filters") {
    FinUniverse u{3};
    CHECK(generated_filter(u, {}) == principal_filter(u, u.full_mask()));
    std::uint32_t a = 0b011;
    CHECK(generated_filter(u, std::vector<std::uint32_t>{a}) == principal_filter(u, a));
    // generated filter = intersection of all filters containing the family
    auto filters = all_filters(u);
    for (std::uint32_t m1 = 0; m1 <= u.full_mask(); ++m1) {
        for (std::uint32_t m2 = 0; m2 <= u.full_mask(); ++m2) {
            std::vector<std::uint32_t> fam{m1, m2};
            FinFamily gen = generated_filter(u, fam);
            std::vector<std::uint32_t> common;
            for (std::uint32_t w = 0; w < u.subset_count(); ++w) {
                bool in_all = true;
                for (const auto& f : filters)
                    if (f.has(m1) && f.has(m2) && !f.has(w)) in_all = false;
                if (in_all) common.push_back(w);
            }
            CHECK(gen == FinFamily(u, common));
            // base description: a two-element family with lower bounds in it
            if ((m1 & m2) == m1 || (m1 & m2) == m2) {
                for (std::uint32_t w = 0; w < u.subset_count(); ++w)
                    CHECK(gen.has(w) == ((m1 & ~w) == 0 || (m2 & ~w) == 0));
            }
        }
    }
}

TEST_CASE("duality with bornologies") {
    for (unsigned n = 1; n <= 4; ++n) {
        FinUniverse u{n};
        for (const auto& f : all_filters(u)) {
            FinFamily b = dualize(f);
            CHECK(b.is_ideal());
            CHECK(dualize(b) == f);
            CHECK(extent_mask(b) == (u.full_mask() & ~limit_mask(f)));
        }
    }
    FinUniverse u{3};
    FinFamily down = dualize(principal_filter(u, 0b101));
    for (std::uint32_t w = 0; w < u.subset_count(); ++w)
        CHECK(down.has(w) == ((w & ~(u.full_mask() & ~0b101u)) == 0));
}
