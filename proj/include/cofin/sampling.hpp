#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "cofin/emonoid.hpp"
#include "cofin/filt.hpp"
#include "cofin/ideal.hpp"
#include "cofin/upset.hpp"

namespace cofin {

// Seeded generator for the randomized law checks. Periods and thresholds stay
// small so lcm-aligned windows stay desk-sized.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t below(std::uint64_t n);  // uniform in [0, n)
    bool coin();

    UpSet upset(std::uint64_t max_threshold = 6, std::uint64_t max_period = 8);
    UpSet upset_of(SetTag tag);
    UpSet finite_set(std::uint64_t max_size = 5, std::uint64_t max_value = 24);
    UpSet infinite_set();             // Split or Cofinite
    UpSet split_set();                // infinite with infinite complement
    UpSet cofinite_set();
    // Random infinite subset of an infinite set; split when proper is true.
    UpSet infinite_subset(const UpSet& a, bool proper = false);

    EnumMap emap();
    EnumMap cofinite_map();
    EnumMap coinfinite_map();

    Gen gen();
    IdealExpr ideal(int max_gens = 3);
    IdealExpr dense_ideal();  // generator union with cofinite support union
    EnumMap member_of(const IdealExpr& ideal);

    FilterRep filter();
    UpSet member_of(const FilterRep& f);

    FiniteMap finite_map(std::uint64_t max_table = 4, std::uint64_t max_value = 20);

private:
    std::mt19937_64 eng_;
};

}  // namespace cofin
