#include "cofin/upset.hpp"

#include <algorithm>
#include <numeric>

namespace cofin {

namespace {

constexpr std::uint64_t kPeriodLimit = 1u << 20;
constexpr std::uint64_t kThresholdLimit = 1u << 22;

std::uint64_t checked_lcm(std::uint64_t a, std::uint64_t b) {
    std::uint64_t g = std::gcd(a, b);
    std::uint64_t l = (a / g) * b;
    if (l > kPeriodLimit)
        throw LimitError("period blow-up beyond representable limit");
    return l;
}

std::uint64_t count_ones(const Bits& bits, std::uint64_t upto) {
    std::uint64_t c = 0;
    for (std::uint64_t i = 0; i < upto && i < bits.size(); ++i) c += bits[i];
    return c;
}

}  // namespace

void UpSet::canonicalize() {
    // Minimal wheel period: smallest divisor d of p such that the wheel is a
    // repetition of its first d bits.
    std::uint64_t p = wheel_.size();
    for (std::uint64_t d = 1; d < p; ++d) {
        if (p % d != 0) continue;
        bool repeats = true;
        for (std::uint64_t i = d; i < p && repeats; ++i)
            repeats = wheel_[i] == wheel_[i % d];
        if (repeats) {
            wheel_.resize(d);
            p = d;
            break;
        }
    }
    // Minimal threshold: absorb the prefix tail while it matches the wheel,
    // rotating the wheel right by one bit each step.
    while (!prefix_.empty() && prefix_.back() == wheel_.back()) {
        std::rotate(wheel_.rbegin(), wheel_.rbegin() + 1, wheel_.rend());
        prefix_.pop_back();
    }
}

UpSet UpSet::from_raw(Bits prefix, Bits wheel) {
    if (wheel.empty())
        throw DomainError("wheel period must be >= 1");
    if (prefix.size() > kThresholdLimit || wheel.size() > kPeriodLimit)
        throw LimitError("raw encoding beyond representable limit");
    for (auto& b : prefix) b = b ? 1 : 0;
    for (auto& b : wheel) b = b ? 1 : 0;
    UpSet r;
    r.prefix_ = std::move(prefix);
    r.wheel_ = std::move(wheel);
    r.canonicalize();
    return r;
}

UpSet UpSet::from_window(const Bits& window, std::uint64_t threshold, std::uint64_t period) {
    if (period == 0)
        throw DomainError("wheel period must be >= 1");
    if (window.size() < threshold + period)
        throw DomainError("window shorter than threshold + period");
    Bits prefix(window.begin(), window.begin() + static_cast<std::ptrdiff_t>(threshold));
    Bits wheel(window.begin() + static_cast<std::ptrdiff_t>(threshold),
               window.begin() + static_cast<std::ptrdiff_t>(threshold + period));
    return from_raw(std::move(prefix), std::move(wheel));
}

UpSet UpSet::empty() { return UpSet{}; }

UpSet UpSet::naturals() { return from_raw({}, {1}); }

UpSet UpSet::finite(std::vector<std::uint64_t> elems) {
    if (elems.empty()) return empty();
    std::uint64_t top = *std::max_element(elems.begin(), elems.end());
    if (top >= kThresholdLimit)
        throw LimitError("finite element beyond representable limit");
    Bits prefix(top + 1, 0);
    for (auto e : elems) prefix[e] = 1;
    return from_raw(std::move(prefix), {0});
}

UpSet UpSet::residue(std::uint64_t modulus, std::uint64_t rep) {
    if (modulus == 0)
        throw DomainError("residue modulus must be >= 1");
    if (modulus > kPeriodLimit || rep > kThresholdLimit)
        throw LimitError("residue parameters beyond representable limit");
    Bits prefix(rep, 0);
    Bits wheel(modulus, 0);
    wheel[0] = 1;
    return from_raw(std::move(prefix), std::move(wheel));
}

UpSet UpSet::from_threshold(std::uint64_t t) {
    if (t > kThresholdLimit)
        throw LimitError("threshold beyond representable limit");
    return from_raw(Bits(t, 0), {1});
}

bool UpSet::contains(std::uint64_t n) const {
    if (n < prefix_.size()) return prefix_[n] != 0;
    return wheel_[(n - prefix_.size()) % wheel_.size()] != 0;
}

std::uint64_t UpSet::prefix_ones() const { return count_ones(prefix_, prefix_.size()); }
std::uint64_t UpSet::wheel_ones() const { return count_ones(wheel_, wheel_.size()); }

int compare(const UpSet& a, const UpSet& b) {
    if (a.threshold() != b.threshold()) return a.threshold() < b.threshold() ? -1 : 1;
    if (a.period() != b.period()) return a.period() < b.period() ? -1 : 1;
    if (a.prefix() != b.prefix()) return a.prefix() < b.prefix() ? -1 : 1;
    if (a.wheel() != b.wheel()) return a.wheel() < b.wheel() ? -1 : 1;
    return 0;
}

SetClass classify(const UpSet& a) {
    std::uint64_t d = a.wheel_ones();
    if (d == 0) return {SetTag::Finite, a.prefix_ones()};
    if (d == a.period()) return {SetTag::Cofinite, a.threshold() - a.prefix_ones()};
    return {SetTag::Split, 0};
}

bool is_finite(const UpSet& a) { return a.wheel_ones() == 0; }
bool is_cofinite(const UpSet& a) { return a.wheel_ones() == a.period(); }
bool is_split(const UpSet& a) { return !is_finite(a) && !is_cofinite(a); }
bool is_infinite(const UpSet& a) { return a.wheel_ones() > 0; }

std::uint64_t cardinality(const UpSet& a) {
    if (!is_finite(a)) throw DomainError("cardinality of an infinite set");
    return a.prefix_ones();
}

std::vector<std::uint64_t> elements(const UpSet& a) {
    if (!is_finite(a)) throw DomainError("element listing of an infinite set");
    std::vector<std::uint64_t> out;
    for (std::uint64_t i = 0; i < a.threshold(); ++i)
        if (a.contains(i)) out.push_back(i);
    return out;
}

UpSet combine(SetOp op, const UpSet& a, const UpSet& b) {
    std::uint64_t t = std::max(a.threshold(), b.threshold());
    std::uint64_t p = checked_lcm(a.period(), b.period());
    Bits window(t + p, 0);
    for (std::uint64_t x = 0; x < window.size(); ++x) {
        bool in_a = a.contains(x), in_b = b.contains(x);
        switch (op) {
            case SetOp::Union: window[x] = in_a || in_b; break;
            case SetOp::Intersect: window[x] = in_a && in_b; break;
            case SetOp::Difference: window[x] = in_a && !in_b; break;
        }
    }
    return UpSet::from_window(window, t, p);
}

UpSet set_union(const UpSet& a, const UpSet& b) { return combine(SetOp::Union, a, b); }
UpSet set_intersect(const UpSet& a, const UpSet& b) { return combine(SetOp::Intersect, a, b); }
UpSet set_difference(const UpSet& a, const UpSet& b) { return combine(SetOp::Difference, a, b); }

UpSet complement(const UpSet& a) {
    Bits prefix = a.prefix();
    Bits wheel = a.wheel();
    for (auto& x : prefix) x ^= 1;
    for (auto& x : wheel) x ^= 1;
    return UpSet::from_raw(std::move(prefix), std::move(wheel));
}

bool subset(const UpSet& a, const UpSet& b) { return set_difference(a, b).is_empty(); }

bool almost_subset(const UpSet& a, const UpSet& b) { return is_finite(set_difference(a, b)); }

std::uint64_t select(const UpSet& a, std::uint64_t k) {
    std::uint64_t c = a.prefix_ones();
    if (k < c) {
        std::uint64_t seen = 0;
        for (std::uint64_t i = 0; i < a.threshold(); ++i)
            if (a.contains(i) && seen++ == k) return i;
    }
    std::uint64_t d = a.wheel_ones();
    if (d == 0)
        throw EnumerationOutOfRange("select index beyond a finite set");
    std::uint64_t rest = k - c;
    std::uint64_t turns = rest / d, within = rest % d;
    std::uint64_t seen = 0;
    for (std::uint64_t j = 0; j < a.period(); ++j) {
        if (a.wheel()[j] && seen++ == within)
            return a.threshold() + turns * a.period() + j;
    }
    throw Error("unreachable: wheel ones miscount");
}

std::uint64_t rank(const UpSet& a, std::uint64_t n) {
    if (n <= a.threshold()) return count_ones(a.prefix(), n);
    std::uint64_t c = a.prefix_ones();
    std::uint64_t beyond = n - a.threshold();
    std::uint64_t turns = beyond / a.period(), within = beyond % a.period();
    return c + turns * a.wheel_ones() + count_ones(a.wheel(), within);
}

std::pair<UpSet, UpSet> split_alternate(const UpSet& a) {
    if (!is_infinite(a))
        throw DomainError("split_alternate of a finite set");
    // Membership parity of rank is (threshold, 2*period)-periodic.
    std::uint64_t t = a.threshold(), p = 2 * a.period();
    Bits even_w(t + p, 0), odd_w(t + p, 0);
    for (std::uint64_t x = 0; x < t + p; ++x) {
        if (!a.contains(x)) continue;
        (rank(a, x) % 2 == 0 ? even_w : odd_w)[x] = 1;
    }
    return {UpSet::from_window(even_w, t, p), UpSet::from_window(odd_w, t, p)};
}

UpSet image_under(const UpSet& base, const UpSet& s_set) {
    if (!is_infinite(base))
        throw DomainError("image through the enumeration of a finite set");
    std::uint64_t d = base.wheel_ones();
    // Positions >= select(base, s-threshold) have rank beyond the prefix of s_set;
    // from there membership repeats every (lcm(p_s, d)/d) * p_base positions.
    std::uint64_t t = std::max(base.threshold(), select(base, s_set.threshold()));
    std::uint64_t p = (checked_lcm(s_set.period(), d) / d) * base.period();
    if (p > kPeriodLimit || t > kThresholdLimit)
        throw LimitError("image beyond representable limit");
    Bits window(t + p, 0);
    for (std::uint64_t x = 0; x < window.size(); ++x)
        window[x] = base.contains(x) && s_set.contains(rank(base, x));
    return UpSet::from_window(window, t, p);
}

UpSet preimage_under(const UpSet& base, const UpSet& s_set) {
    if (!is_infinite(base))
        throw DomainError("preimage through the enumeration of a finite set");
    std::uint64_t d = base.wheel_ones();
    // Indices >= prefix_ones(base) step by one period per d indices, and
    // indices >= rank(base, s-threshold) map past the prefix of s_set.
    std::uint64_t t = std::max(base.prefix_ones(), rank(base, s_set.threshold()));
    std::uint64_t p = (checked_lcm(s_set.period(), base.period()) / base.period()) * d;
    if (p > kPeriodLimit || t > kThresholdLimit)
        throw LimitError("preimage beyond representable limit");
    Bits window(t + p, 0);
    for (std::uint64_t k = 0; k < window.size(); ++k)
        window[k] = s_set.contains(select(base, k));
    return UpSet::from_window(window, t, p);
}

UpSet periodic_extension(const UpSet& a) {
    std::uint64_t p = a.period(), t = a.threshold();
    Bits wheel(p, 0);
    for (std::uint64_t j = 0; j < p; ++j)
        wheel[j] = a.wheel()[(j + p - (t % p)) % p];
    return UpSet::from_raw({}, std::move(wheel));
}

}  // namespace cofin
