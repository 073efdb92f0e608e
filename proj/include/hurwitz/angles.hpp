// Cone-angle vectors and the admissibility test for spherical conical metrics
// on the sphere.
//
// An entry beta_i is the cone angle at point i divided by 2*pi. Entries equal
// to 1 are smooth points and are stripped before the test is applied.
//
// Decision order, each step final:
//   stripped length 0            -> admissible (EMPTY, the round sphere)
//   stripped length 1            -> not admissible (no teardrops)
//   2 + sum(beta_i - 1) <= 0     -> not admissible (Gauss-Bonnet)
//   D = l1 distance of (beta - 1) to odd-sum integer points
//     D < 1                      -> not admissible (holonomy)
//     D > 1                      -> case A
//     D = 1                      -> case B, C or D, otherwise not admissible
#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "hurwitz/rational.hpp"

namespace hurwitz {

class AngleVector {
public:
    AngleVector() = default;

    AngleVector(std::vector<Rational> entries) : entries_(std::move(entries)) // NOLINT: implicit is intended
    {
        for (const auto& b : entries_)
            if (!b.is_positive()) throw std::invalid_argument("angle vector: entry " + b.to_string() + " is not positive");
    }

    AngleVector(std::initializer_list<Rational> entries) : AngleVector(std::vector<Rational>(entries)) {}

    const std::vector<Rational>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }
    const Rational& operator[](std::size_t i) const { return entries_[i]; }
    auto begin() const { return entries_.begin(); }
    auto end() const { return entries_.end(); }

    friend bool operator==(const AngleVector&, const AngleVector&) = default;

private:
    std::vector<Rational> entries_;
};

/// Comma-separated exact fractions, e.g. "1/2,2/3,2/3".
inline AngleVector parse_angles(std::string_view text)
{
    std::vector<Rational> out;
    std::size_t start = 0;
    for (;;) {
        const auto comma = text.find(',', start);
        out.push_back(parse_rational(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return AngleVector(std::move(out));
}

inline std::string format_angles(const AngleVector& beta)
{
    std::string s;
    for (std::size_t i = 0; i < beta.size(); ++i) {
        if (i) s += ',';
        s += beta[i].to_string();
    }
    return s;
}

inline AngleVector strip_units(const AngleVector& beta)
{
    std::vector<Rational> out;
    for (const auto& b : beta)
        if (b != Rational(1)) out.push_back(b);
    return AngleVector(std::move(out));
}

/// 2 + sum(beta_i - 1), i.e. the area of the would-be metric over 2*pi.
inline Rational gauss_bonnet_margin(const AngleVector& beta)
{
    Rational m(2);
    for (const auto& b : beta) m += b - 1;
    return m;
}

/// Largest eta with every value / eta a positive integer: gcd(numerators) / lcm(denominators).
inline Rational rational_gcd(const std::vector<Rational>& values)
{
    if (values.empty()) throw std::invalid_argument("rational_gcd: empty input");
    std::int64_t g = 0;
    std::int64_t l = 1;
    for (const auto& v : values) {
        if (!v.is_positive()) throw std::invalid_argument("rational_gcd: values must be positive");
        g = std::gcd(g, v.num());
        l = detail::checked_mul(l / std::gcd(l, v.den()), v.den());
    }
    return Rational(g, l);
}

struct OddLatticeResult {
    Rational distance;
    std::vector<std::int64_t> nearest;
};

/// Exact l1 distance from x to the set of integer vectors with odd coordinate sum.
///
/// Round every coordinate to a nearest integer; if the rounded sum is even, move
/// the coordinate with the cheapest parity flip (1 - 2 f_i, f_i its rounding
/// distance) to its second-nearest integer.
inline OddLatticeResult l1_distance_to_odd_lattice(const std::vector<Rational>& x)
{
    if (x.empty()) throw std::invalid_argument("l1_distance_to_odd_lattice: empty input");

    OddLatticeResult res;
    res.nearest.resize(x.size());
    std::vector<std::int64_t> second(x.size());
    std::vector<Rational> flip_cost(x.size());
    std::int64_t parity = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const std::int64_t fl = x[i].floor();
        const Rational frac = x[i] - fl;
        Rational f;
        if (frac * 2 <= Rational(1)) { // ties go down
            res.nearest[i] = fl;
            second[i] = fl + 1;
            f = frac;
        } else {
            res.nearest[i] = fl + 1;
            second[i] = fl;
            f = Rational(1) - frac;
        }
        res.distance += f;
        flip_cost[i] = Rational(1) - f * 2;
        parity ^= (res.nearest[i] & 1);
    }
    if (parity == 0) {
        const auto best = std::min_element(flip_cost.begin(), flip_cost.end()) - flip_cost.begin();
        res.distance += flip_cost[best];
        res.nearest[best] = second[best];
    }
    return res;
}

inline OddLatticeResult holonomy_distance(const AngleVector& beta)
{
    std::vector<Rational> x;
    x.reserve(beta.size());
    for (const auto& b : beta) x.push_back(b - 1);
    return l1_distance_to_odd_lattice(x);
}

struct CoaxialWitness {
    std::vector<int> signs; // one per non-integer entry, in order of appearance
    std::int64_t k_prime = 0;
    std::int64_t k_double_prime = 0;
    Rational eta;
    std::vector<std::int64_t> b;

    friend bool operator==(const CoaxialWitness&, const CoaxialWitness&) = default;
};

/// Searches for signs making the mixed integer/non-integer vector satisfy the
/// coaxial conditions. Expects a unit-free vector at holonomy distance exactly 1.
///
/// k' + k'' = sum(integer entries) - n + 2 does not depend on the signs, so eta, b
/// and the final inequality are fixed up front; only the reachable signed sums
/// matter. Those are tabulated per suffix so that the lexicographically first
/// sign vector (+1 before -1) can be recovered greedily.
inline std::optional<CoaxialWitness> coaxial_check(const AngleVector& beta)
{
    std::vector<Rational> frac_entries;
    std::int64_t int_sum = 0;
    std::int64_t int_max = 0;
    bool have_int = false;
    for (const auto& x : beta) {
        if (x.is_integer()) {
            have_int = true;
            int_sum = detail::checked_add(int_sum, x.num());
            int_max = std::max(int_max, x.num());
        } else {
            frac_entries.push_back(x);
        }
    }
    if (!have_int || frac_entries.empty()) return std::nullopt;

    const auto n = static_cast<std::int64_t>(beta.size());
    const std::int64_t ones = int_sum - n + 2; // k' + k''
    if (ones < 0) return std::nullopt;

    std::vector<Rational> scaled = frac_entries;
    if (ones > 0) scaled.emplace_back(1);
    const Rational eta = rational_gcd(scaled);
    std::vector<std::int64_t> b;
    std::int64_t b_sum = 0;
    for (const auto& x : frac_entries) {
        b.push_back((x / eta).to_integer());
        b_sum = detail::checked_add(b_sum, b.back());
    }
    if (ones > 0) {
        const std::int64_t one_b = (Rational(1) / eta).to_integer();
        for (std::int64_t i = 0; i < ones; ++i) b.push_back(one_b);
        b_sum = detail::checked_add(b_sum, detail::checked_mul(ones, one_b));
    }
    if (2 * int_max > b_sum) return std::nullopt;

    // acceptable k': 0 <= k' <= ones with k'' = ones - k' even
    auto acceptable = [&](const Rational& s) {
        if (!s.is_integer()) return false;
        const std::int64_t k = s.num();
        return k >= 0 && k <= ones && ((ones - k) % 2 == 0);
    };

    const std::size_t m = frac_entries.size();
    std::vector<std::unordered_set<Rational>> reach(m + 1);
    reach[m].insert(Rational(0));
    for (std::size_t i = m; i-- > 0;) {
        for (const auto& s : reach[i + 1]) {
            reach[i].insert(s + frac_entries[i]);
            reach[i].insert(s - frac_entries[i]);
        }
    }
    bool any = false;
    for (const auto& s : reach[0]) any = any || acceptable(s);
    if (!any) return std::nullopt;

    CoaxialWitness w;
    Rational prefix(0);
    for (std::size_t i = 0; i < m; ++i) {
        auto completes = [&](const Rational& p) {
            for (const auto& s : reach[i + 1])
                if (acceptable(p + s)) return true;
            return false;
        };
        if (completes(prefix + frac_entries[i])) {
            w.signs.push_back(+1);
            prefix += frac_entries[i];
        } else {
            w.signs.push_back(-1);
            prefix -= frac_entries[i];
        }
    }
    w.k_prime = prefix.to_integer();
    w.k_double_prime = ones - w.k_prime;
    w.eta = eta;
    w.b = std::move(b);
    return w;
}

enum class AdmissibleCase { A, B, C, D, EMPTY, NONE };

inline const char* to_string(AdmissibleCase c)
{
    switch (c) {
    case AdmissibleCase::A: return "A";
    case AdmissibleCase::B: return "B";
    case AdmissibleCase::C: return "C";
    case AdmissibleCase::D: return "D";
    case AdmissibleCase::EMPTY: return "EMPTY";
    case AdmissibleCase::NONE: return "NONE";
    }
    return "NONE";
}

struct AdmissibilityVerdict {
    bool admissible = false;
    AdmissibleCase which = AdmissibleCase::NONE;
    std::optional<OddLatticeResult> lattice; // absent only for EMPTY
    std::optional<CoaxialWitness> coaxial;   // present only for case D
    std::string reason;                      // why not admissible
};

inline AdmissibilityVerdict decide_admissible(const AngleVector& beta)
{
    AdmissibilityVerdict v;
    const AngleVector s = strip_units(beta);
    if (s.empty()) {
        v.admissible = true;
        v.which = AdmissibleCase::EMPTY;
        return v;
    }
    v.lattice = holonomy_distance(s);
    if (s.size() == 1) {
        v.reason = "single cone point " + s[0].to_string() + " after removing smooth points";
        return v;
    }
    if (const auto gb = gauss_bonnet_margin(beta); gb <= Rational(0)) {
        v.reason = "Gauss-Bonnet margin " + gb.to_string() + " is not positive";
        return v;
    }
    const Rational& dist = v.lattice->distance;
    if (dist < Rational(1)) {
        v.reason = "holonomy distance " + dist.to_string() + " < 1";
        return v;
    }
    if (dist > Rational(1)) {
        v.admissible = true;
        v.which = AdmissibleCase::A;
        return v;
    }

    const auto integer_count = std::count_if(s.begin(), s.end(), [](const Rational& x) { return x.is_integer(); });
    if (s.size() == 2 && s[0] == s[1] && !s[0].is_integer()) {
        v.admissible = true;
        v.which = AdmissibleCase::B;
        return v;
    }
    if (integer_count == static_cast<std::ptrdiff_t>(s.size())) {
        std::int64_t excess_sum = 0;
        std::int64_t excess_max = 0;
        for (const auto& x : s) {
            excess_sum = detail::checked_add(excess_sum, x.num() - 1);
            excess_max = std::max(excess_max, x.num() - 1);
        }
        if (2 * excess_max <= excess_sum) {
            v.admissible = true;
            v.which = AdmissibleCase::C;
            return v;
        }
        v.reason = "integer angles at distance 1 with 2*max(beta-1) > sum(beta-1)";
        return v;
    }
    if (integer_count == 0) {
        v.reason = s.size() == 2 ? "two unequal cone angles at distance 1"
                                 : "distance 1 with no integer angle";
        return v;
    }
    if (auto w = coaxial_check(s)) {
        v.admissible = true;
        v.which = AdmissibleCase::D;
        v.coaxial = std::move(w);
        return v;
    }
    v.reason = "distance 1 with mixed angles and no coaxial witness";
    return v;
}

/// Closed-form criterion for angles all below 2*pi; an independent check of
/// decide_admissible in that regime.
inline bool troyanov_admissible(const AngleVector& beta)
{
    if (beta.size() < 2) throw std::invalid_argument("troyanov_admissible: needs at least two entries");
    for (const auto& b : beta)
        if (b >= Rational(1)) throw std::invalid_argument("troyanov_admissible: entry " + b.to_string() + " is not below 1");

    const auto n = static_cast<std::int64_t>(beta.size());
    if (n == 2) return beta[0] == beta[1];

    Rational sum(0);
    for (const auto& b : beta) sum += b;
    if (!(sum - n > Rational(-2))) return false;
    for (const auto& b : beta) {
        const Rational lhs = std::min(Rational(2), b * 2) + (n - 2);
        if (!(lhs > sum)) return false;
    }
    return true;
}

} // namespace hurwitz
