// Infinite families of exceptional data together with the base angles that
// certify them.
//
//   P2K_A  d = 2k,  [(k1,k2), (2^k), (2^k)]                     k1+k2 = 2k, k1 != k2
//   P2K_B  d = 2k,  [(2^k), (2^j1, 2k-2j1), (2^j2, 2k-2j2)]      j1+j2 = k, j1 != j2, k >= 3
//   P3K    d = 3k,  [(k-2, 2^(k+1)), (3^k), (3^k)]               k odd, k >= 3
//   PRK_A  d = rk,  [(2k-1, 1^((r-2)k+1)), (r^k), (r^k)]         r, k >= 2
//   PRK_B  d = rk,  [(j1, j2, 1^((r-2)k)), (r^k), (r^k)]         j1+j2 = 2k, j1 != j2
//
// Rows are kept in the order above so that recommended_beta lines up with them.
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "hurwitz/angles.hpp"
#include "hurwitz/branch_data.hpp"

namespace hurwitz {

enum class FamilyId { P2K_A, P2K_B, P3K, PRK_A, PRK_B };

inline const char* to_string(FamilyId f)
{
    switch (f) {
    case FamilyId::P2K_A: return "P2K_A";
    case FamilyId::P2K_B: return "P2K_B";
    case FamilyId::P3K: return "P3K";
    case FamilyId::PRK_A: return "PRK_A";
    case FamilyId::PRK_B: return "PRK_B";
    }
    return "?";
}

enum class Variant { A, B };

struct FamilyInstance {
    BranchDatum datum;
    AngleVector recommended_beta;
    FamilyId family;
    std::vector<int> params; // (k, k1, k2) | (k, j1, j2) | (k) | (r, k) | (r, k, j1, j2)
};

class FamilyError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

namespace detail {

inline std::vector<int> repeat(int value, int count) { return std::vector<int>(count, value); }

inline std::vector<int> concat(std::vector<int> a, const std::vector<int>& b)
{
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

} // namespace detail

/// Variant A takes (k1, k2), variant B takes (j1, j2). Base angles (1/2, 1/2, 1/2).
inline FamilyInstance family_2k(int k, Variant variant, int a, int b)
{
    using detail::concat;
    using detail::repeat;
    const AngleVector half{Rational(1, 2), Rational(1, 2), Rational(1, 2)};
    if (variant == Variant::A) {
        if (k < 2) throw FamilyError("family_2k A: needs k >= 2");
        if (a < 1 || b < 1 || a + b != 2 * k || a == b)
            throw FamilyError("family_2k A: needs k1 + k2 = 2k, k1 != k2, both >= 1");
        BranchDatum d{2 * k, {Partition{a, b}, Partition(repeat(2, k)), Partition(repeat(2, k))}};
        return {d, half, FamilyId::P2K_A, {k, a, b}};
    }
    if (k < 3) throw FamilyError("family_2k B: needs k >= 3");
    if (a < 1 || b < 1 || a + b != k || a == b) throw FamilyError("family_2k B: needs j1 + j2 = k, j1 != j2, both >= 1");
    BranchDatum d{2 * k,
                  {Partition(repeat(2, k)), Partition(concat(repeat(2, a), {2 * k - 2 * a})),
                   Partition(concat(repeat(2, b), {2 * k - 2 * b}))}};
    return {d, half, FamilyId::P2K_B, {k, a, b}};
}

/// Base angles (1/2, 2/3, 2/3).
inline FamilyInstance family_3k(int k)
{
    using detail::concat;
    using detail::repeat;
    if (k < 3 || k % 2 == 0) throw FamilyError("family_3k: needs k odd and k >= 3");
    BranchDatum d{3 * k,
                  {Partition(concat({k - 2}, repeat(2, k + 1))), Partition(repeat(3, k)), Partition(repeat(3, k))}};
    return {d, AngleVector{Rational(1, 2), Rational(2, 3), Rational(2, 3)}, FamilyId::P3K, {k}};
}

/// Variant B takes (j1, j2); variant A ignores them. Base angles (1, 1/r, 1/r).
inline FamilyInstance family_rk(int r, int k, Variant variant, int j1 = 0, int j2 = 0)
{
    using detail::concat;
    using detail::repeat;
    if (r < 2 || k < 2) throw FamilyError("family_rk: needs r >= 2 and k >= 2");
    const AngleVector beta{Rational(1), Rational(1, r), Rational(1, r)};
    const Partition cyc(repeat(r, k));
    if (variant == Variant::A) {
        BranchDatum d{r * k, {Partition(concat({2 * k - 1}, repeat(1, (r - 2) * k + 1))), cyc, cyc}};
        return {d, beta, FamilyId::PRK_A, {r, k}};
    }
    if (j1 < 1 || j2 < 1 || j1 + j2 != 2 * k || j1 == j2)
        throw FamilyError("family_rk B: needs j1 + j2 = 2k, j1 != j2, both >= 1");
    BranchDatum d{r * k, {Partition(concat({j1, j2}, repeat(1, (r - 2) * k))), cyc, cyc}};
    return {d, beta, FamilyId::PRK_B, {r, k, j1, j2}};
}

inline bool is_prime(int d)
{
    if (d < 2) return false;
    for (int p = 2; p * p <= d; ++p)
        if (d % p == 0) return false;
    return true;
}

/// One exceptional datum for each composite degree: the first P2K_A member for
/// even d, otherwise PRK_A with r the least prime factor.
inline FamilyInstance nonprime_witness(int d)
{
    if (d < 4 || is_prime(d)) throw FamilyError("nonprime_witness: " + std::to_string(d) + " is not composite");
    if (d % 2 == 0) return family_2k(d / 2, Variant::A, d / 2 + 1, d / 2 - 1);
    int r = 3;
    while (d % r != 0) r += 2;
    return family_rk(r, d / r, Variant::A);
}

/// Every family member of degree d, one per unordered split.
inline std::vector<FamilyInstance> all_instances(int d)
{
    std::vector<FamilyInstance> out;
    if (d % 2 == 0) {
        const int k = d / 2;
        if (k >= 2)
            for (int k1 = 2 * k - 1; k1 > k; --k1) out.push_back(family_2k(k, Variant::A, k1, 2 * k - k1));
        if (k >= 3)
            for (int j1 = 1; 2 * j1 < k; ++j1) out.push_back(family_2k(k, Variant::B, j1, k - j1));
    }
    if (d % 3 == 0 && (d / 3) % 2 == 1 && d / 3 >= 3) out.push_back(family_3k(d / 3));
    for (int r = 2; r <= d / 2; ++r) {
        if (d % r != 0) continue;
        const int k = d / r;
        if (k < 2) continue;
        out.push_back(family_rk(r, k, Variant::A));
        for (int j1 = 2 * k - 1; j1 > k; --j1) out.push_back(family_rk(r, k, Variant::B, j1, 2 * k - j1));
    }
    return out;
}

} // namespace hurwitz
