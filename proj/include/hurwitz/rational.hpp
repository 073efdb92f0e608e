// Exact rational numbers over checked 64-bit integers.
//
// Every value is kept reduced with a positive denominator. Arithmetic that
// would leave the int64 range throws std::overflow_error instead of wrapping.
#pragma once

#include <cstdint>
#include <compare>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <charconv>

namespace hurwitz {

namespace detail {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("rational: addition overflow");
    return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("rational: subtraction overflow");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("rational: multiplication overflow");
    return r;
}

inline std::int64_t checked_neg(std::int64_t a)
{
    return checked_sub(0, a);
}

// Floor division for b > 0.
inline std::int64_t floor_div(std::int64_t a, std::int64_t b)
{
    std::int64_t q = a / b;
    if ((a % b != 0) && (a < 0)) --q;
    return q;
}

} // namespace detail

class Rational {
public:
    constexpr Rational() = default;
    constexpr Rational(std::int64_t value) : num_(value) {} // NOLINT: implicit from integers is intended

    Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den)
    {
        if (den == 0) throw std::domain_error("rational: zero denominator");
        normalize();
    }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_integer() const { return den_ == 1; }
    bool is_zero() const { return num_ == 0; }
    bool is_positive() const { return num_ > 0; }
    bool is_negative() const { return num_ < 0; }

    std::int64_t floor() const { return detail::floor_div(num_, den_); }
    std::int64_t ceil() const { return -detail::floor_div(detail::checked_neg(num_), den_); }

    // Only meaningful when is_integer().
    std::int64_t to_integer() const
    {
        if (den_ != 1) throw std::domain_error("rational: " + to_string() + " is not an integer");
        return num_;
    }

    Rational operator-() const
    {
        Rational r;
        r.num_ = detail::checked_neg(num_);
        r.den_ = den_;
        return r;
    }

    Rational& operator+=(const Rational& o)
    {
        // a/b + c/d with g = gcd(b, d): (a*(d/g) + c*(b/g)) / (b/g*d)
        const std::int64_t g = std::gcd(den_, o.den_);
        const std::int64_t lhs = detail::checked_mul(num_, o.den_ / g);
        const std::int64_t rhs = detail::checked_mul(o.num_, den_ / g);
        num_ = detail::checked_add(lhs, rhs);
        den_ = detail::checked_mul(den_ / g, o.den_);
        normalize();
        return *this;
    }

    Rational& operator-=(const Rational& o) { return *this += -o; }

    Rational& operator*=(const Rational& o)
    {
        // cross-reduce first so intermediate products stay small
        const std::int64_t g1 = std::gcd(num_, o.den_);
        const std::int64_t g2 = std::gcd(o.num_, den_);
        const std::int64_t a = g1 ? num_ / g1 : num_;
        const std::int64_t d = g1 ? o.den_ / g1 : o.den_;
        const std::int64_t c = g2 ? o.num_ / g2 : o.num_;
        const std::int64_t b = g2 ? den_ / g2 : den_;
        num_ = detail::checked_mul(a, c);
        den_ = detail::checked_mul(b, d);
        normalize();
        return *this;
    }

    Rational& operator/=(const Rational& o)
    {
        if (o.num_ == 0) throw std::domain_error("rational: division by zero");
        Rational inv;
        inv.num_ = o.den_;
        inv.den_ = o.num_;
        if (inv.den_ < 0) {
            inv.num_ = detail::checked_neg(inv.num_);
            inv.den_ = detail::checked_neg(inv.den_);
        }
        return *this *= inv;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) = default;

    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        // denominators are positive, so the sign of ad - cb decides; 128-bit keeps it exact
        const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
        const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
        return lhs <=> rhs;
    }

    std::string to_string() const
    {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

private:
    void normalize()
    {
        if (den_ < 0) {
            num_ = detail::checked_neg(num_);
            den_ = detail::checked_neg(den_);
        }
        const std::int64_t g = std::gcd(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

inline Rational abs(const Rational& r) { return r.is_negative() ? -r : r; }

/// Parses `p/q` or `p` (optionally signed). Decimal notation is rejected so that
/// every value entering the library is exact.
inline Rational parse_rational(std::string_view text)
{
    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
        return s;
    };
    auto parse_int = [&](std::string_view s) {
        s = trim(s);
        if (!s.empty() && s.front() == '+') s.remove_prefix(1);
        std::int64_t v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
            throw std::invalid_argument("not an exact rational: '" + std::string(text) + "'");
        return v;
    };
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

} // namespace hurwitz

template <>
struct std::hash<hurwitz::Rational> {
    std::size_t operator()(const hurwitz::Rational& r) const noexcept
    {
        return std::hash<std::int64_t>{}(r.num()) * 1000003u ^ std::hash<std::int64_t>{}(r.den());
    }
};
