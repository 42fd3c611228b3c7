#pragma once

// Coefficient fields. Every container in the library carries its field
// descriptor by value; elements themselves are plain values, so two fields of
// the same kind but different characteristic never mix silently.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "cidual/error.hpp"

namespace cidual {

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// Z/p for a prime p < 2^31.
class PrimeField {
public:
    using value_type = std::uint32_t;

    explicit PrimeField(std::uint32_t p = 101) : p_(p) {
        if (!is_prime(p) || p >= (1u << 31))
            throw PreconditionError("PrimeField: modulus " + std::to_string(p) + " is not a prime below 2^31");
    }

    std::uint32_t characteristic() const { return p_; }
    std::string name() const { return "F" + std::to_string(p_); }

    value_type zero() const { return 0; }
    value_type one() const { return 1; }
    value_type from_int(long long v) const {
        long long r = v % static_cast<long long>(p_);
        if (r < 0) r += p_;
        return static_cast<value_type>(r);
    }

    value_type add(value_type a, value_type b) const {
        std::uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    value_type sub(value_type a, value_type b) const { return a >= b ? a - b : a + p_ - b; }
    value_type neg(value_type a) const { return a == 0 ? 0 : p_ - a; }
    value_type mul(value_type a, value_type b) const {
        return static_cast<value_type>((static_cast<std::uint64_t>(a) * b) % p_);
    }
    value_type inv(value_type a) const {
        if (a == 0) throw PreconditionError("PrimeField: inverse of zero");
        // extended Euclid
        long long t = 0, new_t = 1, r = p_, new_r = a;
        while (new_r != 0) {
            long long q = r / new_r;
            long long tmp = t - q * new_t;
            t = new_t;
            new_t = tmp;
            tmp = r - q * new_r;
            r = new_r;
            new_r = tmp;
        }
        return from_int(t);
    }
    value_type div(value_type a, value_type b) const { return mul(a, inv(b)); }
    bool is_zero(value_type a) const { return a == 0; }
    bool is_one(value_type a) const { return a == 1; }
    bool equal(value_type a, value_type b) const { return a == b; }

    /// Symmetric representative in (-p/2, p/2], used for printing.
    std::string to_string(value_type a) const {
        long long v = a;
        if (v > static_cast<long long>(p_ / 2)) v -= p_;
        return std::to_string(v);
    }

    /// Accepts integers and fractions "a/b".
    value_type parse(std::string_view text) const {
        auto slash = text.find('/');
        if (slash == std::string_view::npos) return from_int(parse_integer(text));
        value_type den = from_int(parse_integer(text.substr(slash + 1)));
        if (den == 0) throw ParseError("denominator divisible by the characteristic: " + std::string(text));
        return div(from_int(parse_integer(text.substr(0, slash))), den);
    }

    bool operator==(const PrimeField& other) const { return p_ == other.p_; }

private:
    static long long parse_integer(std::string_view text) {
        std::string s(text);
        std::size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(s, &used);
        } catch (const std::exception&) {
            throw ParseError("not an integer: '" + s + "'");
        }
        if (used != s.size()) throw ParseError("not an integer: '" + s + "'");
        return v;
    }

    std::uint32_t p_;
};

/// The rationals, with exact arbitrary-precision entries.
class RationalField {
public:
    using value_type = boost::multiprecision::cpp_rational;

    std::uint32_t characteristic() const { return 0; }
    std::string name() const { return "Q"; }

    value_type zero() const { return value_type(0); }
    value_type one() const { return value_type(1); }
    value_type from_int(long long v) const { return value_type(v); }

    value_type add(const value_type& a, const value_type& b) const { return a + b; }
    value_type sub(const value_type& a, const value_type& b) const { return a - b; }
    value_type neg(const value_type& a) const { return -a; }
    value_type mul(const value_type& a, const value_type& b) const { return a * b; }
    value_type inv(const value_type& a) const {
        if (a == 0) throw PreconditionError("RationalField: inverse of zero");
        return value_type(1) / a;
    }
    value_type div(const value_type& a, const value_type& b) const { return mul(a, inv(b)); }
    bool is_zero(const value_type& a) const { return a == 0; }
    bool is_one(const value_type& a) const { return a == 1; }
    bool equal(const value_type& a, const value_type& b) const { return a == b; }

    std::string to_string(const value_type& a) const { return a.str(); }

    value_type parse(std::string_view text) const {
        std::string s(text);
        try {
            return value_type(s);
        } catch (const std::exception&) {
            throw ParseError("not a rational number: '" + s + "'");
        }
    }

    bool operator==(const RationalField&) const { return true; }
};

template <class F>
concept Field = requires(const F f, typename F::value_type a) {
    { f.zero() } -> std::convertible_to<typename F::value_type>;
    { f.add(a, a) } -> std::convertible_to<typename F::value_type>;
    { f.mul(a, a) } -> std::convertible_to<typename F::value_type>;
    { f.inv(a) } -> std::convertible_to<typename F::value_type>;
    { f.is_zero(a) } -> std::convertible_to<bool>;
    { f.characteristic() } -> std::convertible_to<std::uint32_t>;
};

/// (-1)^k as a field element.
template <Field F>
typename F::value_type sign(const F& field, long long k) {
    return (k % 2 == 0) ? field.one() : field.neg(field.one());
}

inline int sign_int(long long k) { return (k % 2 == 0) ? 1 : -1; }

}  // namespace cidual
