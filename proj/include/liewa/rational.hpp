#pragma once

// Exact scalars: arbitrary-precision integers and rationals (GMP), plus the
// extended nonnegative value used for weak amenability constants.

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "liewa/error.hpp"

namespace liewa {

using Integer = mpz_class;
using Rational = mpq_class;

/// Bit height of a rational, used to pick pivots that limit coefficient growth.
inline std::size_t height(const Rational& q)
{
    if (sgn(q) == 0) return 0;
    return mpz_sizeinbase(q.get_num_mpz_t(), 2) + mpz_sizeinbase(q.get_den_mpz_t(), 2);
}

inline std::string to_string(const Integer& z) { return z.get_str(); }

/// "p/q", or "p" when the denominator is 1.
inline std::string to_string(const Rational& q)
{
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// Parses "p", "-p" or "p/q". Throws Error(ParseError) on malformed text or a zero denominator.
inline Rational parse_rational(std::string_view text)
{
    auto bad = [&] { return Error(ErrorKind::ParseError, "malformed rational '" + std::string(text) + "'"); };
    if (text.empty()) throw bad();
    auto valid_int = [](std::string_view s, bool allow_sign) {
        std::size_t i = 0;
        if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
        if (i >= s.size()) return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    };
    auto strip_plus = [](std::string_view s) { return (!s.empty() && s[0] == '+') ? s.substr(1) : s; };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        if (!valid_int(text, true)) throw bad();
        return Rational(Integer(std::string(strip_plus(text))));
    }
    auto num = text.substr(0, slash);
    auto den = text.substr(slash + 1);
    if (!valid_int(num, true) || !valid_int(den, false)) throw bad();
    Integer d(std::string{den});
    if (d == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
    Rational q(Integer(std::string(strip_plus(num))), d);
    q.canonicalize();
    return q;
}

/// A nonnegative rational or +infinity. Infinity absorbs under multiplication.
class Extended {
public:
    Extended() : value_(1) {}
    Extended(Rational v) : value_(std::move(v))
    {
        if (sgn(*value_) < 0) throw Error(ErrorKind::InvalidArgument, "extended value must be nonnegative");
    }
    static Extended infinity()
    {
        Extended e;
        e.value_.reset();
        return e;
    }

    bool is_infinite() const { return !value_.has_value(); }
    const Rational& value() const
    {
        if (!value_) throw Error(ErrorKind::InvalidArgument, "value() on infinite constant");
        return *value_;
    }

    friend Extended operator*(const Extended& a, const Extended& b)
    {
        if (a.is_infinite() || b.is_infinite()) return infinity();
        return Extended(Rational(*a.value_ * *b.value_));
    }
    Extended& operator*=(const Extended& o) { return *this = *this * o; }

    friend bool operator==(const Extended& a, const Extended& b)
    {
        if (a.is_infinite() || b.is_infinite()) return a.is_infinite() == b.is_infinite();
        return *a.value_ == *b.value_;
    }

    std::string str() const { return is_infinite() ? "inf" : to_string(*value_); }

    static Extended parse(std::string_view text)
    {
        if (text == "inf") return infinity();
        return Extended(parse_rational(text));
    }

private:
    std::optional<Rational> value_;
};

} // namespace liewa
