#ifndef ICRES_RATIONAL_HPP
#define ICRES_RATIONAL_HPP

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <type_traits>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

#include "error.hpp"

/**
 * Exact scalar and vector types shared by every module.
 *
 * Rational is GMP's mpq, which keeps itself in lowest terms with a positive
 * denominator after every operation.  Nothing in the library touches
 * floating point.
 */
namespace icres {

// Expression templates are off: every intermediate is a concrete value.
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int, boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational, boost::multiprecision::et_off>;

using IntVector = std::vector<Integer>;
using RationalVector = std::vector<Rational>;

inline std::string to_string(const Integer& x) { return x.str(); }

/// "p" when integral, otherwise "p/q".
inline std::string to_string(const Rational& x)
{
    if (denominator(x) == 1)
        return numerator(x).str();
    return numerator(x).str() + "/" + denominator(x).str();
}

template <typename T>
std::string to_string(std::span<const T> v)
{
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            out += ", ";
        out += to_string(v[i]);
    }
    return out + ")";
}

inline std::string to_string(const IntVector& v) { return to_string(std::span<const Integer>(v)); }
inline std::string to_string(const RationalVector& v) { return to_string(std::span<const Rational>(v)); }

/// Parses "p", "-p" or "p/q" into a reduced rational.
inline Rational parse_rational(const std::string& text)
{
    try {
        auto slash = text.find('/');
        if (slash == std::string::npos)
            return Rational(Integer(text));
        Integer den(text.substr(slash + 1));
        if (den == 0)
            throw Error(ErrorKind::ParseError, "zero denominator in '" + text + "'");
        return Rational(Integer(text.substr(0, slash)), den);
    }
    catch (const std::runtime_error& e) {
        if (dynamic_cast<const Error*>(&e))
            throw;
        throw Error(ErrorKind::ParseError, "not a rational: '" + text + "'");
    }
}

template <typename A, typename B>
auto dot(const std::vector<A>& a, const std::vector<B>& b)
{
    if (a.size() != b.size())
        throw Error(ErrorKind::DimensionMismatch,
                    "inner product of vectors of length " + std::to_string(a.size())
                    + " and " + std::to_string(b.size()));
    using R = std::conditional_t<std::is_same_v<A, Rational> || std::is_same_v<B, Rational>,
                                 Rational, Integer>;
    R sum = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        sum += a[i] * b[i];
    return sum;
}

template <typename T>
T coordinate_sum(const std::vector<T>& v)
{
    T sum = 0;
    for (const auto& x : v)
        sum += x;
    return sum;
}

inline bool is_integral(const RationalVector& v)
{
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return denominator(x) == 1; });
}

/// gcd of the absolute values of all entries; 0 for the zero vector.
inline Integer content(const IntVector& v)
{
    Integer g = 0;
    for (const auto& x : v) {
        if (x != 0)
            g = gcd(g, Integer(abs(x)));
        if (g == 1)
            break;
    }
    return g;
}

/// Divides by the content so the nonzero entries are coprime.  Direction is kept.
inline IntVector make_primitive(IntVector v)
{
    Integer g = content(v);
    if (g > 1)
        for (auto& x : v)
            x /= g;
    return v;
}

inline bool is_primitive(const IntVector& v) { return content(v) == 1; }

/// Smallest integer multiple of v (positive scale) with coprime entries.
inline IntVector clear_denominators(const RationalVector& v)
{
    Integer l = 1;
    for (const auto& x : v)
        l = lcm(l, Integer(denominator(x)));
    IntVector out;
    out.reserve(v.size());
    for (const auto& x : v)
        out.push_back(numerator(x) * (l / denominator(x)));
    return make_primitive(std::move(out));
}

inline RationalVector to_rational(const IntVector& v)
{
    return RationalVector(v.begin(), v.end());
}

inline IntVector unit_vector(std::size_t dim, std::size_t i)
{
    IntVector e(dim, 0);
    e[i] = 1;
    return e;
}

}   // namespace icres

#endif
