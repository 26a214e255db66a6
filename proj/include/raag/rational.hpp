#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace raag {

/// Exact rational scalar used throughout; all chart coordinates,
/// quasimorphism values and medians are computed over these.
using Rat = boost::rational<long long>;

inline Rat rat_abs(const Rat& r) { return r < Rat(0) ? -r : r; }

/// Smallest integer >= r.
inline long long rat_ceil(const Rat& r)
{
    long long q = r.numerator() / r.denominator();
    if (r.numerator() % r.denominator() != 0 && r > Rat(0)) ++q;
    return q;
}

/// Largest integer <= r.
inline long long rat_floor(const Rat& r)
{
    long long q = r.numerator() / r.denominator();
    if (r.numerator() % r.denominator() != 0 && r < Rat(0)) --q;
    return q;
}

/// Nearest integer, halves rounded away from zero.
inline long long rat_round(const Rat& r)
{
    const Rat two(2);
    if (r >= Rat(0)) return rat_floor(r + Rat(1, 2));
    return rat_ceil(r - Rat(1, 2));
}

inline std::string rat_to_string(const Rat& r)
{
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

/// Parses "7", "-3" or "p/q".
inline Rat rat_parse(const std::string& s)
{
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(std::stoll(s));
        long long num = std::stoll(s.substr(0, slash));
        long long den = std::stoll(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rat(num, den);
    } catch (const std::exception&) {
        throw std::invalid_argument("not a rational: '" + s + "'");
    }
}

inline Rat median3(const Rat& a, const Rat& b, const Rat& c)
{
    if ((a <= b && b <= c) || (c <= b && b <= a)) return b;
    if ((b <= a && a <= c) || (c <= a && a <= b)) return a;
    return c;
}

} // namespace raag
