#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>

namespace md {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

struct CapExceeded : std::runtime_error {
    explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};
struct IdentityDifference : std::runtime_error {
    explicit IdentityDifference(const std::string& what) : std::runtime_error(what) {}
};
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};
struct CertificationFailed : std::runtime_error {
    explicit CertificationFailed(const std::string& what) : std::runtime_error(what) {}
};
struct ZeroVector : std::invalid_argument {
    explicit ZeroVector(const std::string& what) : std::invalid_argument(what) {}
};
struct NoConstructionApplicable : std::runtime_error {
    explicit NoConstructionApplicable(const std::string& what) : std::runtime_error(what) {}
};

inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b, r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

inline Int ceil_div(const Int& a, const Int& b) { return -floor_div(-a, b); }

// nonnegative remainder in [0, |b|)
inline Int mod_floor(const Int& a, const Int& b) {
    Int m = (b < 0) ? Int(-b) : b;
    Int r = a % m;
    if (r < 0) r += m;
    return r;
}

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int lcm(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }

inline Int num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rat& r) { return boost::multiprecision::denominator(r); }

// floor of a rational
inline Int floor_rat(const Rat& r) { return floor_div(num(r), den(r)); }
inline Int ceil_rat(const Rat& r) { return ceil_div(num(r), den(r)); }

// fractional part in [0,1)
inline Rat frac(const Rat& r) { return r - Rat(floor_rat(r)); }

// distance from r to the nearest integer, in [0, 1/2]
inline Rat dist_to_int(const Rat& r) {
    Rat f = frac(r);
    Rat g = Rat(1) - f;
    return f < g ? f : g;
}

inline std::string rat_str(const Rat& r) {
    std::ostringstream os;
    os << num(r);
    if (den(r) != 1) os << "/" << den(r);
    return os.str();
}

// "a/b (~0.123457)" rendering; fraction normative, decimal advisory.
std::string rat_pretty(const Rat& r);

}  // namespace md
