// Exact number types used throughout: arbitrary-precision integers and
// normalized rationals (reduced, positive denominator).
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace weyltile {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InvalidTypeError : Error {
    using Error::Error;
};
struct DimensionError : Error {
    using Error::Error;
};
struct SingularError : Error {
    using Error::Error;
};
struct CapExceededError : Error {
    using Error::Error;
};
struct MismatchError : Error {
    using Error::Error;
};
struct InadmissibleError : Error {
    using Error::Error;
};
// Raised when a theorem-backed postcondition fails; must never fire.
struct InvariantViolationError : Error {
    using Error::Error;
};
struct ParseError : Error {
    using Error::Error;
};

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rat& r) { return rat_den(r) == 1; }

// floor(p/q) for q > 0.
inline Int rat_floor(const Rat& r) {
    Int p = rat_num(r), q = rat_den(r);
    Int d = p / q;
    if (p < 0 && d * q != p) --d;
    return d;
}

inline Int rat_ceil(const Rat& r) { return -rat_floor(-r); }

// Nearest integer, ties toward +infinity.
inline Int rat_round(const Rat& r) { return rat_floor(r + Rat(1, 2)); }

inline int sign(const Rat& r) { return r.sign(); }

// Canonical "p/q" encoding, q > 0, gcd(|p|,q) = 1 (maintained by cpp_rational).
inline std::string rat_to_string(const Rat& r) {
    return rat_num(r).str() + "/" + rat_den(r).str();
}

// Accepts "p", "p/q", optional sign; q must be nonzero.
inline Rat rat_from_string(const std::string& s) {
    auto bad = [&] { throw ParseError("malformed rational: '" + s + "'"); };
    if (s.empty()) bad();
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int p(s.substr(0, slash));
        Int q(s.substr(slash + 1));
        if (q == 0) bad();
        return Rat(p, q);
    } catch (const std::exception&) {
        bad();
    }
    return Rat();  // unreachable
}

}  // namespace weyltile
