// Shared scalar types and error helpers.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <sstream>
#include <stdexcept>
#include <string>

namespace schubert {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Precondition failure on caller-supplied data.
inline void require(bool ok, const std::string& msg) {
    if (!ok) throw std::invalid_argument(msg);
}

// Failure of a fact the theory guarantees; reaching this means a bug.
inline void internal_check(bool ok, const std::string& msg) {
    if (!ok) throw std::logic_error(msg);
}

inline Rat rat_pow(const Rat& base, long long e) {
    if (e == 0) return Rat(1);
    Rat b = base;
    long long k = e;
    if (k < 0) {
        require(b != 0, "rat_pow: negative power of zero");
        b = Rat(1) / b;
        k = -k;
    }
    Rat acc(1);
    while (k > 0) {
        if (k & 1) acc *= b;
        b *= b;
        k >>= 1;
    }
    return acc;
}

// Canonical text form "p" or "p/q" with q > 0.
inline std::string rat_to_string(const Rat& r) {
    std::ostringstream os;
    os << numerator(r);
    if (denominator(r) != 1) os << "/" << denominator(r);
    return os.str();
}

inline Rat rat_from_string(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        require(den != 0, "rational with zero denominator: " + s);
        return Rat(num, den);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("malformed rational: " + s);
    }
}

}  // namespace schubert
