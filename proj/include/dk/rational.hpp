#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace dk {

// Exact rational coefficients. All arithmetic in the kernel is over Q.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Accepts "p", "-p", "p/q". Throws std::invalid_argument on junk.
inline Rational parse_rational(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0)
        throw std::invalid_argument("bad rational literal: '" + s + "'");
    r.canonicalize();
    if (r.get_den() == 0)
        throw std::invalid_argument("zero denominator in rational literal: '" + s + "'");
    return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

}  // namespace dk
