#pragma once

// Exact rational scalars. Everything in this library is computed over Q;
// no floating point appears anywhere.

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace adft {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

// "num/den", denominator omitted when 1.
inline std::string rat_to_string(const Rat& r) {
    if (is_integer(r)) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

// Strict inverse of rat_to_string: optional leading '-', decimal digits,
// optional "/digits" with a nonzero denominator.
inline Rat rat_from_string(const std::string& s) {
    auto fail = [&] { throw std::invalid_argument("bad rational: '" + s + "'"); };
    std::size_t pos = 0;
    if (pos < s.size() && s[pos] == '-') ++pos;
    std::size_t digits = 0;
    while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos, ++digits;
    if (digits == 0) fail();
    if (pos < s.size()) {
        if (s[pos] != '/') fail();
        ++pos;
        digits = 0;
        while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos, ++digits;
        if (digits == 0 || pos != s.size()) fail();
    }
    Rat r;
    if (mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0) fail();
    if (r.get_den() == 0) fail();
    r.canonicalize();
    return r;
}

}  // namespace adft
