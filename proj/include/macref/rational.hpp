#pragma once

#include <gmpxx.h>

#include <string>

#include "macref/errors.hpp"

namespace macref {

// Exact rational scalar. mpq_class keeps itself canonical (reduced, positive
// denominator), so equality is plain comparison.
using Rat = mpq_class;

inline Rat rat_of(long n, long d = 1) {
    Rat r(n, d);
    r.canonicalize();
    return r;
}

inline bool is_zero(const Rat& r) { return sgn(r) == 0; }
inline bool is_one(const Rat& r) { return r == 1; }

inline Rat rat_inv(const Rat& r) {
    if (is_zero(r)) throw zero_denominator_error("division by zero rational");
    return Rat(1) / r;
}

// "p/q" (or "p" when q = 1), matching the wire format.
inline std::string rat_to_string(const Rat& r) { return r.get_str(); }

inline Rat rat_from_string(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0) throw error("bad rational literal: " + s);
    r.canonicalize();
    return r;
}

// r^e for integer e (e may be negative when r != 0).
inline Rat rat_pow(const Rat& r, long e) {
    if (e == 0) return Rat(1);
    Rat base = e > 0 ? r : rat_inv(r);
    unsigned long k = static_cast<unsigned long>(e > 0 ? e : -e);
    Rat acc(1);
    while (k) {
        if (k & 1) acc *= base;
        base *= base;
        k >>= 1;
    }
    return acc;
}

} // namespace macref
