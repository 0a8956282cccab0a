#pragma once

#include <gmpxx.h>

#include <string>

namespace rsym {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

// "5", "-3/7"; always canonical.
inline std::string rat_str(const Rat& q) { return q.get_str(); }

inline Rat rat_pow(const Rat& base, unsigned long e) {
    Rat r = 1;
    Rat b = base;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

}  // namespace rsym
