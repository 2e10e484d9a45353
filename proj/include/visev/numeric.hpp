#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace visev {

using Int = mpz_class;
using Rat = mpq_class;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when a configured resource budget is exhausted. Distinct from Error
// so callers can tier heavy computations instead of failing them.
struct BudgetExceeded : Error {
    using Error::Error;
};

struct ParseError : Error {
    int line;
    int col;
    ParseError(const std::string& msg, int line_, int col_)
        : Error(msg + " at line " + std::to_string(line_) + ", column " + std::to_string(col_)),
          line(line_), col(col_) {}
};

inline Rat rat_of(long num, long den = 1) {
    if (den == 0) throw Error("zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Accepts "p", "-p", "p/q".
inline Rat rat_from_string(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0) throw Error("bad rational literal: " + s);
    r.canonicalize();
    return r;
}

inline Int int_pow(const Int& b, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

inline Rat rat_pow(const Rat& b, unsigned long e) {
    Rat r;
    mpz_pow_ui(mpq_numref(r.get_mpq_t()), mpq_numref(b.get_mpq_t()), e);
    mpz_pow_ui(mpq_denref(r.get_mpq_t()), mpq_denref(b.get_mpq_t()), e);
    return r;
}

inline int sgn(const Rat& r) { return mpq_sgn(r.get_mpq_t()); }
inline int sgn(const Int& z) { return mpz_sgn(z.get_mpz_t()); }

// splitmix64; the single seed every randomized choice flows from.
struct Rng {
    uint64_t state;
    explicit Rng(uint64_t seed) : state(seed) {}
    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    // uniform in [lo, hi]
    int64_t int_in(int64_t lo, int64_t hi) {
        return lo + static_cast<int64_t>(next() % static_cast<uint64_t>(hi - lo + 1));
    }
    Rat small_rat(int64_t max_abs = 9, int64_t max_den = 4) {
        Int n(static_cast<long>(int_in(-max_abs, max_abs)));
        Int d(static_cast<long>(int_in(1, max_den)));
        Rat r(n, d);
        r.canonicalize();
        return r;
    }
};

inline uint64_t fnv1a64(std::string_view s) {
    uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

}  // namespace visev
