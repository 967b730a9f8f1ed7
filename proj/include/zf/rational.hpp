#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace zf {

// Exact rational scalar used throughout the LP/IP engine and all reported
// parameter values. Comparisons are exact; no tolerances anywhere.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rat& r) { return mpz_cmp_ui(r.get_den_mpz_t(), 1) == 0; }

inline mpz_class rat_floor(const Rat& r) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

inline mpz_class rat_ceil(const Rat& r) {
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

// Smallest multiple of grid >= r (grid > 0).
inline Rat round_up_to_grid(const Rat& r, const Rat& grid) {
    Rat q = r / grid;
    return Rat(rat_ceil(q)) * grid;
}

inline long rat_to_long(const Rat& r) {
    if (!is_integer(r)) throw std::invalid_argument("rational is not an integer: " + r.get_str());
    if (!mpz_fits_slong_p(r.get_num_mpz_t())) throw std::overflow_error("integer too large");
    return mpz_get_si(r.get_num_mpz_t());
}

// "p/q" when non-integral, plain integer otherwise.
inline std::string rat_to_string(const Rat& r) { return r.get_str(); }

// Fixed-point decimal rendering with round-half-up, e.g. 5/3 -> "1.666667".
std::string rat_to_decimal(const Rat& r, int digits = 6);

// Accepts "p/q", integers, and plain decimals ("0.25", "-3.5e0" is not supported).
Rat rat_from_string(const std::string& s);

}  // namespace zf
