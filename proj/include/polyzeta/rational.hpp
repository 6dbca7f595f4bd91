#ifndef POLYZETA_RATIONAL_HPP
#define POLYZETA_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace pz {

// Exact rational scalar. mpq_class arithmetic keeps results canonical;
// only the (num, den) constructor needs an explicit canonicalize.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline Rat rat(const Int& num, const Int& den) {
  Rat r(num);
  r /= Rat(den);
  return r;
}

// Parses "p/q" or "p". Throws std::invalid_argument on junk.
Rat rat_parse(const std::string& text);

inline bool is_zero(const Rat& r) { return sgn(r) == 0; }
inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline Rat factorial(unsigned n) {
  Int f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rat(f);
}

inline Int binomial(unsigned long n, unsigned long k) {
  Int b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

// C(n + k, k) for symbolic n given as an exact rational (used when
// evaluating binomial-basis polynomials at rational points).
Rat binomial_shifted(const Rat& n, unsigned k);

std::string rat_str(const Rat& r);

}  // namespace pz

#endif
