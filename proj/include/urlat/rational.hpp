#pragma once

#include <gmpxx.h>

#include <cctype>
#include <string>

#include "urlat/errors.hpp"

namespace urlat {

/// Exact rational scalar. All arithmetic in the library is exact; nothing is
/// ever rounded.
using Rat = mpq_class;
using Int = mpz_class;

inline int rat_sign(const Rat& r) { return sgn(r); }

inline Rat rat_abs(const Rat& r) { return abs(r); }

inline const Rat& rat_min(const Rat& a, const Rat& b) { return b < a ? b : a; }

inline const Rat& rat_max(const Rat& a, const Rat& b) { return a < b ? b : a; }

inline bool rat_is_integer(const Rat& r) { return r.get_den() == 1; }

/// base^k for k >= 0, with 0^0 = 1.
inline Rat rat_pow(const Rat& base, unsigned long k) {
  Rat out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), k);
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), k);
  return out;
}

/// base^e for integer e; base must be nonzero when e < 0.
inline Rat rat_pow_int(const Rat& base, long e) {
  if (e >= 0) return rat_pow(base, static_cast<unsigned long>(e));
  if (base == 0) throw PreconditionError("0 cannot be raised to a negative power");
  Rat inv(base.get_den(), base.get_num());
  inv.canonicalize();
  return rat_pow(inv, static_cast<unsigned long>(-e));
}

inline Int rat_floor(const Rat& r) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

inline Int rat_ceil(const Rat& r) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

inline unsigned long int_to_ulong(const Int& v) {
  if (v < 0 || !v.fits_ulong_p()) throw PreconditionError("index out of range: " + v.get_str());
  return v.get_ui();
}

/// Parses "p" or "p/q" (decimal digits, optional leading '-') into lowest terms.
inline Rat parse_rat(const std::string& s) {
  if (s.empty()) throw ParseError("empty rational literal");
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c)) && c != '-' && c != '/')
      throw ParseError("bad rational literal: " + s);
  }
  Rat r;
  if (mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0)
    throw ParseError("bad rational literal: " + s);
  if (sgn(Int(r.get_den())) == 0) throw ParseError("zero denominator: " + s);
  r.canonicalize();
  return r;
}

/// Canonical form: "p/q" in lowest terms, "p" when the denominator is 1.
inline std::string rat_str(const Rat& r) { return r.get_str(); }

}  // namespace urlat
