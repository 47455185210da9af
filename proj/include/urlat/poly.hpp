#pragma once

#include <algorithm>
#include <vector>

#include "urlat/rational.hpp"

namespace urlat {

/// Dense polynomial, coefficients c0..cd in ascending degree order.
using Poly = std::vector<Rat>;

inline void poly_trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline Poly poly_trimmed(Poly p) {
  poly_trim(p);
  return p;
}

inline bool poly_is_zero(const Poly& p) {
  for (const Rat& c : p)
    if (c != 0) return false;
  return true;
}

/// Degree of a trimmed nonzero polynomial; -1 for the zero polynomial.
inline int poly_degree(const Poly& p) {
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
    if (p[static_cast<size_t>(i)] != 0) return i;
  return -1;
}

inline const Rat& poly_leading(const Poly& p) {
  int d = poly_degree(p);
  if (d < 0) throw PreconditionError("zero polynomial has no leading coefficient");
  return p[static_cast<size_t>(d)];
}

inline Rat poly_eval(const Poly& p, const Rat& t) {
  Rat acc = 0;
  for (size_t i = p.size(); i-- > 0;) acc = acc * t + p[i];
  return acc;
}

inline Rat poly_eval_k(const Poly& p, unsigned long k) { return poly_eval(p, Rat(k)); }

inline Poly poly_add(const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()), Rat(0));
  for (size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  poly_trim(out);
  return out;
}

inline Poly poly_neg(Poly p) {
  for (Rat& c : p) c = -c;
  return p;
}

inline Poly poly_sub(const Poly& a, const Poly& b) { return poly_add(a, poly_neg(b)); }

inline Poly poly_scale(Poly p, const Rat& s) {
  if (s == 0) return {};
  for (Rat& c : p) c *= s;
  return p;
}

inline Poly poly_mul(const Poly& a, const Poly& b) {
  if (poly_is_zero(a) || poly_is_zero(b)) return {};
  Poly out(a.size() + b.size() - 1, Rat(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  poly_trim(out);
  return out;
}

/// p(alpha + beta * t) as a polynomial in t.
inline Poly poly_compose_affine(const Poly& p, const Rat& alpha, const Rat& beta) {
  Poly out;
  Poly lin = poly_trimmed({alpha, beta});
  for (size_t i = p.size(); i-- > 0;) {
    out = poly_mul(out, lin);
    out = poly_add(out, Poly{p[i]});
  }
  return out;
}

inline Rat poly_sum_abs(const Poly& p) {
  Rat s = 0;
  for (const Rat& c : p) s += rat_abs(c);
  return s;
}

/// Smallest certified K >= 0 with sign(p(k)) == sign(leading coefficient) for
/// every integer k >= K. Uses the Cauchy root bound; p must be nonzero.
inline unsigned long poly_sign_stable_from(const Poly& p) {
  int d = poly_degree(p);
  if (d < 0) throw PreconditionError("sign bound of the zero polynomial");
  if (d == 0) return 0;
  Rat lc = rat_abs(p[static_cast<size_t>(d)]);
  Rat m = 0;
  for (int i = 0; i < d; ++i) m = rat_max(m, rat_abs(p[static_cast<size_t>(i)]));
  // every root lies strictly inside |t| < 1 + m/lc
  Rat bound = 1 + m / lc;
  return int_to_ulong(rat_floor(bound) + 1);
}

/// Decides p(k) >= 0 for every integer k >= 0 (exact: scan to the certified
/// sign-stability index, then the sign of the leading coefficient rules).
inline bool poly_nonneg_on_naturals(const Poly& p) {
  if (poly_is_zero(p)) return true;
  if (rat_sign(poly_leading(p)) < 0) return false;
  unsigned long K = poly_sign_stable_from(p);
  for (unsigned long k = 0; k < K; ++k)
    if (poly_eval_k(p, k) < 0) return false;
  return true;
}

inline bool poly_nonpos_on_naturals(const Poly& p) { return poly_nonneg_on_naturals(poly_neg(p)); }

}  // namespace urlat
