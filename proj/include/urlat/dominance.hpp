#pragma once

#include <functional>
#include <optional>
#include <variant>

#include "urlat/scalar_map.hpp"

namespace urlat {

/// |f| <= c*z holds everywhere, c is least, and along a common tail the ratio
/// |f|/z converges to tail_limit (0 when f has bounded support).
struct DominanceBounded {
  Rat c;
  Rat tail_limit;
};

/// No constant works. witness(j) is a point p with |f|(p) > j * z(p); the
/// generator is pure (same j gives the same point).
struct DominanceUnbounded {
  std::function<Rat(unsigned long)> witness;
};

using DominanceResult = std::variant<DominanceBounded, DominanceUnbounded>;

/// Decides whether some c >= 0 satisfies |f| <= c*z pointwise, exactly.
/// z must be nonnegative. Asymptotic comparisons along tails are certified by
/// polynomial sign-stability bounds, never by floating point.
inline DominanceResult dominance(const ScalarMap& f, const ScalarMap& z) {
  if (!is_nonneg(z)) throw PreconditionError("dominance requires a nonnegative comparator");
  Rat c = 0;
  std::optional<Rat> zero_point;  // z = 0 < |f| here: no constant works
  auto consider = [&](const Rat& p, const Rat& fv_abs) {
    if (zero_point || fv_abs == 0) return;
    Rat zv = z.eval(p);
    if (zv == 0) zero_point = p;
    else c = rat_max(c, fv_abs / zv);
  };
  for (const auto& [p, v] : f.samples()) consider(p, rat_abs(v));
  auto constant_witness = [](const Rat& p) {
    return DominanceUnbounded{[p](unsigned long) { return p; }};
  };
  if (!f.tail()) {
    if (zero_point) return constant_witness(*zero_point);
    return DominanceBounded{c, 0};
  }
  const TailRule tf = *f.tail();

  // where (and how) z covers f's tail lattice
  IndexOverlap ov;
  if (z.tail()) ov = lattice_overlap(tf, *z.tail());
  bool covered = ov.any && ov.mod == 1;
  if (!covered) {
    if (zero_point) return constant_witness(*zero_point);
    // infinitely many f-tail points carry z = 0; pick one with f != 0
    unsigned long k = 0;
    auto on_z_lattice = [&](unsigned long k) {
      return ov.any && k >= ov.k0 && (k - ov.k0) % ov.mod == 0;
    };
    while (on_z_lattice(k) || poly_eval_k(tf.poly, k) == 0 ||
           z.samples().count(tf.point_at(k)) != 0)
      ++k;
    return constant_witness(tf.point_at(k));
  }

  const TailRule tz = *z.tail();
  // z along f's lattice, valid for indices k >= ov.k0 off z's sample set:
  // value pz_eff(k) * ratio_eff^k
  Rat q_off = (tf.start - tz.start) / tz.step;  // integer since mod == 1
  Rat q_step = tf.step / tz.step;               // positive integer
  long sigma = static_cast<long>(mpz_get_si(Int(q_off.get_num()).get_mpz_t()));
  unsigned long mu = int_to_ulong(Int(q_step.get_num()));
  Poly pz_eff = poly_scale(poly_compose_affine(tz.poly, q_off, q_step), rat_pow_int(tz.ratio, sigma));
  Rat ratio_eff = rat_pow(tz.ratio, mu);

  int df = poly_degree(tf.poly), dz = poly_degree(pz_eff);
  bool growth_unbounded = tf.ratio > ratio_eff || (tf.ratio == ratio_eff && df > dz);
  Rat limit = 0;
  if (tf.ratio == ratio_eff && df == dz)
    limit = rat_abs(poly_leading(tf.poly)) / poly_leading(pz_eff);

  unsigned long K = ov.k0;
  K = std::max(K, poly_sign_stable_from(tf.poly));
  K = std::max(K, poly_sign_stable_from(pz_eff));
  for (const auto& [p, v] : z.samples())
    if (auto k = tf.index_of(p)) K = std::max(K, *k + 1);
  if (!growth_unbounded) {
    // beyond the sign-stability index of q the ratio |f|/z is monotone:
    // q(k) = r_f*|pf(k+1)|*pz(k) - r_z*|pf(k)|*pz(k+1)
    Poly apf = rat_sign(poly_leading(tf.poly)) < 0 ? poly_neg(tf.poly) : tf.poly;
    Poly q = poly_sub(
        poly_scale(poly_mul(poly_compose_affine(apf, Rat(1), Rat(1)), pz_eff), tf.ratio),
        poly_scale(poly_mul(apf, poly_compose_affine(pz_eff, Rat(1), Rat(1))), ratio_eff));
    if (!poly_is_zero(q)) K = std::max(K, poly_sign_stable_from(q));
  }

  for (unsigned long k = 0; k <= K && !zero_point; ++k)
    consider(tf.point_at(k), rat_abs(tf.value_at(k)));
  if (zero_point) return constant_witness(*zero_point);

  if (growth_unbounded) {
    auto witness = [tf, pz_eff, ratio_eff, K](unsigned long j) -> Rat {
      unsigned long k = K + 1;
      auto exceeds = [&](unsigned long k) {
        Rat fv = rat_abs(tf.value_at(k));
        Rat zv = poly_eval_k(pz_eff, k) * rat_pow(ratio_eff, k);
        return fv > Rat(j) * zv;
      };
      while (!exceeds(k)) k += k / 2 + 1;
      return tf.point_at(k);
    };
    return DominanceUnbounded{std::move(witness)};
  }
  c = rat_max(c, limit);
  return DominanceBounded{c, limit};
}

}  // namespace urlat
