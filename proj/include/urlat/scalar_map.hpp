#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "urlat/poly.hpp"

namespace urlat {

/// Geometric-polynomial tail: the map takes value poly(k) * ratio^k at the
/// lattice point start + k*step, for every integer k >= 0.
/// Invariants after normalization: step > 0, ratio > 0, poly trimmed and
/// nonzero, no lattice point equals 0.
struct TailRule {
  Rat start;
  Rat step;
  Poly poly;
  Rat ratio;

  Rat point_at(unsigned long k) const { return start + Rat(k) * step; }

  Rat value_at(unsigned long k) const { return poly_eval_k(poly, k) * rat_pow(ratio, k); }

  /// Lattice index of p, when p is a lattice point.
  std::optional<unsigned long> index_of(const Rat& p) const {
    Rat q = (p - start) / step;
    if (!rat_is_integer(q) || q < 0) return std::nullopt;
    Int k(q.get_num());
    if (!k.fits_ulong_p()) throw PreconditionError("tail index exceeds machine range");
    return k.get_ui();
  }

  bool operator==(const TailRule&) const = default;
};

/// Same tail, reindexed to begin m lattice points later.
inline TailRule tail_shifted(const TailRule& t, unsigned long m) {
  TailRule out;
  out.start = t.point_at(m);
  out.step = t.step;
  out.ratio = t.ratio;
  out.poly = poly_scale(poly_compose_affine(t.poly, Rat(m), Rat(1)), rat_pow(t.ratio, m));
  return out;
}

/// Restriction of a tail to the index sub-progression k = k0 + j*w, j >= 0,
/// expressed as a tail in j.
inline TailRule tail_sublattice(const TailRule& t, unsigned long k0, unsigned long w) {
  TailRule out;
  out.start = t.point_at(k0);
  out.step = Rat(w) * t.step;
  out.ratio = rat_pow(t.ratio, w);
  out.poly = poly_scale(poly_compose_affine(t.poly, Rat(k0), Rat(w)), rat_pow(t.ratio, k0));
  return out;
}

enum class TailSign { kNonneg, kNonpos, kMixed };

/// Sign profile of the tail values over all indices k >= 0 (exact; the sign
/// of poly(k) * ratio^k equals the sign of poly(k) since ratio > 0).
inline TailSign tail_sign(const TailRule& t) {
  if (poly_nonneg_on_naturals(t.poly)) return TailSign::kNonneg;
  if (poly_nonpos_on_naturals(t.poly)) return TailSign::kNonpos;
  return TailSign::kMixed;
}

/// f-tail indices whose lattice point also lies on g's lattice at a
/// nonnegative g-index. When nonempty the solution set is exactly the
/// progression k = k0 + j*mod, j >= 0.
struct IndexOverlap {
  bool any = false;
  unsigned long k0 = 0;
  unsigned long mod = 1;
};

inline IndexOverlap lattice_overlap(const TailRule& f, const TailRule& g) {
  Rat q_off = (f.start - g.start) / g.step;
  Rat q_step = f.step / g.step;
  Int D;
  mpz_lcm(D.get_mpz_t(), q_off.get_den_mpz_t(), q_step.get_den_mpz_t());
  Rat ur = q_off * Rat(D);
  Rat pr = q_step * Rat(D);
  Int U(ur.get_num()), P(pr.get_num());
  // solve k * P == -U (mod D)
  Int g_ = gcd(P, D);
  if (!mpz_divisible_p(U.get_mpz_t(), g_.get_mpz_t())) return {};
  Int mod = D / g_;
  Int khat = 0;
  if (mod != 1) {
    Int a = P / g_, b = (-U) / g_;
    Int inv;
    mpz_invert(inv.get_mpz_t(), a.get_mpz_t(), mod.get_mpz_t());
    Int prod = b * inv;
    mpz_mod(khat.get_mpz_t(), prod.get_mpz_t(), mod.get_mpz_t());
  }
  // nonnegative g-index: q_off + k*q_step >= 0
  Int kmin = rat_ceil(-q_off / q_step);
  if (kmin < 0) kmin = 0;
  Int k0 = khat;
  if (kmin > khat) {
    Int delta = kmin - khat, steps;
    mpz_cdiv_q(steps.get_mpz_t(), delta.get_mpz_t(), mod.get_mpz_t());
    k0 = khat + steps * mod;
  }
  IndexOverlap ov;
  ov.any = true;
  ov.k0 = int_to_ulong(k0);
  ov.mod = int_to_ulong(mod);
  return ov;
}

/// Map Q -> Q vanishing outside an explicit finite sample table plus an
/// optional tail. Canonical form: sample values nonzero, 0 never a sample
/// point, sample points never on the tail lattice.
class ScalarMap {
 public:
  ScalarMap() = default;  // the zero map

  /// Validating constructor for external data: a sample point on the tail
  /// lattice is ambiguous and rejected.
  ScalarMap(std::map<Rat, Rat> samples, std::optional<TailRule> tail) {
    init(std::move(samples), std::move(tail), /*additive_collisions=*/false);
  }

  static ScalarMap from_points(const std::vector<std::pair<Rat, Rat>>& pts) {
    std::map<Rat, Rat> m;
    for (const auto& [p, v] : pts) m[p] += v;
    return ScalarMap(std::move(m), std::nullopt);
  }

  const std::map<Rat, Rat>& samples() const { return samples_; }
  const std::optional<TailRule>& tail() const { return tail_; }

  bool is_zero() const { return samples_.empty() && !tail_; }

  Rat eval(const Rat& p) const {
    auto it = samples_.find(p);
    if (it != samples_.end()) return it->second;
    if (tail_) {
      if (auto k = tail_->index_of(p)) return tail_->value_at(*k);
    }
    return 0;
  }

  bool operator==(const ScalarMap& o) const = default;

  /// Internal assembly: contributions at coinciding points add up, and a
  /// contribution on the tail lattice folds the tail head into the table.
  static ScalarMap assemble(std::map<Rat, Rat> contribs, std::optional<TailRule> tail) {
    ScalarMap out;
    out.init(std::move(contribs), std::move(tail), /*additive_collisions=*/true);
    return out;
  }

 private:
  void init(std::map<Rat, Rat> samples, std::optional<TailRule> tail, bool additive_collisions) {
    if (tail) {
      if (tail->step <= 0) throw ParseError("tail step must be positive");
      if (tail->ratio < 0) throw ParseError("tail ratio must be nonnegative");
      poly_trim(tail->poly);
      if (tail->poly.empty()) tail.reset();
    }
    if (tail) {
      Rat hit = -tail->start / tail->step;
      if (rat_is_integer(hit) && hit >= 0) throw ParseError("tail lattice passes through 0");
    }
    if (tail && tail->ratio == 0) {
      // only the first lattice point survives: poly(0) * 0^0 = poly(0)
      Rat v = tail->poly.empty() ? Rat(0) : tail->poly[0];
      if (v != 0) {
        auto [it, fresh] = samples.emplace(tail->start, v);
        if (!fresh) {
          if (!additive_collisions) throw ParseError("sample point collides with tail lattice");
          it->second += v;
        }
      }
      tail.reset();
    }
    if (tail) {
      // fold the tail head past any sample sitting on the lattice
      std::optional<unsigned long> worst;
      for (const auto& [p, v] : samples) {
        if (auto k = tail->index_of(p)) {
          if (!additive_collisions) throw ParseError("sample point collides with tail lattice");
          if (!worst || *k > *worst) worst = *k;
        }
      }
      if (worst) {
        unsigned long m = *worst + 1;
        for (unsigned long k = 0; k < m; ++k) samples[tail->point_at(k)] += tail->value_at(k);
        TailRule shifted = tail_shifted(*tail, m);
        poly_trim(shifted.poly);
        if (shifted.poly.empty()) tail.reset();
        else tail = shifted;
      }
    }
    for (auto it = samples.begin(); it != samples.end();) {
      if (it->first == 0) {
        if (it->second != 0) throw ParseError("0 cannot carry a sample value");
        it = samples.erase(it);
      } else if (it->second == 0) {
        it = samples.erase(it);
      } else {
        ++it;
      }
    }
    samples_ = std::move(samples);
    tail_ = std::move(tail);
  }

  std::map<Rat, Rat> samples_;
  std::optional<TailRule> tail_;
};

inline ScalarMap sm_zero() { return ScalarMap(); }

inline ScalarMap sm_scale(const ScalarMap& f, const Rat& s) {
  if (s == 0) return ScalarMap();
  std::map<Rat, Rat> out;
  for (const auto& [p, v] : f.samples()) out.emplace(p, v * s);
  std::optional<TailRule> tail = f.tail();
  if (tail) tail->poly = poly_scale(tail->poly, s);
  return ScalarMap::assemble(std::move(out), std::move(tail));
}

inline ScalarMap sm_add(const ScalarMap& f, const ScalarMap& g) {
  std::map<Rat, Rat> contribs = f.samples();
  for (const auto& [p, v] : g.samples()) contribs[p] += v;
  std::optional<TailRule> tail;
  if (f.tail() && g.tail()) {
    TailRule a = *f.tail(), b = *g.tail();
    if (a.step != b.step) throw TailIncompatible("tail steps differ");
    Rat off = (b.start - a.start) / a.step;
    if (!rat_is_integer(off)) throw TailIncompatible("tail lattices are offset by a fraction of the step");
    if (off < 0) std::swap(a, b), off = -off;
    // fold a's head so both tails start together
    unsigned long m = int_to_ulong(Int(off.get_num()));
    for (unsigned long k = 0; k < m; ++k) contribs[a.point_at(k)] += a.value_at(k);
    a = tail_shifted(a, m);
    if (a.ratio != b.ratio) throw TailIncompatible("tail ratios differ");
    Poly ps = poly_add(a.poly, b.poly);
    if (!poly_is_zero(ps)) tail = TailRule{a.start, a.step, std::move(ps), a.ratio};
  } else if (f.tail()) {
    tail = f.tail();
  } else if (g.tail()) {
    tail = g.tail();
  }
  return ScalarMap::assemble(std::move(contribs), std::move(tail));
}

inline ScalarMap sm_sub(const ScalarMap& f, const ScalarMap& g) { return sm_add(f, sm_scale(g, Rat(-1))); }

inline ScalarMap sm_abs(const ScalarMap& f) {
  std::map<Rat, Rat> out;
  for (const auto& [p, v] : f.samples()) out.emplace(p, rat_abs(v));
  std::optional<TailRule> tail = f.tail();
  if (tail) {
    switch (tail_sign(*tail)) {
      case TailSign::kNonneg:
        break;
      case TailSign::kNonpos:
        tail->poly = poly_neg(tail->poly);
        break;
      case TailSign::kMixed:
        throw TailIncompatible("sign-changing tail has no exact modulus");
    }
  }
  return ScalarMap::assemble(std::move(out), std::move(tail));
}

/// max(f, g) = (f + g + |f - g|) / 2, exact; throws TailIncompatible exactly
/// when the pointwise algebra has no closed form for these tails.
inline ScalarMap sm_max(const ScalarMap& f, const ScalarMap& g) {
  return sm_scale(sm_add(sm_add(f, g), sm_abs(sm_sub(f, g))), Rat(1, 2));
}

inline ScalarMap sm_min(const ScalarMap& f, const ScalarMap& g) {
  return sm_scale(sm_sub(sm_add(f, g), sm_abs(sm_sub(f, g))), Rat(1, 2));
}

enum class PointwiseKind { kAdd, kScale, kAbs, kMin, kMax };

inline ScalarMap pointwise(PointwiseKind kind, const ScalarMap& f, const ScalarMap* g = nullptr,
                           const Rat* lambda = nullptr) {
  switch (kind) {
    case PointwiseKind::kAdd:
      if (!g) throw PreconditionError("add needs a second operand");
      return sm_add(f, *g);
    case PointwiseKind::kScale:
      if (!lambda) throw PreconditionError("scale needs a scalar");
      return sm_scale(f, *lambda);
    case PointwiseKind::kAbs:
      return sm_abs(f);
    case PointwiseKind::kMin:
      if (!g) throw PreconditionError("min needs a second operand");
      return sm_min(f, *g);
    case PointwiseKind::kMax:
      if (!g) throw PreconditionError("max needs a second operand");
      return sm_max(f, *g);
  }
  throw PreconditionError("unknown pointwise kind");
}

inline bool has_bounded_support(const ScalarMap& f) { return !f.tail(); }

/// Hull of the nonzero points of a bounded-support map; empty for the zero map.
inline std::optional<std::pair<Rat, Rat>> support_interval(const ScalarMap& f) {
  if (f.tail()) throw PreconditionError("support interval of an unbounded map");
  if (f.samples().empty()) return std::nullopt;
  return std::make_pair(f.samples().begin()->first, f.samples().rbegin()->first);
}

inline bool is_nonneg(const ScalarMap& f) {
  for (const auto& [p, v] : f.samples())
    if (v < 0) return false;
  if (f.tail() && tail_sign(*f.tail()) != TailSign::kNonneg) return false;
  return true;
}

/// Exact max of |value| over tail indices k1..k2. Scans to the certified
/// eventual-monotonicity index, beyond which endpoints suffice.
inline Rat tail_abs_max_on_range(const TailRule& t, unsigned long k1, unsigned long k2) {
  if (k1 > k2) return 0;
  Rat best = 0;
  auto feed = [&](unsigned long k) { best = rat_max(best, rat_abs(t.value_at(k))); };
  if (k2 - k1 <= 4096) {
    for (unsigned long k = k1; k <= k2; ++k) feed(k);
    return best;
  }
  unsigned long Ks = poly_sign_stable_from(t.poly);
  Poly sp = rat_sign(poly_leading(t.poly)) < 0 ? poly_neg(t.poly) : t.poly;
  // growth direction of |value|: sign of ratio*|poly(k+1)| - |poly(k)|, valid beyond Ks
  Poly q = poly_sub(poly_scale(poly_compose_affine(sp, Rat(1), Rat(1)), t.ratio), sp);
  unsigned long Km = poly_is_zero(q) ? Ks : std::max(Ks, poly_sign_stable_from(q));
  for (unsigned long k = k1; k <= std::min(k2, Km); ++k) feed(k);
  if (k2 > Km) {
    feed(std::max(k1, Km));
    feed(k2);
  }
  return best;
}

/// Exact sup of |f| over the closed interval [a, b] (0 when no listed point
/// falls inside).
inline Rat sup_abs_on_interval(const ScalarMap& f, const Rat& a, const Rat& b) {
  if (a > b) throw PreconditionError("empty interval");
  Rat best = 0;
  for (auto it = f.samples().lower_bound(a); it != f.samples().end() && it->first <= b; ++it)
    best = rat_max(best, rat_abs(it->second));
  if (f.tail()) {
    const TailRule& t = *f.tail();
    Int lo = rat_ceil((a - t.start) / t.step);
    if (lo < 0) lo = 0;
    Int hi = rat_floor((b - t.start) / t.step);
    if (hi >= lo) best = rat_max(best, tail_abs_max_on_range(t, int_to_ulong(lo), int_to_ulong(hi)));
  }
  return best;
}

/// All listed points of f inside [a, b], ascending.
inline std::vector<Rat> points_in_interval(const ScalarMap& f, const Rat& a, const Rat& b) {
  std::vector<Rat> pts;
  for (auto it = f.samples().lower_bound(a); it != f.samples().end() && it->first <= b; ++it)
    pts.push_back(it->first);
  if (f.tail()) {
    const TailRule& t = *f.tail();
    Int lo = rat_ceil((a - t.start) / t.step);
    if (lo < 0) lo = 0;
    Int hi = rat_floor((b - t.start) / t.step);
    for (Int k = lo; k <= hi; ++k) pts.push_back(t.point_at(int_to_ulong(k)));
  }
  std::sort(pts.begin(), pts.end());
  return pts;
}

/// Indicator of the support of a bounded-support map.
inline ScalarMap indicator_of_support(const ScalarMap& f) {
  if (f.tail()) throw PreconditionError("indicator of an unbounded support");
  std::map<Rat, Rat> out;
  for (const auto& [p, v] : f.samples()) out.emplace(p, Rat(1));
  return ScalarMap(std::move(out), std::nullopt);
}

/// |f| restricted to the support of g: value |f(p)| where g(p) != 0, else 0.
/// Closed in the representation for every pair (the restricted tail is folded
/// until its sign is certified stable).
inline ScalarMap restrict_abs_to_support(const ScalarMap& f, const ScalarMap& g) {
  std::map<Rat, Rat> contribs;
  for (const auto& [p, v] : f.samples())
    if (g.eval(p) != 0) contribs[p] = rat_abs(v);
  std::optional<TailRule> tail;
  if (f.tail()) {
    const TailRule& tf = *f.tail();
    for (const auto& [p, v] : g.samples()) {
      if (auto k = tf.index_of(p)) contribs[p] = rat_abs(tf.value_at(*k));
    }
    if (g.tail()) {
      const TailRule& tg = *g.tail();
      IndexOverlap ov = lattice_overlap(tf, tg);
      if (ov.any) {
        // g-index along the common progression: kg(k) = q_off + k*q_step
        Rat q_off = (tf.start - tg.start) / tg.step;
        Rat q_step = tf.step / tg.step;
        unsigned long safe_g = poly_sign_stable_from(tg.poly);  // beyond: g != 0 on its lattice
        Int need = rat_ceil((Rat(safe_g) - q_off) / q_step);
        Int k_start(static_cast<unsigned long>(ov.k0));
        if (need > k_start) {
          Int delta = need - k_start, steps;
          mpz_cdiv_q(steps.get_mpz_t(), delta.get_mpz_t(), Int(ov.mod).get_mpz_t());
          k_start += steps * Int(ov.mod);
        }
        // progression head where g may vanish: check pointwise
        for (Int k(static_cast<unsigned long>(ov.k0)); k < k_start; k += Int(ov.mod)) {
          unsigned long ku = int_to_ulong(k);
          Rat p = tf.point_at(ku);
          if (g.eval(p) != 0) contribs[p] = rat_abs(tf.value_at(ku));
        }
        TailRule sub = tail_sublattice(tf, int_to_ulong(k_start), ov.mod);
        poly_trim(sub.poly);
        if (!sub.poly.empty()) {
          unsigned long Ks = poly_sign_stable_from(sub.poly);
          for (unsigned long j = 0; j < Ks; ++j) {
            Rat v = sub.value_at(j);
            if (v != 0) contribs[sub.point_at(j)] = rat_abs(v);
          }
          TailRule stable = tail_shifted(sub, Ks);
          if (rat_sign(poly_leading(stable.poly)) < 0) stable.poly = poly_neg(stable.poly);
          tail = std::move(stable);
        }
      }
    }
  }
  return ScalarMap::assemble(std::move(contribs), std::move(tail));
}

}  // namespace urlat
