#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "urlat/dominance.hpp"
#include "urlat/operators.hpp"

namespace urlat {

/// T is a finite element of the operator lattice exactly when every entry has
/// bounded support; the entrywise test decides the order-theoretic property.
inline bool is_finite_structural(const UrysonOperator& t) {
  for (int i = 1; i <= t.codomain_dim(); ++i)
    for (int j = 1; j <= t.domain_dim(); ++j)
      if (!has_bounded_support(t.entry(i, j))) return false;
  return true;
}

/// Totally finite coincides with finite here: the synthesized majorant is
/// itself a finite element.
inline bool is_totally_finite(const UrysonOperator& t) { return is_finite_structural(t); }

/// Certificate that Z majorizes the ideal around T: for each probe S, a
/// constant c with sup_n (|S| ^ n|T|) <= c * Z.
struct MajorantCertificate {
  enum class Method { kSynthesized, kSupplied };
  UrysonOperator majorant;
  std::vector<std::pair<UrysonOperator, Rat>> probes;  // (S, c_S)
  Method method = Method::kSynthesized;
};

/// A probe escapes every multiple of Z: at `point` (entry i, j) the cut
/// |S| ^ n|T| eventually exceeds c * Z for every c.
struct MajorantFailure {
  size_t probe_index = 0;
  int i = 0, j = 0;
  Rat point;
};

using MajorantOutcome = std::variant<MajorantCertificate, MajorantFailure>;

/// Entrywise closed form of sup_n (|S| ^ n|T|): the modulus of each S-entry
/// restricted to the support of the matching T-entry.
inline UrysonOperator ideal_cut(const UrysonOperator& s, const UrysonOperator& t) {
  require_same_shape(s, t);
  UrysonOperator out(t.domain_dim(), t.codomain_dim());
  for (int i = 1; i <= t.codomain_dim(); ++i)
    for (int j = 1; j <= t.domain_dim(); ++j)
      out.set_entry(i, j, restrict_abs_to_support(s.entry(i, j), t.entry(i, j)));
  return out;
}

/// Decides, probe by probe, whether Z dominates the cut of the probe through
/// T; the returned constants are least.
inline MajorantOutcome check_majorant(const UrysonOperator& t, const UrysonOperator& z,
                                      const std::vector<UrysonOperator>& probes) {
  require_same_shape(t, z);
  if (!is_nonneg_op(z)) throw PreconditionError("candidate majorant must be nonnegative");
  MajorantCertificate cert;
  cert.majorant = z;
  cert.method = MajorantCertificate::Method::kSupplied;
  for (size_t pi = 0; pi < probes.size(); ++pi) {
    const UrysonOperator& s = probes[pi];
    require_same_shape(s, t);
    Rat c = 0;
    for (int i = 1; i <= t.codomain_dim(); ++i) {
      for (int j = 1; j <= t.domain_dim(); ++j) {
        ScalarMap g = restrict_abs_to_support(s.entry(i, j), t.entry(i, j));
        DominanceResult r = dominance(g, z.entry(i, j));
        if (auto* un = std::get_if<DominanceUnbounded>(&r))
          return MajorantFailure{pi, i, j, un->witness(1)};
        c = rat_max(c, std::get<DominanceBounded>(r).c);
      }
    }
    cert.probes.emplace_back(s, c);
  }
  return cert;
}

/// Indicator majorant of a bounded-support operator, with the enclosing-box
/// constant c_S = sum_j sup_{t in [a,b]} sum_i |S_ij(t)| per probe, where
/// [a, b] hulls every listed point of T. The certificate is verified before
/// it is returned.
inline MajorantCertificate synthesize_majorant(const UrysonOperator& t,
                                               std::vector<UrysonOperator> probes = {}) {
  if (!is_finite_structural(t))
    throw PreconditionError("majorant synthesis needs bounded-support entries");
  if (probes.empty()) probes.push_back(t);
  UrysonOperator z(t.domain_dim(), t.codomain_dim());
  std::optional<Rat> a, b;
  for (int i = 1; i <= t.codomain_dim(); ++i) {
    for (int j = 1; j <= t.domain_dim(); ++j) {
      const ScalarMap& f = t.entry(i, j);
      z.set_entry(i, j, indicator_of_support(f));
      if (auto iv = support_interval(f)) {
        a = a ? rat_min(*a, iv->first) : iv->first;
        b = b ? rat_max(*b, iv->second) : iv->second;
      }
    }
  }
  MajorantCertificate cert;
  cert.majorant = z;
  for (const UrysonOperator& s : probes) {
    require_same_shape(s, t);
    Rat c = 0;
    if (a) {
      for (int j = 1; j <= t.domain_dim(); ++j) {
        // candidate points of the column inside [a, b]; elsewhere the sum is 0
        std::vector<Rat> pts;
        for (int i = 1; i <= t.codomain_dim(); ++i)
          for (const Rat& p : points_in_interval(s.entry(i, j), *a, *b)) pts.push_back(p);
        Rat col = 0;
        for (const Rat& p : pts) {
          Rat sum = 0;
          for (int i = 1; i <= t.codomain_dim(); ++i) sum += rat_abs(s.entry(i, j).eval(p));
          col = rat_max(col, sum);
        }
        c += col;
      }
    }
    // soundness re-check of the issued constant against the closed-form cut
    for (int i = 1; i <= t.codomain_dim(); ++i) {
      for (int j = 1; j <= t.domain_dim(); ++j) {
        ScalarMap g = restrict_abs_to_support(s.entry(i, j), t.entry(i, j));
        for (const auto& [p, v] : g.samples())
          if (v > c * z.entry(i, j).eval(p))
            throw PreconditionError("synthesized constant fails its own certificate");
      }
    }
    cert.probes.emplace_back(s, c);
  }
  return cert;
}

/// Refutation engine: for a candidate majorant Z of a non-finite T, builds a
/// single probe S whose cut through T escapes every multiple of Z, plus a
/// pure locator mapping c to a witness (n, x) with
/// (|S| ^ n|T|)(x) > c * Z(x) at some coordinate.
struct RefutationWitness {
  UrysonOperator probe;
  int i = 0, j = 0;  // the tailed entry the witness runs along
  std::function<std::pair<Int, Element>(const Rat&)> locate;
};

inline RefutationWitness refute_majorant(const UrysonOperator& t, const UrysonOperator& z) {
  require_same_shape(t, z);
  if (!is_nonneg_op(z)) throw PreconditionError("candidate majorant must be nonnegative");
  int i0 = 0, j0 = 0;
  for (int i = 1; i <= t.codomain_dim() && !i0; ++i)
    for (int j = 1; j <= t.domain_dim() && !i0; ++j)
      if (t.entry(i, j).tail()) i0 = i, j0 = j;
  if (!i0) throw PreconditionError("refutation needs an unbounded-support entry");
  const TailRule tf = *t.entry(i0, j0).tail();
  const ScalarMap ze = z.entry(i0, j0);

  // effective growth of Z along the tail lattice of T
  IndexOverlap ov;
  if (ze.tail()) ov = lattice_overlap(tf, *ze.tail());
  bool covered = ov.any && ov.mod == 1;
  Poly pz_eff;
  Rat ratio_eff = 1;
  unsigned long k_head = 0;
  if (covered) {
    const TailRule& tz = *ze.tail();
    Rat q_off = (tf.start - tz.start) / tz.step;
    Rat q_step = tf.step / tz.step;
    long sigma = static_cast<long>(Int(q_off.get_num()).get_si());
    pz_eff = poly_scale(poly_compose_affine(tz.poly, q_off, q_step), rat_pow_int(tz.ratio, sigma));
    ratio_eff = rat_pow(tz.ratio, int_to_ulong(Int(q_step.get_num())));
    k_head = std::max(ov.k0, poly_sign_stable_from(pz_eff));
  }
  int d = covered ? poly_degree(pz_eff) : 0;

  // probe tail (1+k)^(d+1) * r^k on T's lattice outgrows c * Z for every c
  Poly sp{Rat(1)};
  for (int e = 0; e <= d; ++e) sp = poly_mul(sp, Poly{Rat(1), Rat(1)});
  Rat rs = rat_max(Rat(1), ratio_eff);
  UrysonOperator probe(t.domain_dim(), t.codomain_dim());
  probe.set_entry(i0, j0, ScalarMap({}, TailRule{tf.start, tf.step, sp, rs}));

  Rat zsum = covered ? poly_sum_abs(pz_eff) : Rat(0);
  ScalarMap se = probe.entry(i0, j0);
  int n_dom = t.domain_dim();
  // index residue forced off Z's partial lattice so Z vanishes there
  bool residue_locked = ov.any && ov.mod > 1;
  unsigned long res = residue_locked ? (ov.k0 + 1) % ov.mod : 0;
  auto locate = [tf, se, ze, pz_eff, zsum, covered, k_head, residue_locked, res, ovmod = ov.mod,
                 n_dom, j0](const Rat& c) -> std::pair<Int, Element> {
    if (c < 0) throw PreconditionError("candidate constant must be nonnegative");
    // 1+k > c*zsum already forces strict exceedance; the scan below only
    // advances past zeros of T's polynomial or small-k slack in Z
    Int kw = rat_ceil(c * zsum);
    if (kw < 1) kw = 1;
    if (Int(k_head) + 1 > kw) kw = Int(k_head) + 1;
    unsigned long k = int_to_ulong(kw);
    if (residue_locked && k % ovmod != res) k += (res + ovmod - k % ovmod) % ovmod;
    auto good = [&](unsigned long k) {
      if (poly_eval_k(tf.poly, k) == 0) return false;  // need |T| > 0 at the point
      Rat p = tf.point_at(k);
      return se.eval(p) > c * ze.eval(p);
    };
    while (!good(k)) k += residue_locked ? ovmod : 1;
    Rat p = tf.point_at(k);
    Rat sv = se.eval(p);
    Rat tv = rat_abs(tf.value_at(k));
    Int n = rat_floor(sv / tv) + 1;  // n * |T-value| > S-value
    Element x = Element::zeros(n_dom);
    x.coords[static_cast<size_t>(j0 - 1)] = p;
    return {n, x};
  };
  RefutationWitness w;
  w.probe = std::move(probe);
  w.i = i0;
  w.j = j0;
  w.locate = std::move(locate);
  return w;
}

/// Coordinates on which the operator acts nontrivially on atoms, with the
/// listed evidence points of each column.
struct AtomSupportEntry {
  int j = 0;
  std::vector<Rat> points;
  bool tail = false;
};

inline std::vector<AtomSupportEntry> atom_support(const UrysonOperator& t) {
  std::vector<AtomSupportEntry> out;
  for (int j = 1; j <= t.domain_dim(); ++j) {
    AtomSupportEntry e;
    e.j = j;
    std::vector<Rat> pts;
    for (int i = 1; i <= t.codomain_dim(); ++i) {
      const ScalarMap& f = t.entry(i, j);
      for (const auto& [p, v] : f.samples()) pts.push_back(p);
      if (f.tail()) e.tail = true;
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    e.points = std::move(pts);
    if (!e.points.empty() || e.tail) out.push_back(std::move(e));
  }
  return out;
}

/// Projection onto the band of codomain coordinates B: rows outside B zeroed.
inline UrysonOperator restrict_to_band(const UrysonOperator& t, const IndexSet& band) {
  if (band.dim != t.codomain_dim()) throw DimMismatch("band over a different codomain dimension");
  UrysonOperator out(t.domain_dim(), t.codomain_dim());
  for (int i : band.members)
    for (int j = 1; j <= t.domain_dim(); ++j) out.set_entry(i, j, t.entry(i, j));
  return out;
}

/// The same projection viewed inside the band, rows reindexed 1..|B|.
inline UrysonOperator compress_to_band(const UrysonOperator& t, const IndexSet& band) {
  if (band.dim != t.codomain_dim()) throw DimMismatch("band over a different codomain dimension");
  if (band.empty()) throw PreconditionError("cannot compress to an empty band");
  UrysonOperator out(t.domain_dim(), static_cast<int>(band.members.size()));
  int row = 1;
  for (int i : band.members) {
    for (int j = 1; j <= t.domain_dim(); ++j) out.set_entry(row, j, t.entry(i, j));
    ++row;
  }
  return out;
}

/// Finiteness commutes with band projection: the projected operator is finite
/// in the full lattice iff it is finite inside the band, projections of
/// finite operators stay finite, and operators already supported in the band
/// are fixed by the projection.
inline bool band_phi1_identity_check(const UrysonOperator& t, const IndexSet& band) {
  UrysonOperator pi_t = restrict_to_band(t, band);
  bool full = is_finite_structural(pi_t);
  bool ok = true;
  if (!band.empty()) ok = ok && full == is_finite_structural(compress_to_band(t, band));
  if (is_finite_structural(t)) ok = ok && full;
  bool supported_in_band = pi_t == t;
  if (supported_in_band) ok = ok && full == is_finite_structural(t);
  return ok;
}

}  // namespace urlat
