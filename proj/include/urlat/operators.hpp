#pragma once

#include <utility>
#include <vector>

#include "urlat/element.hpp"
#include "urlat/fragments.hpp"
#include "urlat/scalar_map.hpp"

namespace urlat {

/// Orthogonally additive order-bounded map Q^n -> Q^m, stored as an m x n
/// grid of scalar maps and applied by (Tx)_i = sum_j T_ij(x_j).
class UrysonOperator {
 public:
  UrysonOperator() = default;

  UrysonOperator(int n, int m) : n_(n), m_(m) {
    if (n < 1 || m < 1) throw PreconditionError("operator dimensions must be positive");
    e_.assign(static_cast<size_t>(n) * static_cast<size_t>(m), ScalarMap());
  }

  int domain_dim() const { return n_; }
  int codomain_dim() const { return m_; }

  /// 1-based: i in 1..m (codomain row), j in 1..n (domain column).
  const ScalarMap& entry(int i, int j) const { return e_[idx(i, j)]; }

  void set_entry(int i, int j, ScalarMap f) { e_[idx(i, j)] = std::move(f); }

  Element apply(const Element& x) const {
    if (x.dim() != n_) throw DimMismatch("operator expects dimension " + std::to_string(n_));
    Element out = Element::zeros(m_);
    for (int i = 1; i <= m_; ++i) {
      Rat acc = 0;
      for (int j = 1; j <= n_; ++j) acc += entry(i, j).eval(x.coords[static_cast<size_t>(j - 1)]);
      out.coords[static_cast<size_t>(i - 1)] = acc;
    }
    return out;
  }

  bool is_zero() const {
    for (const ScalarMap& f : e_)
      if (!f.is_zero()) return false;
    return true;
  }

  bool operator==(const UrysonOperator& o) const = default;

 private:
  size_t idx(int i, int j) const {
    if (i < 1 || i > m_ || j < 1 || j > n_) throw PreconditionError("entry index out of range");
    return static_cast<size_t>(i - 1) * static_cast<size_t>(n_) + static_cast<size_t>(j - 1);
  }

  int n_ = 0, m_ = 0;
  std::vector<ScalarMap> e_;
};

inline void require_same_shape(const UrysonOperator& a, const UrysonOperator& b) {
  if (a.domain_dim() != b.domain_dim() || a.codomain_dim() != b.codomain_dim())
    throw DimMismatch("operators of different shape");
}

template <typename F>
inline UrysonOperator op_entrywise(const UrysonOperator& a, F&& fn) {
  UrysonOperator out(a.domain_dim(), a.codomain_dim());
  for (int i = 1; i <= a.codomain_dim(); ++i)
    for (int j = 1; j <= a.domain_dim(); ++j) out.set_entry(i, j, fn(a.entry(i, j)));
  return out;
}

inline UrysonOperator op_add(const UrysonOperator& a, const UrysonOperator& b) {
  require_same_shape(a, b);
  UrysonOperator out(a.domain_dim(), a.codomain_dim());
  for (int i = 1; i <= a.codomain_dim(); ++i)
    for (int j = 1; j <= a.domain_dim(); ++j) out.set_entry(i, j, sm_add(a.entry(i, j), b.entry(i, j)));
  return out;
}

inline UrysonOperator op_scale(const UrysonOperator& a, const Rat& s) {
  return op_entrywise(a, [&](const ScalarMap& f) { return sm_scale(f, s); });
}

/// Entrywise closed form of the lattice join: valid because the extremal
/// decomposition separates over coordinates.
inline UrysonOperator op_join(const UrysonOperator& a, const UrysonOperator& b) {
  require_same_shape(a, b);
  UrysonOperator out(a.domain_dim(), a.codomain_dim());
  for (int i = 1; i <= a.codomain_dim(); ++i)
    for (int j = 1; j <= a.domain_dim(); ++j) out.set_entry(i, j, sm_max(a.entry(i, j), b.entry(i, j)));
  return out;
}

inline UrysonOperator op_meet(const UrysonOperator& a, const UrysonOperator& b) {
  require_same_shape(a, b);
  UrysonOperator out(a.domain_dim(), a.codomain_dim());
  for (int i = 1; i <= a.codomain_dim(); ++i)
    for (int j = 1; j <= a.domain_dim(); ++j) out.set_entry(i, j, sm_min(a.entry(i, j), b.entry(i, j)));
  return out;
}

struct AbsParts {
  UrysonOperator abs, pos, neg;
};

/// |T|, T+ and T-; satisfies T = pos - neg, abs = pos + neg entrywise.
inline AbsParts op_abs_parts(const UrysonOperator& t) {
  AbsParts parts{op_entrywise(t, [](const ScalarMap& f) { return sm_abs(f); }),
                 op_entrywise(t, [](const ScalarMap& f) { return sm_max(f, ScalarMap()); }),
                 op_entrywise(t, [](const ScalarMap& f) { return sm_max(sm_scale(f, Rat(-1)), ScalarMap()); })};
  return parts;
}

inline bool is_nonneg_op(const UrysonOperator& t) {
  for (int i = 1; i <= t.codomain_dim(); ++i)
    for (int j = 1; j <= t.domain_dim(); ++j)
      if (!is_nonneg(t.entry(i, j))) return false;
  return true;
}

/// phi (x) u: x -> phi(x) * u for a scalar functional phi (codomain dim 1).
inline UrysonOperator rank_one(const UrysonOperator& phi, const Element& u) {
  if (phi.codomain_dim() != 1) throw PreconditionError("rank-one factor must have codomain dimension 1");
  if (u.dim() < 1) throw PreconditionError("rank-one target must be nonzero-dimensional");
  UrysonOperator out(phi.domain_dim(), u.dim());
  for (int i = 1; i <= u.dim(); ++i)
    for (int j = 1; j <= phi.domain_dim(); ++j)
      out.set_entry(i, j, sm_scale(phi.entry(1, j), u.coords[static_cast<size_t>(i - 1)]));
  return out;
}

/// Checks T(x) = T(y) + T(z) over every disjoint decomposition x = y + z.
inline bool orthogonal_additivity_check(const UrysonOperator& t, const Element& x,
                                        const EnumLimits& lim = {}) {
  Element tx = t.apply(x);
  for (const auto& [y, z] : binary_decompositions(x, lim))
    if (!(el_add(t.apply(y), t.apply(z)) == tx)) return false;
  return true;
}

struct OperatorBox {
  Element lower, upper;
};

/// Signed min/max of tail values over indices k1..k2; exact, with a certified
/// eventual-monotonicity shortcut for long ranges.
inline std::pair<Rat, Rat> tail_minmax_on_range(const TailRule& t, unsigned long k1, unsigned long k2) {
  Rat lo = t.value_at(k1), hi = lo;
  auto feed = [&](unsigned long k) {
    Rat v = t.value_at(k);
    lo = rat_min(lo, v);
    hi = rat_max(hi, v);
  };
  if (k2 - k1 <= 4096) {
    for (unsigned long k = k1; k <= k2; ++k) feed(k);
    return {lo, hi};
  }
  unsigned long Ks = poly_sign_stable_from(t.poly);
  Poly sp = rat_sign(poly_leading(t.poly)) < 0 ? poly_neg(t.poly) : t.poly;
  Poly q = poly_sub(poly_scale(poly_compose_affine(sp, Rat(1), Rat(1)), t.ratio), sp);
  unsigned long Km = poly_is_zero(q) ? Ks : std::max(Ks, poly_sign_stable_from(q));
  for (unsigned long k = k1; k <= std::min(k2, Km); ++k) feed(k);
  if (k2 > Km) {
    feed(std::max(k1, Km));
    feed(k2);
  }
  return {lo, hi};
}

/// Exact image bounds of T over the coordinate box [lo, hi]: for each entry
/// the value set over the interval is scanned (including 0 whenever the
/// interval contains an unlisted point), and the coordinate sums are taken.
inline OperatorBox bound_on_box(const UrysonOperator& t, const Element& lo, const Element& hi) {
  if (lo.dim() != t.domain_dim() || hi.dim() != t.domain_dim())
    throw DimMismatch("box endpoints must match the domain dimension");
  if (!el_leq(lo, hi)) throw PreconditionError("box lower corner exceeds upper corner");
  OperatorBox box{Element::zeros(t.codomain_dim()), Element::zeros(t.codomain_dim())};
  for (int i = 1; i <= t.codomain_dim(); ++i) {
    for (int j = 1; j <= t.domain_dim(); ++j) {
      const Rat& a = lo.coords[static_cast<size_t>(j - 1)];
      const Rat& b = hi.coords[static_cast<size_t>(j - 1)];
      const ScalarMap& f = t.entry(i, j);
      Rat vmin = 0, vmax = 0;
      bool seeded = false;
      auto feed = [&](const Rat& v) {
        if (!seeded) {
          vmin = vmax = v;
          seeded = true;
        } else {
          vmin = rat_min(vmin, v);
          vmax = rat_max(vmax, v);
        }
      };
      size_t listed = 0;
      for (auto it = f.samples().lower_bound(a); it != f.samples().end() && it->first <= b; ++it) {
        feed(it->second);
        ++listed;
      }
      if (f.tail()) {
        const TailRule& tl = *f.tail();
        Int klo = rat_ceil((a - tl.start) / tl.step);
        if (klo < 0) klo = 0;
        Int khi = rat_floor((b - tl.start) / tl.step);
        if (khi >= klo) {
          auto [tlo, thi] = tail_minmax_on_range(tl, int_to_ulong(klo), int_to_ulong(khi));
          feed(tlo);
          feed(thi);
          listed += int_to_ulong(khi - klo) + 1;
        }
      }
      // the map vanishes somewhere in [a, b] unless the interval is a single
      // listed point
      bool has_unlisted = !(a == b && listed > 0);
      if (has_unlisted || !seeded) feed(Rat(0));
      box.lower.coords[static_cast<size_t>(i - 1)] += vmin;
      box.upper.coords[static_cast<size_t>(i - 1)] += vmax;
    }
  }
  return box;
}

}  // namespace urlat
