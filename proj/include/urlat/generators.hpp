#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "urlat/operators.hpp"

namespace urlat {

/// Deterministic source built on raw std::mt19937_64 draws; the engine's
/// output sequence is pinned by the standard, distribution classes are not,
/// so none are used. Identical seeds give identical data on every platform.
class Rng {
 public:
  explicit Rng(uint64_t seed) : eng_(seed) {}

  uint64_t raw() { return eng_(); }

  uint64_t below(uint64_t n) { return n ? eng_() % n : 0; }

  int range(int lo, int hi) { return lo + static_cast<int>(below(static_cast<uint64_t>(hi - lo) + 1)); }

  bool chance(int num, int den) { return below(static_cast<uint64_t>(den)) < static_cast<uint64_t>(num); }

  template <typename T>
  const T& pick(const std::vector<T>& pool) {
    return pool[static_cast<size_t>(below(pool.size()))];
  }

 private:
  std::mt19937_64 eng_;
};

/// Pinned probe points.
inline const std::vector<Rat>& point_pool() {
  static const std::vector<Rat> pool{Rat(1), Rat(-1), Rat(2), Rat(-2), Rat(1, 2), Rat(-1, 2)};
  return pool;
}

/// Rational in [-10, 10] with a small denominator.
inline Rat gen_value(Rng& rng) {
  int den = rng.range(1, 4);
  int num = rng.range(-10 * den, 10 * den);
  Rat v(num, den);
  v.canonicalize();
  return v;
}

inline Rat gen_positive_value(Rng& rng) {
  int den = rng.range(1, 4);
  int num = rng.range(1, 10 * den);
  Rat v(num, den);
  v.canonicalize();
  return v;
}

/// Bounded-support map sampled on the pinned point pool.
inline ScalarMap gen_sample_map(Rng& rng, int max_points = 3, bool positive = false) {
  std::map<Rat, Rat> samples;
  int k = rng.range(0, max_points);
  for (int t = 0; t < k; ++t) {
    Rat p = rng.pick(point_pool());
    Rat v = positive ? gen_positive_value(rng) : gen_value(rng);
    if (v != 0) samples[p] = v;
  }
  return ScalarMap(std::move(samples), std::nullopt);
}

inline Element gen_probe(Rng& rng, int n) {
  Element x = Element::zeros(n);
  for (int j = 0; j < n; ++j)
    if (!rng.chance(1, 4)) x.coords[static_cast<size_t>(j)] = rng.pick(point_pool());
  return x;
}

inline UrysonOperator gen_finite_operator(Rng& rng, int n, int m, bool positive = false) {
  UrysonOperator t(n, m);
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= n; ++j)
      if (!rng.chance(1, 4)) t.set_entry(i, j, gen_sample_map(rng, 3, positive));
  return t;
}

/// Tail on a strictly positive lattice (never crosses 0). Sample points for
/// tailed maps are drawn negative, so they cannot collide with any lattice.
inline TailRule gen_tail(Rng& rng, int max_degree, bool nonneg = false) {
  static const std::vector<Rat> starts{Rat(1), Rat(2), Rat(1, 2), Rat(3)};
  static const std::vector<Rat> steps{Rat(1), Rat(2), Rat(1, 2)};
  static const std::vector<Rat> ratios{Rat(1), Rat(1), Rat(1, 2), Rat(3, 2), Rat(2)};
  TailRule t;
  t.start = rng.pick(starts);
  t.step = rng.pick(steps);
  t.ratio = rng.pick(ratios);
  int deg = rng.range(0, max_degree);
  for (int d = 0; d <= deg; ++d) {
    int c = nonneg ? rng.range(0, 3) : rng.range(-3, 3);
    t.poly.push_back(Rat(c));
  }
  if (poly_is_zero(t.poly)) t.poly[static_cast<size_t>(deg)] = 1;
  return t;
}

inline ScalarMap gen_tailed_map(Rng& rng, int max_degree = 2, bool nonneg = false) {
  static const std::vector<Rat> neg_points{Rat(-1), Rat(-2), Rat(-1, 2), Rat(-3)};
  std::map<Rat, Rat> samples;
  int k = rng.range(0, 2);
  for (int t = 0; t < k; ++t) {
    Rat v = nonneg ? gen_positive_value(rng) : gen_value(rng);
    if (v != 0) samples[rng.pick(neg_points)] = v;
  }
  return ScalarMap(std::move(samples), gen_tail(rng, max_degree, nonneg));
}

/// Operator with at least one unbounded-support entry.
inline UrysonOperator gen_tailed_operator(Rng& rng, int n, int m, int max_degree = 2) {
  UrysonOperator t(n, m);
  bool tailed = false;
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= n; ++j) {
      int kind = rng.range(0, 3);
      if (kind == 1) t.set_entry(i, j, gen_sample_map(rng));
      if (kind >= 2) {
        t.set_entry(i, j, gen_tailed_map(rng, max_degree));
        tailed = true;
      }
    }
  }
  if (!tailed) t.set_entry(1, 1, gen_tailed_map(rng, max_degree));
  return t;
}

}  // namespace urlat
