#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "urlat/operators.hpp"

namespace urlat {

enum class LatKind { kJoin, kMeet, kAbs, kPos, kNeg };

inline const char* lat_kind_name(LatKind k) {
  switch (k) {
    case LatKind::kJoin: return "join";
    case LatKind::kMeet: return "meet";
    case LatKind::kAbs: return "abs";
    case LatKind::kPos: return "pos";
    case LatKind::kNeg: return "neg";
  }
  return "?";
}

/// Direct enumeration of the extremal-decomposition formulas at x:
///   (T v S)(x) = sup { T(y) + S(z) : x = y + z, y disjoint from z }
///   (T ^ S)(x) = inf { T(y) + S(z) : ... }
///   |T|(x)     = sup { T(y) - T(z) : ... }
///   T+(x)      = sup { T(y) : y a fragment of x }
///   T-(x)      = sup { -T(y) : y a fragment of x }
/// Extrema are coordinatewise; all sets are nonempty (they contain y = 0).
inline Element oracle_lattice_at(const UrysonOperator& t, const UrysonOperator* s, LatKind kind,
                                 const Element& x, const EnumLimits& lim = {}) {
  if (kind == LatKind::kJoin || kind == LatKind::kMeet) {
    if (!s) throw PreconditionError("join/meet oracle needs two operators");
    require_same_shape(t, *s);
  }
  bool seeded = false;
  Element acc;
  auto feed_sup = [&](Element v) {
    acc = seeded ? el_join(acc, v) : std::move(v);
    seeded = true;
  };
  auto feed_inf = [&](Element v) {
    acc = seeded ? el_meet(acc, v) : std::move(v);
    seeded = true;
  };
  for (const auto& [y, z] : binary_decompositions(x, lim)) {
    switch (kind) {
      case LatKind::kJoin:
        feed_sup(el_add(t.apply(y), s->apply(z)));
        break;
      case LatKind::kMeet:
        feed_inf(el_add(t.apply(y), s->apply(z)));
        break;
      case LatKind::kAbs:
        feed_sup(el_sub(t.apply(y), t.apply(z)));
        break;
      case LatKind::kPos:
        feed_sup(t.apply(y));
        break;
      case LatKind::kNeg:
        feed_sup(el_neg(t.apply(y)));
        break;
    }
  }
  return acc;
}

/// inf over disjoint decompositions x = y + z of A(y) + B(z), for arbitrary
/// evaluators; the nesting block for composite formulas like (|S| ^ n|T|)(x).
inline Element oracle_meet_of(const std::function<Element(const Element&)>& a,
                              const std::function<Element(const Element&)>& b, const Element& x,
                              const EnumLimits& lim = {}) {
  bool seeded = false;
  Element acc;
  for (const auto& [y, z] : binary_decompositions(x, lim)) {
    Element v = el_add(a(y), b(z));
    acc = seeded ? el_meet(acc, v) : std::move(v);
    seeded = true;
  }
  return acc;
}

/// y -> |T|(y) by enumeration.
inline std::function<Element(const Element&)> abs_evaluator(const UrysonOperator& t,
                                                            const EnumLimits& lim = {}) {
  return [t, lim](const Element& y) { return oracle_lattice_at(t, nullptr, LatKind::kAbs, y, lim); };
}

enum class PartKind { kMeet, kJoin, kAbs };

/// Enumerated value of the blockwise-sum formulas over all partitions of x,
/// together with a coarse-to-fine refinement chain and its running sums:
///   meet: inf over partitions of sum_i T(x_i) ^ S(x_i)   (coordinatewise)
///   join: sup over partitions of sum_i T(x_i) v S(x_i)
///   abs:  sup over partitions of sum_i |T(x_i)|
struct PartitionOracle {
  Element value;
  std::vector<std::pair<Partition, Element>> chain;
};

inline PartitionOracle oracle_partition_at(const UrysonOperator& t, const UrysonOperator* s,
                                           PartKind kind, const Element& x,
                                           const EnumLimits& lim = {}) {
  if (kind != PartKind::kAbs) {
    if (!s) throw PreconditionError("partition meet/join oracle needs two operators");
    require_same_shape(t, *s);
  }
  auto block_value = [&](const Element& b) -> Element {
    switch (kind) {
      case PartKind::kMeet: return el_meet(t.apply(b), s->apply(b));
      case PartKind::kJoin: return el_join(t.apply(b), s->apply(b));
      case PartKind::kAbs: return el_abs(t.apply(b));
    }
    throw PreconditionError("unknown partition kind");
  };
  auto partition_sum = [&](const Partition& p) -> Element {
    Element acc = Element::zeros(t.codomain_dim());
    for (const Element& b : p.blocks) acc = el_add(acc, block_value(b));
    return acc;
  };
  PartitionOracle out;
  bool seeded = false;
  for (const Partition& p : partitions(x, lim)) {
    Element v = partition_sum(p);
    if (!seeded) {
      out.value = std::move(v);
      seeded = true;
    } else {
      out.value = kind == PartKind::kMeet ? el_meet(out.value, v) : el_join(out.value, v);
    }
  }
  for (Partition& p : refinement_chain(x)) {
    Element v = partition_sum(p);
    out.chain.emplace_back(std::move(p), std::move(v));
  }
  return out;
}

}  // namespace urlat
