#pragma once

#include <map>
#include <tuple>
#include <utility>
#include <vector>

#include "urlat/operators.hpp"

namespace urlat {

/// Finite measure space: points 1..size with strictly positive weights.
struct FiniteMeasureSpace {
  std::vector<Rat> weights;

  int size() const { return static_cast<int>(weights.size()); }
};

/// Discrete integral kernel K(s, t, r) on A x B x grid, stored sparsely;
/// missing triples are 0. The associated map is
///   (T f)(s) = sum_t K(s, t, f(t)) * weight_B(t)
/// for functions f: B -> grid.
class KernelTable {
 public:
  KernelTable(FiniteMeasureSpace a, FiniteMeasureSpace b, std::vector<Rat> grid,
              std::map<std::tuple<int, int, Rat>, Rat> values)
      : a_(std::move(a)), b_(std::move(b)), grid_(std::move(grid)), values_(std::move(values)) {
    if (a_.size() < 1 || b_.size() < 1) throw ParseError("measure spaces must be nonempty");
    for (const Rat& w : a_.weights)
      if (w <= 0) throw ParseError("weights must be positive");
    for (const Rat& w : b_.weights)
      if (w <= 0) throw ParseError("weights must be positive");
    std::sort(grid_.begin(), grid_.end());
    grid_.erase(std::unique(grid_.begin(), grid_.end()), grid_.end());
    bool has_zero = false;
    for (const Rat& r : grid_) has_zero = has_zero || r == 0;
    if (!has_zero) throw ParseError("value grid must contain 0");
    for (const auto& [key, v] : values_) {
      auto [i, j, r] = key;
      if (i < 1 || i > a_.size() || j < 1 || j > b_.size()) throw ParseError("kernel index out of range");
      if (!std::binary_search(grid_.begin(), grid_.end(), r)) throw ParseError("kernel value off the grid");
    }
  }

  const FiniteMeasureSpace& space_a() const { return a_; }
  const FiniteMeasureSpace& space_b() const { return b_; }
  const std::vector<Rat>& grid() const { return grid_; }
  const std::map<std::tuple<int, int, Rat>, Rat>& values() const { return values_; }

  Rat value(int i, int j, const Rat& r) const {
    auto it = values_.find({i, j, r});
    return it == values_.end() ? Rat(0) : it->second;
  }

  /// The integrand conditions on a finite space: vanishing at 0 is the only
  /// substantive one; measurability in s and order continuity in r hold
  /// vacuously (every function on a finite space is measurable, every grid
  /// point is isolated).
  struct Caratheodory {
    bool zero_ok = true;
    std::vector<std::pair<int, int>> zero_violations;
    bool measurability_vacuous = true;
    bool continuity_vacuous = true;
  };

  Caratheodory caratheodory_check() const {
    Caratheodory rep;
    for (int i = 1; i <= a_.size(); ++i) {
      for (int j = 1; j <= b_.size(); ++j) {
        if (value(i, j, Rat(0)) != 0) {
          rep.zero_ok = false;
          rep.zero_violations.emplace_back(i, j);
        }
      }
    }
    return rep;
  }

  /// The kernel's map as an operator: entry (i, j) sends r to K(i,j,r) * w_j.
  UrysonOperator build_operator() const {
    Caratheodory rep = caratheodory_check();
    if (!rep.zero_ok) throw PreconditionError("kernel does not vanish at 0");
    UrysonOperator t(b_.size(), a_.size());
    for (int i = 1; i <= a_.size(); ++i) {
      for (int j = 1; j <= b_.size(); ++j) {
        std::map<Rat, Rat> samples;
        for (const Rat& r : grid_) {
          if (r == 0) continue;
          Rat v = value(i, j, r) * b_.weights[static_cast<size_t>(j - 1)];
          if (v != 0) samples.emplace(r, v);
        }
        t.set_entry(i, j, ScalarMap(std::move(samples), std::nullopt));
      }
    }
    return t;
  }

  /// Direct quadrature of the integral at a grid-valued function on B.
  Element apply_integral(const Element& f) const {
    if (f.dim() != b_.size()) throw DimMismatch("function over the wrong space");
    for (const Rat& v : f.coords)
      if (!std::binary_search(grid_.begin(), grid_.end(), v))
        throw PreconditionError("function leaves the value grid");
    Element out = Element::zeros(a_.size());
    for (int i = 1; i <= a_.size(); ++i) {
      Rat acc = 0;
      for (int j = 1; j <= b_.size(); ++j)
        acc += value(i, j, f.coords[static_cast<size_t>(j - 1)]) * b_.weights[static_cast<size_t>(j - 1)];
      out.coords[static_cast<size_t>(i - 1)] = acc;
    }
    return out;
  }

 private:
  FiniteMeasureSpace a_, b_;
  std::vector<Rat> grid_;
  std::map<std::tuple<int, int, Rat>, Rat> values_;
};

/// Nonnegative kernels induce positive operators.
inline bool kernel_is_nonneg(const KernelTable& k) {
  for (const auto& [key, v] : k.values())
    if (v < 0) return false;
  return true;
}

}  // namespace urlat
