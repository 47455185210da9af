#pragma once

#include <compare>
#include <vector>

#include "urlat/rational.hpp"

namespace urlat {

/// Vector in Q^n under the coordinatewise order. Coordinates are stored
/// 0-based; user-facing indices (support sets, operator entries) are 1-based.
struct Element {
  std::vector<Rat> coords;

  Element() = default;
  explicit Element(std::vector<Rat> c) : coords(std::move(c)) {}

  static Element zeros(int dim) { return Element(std::vector<Rat>(static_cast<size_t>(dim), Rat(0))); }

  int dim() const { return static_cast<int>(coords.size()); }

  bool is_zero() const {
    for (const Rat& c : coords)
      if (c != 0) return false;
    return true;
  }

  bool operator==(const Element& o) const { return coords == o.coords; }

  /// Lexicographic order, dimension first; used only as a container key.
  bool operator<(const Element& o) const {
    if (coords.size() != o.coords.size()) return coords.size() < o.coords.size();
    for (size_t i = 0; i < coords.size(); ++i) {
      if (coords[i] != o.coords[i]) return coords[i] < o.coords[i];
    }
    return false;
  }
};

inline void require_same_dim(const Element& x, const Element& y) {
  if (x.dim() != y.dim())
    throw DimMismatch("elements of dimension " + std::to_string(x.dim()) + " and " +
                      std::to_string(y.dim()));
}

/// Sorted set of 1-based coordinate indices inside a fixed dimension.
struct IndexSet {
  int dim = 0;
  std::vector<int> members;  // strictly increasing, each in 1..dim

  static IndexSet full(int dim) {
    IndexSet s;
    s.dim = dim;
    for (int j = 1; j <= dim; ++j) s.members.push_back(j);
    return s;
  }

  bool contains(int j) const {
    for (int m : members)
      if (m == j) return true;
    return false;
  }

  bool empty() const { return members.empty(); }

  IndexSet complement() const {
    IndexSet s;
    s.dim = dim;
    for (int j = 1; j <= dim; ++j)
      if (!contains(j)) s.members.push_back(j);
    return s;
  }

  bool operator==(const IndexSet& o) const = default;
};

inline IndexSet index_union(const IndexSet& a, const IndexSet& b) {
  if (a.dim != b.dim) throw DimMismatch("index sets over different dimensions");
  IndexSet s;
  s.dim = a.dim;
  for (int j = 1; j <= a.dim; ++j)
    if (a.contains(j) || b.contains(j)) s.members.push_back(j);
  return s;
}

inline bool index_disjoint(const IndexSet& a, const IndexSet& b) {
  if (a.dim != b.dim) throw DimMismatch("index sets over different dimensions");
  for (int j : a.members)
    if (b.contains(j)) return false;
  return true;
}

inline bool index_subset(const IndexSet& a, const IndexSet& b) {
  for (int j : a.members)
    if (!b.contains(j)) return false;
  return true;
}

inline IndexSet support(const Element& x) {
  IndexSet s;
  s.dim = x.dim();
  for (int j = 1; j <= x.dim(); ++j)
    if (x.coords[static_cast<size_t>(j - 1)] != 0) s.members.push_back(j);
  return s;
}

/// Disjointness in the lattice sense: |x| ^ |y| = 0, i.e. disjoint supports.
inline bool is_disjoint(const Element& x, const Element& y) {
  require_same_dim(x, y);
  for (size_t i = 0; i < x.coords.size(); ++i)
    if (x.coords[i] != 0 && y.coords[i] != 0) return false;
  return true;
}

inline Element el_add(const Element& x, const Element& y) {
  require_same_dim(x, y);
  Element out = x;
  for (size_t i = 0; i < out.coords.size(); ++i) out.coords[i] += y.coords[i];
  return out;
}

inline Element el_sub(const Element& x, const Element& y) {
  require_same_dim(x, y);
  Element out = x;
  for (size_t i = 0; i < out.coords.size(); ++i) out.coords[i] -= y.coords[i];
  return out;
}

inline Element el_scale(const Element& x, const Rat& s) {
  Element out = x;
  for (Rat& c : out.coords) c *= s;
  return out;
}

inline Element el_neg(const Element& x) { return el_scale(x, Rat(-1)); }

inline Element el_join(const Element& x, const Element& y) {
  require_same_dim(x, y);
  Element out = x;
  for (size_t i = 0; i < out.coords.size(); ++i) out.coords[i] = rat_max(out.coords[i], y.coords[i]);
  return out;
}

inline Element el_meet(const Element& x, const Element& y) {
  require_same_dim(x, y);
  Element out = x;
  for (size_t i = 0; i < out.coords.size(); ++i) out.coords[i] = rat_min(out.coords[i], y.coords[i]);
  return out;
}

inline Element el_abs(const Element& x) {
  Element out = x;
  for (Rat& c : out.coords) c = rat_abs(c);
  return out;
}

inline bool el_leq(const Element& x, const Element& y) {
  require_same_dim(x, y);
  for (size_t i = 0; i < x.coords.size(); ++i)
    if (x.coords[i] > y.coords[i]) return false;
  return true;
}

/// Coordinate projection onto the band generated by the index set.
inline Element band_project(const Element& x, const IndexSet& region) {
  if (x.dim() != region.dim) throw DimMismatch("band region over a different dimension");
  Element out = Element::zeros(x.dim());
  for (int j : region.members) out.coords[static_cast<size_t>(j - 1)] = x.coords[static_cast<size_t>(j - 1)];
  return out;
}

/// Atom: exactly one nonzero coordinate.
inline bool is_atom(const Element& u) {
  int nz = 0;
  for (const Rat& c : u.coords)
    if (c != 0) ++nz;
  return nz == 1;
}

/// For atoms u, v: either disjoint or v is a rational multiple of u.
struct AtomRelation {
  bool disjoint = false;
  Rat lambda = 0;  // v = lambda * u when !disjoint
};

inline AtomRelation atom_relation(const Element& u, const Element& v) {
  if (!is_atom(u) || !is_atom(v)) throw PreconditionError("atom_relation requires atoms");
  require_same_dim(u, v);
  size_t iu = 0, iv = 0;
  for (size_t i = 0; i < u.coords.size(); ++i)
    if (u.coords[i] != 0) iu = i;
  for (size_t i = 0; i < v.coords.size(); ++i)
    if (v.coords[i] != 0) iv = i;
  AtomRelation rel;
  if (iu != iv) {
    rel.disjoint = true;
    return rel;
  }
  rel.disjoint = false;
  rel.lambda = v.coords[iv] / u.coords[iu];
  return rel;
}

}  // namespace urlat
