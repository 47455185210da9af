#pragma once

#include <map>
#include <memory>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "urlat/fragments.hpp"
#include "urlat/operators.hpp"

namespace urlat {

/// Set of elements closed under taking fragments and under sums of disjoint
/// members. Three descriptor forms:
///   fragments_of(w):   all fragments of a fixed element
///   order_ideal(G):    everything supported inside the union of the
///                      generators' supports
///   disjoint_union(Ps): sums of one member from each of finitely many ideals
///                      with pairwise disjoint regions
class LateralIdeal {
 public:
  struct FragmentsOf {
    Element w;
  };
  struct OrderIdealOf {
    std::vector<Element> gens;
  };
  struct DisjointUnion {
    std::vector<LateralIdeal> parts;
  };
  using Node = std::variant<FragmentsOf, OrderIdealOf, DisjointUnion>;

  static LateralIdeal fragments_of(Element w) {
    if (w.dim() < 1) throw PreconditionError("ideal over an empty space");
    LateralIdeal d;
    d.dim_ = w.dim();
    d.node_ = std::make_shared<Node>(FragmentsOf{std::move(w)});
    return d;
  }

  static LateralIdeal order_ideal(std::vector<Element> gens) {
    if (gens.empty()) throw PreconditionError("order ideal needs at least one generator");
    int dim = gens.front().dim();
    for (const Element& g : gens)
      if (g.dim() != dim) throw DimMismatch("generators of mixed dimension");
    LateralIdeal d;
    d.dim_ = dim;
    d.node_ = std::make_shared<Node>(OrderIdealOf{std::move(gens)});
    return d;
  }

  static LateralIdeal disjoint_union(std::vector<LateralIdeal> parts) {
    if (parts.empty()) throw PreconditionError("disjoint union needs at least one part");
    int dim = parts.front().dim();
    for (const LateralIdeal& p : parts)
      if (p.dim() != dim) throw DimMismatch("parts of mixed dimension");
    for (size_t i = 0; i < parts.size(); ++i)
      for (size_t j = i + 1; j < parts.size(); ++j)
        if (!index_disjoint(parts[i].region(), parts[j].region()))
          throw PreconditionError("disjoint union of overlapping regions");
    LateralIdeal d;
    d.dim_ = dim;
    d.node_ = std::make_shared<Node>(DisjointUnion{std::move(parts)});
    return d;
  }

  int dim() const { return dim_; }

  const Node& node() const { return *node_; }

  /// Support region: every member is supported inside it.
  IndexSet region() const {
    IndexSet r;
    r.dim = dim_;
    if (const auto* f = std::get_if<FragmentsOf>(node_.get())) {
      r = support(f->w);
    } else if (const auto* o = std::get_if<OrderIdealOf>(node_.get())) {
      for (const Element& g : o->gens) r = index_union(r, support(g));
    } else {
      const auto& u = std::get<DisjointUnion>(*node_);
      for (const LateralIdeal& p : u.parts) r = index_union(r, p.region());
    }
    return r;
  }

  bool contains(const Element& x) const {
    if (x.dim() != dim_) throw DimMismatch("membership test across dimensions");
    if (const auto* f = std::get_if<FragmentsOf>(node_.get())) {
      for (size_t i = 0; i < x.coords.size(); ++i)
        if (x.coords[i] != 0 && x.coords[i] != f->w.coords[i]) return false;
      return true;
    }
    if (std::get_if<OrderIdealOf>(node_.get()))
      return index_subset(support(x), region());
    const auto& u = std::get<DisjointUnion>(*node_);
    if (!index_subset(support(x), region())) return false;
    for (const LateralIdeal& p : u.parts)
      if (!p.contains(band_project(x, p.region()))) return false;
    return true;
  }

  /// Exhaustive member list when the ideal is finite (fragment sets and their
  /// disjoint unions); nullopt for order ideals. Capped like a fragment
  /// enumeration: at most 2^fragment_cap members.
  std::optional<std::vector<Element>> members(const EnumLimits& lim = {}) const {
    size_t cap = static_cast<size_t>(1) << lim.fragment_cap;
    if (const auto* f = std::get_if<FragmentsOf>(node_.get())) return fragments(f->w, lim);
    if (std::get_if<OrderIdealOf>(node_.get())) return std::nullopt;
    const auto& u = std::get<DisjointUnion>(*node_);
    std::vector<Element> acc{Element::zeros(dim_)};
    for (const LateralIdeal& p : u.parts) {
      auto part = p.members(lim);
      if (!part) return std::nullopt;
      if (acc.size() * part->size() > cap)
        throw CapExceeded("disjoint-union enumeration exceeds the fragment cap");
      std::vector<Element> next;
      next.reserve(acc.size() * part->size());
      for (const Element& a : acc)
        for (const Element& b : *part) next.push_back(el_add(a, b));
      acc = std::move(next);
    }
    return acc;
  }

 private:
  int dim_ = 0;
  std::shared_ptr<Node> node_;
};

/// Positive orthogonally additive map defined only on a lateral ideal, given
/// either by an explicit value table or by restricting a full operator.
class PartialOperator {
 public:
  PartialOperator(LateralIdeal domain, std::map<Element, Element> table, int codomain_dim)
      : domain_(std::move(domain)), codomain_dim_(codomain_dim), table_(std::move(table)) {
    if (codomain_dim_ < 1) throw PreconditionError("codomain dimension must be positive");
    Element zero_key = Element::zeros(domain_.dim());
    auto z = table_->find(zero_key);
    if (z == table_->end()) {
      (*table_)[zero_key] = Element::zeros(codomain_dim_);
    } else if (!z->second.is_zero()) {
      throw PreconditionError("0 must map to 0");
    }
    for (const auto& [x, v] : *table_) {
      if (!domain_.contains(x)) throw PreconditionError("table key outside the domain");
      if (v.dim() != codomain_dim_) throw DimMismatch("table value of wrong dimension");
      if (!el_leq(Element::zeros(codomain_dim_), v)) throw PreconditionError("table value is negative");
    }
    // orthogonal additivity across recorded triples
    for (const auto& [x, vx] : *table_) {
      for (const auto& [y, vy] : *table_) {
        if (!is_disjoint(x, y)) continue;
        auto s = table_->find(el_add(x, y));
        if (s != table_->end() && !(s->second == el_add(vx, vy)))
          throw PreconditionError("table breaks orthogonal additivity");
      }
    }
  }

  PartialOperator(LateralIdeal domain, UrysonOperator op) : domain_(std::move(domain)), op_(std::move(op)) {
    if (op_->domain_dim() != domain_.dim()) throw DimMismatch("operator domain mismatch");
    if (!is_nonneg_op(*op_)) throw PreconditionError("restricted operator must be positive");
    codomain_dim_ = op_->codomain_dim();
  }

  const LateralIdeal& domain() const { return domain_; }
  int codomain_dim() const { return codomain_dim_; }

  Element value_at(const Element& x) const {
    if (!domain_.contains(x)) throw PreconditionError("evaluation outside the domain");
    if (op_) return op_->apply(x);
    auto it = table_->find(x);
    if (it == table_->end()) throw PreconditionError("no recorded value for a domain member");
    return it->second;
  }

 private:
  LateralIdeal domain_;
  int codomain_dim_ = 0;
  std::optional<std::map<Element, Element>> table_;
  std::optional<UrysonOperator> op_;
};

/// Value of the minimal positive orthogonally additive extension at x:
///   sup { T(y) : y a fragment of x lying in the domain }
/// (coordinatewise; y = 0 always qualifies).
inline Element minimal_extension_at(const PartialOperator& t, const Element& x,
                                    const EnumLimits& lim = {}) {
  Element acc = Element::zeros(t.codomain_dim());
  for (const Element& y : fragments(x, lim)) {
    if (!t.domain().contains(y)) continue;
    acc = el_join(acc, t.value_at(y));
  }
  return acc;
}

/// Any positive extension R of the table dominates the minimal one. Verifies
/// that R extends T (on an exhaustive member list when available) and that
/// the minimal extension stays below R at every probe.
inline bool check_minimality(const PartialOperator& t, const UrysonOperator& r,
                             const std::vector<Element>& probes, const EnumLimits& lim = {}) {
  if (r.domain_dim() != t.domain().dim() || r.codomain_dim() != t.codomain_dim())
    throw DimMismatch("extension of the wrong shape");
  if (!is_nonneg_op(r)) throw PreconditionError("extension must be positive");
  if (auto mem = t.domain().members(lim)) {
    for (const Element& y : *mem)
      if (!(r.apply(y) == t.value_at(y))) throw PreconditionError("not an extension of the table");
  }
  for (const Element& x : probes)
    if (!el_leq(minimal_extension_at(t, x, lim), r.apply(x))) return false;
  return true;
}

/// Order projection of T onto the band generated by the functional phi,
/// evaluated at x: inf { T(y) : y a fragment of x, phi(x - y) = 0 }.
/// Both operators positive with codomain dimension 1; y = x always qualifies.
inline Rat pi_band_projection_at(const UrysonOperator& phi, const UrysonOperator& t, const Element& x,
                                 const EnumLimits& lim = {}) {
  if (phi.codomain_dim() != 1 || t.codomain_dim() != 1)
    throw PreconditionError("band projection works on functionals");
  if (phi.domain_dim() != t.domain_dim()) throw DimMismatch("functionals over different domains");
  if (!is_nonneg_op(phi) || !is_nonneg_op(t))
    throw PreconditionError("band projection needs positive operators");
  std::optional<Rat> best;
  for (const Element& y : fragments(x, lim)) {
    if (phi.apply(el_sub(x, y)).coords[0] != 0) continue;
    Rat v = t.apply(y).coords[0];
    best = best ? rat_min(*best, v) : v;
  }
  return *best;
}

}  // namespace urlat
