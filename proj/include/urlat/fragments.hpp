#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "urlat/element.hpp"

namespace urlat {

/// Enumeration guards. A fragment enumeration of x has 2^|supp(x)| members
/// and a partition enumeration Bell(|supp(x)|); both are refused beyond the
/// configured support size instead of silently truncated.
struct EnumLimits {
  int fragment_cap = 20;   // max |supp(x)| for fragment enumeration
  int partition_cap = 10;  // max |supp(x)| for partition enumeration
};

/// Fragments of x: elements y with y disjoint from x - y, i.e. every
/// coordinate selection of x. Ordered lexicographically by the selected
/// support-index subset (the empty selection first).
inline std::vector<Element> fragments(const Element& x, const EnumLimits& lim = {}) {
  IndexSet s = support(x);
  int t = static_cast<int>(s.members.size());
  if (t > lim.fragment_cap)
    throw CapExceeded("fragment enumeration over support of size " + std::to_string(t) +
                      " exceeds cap " + std::to_string(lim.fragment_cap));
  std::vector<Element> out;
  out.reserve(static_cast<size_t>(1) << t);
  std::vector<int> chosen;
  auto emit = [&]() {
    Element y = Element::zeros(x.dim());
    for (int j : chosen) y.coords[static_cast<size_t>(j - 1)] = x.coords[static_cast<size_t>(j - 1)];
    out.push_back(std::move(y));
  };
  auto rec = [&](auto&& self, int from) -> void {
    emit();
    for (int i = from; i < t; ++i) {
      chosen.push_back(s.members[static_cast<size_t>(i)]);
      self(self, i + 1);
      chosen.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

/// All ordered pairs (y, z) with x = y + z and y disjoint from z.
inline std::vector<std::pair<Element, Element>> binary_decompositions(const Element& x,
                                                                      const EnumLimits& lim = {}) {
  std::vector<std::pair<Element, Element>> out;
  for (Element& y : fragments(x, lim)) {
    Element z = el_sub(x, y);
    out.emplace_back(std::move(y), std::move(z));
  }
  return out;
}

/// Disjoint decomposition of x into nonzero blocks summing to x.
/// For x = 0 the blocks are empty.
struct Partition {
  Element parent;
  std::vector<Element> blocks;
};

/// All partitions of x into disjoint nonzero blocks, enumerated through
/// restricted growth strings over supp(x) in lexicographic order; blocks are
/// ordered by their smallest support index. x = 0 yields the single empty
/// partition.
inline std::vector<Partition> partitions(const Element& x, const EnumLimits& lim = {}) {
  IndexSet s = support(x);
  int t = static_cast<int>(s.members.size());
  if (t > lim.partition_cap)
    throw CapExceeded("partition enumeration over support of size " + std::to_string(t) +
                      " exceeds cap " + std::to_string(lim.partition_cap));
  std::vector<Partition> out;
  if (t == 0) {
    out.push_back(Partition{x, {}});
    return out;
  }
  std::vector<int> a(static_cast<size_t>(t), 0);  // restricted growth string
  auto emit = [&]() {
    int nblocks = 0;
    for (int v : a) nblocks = std::max(nblocks, v + 1);
    Partition p;
    p.parent = x;
    p.blocks.assign(static_cast<size_t>(nblocks), Element::zeros(x.dim()));
    for (int i = 0; i < t; ++i) {
      int j = s.members[static_cast<size_t>(i)];
      p.blocks[static_cast<size_t>(a[static_cast<size_t>(i)])].coords[static_cast<size_t>(j - 1)] =
          x.coords[static_cast<size_t>(j - 1)];
    }
    out.push_back(std::move(p));
  };
  while (true) {
    emit();
    // next restricted growth string: a[i] <= 1 + max(a[0..i-1]), a[0] = 0
    int i = t - 1;
    for (; i > 0; --i) {
      int mx = 0;
      for (int l = 0; l < i; ++l) mx = std::max(mx, a[static_cast<size_t>(l)]);
      if (a[static_cast<size_t>(i)] <= mx) break;
    }
    if (i == 0) return out;
    a[static_cast<size_t>(i)] += 1;
    for (int l = i + 1; l < t; ++l) a[static_cast<size_t>(l)] = 0;
  }
}

/// Chain of partitions of x from the coarsest {x} to the all-singletons
/// partition, each step splitting one more coordinate off the remainder.
/// Empty chain for x = 0.
inline std::vector<Partition> refinement_chain(const Element& x) {
  IndexSet s = support(x);
  int t = static_cast<int>(s.members.size());
  std::vector<Partition> chain;
  if (t == 0) return chain;
  for (int k = 0; k < t; ++k) {
    Partition p;
    p.parent = x;
    for (int i = 0; i < k; ++i) {
      Element b = Element::zeros(x.dim());
      int j = s.members[static_cast<size_t>(i)];
      b.coords[static_cast<size_t>(j - 1)] = x.coords[static_cast<size_t>(j - 1)];
      p.blocks.push_back(std::move(b));
    }
    Element rest = Element::zeros(x.dim());
    for (int i = k; i < t; ++i) {
      int j = s.members[static_cast<size_t>(i)];
      rest.coords[static_cast<size_t>(j - 1)] = x.coords[static_cast<size_t>(j - 1)];
    }
    p.blocks.push_back(std::move(rest));
    chain.push_back(std::move(p));
  }
  return chain;
}

/// True when q refines p: every block of q lies inside one block of p.
inline bool refines(const Partition& q, const Partition& p) {
  for (const Element& bq : q.blocks) {
    bool inside = false;
    for (const Element& bp : p.blocks) {
      if (index_subset(support(bq), support(bp))) {
        inside = true;
        break;
      }
    }
    if (!inside) return false;
  }
  return true;
}

}  // namespace urlat
