#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "urlat/extension.hpp"
#include "urlat/finite.hpp"
#include "urlat/generators.hpp"
#include "urlat/integral.hpp"
#include "urlat/oracles.hpp"

namespace urlat {

struct CriterionReport {
  std::string name;
  long cases = 0;
  long failures = 0;
  double seconds = 0;
  double time_target = 0;  // 0: none
  std::vector<std::string> notes;

  bool passed() const { return failures == 0 && (time_target == 0 || seconds <= time_target); }

  void fail(const std::string& what) {
    ++failures;
    if (notes.size() < 5) notes.push_back(what);
  }

  void check(bool ok, const std::string& what) {
    if (!ok) fail(what);
  }
};

namespace detail {
class Timer {
 public:
  explicit Timer(CriterionReport& r) : r_(r), t0_(std::chrono::steady_clock::now()) {}
  ~Timer() {
    r_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count();
  }

 private:
  CriterionReport& r_;
  std::chrono::steady_clock::time_point t0_;
};
}  // namespace detail

/// Closed-form join/meet/|.| agree with both enumeration oracles on seeded
/// bounded-support pairs.
inline CriterionReport run_lattice_threeway(uint64_t seed, long cases = 1000) {
  CriterionReport rep;
  rep.name = "lattice-threeway";
  rep.time_target = 30.0;
  detail::Timer timer(rep);
  Rng rng(seed);
  for (long c = 0; c < cases; ++c) {
    int n = rng.range(1, 5), m = rng.range(1, 3);
    UrysonOperator t = gen_finite_operator(rng, n, m);
    UrysonOperator s = gen_finite_operator(rng, n, m);
    UrysonOperator join = op_join(t, s), meet = op_meet(t, s);
    UrysonOperator abs = op_abs_parts(t).abs;
    for (int p = 0; p < 10; ++p) {
      Element x = gen_probe(rng, n);
      ++rep.cases;
      std::string tag = "case " + std::to_string(c) + "/" + std::to_string(p);
      auto finest = [](const PartitionOracle& o) {
        return o.chain.empty() ? o.value : o.chain.back().second;
      };
      Element ja = join.apply(x);
      rep.check(ja == oracle_lattice_at(t, &s, LatKind::kJoin, x), tag + ": join vs decomposition");
      rep.check(ja == finest(oracle_partition_at(t, &s, PartKind::kJoin, x)), tag + ": join vs partition");
      Element me = meet.apply(x);
      rep.check(me == oracle_lattice_at(t, &s, LatKind::kMeet, x), tag + ": meet vs decomposition");
      rep.check(me == finest(oracle_partition_at(t, &s, PartKind::kMeet, x)), tag + ": meet vs partition");
      Element ab = abs.apply(x);
      rep.check(ab == oracle_lattice_at(t, nullptr, LatKind::kAbs, x), tag + ": abs vs decomposition");
      rep.check(ab == finest(oracle_partition_at(t, nullptr, PartKind::kAbs, x)), tag + ": abs vs partition");
    }
  }
  return rep;
}

/// |T(x)| <= |T|(x) coordinatewise. The generator stream mirrors the
/// three-way criterion so the families coincide case for case.
inline CriterionReport run_modulus_dominates(uint64_t seed, long cases = 1000) {
  CriterionReport rep;
  rep.name = "modulus-bound";
  detail::Timer timer(rep);
  Rng rng(seed);
  for (long c = 0; c < cases; ++c) {
    int n = rng.range(1, 5), m = rng.range(1, 3);
    UrysonOperator t = gen_finite_operator(rng, n, m);
    UrysonOperator s = gen_finite_operator(rng, n, m);
    UrysonOperator abs_t = op_abs_parts(t).abs, abs_s = op_abs_parts(s).abs;
    for (int p = 0; p < 10; ++p) {
      Element x = gen_probe(rng, n);
      ++rep.cases;
      std::string tag = "case " + std::to_string(c) + "/" + std::to_string(p);
      rep.check(el_leq(el_abs(t.apply(x)), abs_t.apply(x)), tag + " first operator");
      rep.check(el_leq(el_abs(s.apply(x)), abs_s.apply(x)), tag + " second operator");
    }
  }
  return rep;
}

/// Partition sums move monotonically along refinement chains and attain the
/// closed-form value at the finest partition.
inline CriterionReport run_partition_monotone(uint64_t seed, long cases = 300) {
  CriterionReport rep;
  rep.name = "partition-monotone";
  detail::Timer timer(rep);
  Rng rng(seed);
  for (long c = 0; c < cases; ++c) {
    int n = rng.range(1, 6), m = rng.range(1, 2);
    UrysonOperator t = gen_finite_operator(rng, n, m);
    UrysonOperator s = gen_finite_operator(rng, n, m);
    Element x = gen_probe(rng, n);
    ++rep.cases;
    std::string tag = "case " + std::to_string(c);
    struct Goal {
      PartKind kind;
      const char* name;
      Element closed;
    };
    std::vector<Goal> goals{{PartKind::kMeet, "meet", op_meet(t, s).apply(x)},
                            {PartKind::kJoin, "join", op_join(t, s).apply(x)},
                            {PartKind::kAbs, "abs", op_abs_parts(t).abs.apply(x)}};
    for (const Goal& g : goals) {
      PartitionOracle o = oracle_partition_at(t, g.kind == PartKind::kAbs ? nullptr : &s, g.kind, x);
      rep.check(o.value == g.closed, tag + ": " + g.name + " extremum vs closed form");
      for (size_t i = 0; i + 1 < o.chain.size(); ++i) {
        rep.check(refines(o.chain[i + 1].first, o.chain[i].first), tag + ": chain refinement");
        bool mono = g.kind == PartKind::kMeet ? el_leq(o.chain[i + 1].second, o.chain[i].second)
                                              : el_leq(o.chain[i].second, o.chain[i + 1].second);
        rep.check(mono, tag + ": " + g.name + " chain monotone");
      }
      if (!o.chain.empty())
        rep.check(o.chain.back().second == o.value, tag + ": " + g.name + " attained at finest");
    }
  }
  return rep;
}

/// |phi (x) u| = |phi| (x) |u|, entrywise and against the partition oracle.
inline CriterionReport run_rank_one_modulus(uint64_t seed, long cases = 500) {
  CriterionReport rep;
  rep.name = "rank-one-modulus";
  detail::Timer timer(rep);
  Rng rng(seed);
  for (long c = 0; c < cases; ++c) {
    int n = rng.range(1, 4), m = rng.range(1, 3);
    UrysonOperator phi = gen_finite_operator(rng, n, 1);
    Element u = Element::zeros(m);
    for (int i = 0; i < m; ++i) u.coords[static_cast<size_t>(i)] = gen_value(rng);
    ++rep.cases;
    std::string tag = "case " + std::to_string(c);
    UrysonOperator prod = rank_one(phi, u);
    UrysonOperator lhs = op_abs_parts(prod).abs;
    UrysonOperator rhs = rank_one(op_abs_parts(phi).abs, el_abs(u));
    rep.check(lhs == rhs, tag + ": entrywise");
    for (int p = 0; p < 10; ++p) {
      Element x = gen_probe(rng, n);
      rep.check(oracle_partition_at(prod, nullptr, PartKind::kAbs, x).value == rhs.apply(x),
                tag + ": partition oracle at probe " + std::to_string(p));
    }
  }
  return rep;
}

/// The synthesized indicator majorant certifies every probe with the
/// enclosing-box constant; the least constant never exceeds it.
inline CriterionReport run_majorant_soundness(uint64_t seed, long cases = 200) {
  CriterionReport rep;
  rep.name = "majorant-soundness";
  detail::Timer timer(rep);
  Rng rng(seed);
  for (long c = 0; c < cases; ++c) {
    int n = rng.range(1, 3), m = rng.range(1, 2);
    UrysonOperator t = gen_finite_operator(rng, n, m);
    std::vector<UrysonOperator> probes;
    for (int p = 0; p < 100; ++p) {
      if (rng.chance(1, 8)) {
        UrysonOperator s(n, m);
        s.set_entry(rng.range(1, m), rng.range(1, n), gen_tailed_map(rng));
        probes.push_back(std::move(s));
      } else {
        probes.push_back(gen_finite_operator(rng, n, m));
      }
    }
    ++rep.cases;
    std::string tag = "case " + std::to_string(c);
    MajorantCertificate cert = synthesize_majorant(t, probes);
    rep.check(is_finite_structural(cert.majorant), tag + ": majorant finite");
    MajorantOutcome least = check_majorant(t, cert.majorant, probes);
    auto* lc = std::get_if<MajorantCertificate>(&least);
    rep.check(lc != nullptr, tag + ": least-constant pass");
    for (size_t p = 0; p < probes.size(); ++p) {
      const auto& [s, cbox] = cert.probes[p];
      if (lc) rep.check(lc->probes[p].second <= cbox, tag + ": least <= box constant");
      // pointwise soundness of the box constant against the closed-form cut
      UrysonOperator cut = ideal_cut(s, t);
      for (int i = 1; i <= m; ++i) {
        for (int j = 1; j <= n; ++j) {
          for (const auto& [pt, v] : cut.entry(i, j).samples())
            rep.check(v <= cbox * cert.majorant.entry(i, j).eval(pt), tag + ": cut below c*Z");
        }
      }
    }
  }
  return rep;
}

/// Candidate majorant generator for refutation tests: nonnegative, mixing
/// aligned, offset, coarser and finer lattices, plus bounded and zero shapes.
inline UrysonOperator gen_candidate_majorant(Rng& rng, const UrysonOperator& t) {
  UrysonOperator z(t.domain_dim(), t.codomain_dim());
  for (int i = 1; i <= t.codomain_dim(); ++i) {
    for (int j = 1; j <= t.domain_dim(); ++j) {
      int kind = rng.range(0, 5);
      if (kind == 0) continue;
      if (kind == 1) {
        z.set_entry(i, j, gen_sample_map(rng, 3, /*positive=*/true));
        continue;
      }
      if (kind == 2) {
        z.set_entry(i, j, gen_tailed_map(rng, 2, /*nonneg=*/true));
        continue;
      }
      const ScalarMap& te = t.entry(i, j);
      if (!te.tail()) {
        z.set_entry(i, j, gen_sample_map(rng, 3, /*positive=*/true));
        continue;
      }
      TailRule zt = gen_tail(rng, 2, /*nonneg=*/true);
      zt.start = te.tail()->start;
      zt.step = te.tail()->step;
      if (kind == 4) zt.start += zt.step / 3;  // fractional offset: disjoint lattice
      if (kind == 5) {
        if (rng.chance(1, 2)) zt.step *= 2;  // coarser: partial coverage
        else zt.step /= 2;                   // finer: full coverage
      }
      z.set_entry(i, j, ScalarMap({}, std::move(zt)));
    }
  }
  return z;
}

/// Every refutation witness survives direct evaluation: the located (n, x)
/// makes (|S| ^ n|T|)(x) exceed c * Z(x) at some coordinate, for each pinned c.
inline CriterionReport run_refutation_completeness(uint64_t seed, long cases = 100) {
  CriterionReport rep;
  rep.name = "refutation-completeness";
  detail::Timer timer(rep);
  Rng rng(seed);
  const std::vector<Rat> constants{Rat(1), Rat(10), Rat(1000), Rat(1000000)};
  for (long c = 0; c < cases; ++c) {
    int n = rng.range(1, 3), m = rng.range(1, 2);
    UrysonOperator t = gen_tailed_operator(rng, n, m);
    for (int zi = 0; zi < 20; ++zi) {
      UrysonOperator z = gen_candidate_majorant(rng, t);
      RefutationWitness w = refute_majorant(t, z);
      auto abs_s = abs_evaluator(w.probe);
      auto abs_t = abs_evaluator(t);
      for (const Rat& cc : constants) {
        ++rep.cases;
        auto [nn, x] = w.locate(cc);
        Rat nr(nn);
        auto scaled_abs_t = [&](const Element& y) { return el_scale(abs_t(y), nr); };
        Element lhs = oracle_meet_of(abs_s, scaled_abs_t, x);
        Element bound = el_scale(z.apply(x), cc);
        bool exceeds = false;
        for (int i = 0; i < lhs.dim(); ++i)
          exceeds = exceeds || lhs.coords[static_cast<size_t>(i)] > bound.coords[static_cast<size_t>(i)];
        rep.check(exceeds, "case " + std::to_string(c) + "/" + std::to_string(zi) + " c=" + rat_str(cc));
      }
    }
  }
  return rep;
}

/// Finiteness of an operator is exactly bounded support of every entry:
/// finite ones synthesize their own verified majorant, non-finite ones are
/// refuted against the indicator of their bounded part.
inline CriterionReport run_entrywise_finiteness(uint64_t seed, long cases = 10000) {
  CriterionReport rep;
  rep.name = "entrywise-finiteness";
  detail::Timer timer(rep);
  for (long idx = 0; idx < cases; ++idx) {
    Rng rng(seed ^ static_cast<uint64_t>(idx) * 0x9e3779b97f4a7c15ULL);
    int n = 1 + static_cast<int>(idx % 3);
    int m = 1 + static_cast<int>((idx / 3) % 2);
    UrysonOperator t(n, m);
    bool any_tail = false;
    long code = idx / 6;
    for (int i = 1; i <= m; ++i) {
      for (int j = 1; j <= n; ++j) {
        int kind = static_cast<int>(code % 5);
        code /= 5;
        if (kind == 1 || kind == 2) t.set_entry(i, j, gen_sample_map(rng, kind));
        if (kind == 3 || kind == 4) {
          std::map<Rat, Rat> none;
          t.set_entry(i, j, ScalarMap(std::move(none), gen_tail(rng, kind - 3)));
          any_tail = true;
        }
      }
    }
    ++rep.cases;
    std::string tag = "operator " + std::to_string(idx);
    bool fin = is_finite_structural(t);
    rep.check(fin == !any_tail, tag + ": structural test vs construction");
    rep.check(is_totally_finite(t) == fin, tag + ": totally finite coincides");
    if (fin) {
      MajorantCertificate cert = synthesize_majorant(t);
      rep.check(is_finite_structural(cert.majorant), tag + ": synthesized majorant finite");
    } else {
      // indicator of the bounded part cannot majorize: verified witness at c=1
      UrysonOperator z(n, m);
      for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= n; ++j)
          if (!t.entry(i, j).tail()) z.set_entry(i, j, indicator_of_support(t.entry(i, j)));
      RefutationWitness w = refute_majorant(t, z);
      auto [nn, x] = w.locate(Rat(1));
      Element lhs = oracle_meet_of(abs_evaluator(w.probe),
                                   [&](const Element& y) { return el_scale(abs_evaluator(t)(y), Rat(nn)); }, x);
      Element bound = z.apply(x);
      bool exceeds = false;
      for (int i = 0; i < lhs.dim(); ++i)
        exceeds = exceeds || lhs.coords[static_cast<size_t>(i)] > bound.coords[static_cast<size_t>(i)];
      rep.check(exceeds, tag + ": refutation witness");
    }
  }
  return rep;
}

/// Band projections commute with the finiteness test: projected operators are
/// finite in the full lattice iff finite inside the band, projections of
/// finite operators stay finite, band-supported operators are fixed points.
inline CriterionReport run_band_identities(uint64_t seed, long cases = 500) {
  CriterionReport rep;
  rep.name = "band-identities";
  detail::Timer timer(rep);
  Rng rng(seed);
  for (long c = 0; c < cases; ++c) {
    int n = rng.range(1, 3), m = rng.range(2, 4);
    UrysonOperator t = rng.chance(1, 2) ? gen_tailed_operator(rng, n, m) : gen_finite_operator(rng, n, m);
    IndexSet band;
    band.dim = m;
    uint64_t mask = rng.below(uint64_t(1) << m);
    for (int i = 1; i <= m; ++i)
      if (mask & (uint64_t(1) << (i - 1))) band.members.push_back(i);
    ++rep.cases;
    std::string tag = "case " + std::to_string(c);
    rep.check(band_phi1_identity_check(t, band), tag + ": identity bundle");
    UrysonOperator pi_t = restrict_to_band(t, band);
    rep.check(restrict_to_band(pi_t, band) == pi_t, tag + ": projection idempotent");
    rep.check(band_phi1_identity_check(pi_t, band), tag + ": identities on the projection");
  }
  return rep;
}

/// Extension suite: the minimal extension agrees with the table on the whole
/// domain, stays below every positive extension, and disjoint-union domains
/// satisfy the lateral-ideal axioms exhaustively.
inline CriterionReport run_extension_minimality(uint64_t seed, long cases = 100) {
  CriterionReport rep;
  rep.name = "extension-minimality";
  detail::Timer timer(rep);
  Rng rng(seed);
  for (long c = 0; c < cases; ++c) {
    int dim = 8, co = rng.range(1, 2);
    Element w = Element::zeros(dim);
    for (int j = 0; j < dim; ++j)
      if (rng.chance(3, 4)) w.coords[static_cast<size_t>(j)] = rng.pick(point_pool());
    std::vector<Element> unit(static_cast<size_t>(dim), Element::zeros(co));
    for (int j = 0; j < dim; ++j)
      for (int i = 0; i < co; ++i)
        if (rng.chance(2, 3)) unit[static_cast<size_t>(j)].coords[static_cast<size_t>(i)] = gen_positive_value(rng);
    auto table_value = [&](const Element& y) {
      Element v = Element::zeros(co);
      for (int j : support(y).members) v = el_add(v, unit[static_cast<size_t>(j - 1)]);
      return v;
    };
    std::map<Element, Element> table;
    for (const Element& y : fragments(w)) table[y] = table_value(y);
    PartialOperator part(LateralIdeal::fragments_of(w), table, co);
    ++rep.cases;
    std::string tag = "case " + std::to_string(c);
    for (const Element& y : fragments(w))
      rep.check(minimal_extension_at(part, y) == part.value_at(y), tag + ": agreement on the domain");

    // a positive extension: the matrix form of the table plus off-domain mass
    UrysonOperator r(dim, co);
    for (int j : support(w).members) {
      const Rat& wj = w.coords[static_cast<size_t>(j - 1)];
      for (int i = 1; i <= co; ++i) {
        std::map<Rat, Rat> samples;
        const Rat& v = unit[static_cast<size_t>(j - 1)].coords[static_cast<size_t>(i - 1)];
        if (v != 0) samples[wj] = v;
        if (rng.chance(1, 2)) {
          Rat extra = wj + 3;
          if (extra == 0) extra = wj + 4;
          samples[extra] = gen_positive_value(rng);
        }
        r.set_entry(i, j, ScalarMap(std::move(samples), std::nullopt));
      }
    }
    std::vector<Element> probes;
    for (int p = 0; p < 5; ++p) {
      Element x = Element::zeros(dim);
      for (int j = 0; j < dim; ++j) {
        int roll = rng.range(0, 3);
        if (roll == 1) x.coords[static_cast<size_t>(j)] = w.coords[static_cast<size_t>(j)];
        if (roll == 2) x.coords[static_cast<size_t>(j)] = w.coords[static_cast<size_t>(j)] + 3;
        if (roll == 3) x.coords[static_cast<size_t>(j)] = rng.pick(point_pool());
      }
      probes.push_back(std::move(x));
    }
    rep.check(check_minimality(part, r, probes), tag + ": minimal below an extension");

    // disjoint-union domain: split w across odd and even support positions
    Element w1 = Element::zeros(dim), w2 = Element::zeros(dim);
    {
      int pos = 0;
      for (int j : support(w).members) {
        (pos++ % 2 == 0 ? w1 : w2).coords[static_cast<size_t>(j - 1)] = w.coords[static_cast<size_t>(j - 1)];
      }
    }
    LateralIdeal du = LateralIdeal::disjoint_union({LateralIdeal::fragments_of(w1), LateralIdeal::fragments_of(w2)});
    auto mem = du.members();
    rep.check(mem.has_value(), tag + ": union enumerable");
    if (mem) {
      std::vector<Element> expect = fragments(w);
      std::sort(expect.begin(), expect.end());
      std::vector<Element> got = *mem;
      std::sort(got.begin(), got.end());
      rep.check(got == expect, tag + ": union members are the fragments of the sum");
      for (const Element& x : *mem) {
        for (const Element& y : fragments(x))
          rep.check(du.contains(y), tag + ": closed under fragments");
      }
      for (const Element& x : *mem)
        for (const Element& y : *mem)
          if (is_disjoint(x, y)) rep.check(du.contains(el_add(x, y)), tag + ": closed under disjoint sums");
    }
    LateralIdeal oi = LateralIdeal::order_ideal({w});
    rep.check(oi.contains(el_scale(w, Rat(7, 2))), tag + ": order ideal scales");
    Element off = Element::zeros(dim);
    off.coords[0] = 1;
    if (w.coords[0] == 0) rep.check(!oi.contains(off), tag + ": order ideal region bound");
  }
  return rep;
}

/// Atom projection: (pi_phi T)(e_j) equals T(e_j) exactly when phi charges
/// the atom, else 0.
inline CriterionReport run_atom_projection(uint64_t seed, long cases = 100) {
  CriterionReport rep;
  rep.name = "atom-projection";
  detail::Timer timer(rep);
  Rng rng(seed);
  for (long c = 0; c < cases; ++c) {
    int k = rng.range(1, 8);
    UrysonOperator phi(k, 1), t(k, 1);
    for (int j = 1; j <= k; ++j) {
      std::map<Rat, Rat> ps;
      if (rng.chance(1, 2)) ps[Rat(1)] = gen_positive_value(rng);
      if (rng.chance(1, 3)) ps[Rat(2)] = gen_positive_value(rng);
      phi.set_entry(1, j, ScalarMap(std::move(ps), std::nullopt));
      std::map<Rat, Rat> ts;
      if (rng.chance(3, 4)) ts[Rat(1)] = gen_positive_value(rng);
      if (rng.chance(1, 3)) ts[Rat(3)] = gen_positive_value(rng);
      t.set_entry(1, j, ScalarMap(std::move(ts), std::nullopt));
    }
    for (int j = 1; j <= k; ++j) {
      Element e = Element::zeros(k);
      e.coords[static_cast<size_t>(j - 1)] = 1;
      ++rep.cases;
      Rat got = pi_band_projection_at(phi, t, e);
      Rat expect = phi.apply(e).coords[0] != 0 ? t.apply(e).coords[0] : Rat(0);
      rep.check(got == expect, "case " + std::to_string(c) + " atom " + std::to_string(j));
    }
  }
  return rep;
}

/// Atom support lists exactly the active columns with finite evidence.
inline CriterionReport run_atom_support_finiteness(uint64_t seed, long cases = 400) {
  CriterionReport rep;
  rep.name = "atom-support";
  detail::Timer timer(rep);
  Rng rng(seed);
  for (long c = 0; c < cases; ++c) {
    int k = 1 + static_cast<int>(c % 8);
    int m = rng.range(1, 2);
    UrysonOperator t = rng.chance(1, 3) ? gen_tailed_operator(rng, k, m) : gen_finite_operator(rng, k, m);
    ++rep.cases;
    std::string tag = "case " + std::to_string(c);
    std::vector<AtomSupportEntry> sup = atom_support(t);
    for (int j = 1; j <= k; ++j) {
      bool listed = false;
      const AtomSupportEntry* entry = nullptr;
      for (const AtomSupportEntry& e : sup)
        if (e.j == j) listed = true, entry = &e;
      bool col_nonzero = false, col_tailed = false;
      std::vector<Rat> pts;
      for (int i = 1; i <= m; ++i) {
        const ScalarMap& f = t.entry(i, j);
        col_nonzero = col_nonzero || !f.is_zero();
        col_tailed = col_tailed || f.tail().has_value();
        for (const auto& [p, v] : f.samples()) pts.push_back(p);
      }
      std::sort(pts.begin(), pts.end());
      pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
      rep.check(listed == col_nonzero, tag + ": column " + std::to_string(j) + " listed iff active");
      if (entry) {
        rep.check(entry->points == pts, tag + ": evidence points");
        rep.check(entry->tail == col_tailed, tag + ": tail flag");
      }
    }
    if (is_finite_structural(t)) {
      for (const AtomSupportEntry& e : sup) rep.check(!e.tail, tag + ": finite evidence only");
    }
  }
  return rep;
}

/// Discrete kernels and their operators agree on every grid function;
/// disjointly supported functions split additively; nonnegative kernels give
/// positive operators; kernels that fail to vanish at 0 are flagged.
inline CriterionReport run_integral_bridge(uint64_t seed, long cases = 0) {
  CriterionReport rep;
  rep.name = "integral-bridge";
  rep.time_target = 10.0;
  detail::Timer timer(rep);
  (void)cases;  // exhaustive over the pinned size grid
  Rng rng(seed);
  std::vector<std::vector<Rat>> grids{{Rat(0)},
                                      {Rat(0), Rat(2)},
                                      {Rat(0), Rat(-1)},
                                      {Rat(0), Rat(1), Rat(2)},
                                      {Rat(0), Rat(2), Rat(-3)},
                                      {Rat(0), Rat(1, 2), Rat(2)}};
  for (int p = 1; p <= 4; ++p) {
    for (int q = 1; q <= 4; ++q) {
      for (const auto& grid : grids) {
        FiniteMeasureSpace a, b;
        for (int i = 0; i < p; ++i) a.weights.push_back(gen_positive_value(rng));
        for (int j = 0; j < q; ++j) b.weights.push_back(gen_positive_value(rng));
        std::map<std::tuple<int, int, Rat>, Rat> vals;
        for (int i = 1; i <= p; ++i)
          for (int j = 1; j <= q; ++j)
            for (const Rat& r : grid)
              if (r != 0 && rng.chance(2, 3)) vals[{i, j, r}] = gen_value(rng);
        KernelTable kt(a, b, grid, vals);
        UrysonOperator t = kt.build_operator();
        ++rep.cases;
        std::string tag = "kernel " + std::to_string(p) + "x" + std::to_string(q) + " grid of " +
                          std::to_string(grid.size());
        // every grid-valued function
        size_t total = 1;
        for (int j = 0; j < q; ++j) total *= grid.size();
        for (size_t code = 0; code < total; ++code) {
          size_t cc = code;
          Element f = Element::zeros(q);
          for (int j = 0; j < q; ++j) {
            f.coords[static_cast<size_t>(j)] = grid[cc % grid.size()];
            cc /= grid.size();
          }
          rep.check(t.apply(f) == kt.apply_integral(f), tag + ": quadrature agreement");
        }
        // disjointly supported pairs split additively
        size_t pairs = 1;
        size_t per = 2 * grid.size() - 1;  // (a, 0) or (0, b)
        for (int j = 0; j < q; ++j) pairs *= per;
        for (size_t code = 0; code < pairs; ++code) {
          size_t cc = code;
          Element f = Element::zeros(q), g = Element::zeros(q);
          for (int j = 0; j < q; ++j) {
            size_t pickv = cc % per;
            cc /= per;
            if (pickv < grid.size()) {
              f.coords[static_cast<size_t>(j)] = grid[pickv];
            } else {
              g.coords[static_cast<size_t>(j)] = grid[pickv - grid.size() + 1];
            }
          }
          rep.check(kt.apply_integral(el_add(f, g)) ==
                        el_add(kt.apply_integral(f), kt.apply_integral(g)),
                    tag + ": orthogonal additivity");
        }
        // nonnegative kernel gives a positive operator
        std::map<std::tuple<int, int, Rat>, Rat> absvals;
        for (const auto& [key, v] : vals) absvals[key] = rat_abs(v);
        KernelTable kabs(a, b, grid, absvals);
        rep.check(kernel_is_nonneg(kabs) && is_nonneg_op(kabs.build_operator()),
                  tag + ": monotone kernel positivity");
        // a kernel charging 0 is flagged and refused
        if (grid.size() > 1) {
          auto bad = vals;
          bad[{1, 1, Rat(0)}] = 1;
          KernelTable kbad(a, b, grid, bad);
          rep.check(!kbad.caratheodory_check().zero_ok, tag + ": zero violation flagged");
          bool threw = false;
          try {
            kbad.build_operator();
          } catch (const PreconditionError&) {
            threw = true;
          }
          rep.check(threw, tag + ": zero violation refused");
        }
      }
    }
  }
  return rep;
}

struct SuiteReport {
  std::string suite;
  uint64_t seed = 0;
  std::vector<CriterionReport> criteria;

  bool passed() const {
    for (const CriterionReport& c : criteria)
      if (!c.passed()) return false;
    return true;
  }
};

/// Named suites: lattice, finite, extension, bridge, all. `cases` scales the
/// sampled criteria when provided.
inline SuiteReport run_suite(const std::string& name, uint64_t seed,
                             std::optional<long> cases = std::nullopt) {
  SuiteReport out;
  out.suite = name;
  out.seed = seed;
  auto scaled = [&](long dflt) { return cases ? *cases : dflt; };
  auto add = [&](CriterionReport r) { out.criteria.push_back(std::move(r)); };
  bool lattice = name == "lattice" || name == "all";
  bool finite = name == "finite" || name == "all";
  bool extension = name == "extension" || name == "all";
  bool bridge = name == "bridge" || name == "all";
  if (!lattice && !finite && !extension && !bridge) throw ParseError("unknown suite: " + name);
  if (lattice) {
    add(run_lattice_threeway(seed, scaled(1000)));
    add(run_modulus_dominates(seed, scaled(1000)));
    add(run_partition_monotone(seed, scaled(300)));
    add(run_rank_one_modulus(seed, scaled(500)));
  }
  if (finite) {
    add(run_majorant_soundness(seed, scaled(200)));
    add(run_refutation_completeness(seed, scaled(100)));
    add(run_entrywise_finiteness(seed, scaled(10000)));
    add(run_band_identities(seed, scaled(500)));
    add(run_atom_support_finiteness(seed, scaled(400)));
  }
  if (extension) {
    add(run_extension_minimality(seed, scaled(100)));
    add(run_atom_projection(seed, scaled(100)));
  }
  if (bridge) {
    add(run_integral_bridge(seed, scaled(0)));
  }
  return out;
}

}  // namespace urlat
