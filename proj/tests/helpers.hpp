#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "urlat/operators.hpp"

namespace testutil {

inline urlat::Rat q(const std::string& s) { return urlat::parse_rat(s); }

inline urlat::Element el(std::initializer_list<std::string> coords) {
  std::vector<urlat::Rat> c;
  for (const std::string& s : coords) c.push_back(q(s));
  return urlat::Element(std::move(c));
}

inline urlat::ScalarMap sm(std::initializer_list<std::pair<std::string, std::string>> pts) {
  std::map<urlat::Rat, urlat::Rat> m;
  for (const auto& [p, v] : pts) m[q(p)] = q(v);
  return urlat::ScalarMap(std::move(m), std::nullopt);
}

inline urlat::TailRule tail(const std::string& start, const std::string& step,
                            std::initializer_list<std::string> poly, const std::string& ratio) {
  urlat::Poly p;
  for (const std::string& c : poly) p.push_back(q(c));
  return urlat::TailRule{q(start), q(step), std::move(p), q(ratio)};
}

inline urlat::ScalarMap sm_tailed(std::initializer_list<std::pair<std::string, std::string>> pts,
                                  urlat::TailRule t) {
  std::map<urlat::Rat, urlat::Rat> m;
  for (const auto& [p, v] : pts) m[q(p)] = q(v);
  return urlat::ScalarMap(std::move(m), std::move(t));
}

inline urlat::IndexSet idx(int dim, std::initializer_list<int> members) {
  urlat::IndexSet b;
  b.dim = dim;
  for (int m : members) b.members.push_back(m);
  return b;
}

}  // namespace testutil
