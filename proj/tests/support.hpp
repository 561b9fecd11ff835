#pragma once

#include <string>
#include <vector>

#include "specz/modules.hpp"
#include "specz/parse.hpp"

namespace testing_support {

using namespace specz;

inline QIdeal qi(const RingPtr& r, std::initializer_list<const char*> gens) {
  std::vector<QPoly> g;
  for (auto s : gens) g.push_back(parse_qpoly(r, s));
  return QIdeal(r, g);
}

inline FIdeal fi(const RingPtr& r, std::initializer_list<const char*> gens) {
  std::vector<FPoly> g;
  for (auto s : gens) g.push_back(parse_poly(r, s));
  return FIdeal(r, g);
}

inline QMatrix qm(const RingPtr& r, std::initializer_list<std::initializer_list<const char*>> rows) {
  std::vector<std::vector<QPoly>> out;
  for (const auto& row : rows) {
    out.emplace_back();
    for (auto s : row) out.back().push_back(parse_qpoly(r, s));
  }
  return QMatrix::from_rows(r, out);
}

inline FMatrix fm(const RingPtr& r, std::initializer_list<std::initializer_list<const char*>> rows) {
  std::vector<std::vector<FPoly>> out;
  for (const auto& row : rows) {
    out.emplace_back();
    for (auto s : row) out.back().push_back(parse_poly(r, s));
  }
  return FMatrix::from_rows(r, out);
}

template <class K>
std::vector<std::string> strs(const std::vector<Poly<K>>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.str());
  return out;
}

}  // namespace testing_support
