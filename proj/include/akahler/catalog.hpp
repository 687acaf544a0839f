#pragma once

#include <array>
#include <charconv>
#include <string>
#include <utility>
#include <vector>

#include "akahler/dim4.hpp"
#include "akahler/ladder.hpp"

namespace akahler::catalog {

struct Entry {
  std::string name;
  AntiHermitianStructure structure;
  std::string provenance;
  /// Subset of PropertyLadder::entries() the structure must reproduce.
  std::vector<std::pair<std::string, std::string>> expected;
};

inline AntiHermitianStructure abelian4() {
  return {LieAlgebra::abelian(4), standard_neutral_metric(4), standard_complex_structure(4)};
}

/// 6-dim 2-step nilpotent algebra with an abelian complex structure and a
/// flat anti-Kahler metric pairing X1 with X5 and X2 with X6.
inline AntiHermitianStructure n7() {
  const Rational z, o(1), h(1, 2);
  auto e = [](std::size_t k) { return basis_vector(6, k); };
  const LieAlgebra l = LieAlgebra::from_brackets(
      6, {{{0, 1}, e(3)}, {{0, 2}, e(4)}, {{0, 3}, e(5)}, {{1, 2}, e(5)}, {{1, 3}, Rational(-1) * e(4)}});
  RationalMatrix j(6, 6);
  j(1, 0) = o;
  j(0, 1) = -o;
  j(3, 2) = -o;
  j(2, 3) = o;
  j(5, 4) = -o;
  j(4, 5) = o;
  RationalMatrix g(6, 6);
  g(0, 4) = g(4, 0) = h;
  g(1, 5) = g(5, 1) = h;
  g(2, 2) = o;
  g(3, 3) = -o;
  return {l, g, j};
}

/// Realification of sl(2, C) on H, iH, E, iE, F, iF.
inline LieAlgebra sl2c_real() {
  using G = GaussianRational;
  std::vector<std::vector<std::vector<G>>> c(3, std::vector<std::vector<G>>(3, std::vector<G>(3)));
  c[0][1][1] = G(2);   // [H, E] = 2E
  c[0][2][2] = G(-2);  // [H, F] = -2F
  c[1][2][0] = G(1);   // [E, F] = H
  return realify_complex_algebra(c);
}

inline AntiHermitianStructure sl2c_killing() {
  const LieAlgebra l = sl2c_real();
  return {l, killing_form(l), standard_complex_structure(6)};
}

namespace detail {

inline std::vector<Rational> parse_params(std::string_view text) {
  std::vector<Rational> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::string_view tok = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    out.push_back(Rational::parse(tok));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace detail

inline std::vector<std::string> list() { return {"abelian4", "n7_J-1", "sl2c_killing", "r-1-1_std", "affC_std"}; }

/// Named entries plus the parametrized families "mu1:a,b,eps" and
/// "mu2:t1,t2,t3,t4".
inline Entry get(const std::string& name) {
  if (name == "abelian4")
    return {name, abelian4(), "four-dimensional abelian algebra, standard J-basis",
            {{"anti_kahler", "true"}, {"flat", "true"}, {"abelian_J", "true"}, {"bi_invariant_J", "true"}}};
  if (name == "n7_J-1")
    return {name, n7(), "six-dimensional nilpotent algebra with abelian complex structure J_-1",
            {{"anti_kahler", "true"},
             {"abelian_J", "true"},
             {"nijenhuis_zero", "true"},
             {"flat", "true"},
             {"unimodular", "true"},
             {"killing_J_anti_invariant", "true"}}};
  if (name == "sl2c_killing")
    return {name, sl2c_killing(), "realified sl(2,C) with Killing metric and J = multiplication by i",
            {{"anti_kahler", "true"},
             {"einstein", "true"},
             {"lambda", "-1/4"},
             {"bi_invariant_J", "true"},
             {"bi_invariant_metric", "true"},
             {"curvature_pure", "true"}}};
  if (name == "r-1-1_std")
    return {name, make_family_case1(Rational(1), Rational(0), 1), "case-1 family member mu_{1,0,+1}",
            {{"anti_kahler", "true"}, {"flat", "true"}}};
  if (name == "affC_std")
    return {name, make_family_case2(Rational(1), Rational(0), Rational(0), Rational(0)),
            "case-2 family member mu_{1,0,0,0}",
            {{"anti_kahler", "true"}, {"bi_invariant_J", "true"}, {"einstein", "true"}, {"lambda", "-2"}}};
  try {
    if (name.starts_with("mu1:")) {
      const auto p = detail::parse_params(std::string_view(name).substr(4));
      if (p.size() == 3 && (p[2] == Rational(1) || p[2] == Rational(-1)))
        return {name, make_family_case1(p[0], p[1], p[2].sign()), "case-1 family member", {{"anti_kahler", "true"}, {"flat", "true"}}};
    }
    if (name.starts_with("mu2:")) {
      const auto p = detail::parse_params(std::string_view(name).substr(4));
      if (p.size() == 4)
        return {name, make_family_case2(p[0], p[1], p[2], p[3]), "case-2 family member", {{"anti_kahler", "true"}, {"bi_invariant_J", "true"}}};
    }
  } catch (const SyntaxError&) {
  }
  throw UnknownEntry("unknown catalog entry '" + name + "'");
}

/// Names of expected flags that the engines do not reproduce.
inline std::vector<std::string> mismatched_flags(const Entry& e) {
  const auto actual = property_ladder(e.structure).entries();
  std::vector<std::string> bad;
  for (const auto& [key, value] : e.expected) {
    auto it = std::find_if(actual.begin(), actual.end(), [&](const auto& kv) { return kv.first == key; });
    if (it == actual.end() || it->second != value) bad.push_back(key);
  }
  return bad;
}

}  // namespace akahler::catalog
