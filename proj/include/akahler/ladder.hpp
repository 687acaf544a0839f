#pragma once

#include <string>
#include <utility>
#include <vector>

#include "akahler/properties.hpp"
#include "akahler/theta.hpp"

namespace akahler {

/// Every predicate the check command reports, evaluated once.
struct PropertyLadder {
  bool abelian_J = false;
  bool bi_invariant_J = false;
  bool anti_abelian_J = false;
  bool nijenhuis_zero = false;
  bool unimodular = false;
  bool anti_kahler = false;
  bool anti_kahler_via_theta = false;
  bool flat = false;
  bool ricci_flat = false;
  bool einstein = false;
  std::optional<Rational> lambda;
  bool curvature_pure = false;
  bool killing_J_anti_invariant = false;
  bool bi_invariant_metric = false;

  /// (name, value) in a fixed order; booleans as "true"/"false".
  std::vector<std::pair<std::string, std::string>> entries() const {
    auto b = [](bool v) { return std::string(v ? "true" : "false"); };
    return {{"anti_hermitian", "true"},
            {"abelian_J", b(abelian_J)},
            {"bi_invariant_J", b(bi_invariant_J)},
            {"anti_abelian_J", b(anti_abelian_J)},
            {"nijenhuis_zero", b(nijenhuis_zero)},
            {"unimodular", b(unimodular)},
            {"anti_kahler", b(anti_kahler)},
            {"anti_kahler_via_theta", b(anti_kahler_via_theta)},
            {"flat", b(flat)},
            {"ricci_flat", b(ricci_flat)},
            {"einstein", b(einstein)},
            {"lambda", lambda ? lambda->str() : "none"},
            {"curvature_pure", b(curvature_pure)},
            {"killing_J_anti_invariant", b(killing_J_anti_invariant)},
            {"bi_invariant_metric", b(bi_invariant_metric)}};
  }
};

inline PropertyLadder property_ladder(const AntiHermitianStructure& s) {
  const LieAlgebra& l = s.algebra();
  const RationalMatrix& j = s.complex_structure();
  const Connection c = levi_civita(s);
  const CurvatureTensor r = curvature(s, c);
  const Ricci ric = ricci(s, r);
  const EinsteinResult e = einstein(s, ric);
  PropertyLadder p;
  p.abelian_J = is_abelian_J(l, j);
  p.bi_invariant_J = is_bi_invariant_J(l, j);
  p.anti_abelian_J = is_anti_abelian_J(l, j);
  p.nijenhuis_zero = nijenhuis(l, j).is_zero();
  p.unimodular = is_unimodular(l);
  p.anti_kahler = is_anti_kahler(s, c);
  p.anti_kahler_via_theta = anti_kahler_via_theta(s);
  p.flat = r.is_zero();
  p.ricci_flat = ric.form.is_zero();
  p.einstein = e.einstein;
  p.lambda = e.lambda;
  p.curvature_pure = curvature_is_pure(s, r);
  p.killing_J_anti_invariant = killing_is_J_anti_invariant(s);
  p.bi_invariant_metric = is_bi_invariant_metric(s);
  return p;
}

}  // namespace akahler
