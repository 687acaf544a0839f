#pragma once

#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "akahler/random.hpp"
#include "akahler/structure_file.hpp"

namespace akahler {

/// One random test case. `params` carry family parameters for the dim-4
/// suites, `map` a linear map for the group-equality suite.
struct Sample {
  AntiHermitianStructure structure;
  std::string origin;
  std::optional<RationalMatrix> map{};
  std::vector<Rational> params{};
  std::vector<Rational> params2{};
};

/// Geometry of a sample, computed on first use.
class Analysis {
public:
  explicit Analysis(const AntiHermitianStructure& s) : s_(s) {}

  const AntiHermitianStructure& structure() const { return s_; }
  const Connection& connection() const {
    if (!c_) c_.emplace(levi_civita(s_));
    return *c_;
  }
  const CurvatureTensor& curvature() const {
    if (!r_) r_.emplace(akahler::curvature(s_, connection()));
    return *r_;
  }
  const Ricci& ricci() const {
    if (!ric_) ric_.emplace(akahler::ricci(s_, curvature()));
    return *ric_;
  }
  bool anti_kahler() const {
    if (!ak_) ak_ = is_anti_kahler(s_, connection());
    return *ak_;
  }

private:
  const AntiHermitianStructure& s_;
  mutable std::optional<Connection> c_;
  mutable std::optional<CurvatureTensor> r_;
  mutable std::optional<Ricci> ric_;
  mutable std::optional<bool> ak_;
};

struct Outcome {
  enum class Status { pass, fail, skip } status = Status::pass;
  std::string detail;

  static Outcome pass() { return {}; }
  static Outcome skip() { return {Status::skip, {}}; }
  static Outcome fail(std::string why) { return {Status::fail, std::move(why)}; }
  static Outcome check(bool ok, std::string why) { return ok ? pass() : fail(std::move(why)); }
};

struct Proposition {
  std::string id;
  std::function<Outcome(const Sample&, const Analysis&)> check;
};

struct SuiteDefinition {
  std::string name;
  std::string summary;
  std::function<Sample(Rng&, std::size_t index, const GeneratorConfig&)> generate;
  std::vector<Proposition> propositions;
};

struct Counterexample {
  std::size_t sample = 0;
  std::string origin;
  std::string detail;
  std::string structure;  ///< structure-file text
};

struct PropositionResult {
  std::string id;
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::size_t skipped = 0;
  std::optional<Counterexample> counterexample{};
};

struct SuiteReport {
  std::string suite;
  GeneratorConfig config;
  std::vector<PropositionResult> results;
  std::map<std::string, std::size_t> origins;

  bool passed() const {
    for (const auto& r : results)
      if (r.failed) return false;
    return true;
  }

  std::string text() const {
    std::ostringstream out;
    out << "suite " << suite << " seed=" << config.master_seed << " samples=" << config.samples
        << " dim=" << config.dim << " bound=" << config.coefficient_bound << "\n";
    for (const auto& [origin, count] : origins) out << "  sample origin " << origin << ": " << count << "\n";
    for (const auto& r : results) {
      out << "  " << r.id << ": " << (r.failed ? "FAIL" : "pass") << " (" << r.checked - r.failed << "/" << r.checked
          << " checked, " << r.skipped << " not applicable)\n";
      if (r.counterexample) {
        const auto& c = *r.counterexample;
        out << "    counterexample at sample " << c.sample << " (" << c.origin << "): " << c.detail << "\n";
        std::istringstream lines(c.structure);
        for (std::string line; std::getline(lines, line);) out << "      " << line << "\n";
      }
    }
    out << "result: " << (passed() ? "PASS" : "FAIL") << "\n";
    return out.str();
  }
};

namespace suites {

using random::invertible;

inline std::size_t even_dim(const GeneratorConfig& cfg) { return cfg.dim == 6 ? 6 : 4; }

inline Sample transported(Rng& rng, const AntiHermitianStructure& s, std::string origin) {
  return {s.transport(invertible(rng, s.dim())), std::move(origin)};
}

inline AntiHermitianStructure sl2c_scaled(const Rational& c) {
  const auto base = catalog::sl2c_killing();
  return {base.algebra(), c * base.metric(), base.complex_structure()};
}

/// Mixture of generic structures and several anti-Kahler constructions.
inline Sample mixed(Rng& rng, std::size_t n) {
  switch (rng.below(6)) {
    case 0: {
      const LieAlgebra l = random::real_algebra(rng, n);
      return {random::anti_hermitian_metric(l, random::complex_structure(rng, n), rng), "generic"};
    }
    case 1: {
      const LieAlgebra l = random::real_algebra(rng, n);
      return {random::anti_hermitian_metric(l, standard_complex_structure(n), rng), "generic-standard-J"};
    }
    case 2: {
      const LieAlgebra l = random::complex_algebra(rng, n);
      return transported(rng, random::anti_hermitian_metric(l, standard_complex_structure(n), rng), "bi-invariant-J");
    }
    case 3: {
      if (n == 6) {
        const auto base = catalog::n7();
        auto ak = random::anti_kahler_metric(base.algebra(), base.complex_structure(), rng);
        return transported(rng, ak ? *ak : base, "abelian-J-n7");
      }
      return transported(rng, random::anti_hermitian_metric(LieAlgebra::abelian(4), standard_complex_structure(4), rng),
                         "abelian");
    }
    case 4: {
      if (n == 6) return transported(rng, sl2c_scaled(rng.nonzero_rational()), "sl2c-killing");
      Rational a = rng.rational(), b = rng.rational();
      if (a.is_zero() && b.is_zero()) a = Rational(1);
      return transported(rng, make_family_case1(a, b, rng.coin() ? 1 : -1), "case1-family");
    }
    default: {
      if (n == 6) {
        const LieAlgebra l = random::two_step_nilpotent(rng, 6);
        const RationalMatrix j = standard_complex_structure(6);
        if (auto ak = random::anti_kahler_metric(l, j, rng)) return transported(rng, *ak, "anti-kahler-nilpotent");
        return {random::anti_hermitian_metric(l, j, rng), "generic-nilpotent"};
      }
      std::array<Rational, 4> t{rng.rational(), rng.rational(), rng.rational(), rng.rational()};
      if (t[0].is_zero() && t[1].is_zero() && t[2].is_zero() && t[3].is_zero()) t[0] = Rational(1);
      return transported(rng, make_family_case2(t), "case2-family");
    }
  }
}

inline Sample mixed_sample(Rng& rng, std::size_t, const GeneratorConfig& cfg) { return mixed(rng, even_dim(cfg)); }

inline std::string yes(bool b) { return b ? "true" : "false"; }

// ---- individual suites ----

inline SuiteDefinition neutral_signature() {
  return {"neutral_signature",
          "anti-Hermitian metrics are neutral; the complexified form is C-bilinear",
          mixed_sample,
          {{"anti_hermitian_metric_is_neutral",
            [](const Sample& s, const Analysis&) {
              const std::size_t h = s.structure.dim() / 2;
              const Signature sig = signature(s.structure.metric());
              return Outcome::check(sig == Signature{h, h, 0}, "signature (" + std::to_string(sig.positive) + "," +
                                                                   std::to_string(sig.negative) + "," +
                                                                   std::to_string(sig.zero) + ")");
            }},
           {"complexified_form_is_complex_bilinear", [](const Sample& s, const Analysis&) {
              const ComplexifiedForm f(s.structure);
              const std::size_t n = s.structure.dim();
              const auto& j = s.structure.complex_structure();
              for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b) {
                  if (!(f.gram()(a, b) == f.gram()(b, a))) return Outcome::fail("form not symmetric");
                  if (!(f.gram()(a, b).re() == s.structure.metric()(a, b))) return Outcome::fail("real part differs from g");
                  if (!(f(j.column(a), basis_vector(n, b)) == GaussianRational::i() * f.gram()(a, b)))
                    return Outcome::fail("<Jv, w> != i <v, w>");
                }
              return Outcome::pass();
            }}}};
}

inline SuiteDefinition group_equality() {
  auto generate = [](Rng& rng, std::size_t index, const GeneratorConfig& cfg) {
    const std::size_t n = even_dim(cfg), m = n / 2;
    const LieAlgebra l = random::real_algebra(rng, n);
    const RationalMatrix p = invertible(rng, n);
    const AntiHermitianStructure base(l, standard_neutral_metric(n), standard_complex_structure(n));
    const RationalMatrix pinv = invert(p);
    Sample s{base.transport(p), "", std::nullopt, {}, {}};
    RationalMatrix t;
    switch (index % 4) {
      case 0:
        t = random::matrix(rng, n);
        s.origin = "generic-map";
        break;
      case 1:
        t = realify(random::complex_matrix(rng, m));
        s.origin = "complex-linear-map";
        break;
      case 2:
        t = realify(random::complex_orthogonal(rng, m));
        s.origin = "complex-orthogonal-map";
        break;
      default: {
        // real isometry of diag(1,-1,...) swapping X_1 and X_2 only
        t = RationalMatrix::identity(n);
        t(0, 0) = t(2, 2) = Rational(0);
        t(0, 2) = t(2, 0) = Rational(1);
        s.origin = "isometry-not-J-linear";
      }
    }
    s.map = pinv * t * p;
    return s;
  };
  return {"group_equality",
          "a linear map preserves g and commutes with J iff it preserves the complexified form",
          generate,
          {{"isometry_group_equals_complex_orthogonal_group", [](const Sample& s, const Analysis&) {
              const bool real = preserves_metric_and_J(s.structure, *s.map);
              const bool cx = preserves_complex_form(s.structure, *s.map);
              return Outcome::check(real == cx, "preserves (g,J): " + yes(real) + ", preserves <,>_C: " + yes(cx));
            }}}};
}

inline SuiteDefinition almost_structure_identities() {
  return {"almost_structure_identities",
          "Levi-Civita connection, nabla J and curvature identities valid for every structure",
          mixed_sample,
          {{"levi_civita_metric_compatible",
            [](const Sample& s, const Analysis& a) {
              return Outcome::check(is_metric_compatible(s.structure, a.connection()), "g(nabla_x y, z) + g(y, nabla_x z) != 0");
            }},
           {"levi_civita_torsion_free",
            [](const Sample& s, const Analysis& a) {
              return Outcome::check(is_torsion_free(s.structure, a.connection()), "torsion nonzero");
            }},
           {"nabla_J_is_g_symmetric",
            [](const Sample& s, const Analysis& a) {
              return Outcome::check(nabla_J_is_symmetric(s.structure, a.connection()), "nabla_x J not g-symmetric");
            }},
           {"curvature_algebraic_symmetries", [](const Sample& s, const Analysis& a) {
              const auto& r = a.curvature();
              const std::size_t n = s.structure.dim();
              for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                  for (std::size_t k = 0; k < n; ++k)
                    for (std::size_t l = 0; l < n; ++l) {
                      if (!(r.lowered(i, j, k, l) == -r.lowered(j, i, k, l))) return Outcome::fail("R not skew in (x, y)");
                      if (!(r.lowered(i, j, k, l) == -r.lowered(i, j, l, k))) return Outcome::fail("R not skew in (z, w)");
                      if (!(r.lowered(i, j, k, l) == r.lowered(k, l, i, j))) return Outcome::fail("pair symmetry fails");
                      if (!(r.upper(i, j, k, l) + r.upper(j, k, i, l) + r.upper(k, i, j, l)).is_zero())
                        return Outcome::fail("first Bianchi identity fails");
                    }
              return Outcome::pass();
            }}}};
}

inline SuiteDefinition epsilon_parallel() {
  return {"epsilon_parallel",
          "epsilon-parallel J is parallel; J abelian / bi-invariant read off the connection",
          mixed_sample,
          {{"epsilon_parallel_forces_parallel_J",
            [](const Sample& s, const Analysis& a) {
              const bool plus = is_epsilon_parallel(s.structure, a.connection(), 1);
              const bool minus = is_epsilon_parallel(s.structure, a.connection(), -1);
              if (!plus && !minus) return Outcome::skip();
              return Outcome::check(a.anti_kahler(), "epsilon-parallel but nabla J != 0");
            }},
           {"abelian_J_iff_connection_anticommutes",
            [](const Sample& s, const Analysis& a) {
              if (!a.anti_kahler()) return Outcome::skip();
              const bool ab = is_abelian_J(s.structure.algebra(), s.structure.complex_structure());
              const bool rel = connection_J_relation(s.structure, a.connection(), -1);
              return Outcome::check(ab == rel, "abelian J: " + yes(ab) + ", nabla_{Jx} y = -J nabla_x y: " + yes(rel));
            }},
           {"bi_invariant_J_iff_connection_commutes", [](const Sample& s, const Analysis& a) {
              if (!a.anti_kahler()) return Outcome::skip();
              const bool bi = is_bi_invariant_J(s.structure.algebra(), s.structure.complex_structure());
              const bool rel = connection_J_relation(s.structure, a.connection(), 1);
              return Outcome::check(bi == rel, "bi-invariant J: " + yes(bi) + ", nabla_{Jx} y = J nabla_x y: " + yes(rel));
            }}}};
}

inline SuiteDefinition bi_invariant_anti_kahler() {
  auto generate = [](Rng& rng, std::size_t index, const GeneratorConfig& cfg) {
    const std::size_t n = even_dim(cfg);
    if (n == 6 && index % 3 == 2) return transported(rng, sl2c_scaled(rng.nonzero_rational()), "sl2c-killing");
    const LieAlgebra l = random::complex_algebra(rng, n);
    return transported(rng, random::anti_hermitian_metric(l, standard_complex_structure(n), rng), "bi-invariant-J");
  };
  return {"bi_invariant_anti_kahler",
          "bi-invariant J is parallel for every anti-Hermitian metric; bi-invariant metrics have R = -1/4 ad_[x,y]",
          generate,
          {{"bi_invariant_J_implies_anti_kahler",
            [](const Sample& s, const Analysis& a) {
              if (!is_bi_invariant_J(s.structure.algebra(), s.structure.complex_structure()))
                return Outcome::fail("generator produced a J that is not bi-invariant");
              return Outcome::check(a.anti_kahler(), "bi-invariant J but nabla J != 0");
            }},
           {"bi_invariant_metric_curvature_formula", [](const Sample& s, const Analysis& a) {
              if (!is_bi_invariant_metric(s.structure)) return Outcome::skip();
              return Outcome::check(matches_bi_invariant_curvature(s.structure, a.curvature()),
                                    "R(x, y) z != -1/4 [[x, y], z]");
            }}}};
}

inline SuiteDefinition semisimple_einstein() {
  auto generate = [](Rng& rng, std::size_t index, const GeneratorConfig&) {
    if (index % 2 == 0) {
      const Rational c = rng.nonzero_rational();
      Sample s = transported(rng, sl2c_scaled(c), "sl2c-killing");
      s.params = {c};
      return s;
    }
    const LieAlgebra l = random::complex_algebra(rng, 6);
    return transported(rng, random::anti_hermitian_metric(l, standard_complex_structure(6), rng), "bi-invariant-J");
  };
  return {"semisimple_einstein",
          "Killing metric with bi-invariant J is anti-Kahler-Einstein with nonzero constant, and conversely",
          generate,
          {{"semisimple_killing_metric_is_anti_kahler_einstein",
            [](const Sample& s, const Analysis& a) {
              if (s.params.empty()) return Outcome::skip();
              const EinsteinResult e = einstein(s.structure, a.ricci());
              if (!a.anti_kahler()) return Outcome::fail("not anti-Kahler");
              if (!e.einstein || e.lambda->is_zero()) return Outcome::fail("not Einstein with nonzero constant");
              const Rational expected = Rational(-1, 4) / s.params[0];
              return Outcome::check(*e.lambda == expected,
                                    "lambda " + e.lambda->str() + ", expected " + expected.str() + " for g = c B");
            }},
           {"bi_invariant_einstein_converse", [](const Sample& s, const Analysis& a) {
              const EinsteinResult e = einstein(s.structure, a.ricci());
              if (!a.anti_kahler() || !e.einstein || e.lambda->is_zero() || !is_bi_invariant_metric(s.structure))
                return Outcome::skip();
              const auto& l = s.structure.algebra();
              const auto& j = s.structure.complex_structure();
              if (determinant(killing_form(l)).is_zero()) return Outcome::fail("Killing form degenerate");
              return Outcome::check(is_anti_abelian_J(l, j) && is_bi_invariant_J(l, j), "J not anti-abelian and bi-invariant");
            }}}};
}

inline SuiteDefinition abelian_implies_flat() {
  auto generate = [](Rng& rng, std::size_t index, const GeneratorConfig& cfg) {
    const std::size_t n = even_dim(cfg);
    const auto base = catalog::n7();
    switch (index % 3) {
      case 0:
        if (auto ak = random::anti_kahler_metric(base.algebra(), base.complex_structure(), rng))
          return transported(rng, *ak, "n7-anti-kahler-metric");
        return transported(rng, base, "n7");
      case 1:
        return transported(rng, base, "n7");
      default:
        return transported(rng, random::anti_hermitian_metric(LieAlgebra::abelian(n), random::complex_structure(rng, n), rng),
                           "abelian");
    }
  };
  auto applies = [](const Sample& s, const Analysis& a) {
    return a.anti_kahler() && is_abelian_J(s.structure.algebra(), s.structure.complex_structure());
  };
  auto prop = [applies](std::string id, std::function<bool(const Sample&, const Analysis&)> f, std::string why) {
    return Proposition{std::move(id), [=](const Sample& s, const Analysis& a) {
                         if (!applies(s, a)) return Outcome::skip();
                         return Outcome::check(f(s, a), why);
                       }};
  };
  return {"abelian_implies_flat",
          "anti-Kahler with abelian J: connection formula, commuting derivatives, flatness, unimodularity",
          generate,
          {prop("abelian_J_connection_formula",
                [](const Sample& s, const Analysis& a) { return matches_abelian_connection_formula(s.structure, a.connection()); },
                "nabla_x y != 1/2 ([x, y] - J[x, Jy])"),
           prop("abelian_J_connection_anticommutes_with_J",
                [](const Sample& s, const Analysis& a) { return connection_J_relation(s.structure, a.connection(), -1); },
                "nabla_{Jx} y != -J nabla_x y"),
           prop("abelian_J_commuting_derivatives",
                [](const Sample&, const Analysis& a) { return covariant_derivatives_commute(a.connection()); },
                "nabla_x nabla_y != nabla_y nabla_x"),
           prop("abelian_J_flat", [](const Sample&, const Analysis& a) { return a.curvature().is_zero(); }, "R != 0"),
           prop("abelian_J_unimodular", [](const Sample& s, const Analysis&) { return is_unimodular(s.structure.algebra()); },
                "not unimodular"),
           prop("abelian_J_killing_anti_invariant",
                [](const Sample& s, const Analysis&) { return killing_is_J_anti_invariant(s.structure); },
                "B(Jx, Jy) != -B(x, y)"),
           prop("abelian_J_derived_bracket_identity",
                [](const Sample& s, const Analysis&) { return derived_bracket_commutes_with_J(s.structure); },
                "[J[x, y], z] != J[[x, y], z]"),
           prop("abelian_J_bi_invariant_metric_forces_abelian",
                [](const Sample& s, const Analysis&) {
                  return !is_bi_invariant_metric(s.structure) || s.structure.algebra().is_abelian();
                },
                "bi-invariant metric on a non-abelian algebra")}};
}

inline SuiteDefinition theta_iff_antikahler() {
  return {"theta_iff_antikahler",
          "anti-Kahler iff theta is skew and pure; in dimension 4 iff theta vanishes",
          mixed_sample,
          {{"theta_skew_pure_iff_anti_kahler",
            [](const Sample& s, const Analysis& a) {
              const bool via = anti_kahler_via_theta(s.structure);
              return Outcome::check(via == a.anti_kahler(), "theta criterion " + yes(via) + ", nabla J = 0 " + yes(a.anti_kahler()));
            }},
           {"theta_vanishes_in_dim4_iff_anti_kahler",
            [](const Sample& s, const Analysis& a) {
              if (s.structure.dim() != 4) return Outcome::skip();
              const bool zero = theta_bracket_form(s.structure).is_zero();
              return Outcome::check(zero == a.anti_kahler(), "theta = 0 " + yes(zero) + ", nabla J = 0 " + yes(a.anti_kahler()));
            }},
           {"theta_forms_proportional", [](const Sample& s, const Analysis& a) {
              const ThetaRatio r = theta_ratio(theta_connection_form(s.structure, a.connection()), theta_bracket_form(s.structure));
              return Outcome::check(r.proportional, "connection and bracket forms of theta are not proportional");
            }}}};
}

inline SuiteDefinition twin_and_purity() {
  return {"twin_and_purity",
          "twin metric; purity and J-anti-invariance of anti-Kahler curvature",
          mixed_sample,
          {{"twin_metric_is_anti_hermitian",
            [](const Sample& s, const Analysis&) {
              const AntiHermitianStructure t = twin_metric(s.structure);
              const AntiHermitianStructure tt = twin_metric(t);
              return Outcome::check(tt.metric() == -s.structure.metric(), "twin of twin != -g");
            }},
           {"twin_metric_shares_connection",
            [](const Sample& s, const Analysis& a) {
              if (!a.anti_kahler()) return Outcome::skip();
              return Outcome::check(levi_civita(twin_metric(s.structure)) == a.connection(), "twin connection differs");
            }},
           {"anti_kahler_curvature_is_pure",
            [](const Sample& s, const Analysis& a) {
              if (!a.anti_kahler()) return Outcome::skip();
              return Outcome::check(curvature_is_pure(s.structure, a.curvature()), "curvature not pure");
            }},
           {"anti_kahler_curvature_J_anti_invariant", [](const Sample& s, const Analysis& a) {
              if (!a.anti_kahler()) return Outcome::skip();
              return Outcome::check(curvature_is_J_anti_invariant(s.structure, a.curvature()), "R(Jx, Jy) != -R(x, y)");
            }}}};
}

// ---- dimension 4 ----

inline std::array<Rational, 4> random_t(Rng& rng) {
  std::array<Rational, 4> t{rng.rational(), rng.rational(), rng.rational(), rng.rational()};
  if (t[0].is_zero() && t[1].is_zero() && t[2].is_zero() && t[3].is_zero()) t[0] = Rational(1);
  return t;
}

inline std::pair<Rational, Rational> random_ab(Rng& rng) {
  Rational a = rng.rational(), b = rng.rational();
  if (a.is_zero() && b.is_zero()) b = Rational(1);
  return {a, b};
}

inline std::array<Rational, 4> to_t(const std::vector<Rational>& v) { return {v[0], v[1], v[2], v[3]}; }

inline SuiteDefinition dim4_classification() {
  auto generate = [](Rng& rng, std::size_t index, const GeneratorConfig&) {
    switch (index % 3) {
      case 0: {
        const auto [a, b] = random_ab(rng);
        const int eps = rng.coin() ? 1 : -1;
        Sample s = transported(rng, make_family_case1(a, b, eps), "case1-family");
        s.params = {a, b, Rational(eps)};
        return s;
      }
      case 1: {
        const auto t = random_t(rng);
        Sample s = transported(rng, make_family_case2(t), "case2-family");
        s.params = {t[0], t[1], t[2], t[3]};
        return s;
      }
      default:
        return transported(rng, random::anti_hermitian_metric(LieAlgebra::abelian(4), random::complex_structure(rng, 4), rng),
                           "abelian");
    }
  };
  return {"dim4_classification",
          "every dimension-4 anti-Kahler algebra is abelian, r_{-1,-1} or aff(C)_R",
          generate,
          {{"classification_matches_discriminator",
            [](const Sample& s, const Analysis&) {
              const ClassificationReport r = classify(s.structure);
              const Dim4Class expected = s.origin == "case1-family"   ? Dim4Class::r_minus1_minus1
                                         : s.origin == "case2-family" ? Dim4Class::aff_C
                                                                      : Dim4Class::abelian;
              if (r.verdict != expected) return Outcome::fail("verdict " + to_string(r.verdict));
              if (!r.witness_verified) return Outcome::fail("witness does not verify");
              return Outcome::check(r.discriminator_agrees, "derived algebra dimension disagrees with verdict");
            }},
           {"case1_family_identities",
            [](const Sample& s, const Analysis& a) {
              if (s.origin != "case1-family") return Outcome::skip();
              const auto fam = make_family_case1(s.params[0], s.params[1], s.params[2].sign());
              if (!theta_bracket_form(fam).is_zero() || !is_anti_kahler(fam)) return Outcome::fail("family not anti-Kahler");
              if (!a.anti_kahler()) return Outcome::fail("transported structure not anti-Kahler");
              const ClassificationReport r = classify(s.structure);
              if (!r.identities_hold) return Outcome::fail("theta/abcd/Jacobi identities fail in normalized basis");
              if (!r.case_relations_hold || !r.family_match) return Outcome::fail("case-1 relations fail");
              return Outcome::check(r.rank_A == 3, "rank A = " + std::to_string(r.rank_A));
            }},
           {"case2_family_identities",
            [](const Sample& s, const Analysis&) {
              if (s.origin != "case2-family") return Outcome::skip();
              const auto t = to_t(s.params);
              const auto fam = make_family_case2(t);
              using namespace dim4;
              if (!is_bi_invariant_J(fam.algebra(), fam.complex_structure())) return Outcome::fail("J not bi-invariant");
              if (!is_zero(fam.algebra().bracket_basis(X, JX)) || !is_zero(fam.algebra().bracket_basis(Y, JY)))
                return Outcome::fail("[X, JX] or [Y, JY] nonzero");
              const ClassificationReport r = classify(s.structure);
              if (!r.identities_hold || !r.case_relations_hold || !r.family_match) return Outcome::fail("case-2 relations fail");
              if (r.rank_A != 0) return Outcome::fail("A != 0");
              return Outcome::check(r.zeta && *r.zeta == zeta_of(t), "normalized zeta differs from the family zeta");
            }},
           {"printed_isomorphisms_verify", [](const Sample& s, const Analysis&) {
              if (s.origin == "case1-family") {
                const Rational &a = s.params[0], &b = s.params[1];
                const int e = s.params[2].sign();
                const auto phi = printed_phi_case1(a, b, e);
                if (!(phi * printed_phi_case1_inverse(a, b, e) == RationalMatrix::identity(4)))
                  return Outcome::fail("printed inverse is wrong");
                return Outcome::check(verify_isomorphism(phi, make_family_case1(a, b, e).algebra(), r_minus1_minus1()),
                                      "printed phi is not an isomorphism onto r_{-1,-1}");
              }
              if (s.origin == "case2-family") {
                const auto t = to_t(s.params);
                const auto phi = printed_phi_case2(t);
                const Rational n2 = t[0] * t[0] + t[1] * t[1] + t[2] * t[2] + t[3] * t[3];
                if (!(invert(phi) == (Rational(1) / n2) * phi.transpose())) return Outcome::fail("phi^{-1} != phi^t / |t|^2");
                return Outcome::check(verify_isomorphism(phi, make_family_case2(t).algebra(), aff_C_real()),
                                      "printed phi is not an isomorphism onto aff(C)_R");
              }
              return Outcome::skip();
            }}}};
}

inline SuiteDefinition dim4_moduli() {
  auto generate = [](Rng& rng, std::size_t index, const GeneratorConfig&) {
    if (index % 4 == 0) {
      const auto [a, b] = random_ab(rng);
      const int eps = rng.coin() ? 1 : -1;
      Sample s{make_family_case1(a, b, eps), "case1-pair"};
      s.params = {a, b, Rational(eps)};
      return s;
    }
    std::array<Rational, 4> t = random_t(rng), tp;
    std::string origin;
    if (index % 4 == 1) {
      // same zeta: apply a complex orthogonal map to z
      const ComplexMatrix q = random::complex_orthogonal(rng, 2);
      const GaussianRational z1(t[0], t[1]), z2(t[2], t[3]);
      const GaussianRational w1 = q(0, 0) * z1 + q(0, 1) * z2, w2 = q(1, 0) * z1 + q(1, 1) * z2;
      tp = {w1.re(), w1.im(), w2.re(), w2.im()};
      origin = "case2-same-zeta";
    } else if (index % 4 == 2) {
      // zeta = 0 representatives z (1, +-i)
      const GaussianRational z(rng.nonzero_rational(), rng.rational()), w(rng.nonzero_rational(), rng.rational());
      const GaussianRational si(Rational(0), Rational(rng.coin() ? 1 : -1)), sj(Rational(0), Rational(rng.coin() ? 1 : -1));
      const GaussianRational z2 = z * si, w2 = w * sj;
      t = {z.re(), z.im(), z2.re(), z2.im()};
      tp = {w.re(), w.im(), w2.re(), w2.im()};
      origin = "case2-zeta-zero";
    } else {
      tp = random_t(rng);
      origin = "case2-random-pair";
    }
    Sample s{make_family_case2(t), origin};
    s.params = {t[0], t[1], t[2], t[3]};
    s.params2 = {tp[0], tp[1], tp[2], tp[3]};
    return s;
  };
  return {"dim4_moduli",
          "r_{-1,-1} carries one structure up to equivalence; zeta classifies aff(C)_R structures",
          generate,
          {{"case1_single_equivalence_class",
            [](const Sample& s, const Analysis&) {
              if (s.origin != "case1-pair") return Outcome::skip();
              const int e = s.params[2].sign();
              const auto w = equivalence_witness_case1(s.params[0], s.params[1], e);
              const auto src = make_family_case1(Rational(1), Rational(0), 1);
              return Outcome::check(verify_equivalence(w.matrix, src, s.structure) && preserves_complex_form(src, w.matrix),
                                    "witness from " + w.source + " does not verify");
            }},
           {"case2_zeta_complete_invariant", [](const Sample& s, const Analysis&) {
              if (s.origin == "case1-pair") return Outcome::skip();
              const auto t = to_t(s.params), tp = to_t(s.params2);
              const bool same = zeta_of(t) == zeta_of(tp);
              const auto w = equivalent_case2(t, tp);
              if (same && !w) return Outcome::fail("equal zeta but no verified witness");
              if (!same && w) return Outcome::fail("different zeta but a witness was returned");
              if (w && !verify_equivalence(*w, make_family_case2(t), make_family_case2(tp)))
                return Outcome::fail("witness does not verify");
              return Outcome::pass();
            }}}};
}

inline SuiteDefinition dim4_curvature() {
  auto generate = [](Rng& rng, std::size_t index, const GeneratorConfig&) {
    switch (index % 4) {
      case 0: {
        const auto [a, b] = random_ab(rng);
        const int eps = rng.coin() ? 1 : -1;
        Sample s{make_family_case1(a, b, eps), "case1-family"};
        s.params = {a, b, Rational(eps)};
        return s;
      }
      case 1: {
        const Rational p = rng.nonzero_rational(), q = rng.rational();
        Sample s{make_family_case2(p, q, -q, p), "case2-zeta-zero"};
        s.params = {p, q, -q, p};
        return s;
      }
      case 2: {
        const Rational p = rng.nonzero_rational(), q = rng.rational();
        Sample s{make_family_case2(p, Rational(0), q, Rational(0)), "case2-real-zeta"};
        s.params = {p, Rational(0), q, Rational(0)};
        return s;
      }
      default: {
        const auto t = random_t(rng);
        Sample s{make_family_case2(t), "case2-family"};
        s.params = {t[0], t[1], t[2], t[3]};
        return s;
      }
    }
  };
  return {"dim4_curvature",
          "case-1 structures are flat; case-2 curvature is driven by zeta",
          generate,
          {{"case1_family_flat",
            [](const Sample& s, const Analysis& a) {
              if (s.origin != "case1-family") return Outcome::skip();
              using namespace dim4;
              const Rational &pa = s.params[0], &pb = s.params[1], e = s.params[2];
              const auto& g = a.connection().christoffel();
              const Rational z;
              if (!(g.fiber(X, X) == Vector{z, z, z, -pa}) || !(g.fiber(X, Y) == Vector{z, pa, z, z}) ||
                  !(g.fiber(Y, Y) == Vector{z, -e * pb, z, z}))
                return Outcome::fail("connection coefficients differ from the closed form");
              return Outcome::check(a.curvature().is_zero() && covariant_derivatives_commute(a.connection()), "not flat");
            }},
           {"case2_closed_form_curvature", [](const Sample& s, const Analysis& a) {
              if (s.origin == "case1-family") return Outcome::skip();
              const auto t = to_t(s.params);
              using namespace dim4;
              const auto& g = a.connection().christoffel();
              const Rational z;
              if (!(g.fiber(X, X) == Vector{z, z, -t[0], -t[1]}) || !(g.fiber(X, Y) == Vector{t[0], t[1], z, z}) ||
                  !(g.fiber(Y, Y) == Vector{t[2], t[3], z, z}))
                return Outcome::fail("connection coefficients differ from the closed form");
              if (!closed_form_agrees_with_engine(t)) return Outcome::fail("closed form disagrees with the engine");
              const GaussianRational zeta = zeta_of(t);
              const EinsteinResult e = einstein(s.structure, a.ricci());
              const bool flat = a.curvature().is_zero();
              if (flat != zeta.is_zero()) return Outcome::fail("flat != (zeta = 0)");
              if (a.ricci().form.is_zero() != flat) return Outcome::fail("Ricci-flat != flat");
              if (e.einstein != zeta.im().is_zero()) return Outcome::fail("Einstein != (Im zeta = 0)");
              return Outcome::check(!e.einstein || *e.lambda == Rational(-2) * zeta.re(), "lambda != -2 zeta");
            }}}};
}

}  // namespace suites

/// All suites in a fixed order.
inline const std::vector<SuiteDefinition>& suite_registry() {
  static const std::vector<SuiteDefinition> registry = {
      suites::neutral_signature(),   suites::group_equality(),     suites::almost_structure_identities(),
      suites::epsilon_parallel(),    suites::bi_invariant_anti_kahler(), suites::semisimple_einstein(),
      suites::abelian_implies_flat(), suites::theta_iff_antikahler(), suites::twin_and_purity(),
      suites::dim4_classification(), suites::dim4_moduli(),        suites::dim4_curvature()};
  return registry;
}

inline std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& s : suite_registry()) out.push_back(s.name);
  return out;
}

inline const SuiteDefinition& find_suite(const std::string& name) {
  for (const auto& s : suite_registry())
    if (s.name == name) return s;
  throw UnknownSuite("unknown suite '" + name + "'");
}

/// Samples are generated from sub_seed(master_seed, index) and evaluated in
/// index order; the report depends only on the config.
inline SuiteReport run_suite(const SuiteDefinition& def, const GeneratorConfig& config) {
  SuiteReport report{def.name, config, {}, {}};
  for (const auto& p : def.propositions) report.results.push_back({p.id});
  for (std::size_t i = 0; i < config.samples; ++i) {
    Rng rng(sub_seed(config.master_seed, i), config.coefficient_bound);
    const Sample sample = def.generate(rng, i, config);
    ++report.origins[sample.origin];
    const Analysis analysis(sample.structure);
    for (std::size_t k = 0; k < def.propositions.size(); ++k) {
      auto& res = report.results[k];
      Outcome out;
      try {
        out = def.propositions[k].check(sample, analysis);
      } catch (const std::exception& e) {
        out = Outcome::fail(std::string("exception: ") + e.what());
      }
      if (out.status == Outcome::Status::skip) {
        ++res.skipped;
        continue;
      }
      ++res.checked;
      if (out.status == Outcome::Status::fail) {
        ++res.failed;
        if (!res.counterexample) {
          std::string text = print_structure(sample.structure);
          if (sample.map) {
            std::ostringstream m;
            m << "# map\n" << *sample.map;
            text += m.str();
          }
          res.counterexample = Counterexample{i, sample.origin, out.detail, text};
        }
      }
    }
  }
  return report;
}

inline SuiteReport run_suite(const std::string& name, const GeneratorConfig& config) {
  return run_suite(find_suite(name), config);
}

}  // namespace akahler
