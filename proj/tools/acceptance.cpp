// Acceptance run: one PASS/FAIL line per criterion. All checks are exact, so
// every tolerance is zero disagreements.

#include <functional>
#include <iostream>
#include <sstream>

#include "akahler/cli.hpp"

using namespace akahler;

namespace {

constexpr std::size_t kAllowedDisagreements = 0;
constexpr std::size_t kThetaSamplesDim4 = 100;
constexpr std::size_t kThetaSamplesDim6 = 50;
constexpr std::size_t kBiInvariantMetrics = 20;
constexpr std::size_t kFamilySamples = 20;
constexpr std::size_t kModuliPairs = 30;
constexpr std::size_t kRandomMaps = 50;
const Rational kSl2cLambda(1, 4);

struct Verdict {
  bool pass;
  std::string detail;
};

using Criterion = std::function<Verdict()>;

Vector e(std::size_t n, std::size_t k) { return basis_vector(n, k); }

std::array<Rational, 4> random_t(Rng& rng) {
  std::array<Rational, 4> t{rng.rational(), rng.rational(), rng.rational(), rng.rational()};
  if (t[0].is_zero() && t[1].is_zero() && t[2].is_zero() && t[3].is_zero()) t[0] = Rational(1);
  return t;
}

Verdict n7_example() {
  const auto s = catalog::n7();
  const auto c = levi_civita(s);
  const Rational h(1, 2), m(-1);
  const std::vector<std::tuple<std::size_t, std::size_t, Vector>> printed{
      {0, 0, -h * e(6, 2)}, {0, 1, h * e(6, 3)},  {0, 2, e(6, 4)},       {0, 3, e(6, 5)},
      {1, 0, -h * e(6, 3)}, {1, 1, -h * e(6, 2)}, {1, 2, e(6, 5)}, {1, 3, m * e(6, 4)}};
  std::size_t matched = 0;
  for (const auto& [i, j, v] : printed) matched += c.apply(e(6, i), e(6, j)) == v;
  const bool parallel = nabla_J(s, c).is_zero();
  const bool flat = curvature(s, c).is_zero();
  const bool uni = is_unimodular(s.algebra());
  const bool derived = derived_bracket_commutes_with_J(s);
  std::ostringstream d;
  d << std::boolalpha;
  d << matched << "/8 printed coefficients, nabla J = 0 " << parallel << ", R = 0 " << flat << ", unimodular " << uni
    << ", [J[x,y],z] = J[[x,y],z] " << derived;
  return {matched == 8 && parallel && flat && uni && derived, d.str()};
}

Verdict theta_equivalence() {
  std::size_t disagreements = 0, ak = 0, total = 0;
  for (const std::size_t dim : {4u, 6u}) {
    const std::size_t samples = dim == 4 ? kThetaSamplesDim4 : kThetaSamplesDim6;
    for (std::size_t i = 0; i < samples; ++i) {
      Rng rng(sub_seed(2024 + dim, i), 4);
      const Sample s = suites::mixed(rng, dim);
      const bool a = is_anti_kahler(s.structure), b = anti_kahler_via_theta(s.structure);
      disagreements += a != b;
      ak += a;
      ++total;
    }
  }
  std::ostringstream d;
  d << std::boolalpha;
  d << total << " structures (" << kThetaSamplesDim4 << " dim 4, " << kThetaSamplesDim6 << " dim 6), " << ak
    << " anti-Kahler, " << total - ak << " not, disagreements " << disagreements;
  return {disagreements <= kAllowedDisagreements && ak > 0 && ak < total, d.str()};
}

Verdict bi_invariant_j() {
  std::size_t ok_aff = 0, ok_sl = 0;
  const auto aff = catalog::get("affC_std").structure;
  const auto sl = catalog::sl2c_killing();
  for (std::uint64_t seed = 1; seed <= kBiInvariantMetrics; ++seed) {
    ok_aff += is_anti_kahler(random_anti_hermitian_metric(aff.algebra(), aff.complex_structure(), seed, 4));
    ok_sl += is_anti_kahler(random_anti_hermitian_metric(sl.algebra(), sl.complex_structure(), seed, 4));
  }
  std::ostringstream d;
  d << std::boolalpha;
  d << "aff(C)_R " << ok_aff << "/" << kBiInvariantMetrics << ", sl(2,C)_R " << ok_sl << "/" << kBiInvariantMetrics;
  return {ok_aff == kBiInvariantMetrics && ok_sl == kBiInvariantMetrics, d.str()};
}

Verdict families() {
  Rng rng(606, 4);
  std::size_t ok1 = 0, ok2 = 0;
  for (std::size_t k = 0; k < kFamilySamples; ++k) {
    Rational a = rng.rational(), b = rng.rational();
    if (a.is_zero() && b.is_zero()) a = Rational(1);
    const int eps = rng.coin() ? 1 : -1;
    const auto s = make_family_case1(a, b, eps);
    const auto r = classify(s);
    ok1 += jacobi_residual(s.algebra()).is_zero() && theta_bracket_form(s).is_zero() && is_anti_kahler(s) &&
           is_flat(s) && r.verdict == Dim4Class::r_minus1_minus1 && r.witness_verified &&
           verify_isomorphism(printed_phi_case1(a, b, eps), s.algebra(), r_minus1_minus1());
  }
  for (std::size_t k = 0; k < kFamilySamples; ++k) {
    const auto t = random_t(rng);
    const auto s = make_family_case2(t);
    const auto r = classify(s);
    const auto phi = printed_phi_case2(t);
    const Rational n2 = t[0] * t[0] + t[1] * t[1] + t[2] * t[2] + t[3] * t[3];
    ok2 += r.verdict == Dim4Class::aff_C && r.witness && *r.witness == phi && r.witness_verified &&
           verify_isomorphism(phi, s.algebra(), aff_C_real()) && invert(phi) == (Rational(1) / n2) * phi.transpose();
  }
  std::ostringstream d;
  d << std::boolalpha;
  d << "case 1: " << ok1 << "/" << kFamilySamples << ", case 2: " << ok2 << "/" << kFamilySamples;
  return {ok1 == kFamilySamples && ok2 == kFamilySamples, d.str()};
}

Verdict curvature_case2() {
  Rng rng(707, 4);
  std::size_t ok = 0, flat_seen = 0, einstein_seen = 0;
  for (std::size_t k = 0; k < kFamilySamples; ++k) {
    std::array<Rational, 4> t;
    if (k % 4 == 0) {
      const Rational p = rng.nonzero_rational(), q = rng.rational();
      t = {p, q, -q, p};  // zeta = 0
    } else if (k % 4 == 1) {
      t = {rng.nonzero_rational(), Rational(0), rng.rational(), Rational(0)};  // real zeta
    } else {
      t = random_t(rng);
    }
    const auto s = make_family_case2(t);
    const GaussianRational zeta = zeta_of(t);
    const auto c = levi_civita(s);
    const auto r = curvature(s, c);
    const auto ric = ricci(s, r);
    const auto ein = einstein(s, ric);
    const bool flat = r.is_zero();
    flat_seen += flat;
    einstein_seen += ein.einstein;
    ok += closed_form_agrees_with_engine(t) && flat == zeta.is_zero() && ein.einstein == zeta.im().is_zero() &&
          (!ein.einstein || *ein.lambda == Rational(-2) * zeta.re()) && ric.form.is_zero() == flat;
  }
  const auto unit = make_family_case2(Rational(1), Rational(0), Rational(0), Rational(0));
  const bool ric_unit = ricci(unit, levi_civita(unit)).operator_ == Rational(-2) * RationalMatrix::identity(4);
  const bool flat_null = is_flat(make_family_case2(Rational(1), Rational(0), Rational(0), Rational(1)));
  std::ostringstream d;
  d << std::boolalpha;
  d << ok << "/" << kFamilySamples << " samples (" << flat_seen << " flat, " << einstein_seen
    << " Einstein), Ric(1,0,0,0) = -2I " << ric_unit << ", R(1,0,0,1) = 0 " << flat_null;
  return {ok == kFamilySamples && ric_unit && flat_null && flat_seen > 0, d.str()};
}

Verdict moduli() {
  Rng rng(808, 4);
  std::size_t ok = 0, same = 0;
  for (std::size_t k = 0; k < kModuliPairs; ++k) {
    const auto t = random_t(rng);
    std::array<Rational, 4> tp;
    if (k % 2 == 0) {
      const ComplexMatrix q = random::complex_orthogonal(rng, 2);
      const GaussianRational z1(t[0], t[1]), z2(t[2], t[3]);
      const GaussianRational w1 = q(0, 0) * z1 + q(0, 1) * z2, w2 = q(1, 0) * z1 + q(1, 1) * z2;
      tp = {w1.re(), w1.im(), w2.re(), w2.im()};
    } else {
      tp = random_t(rng);
    }
    const bool equal = zeta_of(t) == zeta_of(tp);
    same += equal;
    const auto w = equivalent_case2(t, tp);
    ok += equal ? (w && verify_equivalence(*w, make_family_case2(t), make_family_case2(tp))) : !w;
  }
  // five distinct zeta = 0 representatives, all pairs
  const std::vector<std::array<Rational, 4>> null_reps{
      {Rational(1), Rational(0), Rational(0), Rational(1)},
      {Rational(2), Rational(0), Rational(0), Rational(-2)},
      {Rational(0), Rational(1), Rational(-1), Rational(0)},
      {Rational(3), Rational(1), Rational(-1), Rational(3)},
      {Rational(1, 2), Rational(-2), Rational(-2), Rational(-1, 2)}};
  std::size_t null_ok = 0, null_pairs = 0;
  for (const auto& a : null_reps)
    for (const auto& b : null_reps) {
      ++null_pairs;
      const auto w = equivalent_case2(a, b);
      null_ok += zeta_of(a).is_zero() && w && verify_equivalence(*w, make_family_case2(a), make_family_case2(b));
    }
  std::ostringstream d;
  d << std::boolalpha;
  d << ok << "/" << kModuliPairs << " pairs (" << same << " with equal zeta), zeta = 0 representatives " << null_ok << "/"
    << null_pairs << " ordered pairs equivalent";
  return {ok == kModuliPairs && null_ok == null_pairs && same > 0 && same < kModuliPairs, d.str()};
}

Verdict abelian_j() {
  const auto n7 = catalog::n7();
  std::vector<AntiHermitianStructure> cases{n7};
  Rng rng(909, 3);
  for (int k = 0; k < 6; ++k)
    if (auto s = random::anti_kahler_metric(n7.algebra(), n7.complex_structure(), rng))
      cases.push_back(k % 2 ? *s : s->transport(random::invertible(rng, 6)));
  std::size_t ok = 0;
  for (const auto& s : cases) {
    const auto c = levi_civita(s);
    ok += is_anti_kahler(s, c) && connection_J_relation(s, c, -1) && matches_abelian_connection_formula(s, c) &&
          covariant_derivatives_commute(c) && killing_is_J_anti_invariant(s);
  }
  std::ostringstream d;
  d << std::boolalpha;
  d << ok << "/" << cases.size() << " structures (n7 and " << cases.size() - 1 << " anti-Kahler variants)";
  return {ok == cases.size() && cases.size() > 1, d.str()};
}

Verdict sl2c() {
  const auto s = catalog::sl2c_killing();
  const auto c = levi_civita(s);
  const auto r = curvature(s, c);
  const auto e = einstein(s, ricci(s, r));
  const bool ak = is_anti_kahler(s, c);
  const bool formula = matches_bi_invariant_curvature(s, r);
  const bool pure = curvature_is_pure(s, r);
  const bool lambda_ok = e.einstein && e.lambda && *e.lambda == kSl2cLambda;
  std::ostringstream d;
  d << std::boolalpha;
  d << "anti-Kahler " << ak << ", Einstein " << e.einstein << " with lambda "
    << (e.lambda ? e.lambda->str() : std::string("none")) << " (required " << kSl2cLambda
    << "), R = -1/4 ad_[x,y] " << formula << ", pure " << pure;
  return {ak && lambda_ok && formula && pure, d.str()};
}

Verdict group_equality() {
  std::size_t disagreements = 0, checked = 0;
  const SuiteDefinition& def = find_suite("group_equality");
  for (const std::size_t dim : {4u, 6u})
    for (std::size_t i = 0; i < kRandomMaps / 2; ++i) {
      Rng rng(sub_seed(1001, i), 4);
      const Sample s = def.generate(rng, i, {1001, kRandomMaps, dim, 4});
      disagreements += preserves_metric_and_J(s.structure, *s.map) != preserves_complex_form(s.structure, *s.map);
      ++checked;
    }
  // witnesses produced by the library, on the standard dim-4 structure
  const AntiHermitianStructure std4{LieAlgebra::abelian(4), dim4::standard_metric(), dim4::standard_J()};
  std::vector<RationalMatrix> witnesses{printed_phi_o(), printed_phi_case1(Rational(2), Rational(1), -1),
                                        printed_phi_case2({Rational(1), Rational(2), Rational(3), Rational(4)})};
  for (const auto& [a, b, eps] : {std::tuple{1, 0, 1}, {2, 1, -1}, {0, 3, 1}, {-1, 2, -1}})
    witnesses.push_back(equivalence_witness_case1(Rational(a), Rational(b), eps).matrix);
  const std::array<Rational, 4> null1{Rational(1), Rational(0), Rational(0), Rational(1)},
      null2{Rational(1), Rational(0), Rational(0), Rational(-1)};
  witnesses.push_back(*equivalent_case2(null1, null2));
  for (const auto& name : catalog::list()) {
    const auto entry = catalog::get(name);
    if (entry.structure.dim() != 4) continue;
    if (auto r = classify(entry.structure); r.witness) witnesses.push_back(*r.witness);
  }
  for (const auto& w : witnesses) {
    disagreements += preserves_metric_and_J(std4, w) != preserves_complex_form(std4, w);
    ++checked;
  }
  std::ostringstream d;
  d << std::boolalpha;
  d << checked << " maps (" << kRandomMaps << " random, " << witnesses.size() << " library witnesses), disagreements "
    << disagreements;
  return {disagreements <= kAllowedDisagreements, d.str()};
}

Verdict cli_contract() {
  auto call = [](std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return std::tuple{code, out.str(), err.str()};
  };
  std::size_t round_trips = 0;
  for (const auto& name : catalog::list()) {
    const auto [code, text, err] = call({"catalog", "export", name});
    const StructureFile f = parse_structure(text);
    round_trips += code == 0 && f.structure && print_structure(*f.structure) == text;
  }
  auto parse_error = [](const std::string& text) -> std::string {
    try {
      parse_structure(text);
    } catch (const Error& e) {
      return e.kind();
    }
    return "none";
  };
  const std::string standard_j = "[complex_structure]\nrow = 0 -1 0 0\nrow = 1 0 0 0\nrow = 0 0 0 -1\nrow = 0 0 1 0\n";
  const std::string anti = "[algebra]\ndim = 4\nbracket e1 e1 = 1 e2\n";
  const std::string iso = "[algebra]\ndim = 4\n[metric]\nrow = 1 0 0 0\nrow = 0 1 0 0\nrow = 0 0 1 0\nrow = 0 0 0 1\n" + standard_j;
  const std::vector<std::pair<std::string, std::string>> cases{
      {parse_error(anti), "AntisymmetryViolation"},
      {parse_error(iso), "NotAntiIsometry"},
      {parse_error("[algebra]\ndim = 3\nbracket e1 e2 = 1 e3\nbracket e1 e3 = 1 e1\n"), "JacobiViolation"},
      {parse_error("[algebra]\ndim = 2\n[metric]\nrow = 0 0\nrow = 0 0\n[complex_structure]\nrow = 0 -1\nrow = 1 0\n"),
       "SingularMetric"},
      {parse_error("[algebra]\ndim = 2\n[metric]\nrow = 1 0\nrow = 0 -1\n[complex_structure]\nrow = 1 0\nrow = 0 1\n"),
       "BadJSquare"},
      {parse_error("[algebra]\ndim = 3\nbracket e1 e2 = 1 e3\nbracket e1 e2 = 1 e3\n"), "SyntaxError"}};
  std::size_t classes = 0;
  for (const auto& [got, want] : cases) classes += got == want;
  // exit codes through the command layer
  const std::string dir = "/tmp/";
  auto write = [&](const std::string& name, const std::string& text) {
    const std::string path = dir + "akahler_acceptance_" + name;
    std::ofstream(path) << text;
    return path;
  };
  const std::string heis = "[algebra]\ndim = 4\nbracket e1 e2 = 1 e3\n[metric]\nrow = 1 0 0 0\nrow = 0 -1 0 0\n"
                           "row = 0 0 1 0\nrow = 0 0 0 -1\n" + standard_j;
  std::size_t codes = 0;
  codes += std::get<0>(call({"check", write("anti.txt", anti)})) == 2;
  codes += std::get<0>(call({"check", write("iso.txt", iso)})) == 2;
  codes += std::get<0>(call({"classify", write("heis.txt", heis)})) == 1;
  codes += std::get<0>(call({"verify", "no_such_suite"})) == 2;
  codes += std::get<0>(call({"catalog", "show", "no_such_entry"})) == 2;
  codes += std::get<0>(call({"check", write("n7.txt", std::get<1>(call({"catalog", "export", "n7_J-1"})))})) == 0;
  const std::size_t n = catalog::list().size();
  std::ostringstream d;
  d << std::boolalpha;
  d << "round-trips " << round_trips << "/" << n << ", error classes " << classes << "/" << cases.size()
    << ", exit codes " << codes << "/6";
  return {round_trips == n && classes == cases.size() && codes == 6, d.str()};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, Criterion>> criteria{
      {"n7 worked example", n7_example},
      {"theta criterion equals parallel J", theta_equivalence},
      {"bi-invariant J is anti-Kahler for random metrics", bi_invariant_j},
      {"dimension-4 families and printed isomorphisms", families},
      {"aff(C)_R curvature closed form", curvature_case2},
      {"zeta classifies aff(C)_R structures", moduli},
      {"abelian J consequences", abelian_j},
      {"sl(2,C)_R Killing metric", sl2c},
      {"isometry group equals complex orthogonal group", group_equality},
      {"CLI round-trip and error contract", cli_contract}};
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& ex) {
      v = {false, std::string("exception: ") + ex.what()};
    }
    failures += !v.pass;
    std::cout << (v.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << " (" << criteria[i].first << "): " << v.detail
              << "\n";
  }
  std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria pass\n";
  return failures ? 1 : 0;
}
