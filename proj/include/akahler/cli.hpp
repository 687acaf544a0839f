#pragma once

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "akahler/catalog.hpp"
#include "akahler/structure_file.hpp"
#include "akahler/verifier.hpp"

namespace akahler::cli {

enum ExitCode : int { ok = 0, property_failure = 1, input_error = 2 };

using json = nlohmann::ordered_json;

enum class Format { human, machine };

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

/// Ladder values are "true", "false", "none" or a rational.
inline json ladder_value(const std::string& v) {
  if (v == "true") return true;
  if (v == "false") return false;
  if (v == "none") return nullptr;
  return v;
}

inline json matrix_json(const RationalMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

inline void print_matrix(std::ostream& out, const std::string& label, const RationalMatrix& m) {
  out << label << ":\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out << " ";
    for (std::size_t j = 0; j < m.cols(); ++j) out << " " << m(i, j);
    out << "\n";
  }
}

inline void emit(std::ostream& out, Format f, const json& doc,
                 const std::vector<std::pair<std::string, std::string>>& lines) {
  if (f == Format::machine) {
    out << doc.dump(2) << "\n";
    return;
  }
  for (const auto& [k, v] : lines) out << k << ": " << v << "\n";
}

inline const AntiHermitianStructure& require_structure(const StructureFile& f) {
  if (!f.structure) throw SyntaxError("file has no [metric] and [complex_structure] sections");
  return *f.structure;
}

inline int cmd_check(const std::string& path, Format fmt, std::ostream& out) {
  const StructureFile f = parse_structure(read_file(path));
  json doc{{"command", "check"}, {"dim", f.algebra.dim()}};
  std::vector<std::pair<std::string, std::string>> lines{{"dim", std::to_string(f.algebra.dim())}};
  if (!f.structure) {
    // algebra-only file: structure-independent facts
    const bool uni = is_unimodular(f.algebra);
    const std::size_t dd = derived_dim(f.algebra), cd = center_dim(f.algebra);
    const bool semisimple = !determinant(killing_form(f.algebra)).is_zero();
    lines.insert(lines.end(), {{"anti_hermitian", "none"},
                               {"unimodular", uni ? "true" : "false"},
                               {"derived_dimension", std::to_string(dd)},
                               {"center_dimension", std::to_string(cd)},
                               {"killing_nondegenerate", semisimple ? "true" : "false"}});
    doc["properties"] = json{{"anti_hermitian", nullptr},
                             {"unimodular", uni},
                             {"derived_dimension", dd},
                             {"center_dimension", cd},
                             {"killing_nondegenerate", semisimple}};
    emit(out, fmt, doc, lines);
    return ok;
  }
  json props = json::object();
  for (const auto& [k, v] : property_ladder(*f.structure).entries()) {
    lines.emplace_back(k, v);
    props[k] = ladder_value(v);
  }
  doc["properties"] = props;
  emit(out, fmt, doc, lines);
  return ok;
}

inline int cmd_curvature(const std::string& path, Format fmt, std::ostream& out) {
  const AntiHermitianStructure s = require_structure(parse_structure(read_file(path)));
  const std::size_t n = s.dim();
  const Connection c = levi_civita(s);
  const CurvatureTensor r = curvature(s, c);
  const Ricci ric = ricci(s, r);
  if (fmt == Format::machine) {
    json gamma = json::array(), riem = json::array();
    for (std::size_t i = 0; i < n; ++i) {
      json gi = json::array(), ri = json::array();
      for (std::size_t j = 0; j < n; ++j) {
        json gij = json::array(), rij = json::array();
        for (std::size_t k = 0; k < n; ++k) {
          gij.push_back(c.christoffel()(i, j, k).str());
          json rijk = json::array();
          for (std::size_t l = 0; l < n; ++l) rijk.push_back(r.upper(i, j, k, l).str());
          rij.push_back(std::move(rijk));
        }
        gi.push_back(std::move(gij));
        ri.push_back(std::move(rij));
      }
      gamma.push_back(std::move(gi));
      riem.push_back(std::move(ri));
    }
    json doc{{"command", "curvature"},
             {"dim", n},
             {"christoffel", gamma},
             {"riemann", riem},
             {"ricci", matrix_json(ric.form)},
             {"ricci_operator", matrix_json(ric.operator_)}};
    out << doc.dump(2) << "\n";
    return ok;
  }
  out << "# nabla_{e_i} e_j = sum_k G[i][j][k] e_k, nonzero entries, indices 1-based\n";
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (const Rational& v = c.christoffel()(i, j, k); !v.is_zero())
          out << "G " << i + 1 << " " << j + 1 << " " << k + 1 << " = " << v << "\n";
  out << "# R(e_i, e_j) e_k = sum_l R[i][j][k][l] e_l, nonzero entries with i < j\n";
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l)
          if (const Rational v = r.upper(i, j, k, l); !v.is_zero())
            out << "R " << i + 1 << " " << j + 1 << " " << k + 1 << " " << l + 1 << " = " << v << "\n";
  print_matrix(out, "ricci", ric.form);
  print_matrix(out, "ricci_operator", ric.operator_);
  return ok;
}

inline int cmd_classify(const std::string& path, Format fmt, std::ostream& out) {
  const AntiHermitianStructure s = require_structure(parse_structure(read_file(path)));
  if (s.dim() != 4) throw DimensionMismatch("classify needs a 4-dimensional structure");
  ClassificationReport rep;
  try {
    rep = classify(s);
  } catch (const NotAntiKahler&) {
    emit(out, fmt, json{{"command", "classify"}, {"anti_kahler", false}}, {{"anti_kahler", "false"}});
    return property_failure;
  }
  const auto opt = [](const auto& v) { return v ? v->str() : std::string("none"); };
  const std::string lambda = opt(rep.curvature.lambda);
  const std::string zeta = opt(rep.zeta);
  const std::string eps = rep.epsilon ? std::to_string(*rep.epsilon) : "none";
  const auto b = [](bool v) { return std::string(v ? "true" : "false"); };
  json doc{{"command", "classify"},
           {"anti_kahler", true},
           {"verdict", to_string(rep.verdict)},
           {"zeta", rep.zeta ? json(zeta) : json(nullptr)},
           {"epsilon", rep.epsilon ? json(*rep.epsilon) : json(nullptr)},
           {"rank_A", rep.rank_A},
           {"derived_dimension", rep.derived_dimension},
           {"discriminator_agrees", rep.discriminator_agrees},
           {"witness_verified", rep.witness_verified},
           {"witness", rep.witness ? matrix_json(*rep.witness) : json(nullptr)},
           {"flat", rep.curvature.flat},
           {"ricci_flat", rep.curvature.ricci_flat},
           {"einstein", rep.curvature.einstein},
           {"lambda", rep.curvature.lambda ? json(lambda) : json(nullptr)}};
  emit(out, fmt, doc,
       {{"anti_kahler", "true"},
        {"verdict", to_string(rep.verdict)},
        {"zeta", zeta},
        {"epsilon", eps},
        {"rank_A", std::to_string(rep.rank_A)},
        {"derived_dimension", std::to_string(rep.derived_dimension)},
        {"discriminator_agrees", b(rep.discriminator_agrees)},
        {"witness_verified", b(rep.witness_verified)},
        {"flat", b(rep.curvature.flat)},
        {"ricci_flat", b(rep.curvature.ricci_flat)},
        {"einstein", b(rep.curvature.einstein)},
        {"lambda", lambda}});
  if (fmt == Format::human && rep.witness) print_matrix(out, "witness", *rep.witness);
  return ok;
}

inline int cmd_catalog_list(Format fmt, std::ostream& out) {
  json entries = json::array();
  for (const auto& name : catalog::list()) {
    const catalog::Entry e = catalog::get(name);
    if (fmt == Format::human) out << name << "  dim " << e.structure.dim() << "  " << e.provenance << "\n";
    entries.push_back(json{{"name", name}, {"dim", e.structure.dim()}, {"provenance", e.provenance}});
  }
  if (fmt == Format::machine) out << json{{"command", "catalog list"}, {"entries", entries}}.dump(2) << "\n";
  return ok;
}

inline int cmd_catalog_show(const std::string& name, Format fmt, std::ostream& out) {
  const catalog::Entry e = catalog::get(name);
  std::vector<std::pair<std::string, std::string>> lines{{"name", e.name},
                                                         {"dim", std::to_string(e.structure.dim())},
                                                         {"provenance", e.provenance}};
  json props = json::object();
  for (const auto& [k, v] : property_ladder(e.structure).entries()) {
    lines.emplace_back(k, v);
    props[k] = ladder_value(v);
  }
  json doc{{"command", "catalog show"},
           {"name", e.name},
           {"dim", e.structure.dim()},
           {"provenance", e.provenance},
           {"properties", props}};
  emit(out, fmt, doc, lines);
  return ok;
}

inline int cmd_catalog_export(const std::string& name, Format fmt, std::ostream& out) {
  const std::string text = print_structure(catalog::get(name).structure);
  if (fmt == Format::machine)
    out << json{{"command", "catalog export"}, {"name", name}, {"text", text}}.dump(2) << "\n";
  else
    out << text;
  return ok;
}

inline json report_json(const SuiteReport& r) {
  json props = json::array();
  for (const auto& p : r.results) {
    json item{{"id", p.id},
              {"passed", p.failed == 0},
              {"checked", p.checked},
              {"failed", p.failed},
              {"not_applicable", p.skipped}};
    if (p.counterexample)
      item["counterexample"] = json{{"sample", p.counterexample->sample},
                                    {"origin", p.counterexample->origin},
                                    {"detail", p.counterexample->detail},
                                    {"structure", p.counterexample->structure}};
    props.push_back(std::move(item));
  }
  json origins = json::object();
  for (const auto& [k, v] : r.origins) origins[k] = v;
  return json{{"command", "verify"},
              {"suite", r.suite},
              {"seed", r.config.master_seed},
              {"samples", r.config.samples},
              {"dim", r.config.dim},
              {"bound", r.config.coefficient_bound},
              {"origins", origins},
              {"propositions", props},
              {"passed", r.passed()}};
}

inline int cmd_verify(const std::string& suite, const GeneratorConfig& cfg, Format fmt, std::ostream& out) {
  const SuiteReport r = run_suite(suite, cfg);
  if (fmt == Format::machine)
    out << report_json(r).dump(2) << "\n";
  else
    out << r.text();
  return r.passed() ? ok : property_failure;
}

inline void report_error(const std::string& kind, const std::string& message, std::optional<int> line, Format fmt,
                         std::ostream& out, std::ostream& err) {
  if (fmt == Format::machine) {
    json e{{"kind", kind}, {"message", message}};
    e["line"] = line ? json(*line) : json(nullptr);
    out << json{{"error", e}}.dump(2) << "\n";
  } else {
    err << "error: " << kind;
    if (line) err << " at line " << *line;
    err << ": " << message << "\n";
  }
}

/// Runs one command line (args excludes the program name) and returns the
/// exit code: 0 success, 1 failed property where the command defines one,
/// 2 input errors.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact anti-Kahler geometry on Lie algebras", "akahler"};
  app.require_subcommand(1);
  std::string output = "human";
  app.add_option("--output", output, "human or machine")
      ->check(CLI::IsMember({"human", "machine"}))
      ->capture_default_str();
  app.set_help_all_flag("--help-all", "help for every subcommand");

  std::string file, name, suite;
  auto* check = app.add_subcommand("check", "print the predicate ladder of a structure file");
  check->add_option("FILE", file)->required();
  auto* curv = app.add_subcommand("curvature", "dump connection, curvature and Ricci tensors");
  curv->add_option("FILE", file)->required();
  auto* cls = app.add_subcommand("classify", "classify a 4-dimensional anti-Kahler structure");
  cls->add_option("FILE", file)->required();

  auto* cat = app.add_subcommand("catalog", "built-in structures");
  cat->require_subcommand(1);
  auto* cat_list = cat->add_subcommand("list", "list entry names");
  auto* cat_show = cat->add_subcommand("show", "predicate ladder of an entry");
  cat_show->add_option("NAME", name)->required();
  auto* cat_export = cat->add_subcommand("export", "entry in structure-file format");
  cat_export->add_option("NAME", name)->required();

  GeneratorConfig cfg;
  auto* ver = app.add_subcommand("verify", "run a randomized proposition suite");
  ver->add_option("SUITE", suite)->required();
  ver->add_option("--seed", cfg.master_seed, "master seed")->capture_default_str();
  ver->add_option("--samples", cfg.samples, "number of samples")->capture_default_str();
  ver->add_option("--dim", cfg.dim, "4 or 6")->check(CLI::IsMember({4, 6}))->capture_default_str();
  ver->add_option("--bound", cfg.coefficient_bound, "coefficient bound")->check(CLI::Range(1, 64))->capture_default_str();

  for (auto* sub : {check, curv, cls, cat, ver}) sub->fallthrough();
  for (auto* sub : {cat_list, cat_show, cat_export}) sub->fallthrough();

  std::vector<const char*> argv{"akahler"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return input_error;
  }

  const Format fmt = output == "machine" ? Format::machine : Format::human;
  try {
    if (*check) return cmd_check(file, fmt, out);
    if (*curv) return cmd_curvature(file, fmt, out);
    if (*cls) return cmd_classify(file, fmt, out);
    if (*cat_list) return cmd_catalog_list(fmt, out);
    if (*cat_show) return cmd_catalog_show(name, fmt, out);
    if (*cat_export) return cmd_catalog_export(name, fmt, out);
    if (*ver) return cmd_verify(suite, cfg, fmt, out);
  } catch (const Error& e) {
    std::string message = e.what();
    if (e.line()) message = message.substr(message.find(": ") + 2);
    report_error(e.kind(), message, e.line(), fmt, out, err);
    return input_error;
  }
  return input_error;
}

}  // namespace akahler::cli
