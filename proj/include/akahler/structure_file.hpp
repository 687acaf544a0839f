#pragma once

// Line-oriented text format:
//
//   # comment
//   [algebra]
//   dim = 4
//   bracket e1 e2 = 1 e3 + -1/2 e4
//   [metric]
//   row = 1 0 0 0
//   ...
//   [complex_structure]
//   row = 0 -1 0 0
//   ...
//
// Basis indices are 1-based. Unlisted brackets are zero; only i < j may be
// listed. The metric and complex structure sections are optional together.

#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "akahler/structure.hpp"

namespace akahler {

struct StructureFile {
  LieAlgebra algebra;
  std::optional<AntiHermitianStructure> structure;
};

namespace detail {

inline std::vector<std::string> tokenize(std::string_view line) {
  std::string spaced;
  for (char ch : line) {
    if (ch == '=') {
      spaced += " = ";
    } else {
      spaced += ch;
    }
  }
  std::istringstream in(spaced);
  std::vector<std::string> out;
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

inline std::size_t parse_basis_index(const std::string& tok, std::size_t dim, int line) {
  if (tok.size() < 2 || tok[0] != 'e') throw SyntaxError("expected basis vector e<k>, got '" + tok + "'", line);
  std::size_t k = 0;
  for (std::size_t i = 1; i < tok.size(); ++i) {
    if (tok[i] < '0' || tok[i] > '9') throw SyntaxError("expected basis vector e<k>, got '" + tok + "'", line);
    k = k * 10 + static_cast<std::size_t>(tok[i] - '0');
    if (k > dim) break;
  }
  if (k < 1 || k > dim) throw SyntaxError("basis index out of range in '" + tok + "'", line);
  return k - 1;
}

inline Rational parse_rational(const std::string& tok, int line) {
  try {
    return Rational::parse(tok);
  } catch (const SyntaxError& e) {
    throw SyntaxError(e.what(), line);
  }
}

}  // namespace detail

inline StructureFile parse_structure(std::string_view text) {
  enum class Section { none, algebra, metric, complex_structure };
  Section section = Section::none;
  std::optional<std::size_t> dim;
  std::optional<LieAlgebraDraft> draft;
  std::vector<std::vector<bool>> listed;
  int algebra_line = 0, metric_line = 0, j_line = 0;
  std::vector<Vector> metric_rows, j_rows;
  std::vector<int> seen_sections;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto toks = detail::tokenize(line);
    if (toks.empty()) continue;

    if (toks[0].front() == '[') {
      if (toks.size() != 1) throw SyntaxError("unexpected text after section header", line_no);
      Section next;
      if (toks[0] == "[algebra]") {
        next = Section::algebra;
      } else if (toks[0] == "[metric]") {
        next = Section::metric;
      } else if (toks[0] == "[complex_structure]") {
        next = Section::complex_structure;
      } else {
        throw SyntaxError("unknown section " + toks[0], line_no);
      }
      if (std::find(seen_sections.begin(), seen_sections.end(), static_cast<int>(next)) != seen_sections.end())
        throw SyntaxError("duplicate section " + toks[0], line_no);
      if (next != Section::algebra && !dim) throw SyntaxError("[algebra] with dim must come first", line_no);
      seen_sections.push_back(static_cast<int>(next));
      section = next;
      (next == Section::algebra ? algebra_line : next == Section::metric ? metric_line : j_line) = line_no;
      continue;
    }

    switch (section) {
      case Section::none:
        throw SyntaxError("content outside of a section", line_no);
      case Section::algebra: {
        if (!dim) {
          if (toks.size() != 3 || toks[0] != "dim" || toks[1] != "=")
            throw SyntaxError("expected 'dim = <int>'", line_no);
          const Rational d = detail::parse_rational(toks[2], line_no);
          if (d.denominator() != 1 || d.sign() <= 0 || d > Rational(64))
            throw SyntaxError("dim must be a positive integer", line_no);
          dim = static_cast<std::size_t>(d.numerator().get_si());
          draft.emplace(*dim);
          listed.assign(*dim, std::vector<bool>(*dim, false));
          break;
        }
        if (toks.size() < 6 || toks[0] != "bracket" || toks[3] != "=")
          throw SyntaxError("expected 'bracket e<i> e<j> = <coeff> e<k> [+ ...]'", line_no);
        const std::size_t i = detail::parse_basis_index(toks[1], *dim, line_no);
        const std::size_t j = detail::parse_basis_index(toks[2], *dim, line_no);
        if (i >= j)
          throw AntisymmetryViolation("bracket " + toks[1] + " " + toks[2] + " must be listed with i < j", line_no);
        if (listed[i][j]) throw SyntaxError("duplicate bracket " + toks[1] + " " + toks[2], line_no);
        listed[i][j] = true;
        Vector v(*dim);
        std::vector<bool> used(*dim, false);
        std::size_t t = 4;
        while (true) {
          if (t + 1 >= toks.size()) throw SyntaxError("incomplete bracket term", line_no);
          const Rational coeff = detail::parse_rational(toks[t], line_no);
          const std::size_t k = detail::parse_basis_index(toks[t + 1], *dim, line_no);
          if (used[k]) throw SyntaxError("repeated term " + toks[t + 1], line_no);
          used[k] = true;
          v[k] = coeff;
          t += 2;
          if (t == toks.size()) break;
          if (toks[t] != "+") throw SyntaxError("expected '+' between terms", line_no);
          ++t;
        }
        draft->set_bracket(i, j, v);
        break;
      }
      case Section::metric:
      case Section::complex_structure: {
        auto& rows = section == Section::metric ? metric_rows : j_rows;
        if (toks.size() < 2 || toks[0] != "row" || toks[1] != "=") throw SyntaxError("expected 'row = ...'", line_no);
        if (toks.size() - 2 != *dim)
          throw SyntaxError("row has " + std::to_string(toks.size() - 2) + " entries, expected " + std::to_string(*dim),
                            line_no);
        if (rows.size() == *dim) throw SyntaxError("too many rows", line_no);
        Vector row;
        for (std::size_t k = 2; k < toks.size(); ++k) row.push_back(detail::parse_rational(toks[k], line_no));
        rows.push_back(std::move(row));
        break;
      }
    }
  }

  if (!dim) throw SyntaxError("missing [algebra] section with dim", line_no);
  LieAlgebra algebra = [&] {
    try {
      return draft->validate();
    } catch (const JacobiViolation& e) {
      throw JacobiViolation(e.what(), algebra_line);
    }
  }();

  const bool has_metric = metric_line != 0, has_j = j_line != 0;
  if (!has_metric && !has_j) return {std::move(algebra), std::nullopt};
  if (!has_metric || !has_j) throw SyntaxError("[metric] and [complex_structure] must appear together", line_no);
  if (metric_rows.size() != *dim) throw SyntaxError("[metric] needs " + std::to_string(*dim) + " rows", metric_line);
  if (j_rows.size() != *dim)
    throw SyntaxError("[complex_structure] needs " + std::to_string(*dim) + " rows", j_line);

  RationalMatrix g(*dim, *dim), j(*dim, *dim);
  for (std::size_t r = 0; r < *dim; ++r)
    for (std::size_t c = 0; c < *dim; ++c) {
      g(r, c) = metric_rows[r][c];
      j(r, c) = j_rows[r][c];
    }
  if (!is_complex_structure(j)) throw BadJSquare("J^2 != -I", j_line);
  if (!g.is_symmetric()) throw NotSymmetric("metric is not symmetric", metric_line);
  if (determinant(g).is_zero()) throw SingularMetric("metric is degenerate", metric_line);
  if (!(j.transpose() * g * j == -g)) throw NotAntiIsometry("g(Jx, Jy) != -g(x, y)", metric_line);
  AntiHermitianStructure s(algebra, std::move(g), std::move(j));
  return {std::move(algebra), std::move(s)};
}

inline std::string print_algebra(const LieAlgebra& l) {
  std::ostringstream out;
  out << "[algebra]\n" << "dim = " << l.dim() << "\n";
  for (std::size_t i = 0; i < l.dim(); ++i)
    for (std::size_t j = i + 1; j < l.dim(); ++j) {
      const Vector v = l.bracket_basis(i, j);
      if (is_zero(v)) continue;
      out << "bracket e" << i + 1 << " e" << j + 1 << " =";
      bool first = true;
      for (std::size_t k = 0; k < v.size(); ++k) {
        if (v[k].is_zero()) continue;
        out << (first ? " " : " + ") << v[k] << " e" << k + 1;
        first = false;
      }
      out << "\n";
    }
  return out.str();
}

inline std::string print_structure(const AntiHermitianStructure& s) {
  std::ostringstream out;
  out << print_algebra(s.algebra());
  auto rows = [&](const char* header, const RationalMatrix& m) {
    out << header << "\n";
    for (std::size_t r = 0; r < m.rows(); ++r) {
      out << "row =";
      for (std::size_t c = 0; c < m.cols(); ++c) out << " " << m(r, c);
      out << "\n";
    }
  };
  rows("[metric]", s.metric());
  rows("[complex_structure]", s.complex_structure());
  return out.str();
}

}  // namespace akahler
