#pragma once

#include "eagv/error.hpp"
#include "eagv/galois_field.hpp"
#include "eagv/matrix.hpp"
#include "eagv/pareto.hpp"
#include "eagv/table1.hpp"
#include "eagv/witness.hpp"

#include <json.hpp>

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace eagv {

using json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Matrix text format
//
//   q=<int> n=<int> [poly=<c0,c1,...,cm>]
//   <2n integers: H_X row then H_Z row>
//   ...
// Blank lines are ignored; '#' starts a comment line.
// ---------------------------------------------------------------------------

struct MatrixFile {
  Field field;
  std::size_t n;
  Matrix h;
};

namespace detail {

inline std::uint64_t parse_uint(std::string_view s, const std::string& what) {
  std::uint64_t v = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end || s.empty()) throw InvalidParameters("invalid " + what + ": '" + std::string(s) + "'");
  return v;
}

inline std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

} // namespace detail

/// Comma-separated coefficients, constant term first.
inline poly::Poly parse_modulus(std::string_view text) {
  poly::Poly out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto token = detail::trim(text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
    out.push_back(static_cast<std::uint32_t>(detail::parse_uint(token, "polynomial coefficient")));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

inline MatrixFile read_matrix(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::optional<std::uint64_t> q, n;
  std::optional<poly::Poly> modulus;
  bool have_header = false;
  std::vector<std::vector<Element>> rows;

  while (std::getline(in, line)) {
    ++line_no;
    const auto body = detail::trim(line);
    if (body.empty() || body.front() == '#') continue;
    std::istringstream tokens{std::string(body)};
    std::string tok;
    if (!have_header) {
      while (tokens >> tok) {
        const auto eq = tok.find('=');
        if (eq == std::string::npos) throw InvalidParameters("line " + std::to_string(line_no) + ": bad header token '" + tok + "'");
        const auto key = tok.substr(0, eq);
        const auto value = std::string_view(tok).substr(eq + 1);
        if (key == "q") q = detail::parse_uint(value, "q");
        else if (key == "n") n = detail::parse_uint(value, "n");
        else if (key == "poly") modulus = parse_modulus(value);
        else throw InvalidParameters("line " + std::to_string(line_no) + ": unknown header key '" + key + "'");
      }
      if (!q || !n) throw InvalidParameters("header must define q and n");
      if (*n < 1) throw InvalidParameters("n < 1");
      have_header = true;
      continue;
    }
    std::vector<Element> row;
    while (tokens >> tok) {
      const auto v = detail::parse_uint(tok, "entry on line " + std::to_string(line_no));
      if (v >= *q) throw InvalidParameters("line " + std::to_string(line_no) + ": entry " + tok + " not in [0," + std::to_string(*q) + ")");
      row.push_back(static_cast<Element>(v));
    }
    if (row.size() != 2 * *n)
      throw InvalidParameters("line " + std::to_string(line_no) + ": expected " + std::to_string(2 * *n) +
                              " entries, found " + std::to_string(row.size()));
    rows.push_back(std::move(row));
  }
  if (!have_header) throw InvalidParameters("missing header line");
  Field f = Field::make(*q, modulus);
  return {std::move(f), static_cast<std::size_t>(*n), Matrix::from_rows(rows, 2 * *n)};
}

inline void write_matrix(std::ostream& out, const Field& f, std::size_t n, const Matrix& h) {
  out << "q=" << f.q() << " n=" << n;
  if (f.m() > 1) {
    out << " poly=";
    for (std::size_t i = 0; i < f.modulus().size(); ++i) out << (i ? "," : "") << f.modulus()[i];
  }
  out << '\n';
  for (std::size_t r = 0; r < h.rows(); ++r) {
    for (std::size_t j = 0; j < h.cols(); ++j) out << (j ? " " : "") << h(r, j);
    out << '\n';
  }
}

// ---------------------------------------------------------------------------
// JSON / CSV
// ---------------------------------------------------------------------------

inline json to_json(const std::vector<DistancePair>& pairs) {
  json arr = json::array();
  for (const auto& p : pairs) arr.push_back({p.d1, p.d2});
  return arr;
}

inline std::vector<DistancePair> pairs_from_json(const json& arr) {
  std::vector<DistancePair> out;
  for (const auto& p : arr) out.push_back({p.at(0).get<std::uint64_t>(), p.at(1).get<std::uint64_t>()});
  return out;
}

inline std::string source_name(FrontierSource s) {
  switch (s) {
    case FrontierSource::new_bound: return "new-bound";
    case FrontierSource::old_bound: return "old-bound";
    case FrontierSource::synthetic: return "synthetic";
  }
  return "synthetic";
}

inline json to_json(const BoundResult& r) {
  return {{"satisfied", r.satisfied}, {"lhs_num", r.lhs.numerator.str()}, {"lhs_den", r.lhs.denominator.str()}};
}

inline json to_json(const Table1RowResult& r) {
  return {{"q", r.row.q},
          {"n", r.row.n},
          {"k1", r.row.k1},
          {"k2", r.row.k2},
          {"c", r.row.c},
          {"expected_old", to_json(r.row.expected_old)},
          {"actual_old", to_json(r.actual_old.pairs)},
          {"match_old", r.match_old},
          {"expected_new", to_json(r.row.expected_new)},
          {"actual_new", to_json(r.actual_new.pairs)},
          {"match_new", r.match_new},
          {"match", r.match()},
          {"improves", r.improves}};
}

inline json to_json(const Table1Report& report) {
  json rows = json::array();
  for (const auto& r : report.rows) rows.push_back(to_json(r));
  return {{"all_match", report.all_match()}, {"rows", rows}};
}

inline json to_json(const WitnessReport& r) {
  json j = {{"found", r.found},
            {"trials_used", r.trials_used},
            {"bound_satisfied", r.bound_satisfied},
            {"completed", r.completed},
            {"contradiction", r.contradiction},
            {"rejected_wrong_c", r.stats.rejected_wrong_c},
            {"rejected_detection", r.stats.rejected_detection}};
  j["witness"] = r.witness ? json(r.witness->to_rows()) : json(nullptr);
  return j;
}

/// Quotes a CSV field when it contains a delimiter, quote or newline.
inline std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

inline std::string pairs_text(const std::vector<DistancePair>& pairs) {
  std::string s;
  for (std::size_t i = 0; i < pairs.size(); ++i)
    s += (i ? " " : "") + std::string("(") + std::to_string(pairs[i].d1) + "," + std::to_string(pairs[i].d2) + ")";
  return s;
}

inline void write_table1_csv(std::ostream& out, const Table1Report& report) {
  out << "q,n,k1,k2,c,frontier_old,frontier_new,match,improves\n";
  for (const auto& r : report.rows) {
    out << r.row.q << ',' << r.row.n << ',' << r.row.k1 << ',' << r.row.k2 << ',' << r.row.c << ','
        << csv_field(pairs_text(r.actual_old.pairs)) << ',' << csv_field(pairs_text(r.actual_new.pairs)) << ','
        << (r.match() ? "true" : "false") << ',' << (r.improves ? "true" : "false") << '\n';
  }
}

} // namespace eagv
