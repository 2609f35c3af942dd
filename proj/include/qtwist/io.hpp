#pragma once

// JSON interchange documents: R-matrices, quadratic algebras and matrices.
// All indices in documents are 1-based; scalars use the scalar grammar.

#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <tuple>

#include <nlohmann/json.hpp>

#include "qtwist/frt.hpp"
#include "qtwist/quadratic.hpp"
#include "qtwist/tensor.hpp"

namespace qtwist::io {

using nlohmann::json;

/// Parses JSON text; syntax errors become FormatError with the line number.
inline json parse_document(const std::string& text, const std::string& source = "document") {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1;
    for (std::size_t i = 0; i < std::min<std::size_t>(e.byte, text.size()); ++i)
      if (text[i] == '\n') ++line;
    throw FormatError(source + ":" + std::to_string(line), "malformed JSON");
  }
}

inline json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError(path, "cannot open file");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_document(ss.str(), path);
}

inline void write_file(const std::string& path, const json& doc) {
  std::ofstream out(path);
  if (!out) throw FormatError(path, "cannot write file");
  out << doc.dump(2) << '\n';
}

namespace detail {

inline const json& field(const json& obj, const std::string& key, const std::string& where) {
  if (!obj.is_object()) throw FormatError(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw FormatError(where.empty() ? key : where + "." + key, "missing field");
  return *it;
}

inline int integer(const json& v, const std::string& where) {
  if (!v.is_number_integer()) throw FormatError(where, "expected an integer");
  return v.get<int>();
}

template <Field F>
F scalar(const json& v, const std::string& where) {
  try {
    if (v.is_number_integer()) return F(Rational(v.get<long>()));
    if (v.is_string()) return parse_scalar<F>(v.get<std::string>());
  } catch (const ParseError& e) {
    throw FormatError(where, e.what());
  }
  throw FormatError(where, "expected a scalar string");
}

inline std::string at(const std::string& base, std::size_t i) { return base + "[" + std::to_string(i) + "]"; }

}  // namespace detail

template <Field F>
json r_matrix_to_json(const EndTensor<F>& R) {
  json entries = json::array();
  for (const auto& [key, v] : R.entries()) {
    auto [i, j, k, l] = EndTensor<F>::unpack(key);
    entries.push_back({{"i", i}, {"j", j}, {"k", k}, {"l", l}, {"value", to_string(v)}});
  }
  return {{"n", R.n()}, {"entries", entries}};
}

template <Field F>
EndTensor<F> r_matrix_from_json(const json& doc) {
  const int n = detail::integer(detail::field(doc, "n", ""), "n");
  if (n < 1 || n > kMaxDim) throw FormatError("n", "dimension must lie in 1.." + std::to_string(kMaxDim));
  const json& entries = detail::field(doc, "entries", "");
  if (!entries.is_array()) throw FormatError("entries", "expected a list");
  EndTensor<F> R(n);
  std::map<std::tuple<int, int, int, int>, std::size_t> seen;
  for (std::size_t e = 0; e < entries.size(); ++e) {
    const std::string where = detail::at("entries", e);
    int idx[4];
    const char* names[4] = {"i", "j", "k", "l"};
    for (int t = 0; t < 4; ++t) {
      idx[t] = detail::integer(detail::field(entries[e], names[t], where), where + "." + names[t]);
      if (idx[t] < 1 || idx[t] > n) throw FormatError(where + "." + names[t], "index out of range 1.." + std::to_string(n));
    }
    F v = detail::scalar<F>(detail::field(entries[e], "value", where), where + ".value");
    if (v.is_zero()) throw FormatError(where + ".value", "zero entries are not allowed");
    auto key = std::make_tuple(idx[0], idx[1], idx[2], idx[3]);
    if (auto [it, fresh] = seen.emplace(key, e); !fresh)
      throw FormatError(where, "duplicates " + detail::at("entries", it->second));
    R.set({idx[0], idx[1], idx[2], idx[3]}, v);
  }
  return R;
}

template <Field F>
json algebra_to_json(const QuadraticAlgebra<F>& A) {
  json rels = json::array();
  const std::size_t m = A.m();
  for (const auto& r : A.relations()) {
    json terms = json::array();
    for (const auto& [c, v] : r)
      terms.push_back({{"a", static_cast<int>(c / m) + 1}, {"b", static_cast<int>(c % m) + 1}, {"value", to_string(v)}});
    rels.push_back(terms);
  }
  return {{"gens", A.labels()}, {"relations", rels}};
}

template <Field F>
QuadraticAlgebra<F> algebra_from_json(const json& doc) {
  const json& gens = detail::field(doc, "gens", "");
  if (!gens.is_array() || gens.empty()) throw FormatError("gens", "expected a nonempty list of labels");
  std::vector<std::string> labels;
  for (std::size_t g = 0; g < gens.size(); ++g) {
    if (!gens[g].is_string()) throw FormatError(detail::at("gens", g), "expected a string label");
    labels.push_back(gens[g].get<std::string>());
  }
  const int m = static_cast<int>(labels.size());
  const json& rels = detail::field(doc, "relations", "");
  if (!rels.is_array()) throw FormatError("relations", "expected a list");
  std::vector<SparseVec<F>> vecs;
  for (std::size_t r = 0; r < rels.size(); ++r) {
    const std::string where = detail::at("relations", r);
    if (!rels[r].is_array()) throw FormatError(where, "expected a list of terms");
    std::vector<std::pair<Column, F>> e;
    for (std::size_t t = 0; t < rels[r].size(); ++t) {
      const std::string tw = detail::at(where, t);
      const int a = detail::integer(detail::field(rels[r][t], "a", tw), tw + ".a");
      const int b = detail::integer(detail::field(rels[r][t], "b", tw), tw + ".b");
      if (a < 1 || a > m) throw FormatError(tw + ".a", "generator index out of range");
      if (b < 1 || b > m) throw FormatError(tw + ".b", "generator index out of range");
      e.emplace_back(static_cast<Column>((a - 1) * m + (b - 1)),
                     detail::scalar<F>(detail::field(rels[r][t], "value", tw), tw + ".value"));
    }
    vecs.push_back(make_sparse<F>(std::move(e)));
  }
  return QuadraticAlgebra<F>(std::move(labels), vecs);
}

template <Field F>
json matrix_to_json(const Matrix<F>& M) {
  json rows = json::array();
  for (std::size_t i = 0; i < M.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < M.cols(); ++j) row.push_back(to_string(M(i, j)));
    rows.push_back(row);
  }
  return rows;
}

/// Reads the square matrix stored under `key` (e.g. "alpha" or "matrix").
template <Field F>
Matrix<F> matrix_from_json(const json& doc, const std::string& key) {
  const json& rows = detail::field(doc, key, "");
  if (!rows.is_array() || rows.empty()) throw FormatError(key, "expected a nonempty list of rows");
  const std::size_t n = rows.size();
  Matrix<F> M(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::string where = detail::at(key, i);
    if (!rows[i].is_array() || rows[i].size() != n) throw FormatError(where, "expected a row of length " + std::to_string(n));
    for (std::size_t j = 0; j < n; ++j) M(i, j) = detail::scalar<F>(rows[i][j], detail::at(where, j));
  }
  return M;
}

template <Field F>
json polynomial_to_json(const NCPoly<F>& p, const std::vector<std::string>& labels) {
  json terms = json::array();
  for (const auto& [w, c] : p.terms()) {
    json word = json::array();
    for (auto g : w) word.push_back(labels.at(g));
    terms.push_back({{"word", word}, {"value", to_string(c)}});
  }
  return terms;
}

}  // namespace qtwist::io
