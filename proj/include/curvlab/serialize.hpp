#pragma once

// JSON forms.  Exact scalars are strings "p/q" (or "p" when q = 1); floating
// scalars are JSON numbers.  Arrays are row-major.  Parsing then printing
// reproduces the input exactly for canonical input.

#include <nlohmann/json.hpp>

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "curvlab/field.hpp"
#include "curvlab/linalg.hpp"
#include "curvlab/matrix.hpp"
#include "curvlab/model_space.hpp"
#include "curvlab/tensor.hpp"
#include "curvlab/tensor_ops.hpp"

namespace curvlab {

using json = nlohmann::ordered_json;

template <class F>
json scalar_to_json(const F& x) {
  if constexpr (field_traits<F>::is_exact) return field_traits<F>::to_string(x);
  else return x;
}

template <class F>
F scalar_from_json(const json& j) {
  if (j.is_string()) return field_traits<F>::parse(j.get<std::string>());
  if constexpr (field_traits<F>::is_exact) {
    if (j.is_number_integer()) return F(j.get<long>());
    throw std::invalid_argument("exact scalars must be strings \"p/q\" or integers");
  } else {
    if (j.is_number()) return j.get<double>();
    throw std::invalid_argument("expected a number");
  }
}

template <class F>
json vector_to_json(std::span<const F> v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(scalar_to_json(x));
  return a;
}

template <class F>
std::vector<F> vector_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected a JSON array");
  std::vector<F> v;
  v.reserve(j.size());
  for (const auto& x : j) v.push_back(scalar_from_json<F>(x));
  return v;
}

/// {"rows": r, "cols": c, "data": [[...], ...]}
template <class F>
json matrix_to_json(const Matrix<F>& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(vector_to_json<F>(m.row(i)));
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(rows)}};
}

template <class F>
Matrix<F> matrix_from_json(const json& j) {
  const auto r = j.at("rows").get<std::size_t>();
  const auto c = j.at("cols").get<std::size_t>();
  const auto& data = j.at("data");
  if (!data.is_array() || data.size() != r) throw std::invalid_argument("matrix row count mismatch");
  Matrix<F> m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    const auto row = vector_from_json<F>(data[i]);
    if (row.size() != c) throw std::invalid_argument("matrix column count mismatch");
    for (std::size_t k = 0; k < c; ++k) m(i, k) = row[k];
  }
  return m;
}

/// {"ambient_dim": N, "basis": [[...], ...]}; the basis is the canonical echelon basis.
template <class F>
json subspace_to_json(const Subspace<F>& s) {
  json basis = json::array();
  for (std::size_t i = 0; i < s.dim(); ++i) basis.push_back(vector_to_json<F>(s.vector(i)));
  return json{{"ambient_dim", s.ambient_dim()}, {"basis", std::move(basis)}};
}

template <class F>
Subspace<F> subspace_from_json(const json& j) {
  const auto N = j.at("ambient_dim").get<std::size_t>();
  std::vector<std::vector<F>> vecs;
  for (const auto& v : j.at("basis")) {
    vecs.push_back(vector_from_json<F>(v));
    if (vecs.back().size() != N) throw std::invalid_argument("basis vector length does not match ambient_dim");
  }
  return Subspace<F>::span(N, vecs);
}

/// {"shape": [n, ...], "data": [...]} with flat row-major data.
template <class F, std::size_t R>
json tensor_to_json(const Tensor<F, R>& t) {
  json shape = json::array();
  for (std::size_t i = 0; i < R; ++i) shape.push_back(t.dim());
  return json{{"shape", std::move(shape)}, {"data", vector_to_json<F>(t.flat())}};
}

template <class F>
json flat_tensor_to_json(std::span<const F> v, std::size_t n) {
  const std::size_t k = detail::rank_of(v.size(), n);
  json shape = json::array();
  for (std::size_t i = 0; i < k; ++i) shape.push_back(n);
  return json{{"shape", std::move(shape)}, {"data", vector_to_json<F>(v)}};
}

template <class F, std::size_t R>
Tensor<F, R> tensor_from_json(const json& j) {
  const auto& shape = j.at("shape");
  if (!shape.is_array() || shape.size() != R) throw std::invalid_argument("tensor shape has wrong rank");
  const auto n = shape[0].get<std::size_t>();
  for (const auto& d : shape)
    if (d.get<std::size_t>() != n) throw std::invalid_argument("tensor shape must be cubical");
  return Tensor<F, R>(n, vector_from_json<F>(j.at("data")));
}

/// {"n": n, "kind": "...", "eps": [...], "J": matrix or null}
template <class F>
json model_space_to_json(const ModelSpace<F>& s) {
  json j{{"n", s.n}, {"kind", to_string(s.kind)}, {"eps", s.eps}};
  j["J"] = s.has_structure() ? matrix_to_json(s.J) : json(nullptr);
  return j;
}

template <class F>
ModelSpace<F> model_space_from_json(const json& j) {
  const auto kind = parse_kind(j.at("kind").get<std::string>());
  auto s = make_with_signs<F>(kind, j.at("eps").get<std::vector<int>>());
  if (j.at("n").get<std::size_t>() != s.n) throw std::invalid_argument("n does not match eps length");
  if (kind != StructureKind::none && j.contains("J") && !j.at("J").is_null()) {
    if (!(matrix_from_json<F>(j.at("J")) == s.J))
      throw std::invalid_argument("only the standard structure matrix is supported as input");
  }
  return s;
}

inline json permutation_to_json(const SlotPermutation& pi) { return json(std::vector<std::size_t>(pi.begin(), pi.end())); }

inline SlotPermutation permutation_from_json(const json& j) {
  const auto v = j.get<std::vector<std::size_t>>();
  if (v.size() != 4) throw std::invalid_argument("permutation must be a 4-tuple");
  return {v[0], v[1], v[2], v[3]};
}

/// Pair-words print as "01".
inline std::string pair_word_to_string(const PairWord& a) {
  return std::string{static_cast<char>('0' + a[0]), static_cast<char>('0' + a[1])};
}

inline PairWord pair_word_from_string(const std::string& s) {
  if (s.size() != 2) throw std::invalid_argument("pair-word must have two letters");
  PairWord a{};
  for (std::size_t i = 0; i < 2; ++i) {
    if (s[i] != '0' && s[i] != '1') throw std::invalid_argument("pair-word letters must be 0 or 1");
    a[i] = s[i] - '0';
  }
  return a;
}

}  // namespace curvlab
