#pragma once

// Inner product spaces (V, h) with an optional standard complex or
// para-complex structure, their structure groups, and the sign table that
// resolves the stacked ± / ∓ conventions.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "curvlab/field.hpp"
#include "curvlab/linalg.hpp"
#include "curvlab/matrix.hpp"
#include "curvlab/tensor.hpp"

namespace curvlab {

enum class StructureKind { none, complex, para };

inline std::string to_string(StructureKind k) {
  switch (k) {
    case StructureKind::none: return "none";
    case StructureKind::complex: return "complex";
    case StructureKind::para: return "para";
  }
  return "?";
}

inline StructureKind parse_kind(std::string_view s) {
  if (s == "none") return StructureKind::none;
  if (s == "complex") return StructureKind::complex;
  if (s == "para") return StructureKind::para;
  throw std::invalid_argument("unknown structure kind '" + std::string(s) + "'");
}

/// The one place the stacked signs are resolved.  In every formula written
/// with "±" over "∓", the para-complex case takes the upper sign and the
/// complex case the lower one.
struct SignTable {
  int pm = 0;  // value of "±"
  int mp = 0;  // value of "∓"
};

inline SignTable signs(StructureKind k) {
  switch (k) {
    case StructureKind::para: return {+1, -1};
    case StructureKind::complex: return {-1, +1};
    case StructureKind::none: break;
  }
  throw std::invalid_argument("sign table requested for a space without structure");
}

struct Signature {
  std::size_t p = 0;
  std::size_t q = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};

class ModelSpaceError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// (V, h, J): h = diag(eps), J the standard structure J e_{2i-1} = e_{2i} (absent for kind none).
template <class F>
struct ModelSpace {
  std::size_t n = 0;
  StructureKind kind = StructureKind::none;
  std::vector<int> eps;
  Matrix<F> J;  // J(r, c): coefficient of e_r in J e_c; empty when kind == none

  bool has_structure() const { return kind != StructureKind::none; }
  SignTable sign() const { return signs(kind); }

  F h(std::size_t i, std::size_t j) const { return i == j ? F(eps[i]) : F(0); }
  /// Inverse metric h^{ij}; h is diagonal with entries ±1.
  F h_inv(std::size_t i, std::size_t j) const { return i == j ? F(eps[i]) : F(0); }

  Matrix<F> gram() const {
    Matrix<F> g(n, n);
    for (std::size_t i = 0; i < n; ++i) g(i, i) = F(eps[i]);
    return g;
  }

  Signature signature() const {
    Signature s;
    for (int e : eps) (e > 0 ? s.p : s.q)++;
    return s;
  }

  const Matrix<F>& structure() const {
    if (!has_structure()) throw ModelSpaceError("space has no (para-)complex structure");
    return J;
  }
};

namespace detail {

template <class F>
Matrix<F> standard_structure(std::size_t n, StructureKind kind) {
  const int pm = signs(kind).pm;
  Matrix<F> J(n, n);
  for (std::size_t i = 0; i + 1 < n; i += 2) {
    J(i + 1, i) = F(1);   // J e_{2i-1} = e_{2i}
    J(i, i + 1) = F(pm);  // J e_{2i} = ± e_{2i-1}
  }
  return J;
}

}  // namespace detail

/// Checks every ModelSpace invariant; throws ModelSpaceError naming the first failure.
template <class F>
void validate(const ModelSpace<F>& s) {
  if (s.eps.size() != s.n) throw ModelSpaceError("metric sign list has wrong length");
  for (int e : s.eps)
    if (e != 1 && e != -1) throw ModelSpaceError("metric signs must be +1 or -1");
  if (!s.has_structure()) {
    if (s.n < 2) throw ModelSpaceError("dimension must be at least 2");
    return;
  }
  if (s.n % 2 != 0) throw ModelSpaceError("a (para-)complex structure needs even dimension");
  if (s.n < 4) throw ModelSpaceError("a (para-)complex structure needs n >= 4");
  const auto sg = s.sign();
  const Matrix<F> H = s.gram();
  const auto& J = s.J;
  if (J.rows() != s.n || J.cols() != s.n) throw ModelSpaceError("structure matrix has wrong shape");
  if (!(J * J == F(sg.pm) * Matrix<F>::identity(s.n)))
    throw ModelSpaceError(s.kind == StructureKind::complex ? "J^2 != -Id" : "J^2 != Id");
  // J* h = ∓ h
  if (!(J.transpose() * H * J == F(sg.mp) * H))
    throw ModelSpaceError(s.kind == StructureKind::complex ? "metric is not J-invariant"
                                                           : "metric is not J-anti-invariant");
  if (s.kind == StructureKind::para) {
    F tr(0);
    for (std::size_t i = 0; i < s.n; ++i) tr += J(i, i);
    if (!is_zero(tr)) throw ModelSpaceError("para-complex structure is not trace free");
  }
}

/// Space with an explicit metric sign layout.
template <class F = Rational>
ModelSpace<F> make_with_signs(StructureKind kind, std::vector<int> eps) {
  ModelSpace<F> s;
  s.n = eps.size();
  s.kind = kind;
  s.eps = std::move(eps);
  if (kind != StructureKind::none) {
    if (s.n % 2 != 0) throw ModelSpaceError("a (para-)complex structure needs even dimension");
    s.J = detail::standard_structure<F>(s.n, kind);
    for (std::size_t i = 0; i + 1 < s.n; i += 2) {
      if (kind == StructureKind::complex && s.eps[i] != s.eps[i + 1])
        throw ModelSpaceError("complex kind needs constant metric signs on each J-plane");
      if (kind == StructureKind::para && s.eps[i] == s.eps[i + 1])
        throw ModelSpaceError("para kind needs opposite metric signs on each J-plane");
    }
  }
  validate(s);
  return s;
}

/// Standard model: positive signs first; for kind complex the negative
/// J-planes come last, for kind para the layout is (+,-,+,-,...).
template <class F = Rational>
ModelSpace<F> make_standard(std::size_t n, StructureKind kind, Signature sig) {
  if (sig.p + sig.q != n) throw ModelSpaceError("signature does not add up to n");
  std::vector<int> eps(n, 1);
  switch (kind) {
    case StructureKind::none:
      for (std::size_t i = sig.p; i < n; ++i) eps[i] = -1;
      break;
    case StructureKind::complex:
      if (n % 2 != 0) throw ModelSpaceError("a (para-)complex structure needs even dimension");
      if (sig.p % 2 != 0) throw ModelSpaceError("complex kind needs signature (2p, 2q)");
      for (std::size_t i = sig.p; i < n; ++i) eps[i] = -1;
      break;
    case StructureKind::para:
      if (n % 2 != 0) throw ModelSpaceError("a (para-)complex structure needs even dimension");
      if (sig.p != sig.q) throw ModelSpaceError("para kind needs neutral signature (n/2, n/2)");
      for (std::size_t i = 1; i < n; i += 2) eps[i] = -1;
      break;
  }
  return make_with_signs<F>(kind, std::move(eps));
}

/// Omega(x, y) = h(x, J y).
template <class F>
Tensor2<F> kaehler_form(const ModelSpace<F>& s) {
  const auto& J = s.structure();
  Tensor2<F> omega(s.n);
  for (std::size_t i = 0; i < s.n; ++i)
    for (std::size_t j = 0; j < s.n; ++j) omega(i, j) = F(s.eps[i]) * J(i, j);
  return omega;
}

/// The metric h as a 2-tensor.
template <class F>
Tensor2<F> metric_tensor(const ModelSpace<F>& s) {
  Tensor2<F> h(s.n);
  for (std::size_t i = 0; i < s.n; ++i) h(i, i) = F(s.eps[i]);
  return h;
}

// ---------------------------------------------------------------------------
// Structure groups

enum class Group { O, U, Ustar };

inline std::string to_string(Group g) {
  switch (g) {
    case Group::O: return "O";
    case Group::U: return "U";
    case Group::Ustar: return "U*";
  }
  return "?";
}

/// A closed linear group, given by its Lie algebra plus one representative
/// of each generator of the component group.  Invariance under both lists
/// is equivalent to invariance under the whole group.
template <class F>
struct GroupSpec {
  Group group = Group::O;
  std::vector<Matrix<F>> lie_algebra_basis;
  std::vector<Matrix<F>> component_reps;
  std::vector<std::string> rep_names;
};

/// Basis of {X : X^T H + H X = 0}, intersected with {XJ = JX} for U and U*.
template <class F>
std::vector<Matrix<F>> lie_algebra_basis(const ModelSpace<F>& s, Group group) {
  const std::size_t n = s.n;
  if (group != Group::O && !s.has_structure())
    throw ModelSpaceError("unitary group requested on a space without structure");
  auto at = [n](std::size_t i, std::size_t j) { return i * n + j; };
  Matrix<F> cons(0, n * n);
  std::vector<F> row(n * n);
  // (X^T H + H X)_{ij} = eps_j X_{ji} + eps_i X_{ij}
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      std::fill(row.begin(), row.end(), F(0));
      row[at(j, i)] += F(s.eps[j]);
      row[at(i, j)] += F(s.eps[i]);
      cons.append_row(row);
    }
  if (group != Group::O) {
    const auto& J = s.J;
    // (XJ - JX)_{ij} = sum_k X_{ik} J_{kj} - J_{ik} X_{kj}
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        std::fill(row.begin(), row.end(), F(0));
        for (std::size_t k = 0; k < n; ++k) {
          row[at(i, k)] += J(k, j);
          row[at(k, j)] -= J(i, k);
        }
        cons.append_row(row);
      }
  }
  const auto ker = kernel_basis(cons);
  std::vector<Matrix<F>> out;
  for (std::size_t b = 0; b < ker.dim(); ++b) {
    auto v = ker.vector(b);
    out.emplace_back(n, n, std::vector<F>(v.begin(), v.end()));
  }
  return out;
}

/// Finite list of representatives generating the component group.
///
/// O:  a reflection in the first positive direction, and in the last
///     negative direction when the metric is indefinite.
/// U:  identity for complex kind (connected); for para kind additionally
///     -Id on the first J-plane, which commutes with J and lies in the
///     determinant -1 component of U+ = GL(n/2, R).
/// U*: the U list plus g0 = diag(1,-1,1,-1,...), which anti-commutes with J.
template <class F>
std::vector<std::pair<std::string, Matrix<F>>> named_component_reps(const ModelSpace<F>& s, Group group) {
  const std::size_t n = s.n;
  std::vector<std::pair<std::string, Matrix<F>>> reps;
  reps.emplace_back("identity", Matrix<F>::identity(n));
  auto diag = [n](auto&& sign_of) {
    Matrix<F> m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = F(sign_of(i));
    return m;
  };
  if (group == Group::O) {
    std::size_t first_pos = n, last_neg = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (s.eps[i] > 0 && first_pos == n) first_pos = i;
      if (s.eps[i] < 0) last_neg = i;
    }
    const std::size_t first = first_pos < n ? first_pos : 0;
    reps.emplace_back("reflect e" + std::to_string(first + 1),
                      diag([&](std::size_t i) { return i == first ? -1 : 1; }));
    if (first_pos < n && last_neg < n)
      reps.emplace_back("reflect e" + std::to_string(last_neg + 1),
                        diag([&](std::size_t i) { return i == last_neg ? -1 : 1; }));
    return reps;
  }
  if (!s.has_structure()) throw ModelSpaceError("unitary group requested on a space without structure");
  if (s.kind == StructureKind::para)
    reps.emplace_back("negate plane e1,e2", diag([](std::size_t i) { return i < 2 ? -1 : 1; }));
  if (group == Group::Ustar)
    reps.emplace_back("g0", diag([](std::size_t i) { return i % 2 == 0 ? 1 : -1; }));
  return reps;
}

template <class F>
std::vector<Matrix<F>> component_reps(const ModelSpace<F>& s, Group group) {
  std::vector<Matrix<F>> out;
  for (auto& [name, m] : named_component_reps(s, group)) out.push_back(std::move(m));
  return out;
}

template <class F>
GroupSpec<F> make_group(const ModelSpace<F>& s, Group group) {
  GroupSpec<F> g;
  g.group = group;
  g.lie_algebra_basis = lie_algebra_basis(s, group);
  for (auto& [name, m] : named_component_reps(s, group)) {
    g.rep_names.push_back(name);
    g.component_reps.push_back(std::move(m));
  }
  return g;
}

}  // namespace curvlab
