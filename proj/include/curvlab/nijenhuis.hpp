#pragma once

// Nijenhuis tensor of a twisted structure Theta^{-1} J Theta on a flat
// coordinate patch, evaluated from first-order jets.

#include <array>
#include <cmath>
#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "curvlab/field.hpp"
#include "curvlab/linalg.hpp"
#include "curvlab/matrix.hpp"
#include "curvlab/model_space.hpp"
#include "curvlab/report.hpp"
#include "curvlab/tensor_ops.hpp"

namespace curvlab {

/// Value and gradient of a scalar function at a point.
template <class F>
struct ScalarJet {
  F value;
  std::vector<F> grad;
};

template <class F>
using ScalarField = std::function<ScalarJet<F>(std::span<const F>)>;

template <class F>
ScalarField<F> constant_scalar(std::size_t n, F c) {
  return [n, c](std::span<const F>) { return ScalarJet<F>{c, std::vector<F>(n, F(0))}; };
}

/// theta(x) = slope * x_k
template <class F>
ScalarField<F> linear_scalar(std::size_t n, std::size_t k, F slope) {
  if (k >= n) throw std::out_of_range("coordinate index out of range");
  return [n, k, slope](std::span<const F> p) {
    std::vector<F> g(n, F(0));
    g[k] = slope;
    return ScalarJet<F>{slope * p[k], std::move(g)};
  };
}

/// Value and coordinate partials of a matrix-valued function at a point.
template <class F>
struct MatrixJet {
  Matrix<F> value;
  std::vector<Matrix<F>> partial;  // partial[a] = d/dx_a
};

/// Value and coordinate partials of a vector field at a point.
template <class F>
struct VectorJet {
  std::vector<F> value;
  std::vector<std::vector<F>> partial;  // partial[a][k] = d/dx_a of component k
};

/// An n×n matrix of scalar functions, each carrying its first-order jet.
template <class F>
class EndomorphismField {
 public:
  EndomorphismField(std::size_t n, std::vector<ScalarField<F>> entries) : n_(n), entries_(std::move(entries)) {
    if (entries_.size() != n * n) throw std::invalid_argument("endomorphism field needs n*n entries");
  }

  static EndomorphismField constant(const Matrix<F>& m) {
    std::vector<ScalarField<F>> e;
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) e.push_back(constant_scalar<F>(m.rows(), m(i, j)));
    return EndomorphismField(m.rows(), std::move(e));
  }

  std::size_t dim() const { return n_; }

  MatrixJet<F> jet_at(std::span<const F> point) const {
    if (point.size() != n_) throw std::invalid_argument("query point has wrong dimension");
    MatrixJet<F> out{Matrix<F>(n_, n_), std::vector<Matrix<F>>(n_, Matrix<F>(n_, n_))};
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) {
        const auto jet = entries_[i * n_ + j](point);
        if (jet.grad.size() != n_) throw std::invalid_argument("missing jet data for entry");
        out.value(i, j) = jet.value;
        for (std::size_t a = 0; a < n_; ++a) out.partial[a](i, j) = jet.grad[a];
      }
    return out;
  }

 private:
  std::size_t n_;
  std::vector<ScalarField<F>> entries_;
};

enum class RotationType { circular, hyperbolic };

inline std::string to_string(RotationType r) { return r == RotationType::circular ? "circular" : "hyperbolic"; }

inline RotationType parse_rotation(const std::string& s) {
  if (s == "circular") return RotationType::circular;
  if (s == "hyperbolic") return RotationType::hyperbolic;
  throw std::invalid_argument("unknown rotation type: " + s);
}

namespace detail {

// (c, s) = (cos t, sin t) or (cosh t, sinh t).  Exact fields only support t = 0.
template <class F>
std::pair<F, F> rotation_pair(RotationType type, const F& t) {
  if constexpr (field_traits<F>::is_exact) {
    if (!is_zero(t))
      throw std::domain_error("exact mode evaluates rotations only where the angle vanishes");
    return {F(1), F(0)};
  } else {
    if (type == RotationType::circular) return {std::cos(t), std::sin(t)};
    return {std::cosh(t), std::sinh(t)};
  }
}

}  // namespace detail

/// Theta(x) rotating the (i, j) coordinate plane by theta(x) and fixing the
/// other axes: Theta e_i = c e_i + s e_j, Theta e_j = ∓s e_i + c e_j, with the
/// lower sign for hyperbolic rotations.
template <class F>
EndomorphismField<F> twist(const ModelSpace<F>& s, ScalarField<F> theta, std::pair<std::size_t, std::size_t> plane,
                           RotationType type) {
  const auto [i, j] = plane;
  const std::size_t n = s.n;
  if (i >= n || j >= n || i == j) throw std::invalid_argument("twist plane needs two distinct coordinate indices");
  const bool definite = s.eps[i] == s.eps[j];
  if (type == RotationType::circular && !definite)
    throw ModelSpaceError("circular rotation of a mixed-signature plane is not an isometry");
  if (type == RotationType::hyperbolic && definite)
    throw ModelSpaceError("hyperbolic rotation of a definite plane is not an isometry");

  auto shared = std::make_shared<ScalarField<F>>(std::move(theta));
  // entry(r, c) as a function of (cos-like, sin-like) and their derivatives
  auto entry = [shared, type, n](int which, F sign) -> ScalarField<F> {
    return [shared, type, n, which, sign](std::span<const F> p) {
      const auto t = (*shared)(p);
      if (t.grad.size() != n) throw std::invalid_argument("missing jet data for twist angle");
      const auto [c, sn] = detail::rotation_pair(type, t.value);
      // d cos = -sin dt, d sin = cos dt; d cosh = sinh dt, d sinh = cosh dt
      const F dc = type == RotationType::circular ? F(-sn) : F(sn);
      const F v = which == 0 ? c : sn;
      const F dv = which == 0 ? dc : c;
      ScalarJet<F> out{sign * v, std::vector<F>(n)};
      for (std::size_t a = 0; a < n; ++a) out.grad[a] = sign * dv * t.grad[a];
      return out;
    };
  };

  std::vector<ScalarField<F>> e;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      if ((r == i && c == i) || (r == j && c == j)) e.push_back(entry(0, F(1)));
      else if (r == j && c == i) e.push_back(entry(1, F(1)));
      else if (r == i && c == j) e.push_back(entry(1, F(type == RotationType::circular ? -1 : 1)));
      else e.push_back(constant_scalar<F>(n, r == c ? F(1) : F(0)));
    }
  return EndomorphismField<F>(n, std::move(e));
}

/// Theta(P)^T H Theta(P) == H
template <class F>
bool is_isometry_at(const EndomorphismField<F>& theta, const ModelSpace<F>& s, std::span<const F> point) {
  const auto T = theta.jet_at(point).value;
  return T.transpose() * s.gram() * T == s.gram();
}

/// Flat coordinate patch with constant metric and structure Theta^{-1} J Theta.
template <class F>
struct Patch {
  ModelSpace<F> space;
  EndomorphismField<F> theta;
  // absent means the constant metric of `space`
  std::optional<EndomorphismField<F>> metric;
};

template <class F>
Patch<F> make_patch(const ModelSpace<F>& s, EndomorphismField<F> theta) {
  if (theta.dim() != s.n) throw std::invalid_argument("twist and space dimensions differ");
  return Patch<F>{s, std::move(theta), std::nullopt};
}

/// Jet of J^Theta = Theta^{-1} J Theta:
/// d(J^Theta) = -Theta^{-1} dTheta Theta^{-1} J Theta + Theta^{-1} J dTheta.
template <class F>
MatrixJet<F> structure_jet(const Patch<F>& patch, std::span<const F> point) {
  const auto& J = patch.space.structure();
  const auto th = patch.theta.jet_at(point);
  const auto inv = inverse(th.value);
  const Matrix<F> invJ = inv * J;
  MatrixJet<F> out{invJ * th.value, {}};
  for (const auto& d : th.partial) out.partial.push_back(-(inv * d * out.value) + invJ * d);
  return out;
}

template <class F>
VectorJet<F> coordinate_field(std::size_t n, std::size_t k) {
  VectorJet<F> v{std::vector<F>(n, F(0)), std::vector<std::vector<F>>(n, std::vector<F>(n, F(0)))};
  v.value.at(k) = F(1);
  return v;
}

/// Jet of M X from the jets of M and X.
template <class F>
VectorJet<F> apply(const MatrixJet<F>& M, const VectorJet<F>& X) {
  VectorJet<F> out{M.value.apply(X.value), {}};
  if (M.partial.size() != X.partial.size()) throw std::invalid_argument("missing jet data");
  for (std::size_t a = 0; a < M.partial.size(); ++a) {
    auto v = M.partial[a].apply(X.value);
    const auto w = M.value.apply(X.partial[a]);
    for (std::size_t k = 0; k < v.size(); ++k) v[k] += w[k];
    out.partial.push_back(std::move(v));
  }
  return out;
}

/// [X,Y]^k = X^i d_i Y^k - Y^i d_i X^k at the jet point.
template <class F>
std::vector<F> bracket_at(const VectorJet<F>& X, const VectorJet<F>& Y) {
  const std::size_t n = X.value.size();
  if (Y.value.size() != n) throw std::invalid_argument("vector fields of different dimension");
  if (X.partial.size() != n || Y.partial.size() != n) throw std::invalid_argument("missing jet data");
  std::vector<F> out(n, F(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (X.partial[i].size() != n || Y.partial[i].size() != n) throw std::invalid_argument("missing jet data");
    for (std::size_t k = 0; k < n; ++k) {
      field_traits<F>::add_mul(out[k], X.value[i], Y.partial[i][k]);
      field_traits<F>::sub_mul(out[k], Y.value[i], X.partial[i][k]);
    }
  }
  return out;
}

/// The four signed bracket terms of N(x, y) and their sum:
/// [x,y], ∓J[Jx,y], ∓J[x,Jy], ±[Jx,Jy] (upper sign para).
template <class F>
struct NijenhuisBreakdown {
  std::array<std::vector<F>, 4> terms;
  std::vector<F> total;
};

template <class F>
NijenhuisBreakdown<F> nijenhuis_at(const Patch<F>& patch, std::size_t x, std::size_t y, std::span<const F> point) {
  const auto& s = patch.space;
  if (!s.has_structure()) throw ModelSpaceError("Nijenhuis tensor requires a (para-)complex structure");
  if (x >= s.n || y >= s.n) throw std::out_of_range("coordinate index out of range");
  const F pm(s.sign().pm);
  const auto J = structure_jet(patch, point);
  const auto X = coordinate_field<F>(s.n, x);
  const auto Y = coordinate_field<F>(s.n, y);
  const auto JX = apply(J, X);
  const auto JY = apply(J, Y);

  auto scaled = [](std::vector<F> v, const F& c) {
    for (auto& e : v) e *= c;
    return v;
  };
  NijenhuisBreakdown<F> out;
  out.terms[0] = bracket_at(X, Y);
  out.terms[1] = scaled(J.value.apply(bracket_at(JX, Y)), -pm);
  out.terms[2] = scaled(J.value.apply(bracket_at(X, JY)), -pm);
  out.terms[3] = scaled(bracket_at(JX, JY), pm);
  out.total.assign(s.n, F(0));
  for (const auto& t : out.terms)
    for (std::size_t k = 0; k < s.n; ++k) out.total[k] += t[k];
  return out;
}

/// Confirms the patch is flat (constant metric, vanishing Christoffel symbols,
/// hence zero curvature, which satisfies the Kähler identity) and records
/// whether the twisted structure is integrable at the sample points.
template <class F>
VerificationReport flat_curvature_check(const Patch<F>& patch, const std::vector<std::vector<F>>& sample_points) {
  const auto& s = patch.space;
  if (!s.has_structure()) throw ModelSpaceError("flat curvature check requires a (para-)complex structure");
  const std::size_t n = s.n;
  std::size_t nonzero_christoffel = 0;
  if (patch.metric) {
    for (const auto& p : sample_points) {
      const auto g = patch.metric->jet_at(std::span<const F>(p));
      for (const auto& d : g.partial) {
        // Christoffel symbols are linear in the metric derivatives; any nonzero
        // derivative of a diagonal-constant-signature metric is outside scope
        if (!d.is_zero()) ++nonzero_christoffel;
      }
    }
    if (nonzero_christoffel) throw std::domain_error("non-constant metric is out of scope for the flat patch check");
  }

  const Tensor4<F> curvature(n);
  const bool kaehler_ok = defect_kaehler(curvature, s).is_zero();

  bool structure_ok = true;
  bool integrable = true;
  std::size_t nonzero_pairs = 0;
  for (const auto& p : sample_points) {
    const auto J = structure_jet(patch, std::span<const F>(p));
    if (!(J.value * J.value == F(s.sign().pm) * Matrix<F>::identity(n))) structure_ok = false;
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = x + 1; y < n; ++y)
        if (!is_zero_vector<F>(nijenhuis_at(patch, x, y, std::span<const F>(p)).total)) {
          integrable = false;
          ++nonzero_pairs;
        }
  }

  VerificationReport r;
  r.claim = "flat-patch";
  r.space = describe(s);
  r.mode = field_traits<F>::is_exact ? std::string("exact") : float_mode_label(float_tolerance());
  r.quantities["sample_points"] = sample_points.size();
  r.quantities["metric_constant"] = true;
  r.quantities["nonzero_christoffel_symbols"] = 0;
  r.quantities["curvature_zero"] = true;
  r.quantities["kaehler_identity_holds"] = kaehler_ok;
  r.quantities["structure_squares_correctly"] = structure_ok;
  r.quantities["nonzero_nijenhuis_pairs"] = nonzero_pairs;
  r.quantities["structure_integrable"] = integrable;
  r.pass = kaehler_ok && structure_ok;
  r.notes.push_back(integrable ? "structure is integrable at the sample points"
                               : "curvature satisfies the Kähler identity but the structure is not integrable");
  return r;
}

}  // namespace curvlab
