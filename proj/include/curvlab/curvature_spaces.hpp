#pragma once

// The curvature tensor spaces A ⊃ W ⊃ R and their distinguished subspaces,
// all realized as exact kernels or spans inside ⊗^4 V* (or ⊗^2 V*).

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "curvlab/linalg.hpp"
#include "curvlab/model_space.hpp"
#include "curvlab/tensor.hpp"
#include "curvlab/tensor_ops.hpp"

namespace curvlab {

/// Diagonal of the induced inner product on ⊗^k V*: prod_s h^{i_s i_s}.
template <class F>
std::vector<F> tensor_gram(const ModelSpace<F>& s, std::size_t k) {
  std::vector<F> g(ipow(s.n, k));
  for (std::size_t f = 0; f < g.size(); ++f) {
    int sign = 1;
    std::size_t rem = f;
    for (std::size_t t = 0; t < k; ++t) {
      sign *= s.eps[rem % s.n];
      rem /= s.n;
    }
    g[f] = F(sign);
  }
  return g;
}

namespace detail {

template <class F, class Fn>
auto on_tensor4(const ModelSpace<F>& s, Fn fn) {
  return [&s, fn](std::span<const F> v) { return fn(Tensor4<F>(s.n, v)).data(); };
}

template <class F, class Fn>
auto on_tensor2(const ModelSpace<F>& s, Fn fn) {
  return [&s, fn](std::span<const F> v) { return fn(Tensor2<F>(s.n, v)).data(); };
}

}  // namespace detail

/// Tensors antisymmetric in their first pair: span{e_ijkl - e_jikl : i < j}.
template <class F>
Subspace<F> first_pair_antisymmetric(std::size_t n) {
  const std::size_t N = ipow(n, 4);
  Matrix<F> vecs(0, N);
  std::vector<F> v(N, F(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          const std::size_t a = ((i * n + j) * n + k) * n + l;
          const std::size_t b = ((j * n + i) * n + k) * n + l;
          v[a] = F(1);
          v[b] = F(-1);
          vecs.append_row(v);
          v[a] = F(0);
          v[b] = F(0);
        }
  if (vecs.rows() == 0) return Subspace<F>(N);
  return Subspace<F>::span(std::move(vecs));
}

/// Affine curvature tensors: first-pair antisymmetry and the Bianchi identity.
template <class F>
Subspace<F> build_A(const ModelSpace<F>& s) {
  return restrict_kernel(first_pair_antisymmetric<F>(s.n),
                         detail::on_tensor4(s, [](const Tensor4<F>& A) { return defect_bianchi(A); }));
}

/// Weyl curvature tensors: A plus the Weyl symmetry in the last pair.
template <class F>
Subspace<F> build_W(const ModelSpace<F>& s, const Subspace<F>& A) {
  return restrict_kernel(A, detail::on_tensor4(s, [&s](const Tensor4<F>& T) { return defect_weyl(T, s); }));
}
template <class F>
Subspace<F> build_W(const ModelSpace<F>& s) {
  return build_W(s, build_A(s));
}

/// Riemannian curvature tensors: A plus antisymmetry in the last pair.
template <class F>
Subspace<F> build_R(const ModelSpace<F>& s, const Subspace<F>& A) {
  return restrict_kernel(A, detail::on_tensor4(s, [](const Tensor4<F>& T) { return defect_riemann(T); }));
}
template <class F>
Subspace<F> build_R(const ModelSpace<F>& s) {
  return build_R(s, build_A(s));
}

/// Weyl conformal curvature tensors ker(Ric) ∩ R.
template <class F>
Subspace<F> build_P_conformal(const ModelSpace<F>& s, const Subspace<F>& R) {
  return restrict_kernel(R, detail::on_tensor4(s, [&s](const Tensor4<F>& T) { return ricci(T, s); }));
}
template <class F>
Subspace<F> build_P_conformal(const ModelSpace<F>& s) {
  return build_P_conformal(s, build_R(s));
}

/// Standard basis e^i ⊗ e^j - e^j ⊗ e^i (i < j) of Λ^2.
template <class F>
std::vector<Tensor2<F>> lambda2_basis(std::size_t n) {
  std::vector<Tensor2<F>> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) out.push_back(elementary_2form<F>(n, i, j));
  return out;
}

/// Span of sigma over a basis of the given 2-form subspace.
template <class F>
Subspace<F> sigma_image(const ModelSpace<F>& s, const Subspace<F>& forms) {
  return image(forms, ipow(s.n, 4), detail::on_tensor2(s, [&s](const Tensor2<F>& t) { return sigma(t, s); }));
}

/// Span of Psi over a basis of the given subspace of Λ^2_±.
template <class F>
Subspace<F> psi_image(const ModelSpace<F>& s, const Subspace<F>& forms) {
  return image(forms, ipow(s.n, 4), detail::on_tensor2(s, [&s](const Tensor2<F>& t) { return psi_map(t, s); }));
}

template <class F>
Subspace<F> lambda2(std::size_t n) {
  Matrix<F> m(0, n * n);
  for (const auto& t : lambda2_basis<F>(n)) m.append_row(t.flat());
  if (m.rows() == 0) return Subspace<F>(n * n);
  return Subspace<F>::span(std::move(m));
}

template <class F>
Subspace<F> sym2(std::size_t n) {
  Matrix<F> m(0, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Tensor2<F> t(n);
      t(i, j) += F(1);
      t(j, i) += F(1);
      m.append_row(t.flat());
    }
  return Subspace<F>::span(std::move(m));
}

/// The complement sigma(Λ^2) of R inside W.
template <class F>
Subspace<F> build_frakP(const ModelSpace<F>& s) {
  return sigma_image(s, lambda2<F>(s.n));
}

/// base ∩ {A : A(x,y,z,w) = ∓ A(x,y,Jz,Jw)}.
template <class F>
Subspace<F> kaehler_subspace(const Subspace<F>& base, const ModelSpace<F>& s) {
  if (!s.has_structure()) throw ModelSpaceError("Kähler identity requires a (para-)complex structure");
  return restrict_kernel(base, detail::on_tensor4(s, [&s](const Tensor4<F>& T) { return defect_kaehler(T, s); }));
}

/// The six pieces of ⊗^2 V* = S^2 ⊕ Λ^2 under U*, in the order
/// R·h, S^2_{0,∓}, S^2_±, R·Omega, Λ^2_{0,∓}, Λ^2_±.
template <class F>
struct TwoTensorPieces {
  Subspace<F> Rh, S2_0, S2_pm, ROmega, L2_0, L2_pm;

  std::vector<const Subspace<F>*> all() const { return {&Rh, &S2_0, &S2_pm, &ROmega, &L2_0, &L2_pm}; }
  static std::vector<std::string> names() { return {"R.h", "S2_0", "S2_pm", "R.Omega", "L2_0", "L2_pm"}; }
};

template <class F>
TwoTensorPieces<F> decompose_two_tensors(const ModelSpace<F>& s) {
  if (!s.has_structure()) throw ModelSpaceError("two-tensor decomposition requires a (para-)complex structure");
  const std::size_t n = s.n;
  const auto sg = s.sign();
  const auto gram = tensor_gram(s, 2);
  const auto h = metric_tensor(s);
  const auto om = kaehler_form(s);

  auto eigen = [&](int lambda) {
    return [&s, n, lambda](std::span<const F> v) {
      auto pulled = pullback_flat<F>(s.J, v, n);
      for (std::size_t i = 0; i < pulled.size(); ++i) pulled[i] -= F(lambda) * v[i];
      return pulled;
    };
  };
  auto perp_to = [&gram](const Tensor2<F>& t) {
    return [&gram, t](std::span<const F> v) { return std::vector<F>{bilinear<F>(v, t.flat(), gram)}; };
  };

  const auto S2 = sym2<F>(n);
  const auto L2 = lambda2<F>(n);
  TwoTensorPieces<F> p;
  p.Rh = Subspace<F>::span(n * n, {h.data()});
  p.S2_0 = restrict_kernel(restrict_kernel(S2, eigen(sg.mp)), perp_to(h));
  p.S2_pm = restrict_kernel(S2, eigen(sg.pm));
  p.ROmega = Subspace<F>::span(n * n, {om.data()});
  p.L2_0 = restrict_kernel(restrict_kernel(L2, eigen(sg.mp)), perp_to(om));
  p.L2_pm = restrict_kernel(L2, eigen(sg.pm));
  return p;
}

/// Everything the verifiers need for one model space.
template <class F>
struct CurvatureSpaceCatalog {
  ModelSpace<F> space;
  Subspace<F> A, W, R;
  Subspace<F> P_conformal, frakP;
  bool has_structure = false;
  // populated only when the space carries a structure
  Subspace<F> K_W, K_R;
  TwoTensorPieces<F> two_tensor_pieces;
  Subspace<F> W11, W12, W13, W9img;
};

template <class F>
CurvatureSpaceCatalog<F> build_catalog(const ModelSpace<F>& s) {
  CurvatureSpaceCatalog<F> c;
  c.space = s;
  c.A = build_A(s);
  c.W = build_W(s, c.A);
  c.R = build_R(s, c.A);
  c.P_conformal = build_P_conformal(s, c.R);
  c.frakP = build_frakP(s);
  c.has_structure = s.has_structure();
  if (c.has_structure) {
    c.K_W = kaehler_subspace(c.W, s);
    c.K_R = kaehler_subspace(c.R, s);
    c.two_tensor_pieces = decompose_two_tensors(s);
    c.W11 = sigma_image(s, c.two_tensor_pieces.ROmega);
    c.W12 = sigma_image(s, c.two_tensor_pieces.L2_0);
    c.W13 = sigma_image(s, c.two_tensor_pieces.L2_pm);
    c.W9img = psi_image(s, c.two_tensor_pieces.L2_pm);
  }
  return c;
}

}  // namespace curvlab
