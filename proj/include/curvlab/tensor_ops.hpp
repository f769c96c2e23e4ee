#pragma once

// Curvature-symmetry defect operators, Ricci contraction, the maps sigma and
// Psi, pull-backs, infinitesimal group actions and invariant contractions.

#include <algorithm>
#include <array>
#include <cstddef>
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

#include "curvlab/field.hpp"
#include "curvlab/matrix.hpp"
#include "curvlab/model_space.hpp"
#include "curvlab/tensor.hpp"

namespace curvlab {

/// A(x,y,z,w) + A(y,x,z,w)
template <class F>
Tensor4<F> defect_antisym(const Tensor4<F>& A) {
  const std::size_t n = A.dim();
  Tensor4<F> D(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        for (std::size_t w = 0; w < n; ++w) D(x, y, z, w) = A(x, y, z, w) + A(y, x, z, w);
  return D;
}

/// A(x,y,z,w) + A(y,z,x,w) + A(z,x,y,w)
template <class F>
Tensor4<F> defect_bianchi(const Tensor4<F>& A) {
  const std::size_t n = A.dim();
  Tensor4<F> D(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        for (std::size_t w = 0; w < n; ++w) D(x, y, z, w) = A(x, y, z, w) + A(y, z, x, w) + A(z, x, y, w);
  return D;
}

/// A(x,y,z,w) + A(x,y,w,z)
template <class F>
Tensor4<F> defect_riemann(const Tensor4<F>& A) {
  const std::size_t n = A.dim();
  Tensor4<F> D(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        for (std::size_t w = 0; w < n; ++w) D(x, y, z, w) = A(x, y, z, w) + A(x, y, w, z);
  return D;
}

/// Ric(x,y) = sum_{c,d} h^{cd} A(e_c, x, y, e_d)
template <class F>
Tensor2<F> ricci(const Tensor4<F>& A, const ModelSpace<F>& s) {
  const std::size_t n = A.dim();
  if (n != s.n) throw std::invalid_argument("tensor and space dimensions differ");
  Tensor2<F> ric(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      F acc(0);
      for (std::size_t c = 0; c < n; ++c) {
        const F& a = A(c, x, y, c);
        if (is_zero(a)) continue;
        if (s.eps[c] > 0) acc += a;
        else acc -= a;
      }
      ric(x, y) = acc;
    }
  return ric;
}

/// (Ric(x,y) - Ric(y,x)) / 2
template <class F>
Tensor2<F> alt_ricci(const Tensor4<F>& A, const ModelSpace<F>& s) {
  const auto ric = ricci(A, s);
  Tensor2<F> alt(A.dim());
  const F half = F(1) / F(2);
  for (std::size_t x = 0; x < A.dim(); ++x)
    for (std::size_t y = 0; y < A.dim(); ++y) alt(x, y) = (ric(x, y) - ric(y, x)) * half;
  return alt;
}

/// A(x,y,z,w) + A(x,y,w,z) - (2/n){Ric(y,x) - Ric(x,y)} h(z,w)
template <class F>
Tensor4<F> defect_weyl(const Tensor4<F>& A, const ModelSpace<F>& s) {
  const std::size_t n = A.dim();
  const auto ric = ricci(A, s);
  const F c = F(2) / F(static_cast<long>(n));
  Tensor4<F> D = defect_riemann(A);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const F skew = ric(y, x) - ric(x, y);
      if (is_zero(skew)) continue;
      for (std::size_t z = 0; z < n; ++z) {
        if (s.eps[z] > 0) D(x, y, z, z) -= c * skew;
        else D(x, y, z, z) += c * skew;
      }
    }
  return D;
}

namespace detail {

// Nonzero entries of each column of J: J e_c = sum_r J(r,c) e_r.
template <class F>
std::vector<std::vector<std::pair<std::size_t, F>>> columns_of(const Matrix<F>& M) {
  std::vector<std::vector<std::pair<std::size_t, F>>> cols(M.cols());
  for (std::size_t c = 0; c < M.cols(); ++c)
    for (std::size_t r = 0; r < M.rows(); ++r)
      if (!is_zero(M(r, c))) cols[c].emplace_back(r, M(r, c));
  return cols;
}

}  // namespace detail

/// A(x,y,J z,J w) as a tensor in (x,y,z,w).
template <class F>
Tensor4<F> apply_structure_last_pair(const Tensor4<F>& A, const ModelSpace<F>& s) {
  const std::size_t n = A.dim();
  const auto Jc = detail::columns_of(s.structure());
  Tensor4<F> B(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        for (std::size_t w = 0; w < n; ++w) {
          F acc(0);
          for (const auto& [m, jm] : Jc[z])
            for (const auto& [p, jp] : Jc[w]) field_traits<F>::add_mul(acc, jm * jp, A(x, y, m, p));
          B(x, y, z, w) = acc;
        }
  return B;
}

/// A(x,y,z,w) ± A(x,y,Jz,Jw); zero iff the (para-)Kähler identity holds.
template <class F>
Tensor4<F> defect_kaehler(const Tensor4<F>& A, const ModelSpace<F>& s) {
  const F pm(s.sign().pm);
  return A + pm * apply_structure_last_pair(A, s);
}

/// sigma(psi)(x,y,z,w) = 2psi(x,y)h(z,w) + psi(x,z)h(y,w) - psi(y,z)h(x,w)
///                       - psi(x,w)h(y,z) + psi(y,w)h(x,z)
template <class F>
Tensor4<F> sigma(const Tensor2<F>& psi, const ModelSpace<F>& s) {
  if (!is_antisymmetric(psi)) throw std::invalid_argument("sigma requires an antisymmetric 2-tensor");
  const std::size_t n = s.n;
  Tensor4<F> A(n);
  auto h = [&](std::size_t a, std::size_t b) { return a == b ? s.eps[a] : 0; };
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        for (std::size_t w = 0; w < n; ++w) {
          F v(0);
          if (int hz = h(z, w)) v += F(2 * hz) * psi(x, y);
          if (int hy = h(y, w)) v += F(hy) * psi(x, z);
          if (int hx = h(x, w)) v -= F(hx) * psi(y, z);
          if (int hyz = h(y, z)) v -= F(hyz) * psi(x, w);
          if (int hxz = h(x, z)) v += F(hxz) * psi(y, w);
          A(x, y, z, w) = v;
        }
  return A;
}

/// theta(x, J y) as a tensor in (x, y).
template <class F>
Tensor2<F> right_structure(const Tensor2<F>& theta, const ModelSpace<F>& s) {
  const std::size_t n = s.n;
  const auto Jc = detail::columns_of(s.structure());
  Tensor2<F> r(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      F acc(0);
      for (const auto& [m, jm] : Jc[y]) field_traits<F>::add_mul(acc, jm, theta(x, m));
      r(x, y) = acc;
    }
  return r;
}

/// Pull-back by an endomorphism: (T*theta)(v1,...) = theta(T v1, ...).
template <class F, std::size_t R>
Tensor<F, R> pullback(const Matrix<F>& T, const Tensor<F, R>& theta);

/// True iff psi is antisymmetric and J* psi = ± psi.
template <class F>
bool in_lambda2_pm(const Tensor2<F>& psi, const ModelSpace<F>& s) {
  if (!is_antisymmetric(psi)) return false;
  return pullback(s.structure(), psi) == F(s.sign().pm) * psi;
}

/// Psi(psi)(x,y,z,w) = 2h(x,Jy)psi(z,Jw) + 2h(z,Jw)psi(x,Jy) + h(x,Jz)psi(y,Jw)
///                     + h(y,Jw)psi(x,Jz) - h(x,Jw)psi(y,Jz) - h(y,Jz)psi(x,Jw)
template <class F>
Tensor4<F> psi_map(const Tensor2<F>& psi, const ModelSpace<F>& s) {
  if (!in_lambda2_pm(psi, s)) throw std::invalid_argument("psi_map requires psi in the ±-eigenspace of J* on 2-forms");
  const std::size_t n = s.n;
  const auto om = kaehler_form(s);         // h(a, J b)
  const auto pj = right_structure(psi, s);  // psi(a, J b)
  Tensor4<F> A(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        for (std::size_t w = 0; w < n; ++w) {
          F v = F(2) * om(x, y) * pj(z, w) + F(2) * om(z, w) * pj(x, y) + om(x, z) * pj(y, w) +
                om(y, w) * pj(x, z) - om(x, w) * pj(y, z) - om(y, z) * pj(x, w);
          A(x, y, z, w) = v;
        }
  return A;
}

// ---------------------------------------------------------------------------
// Group actions on flattened rank-k tensors.  The flat index of
// (i_1, ..., i_k) is sum_s i_s n^(k-s).

namespace detail {

inline std::size_t rank_of(std::size_t size, std::size_t n) {
  std::size_t k = 0, p = 1;
  while (p < size) {
    p *= n;
    ++k;
  }
  if (p != size) throw std::invalid_argument("vector length is not a power of n");
  return k;
}

}  // namespace detail

namespace detail {

template <class F>
void reset_to_zero(std::vector<F>& out, std::size_t size) {
  if (out.size() != size) out.assign(size, F(0));
  else
    for (auto& x : out)
      if (!field_traits<F>::is_zero(x)) x = F(0);
}

}  // namespace detail

/// (X.theta)(v1,...,vk) = sum_s theta(v1, ..., X v_s, ..., vk), written into `out`.
template <class F>
void lie_action_into(const Matrix<F>& X, std::span<const F> theta, std::size_t n, std::vector<F>& out) {
  const std::size_t k = detail::rank_of(theta.size(), n);
  std::vector<std::size_t> stride(k);
  for (std::size_t s = 0; s < k; ++s) stride[s] = ipow(n, k - 1 - s);
  // rows of X: X e_i = sum_m X(m,i) e_m, so theta(.., X e_i, ..) = sum_m X(m,i) theta(.., e_m, ..)
  std::vector<std::vector<std::pair<std::size_t, F>>> row_nz(n);
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t i = 0; i < n; ++i)
      if (!is_zero(X(m, i))) row_nz[m].emplace_back(i, X(m, i));
  detail::reset_to_zero(out, theta.size());
  for (std::size_t J = 0; J < theta.size(); ++J) {
    const F& t = theta[J];
    if (is_zero(t)) continue;
    for (std::size_t s = 0; s < k; ++s) {
      const std::size_t m = (J / stride[s]) % n;
      const std::size_t base = J - m * stride[s];
      for (const auto& [i, x] : row_nz[m]) field_traits<F>::add_mul(out[base + i * stride[s]], x, t);
    }
  }
}

/// (X.theta)(v1,...,vk) = sum_s theta(v1, ..., X v_s, ..., vk) on a flattened tensor.
template <class F>
std::vector<F> lie_action_flat(const Matrix<F>& X, std::span<const F> theta, std::size_t n) {
  std::vector<F> out;
  lie_action_into(X, theta, n, out);
  return out;
}

/// (T*theta)(v1,...,vk) = theta(T v1, ..., T vk), written into `out`.
template <class F>
void pullback_into(const Matrix<F>& T, std::span<const F> theta, std::size_t n, std::vector<F>& out) {
  const std::size_t k = detail::rank_of(theta.size(), n);
  std::vector<std::vector<std::pair<std::size_t, F>>> row_nz(n);
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t i = 0; i < n; ++i)
      if (!is_zero(T(m, i))) row_nz[m].emplace_back(i, T(m, i));
  detail::reset_to_zero(out, theta.size());
  std::vector<std::size_t> src(k);
  std::vector<std::size_t> pos(k);
  for (std::size_t J = 0; J < theta.size(); ++J) {
    const F& t = theta[J];
    if (is_zero(t)) continue;
    std::size_t rem = J;
    bool empty = false;
    for (std::size_t s = k; s-- > 0;) {
      src[s] = rem % n;
      rem /= n;
      if (row_nz[src[s]].empty()) empty = true;
    }
    if (empty) continue;
    // odometer over the product of nonzero rows
    std::fill(pos.begin(), pos.end(), 0);
    while (true) {
      F coeff = t;
      std::size_t I = 0;
      for (std::size_t s = 0; s < k; ++s) {
        const auto& [i, x] = row_nz[src[s]][pos[s]];
        coeff *= x;
        I = I * n + i;
      }
      out[I] += coeff;
      std::size_t s = k;
      while (s-- > 0) {
        if (++pos[s] < row_nz[src[s]].size()) break;
        pos[s] = 0;
      }
      if (s == static_cast<std::size_t>(-1)) break;
    }
  }
}

/// (T*theta)(v1,...,vk) = theta(T v1, ..., T vk) on a flattened tensor.
template <class F>
std::vector<F> pullback_flat(const Matrix<F>& T, std::span<const F> theta, std::size_t n) {
  std::vector<F> out;
  pullback_into(T, theta, n, out);
  return out;
}

template <class F, std::size_t R>
Tensor<F, R> pullback(const Matrix<F>& T, const Tensor<F, R>& theta) {
  return Tensor<F, R>(theta.dim(), pullback_flat<F>(T, theta.flat(), theta.dim()));
}

template <class F, std::size_t R>
Tensor<F, R> lie_action(const Matrix<F>& X, const Tensor<F, R>& theta) {
  return Tensor<F, R>(theta.dim(), lie_action_flat<F>(X, theta.flat(), theta.dim()));
}

// ---------------------------------------------------------------------------
// Invariant contractions

/// Permutation of the four slots, 0-based: pi[s] is the slot paired in position s.
using SlotPermutation = std::array<std::size_t, 4>;
/// Pair-word (a_1, a_2): 0 contracts with the metric, 1 with the Kähler form.
using PairWord = std::array<int, 2>;

/// kappa_a with both indices raised: h^{ij} for a = 0, Omega^{ij} for a = 1.
template <class F>
Tensor2<F> raised_kappa(const ModelSpace<F>& s, int a) {
  const std::size_t n = s.n;
  Tensor2<F> up(n);
  if (a == 0) {
    for (std::size_t i = 0; i < n; ++i) up(i, i) = s.h_inv(i, i);
    return up;
  }
  if (!s.has_structure()) throw ModelSpaceError("Kähler form contraction requested on a space without structure");
  const auto om = kaehler_form(s);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) up(i, j) = s.h_inv(i, i) * s.h_inv(j, j) * om(i, j);
  return up;
}

/// psi_{pi,a}(Theta) = kappa_{a1}^{i_pi(1) i_pi(2)} kappa_{a2}^{i_pi(3) i_pi(4)} Theta_{i1 i2 i3 i4}
template <class F>
F invariant_contraction(const Tensor4<F>& theta, const SlotPermutation& pi, const PairWord& a,
                        const ModelSpace<F>& s) {
  {
    std::array<bool, 4> seen{};
    for (auto p : pi) {
      if (p > 3 || seen[p]) throw std::invalid_argument("slot permutation must permute {0,1,2,3}");
      seen[p] = true;
    }
  }
  const auto k1 = raised_kappa(s, a[0]);
  const auto k2 = raised_kappa(s, a[1]);
  F total(0);
  std::array<std::size_t, 4> idx{};
  for (std::size_t f = 0; f < theta.size(); ++f) {
    const F& t = theta.data()[f];
    if (is_zero(t)) continue;
    idx = theta.multi_index(f);
    const F& c1 = k1(idx[pi[0]], idx[pi[1]]);
    if (is_zero(c1)) continue;
    const F& c2 = k2(idx[pi[2]], idx[pi[3]]);
    if (is_zero(c2)) continue;
    total += c1 * c2 * t;
  }
  return total;
}

/// All 24 permutations of the four slots, in lexicographic order.
inline std::vector<SlotPermutation> all_slot_permutations() {
  std::vector<SlotPermutation> out;
  SlotPermutation p{0, 1, 2, 3};
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace curvlab
