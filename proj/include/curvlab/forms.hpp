#pragma once

// Exterior forms stored by their coefficients on sorted index tuples, with
// the shuffle-sum wedge product (no 1/k!l! factors).

#include <bit>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "curvlab/field.hpp"
#include "curvlab/linalg.hpp"
#include "curvlab/model_space.hpp"
#include "curvlab/tensor.hpp"

namespace curvlab {

namespace detail {

// Sorted k-subsets of {0..n-1} as bitmasks, in lexicographic order of the
// index tuples, plus the inverse lookup.
struct SubsetIndex {
  std::vector<std::uint32_t> masks;
  std::vector<int> position;  // mask -> index, -1 if not a k-subset

  SubsetIndex(std::size_t n, std::size_t k) : position(std::size_t{1} << n, -1) {
    std::vector<std::size_t> idx(k);
    auto emit = [&](auto&& self, std::size_t start, std::size_t depth) -> void {
      if (depth == k) {
        std::uint32_t m = 0;
        for (auto i : idx) m |= std::uint32_t{1} << i;
        position[m] = static_cast<int>(masks.size());
        masks.push_back(m);
        return;
      }
      for (std::size_t i = start; i < n; ++i) {
        idx[depth] = i;
        self(self, i + 1, depth + 1);
      }
    };
    emit(emit, 0, 0);
  }
};

}  // namespace detail

/// A k-form on F^n: coefficients on e^{i_1} ∧ ... ∧ e^{i_k}, i_1 < ... < i_k.
template <class F>
class FormK {
 public:
  FormK(std::size_t n, std::size_t degree) : n_(n), k_(degree), index_(n, degree) {
    if (n > 16) throw std::invalid_argument("forms support n <= 16");
    if (degree > n) throw std::invalid_argument("form degree exceeds dimension");
    coeffs_.assign(index_.masks.size(), F(0));
  }

  /// The 2-form with coefficients theta(e_i, e_j), i < j, of an antisymmetric tensor.
  static FormK from_tensor2(const Tensor2<F>& theta) {
    if (!is_antisymmetric(theta)) throw std::invalid_argument("2-form requires an antisymmetric tensor");
    FormK f(theta.dim(), 2);
    for (std::size_t i = 0; i < theta.dim(); ++i)
      for (std::size_t j = i + 1; j < theta.dim(); ++j) f.at_mask(bit(i) | bit(j)) = theta(i, j);
    return f;
  }

  std::size_t dim() const { return n_; }
  std::size_t degree() const { return k_; }
  std::size_t size() const { return coeffs_.size(); }
  std::uint32_t mask(std::size_t pos) const { return index_.masks[pos]; }

  F& operator[](std::size_t pos) { return coeffs_[pos]; }
  const F& operator[](std::size_t pos) const { return coeffs_[pos]; }

  /// Coefficient on the sorted tuple given as a bitmask.
  F& at_mask(std::uint32_t m) { return coeffs_.at(lookup(m)); }
  const F& at_mask(std::uint32_t m) const { return coeffs_.at(lookup(m)); }

  /// Value on (e_{i_1}, ..., e_{i_k}) for arbitrary (possibly unsorted) indices.
  F evaluate(const std::vector<std::size_t>& idx) const {
    if (idx.size() != k_) throw std::invalid_argument("wrong number of arguments for form");
    std::uint32_t m = 0;
    int inversions = 0;
    for (std::size_t a = 0; a < idx.size(); ++a) {
      if (m & bit(idx[a])) return F(0);
      m |= bit(idx[a]);
      for (std::size_t b = a + 1; b < idx.size(); ++b)
        if (idx[a] > idx[b]) ++inversions;
    }
    return inversions % 2 ? -at_mask(m) : at_mask(m);
  }

  const std::vector<F>& coefficients() const { return coeffs_; }
  bool is_zero() const { return is_zero_vector<F>(coeffs_); }

  friend bool operator==(const FormK& a, const FormK& b) {
    return a.n_ == b.n_ && a.k_ == b.k_ && a.coeffs_ == b.coeffs_;
  }

 private:
  static std::uint32_t bit(std::size_t i) { return std::uint32_t{1} << i; }
  std::size_t lookup(std::uint32_t m) const {
    if (m >= index_.position.size() || index_.position[m] < 0) throw std::out_of_range("not a sorted index tuple of this degree");
    return static_cast<std::size_t>(index_.position[m]);
  }

  std::size_t n_;
  std::size_t k_;
  detail::SubsetIndex index_;
  std::vector<F> coeffs_;
};

/// (a ∧ b)(v_1..v_{k+l}) = sum over shuffles of sign * a(...) b(...).
template <class F>
FormK<F> wedge(const FormK<F>& a, const FormK<F>& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("wedge of forms on different spaces");
  if (a.degree() + b.degree() > a.dim()) throw std::invalid_argument("wedge degree exceeds dimension");
  FormK<F> out(a.dim(), a.degree() + b.degree());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (is_zero(a[i])) continue;
    const std::uint32_t J = a.mask(i);
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (is_zero(b[j])) continue;
      const std::uint32_t K = b.mask(j);
      if (J & K) continue;
      // sign of the shuffle sorting (J, K): count pairs j in J, k in K with j > k
      int inversions = 0;
      for (std::uint32_t rest = J; rest; rest &= rest - 1) {
        const int top = std::countr_zero(rest);
        inversions += std::popcount(K & ((std::uint32_t{1} << top) - 1));
      }
      const F term = a[i] * b[j];
      if (inversions % 2) out.at_mask(J | K) -= term;
      else out.at_mask(J | K) += term;
    }
  }
  return out;
}

/// Omega wedged with itself m times (m = 0 gives the constant 1).
template <class F>
FormK<F> omega_power(const ModelSpace<F>& s, std::size_t m) {
  if (2 * m > s.n) throw std::invalid_argument("power of the Kähler form exceeds top degree");
  FormK<F> out(s.n, 0);
  out[0] = F(1);
  const auto omega = FormK<F>::from_tensor2(kaehler_form(s));
  for (std::size_t i = 0; i < m; ++i) out = wedge(out, omega);
  return out;
}

/// Matrix of theta -> theta ∧ omega_power(s, m) from Λ^2 to Λ^{2+2m}, in
/// the sorted-tuple coordinates of each side (columns index Λ^2).
template <class F>
Matrix<F> lefschetz_matrix(const ModelSpace<F>& s, std::size_t m) {
  const auto power = omega_power(s, m);
  FormK<F> probe(s.n, 2);
  Matrix<F> out(FormK<F>(s.n, 2 + 2 * m).size(), probe.size());
  for (std::size_t c = 0; c < probe.size(); ++c) {
    FormK<F> e(s.n, 2);
    e[c] = F(1);
    const auto img = wedge(e, power);
    for (std::size_t r = 0; r < img.size(); ++r) out(r, c) = img[r];
  }
  return out;
}

/// Omega-orthogonal complement inside Λ^2, in sorted-tuple coordinates,
/// for the inner product induced from ⊗^2 V*.
template <class F>
Subspace<F> kaehler_orthogonal_2forms(const ModelSpace<F>& s) {
  const auto omega = FormK<F>::from_tensor2(kaehler_form(s));
  Matrix<F> row(1, omega.size());
  for (std::size_t c = 0; c < omega.size(); ++c) {
    const std::uint32_t m = omega.mask(c);
    const int i = std::countr_zero(m);
    const int j = std::countr_zero(m & (m - 1));
    row(0, c) = F(s.eps[i] * s.eps[j]) * omega[c];
  }
  return kernel_basis(row);
}

}  // namespace curvlab
