#pragma once

// Dense covariant tensors of rank 2 and 4 over V = F^n.
//
// Tensor2 stores theta(e_i, e_j) at flat index i*n + j; Tensor4 stores
// A(e_i, e_j, e_k, e_l) at ((i*n + j)*n + k)*n + l.

#include <array>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "curvlab/field.hpp"
#include "curvlab/matrix.hpp"

namespace curvlab {

inline std::size_t ipow(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  while (k--) r *= n;
  return r;
}

template <class F, std::size_t Rank>
class Tensor {
 public:
  static constexpr std::size_t rank = Rank;

  Tensor() = default;
  explicit Tensor(std::size_t n) : n_(n), data_(ipow(n, Rank), F(0)) {}
  Tensor(std::size_t n, std::vector<F> data) : n_(n), data_(std::move(data)) {
    if (data_.size() != ipow(n, Rank)) throw std::invalid_argument("tensor data size does not match n^rank");
  }
  Tensor(std::size_t n, std::span<const F> data) : Tensor(n, std::vector<F>(data.begin(), data.end())) {}

  std::size_t dim() const { return n_; }
  std::size_t size() const { return data_.size(); }

  template <class... I>
  F& operator()(I... idx) {
    static_assert(sizeof...(I) == Rank);
    return data_[flat_index(idx...)];
  }
  template <class... I>
  const F& operator()(I... idx) const {
    static_assert(sizeof...(I) == Rank);
    return data_[flat_index(idx...)];
  }

  template <class... I>
  std::size_t flat_index(I... idx) const {
    std::size_t f = 0;
    ((f = f * n_ + static_cast<std::size_t>(idx)), ...);
    return f;
  }

  std::array<std::size_t, Rank> multi_index(std::size_t flat) const {
    std::array<std::size_t, Rank> idx{};
    for (std::size_t s = Rank; s-- > 0;) {
      idx[s] = flat % n_;
      flat /= n_;
    }
    return idx;
  }

  std::span<const F> flat() const { return data_; }
  std::vector<F>& data() { return data_; }
  const std::vector<F>& data() const { return data_; }

  bool is_zero() const { return is_zero_vector<F>(data_); }

  friend bool operator==(const Tensor& a, const Tensor& b) {
    if (a.n_ != b.n_) return false;
    for (std::size_t i = 0; i < a.data_.size(); ++i)
      if (!field_traits<F>::equal(a.data_[i], b.data_[i])) return false;
    return true;
  }
  friend Tensor operator+(Tensor a, const Tensor& b) {
    a.check_same(b);
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }
  friend Tensor operator-(Tensor a, const Tensor& b) {
    a.check_same(b);
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
    return a;
  }
  friend Tensor operator*(const F& s, Tensor a) {
    for (auto& x : a.data_) x *= s;
    return a;
  }

 private:
  void check_same(const Tensor& b) const {
    if (n_ != b.n_) throw std::invalid_argument("tensor dimension mismatch");
  }

  std::size_t n_ = 0;
  std::vector<F> data_;
};

template <class F>
using Tensor2 = Tensor<F, 2>;
template <class F>
using Tensor4 = Tensor<F, 4>;

template <class F>
bool is_symmetric(const Tensor2<F>& t) {
  for (std::size_t i = 0; i < t.dim(); ++i)
    for (std::size_t j = i + 1; j < t.dim(); ++j)
      if (!field_traits<F>::equal(t(i, j), t(j, i))) return false;
  return true;
}

template <class F>
bool is_antisymmetric(const Tensor2<F>& t) {
  for (std::size_t i = 0; i < t.dim(); ++i)
    for (std::size_t j = i; j < t.dim(); ++j)
      if (!field_traits<F>::is_zero(t(i, j) + t(j, i))) return false;
  return true;
}

template <class F>
Tensor2<F> transpose(const Tensor2<F>& t) {
  Tensor2<F> r(t.dim());
  for (std::size_t i = 0; i < t.dim(); ++i)
    for (std::size_t j = 0; j < t.dim(); ++j) r(i, j) = t(j, i);
  return r;
}

/// Outer product (a ⊗ b)(x,y,z,w) = a(x,y) b(z,w).
template <class F>
Tensor4<F> outer(const Tensor2<F>& a, const Tensor2<F>& b) {
  const std::size_t n = a.dim();
  Tensor4<F> r(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (field_traits<F>::is_zero(a(i, j))) continue;
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) r(i, j, k, l) = a(i, j) * b(k, l);
    }
  return r;
}

/// e^i ⊗ e^j - e^j ⊗ e^i
template <class F>
Tensor2<F> elementary_2form(std::size_t n, std::size_t i, std::size_t j) {
  Tensor2<F> t(n);
  t(i, j) += F(1);
  t(j, i) -= F(1);
  return t;
}

}  // namespace curvlab
