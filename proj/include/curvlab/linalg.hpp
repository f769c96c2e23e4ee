#pragma once

// Exact dense linear algebra: echelon forms, kernels, and the lattice of
// subspaces of F^N, including orthogonality for indefinite Gram forms.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "curvlab/field.hpp"
#include "curvlab/matrix.hpp"

namespace curvlab {

template <class F>
struct RrefResult {
  Matrix<F> matrix;  // same shape as the input, zero rows at the bottom
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

namespace detail {

// Zero test used during elimination.  Exact fields compare with zero; the
// floating field uses the thread tolerance relative to the input scale.
template <class F>
struct Negligible {
  double threshold = 0.0;
  bool operator()(const F& x) const {
    if constexpr (field_traits<F>::is_exact) {
      return field_traits<F>::is_zero(x);
    } else {
      return std::abs(x) <= threshold;
    }
  }
};

template <class F>
Negligible<F> make_negligible(const Matrix<F>& m) {
  Negligible<F> z;
  if constexpr (!field_traits<F>::is_exact) {
    double scale = 1.0;
    for (const auto& x : m.data()) scale = std::max(scale, std::abs(x));
    z.threshold = float_tolerance() * scale;
  }
  return z;
}

}  // namespace detail

/// Reduced row-echelon form by Gauss-Jordan elimination.
///
/// Exact fields pick, among candidate pivot rows, the one with the fewest
/// nonzeros (limits fill-in on the sparse constraint systems this library
/// builds).  The floating field uses partial pivoting.  The reduced form
/// itself is unique, so the pivot rule never changes the result.
template <class F>
RrefResult<F> rref(Matrix<F> m) {
  using T = field_traits<F>;
  const std::size_t R = m.rows();
  const std::size_t C = m.cols();
  const auto negligible = detail::make_negligible(m);

  std::vector<std::size_t> nnz(R, 0);
  for (std::size_t i = 0; i < R; ++i)
    for (std::size_t j = 0; j < C; ++j)
      if (!negligible(m(i, j))) ++nnz[i];
      else m(i, j) = F(0);

  RrefResult<F> out;
  std::vector<std::size_t> cols;
  cols.reserve(C);
  std::size_t r = 0;
  for (std::size_t c = 0; c < C && r < R; ++c) {
    std::size_t best = R;
    for (std::size_t i = r; i < R; ++i) {
      if (negligible(m(i, c))) continue;
      if (best == R) {
        best = i;
      } else if constexpr (T::is_exact) {
        if (nnz[i] < nnz[best]) best = i;
      } else {
        if (std::abs(m(i, c)) > std::abs(m(best, c))) best = i;
      }
    }
    if (best == R) continue;
    m.swap_rows(best, r);
    std::swap(nnz[best], nnz[r]);

    const F inv = F(1) / m(r, c);
    cols.clear();
    for (std::size_t j = c; j < C; ++j) {
      if (negligible(m(r, j))) continue;
      if (j != c) m(r, j) *= inv;
      cols.push_back(j);
    }
    m(r, c) = F(1);

    for (std::size_t i = 0; i < R; ++i) {
      if (i == r || negligible(m(i, c))) continue;
      const F f = m(i, c);
      for (std::size_t j : cols) {
        F& x = m(i, j);
        const bool was_zero = negligible(x);
        T::sub_mul(x, f, m(r, j));
        const bool now_zero = negligible(x);
        if (now_zero) x = F(0);
        if (was_zero && !now_zero) ++nnz[i];
        if (!was_zero && now_zero) --nnz[i];
      }
      m(i, c) = F(0);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rank = r;
  out.matrix = std::move(m);
  return out;
}

template <class F>
std::size_t rank(const Matrix<F>& m) {
  return rref(m).rank;
}

/// Inverse of a square matrix; throws on singular input.
template <class F>
Matrix<F> inverse(const Matrix<F>& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw std::invalid_argument("inverse of non-square matrix");
  Matrix<F> aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = F(1);
  }
  auto red = rref(std::move(aug));
  if (red.rank < n || red.pivots[n - 1] != n - 1) throw std::domain_error("matrix is singular");
  Matrix<F> inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = red.matrix(i, n + j);
  return inv;
}

/// A linear subspace of F^N held by its reduced row-echelon basis.
///
/// The basis is canonical, so two subspaces are equal iff their bases are
/// equal entry by entry.
template <class F>
class Subspace {
 public:
  explicit Subspace(std::size_t ambient = 0) : ambient_(ambient), basis_(0, ambient), pivot_row_(ambient, -1) {}

  /// Span of the rows of `vectors` (need not be independent).
  static Subspace span(Matrix<F> vectors) {
    const std::size_t ambient = vectors.cols();
    auto red = rref(std::move(vectors));
    red.matrix.truncate_rows(red.rank);
    return Subspace(ambient, std::move(red.matrix), std::move(red.pivots));
  }

  static Subspace span(std::size_t ambient, const std::vector<std::vector<F>>& vectors) {
    Matrix<F> m(0, ambient);
    for (const auto& v : vectors) m.append_row(v);
    if (vectors.empty()) return Subspace(ambient);
    return span(std::move(m));
  }

  static Subspace full(std::size_t ambient) { return span(Matrix<F>::identity(ambient)); }

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  bool is_zero() const { return dim() == 0; }

  /// Basis vectors as rows, in reduced row-echelon form.
  const Matrix<F>& basis() const { return basis_; }
  std::span<const F> vector(std::size_t i) const { return basis_.row(i); }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  /// Column indices of the nonzero entries of basis vector i.
  const std::vector<std::uint32_t>& support(std::size_t i) const { return support_[i]; }

  /// Residual of v after elimination against the basis; zero iff v is in the span.
  std::vector<F> residual(std::span<const F> v) const {
    if (v.size() != ambient_) throw std::invalid_argument("vector length does not match ambient dimension");
    std::vector<F> w(v.begin(), v.end());
    for (std::size_t k = 0; k < dim(); ++k) {
      const F f = w[pivots_[k]];
      if (field_traits<F>::is_zero(f)) continue;
      for (auto j : support_[k]) field_traits<F>::sub_mul(w[j], f, basis_(k, j));
      w[pivots_[k]] = F(0);
    }
    return w;
  }

  /// In reduced echelon form v lies in the span iff v = sum_k v[pivot_k] basis[k].
  bool contains(std::span<const F> v) const {
    if (v.size() != ambient_) throw std::invalid_argument("vector length does not match ambient dimension");
    thread_local std::vector<F> acc;
    thread_local std::vector<std::uint32_t> touched;
    thread_local std::vector<char> mark;
    if (acc.size() < ambient_) {
      acc.resize(ambient_, F(0));
      mark.resize(ambient_, 0);
    }
    for (std::size_t j = 0; j < ambient_; ++j) {
      if (field_traits<F>::is_zero(v[j])) continue;
      const int k = pivot_row_[j];
      if (k < 0) continue;
      for (auto c : support_[k]) {
        if (!mark[c]) {
          mark[c] = 1;
          touched.push_back(c);
        }
        field_traits<F>::add_mul(acc[c], v[j], basis_(k, c));
      }
    }
    bool ok = true;
    for (std::size_t j = 0; j < ambient_ && ok; ++j)
      if (!field_traits<F>::equal(v[j], acc[j])) ok = false;
    for (auto c : touched) {
      acc[c] = F(0);
      mark[c] = 0;
    }
    touched.clear();
    return ok;
  }

  bool contains(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw std::invalid_argument("ambient dimension mismatch");
    for (std::size_t i = 0; i < other.dim(); ++i)
      if (!contains(other.vector(i))) return false;
    return true;
  }

  /// Coordinates of v (assumed to lie in the span) in this basis.
  std::vector<F> coordinates(std::span<const F> v) const {
    std::vector<F> c(dim());
    for (std::size_t k = 0; k < dim(); ++k) c[k] = v[pivots_[k]];
    return c;
  }

  /// Linear combination sum_k coeffs[k] * basis[k].
  std::vector<F> combine(std::span<const F> coeffs) const {
    std::vector<F> v(ambient_, F(0));
    for (std::size_t k = 0; k < dim(); ++k) {
      if (field_traits<F>::is_zero(coeffs[k])) continue;
      for (auto j : support_[k]) field_traits<F>::add_mul(v[j], coeffs[k], basis_(k, j));
    }
    return v;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  Subspace(std::size_t ambient, Matrix<F> basis, std::vector<std::size_t> pivots)
      : ambient_(ambient), basis_(std::move(basis)), pivots_(std::move(pivots)) {
    pivot_row_.assign(ambient_, -1);
    for (std::size_t k = 0; k < pivots_.size(); ++k) pivot_row_[pivots_[k]] = static_cast<int>(k);
    support_.resize(basis_.rows());
    for (std::size_t k = 0; k < basis_.rows(); ++k)
      for (std::size_t j = 0; j < ambient_; ++j)
        if (!field_traits<F>::is_zero(basis_(k, j))) support_[k].push_back(static_cast<std::uint32_t>(j));
  }

  std::size_t ambient_;
  Matrix<F> basis_;
  std::vector<std::size_t> pivots_;
  std::vector<std::vector<std::uint32_t>> support_;
  std::vector<int> pivot_row_;  // column -> basis row with that pivot, or -1
};

/// Null space {v : m v = 0}.
template <class F>
Subspace<F> kernel_basis(const Matrix<F>& m) {
  const std::size_t C = m.cols();
  auto red = rref(m);
  std::vector<bool> is_pivot(C, false);
  for (auto p : red.pivots) is_pivot[p] = true;
  Matrix<F> vecs(C - red.rank, C);
  std::size_t row = 0;
  for (std::size_t f = 0; f < C; ++f) {
    if (is_pivot[f]) continue;
    vecs(row, f) = F(1);
    for (std::size_t k = 0; k < red.rank; ++k) {
      const F& x = red.matrix(k, f);
      if (!field_traits<F>::is_zero(x)) vecs(row, red.pivots[k]) = -x;
    }
    ++row;
  }
  if (vecs.rows() == 0) return Subspace<F>(C);
  return Subspace<F>::span(std::move(vecs));
}

template <class F>
Subspace<F> sum(const Subspace<F>& a, const Subspace<F>& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("ambient dimension mismatch in sum");
  Matrix<F> m(0, a.ambient_dim());
  for (std::size_t i = 0; i < a.dim(); ++i) m.append_row(a.vector(i));
  for (std::size_t i = 0; i < b.dim(); ++i) m.append_row(b.vector(i));
  if (m.rows() == 0) return Subspace<F>(a.ambient_dim());
  return Subspace<F>::span(std::move(m));
}

/// a ∩ b by the Zassenhaus construction: reduce [[A, A], [B, 0]]; rows whose
/// left half vanishes carry the intersection in their right half.
template <class F>
Subspace<F> intersect(const Subspace<F>& a, const Subspace<F>& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("ambient dimension mismatch in intersect");
  const std::size_t N = a.ambient_dim();
  if (a.is_zero() || b.is_zero()) return Subspace<F>(N);
  Matrix<F> z(a.dim() + b.dim(), 2 * N);
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (auto j : a.support(i)) {
      z(i, j) = a.basis()(i, j);
      z(i, N + j) = a.basis()(i, j);
    }
  }
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (auto j : b.support(i)) z(a.dim() + i, j) = b.basis()(i, j);
  auto red = rref(std::move(z));
  Matrix<F> inter(0, N);
  for (std::size_t k = 0; k < red.rank; ++k) {
    if (red.pivots[k] < N) continue;
    auto row = red.matrix.row(k);
    inter.append_row(row.subspan(N, N));
  }
  if (inter.rows() == 0) return Subspace<F>(N);
  return Subspace<F>::span(std::move(inter));
}

/// base ∩ ker(op), computed by restricting op to the basis of base.
///
/// `op` maps a vector of the ambient space to a vector of any fixed length.
template <class F, class Op>
Subspace<F> restrict_kernel(const Subspace<F>& base, Op&& op) {
  const std::size_t d = base.dim();
  if (d == 0) return base;
  std::vector<std::vector<F>> images;
  images.reserve(d);
  for (std::size_t c = 0; c < d; ++c) images.push_back(op(base.vector(c)));
  const std::size_t out = images.front().size();

  std::vector<std::size_t> live;
  for (std::size_t i = 0; i < out; ++i)
    for (std::size_t c = 0; c < d; ++c)
      if (!field_traits<F>::is_zero(images[c][i])) {
        live.push_back(i);
        break;
      }
  Matrix<F> m(live.size(), d);
  for (std::size_t r = 0; r < live.size(); ++r)
    for (std::size_t c = 0; c < d; ++c) m(r, c) = images[c][live[r]];

  const auto coeffs = kernel_basis(m);
  if (coeffs.is_zero()) return Subspace<F>(base.ambient_dim());
  Matrix<F> vecs(0, base.ambient_dim());
  for (std::size_t k = 0; k < coeffs.dim(); ++k) vecs.append_row(base.combine(coeffs.vector(k)));
  return Subspace<F>::span(std::move(vecs));
}

/// Image of base under op, as a subspace of the op's codomain of size `out_dim`.
template <class F, class Op>
Subspace<F> image(const Subspace<F>& base, std::size_t out_dim, Op&& op) {
  Matrix<F> vecs(0, out_dim);
  for (std::size_t c = 0; c < base.dim(); ++c) vecs.append_row(op(base.vector(c)));
  if (vecs.rows() == 0) return Subspace<F>(out_dim);
  return Subspace<F>::span(std::move(vecs));
}

// ---------------------------------------------------------------------------
// Gram forms.  A form is either a dense symmetric matrix or a diagonal.

template <class F>
void require_nondegenerate_gram(const Matrix<F>& gram) {
  if (gram.rows() != gram.cols()) throw std::invalid_argument("gram matrix is not square");
  if (!gram.is_symmetric()) throw std::invalid_argument("gram matrix is not symmetric");
  if (rank(gram) != gram.rows()) throw std::domain_error("gram matrix is degenerate");
}

template <class F>
void require_nondegenerate_gram(std::span<const F> diag) {
  for (const auto& x : diag)
    if (field_traits<F>::is_zero(x)) throw std::domain_error("gram diagonal is degenerate");
}

/// {w : w^T G v = 0 for all v in a}.
template <class F>
Subspace<F> orthogonal_complement(const Subspace<F>& a, const Matrix<F>& gram) {
  require_nondegenerate_gram(gram);
  if (gram.rows() != a.ambient_dim()) throw std::invalid_argument("gram size does not match ambient dimension");
  if (a.is_zero()) return Subspace<F>::full(a.ambient_dim());
  return kernel_basis(a.basis() * gram);
}

template <class F>
Subspace<F> orthogonal_complement(const Subspace<F>& a, std::span<const F> gram_diag) {
  require_nondegenerate_gram(gram_diag);
  if (gram_diag.size() != a.ambient_dim()) throw std::invalid_argument("gram size does not match ambient dimension");
  if (a.is_zero()) return Subspace<F>::full(a.ambient_dim());
  Matrix<F> m = a.basis();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) *= gram_diag[j];
  return kernel_basis(m);
}

template <class F>
F bilinear(std::span<const F> u, std::span<const F> v, std::span<const F> gram_diag) {
  F s(0);
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (field_traits<F>::is_zero(u[i]) || field_traits<F>::is_zero(v[i])) continue;
    s += u[i] * v[i] * gram_diag[i];
  }
  return s;
}

template <class F>
F bilinear(std::span<const F> u, std::span<const F> v, const Matrix<F>& gram) {
  return dot<F>(u, gram.apply(v));
}

/// True iff every pair of basis vectors of a and b is Gram-orthogonal.
template <class F, class Gram>
bool are_orthogonal(const Subspace<F>& a, const Subspace<F>& b, const Gram& gram) {
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j)
      if (!field_traits<F>::is_zero(bilinear<F>(a.vector(i), b.vector(j), gram))) return false;
  return true;
}

template <class F>
bool is_totally_isotropic(const Subspace<F>& a, const Matrix<F>& gram) {
  require_nondegenerate_gram(gram);
  return are_orthogonal(a, a, gram);
}

template <class F>
bool is_totally_isotropic(const Subspace<F>& a, std::span<const F> gram_diag) {
  require_nondegenerate_gram(gram_diag);
  return are_orthogonal(a, a, gram_diag);
}

}  // namespace curvlab
