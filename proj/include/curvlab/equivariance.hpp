#pragma once

// Group-module checks on subspaces of ⊗^k V*: invariance with witnesses,
// representation matrices, commutants, and spans of scalar invariants.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "curvlab/linalg.hpp"
#include "curvlab/model_space.hpp"
#include "curvlab/tensor_ops.hpp"

namespace curvlab {

/// The action of one group element or Lie algebra element on tensors.
template <class F>
struct Generator {
  enum class Kind { lie, group } kind;
  std::string name;
  Matrix<F> matrix;

  std::vector<F> act(std::span<const F> v, std::size_t n) const {
    return kind == Kind::lie ? lie_action_flat<F>(matrix, v, n) : pullback_flat<F>(matrix, v, n);
  }
  void act_into(std::span<const F> v, std::size_t n, std::vector<F>& out) const {
    if (kind == Kind::lie) lie_action_into<F>(matrix, v, n, out);
    else pullback_into<F>(matrix, v, n, out);
  }
};

template <class F>
std::vector<Generator<F>> generators_of(const GroupSpec<F>& g) {
  std::vector<Generator<F>> out;
  for (std::size_t i = 0; i < g.lie_algebra_basis.size(); ++i)
    out.push_back({Generator<F>::Kind::lie, "lie[" + std::to_string(i) + "]", g.lie_algebra_basis[i]});
  for (std::size_t i = 0; i < g.component_reps.size(); ++i)
    out.push_back({Generator<F>::Kind::group, g.rep_names.at(i), g.component_reps[i]});
  return out;
}

/// Rational random combinations of the Lie algebra basis.
template <class F>
std::vector<Generator<F>> random_lie_elements(const GroupSpec<F>& g, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-7, 7);
  std::uniform_int_distribution<int> den(1, 5);
  std::vector<Generator<F>> out;
  if (g.lie_algebra_basis.empty()) return out;
  const std::size_t n = g.lie_algebra_basis.front().rows();
  for (std::size_t t = 0; t < count; ++t) {
    Matrix<F> X(n, n);
    for (const auto& b : g.lie_algebra_basis) {
      const F c = F(num(rng)) / F(den(rng));
      X = X + c * b;
    }
    out.push_back({Generator<F>::Kind::lie, "random-lie[" + std::to_string(t) + "]", std::move(X)});
  }
  return out;
}

template <class F>
struct InvarianceViolation {
  std::string generator;
  std::size_t basis_index = 0;
  std::vector<F> image;  // generator applied to the basis vector; not in the subspace
};

template <class F>
std::optional<InvarianceViolation<F>> find_invariance_violation(const Subspace<F>& sub, std::size_t n,
                                                                const std::vector<Generator<F>>& gens) {
  std::vector<F> img;
  for (const auto& g : gens)
    for (std::size_t b = 0; b < sub.dim(); ++b) {
      g.act_into(sub.vector(b), n, img);
      if (!sub.contains(img)) return InvarianceViolation<F>{g.name, b, std::move(img)};
    }
  return std::nullopt;
}

template <class F>
class NotInvariantError : public std::domain_error {
 public:
  explicit NotInvariantError(InvarianceViolation<F> v)
      : std::domain_error("subspace is not invariant under " + v.generator), violation(std::move(v)) {}
  InvarianceViolation<F> violation;
};

/// Matrix of a generator on an invariant subspace, in the subspace's basis
/// coordinates (column c = coordinates of the image of basis vector c).
template <class F>
Matrix<F> representation_matrix(const Subspace<F>& sub, std::size_t n, const Generator<F>& g) {
  Matrix<F> rho(sub.dim(), sub.dim());
  for (std::size_t c = 0; c < sub.dim(); ++c) {
    auto img = g.act(sub.vector(c), n);
    if (!sub.contains(img)) throw NotInvariantError<F>({g.name, c, std::move(img)});
    const auto coords = sub.coordinates(img);
    for (std::size_t r = 0; r < sub.dim(); ++r) rho(r, c) = coords[r];
  }
  return rho;
}

/// dim {T : T G = G T for every G in gens}, all G square of one size.
template <class F>
std::size_t commutant_dimension(const std::vector<Matrix<F>>& gens, std::size_t d) {
  if (d == 0) return 0;
  Matrix<F> cons(0, d * d);
  std::vector<F> row(d * d);
  for (const auto& G : gens) {
    if (G.rows() != d || G.cols() != d) throw std::invalid_argument("generator has wrong size");
    // (T G - G T)_{ij} = sum_k T_{ik} G_{kj} - G_{ik} T_{kj}
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        std::fill(row.begin(), row.end(), F(0));
        bool any = false;
        for (std::size_t k = 0; k < d; ++k) {
          if (!is_zero(G(k, j))) {
            row[i * d + k] += G(k, j);
            any = true;
          }
          if (!is_zero(G(i, k))) {
            row[k * d + j] -= G(i, k);
            any = true;
          }
        }
        if (any) cons.append_row(row);
      }
  }
  if (cons.rows() == 0) return d * d;
  return d * d - rank(cons);
}

template <class F>
Matrix<F> block_diagonal(const Matrix<F>& a, const Matrix<F>& b) {
  Matrix<F> m(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, a.cols() + j) = b(i, j);
  return m;
}

/// Representation matrices of a group on an invariant subspace; throws
/// NotInvariantError with a witness when the subspace is not invariant.
template <class F>
std::vector<Matrix<F>> representation(const Subspace<F>& sub, const ModelSpace<F>& s, Group group) {
  const auto g = make_group(s, group);
  std::vector<Matrix<F>> rho;
  for (const auto& gen : generators_of(g)) rho.push_back(representation_matrix(sub, s.n, gen));
  return rho;
}

/// Dimension of the algebra of group-equivariant self-maps of sub.
template <class F>
std::size_t commutant_dimension(const Subspace<F>& sub, const ModelSpace<F>& s, Group group) {
  return commutant_dimension(representation(sub, s, group), sub.dim());
}

/// Commutant dimension of the external direct sum sub ⊕ sub.
template <class F>
std::size_t commutant_dimension_doubled(const Subspace<F>& sub, const ModelSpace<F>& s, Group group) {
  auto rho = representation(sub, s, group);
  for (auto& m : rho) m = block_diagonal(m, m);
  return commutant_dimension(rho, 2 * sub.dim());
}

/// Rank of the even-word invariant contractions psi_{pi,a} restricted to
/// moduleA ⊗ moduleB (both subspaces of ⊗^2 V*).
template <class F>
std::size_t invariant_span_dimension(const Subspace<F>& moduleA, const Subspace<F>& moduleB, const ModelSpace<F>& s) {
  if (!s.has_structure()) throw ModelSpaceError("invariant span requires a (para-)complex structure");
  if (moduleA.is_zero() || moduleB.is_zero()) return 0;
  const std::size_t n = s.n;
  std::vector<Tensor4<F>> basis;
  for (std::size_t i = 0; i < moduleA.dim(); ++i)
    for (std::size_t j = 0; j < moduleB.dim(); ++j)
      basis.push_back(outer(Tensor2<F>(n, moduleA.vector(i)), Tensor2<F>(n, moduleB.vector(j))));
  const std::vector<PairWord> words{{0, 0}, {1, 1}};
  Matrix<F> m(0, basis.size());
  std::vector<F> row(basis.size());
  for (const auto& w : words)
    for (const auto& pi : all_slot_permutations()) {
      for (std::size_t c = 0; c < basis.size(); ++c) row[c] = invariant_contraction(basis[c], pi, w, s);
      m.append_row(row);
    }
  return rank(m);
}

}  // namespace curvlab
