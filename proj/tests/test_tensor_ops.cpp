#include <gtest/gtest.h>

#include <random>

#include "curvlab/forms.hpp"
#include "curvlab/model_space.hpp"
#include "curvlab/serialize.hpp"
#include "curvlab/tensor_ops.hpp"
#include "curvlab/verification.hpp"

using namespace curvlab;
using Q = Rational;

namespace {

std::vector<ModelSpace<Q>> six_dim_spaces() {
  return {make_standard<Q>(6, StructureKind::complex, {6, 0}), make_standard<Q>(6, StructureKind::complex, {4, 2}),
          make_standard<Q>(6, StructureKind::para, {3, 3})};
}

Tensor2<Q> random_2form(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<int> d(-3, 3);
  Tensor2<Q> t(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      t(i, j) = Q(d(rng));
      t(j, i) = -t(i, j);
    }
  return t;
}

Tensor4<Q> random_tensor4(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<int> d(-2, 2);
  Tensor4<Q> t(n);
  for (auto& x : t.data()) x = Q(d(rng));
  return t;
}

Matrix<Q> random_matrix(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<int> d(-2, 2);
  Matrix<Q> m(n, n);
  for (auto& x : m.data()) x = Q(d(rng));
  return m;
}

}  // namespace

TEST(Defects, VanishOnTheirSymmetryClass) {
  // constant curvature: R(x,y,z,w) = h(x,w)h(y,z) - h(x,z)h(y,w)
  for (const auto& s : six_dim_spaces()) {
    const std::size_t n = s.n;
    Tensor4<Q> R(n);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t z = 0; z < n; ++z)
          for (std::size_t w = 0; w < n; ++w) R(x, y, z, w) = s.h(x, w) * s.h(y, z) - s.h(x, z) * s.h(y, w);
    EXPECT_TRUE(defect_antisym(R).is_zero());
    EXPECT_TRUE(defect_bianchi(R).is_zero());
    EXPECT_TRUE(defect_riemann(R).is_zero());
    EXPECT_TRUE(defect_weyl(R, s).is_zero());
    // Ric = (n-1) h
    const auto ric = ricci(R, s);
    EXPECT_EQ(ric(0, 0), Q(static_cast<long>(n) - 1) * s.h(0, 0));
  }
}

TEST(Defects, AltRicciVanishesOnRiemannianTensors) {
  std::mt19937 rng(2);
  const auto s = make_standard<Q>(4, StructureKind::complex, {2, 2});
  for (int t = 0; t < 5; ++t) {
    const auto A = random_tensor4(rng, 4);
    // impose both pair antisymmetries and pair exchange
    Tensor4<Q> R(4);
    for (std::size_t x = 0; x < 4; ++x)
      for (std::size_t y = 0; y < 4; ++y)
        for (std::size_t z = 0; z < 4; ++z)
          for (std::size_t w = 0; w < 4; ++w)
            R(x, y, z, w) = A(x, y, z, w) - A(y, x, z, w) - A(x, y, w, z) + A(y, x, w, z) + A(z, w, x, y) -
                            A(w, z, x, y) - A(z, w, y, x) + A(w, z, y, x);
    EXPECT_TRUE(alt_ricci(R, s).is_zero());
  }
}

TEST(Sigma, LandsInWeylTensorsProperty) {
  std::mt19937 rng(4);
  for (const auto& s : six_dim_spaces()) {
    const auto psi = random_2form(rng, s.n);
    const auto A = sigma(psi, s);
    EXPECT_TRUE(defect_antisym(A).is_zero());
    EXPECT_TRUE(defect_bianchi(A).is_zero());
    EXPECT_TRUE(defect_weyl(A, s).is_zero());
    if (!psi.is_zero()) {
      EXPECT_FALSE(defect_riemann(A).is_zero());
    }
  }
}

TEST(Sigma, RejectsSymmetricInput) {
  const auto s = make_standard<Q>(4, StructureKind::none, {4, 0});
  EXPECT_THROW(sigma(metric_tensor(s), s), std::invalid_argument);
}

TEST(Sigma, ClosedFormValues) {
  // 0-based indices; h_aa = eps_a
  for (const auto& s : six_dim_spaces()) {
    const auto h = [&s](std::size_t a) { return Q(s.eps[a]); };
    const Q mp(s.sign().mp);
    const auto om = kaehler_form(s);
    const auto A = sigma(om, s);
    EXPECT_EQ(A(0, 3, 2, 0), -h(0) * h(3));
    EXPECT_EQ(mp * apply_structure_last_pair(A, s)(0, 3, 2, 0), h(0) * h(3));
    const auto psi = model_two_form(s, "psipm");
    EXPECT_EQ(sigma(psi, s)(4, 0, 2, 4), -h(4));
    EXPECT_EQ(psi_map(psi, s)(4, 0, 3, 5), -h(4));
    EXPECT_EQ(psi_map(psi, s)(4, 5, 0, 3), Q(2) * h(4));
  }
}

TEST(Psi, LandsInKaehlerRiemannianTensors) {
  for (const auto& s : six_dim_spaces()) {
    const auto A = psi_map(model_two_form(s, "psipm"), s);
    EXPECT_TRUE(defect_antisym(A).is_zero());
    EXPECT_TRUE(defect_bianchi(A).is_zero());
    EXPECT_TRUE(defect_riemann(A).is_zero());
    EXPECT_FALSE(A.is_zero());
  }
}

TEST(Psi, RejectsFormsOutsideTheEigenspace) {
  const auto s = make_standard<Q>(6, StructureKind::complex, {6, 0});
  EXPECT_THROW(psi_map(kaehler_form(s), s), std::invalid_argument);
}

TEST(ModelForms, Psi0IsOrthogonalToOmega) {
  for (const auto& s : six_dim_spaces()) {
    const auto g = tensor_gram(s, 2);
    const auto psi0 = model_two_form(s, "psi0");
    EXPECT_EQ(bilinear<Q>(psi0.flat(), kaehler_form(s).flat(), std::span<const Q>(g)), Q(0));
    EXPECT_EQ(pullback(s.J, psi0), Q(s.sign().mp) * psi0);
    EXPECT_TRUE(in_lambda2_pm(model_two_form(s, "psipm"), s));
  }
}

TEST(GroupAction, PullbackIsFunctorialProperty) {
  std::mt19937 rng(6);
  for (int t = 0; t < 10; ++t) {
    const auto A = random_matrix(rng, 3), B = random_matrix(rng, 3);
    std::uniform_int_distribution<int> d(-3, 3);
    Tensor<Q, 3> theta(3);
    for (auto& x : theta.data()) x = Q(d(rng));
    // (AB)* = B* A*
    EXPECT_EQ(pullback(A * B, theta), pullback(B, pullback(A, theta)));
  }
}

TEST(GroupAction, LieActionIsDerivativeOfPullback) {
  // for rank 2: (I + X)* theta = theta + X.theta + X^T theta X
  std::mt19937 rng(8);
  for (int t = 0; t < 10; ++t) {
    const auto X = random_matrix(rng, 3);
    std::uniform_int_distribution<int> d(-3, 3);
    Tensor2<Q> theta(3);
    for (auto& x : theta.data()) x = Q(d(rng));
    const auto lhs = pullback(Matrix<Q>::identity(3) + X, theta);
    Matrix<Q> th(3, 3, theta.data());
    const auto quad = X.transpose() * th * X;
    const auto rhs = theta + lie_action(X, theta) + Tensor2<Q>(3, quad.data());
    EXPECT_EQ(lhs, rhs);
  }
}

TEST(GroupAction, MetricAndKaehlerFormAreInvariant) {
  for (const auto& s : six_dim_spaces()) {
    const auto spec = make_group(s, Group::U);
    for (const auto& X : spec.lie_algebra_basis) {
      EXPECT_TRUE(lie_action(X, metric_tensor(s)).is_zero());
      EXPECT_TRUE(lie_action(X, kaehler_form(s)).is_zero());
    }
    // g0 anti-commutes with J and flips Omega
    const auto starspec = make_group(s, Group::Ustar);
    const auto& g0 = starspec.component_reps.back();
    EXPECT_EQ(pullback(g0, kaehler_form(s)), Q(-1) * kaehler_form(s));
  }
}

TEST(InvariantContraction, ClosedFormValues) {
  for (std::size_t n : {4u, 6u}) {
    for (auto kind : {StructureKind::complex, StructureKind::para}) {
      const auto s = kind == StructureKind::complex ? make_standard<Q>(n, kind, {n, 0}) : make_standard<Q>(n, kind, {n / 2, n / 2});
      const Q N(static_cast<long>(n));
      const auto hh = outer(metric_tensor(s), metric_tensor(s));
      const auto oo = outer(kaehler_form(s), kaehler_form(s));
      EXPECT_EQ(invariant_contraction(hh, {0, 1, 2, 3}, {0, 0}, s), N * N);
      EXPECT_EQ(invariant_contraction(hh, {0, 2, 1, 3}, {0, 0}, s), N);
      EXPECT_EQ(invariant_contraction(oo, {0, 1, 2, 3}, {1, 1}, s), N * N);
      // h^{ij} Omega_ij = 0, and Omega^{kl} Omega_kl = -pm n
      const auto ho = outer(metric_tensor(s), kaehler_form(s));
      EXPECT_EQ(invariant_contraction(ho, {0, 1, 2, 3}, {1, 0}, s), Q(0));
      EXPECT_EQ(invariant_contraction(ho, {0, 1, 2, 3}, {0, 1}, s), Q(-s.sign().pm) * N * N);
    }
  }
}

TEST(InvariantContraction, RejectsBadPermutation) {
  const auto s = make_standard<Q>(4, StructureKind::complex, {4, 0});
  const auto hh = outer(metric_tensor(s), metric_tensor(s));
  EXPECT_THROW(invariant_contraction(hh, {0, 0, 1, 2}, {0, 0}, s), std::invalid_argument);
  EXPECT_EQ(all_slot_permutations().size(), 24u);
}

TEST(InvariantContraction, IsInvariantUnderUstarProperty) {
  // even words are preserved by g0 since Omega flips sign twice
  std::mt19937 rng(10);
  const auto s = make_standard<Q>(4, StructureKind::para, {2, 2});
  const auto spec = make_group(s, Group::Ustar);
  for (int t = 0; t < 5; ++t) {
    const auto T = random_tensor4(rng, 4);
    for (const auto& g : spec.component_reps)
      for (const PairWord w : {PairWord{0, 0}, PairWord{1, 1}}) {
        const auto pi = all_slot_permutations()[rng() % 24];
        EXPECT_EQ(invariant_contraction(pullback(g, T), pi, w, s), invariant_contraction(T, pi, w, s));
      }
  }
}

TEST(Forms, WedgeOfOneFormsAndOmegaPower) {
  FormK<Q> a(4, 1), b(4, 1);
  a.at_mask(0b0001) = Q(1);
  b.at_mask(0b0010) = Q(1);
  const auto ab = wedge(a, b);
  const auto ba = wedge(b, a);
  EXPECT_EQ(ab.evaluate({0, 1}), Q(1));
  EXPECT_EQ(ba.evaluate({0, 1}), Q(-1));
  EXPECT_TRUE(wedge(a, a).is_zero());
  const auto s = make_standard<Q>(4, StructureKind::complex, {4, 0});
  EXPECT_FALSE(omega_power(s, 2).is_zero());
  EXPECT_THROW(omega_power(s, 3), std::invalid_argument);
}

TEST(Forms, WedgeIsGradedCommutativeProperty) {
  std::mt19937 rng(12);
  std::uniform_int_distribution<int> d(-2, 2);
  for (int t = 0; t < 10; ++t) {
    FormK<Q> a(5, 2), b(5, 1);
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = Q(d(rng));
    for (std::size_t i = 0; i < b.size(); ++i) b[i] = Q(d(rng));
    EXPECT_EQ(wedge(a, b), wedge(b, a));  // (-1)^{2*1} = 1
  }
}

TEST(Lefschetz, RanksAndKernel) {
  for (auto kind : {StructureKind::complex, StructureKind::para}) {
    const auto s4 = kind == StructureKind::complex ? make_standard<Q>(4, kind, {4, 0}) : make_standard<Q>(4, kind, {2, 2});
    const auto s6 = kind == StructureKind::complex ? make_standard<Q>(6, kind, {4, 2}) : make_standard<Q>(6, kind, {3, 3});
    EXPECT_EQ(rank(lefschetz_matrix(s6, 1)), 15u);
    const auto ker = kernel_basis(lefschetz_matrix(s4, 1));
    EXPECT_EQ(ker.dim(), 5u);
    EXPECT_EQ(ker, kaehler_orthogonal_2forms(s4));
  }
}
