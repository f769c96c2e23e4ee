#include <gtest/gtest.h>

#include <map>
#include <tuple>

#include "curvlab/curvature_spaces.hpp"
#include "curvlab/equivariance.hpp"
#include "curvlab/verification.hpp"
#include "oracles.hpp"

using namespace curvlab;
using Q = Rational;

namespace {

const CurvatureSpaceCatalog<Q>& catalog(const std::vector<int>& eps, StructureKind kind) {
  static std::map<std::pair<std::vector<int>, StructureKind>, CurvatureSpaceCatalog<Q>> cache;
  auto key = std::make_pair(eps, kind);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, build_catalog(make_with_signs<Q>(kind, eps))).first;
  return it->second;
}

struct Config {
  std::vector<int> eps;
  StructureKind kind;
};

std::vector<Config> configs() {
  return {{{1, 1, 1, 1}, StructureKind::complex},          {{1, 1, -1, -1}, StructureKind::complex},
          {{1, -1, 1, -1}, StructureKind::para},           {{1, 1, 1, 1, 1, 1}, StructureKind::complex},
          {{1, 1, 1, 1, -1, -1}, StructureKind::complex},  {{1, -1, 1, -1, 1, -1}, StructureKind::para},
          {{-1, 1, 1, -1, 1, -1}, StructureKind::para}};
}

std::string label(const Config& c) {
  std::string s = to_string(c.kind) + " ";
  for (int e : c.eps) s += e > 0 ? '+' : '-';
  return s;
}

}  // namespace

TEST(Builders, SmallDimensionClosedForms) {
  EXPECT_EQ(build_A(make_with_signs<Q>(StructureKind::none, {1, 1})).dim(), 4u);
  EXPECT_EQ(build_R(make_with_signs<Q>(StructureKind::none, {1, -1})).dim(), 1u);
  EXPECT_EQ(build_W(make_with_signs<Q>(StructureKind::none, {1, 1, 1})).dim(), 9u);
  EXPECT_EQ(build_W(make_with_signs<Q>(StructureKind::none, {1, 1, -1})).dim(), 9u);
}

TEST(Builders, AgreeWithStackedConstraintOracle) {
  for (const auto& c : configs()) {
    const auto& cat = catalog(c.eps, c.kind);
    const std::size_t n = c.eps.size();
    const int pm = signs(c.kind).pm;
    EXPECT_EQ(cat.A.dim(), oracle::dim_A(c.eps)) << label(c);
    EXPECT_EQ(cat.W.dim(), oracle::dim_W(c.eps)) << label(c);
    EXPECT_EQ(cat.R.dim(), oracle::dim_R(c.eps)) << label(c);
    EXPECT_EQ(cat.K_W.dim(), oracle::dim_K_W(c.eps, pm)) << label(c);
    EXPECT_EQ(cat.K_R.dim(), oracle::dim_K_R(c.eps, pm)) << label(c);
    EXPECT_EQ(cat.A.dim(), oracle::closed_dim_A(n));
    EXPECT_EQ(cat.W.dim(), oracle::closed_dim_W(n));
    EXPECT_EQ(cat.R.dim(), oracle::closed_dim_R(n));
    EXPECT_EQ(cat.P_conformal.dim(), oracle::closed_dim_P(n));
  }
}

TEST(Builders, OracleForKindNone) {
  for (const auto& eps : {std::vector<int>{1, 1, 1}, {1, -1, -1}, {1, 1, 1, -1}, {1, 1, 1, 1, 1}}) {
    const auto s = make_with_signs<Q>(StructureKind::none, eps);
    EXPECT_EQ(build_A(s).dim(), oracle::dim_A(eps));
    EXPECT_EQ(build_W(s).dim(), oracle::dim_W(eps));
    EXPECT_EQ(build_R(s).dim(), oracle::dim_R(eps));
  }
}

TEST(Builders, ConformalDims) {
  EXPECT_EQ(catalog({1, 1, 1, 1}, StructureKind::complex).P_conformal.dim(), 10u);
  EXPECT_EQ(catalog({1, 1, 1, 1, 1, 1}, StructureKind::complex).P_conformal.dim(), 84u);
}

TEST(Builders, LatticeRelations) {
  for (const auto& c : configs()) {
    const auto& cat = catalog(c.eps, c.kind);
    EXPECT_TRUE(cat.A.contains(cat.W));
    EXPECT_TRUE(cat.W.contains(cat.R));
    EXPECT_TRUE(cat.R.contains(cat.P_conformal));
    EXPECT_TRUE(cat.W.contains(cat.frakP));
    EXPECT_TRUE(cat.W.contains(cat.K_W));
    EXPECT_TRUE(cat.K_W.contains(cat.K_R));
  }
}

TEST(Builders, AltRicciCriterionOnWeylTensors) {
  // inside W, the Riemannian tensors are exactly those with symmetric Ricci tensor
  for (const auto& c : configs()) {
    const auto& cat = catalog(c.eps, c.kind);
    const auto& s = cat.space;
    const auto sym_ric = restrict_kernel(cat.W, [&s](std::span<const Q> v) { return alt_ricci(Tensor4<Q>(s.n, v), s).data(); });
    EXPECT_EQ(sym_ric, cat.R) << label(c);
  }
}

TEST(Builders, SignatureIndependenceProperty) {
  const auto& a = catalog({1, 1, 1, 1, 1, 1}, StructureKind::complex);
  const auto& b = catalog({1, 1, 1, 1, -1, -1}, StructureKind::complex);
  const auto& p = catalog({1, -1, 1, -1, 1, -1}, StructureKind::para);
  for (const auto* x : {&b, &p}) {
    EXPECT_EQ(a.W.dim(), x->W.dim());
    EXPECT_EQ(a.K_W.dim(), x->K_W.dim());
    EXPECT_EQ(a.K_R.dim(), x->K_R.dim());
    EXPECT_EQ(a.frakP.dim(), x->frakP.dim());
  }
}

TEST(KaehlerWeyl, GapOnlyInDimensionFour) {
  for (const auto& c : configs()) {
    const auto& cat = catalog(c.eps, c.kind);
    if (c.eps.size() == 4) {
      EXPECT_EQ(cat.K_W.dim(), 14u);
      EXPECT_EQ(cat.K_R.dim(), 9u);
      EXPECT_FALSE(cat.R.contains(cat.K_W));
    } else {
      EXPECT_EQ(cat.K_W.dim(), cat.K_R.dim());
      EXPECT_TRUE(cat.R.contains(cat.K_W));
    }
  }
}

TEST(TwoTensors, PieceDims) {
  auto dims = [](const CurvatureSpaceCatalog<Q>& c) {
    std::vector<std::size_t> d;
    for (const auto* p : c.two_tensor_pieces.all()) d.push_back(p->dim());
    return d;
  };
  EXPECT_EQ(dims(catalog({1, 1, 1, 1}, StructureKind::complex)), (std::vector<std::size_t>{1, 3, 6, 1, 3, 2}));
  EXPECT_EQ(dims(catalog({1, 1, 1, 1, 1, 1}, StructureKind::complex)), (std::vector<std::size_t>{1, 8, 12, 1, 8, 6}));
  EXPECT_EQ(dims(catalog({1, -1, 1, -1, 1, -1}, StructureKind::para)), (std::vector<std::size_t>{1, 8, 12, 1, 8, 6}));
}

TEST(TwoTensors, PiecesAreOrthogonalAndSpan) {
  for (const auto& c : configs()) {
    const auto& cat = catalog(c.eps, c.kind);
    const auto g = tensor_gram(cat.space, 2);
    const auto pieces = cat.two_tensor_pieces.all();
    Subspace<Q> total(c.eps.size() * c.eps.size());
    for (std::size_t i = 0; i < pieces.size(); ++i) {
      total = sum(total, *pieces[i]);
      EXPECT_FALSE(is_totally_isotropic(*pieces[i], std::span<const Q>(g)));
      for (std::size_t j = i + 1; j < pieces.size(); ++j)
        EXPECT_TRUE(are_orthogonal(*pieces[i], *pieces[j], std::span<const Q>(g))) << label(c) << " " << i << "," << j;
    }
    EXPECT_EQ(total.dim(), c.eps.size() * c.eps.size());
  }
}

TEST(Equivariance, Commutants) {
  for (const auto& c : configs()) {
    if (c.eps.size() != 6) continue;
    const auto& cat = catalog(c.eps, c.kind);
    const auto& p = cat.two_tensor_pieces;
    EXPECT_EQ(commutant_dimension(p.L2_pm, cat.space, Group::Ustar), 1u) << label(c);
    EXPECT_EQ(commutant_dimension(p.Rh, cat.space, Group::Ustar), 1u);
    EXPECT_EQ(commutant_dimension_doubled(p.L2_pm, cat.space, Group::Ustar), 4u);
  }
}

TEST(Equivariance, CommutantOfExplicitMatrices) {
  // rotation by 90 degrees on R^2: commutant is C, dimension 2
  const Matrix<Q> rot{{0, -1}, {1, 0}};
  EXPECT_EQ(commutant_dimension(std::vector<Matrix<Q>>{rot}, 2), 2u);
  const Matrix<Q> refl{{1, 0}, {0, -1}};
  EXPECT_EQ(commutant_dimension(std::vector<Matrix<Q>>{rot, refl}, 2), 1u);
  EXPECT_EQ(commutant_dimension(std::vector<Matrix<Q>>{}, 3), 9u);
}

TEST(Equivariance, InvariantSpan) {
  const auto& cat = catalog({1, 1, 1, 1, 1, 1}, StructureKind::complex);
  const auto& p = cat.two_tensor_pieces;
  EXPECT_EQ(invariant_span_dimension(p.L2_pm, p.L2_pm, cat.space), 1u);
  EXPECT_EQ(invariant_span_dimension(p.Rh, p.Rh, cat.space), 1u);
  EXPECT_EQ(invariant_span_dimension(p.Rh, p.ROmega, cat.space), 0u);
  EXPECT_EQ(invariant_span_dimension(Subspace<Q>(36), p.L2_pm, cat.space), 0u);
}

TEST(Equivariance, NotInvariantSubspaceIsReported) {
  const auto s = make_standard<Q>(4, StructureKind::complex, {4, 0});
  std::vector<Q> e12(16, Q(0));
  e12[1] = Q(1);
  e12[4] = Q(-1);
  const auto line = Subspace<Q>::span(16, {e12});
  const auto v = find_invariance_violation(line, 4, generators_of(make_group(s, Group::O)));
  ASSERT_TRUE(v.has_value());
  EXPECT_FALSE(line.contains(std::span<const Q>(v->image)));
  EXPECT_THROW(commutant_dimension(line, s, Group::O), NotInvariantError<Q>);
}

TEST(Invariance, SweepOnCatalogs) {
  for (const auto& c : configs()) {
    const auto r = verify_invariance(catalog(c.eps, c.kind), 5, 17);
    EXPECT_TRUE(r.pass) << label(c) << "\n" << r.to_json().dump(1);
    EXPECT_EQ(r.quantities["totally_isotropic_modules"], 0);
  }
}

TEST(FloatMode, CatalogDimsMatchExact) {
  ScopedFloatTolerance tol(1e-9);
  const auto c = build_catalog(make_with_signs<double>(StructureKind::para, {1, -1, 1, -1}));
  const auto& e = catalog({1, -1, 1, -1}, StructureKind::para);
  EXPECT_EQ(c.W.dim(), e.W.dim());
  EXPECT_EQ(c.K_W.dim(), e.K_W.dim());
  EXPECT_EQ(c.K_R.dim(), e.K_R.dim());
  EXPECT_EQ(c.frakP.dim(), e.frakP.dim());
}
