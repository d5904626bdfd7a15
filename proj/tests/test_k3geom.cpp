#include "k3lat/k3geom.hpp"

#include "k3lat/errors.hpp"

#include "doctest.h"

using namespace k3lat;

namespace {

LatticePtr Lambda() { return Lattice::make({{2, 5}, {5, 4}}); }
LatticePtr U() { return Lattice::make({{0, 1}, {1, 0}}); }
LatticePtr TwoMinusTwo() { return Lattice::make({{2, 0}, {0, -2}}); }

K3Model lambda_model() { return K3Model::create(Lambda(), {1, 0}, 50); }

}  // namespace

TEST_CASE("cone membership is exact linear algebra") {
  auto l = Lambda();
  ConeR2 cone{vec(l, {-1, 2}), vec(l, {9, -2})};
  CHECK(cone_contains(cone, vec(l, {1, 0})));    // interior
  CHECK(cone_contains(cone, vec(l, {-1, 2})));   // boundary ray
  CHECK(cone_contains(cone, vec(l, {18, -4})));  // multiple of a ray
  CHECK(cone_contains(cone, zero_vector(l)));
  CHECK_FALSE(cone_contains(cone, vec(l, {-1, 0})));
  CHECK_FALSE(cone_contains(cone, vec(l, {-1, -2})));
  CHECK_THROWS_AS(
      cone_contains(ConeR2{vec(l, {1, 2}), vec(l, {2, 4})}, vec(l, {1, 0})),
      DomainError);
}

TEST_CASE("model construction validates its inputs") {
  CHECK_THROWS_AS(K3Model::create(Lattice::make({{1, 0}, {0, -1}}), {1, 0}, 5),
                  DomainError);  // odd form
  CHECK_THROWS_AS(K3Model::create(Lattice::make({{2, 0}, {0, 2}}), {1, 0}, 5),
                  DomainError);  // definite form
  CHECK_THROWS_AS(
      K3Model::create(Lattice::make({{0, 1, 0}, {1, 0, 0}, {0, 0, -2}}),
                      {1, 1, 0}, 5),
      DomainError);  // rank 3
  CHECK_THROWS_AS(K3Model::create(Lambda(), {1, 0}, 0), DomainError);
  CHECK_THROWS_AS(K3Model::create(Lambda(), {-1, 2}, 5),
                  InvalidPolarizationError);  // norm -2
  CHECK_THROWS_AS(K3Model::create(U(), {1, 0}, 5),
                  InvalidPolarizationError);  // norm 0
}

TEST_CASE("determinant -17 model: cones and curve classes") {
  auto m = lambda_model();
  CHECK(m.no_isotropic_classes());

  // no -2 class is orthogonal to the ample class, and none has degree 3
  CHECK(m.roots_with_degree(0).empty());
  CHECK(m.roots_with_degree(3).empty());
  auto deg8 = m.roots_with_degree(8);
  REQUIRE(deg8.size() == 2);
  CHECK(deg8[0].coords == IntVec{-1, 2});
  CHECK(deg8[1].coords == IntVec{9, -2});

  const ConeR2& eff = m.effective_cone();
  CHECK(eff.ray1.coords == IntVec{-1, 2});
  CHECK(eff.ray2.coords == IntVec{9, -2});

  auto curves = m.rational_curve_classes();
  REQUIRE(curves.size() == 2);
  CHECK(curves[0].coords == IntVec{-1, 2});
  CHECK(curves[1].coords == IntVec{9, -2});

  const ConeR2& nef = m.nef_cone();
  CHECK(nef.ray1.coords == IntVec{-3, 8});
  CHECK(nef.ray2.coords == IntVec{37, -8});
  CHECK(norm(nef.ray1) == 34);
  CHECK(norm(nef.ray2) == 34);
  // each nef ray is orthogonal to its own wall and positive on the other
  CHECK(pair(nef.ray1, eff.ray1) == 0);
  CHECK(pair(nef.ray1, eff.ray2) == 272);
  CHECK(pair(nef.ray2, eff.ray2) == 0);
  CHECK(pair(nef.ray2, eff.ray1) == 272);
  // the two dual rays pair to the Pell value matching index 272/17 = 16
  CHECK(pair(nef.ray1, nef.ray2) == 1122);

  auto l = m.lattice();
  CHECK(m.is_nef(vec(l, {1, 0})));
  CHECK(m.is_nef(vec(l, {0, 1})));
  CHECK(m.is_nef(vec(l, {5, -1})));
  CHECK(m.is_nef(nef.ray1));
  CHECK_FALSE(m.is_nef(vec(l, {-1, 2})));   // a curve class itself
  CHECK_FALSE(m.is_nef(vec(l, {-2, 5})));   // beyond the ray1 wall
  CHECK_FALSE(m.is_nef(vec(l, {5, -2})));   // beyond the ray2 wall

  // degrees of the two basis polarizations against the two curves swap
  CHECK(pair(vec(l, {0, 1}), curves[0]) == 3);
  CHECK(pair(vec(l, {0, 1}), curves[1]) == 37);
  CHECK(pair(vec(l, {5, -1}), curves[0]) == 37);
  CHECK(pair(vec(l, {5, -1}), curves[1]) == 3);
}

TEST_CASE("determinant -17 model: chamber reduction") {
  auto m = lambda_model();
  auto l = m.lattice();
  auto L = basis_vector(l, 0);
  auto H = basis_vector(l, 1);

  SUBCASE("nef classes are fixed") {
    auto red = m.chamber_reduce(L);
    CHECK_FALSE(red.sign_flipped);
    CHECK(red.roots.empty());
    CHECK(red.image == L);
  }

  SUBCASE("one reflection returns the mirror image of the degree-2 class") {
    auto red = m.chamber_reduce(vec(l, {-7, 16}));
    CHECK_FALSE(red.sign_flipped);
    REQUIRE(red.roots.size() == 1);
    CHECK(red.roots[0].coords == IntVec{-1, 2});
    CHECK(red.image == L);
  }

  SUBCASE("negative-degree input is negated first") {
    auto red = m.chamber_reduce(vec(l, {7, -16}));
    CHECK(red.sign_flipped);
    REQUIRE(red.roots.size() == 1);
    CHECK(red.roots[0].coords == IntVec{-1, 2});
    CHECK(red.image == L);
  }

  SUBCASE("a two-step word reaches the degree-4 class") {
    auto red = m.chamber_reduce(vec(l, {-2112, 4817}));
    CHECK_FALSE(red.sign_flipped);
    REQUIRE(red.roots.size() == 2);
    CHECK(red.roots[0].coords == IntVec{-1, 2});
    CHECK(red.roots[1].coords == IntVec{9, -2});
    CHECK(red.image == H);
    CHECK(norm(red.image) == norm(vec(l, {-2112, 4817})));
  }

  SUBCASE("inputs of nonpositive self-intersection are rejected") {
    CHECK_THROWS_AS(m.chamber_reduce(vec(l, {-1, 2})), DomainError);
    CHECK_THROWS_AS(m.chamber_reduce(zero_vector(l)), DomainError);
  }
}

TEST_CASE("determinant -17 model: projective-model criteria") {
  auto m = lambda_model();
  auto l = m.lattice();
  auto L = basis_vector(l, 0);
  auto H = basis_vector(l, 1);
  auto P = vec(l, {5, -1});

  CHECK(m.section_space_dimension(L) == 3);
  CHECK(m.section_space_dimension(H) == 4);
  CHECK(m.section_space_dimension(P) == 4);
  CHECK_THROWS_AS(m.section_space_dimension(zero_vector(l)), DomainError);
  CHECK_THROWS_AS(m.section_space_dimension(vec(l, {-1, 2})), DomainError);

  CHECK(m.base_point_freeness(L).free);
  CHECK(m.base_point_freeness(H).free);
  CHECK(m.base_point_freeness(P).free);

  CHECK(m.very_ample(L).failure == VeryAmpleResult::Failure::TooSmall);
  CHECK(m.very_ample(H).very_ample());
  CHECK(m.very_ample(P).very_ample());

  auto doubled = m.very_ample(vec(l, {2, 0}));
  CHECK(doubled.failure == VeryAmpleResult::Failure::DoubledPolarization);
  REQUIRE(doubled.witness.has_value());
  CHECK(doubled.witness->coords == IntVec{1, 0});

  auto contracted = m.very_ample(vec(l, {-3, 8}));
  CHECK(contracted.failure == VeryAmpleResult::Failure::ContractedCurve);
  REQUIRE(contracted.witness.has_value());
  CHECK(contracted.witness->coords == IntVec{-1, 2});

  CHECK_FALSE(m.line_class(H).has_value());
  CHECK_FALSE(m.line_class(P).has_value());

  CHECK(std::string(to_string(VeryAmpleResult::Failure::None)) == "none");
  CHECK(std::string(to_string(VeryAmpleResult::Failure::ContractedCurve)) ==
        "contracted-curve");
}

TEST_CASE("square-determinant model with one curve and one pencil ray") {
  auto m = K3Model::create(TwoMinusTwo(), {2, -1}, 10);
  auto l = m.lattice();
  CHECK_FALSE(m.no_isotropic_classes());

  const ConeR2& eff = m.effective_cone();
  CHECK(eff.ray1.coords == IntVec{0, 1});   // the -2 curve, degree 2
  CHECK(eff.ray2.coords == IntVec{1, -1});  // elliptic pencil, degree 2
  CHECK(norm(eff.ray1) == -2);
  CHECK(norm(eff.ray2) == 0);

  auto curves = m.rational_curve_classes();
  REQUIRE(curves.size() == 1);
  CHECK(curves[0].coords == IntVec{0, 1});

  const ConeR2& nef = m.nef_cone();
  CHECK(nef.ray1.coords == IntVec{1, 0});
  CHECK(nef.ray2.coords == IntVec{1, -1});  // isotropic rays are self-dual

  auto h = vec(l, {3, 0});
  CHECK(m.is_nef(h));
  auto res = m.very_ample(h);
  CHECK(res.failure == VeryAmpleResult::Failure::ContractedCurve);
  REQUIRE(res.witness.has_value());
  CHECK(res.witness->coords == IntVec{0, 1});

  // a double pencil fiber has two sections plus the trivial one
  CHECK(m.section_space_dimension(vec(l, {2, -2})) == 3);
  CHECK(m.section_space_dimension(vec(l, {1, -1})) == 2);

  // degree (e, x) = 2x0 is even, so no elliptic class of degree 1 exists
  CHECK(m.base_point_freeness(vec(l, {1, 0})).free);
}

TEST_CASE("hyperbolic-plane model: base loci and low-degree pencils") {
  auto m = K3Model::create(U(), {2, 1}, 10);
  auto l = m.lattice();

  const ConeR2& eff = m.effective_cone();
  CHECK(eff.ray1.coords == IntVec{-1, 1});  // the -2 curve, degree 1
  CHECK(eff.ray2.coords == IntVec{1, 0});   // elliptic pencil, degree 1

  const ConeR2& nef = m.nef_cone();
  CHECK(nef.ray1.coords == IntVec{1, 1});
  CHECK(nef.ray2.coords == IntVec{1, 0});

  auto g = vec(l, {1, 1});
  CHECK(m.is_nef(g));
  auto bpf = m.base_point_freeness(g);
  CHECK_FALSE(bpf.free);
  REQUIRE(bpf.obstruction.has_value());
  CHECK(bpf.obstruction->coords == IntVec{0, 1});  // lex-first of two pencils

  auto res = m.very_ample(vec(l, {2, 2}));
  CHECK(res.failure == VeryAmpleResult::Failure::LowDegreeElliptic);
  REQUIRE(res.witness.has_value());
  CHECK(res.witness->coords == IntVec{0, 1});
}

TEST_CASE("hyperbolic-plane model with the ample class on both walls") {
  // (1,1) pairs to zero with both -2 classes; they are not effective, so
  // the effective cone degenerates to the positive cone
  auto m = K3Model::create(U(), {1, 1}, 10);
  auto l = m.lattice();

  auto walls = m.roots_with_degree(0);
  REQUIRE(walls.size() == 2);
  CHECK(walls[0].coords == IntVec{-1, 1});
  CHECK(walls[1].coords == IntVec{1, -1});

  const ConeR2& eff = m.effective_cone();
  CHECK(eff.ray1.coords == IntVec{0, 1});
  CHECK(eff.ray2.coords == IntVec{1, 0});
  CHECK(m.rational_curve_classes().empty());

  const ConeR2& nef = m.nef_cone();
  CHECK(nef.ray1.coords == IntVec{0, 1});
  CHECK(nef.ray2.coords == IntVec{1, 0});

  // no curve walls: chamber reduction never moves a positive class
  auto red = m.chamber_reduce(vec(l, {3, 5}));
  CHECK(red.roots.empty());
  CHECK(red.image.coords == IntVec{3, 5});
}

TEST_CASE("perturbed determinant -41 model: honest refusal and resolution") {
  auto perturbed = Lattice::make({{2, 7}, {7, 4}});
  CHECK(discriminant(*perturbed).abs_det == 41);

  SUBCASE("the degree-50 bound is not enough") {
    auto m = K3Model::create(perturbed, {1, 0}, 50);
    CHECK_THROWS_AS(m.effective_cone(), InconclusiveConeError);
    try {
      m.nef_cone();
      FAIL("expected InconclusiveConeError");
    } catch (const InconclusiveConeError& e) {
      CHECK(e.degree_max == 50);
    }
  }

  SUBCASE("degree 64 resolves both rays") {
    auto m = K3Model::create(perturbed, {1, 0}, 64);
    const ConeR2& eff = m.effective_cone();
    CHECK(eff.ray1.coords == IntVec{-3, 10});
    CHECK(eff.ray2.coords == IntVec{67, -10});
    CHECK(norm(eff.ray1) == -2);
    CHECK(norm(eff.ray2) == -2);
    CHECK(pair(eff.ray1, m.ample()) == 64);
    CHECK(pair(eff.ray2, m.ample()) == 64);
    for (int d = 1; d < 64; ++d)
      CHECK(m.roots_with_degree(d).empty());
  }
}
