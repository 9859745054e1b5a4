#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <map>
#include <vector>

#include "lefvol/complex.hpp"
#include "lefvol/errors.hpp"
#include "lefvol/estimate.hpp"
#include "lefvol/geometry.hpp"
#include "lefvol/rng.hpp"

using namespace lefvol;
using Catch::Approx;

namespace {

Simplex simplex(std::initializer_list<const char*> labels) {
  std::vector<VertexId> vs;
  for (const char* l : labels) vs.push_back(VertexId{l});
  return Simplex(std::move(vs));
}

Eigen::VectorXd vec(std::initializer_list<double> xs) {
  Eigen::VectorXd v(static_cast<long>(xs.size()));
  long i = 0;
  for (double x : xs) v(i++) = x;
  return v;
}

// Unit equilateral triangle in the plane.
Embedding equilateral() {
  return Embedding(2, {{VertexId{"a"}, vec({0.0, 0.0})},
                       {VertexId{"b"}, vec({1.0, 0.0})},
                       {VertexId{"c"}, vec({0.5, std::sqrt(3.0) / 2.0})}});
}

// Regular tetrahedron with unit edges.
Embedding regular_tet() {
  return Embedding(3, {{VertexId{"a"}, vec({0.0, 0.0, 0.0})},
                       {VertexId{"b"}, vec({1.0, 0.0, 0.0})},
                       {VertexId{"c"}, vec({0.5, std::sqrt(3.0) / 2.0, 0.0})},
                       {VertexId{"d"}, vec({0.5, std::sqrt(3.0) / 6.0,
                                            std::sqrt(6.0) / 3.0})}});
}

// Corner tetrahedron 0, e1, e2, e3: every normal cone is an orthant piece.
Embedding corner_tet() {
  return Embedding(3, {{VertexId{"o"}, vec({0.0, 0.0, 0.0})},
                       {VertexId{"x"}, vec({1.0, 0.0, 0.0})},
                       {VertexId{"y"}, vec({0.0, 1.0, 0.0})},
                       {VertexId{"z"}, vec({0.0, 0.0, 1.0})}});
}

// Regular 4-simplex with unit edges, realized via its Cayley-Menger-exact
// coordinates: vertex i at distance 1 from all others.
Embedding regular_4simplex() {
  // Standard construction: e_i / sqrt(2) in R^5 has unit pairwise distances;
  // project isometrically by using the first 4 coordinates of a centered copy.
  // Simpler: build incrementally in R^4.
  std::map<VertexId, Eigen::VectorXd> pts;
  pts[VertexId{"v0"}] = vec({0.0, 0.0, 0.0, 0.0});
  pts[VertexId{"v1"}] = vec({1.0, 0.0, 0.0, 0.0});
  pts[VertexId{"v2"}] = vec({0.5, std::sqrt(3.0) / 2.0, 0.0, 0.0});
  pts[VertexId{"v3"}] = vec({0.5, std::sqrt(3.0) / 6.0, std::sqrt(6.0) / 3.0, 0.0});
  pts[VertexId{"v4"}] =
      vec({0.5, std::sqrt(3.0) / 6.0, std::sqrt(6.0) / 12.0, std::sqrt(10.0) / 4.0});
  return Embedding(4, std::move(pts));
}

constexpr double kSqrt3Over4 = 0.4330127018922193;  // area of the unit triangle
constexpr double kRegularTetVolume = 0.11785113019775793;  // 1/(6 sqrt 2)
constexpr double kRegular4Volume = 0.02329237476562281;    // sqrt(5)/96
// 6 * (1/2 - acos(1/3)/(2 pi)): total edge contribution of the regular tet.
constexpr double kRegularTetMu1 = 1.824520343908178;

}  // namespace

TEST_CASE("rng streams are deterministic and sequence-stable", "[rng]") {
  Rng a(12345), b(12345);
  for (int i = 0; i < 1000; ++i) REQUIRE(a.next_u64() == b.next_u64());

  Rng c(12345);
  for (int i = 0; i < 200; ++i) {
    const double u = c.uniform01();
    REQUIRE(u >= 0.0);
    REQUIRE(u < 1.0);
  }

  // Child streams differ from the parent and from each other.
  Rng base(7);
  CHECK(Rng(base.child(0).seed()).next_u64() != Rng(base.child(1).seed()).next_u64());
  CHECK(base.child(0).seed() != base.seed());

  // below(n) stays in range.
  Rng d(99);
  for (int i = 0; i < 500; ++i) REQUIRE(d.below(7) < 7);

  // normal() produces a sane spread.
  Rng e(5);
  double sum = 0.0, sum2 = 0.0;
  const int n = 20000;
  for (int i = 0; i < n; ++i) {
    const double x = e.normal();
    sum += x;
    sum2 += x * x;
  }
  CHECK(std::abs(sum / n) < 0.05);
  CHECK(sum2 / n == Approx(1.0).margin(0.05));
}

TEST_CASE("embedding access and validation", "[geometry]") {
  const Embedding e = equilateral();
  CHECK(e.ambient_dim() == 2);
  CHECK(e.has_vertex(VertexId{"a"}));
  CHECK_FALSE(e.has_vertex(VertexId{"q"}));
  CHECK_THROWS_AS(e.point(VertexId{"q"}), ConfigError);

  const Eigen::MatrixXd pts = e.points_of(simplex({"c", "a"}));
  REQUIRE(pts.rows() == 2);
  REQUIRE(pts.cols() == 2);
  CHECK(pts.col(0) == vec({0.0, 0.0}));  // canonical order: a before c
  CHECK(pts.col(1)(0) == 0.5);

  const Complex X = closure({simplex({"a", "b", "c"})});
  CHECK(e.covers(X));
  CHECK_NOTHROW(validate_embedding(X, e));

  const Complex Y = closure({simplex({"a", "b", "q"})});
  CHECK_FALSE(e.covers(Y));
  CHECK_THROWS_AS(validate_embedding(Y, e), ConfigError);

  const Embedding flat(2, {{VertexId{"a"}, vec({0.0, 0.0})},
                           {VertexId{"b"}, vec({1.0, 0.0})},
                           {VertexId{"c"}, vec({2.0, 0.0})}});
  CHECK_THROWS_AS(validate_embedding(X, flat), DegenerateSimplexError);
}

TEST_CASE("simplex volumes from squared distances", "[geometry]") {
  const Embedding e = equilateral();
  CHECK(simplex_volume(simplex({"a"}), e).value == 1.0);
  CHECK(simplex_volume(simplex({"a", "b"}), e).value == Approx(1.0).margin(1e-12));
  CHECK(simplex_volume(simplex({"a", "b", "c"}), e).value ==
        Approx(kSqrt3Over4).margin(1e-12));

  CHECK(simplex_volume(simplex({"a", "b", "c", "d"}), regular_tet()).value ==
        Approx(kRegularTetVolume).margin(1e-12));
  CHECK(simplex_volume(simplex({"v0", "v1", "v2", "v3", "v4"}),
                       regular_4simplex())
            .value == Approx(kRegular4Volume).margin(1e-12));

  // Volume depends only on pairwise distances, not on the ambient embedding.
  const Embedding lifted(3, {{VertexId{"a"}, vec({0.0, 0.0, 5.0})},
                             {VertexId{"b"}, vec({1.0, 0.0, 5.0})},
                             {VertexId{"c"}, vec({0.5, std::sqrt(3.0) / 2.0, 5.0})}});
  CHECK(simplex_volume(simplex({"a", "b", "c"}), lifted).value ==
        Approx(kSqrt3Over4).margin(1e-12));

  const Embedding flat(2, {{VertexId{"a"}, vec({0.0, 0.0})},
                           {VertexId{"b"}, vec({1.0, 0.0})},
                           {VertexId{"c"}, vec({2.0, 0.0})}});
  const SimplexVolume degen = simplex_volume(simplex({"a", "b", "c"}), flat);
  CHECK(degen.degenerate);
  CHECK(degen.value == 0.0);
  CHECK_FALSE(simplex_volume(simplex({"a", "b"}), flat).degenerate);
}

TEST_CASE("external angles in the exact tiers", "[geometry]") {
  const Embedding e = equilateral();
  const Simplex tri = simplex({"a", "b", "c"});
  const MonteCarloConfig mc{1000, 1};

  const Estimate whole = external_angle(tri, tri, e, mc);
  CHECK(whole.is_exact());
  CHECK(whole.value == 1.0);

  const Estimate facet = external_angle(simplex({"a", "b"}), tri, e, mc);
  CHECK(facet.is_exact());
  CHECK(facet.value == 0.5);

  // Equilateral interior angle pi/3 gives external angle 1/3 at each vertex.
  for (const char* v : {"a", "b", "c"}) {
    const Estimate corner = external_angle(simplex({v}), tri, e, mc);
    CHECK(corner.is_exact());
    CHECK(corner.value == Approx(1.0 / 3.0).margin(1e-12));
  }

  // Right triangle: 1/4 at the right angle, 3/8 at the two pi/4 corners.
  const Embedding right(2, {{VertexId{"o"}, vec({0.0, 0.0})},
                            {VertexId{"x"}, vec({1.0, 0.0})},
                            {VertexId{"y"}, vec({0.0, 1.0})}});
  const Simplex rtri = simplex({"o", "x", "y"});
  CHECK(external_angle(simplex({"o"}), rtri, right, mc).value ==
        Approx(0.25).margin(1e-12));
  CHECK(external_angle(simplex({"x"}), rtri, right, mc).value ==
        Approx(0.375).margin(1e-12));

  // Codim-2 tier in a tetrahedron: the corner tet's edge along e1 sits
  // between the coordinate planes y=0 and z=0, dihedral pi/2.
  const Estimate edge_angle =
      external_angle(simplex({"o", "x"}), simplex({"o", "x", "y", "z"}),
                     corner_tet(), mc);
  CHECK(edge_angle.is_exact());
  CHECK(edge_angle.value == Approx(0.25).margin(1e-12));

  CHECK_THROWS_AS(
      external_angle(simplex({"a", "q"}), tri, e, mc), FaceRelationError);
}

TEST_CASE("external angle Monte Carlo tier matches an orthant oracle", "[geometry][mc]") {
  // Vertex 0 of the corner tetrahedron: normal cone is the negative orthant,
  // exactly 1/8 of directions. Codimension 3 forces the sampling path.
  const MonteCarloConfig mc{400000, 2024};
  const Estimate angle = external_angle(
      simplex({"o"}), simplex({"o", "x", "y", "z"}), corner_tet(), mc);
  CHECK_FALSE(angle.is_exact());
  CHECK(angle.std_error > 0.0);
  CHECK(angle.std_error < 1e-3);
  CHECK(angle.value == Approx(0.125).margin(3.0 * angle.std_error));

  // Identical config reproduces identical bits.
  const Estimate again = external_angle(
      simplex({"o"}), simplex({"o", "x", "y", "z"}), corner_tet(), mc);
  CHECK(again.value == angle.value);
  CHECK(again.std_error == angle.std_error);
}

TEST_CASE("intrinsic volumes of segments, triangles, tetrahedra", "[geometry]") {
  const MonteCarloConfig mc{1000, 3};

  const Embedding e = equilateral();
  const IntrinsicVolumeVector seg = intrinsic_volumes(simplex({"a", "b"}), e, mc);
  REQUIRE(seg.top_dim() == 1);
  CHECK(seg[0].value == 1.0);
  CHECK(seg[1].value == Approx(1.0).margin(1e-12));
  CHECK(seg[0].is_exact());
  CHECK(seg[1].is_exact());

  const IntrinsicVolumeVector tri =
      intrinsic_volumes(simplex({"a", "b", "c"}), e, mc);
  REQUIRE(tri.top_dim() == 2);
  CHECK(tri[0].value == 1.0);
  CHECK(tri[1].value == Approx(1.5).margin(1e-12));  // half the perimeter
  CHECK(tri[2].value == Approx(kSqrt3Over4).margin(1e-12));

  const IntrinsicVolumeVector tet =
      intrinsic_volumes(simplex({"a", "b", "c", "d"}), regular_tet(), mc);
  REQUIRE(tet.top_dim() == 3);
  CHECK(tet[0].value == 1.0);
  CHECK(tet[1].is_exact());
  CHECK(tet[1].value == Approx(kRegularTetMu1).margin(1e-12));
  CHECK(tet[2].value == Approx(std::sqrt(3.0) / 2.0).margin(1e-12));  // half surface
  CHECK(tet[3].value == Approx(kRegularTetVolume).margin(1e-12));

  // Out-of-range and trivial k.
  CHECK(intrinsic_volume(simplex({"a", "b"}), e, 5, mc).value == 0.0);
  CHECK(intrinsic_volume(simplex({"a"}), e, 0, mc).value == 1.0);
  CHECK_THROWS_AS(intrinsic_volume(simplex({"a"}), e, -1, mc), ConfigError);

  const Embedding flat(2, {{VertexId{"a"}, vec({0.0, 0.0})},
                           {VertexId{"b"}, vec({1.0, 0.0})},
                           {VertexId{"c"}, vec({2.0, 0.0})}});
  CHECK_THROWS_AS(intrinsic_volume(simplex({"a", "b", "c"}), flat, 1, mc),
                  DegenerateSimplexError);
}

TEST_CASE("intrinsic volumes scale covariantly", "[geometry]") {
  const MonteCarloConfig mc{1000, 4};
  const double lambda = 2.5;
  const Embedding e = equilateral();
  std::map<VertexId, Eigen::VectorXd> scaled;
  for (const auto& [v, p] : e.coords()) scaled[v] = lambda * p;
  const Embedding se(2, std::move(scaled));

  const Simplex tri = simplex({"a", "b", "c"});
  const IntrinsicVolumeVector base = intrinsic_volumes(tri, e, mc);
  const IntrinsicVolumeVector big = intrinsic_volumes(tri, se, mc);
  for (int k = 0; k <= 2; ++k) {
    CHECK(big[k].value ==
          Approx(std::pow(lambda, k) * base[k].value).margin(1e-12));
  }
}

TEST_CASE("intrinsic volumes are isometry invariant", "[geometry]") {
  const MonteCarloConfig mc{1000, 5};
  const Simplex tet = simplex({"a", "b", "c", "d"});
  const Embedding e = regular_tet();
  const IntrinsicVolumeVector base = intrinsic_volumes(tet, e, mc);

  for (std::uint64_t seed : {11u, 22u, 33u}) {
    const IsometrySpec phi = sample_isometry(3, seed, 4.0);
    const IntrinsicVolumeVector moved =
        intrinsic_volumes(tet, apply_isometry(e, phi), mc);
    for (int k = 0; k <= 3; ++k) {
      CHECK(moved[k].value == Approx(base[k].value).margin(1e-9));
    }
  }
}

TEST_CASE("open simplex volumes: sign rule and boundary recursion agree", "[geometry]") {
  const MonteCarloConfig mc{1000, 6};
  const Embedding e = equilateral();

  const IntrinsicVolumeVector vertex =
      open_intrinsic_volumes(simplex({"a"}), e, mc);
  CHECK(vertex[0].value == 1.0);

  const IntrinsicVolumeVector edge =
      open_intrinsic_volumes(simplex({"a", "b"}), e, mc);
  CHECK(edge[0].value == -1.0);
  CHECK(edge[1].value == Approx(1.0).margin(1e-12));

  const IntrinsicVolumeVector tri =
      open_intrinsic_volumes(simplex({"a", "b", "c"}), e, mc);
  CHECK(tri[0].value == 1.0);
  CHECK(tri[1].value == Approx(-1.5).margin(1e-12));
  CHECK(tri[2].value == Approx(kSqrt3Over4).margin(1e-12));

  // The recursion over the face poset reproduces the sign rule exactly in
  // the exact tiers (dimension <= 3).
  for (const Simplex& s : {simplex({"a"}), simplex({"a", "b"}), simplex({"a", "b", "c"})}) {
    const IntrinsicVolumeVector direct = open_intrinsic_volumes(s, e, mc);
    const IntrinsicVolumeVector recursed =
        open_intrinsic_volumes_by_boundary(s, e, mc);
    REQUIRE(direct.top_dim() == recursed.top_dim());
    for (int k = 0; k <= direct.top_dim(); ++k) {
      CHECK(direct[k].value == Approx(recursed[k].value).margin(1e-9));
    }
  }

  const Simplex tet = simplex({"a", "b", "c", "d"});
  const IntrinsicVolumeVector direct =
      open_intrinsic_volumes(tet, regular_tet(), mc);
  const IntrinsicVolumeVector recursed =
      open_intrinsic_volumes_by_boundary(tet, regular_tet(), mc);
  for (int k = 0; k <= 3; ++k) {
    CHECK(direct[k].value == Approx(recursed[k].value).margin(1e-9));
  }
}

TEST_CASE("open volume paths agree through the Monte Carlo tier", "[geometry][mc]") {
  const MonteCarloConfig mc{200000, 7};
  const Simplex s = simplex({"v0", "v1", "v2", "v3", "v4"});
  const Embedding e = regular_4simplex();
  const IntrinsicVolumeVector direct = open_intrinsic_volumes(s, e, mc);
  const IntrinsicVolumeVector recursed = open_intrinsic_volumes_by_boundary(s, e, mc);
  for (int k = 0; k <= 4; ++k) {
    // The two paths share Monte Carlo estimates, so their errors correlate;
    // the sum of standard errors bounds the deviation for any correlation.
    const double tol =
        std::max(1e-9, 3.0 * (direct[k].std_error + recursed[k].std_error));
    CHECK(direct[k].value == Approx(recursed[k].value).margin(tol));
  }
}

TEST_CASE("vertex external angles of a simplex sum to one", "[geometry][mc]") {
  const MonteCarloConfig mc{200000, 8};
  const Simplex tet = simplex({"a", "b", "c", "d"});
  const Embedding e = regular_tet();

  // Tetrahedron vertices have codimension 3, so the sum carries MC error.
  Estimate sum = Estimate::exact(0.0);
  for (const Simplex& v : tet.faces_of_dim(0)) {
    sum.accumulate(external_angle(v, tet, e, mc));
  }
  CHECK(sum.value == Approx(1.0).margin(std::max(1e-9, 3.0 * sum.std_error)));

  // Triangle vertices are codimension 2: the sum is exact.
  const Simplex tri = simplex({"a", "b", "c"});
  Estimate tri_sum = Estimate::exact(0.0);
  for (const Simplex& v : tri.faces_of_dim(0)) {
    tri_sum.accumulate(external_angle(v, tri, equilateral(), mc));
  }
  CHECK(tri_sum.is_exact());
  CHECK(tri_sum.value == Approx(1.0).margin(1e-12));

  const Simplex four = simplex({"v0", "v1", "v2", "v3", "v4"});
  const Embedding e4 = regular_4simplex();
  Estimate sum4 = Estimate::exact(0.0);
  for (const Simplex& v : four.faces_of_dim(0)) {
    sum4.accumulate(external_angle(v, four, e4, mc));
  }
  CHECK(sum4.value == Approx(1.0).margin(std::max(1e-9, 3.0 * sum4.std_error)));
}

TEST_CASE("unit ball volumes", "[geometry]") {
  CHECK(unit_ball_volume(0) == 1.0);
  CHECK(unit_ball_volume(1) == Approx(2.0).margin(1e-14));
  CHECK(unit_ball_volume(2) == Approx(3.141592653589793).margin(1e-14));
  CHECK(unit_ball_volume(3) == Approx(4.1887902047863905).margin(1e-14));
  CHECK_THROWS_AS(unit_ball_volume(-1), ConfigError);
}

TEST_CASE("point to simplex distance", "[geometry]") {
  const Embedding right(2, {{VertexId{"o"}, vec({0.0, 0.0})},
                            {VertexId{"x"}, vec({1.0, 0.0})},
                            {VertexId{"y"}, vec({0.0, 1.0})}});
  const Simplex tri = simplex({"o", "x", "y"});

  CHECK(point_simplex_distance(vec({0.25, 0.25}), tri, right) == 0.0);
  CHECK(point_simplex_distance(vec({1.0 / 3, 1.0 / 3}), tri, right) ==
        Approx(0.0).margin(1e-12));
  CHECK(point_simplex_distance(vec({0.25, -1.0}), tri, right) ==
        Approx(1.0).margin(1e-12));
  CHECK(point_simplex_distance(vec({-3.0, -4.0}), tri, right) ==
        Approx(5.0).margin(1e-12));
  CHECK(point_simplex_distance(vec({1.0, 1.0}), tri, right) ==
        Approx(0.7071067811865476).margin(1e-12));

  // Distance to a lone vertex and to a segment.
  CHECK(point_simplex_distance(vec({3.0, 4.0}), simplex({"o"}), right) ==
        Approx(5.0).margin(1e-12));
  CHECK(point_simplex_distance(vec({0.5, 2.0}), simplex({"o", "x"}), right) ==
        Approx(2.0).margin(1e-12));
  CHECK(point_simplex_distance(vec({2.0, 0.0}), simplex({"o", "x"}), right) ==
        Approx(1.0).margin(1e-12));

  // The reusable distancer matches the one-shot helper.
  const PointSimplexDistancer fast(tri, right);
  Rng rng(17);
  for (int i = 0; i < 200; ++i) {
    const Eigen::VectorXd p = vec({rng.uniform(-2.0, 3.0), rng.uniform(-2.0, 3.0)});
    CHECK(fast.distance(p) == Approx(point_simplex_distance(p, tri, right)).margin(1e-12));
  }
}

TEST_CASE("tube volume around a segment", "[geometry][mc]") {
  // In R^1 the tube of [0,1] at rho=1 is [-1,2]: the box coincides with the
  // tube, so the indicator never misses and the estimate is exact.
  const Embedding line(1, {{VertexId{"a"}, vec({0.0})}, {VertexId{"b"}, vec({1.0})}});
  const TubeEstimate exact = tube_volume_mc(simplex({"a", "b"}), line, 1.0, 20000, 42);
  CHECK(exact.volume_estimate == Approx(3.0).margin(1e-12));
  CHECK(exact.std_error == 0.0);

  // Stadium around a unit segment in the plane: 2 rho + pi rho^2.
  const Embedding plane(2, {{VertexId{"a"}, vec({0.0, 0.0})},
                            {VertexId{"b"}, vec({1.0, 0.0})}});
  const TubeEstimate stadium =
      tube_volume_mc(simplex({"a", "b"}), plane, 0.5, 400000, 43);
  CHECK(stadium.samples == 400000);
  CHECK(stadium.rho == 0.5);
  CHECK(stadium.std_error > 0.0);
  CHECK(stadium.volume_estimate ==
        Approx(1.0 + 3.141592653589793 / 4.0).margin(3.0 * stadium.std_error));

  // Deterministic per seed.
  const TubeEstimate again =
      tube_volume_mc(simplex({"a", "b"}), plane, 0.5, 400000, 43);
  CHECK(again.volume_estimate == stadium.volume_estimate);

  CHECK_THROWS_AS(tube_volume_mc(simplex({"a", "b"}), plane, 0.0, 100, 1), ConfigError);
  CHECK_THROWS_AS(tube_volume_mc(simplex({"a", "b"}), plane, 0.5, 0, 1), ConfigError);
}

TEST_CASE("tube volume matches the Steiner polynomial", "[geometry][mc]") {
  const Embedding e = equilateral();
  const Simplex tri = simplex({"a", "b", "c"});
  const MonteCarloConfig mc{1000, 9};
  const IntrinsicVolumeVector mu = intrinsic_volumes(tri, e, mc);

  for (double rho : {0.1, 0.5}) {
    double steiner = 0.0;
    for (int k = 0; k <= 2; ++k) {
      steiner += std::pow(rho, 2 - k) * unit_ball_volume(2 - k) * mu[k].value;
    }
    const TubeEstimate tube = tube_volume_mc(tri, e, rho, 400000, 77);
    CHECK(tube.volume_estimate == Approx(steiner).margin(3.0 * tube.std_error));
  }

  // Frozen value of the polynomial at rho = 0.1.
  double s01 = 0.0;
  for (int k = 0; k <= 2; ++k) {
    s01 += std::pow(0.1, 2 - k) * unit_ball_volume(2 - k) * mu[k].value;
  }
  CHECK(s01 == Approx(0.7644286284281172).margin(1e-12));
}

TEST_CASE("sampled isometries are orthogonal and deterministic", "[geometry]") {
  for (std::uint64_t seed : {1u, 2u, 3u, 4u}) {
    const IsometrySpec phi = sample_isometry(3, seed, 2.0);
    const Eigen::MatrixXd gram = phi.rotation.transpose() * phi.rotation;
    CHECK((gram - Eigen::MatrixXd::Identity(3, 3)).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(std::abs(std::abs(phi.rotation.determinant()) - 1.0) < 1e-12);
    CHECK(phi.translation.cwiseAbs().maxCoeff() <= 2.0);

    const IsometrySpec same = sample_isometry(3, seed, 2.0);
    CHECK(same.rotation == phi.rotation);
    CHECK(same.translation == phi.translation);
  }
  CHECK_THROWS_AS(sample_isometry(0, 1, 1.0), ConfigError);

  // apply_isometry preserves pairwise distances.
  const Embedding e = regular_tet();
  const IsometrySpec phi = sample_isometry(3, 99, 5.0);
  const Embedding moved = apply_isometry(e, phi);
  for (const auto& [v, p] : e.coords()) {
    for (const auto& [w, q] : e.coords()) {
      CHECK((moved.point(v) - moved.point(w)).norm() ==
            Approx((p - q).norm()).margin(1e-12));
    }
  }
  const IsometrySpec id = IsometrySpec::identity(3);
  CHECK(apply_isometry(e, id).point(VertexId{"b"}) == e.point(VertexId{"b"}));
}
