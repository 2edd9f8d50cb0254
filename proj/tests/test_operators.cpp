#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "sgrover/errors.hpp"
#include "sgrover/generators.hpp"
#include "sgrover/operators.hpp"

using namespace sgrover;

namespace {

double max_abs(const Matrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

OrientedSimplex by_labels(const SimplicialComplex& c, std::vector<std::string> labels) {
  std::vector<VertexId> ids;
  for (const auto& l : labels) ids.push_back(*c.vertex_id(l));
  return make_oriented(std::span<const VertexId>(ids));
}

// published 6x6 table for the reduced up-discriminant of the tetrahedron
// boundary in the edge basis (01),(02),(12),(13),(23),(03)
Eigen::MatrixXd sphere_up_table() {
  Eigen::MatrixXd t(6, 6);
  t << 0, -1, 1, 1, 0, -1,
      -1, 0, -1, 0, 1, -1,
      1, -1, 0, -1, 1, 0,
      1, 0, -1, 0, -1, -1,
      0, 1, 1, -1, 0, -1,
      -1, -1, 0, -1, -1, 0;
  return t / 4.0;
}

// published 5x5 table for the reduced down-discriminant of the five-triangle
// complex in the basis (012),(214),(134),(013),(213)
Eigen::MatrixXd fig5_down_table() {
  const double a = 1.0 / 3.0;
  const double b = 1.0 / (2.0 * std::sqrt(3.0));
  Eigen::MatrixXd t(5, 5);
  t << 0, -a, 0, a, -b,
      -a, 0, -a, 0, b,
      0, -a, 0, a, b,
      a, 0, a, 0, b,
      -b, b, b, b, 0;
  return t;
}

OrientedBasis sphere_paper_basis(const SimplicialComplex& c) {
  return reduced_basis_from(
      c, {by_labels(c, {"0", "1"}), by_labels(c, {"0", "2"}), by_labels(c, {"1", "2"}),
          by_labels(c, {"1", "3"}), by_labels(c, {"2", "3"}), by_labels(c, {"0", "3"})});
}

OrientedBasis fig5_paper_basis(const SimplicialComplex& c) {
  return reduced_basis_from(c, {by_labels(c, {"0", "1", "2"}), by_labels(c, {"2", "1", "4"}),
                                by_labels(c, {"1", "3", "4"}), by_labels(c, {"0", "1", "3"}),
                                by_labels(c, {"2", "1", "3"})});
}

}  // namespace

TEST_CASE("alpha is an isometry with the right shape") {
  auto sphere = make_sphere();
  Matrix a = build_alpha(sphere, 2);
  CHECK(a.rows() == 24);  // 3! per triangle
  CHECK(a.cols() == 12);  // 2! per edge
  CHECK(max_abs(a.adjoint() * a - Matrix::Identity(12, 12)) < 1e-12);
  for (int col = 0; col < a.cols(); ++col) CHECK(a.col(col).norm() == doctest::Approx(1.0));
  CHECK_THROWS_AS(build_alpha(sphere, 0), RangeError);
  CHECK_THROWS_AS(build_alpha(sphere, 3), RangeError);
}

TEST_CASE("ordered-space walk pieces") {
  auto sphere = make_sphere();
  GWalkOps g = build_g_walk(sphere, 2);
  const int n = g.space.size();
  CHECK(n == 24);
  CHECK(max_abs(g.proj * g.proj - g.proj) < 1e-12);
  CHECK(max_abs(g.proj - g.proj.adjoint()) < 1e-12);
  CHECK(max_abs(g.shift * g.shift - Matrix::Identity(n, n)) < 1e-12);
  CHECK(max_abs(g.coin * g.coin - Matrix::Identity(n, n)) < 1e-12);
  CHECK(max_abs(g.walk.adjoint() * g.walk - Matrix::Identity(n, n)) < 1e-12);

  // discriminant of the ordered walk: projection of the shift, Hermitian
  Matrix dg = discriminant_g(sphere, 2);
  CHECK(dg.rows() == 12);
  CHECK(max_abs(dg - dg.adjoint()) < 1e-12);
  CHECK(max_abs(dg - g.alpha.adjoint() * g.walk * g.alpha) < 1e-12);

  // the antisymmetrizer fixes exactly the sign-equivariant vectors
  OrientedBasis red = reduced_oriented_basis(sphere, 2);
  Matrix j_minus = antisym_embedding(sphere, 2, red);
  CHECK(max_abs(g.proj * j_minus - j_minus) < 1e-12);
  Matrix j_plus = sym_embedding(sphere, 2);
  CHECK(max_abs(g.proj * j_plus) < 1e-12);
}

TEST_CASE("edge-space walk pieces") {
  auto sphere = make_sphere();
  EdgeOps ops = build_edge_ops(sphere, 1, Mode::Up);
  const int ne = ops.space.size();
  CHECK(ne == 96);  // 12 oriented edges with 2*2*2 up edges each
  CHECK(max_abs(ops.d * ops.d.adjoint() - Matrix::Identity(24, 24)) < 1e-12);
  CHECK(max_abs(ops.shift * ops.shift - Matrix::Identity(ne, ne)) == 0.0);
  CHECK(max_abs(ops.walk.adjoint() * ops.walk - Matrix::Identity(ne, ne)) < 1e-12);
  CHECK(max_abs(ops.walk.imag()) == 0.0);  // real orthogonal

  // the shift is a signed permutation
  for (int e = 0; e < ne; ++e) {
    CHECK(std::abs(ops.shift(ops.space.reversed(e), e)) == 1.0);
  }

  auto fig5 = make_fig5();
  CHECK_THROWS_AS(build_edge_ops(fig5, 2, Mode::Up), RangeError);  // no 3-simplices
  auto edge = make_simplex(2);
  CHECK_THROWS_AS(build_edge_ops(edge, 1, Mode::Down), RangeError);  // empty edge set
}

TEST_CASE("the two discriminant routes agree") {
  struct Case {
    SimplicialComplex c;
    int q;
    Mode mode;
  };
  std::vector<Case> cases;
  cases.push_back({make_sphere(), 1, Mode::Up});
  cases.push_back({make_sphere(), 2, Mode::Down});
  cases.push_back({make_fig5(), 2, Mode::Down});
  cases.push_back({make_cylinder_strip(4), 2, Mode::Down});
  cases.push_back({make_simplex(5), 1, Mode::Up});
  cases.push_back({make_simplex(5), 2, Mode::Down});
  for (auto& [c, q, mode] : cases) {
    EdgeOps ops = build_edge_ops(c, q, mode);
    Matrix via_walk = ops.d * ops.shift * ops.d.adjoint();
    Matrix direct = discriminant_full(c, q, mode);
    CHECK(max_abs(via_walk - direct) < 1e-13);
    CHECK(max_abs(direct - direct.adjoint()) == 0.0);
  }
}

TEST_CASE("golden matrix: sphere up-discriminant") {
  auto sphere = make_sphere();
  Matrix d = discriminant_reduced(sphere, 1, Mode::Up, sphere_paper_basis(sphere));
  CHECK(max_abs(d - sphere_up_table().cast<std::complex<double>>()) < 1e-12);
}

TEST_CASE("golden matrix: five-triangle down-discriminant") {
  auto fig5 = make_fig5();
  Matrix d = discriminant_reduced(fig5, 2, Mode::Down, fig5_paper_basis(fig5));
  CHECK(max_abs(d - fig5_down_table().cast<std::complex<double>>()) < 1e-12);
}

TEST_CASE("reduced basis orientation flips conjugate by signs") {
  auto sphere = make_sphere();
  Matrix d0 = discriminant_reduced(sphere, 1, Mode::Up);
  // flipping one basis element negates its row and column
  auto basis = reduced_oriented_basis(sphere, 1);
  basis.elems[2] = opposite(basis.elems[2]);
  Matrix d1 = discriminant_reduced(sphere, 1, Mode::Up, basis);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      double want = ((i == 2) != (j == 2)) ? -d0(i, j).real() : d0(i, j).real();
      CHECK(d1(i, j).real() == want);
    }
}

TEST_CASE("full-basis discriminant respects the sign decomposition") {
  auto fig5 = make_fig5();
  Matrix d = discriminant_full(fig5, 2, Mode::Down);
  Matrix p = projector_minus(fig5, 2);
  CHECK(max_abs(d - p * d * p) < 1e-12);
  CHECK(max_abs(d * projector_plus(fig5, 2)) < 1e-12);
}

TEST_CASE("cochain operators") {
  auto s5 = make_simplex(5);
  for (int q = 0; q + 1 <= s5.dim() - 1; ++q)
    CHECK(max_abs(coboundary(s5, q + 1) * coboundary(s5, q)) == 0.0);

  // the scaled-coboundary and Laplacian forms of both discriminants
  for (int q = 0; q <= s5.dim() - 1; ++q) {
    Matrix dup = discriminant_reduced(s5, q, Mode::Up);
    Matrix a = a_op(s5, q);
    Matrix id = Matrix::Identity(dup.rows(), dup.cols());
    CHECK(max_abs(dup - (a.adjoint() * a - id) / (q + 1.0)) < 1e-12);

    Eigen::VectorXd ax = inv_sqrt_deg(s5, q, Mode::Up);
    Matrix l = laplacian_up(s5, q);
    CHECK(max_abs(dup - (Matrix(ax.asDiagonal()) * l * Matrix(ax.asDiagonal()) - id) / (q + 1.0)) <
          1e-12);
  }
  for (int q = 1; q <= s5.dim() - 1; ++q) {
    Matrix ddn = discriminant_reduced(s5, q, Mode::Down);
    Matrix b = b_op(s5, q - 1);
    Eigen::VectorXd ay = inv_sqrt_deg(s5, q, Mode::Down);
    Matrix a2 = (ay.array() * ay.array()).matrix().asDiagonal();
    CHECK(max_abs(ddn - (b * b.adjoint() - (q + 1.0) * a2)) < 1e-12);

    Matrix l = laplacian_down(s5, q);
    Matrix id = Matrix::Identity(ddn.rows(), ddn.cols());
    CHECK(max_abs(ddn - Matrix(ay.asDiagonal()) * (l - (q + 1.0) * id) * Matrix(ay.asDiagonal())) <
          1e-12);
  }

  // top-dimension up scaling is rejected
  CHECK_THROWS_AS(inv_sqrt_deg(s5, s5.dim(), Mode::Up), RangeError);
  CHECK_THROWS_AS(a_op(s5, s5.dim()), RangeError);
}

TEST_CASE("signature vectors on the full complex") {
  auto s4 = make_simplex(4);
  // triangle over edges: three nonzero +-1 entries
  auto sigma = make_oriented({0, 1, 2});
  Eigen::VectorXd v = f_sigma(s4, sigma);
  CHECK((v.array() != 0.0).count() == 3);
  CHECK(v.cwiseAbs().maxCoeff() == 1.0);
  CHECK(v.squaredNorm() == 3.0);  // q+2 entries, so 2(q+2) in the doubled inner product

  // eigenvector of the up discriminant: eigenvalue 1/(n-q-1)
  Matrix d1 = discriminant_reduced(s4, 1, Mode::Up);
  CHECK((d1 * v - v.cast<std::complex<double>>() / 2.0).norm() < 1e-12);

  auto cell = make_oriented({0, 1, 2, 3});
  Eigen::VectorXd w = f_sigma(s4, cell);
  Matrix d2 = discriminant_reduced(s4, 2, Mode::Up);
  CHECK((d2 * w - w.cast<std::complex<double>>()).norm() < 1e-12);  // n-q-1 = 1

  // the up Laplacian multiplies signature vectors by n
  Matrix l1 = laplacian_up(s4, 1);
  CHECK((l1 * v - 4.0 * v.cast<std::complex<double>>()).norm() < 1e-12);
}

TEST_CASE("switching conjugation") {
  auto fig5 = make_fig5();
  Matrix d = discriminant_reduced(fig5, 2, Mode::Down, fig5_paper_basis(fig5));

  CHECK(max_abs(apply_switching(d, {1, 1, 1, 1, 1}) - d) == 0.0);
  CHECK_THROWS_AS(apply_switching(d, {1, 1, 1, 1, 0}), PreconditionError);
  CHECK_THROWS_AS(apply_switching(d, {1, 1}), RangeError);

  // published witness: theta = (-,-,-,-,+), then swapping rows/cols 2 and 4
  // (1-based) of the switched matrix gives the negation
  Matrix dt = apply_switching(d, {-1, -1, -1, -1, 1});
  Eigen::PermutationMatrix<5> perm;
  perm.setIdentity();
  perm.applyTranspositionOnTheRight(1, 3);
  Matrix swapped = perm.transpose() * dt * perm;
  CHECK(max_abs(swapped + d) == 0.0);
}

TEST_CASE("sphere switching witness") {
  auto sphere = make_sphere();
  Matrix d = discriminant_reduced(sphere, 1, Mode::Up, sphere_paper_basis(sphere));
  Matrix dt = apply_switching(d, {-1, 1, -1, 1, -1, -1});

  // second published table
  Eigen::MatrixXd expect(6, 6);
  expect << 0, 1, 1, -1, 0, -1,
      1, 0, 1, 0, -1, 1,
      1, 1, 0, 1, 1, 0,
      -1, 0, 1, 0, 1, 1,
      0, -1, 1, 1, 0, -1,
      -1, 1, 0, 1, -1, 0;
  expect /= 4.0;
  CHECK(max_abs(dt - expect.cast<std::complex<double>>()) < 1e-12);

  // swapping rows/cols 3 and 6 (1-based) yields the negation
  Eigen::PermutationMatrix<6> perm;
  perm.setIdentity();
  perm.applyTranspositionOnTheRight(2, 5);
  Matrix swapped = perm.transpose() * dt * perm;
  CHECK(max_abs(swapped + d) == 0.0);
}
