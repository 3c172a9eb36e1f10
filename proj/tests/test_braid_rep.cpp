#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "quasibraid/braid_rep.hpp"
#include "quasibraid/error.hpp"
#include "test_support.hpp"

using namespace quasibraid;

namespace {

Complex cis(double x) { return std::polar(1.0, x); }

}  // namespace

TEST_CASE("canonical deformations give phi") {
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  for (int k = 0; k < 4; ++k) {
    const auto a = ADeformation::canonical(k);
    CHECK(std::abs(std::abs(a.value()) - 1.0) < 1e-15);
    CHECK(std::abs(a.derived_phi() - phi) < 1e-14);
    const Complex direct = -(a.value() * a.value() + 1.0 / (a.value() * a.value()));
    CHECK(std::abs(direct - a.derived_phi()) < 1e-14);
  }
  CHECK(std::abs(ADeformation::canonical(0).value() - cis(3.0 * std::numbers::pi / 5.0)) < 1e-15);
  CHECK(std::abs(ADeformation::canonical(3).value() + cis(2.0 * std::numbers::pi / 5.0)) < 1e-15);
  CHECK_THROWS_AS(ADeformation(Complex{2.0, 0.0}), Error);
  CHECK_THROWS_AS(ADeformation::canonical(4), Error);
}

TEST_CASE("zero projection gives a scalar generator") {
  const auto a = ADeformation::canonical(0);
  const auto g = braid_generator(a, ComplexMatrix(4));
  CHECK(frobenius_distance(g.forward, scale(ComplexMatrix::identity(4), 1.0 / a.value())) < 1e-15);
  CHECK(frobenius_distance(g.inverse, scale(ComplexMatrix::identity(4), a.value())) < 1e-15);

  ComplexMatrix not_projection = ComplexMatrix::identity(4);
  not_projection(0, 0) = 2.0;
  try {
    braid_generator(a, not_projection);
    FAIL("expected not_idempotent");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::not_idempotent);
  }
}

TEST_CASE("rho generators: inverse, minimal polynomial, non-unitarity") {
  const auto tl = build_tl_generators(QParameter(5), 4);
  for (int k = 0; k < 4; ++k) {
    const auto a = ADeformation::canonical(k);
    const auto rep = rho_representation(a, tl);
    REQUIRE(rep.size() == 3);
    const auto id = ComplexMatrix::identity(rep.dim());
    const Complex a3 = std::pow(a.value(), 3);
    for (const auto& g : rep.generators) {
      CHECK(frobenius_distance(matmul(g.forward, g.inverse), id) < 1e-13);
      CHECK(frobenius_distance(matmul(g.inverse, g.forward), id) < 1e-13);
      // Eigenvalues are -A^3 and A^{-1}.
      const auto p = matmul(add(g.forward, scale(id, a3)), subtract(g.forward, scale(id, 1.0 / a.value())));
      CHECK(frobenius_norm(p) < 1e-13);
      CHECK_FALSE(is_unitary(g.forward, 1e-3));
    }
  }
}

TEST_CASE("braid relations hold for rho") {
  const auto r4 = verify_braid_relations(
      rho_representation(ADeformation::canonical(0), build_tl_generators(QParameter(5), 4)), 1e-12);
  CHECK(r4.all_pass());
  CHECK(r4.at("yang_baxter").instances == 2);
  CHECK(r4.at("distant_commute").instances == 1);

  for (int n = 3; n <= 8; ++n) {
    const auto tl = build_tl_generators(QParameter(5), n);
    for (int k = 0; k < 4; ++k) {
      const auto r = verify_braid_relations(rho_representation(ADeformation::canonical(k), tl), 1e-12);
      CHECK(r.all_pass());
    }
  }
}

TEST_CASE("braid relations on hand-built generators") {
  const auto id = ComplexMatrix::identity(4);
  const auto trivial = representation_from_matrices("identity", {id, id, id});
  const auto r = verify_braid_relations(trivial, 1e-15);
  CHECK(r.all_pass());
  CHECK(r.at("yang_baxter").max_deviation == 0.0);

  auto rep = rho_representation(ADeformation::canonical(0), build_tl_generators(QParameter(5), 3));
  std::vector<ComplexMatrix> mats{rep.generators[0].forward, rep.generators[1].forward};
  mats[1](1, 2) += 1e-3;
  const auto broken = verify_braid_relations(representation_from_matrices("broken", mats), 1e-12);
  CHECK(broken.at("yang_baxter").max_deviation > 1e-4);
  CHECK_FALSE(broken.all_pass());

  CHECK_THROWS_AS(representation_from_matrices("singular", {ComplexMatrix(2)}), Error);
  CHECK_THROWS_AS(representation_from_matrices("mixed", {ComplexMatrix::identity(2), id}), Error);
}

TEST_CASE("F and R matrices") {
  const auto fr = fibonacci_FR();
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  const auto i5 = ComplexMatrix::identity(5);
  CHECK(frobenius_distance(matmul(fr.F, fr.F), i5) < 1e-14);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) CHECK(fr.F(i, j) == (i == j ? Complex{1.0} : Complex{}));
  }
  CHECK(std::abs(fr.F(3, 3) - 1.0 / phi) < 1e-15);
  CHECK(std::abs(fr.F(3, 4) - 1.0 / std::sqrt(phi)) < 1e-15);
  CHECK(std::abs(fr.F(4, 4) + 1.0 / phi) < 1e-15);

  const double pi = std::numbers::pi;
  const Complex expected[5] = {cis(4 * pi / 5), cis(-3 * pi / 5), cis(-3 * pi / 5), cis(4 * pi / 5),
                               cis(-3 * pi / 5)};
  for (std::size_t i = 0; i < 5; ++i) CHECK(std::abs(fr.R(i, i) - expected[i]) < 1e-15);

  CHECK(frobenius_distance(fr.B, matmul(matmul(fr.F, fr.R), fr.F)) < 1e-15);
  CHECK(is_unitary(fr.R, 1e-14));
  CHECK(is_unitary(fr.B, 1e-14));

  const auto rep = fr_representation();
  CHECK(rep.id == "fibonacci_FR");
  CHECK(verify_braid_relations(rep, 1e-12).all_pass());
}

TEST_CASE("braid words") {
  const auto rep = rho_representation(ADeformation::canonical(1), build_tl_generators(QParameter(5), 3));
  std::mt19937_64 rng(4);
  const auto v = quasibraid::testing::random_state(rep.dim(), rng);

  const auto empty = make_braid_word(3, {});
  CHECK(distance(apply_braid_word(empty, rep, v), v) == 0.0);

  const auto single = make_braid_word(3, {{2, 1}});
  CHECK(distance(apply_braid_word(single, rep, v), apply(rep.generators[1].forward, v)) < 1e-15);

  const auto w = make_braid_word(3, {{1, 1}, {2, -1}, {1, 1}});
  CHECK(w.inverse().letters == std::vector<BraidLetter>{{1, -1}, {2, 1}, {1, -1}});
  CHECK(distance(apply_braid_word(concatenate(w, w.inverse()), rep, v), v) < 1e-12);

  // The first letter acts first.
  const auto m = braid_word_matrix(w, rep);
  const auto manual = matmul(rep.generators[0].forward,
                             matmul(rep.generators[1].inverse, rep.generators[0].forward));
  CHECK(frobenius_distance(m, manual) < 1e-14);
  const auto ab = make_braid_word(3, {{1, 1}, {2, 1}});
  const auto expected = apply(rep.generators[1].forward, apply(rep.generators[0].forward, v));
  CHECK(distance(apply_braid_word(ab, rep, v), expected) < 1e-14);

  CHECK_THROWS_AS(make_braid_word(3, {{3, 1}}), Error);
  CHECK_THROWS_AS(make_braid_word(3, {{0, 1}}), Error);
  CHECK_THROWS_AS(make_braid_word(3, {{1, 2}}), Error);
  CHECK_THROWS_AS(make_braid_word(1, {}), Error);
  CHECK_THROWS_AS(apply_braid_word(make_braid_word(5, {{4, 1}}), rep, v), Error);
  CHECK_THROWS_AS(apply_braid_word(single, rep, StateVector(4)), Error);
}
