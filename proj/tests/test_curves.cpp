#include <cmath>
#include <random>

#include "doctest.h"
#include "srvf/curves.hpp"
#include "test_util.hpp"

using namespace srvf;
using namespace srvf::testing;

TEST_CASE("srvf of simple curves") {
  auto q1 = srvf(line_1d({0, 1}, {0, 1}));
  REQUIRE(q1.num_pieces() == 1);
  CHECK(q1.piece(0)[0] == doctest::Approx(1.0).epsilon(1e-15));

  auto q2 = srvf(line_1d({0, 0.5, 1}, {0, 1, 1.5}));
  REQUIRE(q2.num_pieces() == 2);
  CHECK(q2.piece(0)[0] == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK(q2.piece(1)[0] == doctest::Approx(1.0).epsilon(1e-15));

  PlCurve f3(2, {0, 1}, {{0, 0}, {3, 4}});
  auto q3 = srvf(f3);
  REQUIRE(q3.num_pieces() == 1);
  CHECK(q3.piece(0)[0] == doctest::Approx(3.0 / std::sqrt(5.0)).epsilon(1e-15));
  CHECK(q3.piece(0)[1] == doctest::Approx(4.0 / std::sqrt(5.0)).epsilon(1e-15));
}

TEST_CASE("srvf rejects constant curves") {
  CHECK_THROWS_AS(srvf(line_1d({0, 0.5, 1}, {2, 2, 2})), std::invalid_argument);
}

TEST_CASE("srvf excises flat pieces and rescales") {
  // Middle third is flat; remaining length 0.8 concatenates to [0,1].
  auto f = line_1d({0, 0.4, 0.6, 1}, {0, 0.4, 0.4, 0.8});
  auto q = srvf(f);
  REQUIRE(q.num_pieces() == 2);
  CHECK(q.breakpoints()[1] == doctest::Approx(0.5).epsilon(1e-15));
  // Norm-squared must still equal the arc length.
  double n2 = 0;
  for (std::size_t i = 0; i < q.num_pieces(); ++i)
    n2 += norm_sq(q.piece(i)) * q.piece_len(i);
  CHECK(n2 == doctest::Approx(arc_length(f)).epsilon(1e-14));
}

TEST_CASE("inverse_srvf basics and round trip") {
  auto f1 = inverse_srvf(step_1d({0, 1}, {1}));
  CHECK(f1.values()[1][0] == doctest::Approx(1.0).epsilon(1e-15));

  StepSrvf q2(2, {0, 1}, {{std::sqrt(2.0), 0.0}});
  auto f2 = inverse_srvf(q2);
  CHECK(f2.values()[1][0] == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(f2.values()[1][1] == 0.0);

  auto f = line_1d({0, 0.5, 1}, {0, 1, 1.5});
  auto back = inverse_srvf(srvf(f));
  for (std::size_t i = 0; i < back.values().size(); ++i) {
    CHECK(back.values()[i][0] ==
          doctest::Approx(f.values()[i][0]).epsilon(1e-12));
  }
}

TEST_CASE("round trip on random curves is exact at breakpoints") {
  std::mt19937 rng(7);
  for (int it = 0; it < 25; ++it) {
    auto f = random_curve(rng, 1 + it % 3, 2 + it % 6);
    auto back = inverse_srvf(srvf(f));
    REQUIRE(back.breakpoints().size() == f.breakpoints().size());
    for (std::size_t i = 0; i < f.breakpoints().size(); ++i) {
      CHECK(back.breakpoints()[i] ==
            doctest::Approx(f.breakpoints()[i]).epsilon(1e-12));
      for (std::size_t k = 0; k < f.dim(); ++k) {
        double want = f.values()[i][k] - f.values()[0][k];
        CHECK(back.values()[i][k] == doctest::Approx(want).epsilon(1e-11));
      }
    }
  }
}

TEST_CASE("arc length and normalization") {
  CHECK(arc_length(line_1d({0, 1}, {0, 1})) == doctest::Approx(1.0));
  PlCurve f(2, {0, 1}, {{0, 0}, {3, 4}});
  CHECK(arc_length(f) == doctest::Approx(5.0));
  auto g = normalize_to_unit_length(f);
  CHECK(g.values()[1][0] == doctest::Approx(0.6));
  CHECK(g.values()[1][1] == doctest::Approx(0.8));

  auto q = srvf(g);
  double n2 = 0;
  for (std::size_t i = 0; i < q.num_pieces(); ++i)
    n2 += norm_sq(q.piece(i)) * q.piece_len(i);
  CHECK(n2 == doctest::Approx(1.0).epsilon(1e-13));

  CHECK_THROWS_AS(normalize_to_unit_length(line_1d({0, 1}, {1, 1})),
                  std::invalid_argument);
}

TEST_CASE("arc length equals srvf norm squared") {
  std::mt19937 rng(11);
  for (int it = 0; it < 20; ++it) {
    auto f = random_curve(rng, 2, 5);
    auto q = srvf(f);
    double n2 = 0;
    for (std::size_t i = 0; i < q.num_pieces(); ++i)
      n2 += norm_sq(q.piece(i)) * q.piece_len(i);
    CHECK(n2 == doctest::Approx(arc_length(f)).epsilon(1e-12));
  }
}

TEST_CASE("constant speed standardization") {
  auto already = line_1d({0, 0.5, 1}, {0, 0.75, 1.5});
  auto [c0, g0] = constant_speed(already);
  CHECK(c0.breakpoints()[1] == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(g0.eval(0.25) == doctest::Approx(0.25).epsilon(1e-15));

  auto f = line_1d({0, 0.5, 1}, {0, 1, 1.5});
  auto [c, g] = constant_speed(f);
  REQUIRE(c.breakpoints().size() == 3);
  CHECK(c.breakpoints()[1] == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  // Slope magnitude 1.5 on both pieces.
  for (std::size_t i = 0; i + 1 < c.breakpoints().size(); ++i) {
    double slope = (c.values()[i + 1][0] - c.values()[i][0]) /
                   (c.breakpoints()[i + 1] - c.breakpoints()[i]);
    CHECK(std::fabs(slope) == doctest::Approx(1.5).epsilon(1e-13));
  }
  // f(gamma(z)) equals the curve at knots.
  for (std::size_t i = 0; i < c.breakpoints().size(); ++i) {
    double z = c.breakpoints()[i];
    CHECK(f.eval(g.eval(z))[0] ==
          doctest::Approx(c.values()[i][0]).epsilon(1e-13));
  }
  // SRVF of the output has constant magnitude sqrt(length).
  auto q = srvf(c);
  for (std::size_t i = 0; i < q.num_pieces(); ++i) {
    CHECK(norm(q.piece(i)) == doctest::Approx(std::sqrt(1.5)).epsilon(1e-13));
  }
}

TEST_CASE("constant speed of curve with flat pieces") {
  auto f = line_1d({0, 0.4, 0.6, 1}, {0, 0.4, 0.4, 0.8});
  auto [c, g] = constant_speed(f);
  double mag = arc_length(f);
  for (std::size_t i = 0; i + 1 < c.breakpoints().size(); ++i) {
    double slope = (c.values()[i + 1][0] - c.values()[i][0]) /
                   (c.breakpoints()[i + 1] - c.breakpoints()[i]);
    CHECK(std::fabs(slope) == doctest::Approx(mag).epsilon(1e-12));
  }
  for (std::size_t i = 0; i < c.breakpoints().size(); ++i) {
    double z = c.breakpoints()[i];
    CHECK(f.eval(g.eval(z))[0] ==
          doctest::Approx(c.values()[i][0]).epsilon(1e-13));
  }
}

TEST_CASE("apply and compose reparametrizations") {
  auto f = line_1d({0, 1}, {0, 1});
  PlReparam gamma({0, 0.5, 1}, {0, 0.25, 1});

  auto id = PlReparam::identity();
  auto same = apply_reparam(f, id);
  CHECK(same.eval(0.37)[0] == doctest::Approx(0.37).epsilon(1e-15));

  auto warped = apply_reparam(f, gamma);
  CHECK(warped.eval(0.0)[0] == doctest::Approx(0.0));
  CHECK(warped.eval(0.5)[0] == doctest::Approx(0.25));
  CHECK(warped.eval(1.0)[0] == doctest::Approx(1.0));

  auto round = compose_reparam(gamma, gamma.inverse());
  for (double z : {0.0, 0.2, 0.5, 0.8, 1.0}) {
    CHECK(round.eval(z) == doctest::Approx(z).epsilon(1e-12));
  }
}

TEST_CASE("apply_reparam respects composition") {
  std::mt19937 rng(23);
  for (int it = 0; it < 20; ++it) {
    auto f = random_curve(rng, 2, 4);
    auto a = random_strict_reparam(rng, 3);
    auto b = random_strict_reparam(rng, 4);
    auto lhs = apply_reparam(f, compose_reparam(a, b));
    auto rhs = apply_reparam(apply_reparam(f, a), b);
    for (double z : {0.0, 0.1, 0.33, 0.5, 0.71, 0.9, 1.0}) {
      auto p = lhs.eval(z);
      auto q = rhs.eval(z);
      for (std::size_t k = 0; k < 2; ++k) {
        CHECK(p[k] == doctest::Approx(q[k]).epsilon(1e-11));
      }
    }
  }
}

TEST_CASE("validation errors") {
  CHECK_THROWS_AS(PlCurve(1, {0, 0.5}, {{0.0}, {1.0}}), std::invalid_argument);
  CHECK_THROWS_AS(PlCurve(1, {0, 0.5, 0.5, 1}, {{0.0}, {1.0}, {2.0}, {3.0}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(PlCurve(2, {0, 1}, {{0.0}, {1.0}}), std::invalid_argument);
  CHECK_THROWS_AS(PlReparam({0, 0.6, 1}, {0, 0.7, 0.5}), std::invalid_argument);
  PlReparam flat({0, 0.5, 1}, {0, 0, 1});
  CHECK(!flat.is_strict());
  CHECK_THROWS_AS(flat.inverse(), std::invalid_argument);
}
