#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "srvf/curves.hpp"
#include "srvf/quotient.hpp"
#include "test_util.hpp"

using namespace srvf;
using namespace srvf::testing;

TEST_CASE("inner product examples") {
  StepSrvf e1(2, {0, 1}, {{1, 0}});
  StepSrvf e2(2, {0, 1}, {{0, 1}});
  CHECK(inner(e1, e2) == doctest::Approx(0.0));
  CHECK(l2_distance(e1, e2) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));

  auto q1 = step_1d({0, 1}, {1});
  auto q2 = step_1d({0, 0.25, 1}, {1, -1});
  CHECK(inner(q1, q2) == doctest::Approx(-0.5).epsilon(1e-15));

  auto q3 = step_1d({0, 0.5, 1}, {std::sqrt(2.0), 1});
  CHECK(inner(q3, q3) == doctest::Approx(1.5).epsilon(1e-14));

  CHECK_THROWS_AS(inner(e1, q1), std::invalid_argument);
}

TEST_CASE("inner is bilinear symmetric and Cauchy-Schwarz holds") {
  std::mt19937 rng(31);
  for (int it = 0; it < 30; ++it) {
    auto a = random_step(rng, 2, 3 + it % 4);
    auto b = random_step(rng, 2, 2 + it % 5);
    CHECK(inner(a, b) == doctest::Approx(inner(b, a)).epsilon(1e-13));
    CHECK(inner(a, a) >= 0.0);
    double cs = std::sqrt(inner(a, a)) * std::sqrt(inner(b, b));
    CHECK(inner(a, b) <= cs + 1e-12);
  }
}

TEST_CASE("group action basics") {
  auto q = step_1d({0, 1}, {1});
  auto same = group_action(q, PlReparam::identity());
  CHECK(same.num_pieces() == 1);
  CHECK(same.piece(0)[0] == doctest::Approx(1.0));

  PlReparam gamma({0, 0.5, 1}, {0, 0.25, 1});
  auto warped = group_action(q, gamma);
  REQUIRE(warped.num_pieces() == 2);
  CHECK(warped.piece(0)[0] == doctest::Approx(std::sqrt(0.5)).epsilon(1e-15));
  CHECK(warped.piece(1)[0] == doctest::Approx(std::sqrt(1.5)).epsilon(1e-15));
  CHECK(inner(warped, warped) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("group action by flat reparam keeps zero pieces") {
  auto q = step_1d({0, 1}, {1});
  PlReparam flat({0, 0.25, 0.75, 1}, {0, 0.5, 0.5, 1});
  auto acted = group_action(q, flat);
  CHECK(acted.has_zero_piece());
  CHECK(inner(acted, acted) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("group action is by isometries") {
  std::mt19937 rng(37);
  for (int it = 0; it < 40; ++it) {
    auto q1 = random_step(rng, 1 + it % 3, 2 + it % 5);
    auto q2 = random_step(rng, 1 + it % 3, 3 + it % 4);
    auto gamma = random_strict_reparam(rng, 2 + it % 4);
    double before = inner(q1, q2);
    double after = inner(group_action(q1, gamma), group_action(q2, gamma));
    CHECK(after == doctest::Approx(before).epsilon(1e-10));
  }
}

TEST_CASE("sphere distance") {
  StepSrvf e1(2, {0, 1}, {{1, 0}});
  StepSrvf e2(2, {0, 1}, {{0, 1}});
  StepSrvf m1(2, {0, 1}, {{-1, 0}});
  CHECK(sphere_distance(e1, e1) == doctest::Approx(0.0));
  CHECK(sphere_distance(e1, e2) ==
        doctest::Approx(std::numbers::pi / 2).epsilon(1e-14));
  CHECK(sphere_distance(e1, m1) == doctest::Approx(std::numbers::pi).epsilon(1e-14));
  CHECK_THROWS_AS(sphere_distance(e1, step_1d({0, 1}, {2})), std::invalid_argument);
}

TEST_CASE("geodesics") {
  auto q1 = step_1d({0, 1}, {1});
  auto q2 = step_1d({0, 1}, {-1});
  CHECK(geodesic_l2(q1, q2, 0.0).piece(0)[0] == doctest::Approx(1.0));
  CHECK(geodesic_l2(q1, q2, 1.0).piece(0)[0] == doctest::Approx(-1.0));
  CHECK(geodesic_l2(q1, q2, 0.5).piece(0)[0] == doctest::Approx(0.0));

  CHECK_THROWS_AS(geodesic_sphere(q1, q2, 0.5), std::invalid_argument);

  std::mt19937 rng(41);
  for (int it = 0; it < 10; ++it) {
    auto a = random_step(rng, 2, 3);
    auto b = random_step(rng, 2, 4);
    double na = std::sqrt(inner(a, a)), nb = std::sqrt(inner(b, b));
    std::vector<Point> pa, pb;
    for (std::size_t i = 0; i < a.num_pieces(); ++i) {
      Point p = a.piece(i);
      for (auto& x : p) x /= na;
      pa.push_back(p);
    }
    for (std::size_t i = 0; i < b.num_pieces(); ++i) {
      Point p = b.piece(i);
      for (auto& x : p) x /= nb;
      pb.push_back(p);
    }
    StepSrvf ua(2, a.breakpoints(), pa), ub(2, b.breakpoints(), pb);
    for (double tau : {0.25, 0.5, 0.75}) {
      auto mid = geodesic_sphere(ua, ub, tau);
      CHECK(std::sqrt(inner(mid, mid)) == doctest::Approx(1.0).epsilon(1e-12));
    }
    auto end = geodesic_sphere(ua, ub, 1.0);
    CHECK(l2_distance(end, ub) == doctest::Approx(0.0).epsilon(1e-12));
  }
}

TEST_CASE("constant match value") {
  auto q_id = step_1d({0, 1}, {1});
  auto m = constant_match_value(q_id, {1.0}, 1.0);
  CHECK(m.value == doctest::Approx(1.0));
  CHECK(m.gamma_w.eval(0.37) == doctest::Approx(0.37).epsilon(1e-15));

  // Step 1 on (0,a), -1 on (a,1) against constant 1: value sqrt(a).
  double a = 0.25;
  auto q = step_1d({0, a, 1}, {1, -1});
  auto mm = constant_match_value(q, {1.0}, 1.0);
  CHECK(mm.value == doctest::Approx(std::sqrt(a)).epsilon(1e-15));
  double dist2 = inner(q, q) + 1.0 - 2.0 * mm.value;
  CHECK(std::sqrt(dist2) == doctest::Approx(1.0).epsilon(1e-14));

  // Everything negative: supremum is zero.
  auto neg = constant_match_value(q_id, {-2.0}, 1.0);
  CHECK(neg.value == 0.0);
}

TEST_CASE("constant match value dominates random warps") {
  std::mt19937 rng(43);
  for (int rep = 0; rep < 5; ++rep) {
    auto q = random_step(rng, 2, 4 + rep);
    Point w0 = {0.7, -0.3 + 0.2 * rep};
    auto m = constant_match_value(q, w0, 1.0);
    StepSrvf w(2, {0, 1}, {w0});
    for (int it = 0; it < 200; ++it) {
      auto gamma = random_strict_reparam(rng, 1 + it % 5);
      double v = inner(q, group_action(w, gamma));
      CHECK(v <= m.value + 1e-10);
    }
    // The returned pair realizes the value.
    double realized = inner(group_action(q, m.gamma_q), group_action(w, m.gamma_w));
    CHECK(realized == doctest::Approx(m.value).epsilon(1e-12));
  }
}
