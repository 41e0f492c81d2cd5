#include <cmath>

#include "doctest.h"
#include "gcg/nonsmooth_term.hpp"
#include "gcg/rng.hpp"
#include "support.hpp"

using namespace gcg;

TEST_CASE("g_value examples") {
  const auto simplex = NonsmoothTerm::simplex(2, 1.0);
  CHECK(simplex.value(test::vec({0.5, 0.5})) == 0.0);
  CHECK(std::isinf(simplex.value(test::vec({0.5, 0.6}))));

  const auto en = NonsmoothTerm::elastic_net(2, 1.0, 2.0);
  CHECK(en.value(test::vec({1, -1})) == 4.0);  // 1+1 + (2/2)*2
}

TEST_CASE("indicator feasibility tolerance") {
  const auto simplex = NonsmoothTerm::simplex(2, 1.0);
  CHECK(simplex.value(test::vec({0.5, 0.5 + 1e-10})) == 0.0);
  CHECK(std::isinf(simplex.value(test::vec({0.5, 0.5 + 1e-8}))));
  CHECK(simplex.value(test::vec({-1e-10, 1.0 + 1e-10})) == 0.0);
}

TEST_CASE("lmo_solve examples") {
  SUBCASE("simplex picks the first minimal coordinate") {
    const auto t = NonsmoothTerm::simplex(3, 1.0);
    const auto r = t.lmo(test::vec({3, 1, 2}));
    CHECK(r.v[0] == 0.0);
    CHECK(r.v[1] == 1.0);
    CHECK(r.v[2] == 0.0);
    CHECK(r.g_v == 0.0);
  }
  SUBCASE("l1 ball picks the largest magnitude, signed") {
    const auto t = NonsmoothTerm::l1_ball(2, 1.0);
    const auto r = t.lmo(test::vec({2, -5}));
    CHECK(r.v[0] == 0.0);
    CHECK(r.v[1] == 1.0);
    CHECK(r.g_v == 0.0);
  }
  SUBCASE("elastic net soft-thresholds per coordinate") {
    const auto t = NonsmoothTerm::elastic_net(2, 1.0, 1.0);
    const auto r = t.lmo(test::vec({2, -0.5}));
    CHECK(r.v[0] == -1.0);
    CHECK(r.v[1] == 0.0);
    CHECK(r.g_v == 1.5);
  }
  SUBCASE("box breaks zero cost to the lower bound") {
    const auto t = NonsmoothTerm::box(test::vec({-1}), test::vec({1}));
    const auto r = t.lmo(test::vec({0}));
    CHECK(r.v[0] == -1.0);
    CHECK(r.g_v == 0.0);
  }
}

TEST_CASE("zero-cost tie breaking for the balls") {
  const auto l1 = NonsmoothTerm::l1_ball(3, 2.0);
  const auto r1 = l1.lmo(Vector::Zero(3));
  CHECK(r1.v[0] == 2.0);
  CHECK(r1.v[1] == 0.0);

  const auto l2 = NonsmoothTerm::l2_ball(3, 2.0);
  const auto r2 = l2.lmo(Vector::Zero(3));
  CHECK(r2.v[0] == 2.0);
  CHECK(r2.v[1] == 0.0);
}

TEST_CASE("l1-only elastic net is rejected as not supercoercive") {
  try {
    NonsmoothTerm::elastic_net(3, 1.0, 0.0);
    FAIL("expected a constructor failure");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("supercoercive") != std::string::npos);
  }
}

TEST_CASE("lmo optimality certificate against random feasible probes") {
  Rng rng(101);
  std::vector<NonsmoothTerm> variants;
  variants.push_back(NonsmoothTerm::simplex(5, 1.5));
  variants.push_back(NonsmoothTerm::l1_ball(5, 2.0));
  variants.push_back(NonsmoothTerm::l2_ball(5, 0.7));
  variants.push_back(NonsmoothTerm::box(rng.uniform_vector(5, -2.0, -0.1),
                                        rng.uniform_vector(5, 0.1, 2.0)));
  variants.push_back(NonsmoothTerm::elastic_net(5, 0.3, 0.8));

  for (const auto& t : variants) {
    for (int c_trial = 0; c_trial < 200; ++c_trial) {
      const Vector c = rng.normal_vector(5);
      const auto r = t.lmo(c);
      CHECK(std::isfinite(r.g_v));
      CHECK(t.value(r.v) < std::numeric_limits<double>::infinity());
      const double obj_v = inner(c, r.v) + r.g_v;
      for (int w_trial = 0; w_trial < 50; ++w_trial) {
        const Vector w = test::random_feasible(t, rng);
        const double obj_w = inner(c, w) + t.value(w);
        CHECK(obj_v <= obj_w + 1e-10);
      }
    }
  }
}

TEST_CASE("lmo is deterministic") {
  Rng rng(55);
  const auto t = NonsmoothTerm::l1_ball(6, 1.0);
  const Vector c = rng.normal_vector(6);
  const auto a = t.lmo(c);
  const auto b = t.lmo(c);
  for (Index i = 0; i < 6; ++i) CHECK(a.v[i] == b.v[i]);
}

TEST_CASE("construction validation") {
  CHECK_THROWS_AS(NonsmoothTerm::simplex(0, 1.0), Error);
  CHECK_THROWS_AS(NonsmoothTerm::simplex(3, 0.0), Error);
  CHECK_THROWS_AS(NonsmoothTerm::box(test::vec({1}), test::vec({0})), Error);
  Vector inf_upper = test::vec({1.0});
  inf_upper[0] = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(NonsmoothTerm::box(test::vec({0}), inf_upper), Error);
}

TEST_CASE("lmo input validation") {
  const auto t = NonsmoothTerm::simplex(2, 1.0);
  CHECK_THROWS_AS(t.lmo(test::vec({1})), Error);
  Vector bad = test::vec({1.0, 2.0});
  bad[0] = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(t.lmo(bad), Error);
}
