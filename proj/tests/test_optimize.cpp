#include <random>

#include "doctest.h"
#include "ratlp/optimize.hpp"
#include "ratlp/oracle.hpp"
#include "support/gen.hpp"

using namespace ratlp;

namespace {

Mat example_a() { return Mat{{2, 1}, {-1, 2}, {Rat(1, 2), Rat(-1, 2)}, {-1, -1}}; }
Vec example_b() { return {5, 2, Rat(1, 2), -1}; }
Vec example_c() { return {7, 1}; }

}  // namespace

TEST_CASE("split_assignment_partitions_by_index") {
  const Assignment a{{0, Rat(2)}, {1, Rat(1)}, {2, Rat(8, 3)}, {4, Rat(10, 3)}};
  const auto [x, y] = split_assignment(2, 4, a);
  CHECK(x == Vec{2, 1});
  CHECK(y == Vec{Rat(8, 3), 0, Rat(10, 3), 0});  // missing vars read as zero

  const auto [x2, y2] = split_assignment(0, 2, Assignment{{0, Rat(7)}});
  CHECK(x2 == Vec());
  CHECK(y2 == Vec{7, 0});

  const auto [x3, y3] = split_assignment(1, 0, Assignment{});
  CHECK(x3 == Vec{0});
  CHECK(y3 == Vec());
}

TEST_CASE("maximize_solves_the_running_example_exactly") {
  const auto res = maximize(example_a(), example_b(), example_c());
  REQUIRE(res.kind() == OptimizeResult::Kind::Sat);
  CHECK(res.x() == Vec{2, 1});
  CHECK(res.y() == Vec{Rat(8, 3), 0, Rat(10, 3), 0});
  CHECK(dot(example_c(), res.x()) == Rat(15));
  CHECK(dot(res.y(), example_b()) == Rat(15));
  CHECK(is_certified_optimal(example_a(), example_b(), example_c(), res.x(), res.y()));
}

TEST_CASE("maximize_rejects_mismatched_dimensions") {
  const Mat a{{1, 0}, {0, 1}};
  CHECK(maximize(a, Vec{1, 1, 1}, Vec{1, 1}).kind() == OptimizeResult::Kind::DimMismatch);
  CHECK(maximize(a, Vec{1, 1}, Vec{1}).kind() == OptimizeResult::Kind::DimMismatch);
  CHECK(maximize(a, Vec{1, 1}, Vec{1, 1}).kind() == OptimizeResult::Kind::Sat);
}

TEST_CASE("maximize_simple_instances") {
  // x <= 0, maximize x: optimum 0 with multiplier 1.
  const auto pin = maximize(Mat{{1}}, Vec{0}, Vec{1});
  REQUIRE(pin.is_sat());
  CHECK(pin.x() == Vec{0});
  CHECK(pin.y() == Vec{1});

  // Interval [0, 1], maximize x.
  const auto box = maximize(Mat{{1}, {-1}}, Vec{1, 0}, Vec{1});
  REQUIRE(box.is_sat());
  CHECK(box.x() == Vec{1});
  CHECK(dot(box.y(), Vec{1, 0}) == Rat(1));

  // Infeasible: 0*x <= -1.
  const auto bad = maximize(Mat{{0}}, Vec{-1}, Vec{0});
  REQUIRE(bad.kind() == OptimizeResult::Kind::Unsat);
  CHECK(bad.core() == std::vector<std::size_t>{1});

  // Unbounded: x >= 0, maximize x; the combined system is unsatisfiable
  // because no dual certificate exists.
  const auto unb = maximize(Mat{{-1}}, Vec{0}, Vec{1});
  CHECK(unb.kind() == OptimizeResult::Kind::Unsat);
}

TEST_CASE("feasibility_checkers") {
  CHECK(is_primal_feasible(example_a(), example_b(), Vec{2, 1}));
  CHECK(is_primal_feasible(example_a(), example_b(), Vec{1, 0}));
  CHECK(!is_primal_feasible(example_a(), example_b(), Vec{0, 0}));  // misses x0 + x1 >= 1
  CHECK(!is_primal_feasible(example_a(), example_b(), Vec{3, 0}));
  CHECK_THROWS_AS(is_primal_feasible(example_a(), example_b(), Vec{1}), std::invalid_argument);

  CHECK(is_dual_feasible(Mat{{1}}, Vec{1}, Vec{1}));
  CHECK(!is_dual_feasible(Mat{{1}}, Vec{1}, Vec{-1}));   // negative multiplier
  CHECK(!is_dual_feasible(Mat{{1}}, Vec{2}, Vec{1}));    // misses the objective
  CHECK(is_dual_feasible(example_a(), example_c(), Vec{Rat(8, 3), 0, Rat(10, 3), 0}));
  CHECK_THROWS_AS(is_dual_feasible(example_a(), Vec{1}, Vec{1, 1, 1, 1}),
                  std::invalid_argument);
}

TEST_CASE("duality_gap_and_certificate") {
  const Vec x{2, 1};
  const Vec y{Rat(8, 3), 0, Rat(10, 3), 0};
  CHECK(duality_gap(example_b(), example_c(), x, y) == Rat(0));
  CHECK(is_certified_optimal(example_a(), example_b(), example_c(), x, y));

  // A feasible but suboptimal x leaves a positive gap.
  const Vec sub{1, 0};
  CHECK(duality_gap(example_b(), example_c(), sub, y) == Rat(8));
  CHECK(!is_certified_optimal(example_a(), example_b(), example_c(), sub, y));

  // An infeasible x cannot be certified either.
  CHECK(!is_certified_optimal(example_a(), example_b(), example_c(), Vec{3, 0}, y));
  CHECK(duality_gap(Vec(), Vec(), Vec(), Vec()) == Rat(0));
}

TEST_CASE("maximize_results_are_certified_and_match_the_oracle_random") {
  std::mt19937_64 rng(61);
  std::uniform_int_distribution<std::size_t> rows(1, 4), cols(1, 2);
  int sat_count = 0;
  for (int iter = 0; iter < 120; ++iter) {
    const std::size_t m = rows(rng), n = cols(rng);
    const Mat a = testgen::random_mat(rng, m, n);
    const Vec b = testgen::random_vec(rng, m);
    const Vec c = testgen::random_vec(rng, n);

    const auto res = maximize(a, b, c);
    const auto rerun = maximize(a, b, c);
    REQUIRE(res.kind() == rerun.kind());

    if (res.is_sat()) {
      ++sat_count;
      CHECK(res.x().dim() == n);
      CHECK(res.y().dim() == m);
      CHECK(is_certified_optimal(a, b, c, res.x(), res.y()));
      CHECK(res.x() == rerun.x());
      CHECK(res.y() == rerun.y());
      const auto vo = vertex_optimum(a, b, c);
      if (vo.kind == VertexOptimum::Kind::Optimal) CHECK(vo.value == dot(c, res.x()));
    }
  }
  CHECK(sat_count > 0);
}
