#include <doctest.h>

#include <functional>

#include "posdiag/diagram.hpp"
#include "posdiag/error.hpp"
#include "posdiag/json_io.hpp"
#include "posdiag/vertical.hpp"
#include "support.hpp"

using namespace posdiag;

namespace {

const auto P = SignConstraint::Positive;
const auto N = SignConstraint::Negative;

std::string error_code(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return "none";
}

Integer floor_sum_of(const std::vector<FiberInvariant>& f) {
  Integer t = 0;
  for (const auto& x : f) t += floor_div(x.beta, x.alpha);
  return t;
}

// Checks every promise of build_positive_vertical against oracles that do
// not go through the library's homology code.
void check_vertical(const SeifertData& s) {
  const Diagram dg = build_positive_vertical(s);
  const auto r = static_cast<std::int64_t>(std::max<std::size_t>(normalize(s).fibers.size(), 3));
  CHECK(validate(dg).empty());
  CHECK(is_positive_diagram(dg));
  CHECK(dg.declared_genus == r - 1);
  CHECK(static_cast<std::int64_t>(dg.x_curves.size()) == r - 1);
  CHECK(static_cast<std::int64_t>(dg.y_curves.size()) == r - 1);
  CHECK(rotation_genus(dg) <= dg.declared_genus);

  const auto em = exponent_sum_matrix(diagram_presentation(dg));
  const Integer det = abs(oracle::cofactor_det(oracle::to_grid(em)));
  CHECK(det == oracle::homology_order_s2(normalize(s)));
  CHECK(diagram_homology(dg).group() == homology(s).group());
}

}  // namespace

TEST_CASE("plan_decomposition examples") {
  const ChainPlan p3 = plan_decomposition(3);
  CHECK(p3.r == 3);
  CHECK(p3.d_disks == std::vector<std::size_t>{0, 1});
  CHECK(p3.e_disk == 2);
  CHECK(p3.squares.size() == 1);
  CHECK(p3.sign_pattern == std::vector{P, N, P});
  CHECK(p3.a_disks.empty());

  const ChainPlan p4 = plan_decomposition(4);
  CHECK(p4.d_disks.size() == 3);
  CHECK(p4.squares.size() == 2);
  CHECK(p4.sign_pattern == std::vector{P, N, P, P});
  CHECK(p4.gamma_e_loops == 2);

  CHECK(plan_decomposition(0) == p3);
  CHECK(plan_decomposition(2) == p3);
  for (std::size_t m = 0; m <= 12; ++m) CHECK_NOTHROW(check_plan(plan_decomposition(m)));
}

TEST_CASE("check_plan rejects broken plans") {
  ChainPlan p = plan_decomposition(5);
  p.sign_pattern[1] = P;
  CHECK(error_code([&] { check_plan(p); }) == "InvalidPlan");

  p = plan_decomposition(5);
  p.sign_pattern.back() = N;
  CHECK(error_code([&] { check_plan(p); }) == "InvalidPlan");

  p = plan_decomposition(5);
  p.a_disks.push_back(0);
  CHECK(error_code([&] { check_plan(p); }) == "InvalidPlan");

  p = plan_decomposition(5);
  p.squares[0] = {0, 2};
  CHECK(error_code([&] { check_plan(p); }) == "InvalidPlan");
}

TEST_CASE("assign_betas examples") {
  // Z/358 sample under the chain plan: signs (+,-,+ on D; + on E).
  const SeifertData fig = make_normalized(0, {{4, 1}, {3, 2}, {5, 3}, {2, 1}}, 5);
  const auto betas = assign_betas(fig, plan_decomposition(4));
  CHECK(betas == std::vector<FiberInvariant>{{4, 1}, {3, -13}, {5, 3}, {2, 1}});
  CHECK(floor_sum_of(betas) == -5);

  const auto trivial = assign_betas(make_normalized(0, {}, 0), plan_decomposition(0));
  CHECK(trivial == std::vector<FiberInvariant>{{1, 1}, {1, -2}, {1, 1}});
  CHECK(floor_sum_of(trivial) == 0);

  const SeifertData halves = make_normalized(0, {{2, 1}, {2, 1}, {2, 1}}, 1);
  const auto h = assign_betas(halves, plan_decomposition(3));
  CHECK(h[0].beta > 0);
  CHECK(h[1].beta < 0);
  CHECK(h[2].beta > 0);
  CHECK(floor_sum_of(h) == -1);

  CHECK(error_code([&] { assign_betas(halves, plan_decomposition(4)); }) == "InvalidPlan");
}

TEST_CASE("assign_betas always satisfies the chain pattern") {
  oracle::Rng rng(41);
  for (int t = 0; t < 1000; ++t) {
    const auto m = static_cast<std::size_t>(oracle::uniform(rng, 0, 8));
    const SeifertData s = oracle::random_normalized(rng, 0, m, 15, 20);
    const ChainPlan plan = plan_decomposition(m);
    const auto betas = assign_betas(s, plan);
    REQUIRE(betas.size() == plan.r);
    for (std::size_t i = 0; i < plan.r; ++i) {
      CHECK((plan.sign_pattern[i] == P ? betas[i].beta > 0 : betas[i].beta < 0));
      CHECK(gcd(betas[i].alpha, betas[i].beta) == 1);
      if (i < m) CHECK(mod_floor(betas[i].beta - s.fibers[i].beta, s.fibers[i].alpha) == 0);
      else CHECK(betas[i].alpha == 1);
    }
    CHECK(floor_sum_of(betas) == -*s.euler);
    CHECK(normalize(make_non_normalized(0, betas)) == s);
  }
}

TEST_CASE("synthesize_diagram examples") {
  // Three alpha = 1 slots: 1/1, -1/1, 1/1 give S^3 (H_1 trivial) at genus 2.
  const Diagram s3 = synthesize_diagram(plan_decomposition(3), {{1, 1}, {1, -1}, {1, 1}});
  CHECK(is_positive_diagram(s3));
  CHECK(s3.declared_genus == 2);
  CHECK(diagram_homology(s3).group() == AbelianGroup{});
  CHECK(rotation_genus(s3) <= 2);

  const Diagram fig = build_positive_vertical(make_normalized(0, {{4, 1}, {3, 2}, {5, 3}, {2, 1}}, 5));
  CHECK(fig.declared_genus == 3);
  CHECK(fig.x_curves.size() == 3);
  CHECK(fig.y_curves.size() == 3);
  CHECK(diagram_homology(fig).group().torsion == std::vector<Integer>{358});

  check_vertical(make_normalized(0, {{2, 1}, {2, 1}, {2, 1}}, 1));

  CHECK(error_code([] { synthesize_diagram(plan_decomposition(3), {{1, 1}, {1, 1}, {1, 1}}); }) ==
        "UnsatisfiablePattern");
  CHECK(error_code([] { synthesize_diagram(plan_decomposition(3), {{1, 1}, {1, -1}}); }) ==
        "InvalidPlan");
}

TEST_CASE("synthesized crossings count the train-track strands") {
  // X_i: alpha_i horizontal strands, each crossing the square boundaries at
  // its sides, |beta'_i| vertical strands crossing the alpha_E strands of Y_1;
  // Y_1 turns over the host disk, crossing alpha_host strands beta'_E times.
  const std::vector<FiberInvariant> slopes{{3, 2}, {5, -7}, {4, 1}, {2, 3}};
  const Diagram dg = synthesize_diagram(plan_decomposition(4), slopes);
  const long expected = (2 + 7 + 1) * 2  // vertical strands x alpha_E
                        + 3 * 3            // host strands x beta'_E
                        + (3 + 5) + (5 + 4);  // square boundaries
  CHECK(static_cast<long>(dg.crossing_count()) == expected);
  CHECK(dg.x_curves[0].size() == 2 * 2 + 3 * 3 + 3);
}

TEST_CASE("build_positive_vertical examples") {
  check_vertical(make_normalized(0, {{4, 1}, {3, 2}, {5, 3}, {2, 1}}, 5));
  check_vertical(make_normalized(0, {{2, 1}, {3, 1}, {5, 1}}, 1));
  CHECK(error_code([] { build_positive_vertical(make_normalized(1, {{2, 1}}, 0)); }) ==
        "BaseGenusUnsupported");
  CHECK(error_code([] { build_positive_vertical(make_normalized(0, {{4, 2}}, 0)); }) ==
        "InvalidInvariant");
}

TEST_CASE("build_positive_vertical on random spaces over S^2") {
  oracle::Rng rng(42);
  for (int t = 0; t < 300; ++t) {
    const auto m = static_cast<std::size_t>(oracle::uniform(rng, 0, 6));
    check_vertical(oracle::random_normalized(rng, 0, m, 9, 7));
  }
  // Non-normalized input goes through the same pipeline.
  check_vertical(make_non_normalized(0, {{4, 1}, {3, -4}, {5, 3}, {2, -5}}));
}

TEST_CASE("build_positive_vertical is deterministic") {
  const SeifertData s = make_normalized(0, {{5, 2}, {3, 1}, {4, 3}, {2, 1}, {5, 4}}, -2);
  CHECK(json::to_json(build_positive_vertical(s)).dump() ==
        json::to_json(build_positive_vertical(s)).dump());
}
