#include <random>
#include <sstream>

#include "doctest.h"
#include "factorkit/error.hpp"
#include "factorkit/extremal.hpp"
#include "factorkit/graph_io.hpp"
#include "factorkit/report.hpp"

using namespace factorkit;

namespace {

Json report_json(const SharpnessReport& r, const Graph& g) {
  const auto labeled = with_default_labels(g);
  auto j = report_skeleton("sharpness", labeled);
  fill_sharpness(j, r, labeled);
  return j;
}

}  // namespace

TEST_CASE("neighborhood construction sizes") {
  CHECK(gen_neighborhood_sharp(1, 2, 1).order() == 4);
  CHECK(gen_neighborhood_sharp(1, 2, 1).size() == 5);
  CHECK(gen_neighborhood_sharp(1, 2, 2).order() == 7);
  CHECK(gen_neighborhood_sharp(1, 2, 2).size() == 18);
  CHECK(gen_neighborhood_sharp(2, 3, 1).order() == 6);
  CHECK(gen_neighborhood_sharp(2, 3, 1).size() == 12);

  const auto g = gen_neighborhood_sharp(1, 2, 2);
  CHECK(g.adjacent(0, 3));
  CHECK_FALSE(g.adjacent(4, 5));

  CHECK_THROWS_AS(gen_neighborhood_sharp(2, 2, 1), DomainError);
  CHECK_THROWS_AS(gen_neighborhood_sharp(1, 2, 0), DomainError);
}

TEST_CASE("min-degree construction parameters") {
  CHECK(mindegree_sharp_m(1, 2) == 1);
  CHECK(mindegree_sharp_m(2, 3) == 1);
  CHECK(mindegree_sharp_m(1, 4) == 5);
  CHECK_THROWS_AS(mindegree_sharp_m(1, 3), DomainError);
  CHECK_THROWS_AS(mindegree_sharp_m(3, 2), DomainError);

  const auto g = gen_mindegree_sharp(1, 2, 30);
  CHECK(g.order() == 33);
  CHECK(g.min_degree() == 2);
  // Too small an r breaks the order hypothesis.
  CHECK_THROWS_AS(gen_mindegree_sharp(2, 3, 12), DomainError);
  CHECK(build_mindegree_sharp(2, 3, 12).order() == 16);
  CHECK(min_mindegree_sharp_r(2, 3) == std::optional<std::int64_t>(16));
}

TEST_CASE("verify_sharpness examples") {
  SUBCASE("neighborhood (1,2,1)") {
    const auto r = verify_sharpness({SharpnessFamily::Neighborhood, 1, 2, 1});
    CHECK_FALSE(r.verdict.holds);
    REQUIRE(r.verdict.certificate.has_value());
    CHECK(r.verdict.certificate->deficiency == -2);
    CHECK(r.verdict.certificate->S == VertexSet(4, {0, 1}));
    CHECK(r.witness.deficiency == -2);
  }
  SUBCASE("neighborhood (2,3,1)") {
    const auto r = verify_sharpness({SharpnessFamily::Neighborhood, 2, 3, 1});
    CHECK(r.witness.deficiency == -3);
    CHECK(r.verdict.certificate->deficiency <= -3);
  }
  SUBCASE("mindegree (1,2,30)") {
    const auto r = verify_sharpness({SharpnessFamily::MinDegree, 1, 2, 30});
    CHECK_FALSE(r.verdict.holds);
    CHECK(r.verdict.checked_by == Engine::Witness);
    CHECK(r.witness.deficiency == -1);
    CHECK(r.witness.S == VertexSet(33, {0}));
    CHECK(r.witness.T == VertexSet(33, {31, 32}));
    CHECK(r.min_degree == 2);
  }
  SUBCASE("mindegree (1,2,15) enumerates") {
    const auto r = verify_sharpness({SharpnessFamily::MinDegree, 1, 2, 15});
    CHECK(r.verdict.checked_by == Engine::WorstSet);
    CHECK(r.verdict.certificate->deficiency < 0);
  }
}

TEST_CASE("verify_sharpness_on reports the broken clause") {
  // A complete graph is no counterexample to anything.
  try {
    verify_sharpness_on(complete_graph(4), {SharpnessFamily::Neighborhood, 1, 2, 1});
    FAIL("expected a verification error");
  } catch (const VerificationError& e) {
    CHECK_FALSE(e.clause().empty());
  }
}

TEST_CASE("closed-form counts on parameter sweeps") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 60; ++trial) {
    const auto a = std::uniform_int_distribution<std::int64_t>(1, 4)(rng);
    const auto b = a + std::uniform_int_distribution<std::int64_t>(1, 4)(rng);
    const auto m = std::uniform_int_distribution<std::int64_t>(1, 4)(rng);
    const auto g = gen_neighborhood_sharp(a, b, m);
    const auto clique = b * m, rest = a * m + 1;
    CHECK(static_cast<std::int64_t>(g.order()) == (a + b) * m + 1);
    CHECK(static_cast<std::int64_t>(g.size()) == clique * (clique - 1) / 2 + clique * rest);
    CHECK(static_cast<std::int64_t>(g.min_degree()) == clique);
    if ((a + b) * m + 1 <= 16) {
      const auto r = verify_sharpness({SharpnessFamily::Neighborhood, a, b, m});
      CHECK(r.witness.deficiency == -b);
      CHECK(r.verdict.certificate->deficiency <= -b);
    }
  }
  for (int trial = 0; trial < 40; ++trial) {
    auto a = std::uniform_int_distribution<std::int64_t>(1, 4)(rng);
    auto b = a + 2 * std::uniform_int_distribution<std::int64_t>(0, 2)(rng) + 1;
    const auto mm = mindegree_sharp_m(a, b);
    const auto k = (a + b + 1) / 2;
    const auto r0 = min_mindegree_sharp_r(a, b);
    REQUIRE(r0.has_value());
    const auto r = *r0 + std::uniform_int_distribution<std::int64_t>(0, 5)(rng);
    const auto g = gen_mindegree_sharp(a, b, r);
    CHECK(static_cast<std::int64_t>(g.order()) == mm + r + k);
    CHECK(static_cast<std::int64_t>(g.size()) ==
          mm * (mm - 1) / 2 + r * (r - 1) / 2 + k * (k - 1) / 2 + mm * (r + k));
    CHECK(static_cast<std::int64_t>(g.min_degree()) == mm + (a + b - 1) / 2);
    const auto report = verify_sharpness({SharpnessFamily::MinDegree, a, b, r});
    CHECK_FALSE(report.verdict.holds);
    CHECK(report.witness.deficiency < 0);
    CHECK_FALSE(report.hypotheses.at("min_degree").holds);
    CHECK(report.hypotheses.at("order").holds);
    CHECK(report.hypotheses.at("neighborhood_union").holds);
  }
}

TEST_CASE("generated file reloads to the same report") {
  for (const SharpnessInput input : {SharpnessInput{SharpnessFamily::Neighborhood, 1, 2, 2},
                                     SharpnessInput{SharpnessFamily::Neighborhood, 2, 3, 1},
                                     SharpnessInput{SharpnessFamily::MinDegree, 1, 2, 15},
                                     SharpnessInput{SharpnessFamily::MinDegree, 1, 2, 30}}) {
    const auto g = input.family == SharpnessFamily::Neighborhood ? gen_neighborhood_sharp(input.a, input.b, input.size)
                                                                 : gen_mindegree_sharp(input.a, input.b, input.size);
    std::stringstream text;
    write_graph(text, g);
    const auto loaded = read_graph(text);
    CHECK(loaded.graph.edges() == g.edges());
    const auto direct = report_json(verify_sharpness(input), g);
    const auto reloaded = report_json(verify_sharpness_on(loaded.graph, input), loaded.graph);
    CHECK(direct.dump() == reloaded.dump());
  }
}
