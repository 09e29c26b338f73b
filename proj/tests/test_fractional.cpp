#include <random>
#include <sstream>

#include "doctest.h"
#include "factorkit/error.hpp"
#include "factorkit/fractional.hpp"
#include "support/oracles.hpp"

using namespace factorkit;
using namespace factorkit::testing;

namespace {

std::int64_t source_capacity(const FlowNetwork& net) {
  std::int64_t total = 0;
  for (const auto& a : net.arcs())
    if (a.tail == net.source()) total += a.capacity;
  return total;
}

}  // namespace

TEST_CASE("symmetric network shape") {
  const auto c4 = build_symmetric_network(cycle4(), DegreeFunc::constant(4, 1));
  CHECK(c4.node_count() == 10);
  CHECK(c4.arcs().size() == 16);
  CHECK(source_capacity(c4) == 4);

  CHECK(source_capacity(build_symmetric_network(edgeless_graph(1), DegreeFunc{0})) == 0);
  CHECK(source_capacity(build_symmetric_network(complete_graph(3), DegreeFunc::constant(3, 1))) == 3);

  CHECK_THROWS_AS(build_symmetric_network(cycle4(), DegreeFunc::constant(3, 1)), DomainError);
}

TEST_CASE("fractional q-factor examples") {
  SUBCASE("triangle with q = 1 is all halves") {
    const auto r = fractional_q_feasible(complete_graph(3), DegreeFunc::constant(3, 1));
    REQUIRE(r.feasible);
    REQUIRE(r.indicator.has_value());
    CHECK(r.indicator->numerators() == std::vector<std::uint8_t>{1, 1, 1});
  }
  SUBCASE("star K_{1,3} with q = 1 fails") {
    const auto r = fractional_q_feasible(star3(), DegreeFunc::constant(4, 1));
    CHECK_FALSE(r.feasible);
    REQUIRE(r.certificate.has_value());
    CHECK(r.certificate->S == VertexSet(4, {0}));
    CHECK(r.certificate->T == VertexSet(4, {1, 2, 3}));
    CHECK(r.certificate->deficiency == -2);
  }
  SUBCASE("q = 0 is the zero indicator") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 10; ++i) {
      const auto g = random_graph(rng, 6, 0.5);
      const auto r = fractional_q_feasible(g, DegreeFunc::constant(6, 0));
      REQUIRE(r.feasible);
      CHECK(r.indicator->support().empty());
    }
  }
}

TEST_CASE("fractional (g,f)-factor examples") {
  const auto path = fractional_gf_feasible(path3(), DegreeFunc::constant(3, 0), DegreeFunc::constant(3, 1));
  CHECK(path.feasible);

  const auto star = fractional_gf_feasible(star3(), DegreeFunc::constant(4, 1), DegreeFunc::constant(4, 1));
  CHECK_FALSE(star.feasible);
  REQUIRE(star.certificate.has_value());
  CHECK(star.certificate->deficiency == -2);

  const auto lower = DegreeFunc::constant(4, 1);
  const auto upper = DegreeFunc::constant(4, 2);
  const auto c4 = fractional_gf_feasible(cycle4(), lower, upper);
  REQUIRE(c4.feasible);
  CHECK(indicator_valid(cycle4(), *c4.indicator, lower, upper));
  // h = 1 everywhere is one valid witness too.
  CHECK(indicator_valid(cycle4(), IndicatorAssignment(cycle4().edges(), {2, 2, 2, 2}), lower, upper));

  CHECK_THROWS_AS(fractional_gf_feasible(path3(), DegreeFunc{1, 2, 1}, DegreeFunc{1, 1, 1}), DomainError);
}

TEST_CASE("anstee_deficiency examples") {
  const auto star = anstee_deficiency(star3(), DegreeFunc::constant(4, 1), DegreeFunc::constant(4, 1));
  CHECK(star.deficiency == -2);
  CHECK(star.S == VertexSet(4, {0}));

  CHECK(anstee_deficiency(complete_graph(4), DegreeFunc::constant(4, 1), DegreeFunc::constant(4, 1)).deficiency == 0);

  std::mt19937_64 rng(8);
  for (int i = 0; i < 20; ++i) {
    const auto g = random_graph(rng, 6, 0.4);
    std::vector<std::int64_t> f(6);
    for (auto& x : f) x = std::uniform_int_distribution<std::int64_t>(0, 3)(rng);
    const auto cert = anstee_deficiency(g, DegreeFunc::constant(6, 0), DegreeFunc(f));
    CHECK(cert.deficiency == 0);
    CHECK(cert.S.empty());
    CHECK(cert.T.empty());
  }
}

TEST_CASE("enumeration cutoff") {
  const auto g = edgeless_graph(30);
  const auto zero = DegreeFunc::constant(30, 0);
  const auto one = DegreeFunc::constant(30, 1);
  CHECK_THROWS_AS(anstee_deficiency(g, zero, one), ResourceError);
  EnumerationOptions small{.max_n = 3, .workers = 1};
  CHECK_THROWS_AS(anstee_deficiency(cycle4(), DegreeFunc::constant(4, 0), DegreeFunc::constant(4, 1), small),
                  ResourceError);

  // Feasibility still works past the cutoff; only the certificate is dropped.
  const auto r = fractional_q_feasible(g, one);
  CHECK_FALSE(r.feasible);
  CHECK_FALSE(r.certificate.has_value());
}

TEST_CASE("flow verdict agrees with the brute-force Anstee condition") {
  std::mt19937_64 rng(1234);
  int feasible = 0;
  int infeasible = 0;
  for (int trial = 0; trial < 1500; ++trial) {
    const auto inst = random_instance(rng);
    const auto& g = inst.graph;
    const auto r = fractional_gf_feasible(g, inst.lower, inst.upper);
    const auto raw = raw_anstee_min(g, inst.lower, inst.upper);
    CHECK(r.feasible == (raw >= 0));
    if (r.feasible) {
      ++feasible;
      REQUIRE(r.indicator.has_value());
      CHECK(indicator_valid(g, *r.indicator, inst.lower, inst.upper));
    } else {
      ++infeasible;
      REQUIRE(r.certificate.has_value());
      const auto& c = *r.certificate;
      CHECK(c.deficiency == raw);
      CHECK(c.deficiency == raw_deficiency(g, inst.upper, inst.lower, c.S.mask()));
      CHECK(c == anstee_certificate_for(g, inst.lower, inst.upper, c.S));
      CHECK(c.S.disjoint(c.T));
    }

    // Orientation of the input edges does not matter.
    std::vector<Edge> reversed;
    for (auto [u, v] : g.edges()) reversed.emplace_back(v, u);
    CHECK(fractional_gf_feasible(Graph(g.order(), reversed), inst.lower, inst.upper).feasible == r.feasible);
  }
  CHECK(feasible > 100);
  CHECK(infeasible > 100);
}

TEST_CASE("exact q-factors: flow agrees with brute force and witnesses are exact") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 800; ++trial) {
    const auto inst = random_instance(rng);
    const auto& g = inst.graph;
    const auto r = fractional_q_feasible(g, inst.upper);
    CHECK(r.feasible == (raw_anstee_min(g, inst.upper, inst.upper) >= 0));
    CHECK(r.feasible == has_fractional_q_factor(g, inst.upper));
    if (r.feasible) CHECK(indicator_valid(g, *r.indicator, inst.upper, inst.upper));
  }
}

TEST_CASE("anstee minimizer follows the canonical tie-break, for any worker count") {
  std::mt19937_64 rng(4321);
  for (int trial = 0; trial < 300; ++trial) {
    const auto inst = random_instance(rng);
    const auto expected = raw_min_deficiency(inst.graph, inst.upper, inst.lower);
    for (unsigned workers : {1U, 3U, 8U}) {
      EnumerationOptions options{.max_n = 24, .workers = workers};
      const auto cert = anstee_deficiency(inst.graph, inst.lower, inst.upper, options);
      CHECK(cert.deficiency == expected.first);
      CHECK(cert.S.mask() == expected.second);
    }
  }
}

TEST_CASE("indicator text format") {
  const auto g = complete_graph(4);
  const auto r = fractional_q_feasible(g, DegreeFunc{1, 1, 1, 2});
  REQUIRE(r.feasible);
  std::stringstream text;
  write_indicator(text, *r.indicator);
  CHECK(text.str().rfind("denominator 2\n", 0) == 0);
  CHECK(read_indicator(text, g) == *r.indicator);

  std::istringstream no_header("0 1 1\n");
  CHECK_THROWS_AS(read_indicator(no_header, g), ParseError);
  std::istringstream bad_num("denominator 2\n0 1 3\n");
  CHECK_THROWS_AS(read_indicator(bad_num, g), ParseError);
  std::istringstream not_edge("denominator 2\n0 2 1\n");
  CHECK_THROWS_AS(read_indicator(not_edge, path3()), ParseError);
}
