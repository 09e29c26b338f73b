#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"
#include "factorkit/error.hpp"
#include "factorkit/graph_io.hpp"
#include "support/oracles.hpp"

using namespace factorkit;
using namespace factorkit::testing;

namespace {

LabeledGraph parse(const std::string& text) {
  std::istringstream in(text);
  return read_graph(in);
}

}  // namespace

TEST_CASE("graph text format") {
  const auto g = parse("# a path\n3 2\n\n1 0\n# middle\n1 2\n");
  CHECK(g.graph.order() == 3);
  CHECK(g.graph.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
  CHECK(g.labels == std::vector<std::string>{"0", "1", "2"});
  CHECK(g.id_of("2") == 2);
  CHECK_THROWS_AS(g.id_of("x"), ParseError);

  CHECK(parse("0 0\n").graph.order() == 0);

  for (const char* bad : {"", "3\n", "3 1\n0 0\n", "3 2\n0 1\n1 0\n", "3 1\n0 3\n", "3 2\n0 1\n", "3 1\n0 1\n1 2\n",
                          "3 1\n0 1 2\n", "x 1\n", "3 1\n0 y\n", "-1 0\n", "3 4\n"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse(bad), ParseError);
  }
}

TEST_CASE("write then read reproduces the graph") {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 50; ++trial) {
    const auto g = random_graph(rng, std::uniform_int_distribution<std::size_t>(0, 12)(rng), 0.4);
    std::stringstream text;
    write_graph(text, g);
    const auto back = read_graph(text);
    CHECK(back.graph.order() == g.order());
    CHECK(back.graph.edges() == g.edges());
  }
}

TEST_CASE("file helpers") {
  const auto dir = std::filesystem::temp_directory_path() / "factorkit_io_test";
  std::filesystem::create_directories(dir);
  save_graph(dir / "c4.txt", cycle4());
  const auto g = load_graph(dir / "c4.txt");
  CHECK(g.graph.edges() == cycle4().edges());

  {
    std::ofstream out(dir / "q.txt");
    out << "# demand\n3 2\n0 1\n1 1\n2 1\n";
  }
  CHECK(parse_prescription_spec("file:" + (dir / "q.txt").string(), g) == DegreeFunc{1, 1, 1, 2});
  CHECK(parse_prescription_spec("const:3", g) == DegreeFunc::constant(4, 3));
  CHECK_THROWS_AS(parse_prescription_spec("const:-1", g), ParseError);
  CHECK_THROWS_AS(parse_prescription_spec("const:x", g), ParseError);
  CHECK_THROWS_AS(parse_prescription_spec("3", g), ParseError);
  CHECK_THROWS_AS(parse_prescription_spec("file:" + (dir / "missing.txt").string(), g), ParseError);
  CHECK_THROWS_AS(load_graph(dir / "missing.txt"), ParseError);
  std::filesystem::remove_all(dir);
}

TEST_CASE("prescription files") {
  const auto g = with_default_labels(path3());
  std::istringstream ok("2 5\n0 1\n1 0\n");
  CHECK(read_prescription(ok, g) == DegreeFunc{1, 0, 5});

  for (const char* bad : {"0 1\n1 1\n", "0 1\n1 1\n2 1\n2 1\n", "0 1\n1 1\n9 1\n", "0 1\n1 -1\n2 1\n", "0 1 2\n"}) {
    CAPTURE(bad);
    std::istringstream in(bad);
    CHECK_THROWS_AS(read_prescription(in, g), ParseError);
  }
}
