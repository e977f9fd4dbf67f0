#include <doctest.h>

#include <fstream>
#include <sstream>

#include "gclt/constructors.hpp"
#include "gclt/group_spec.hpp"
#include "gclt/xgraph.hpp"

using namespace gclt;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

}  // namespace

TEST_CASE("X_28 matches the four-vertex five-edge graph") {
  const XGraph x = build_xgraph(28);
  CHECK(x.vertices == std::vector<std::string>{"C28", "C2xC14", "D14", "Dic7"});
  CHECK(x.edges == std::vector<std::pair<int, int>>{
                       {0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
  CHECK(!x.complete);  // the D14 -- Dic7 pair is missing
  CHECK(x.connected);
}

TEST_CASE("X_28 DOT output matches the golden file byte for byte") {
  const std::string dot = to_dot(build_xgraph(28));
  CHECK(dot == read_file(std::string(GCLT_TEST_DATA_DIR) + "/x28.dot"));
  int edge_lines = 0;
  for (std::size_t pos = dot.find("--"); pos != std::string::npos;
       pos = dot.find("--", pos + 2))
    ++edge_lines;
  CHECK(edge_lines == 5);
}

TEST_CASE("small graphs") {
  const XGraph x6 = build_xgraph(6);
  CHECK(x6.vertices.size() == 2);
  CHECK(x6.edges.size() == 1);
  CHECK(x6.complete);
  CHECK(x6.connected);
  CHECK(to_json(x6).at("edges") == nlohmann::json::parse("[[0,1]]"));

  const XGraph x8 = build_xgraph(8);
  CHECK(x8.vertices.size() == 5);
  CHECK(x8.edges.size() == 9);  // all pairs except D4 -- Q8
  bool d4_q8 = false;
  for (const auto& [a, b] : x8.edges)
    d4_q8 |= x8.vertices[a] == "D4" && x8.vertices[b] == "Q8";
  CHECK(!d4_q8);

  const XGraph x1 = build_xgraph(1);
  CHECK(x1.complete);
  CHECK(x1.connected);
  const std::string dot1 = to_dot(x1);
  CHECK(dot1.find("v0") != std::string::npos);
  CHECK(dot1.find("--") == std::string::npos);
}

TEST_CASE("brute-force edge oracle") {
  const FiniteGroup c6 = cyclic(6);
  const FiniteGroup s3 = dihedral(3);
  CHECK(brute_edge_check(c6, s3));
  CHECK(!brute_edge_check(s3, s3));
  CHECK(brute_edge_check(cyclic(5), cyclic(5)));
  CHECK_THROWS_AS(brute_edge_check(cyclic(63), cyclic(63)), std::invalid_argument);
}

TEST_CASE("partial catalog orders are rejected") {
  CHECK_THROWS_AS(build_xgraph(24), std::invalid_argument);
  CHECK_THROWS_AS(build_xgraph(36), std::invalid_argument);
}

TEST_CASE("xgraph json schema") {
  const auto j = to_json(build_xgraph(28));
  CHECK(j.at("n") == 28);
  CHECK(j.at("vertices").size() == 4);
  CHECK(j.at("edges").size() == 5);
  CHECK(j.at("complete") == false);
  CHECK(j.at("connected") == true);
}
