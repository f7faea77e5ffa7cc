#include <doctest.h>

#include <stdexcept>

#include "crysalg/crystal_json.hpp"
#include "crysalg/tensor.hpp"

using namespace crysalg;

TEST_CASE("JSON round trip preserves the crystal") {
  std::vector<Crystal> samples;
  samples.push_back(build_Bn(0));
  samples.push_back(build_Bn(3));
  samples.push_back(build_T_sl2(5));
  samples.push_back(tensor(build_Bn(1), build_Bn(2)).crystal);
  samples.push_back(dual(build_Bn(2)));
  samples.push_back(tensor(build_Bn(2), build_T_sl2(-1)).crystal);
  for (const Crystal& c : samples) {
    const Json j = crystal_to_json(c);
    const Crystal back = crystal_from_json(j);
    CHECK(isomorphic(back, c));
    CHECK(back.seminormal == c.seminormal);
    // stats survive even for non-seminormal crystals
    for (std::size_t v = 0; v < c.size(); ++v) {
      const int w = back.index_of(c.ids[v]);
      REQUIRE(w >= 0);
      CHECK(back.wt[w] == c.wt[v]);
      CHECK(back.eps[w][0] == c.eps[v][0]);
      CHECK(back.phi[w][0] == c.phi[v][0]);
    }
    // byte determinism of the canonical form
    CHECK(crystal_to_json(back).dump() == j.dump());
  }
}

TEST_CASE("malformed input is rejected") {
  Json j = crystal_to_json(build_Bn(2));
  Json bad = j;
  bad["edges"][0]["to"] = "nonexistent";
  CHECK_THROWS_AS(crystal_from_json(bad), std::invalid_argument);

  Json dup = j;
  dup["nodes"].push_back(dup["nodes"][0]);
  CHECK_THROWS_AS(crystal_from_json(dup), std::invalid_argument);

  Json shifted = crystal_to_json(tensor(build_Bn(1), build_T_sl2(1)).crystal);
  shifted.erase("eps_phi");
  CHECK_THROWS_AS(crystal_from_json(shifted), std::invalid_argument);
}

TEST_CASE("validation catches a corrupted file") {
  Json j = crystal_to_json(build_Bn(1));
  for (auto& node : j["nodes"])
    if (node["id"] == "x") node["wt"] = {1};
  Crystal c = crystal_from_json(j);
  CHECK(!validate(c).empty());
}

TEST_CASE("DOT export") {
  const std::string dot = crystal_to_dot(build_Bn(1));
  CHECK(dot.find("digraph crystal {") == 0);
  CHECK(dot.find("\"y\" [label=\"y | 1\"];") != std::string::npos);
  CHECK(dot.find("\"y\" -> \"x\" [label=\"1\"];") != std::string::npos);
  // one node line per node, one edge line per f edge
  const std::string dot0 = crystal_to_dot(build_Bn(0));
  CHECK(dot0.find("->") == std::string::npos);
}
