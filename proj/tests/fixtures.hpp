#pragma once

#include "realkirwan/io.hpp"
#include "realkirwan/moment_graph.hpp"
#include "realkirwan/toric.hpp"

#include <string>
#include <vector>

namespace fixtures {

inline std::string data_path(const std::string& rel) { return std::string(RK_DATA_DIR) + "/" + rel; }

inline realkirwan::MomentGraph graph(const std::string& name) {
  return realkirwan::io::graph_from_json(realkirwan::io::read_json_file(data_path("graphs/" + name + ".json")));
}

inline realkirwan::DelzantPolytope polytope(const std::string& name) {
  return realkirwan::io::polytope_from_json(realkirwan::io::read_json_file(data_path("polytopes/" + name + ".json")));
}

// Graphs that pass validation.
inline const std::vector<std::string>& accepted_graphs() {
  static const std::vector<std::string> names = {
      "cp2",         "sphere_swap",       "point2",         "flag_a2",          "flag_a3",
      "delzant_interval", "delzant_simplex", "delzant_square", "delzant_hirzebruch", "delzant_simplex3"};
  return names;
}

inline const std::vector<std::string>& smooth_polytopes() {
  static const std::vector<std::string> names = {"interval", "simplex", "square", "hirzebruch", "simplex3"};
  return names;
}

struct ReduceCase {
  std::string graph;
  std::string mu;
};

// Regular values, one per graph, all in the interior of the moment image
// except point2 where mu misses the image entirely.
inline const std::vector<ReduceCase>& reduce_cases() {
  static const std::vector<ReduceCase> cases = {
      {"sphere_swap", "1/2"},          {"cp2", "1/3,1/3"},
      {"flag_a2", "1/3,1/5"},          {"flag_a3", "1/7,2/11,1/13"},
      {"delzant_interval", "1/2"},     {"delzant_square", "1/2,1/3"},
      {"delzant_hirzebruch", "1/2,1/3"}, {"delzant_simplex3", "1/5,1/7,1/9"},
      {"point2", "1,1"},
  };
  return cases;
}

}  // namespace fixtures
