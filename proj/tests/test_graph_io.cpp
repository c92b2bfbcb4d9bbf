#include <gtest/gtest.h>

#include "qwalk/graph_io.hpp"

using namespace qwalk;

TEST(GraphIo, ParsesFileFormat) {
  const PortGraph g = parse_graph_json(
      R"({"vertices": 3, "degree": 2, "edges": [
           {"u": 0, "pu": 0, "v": 1, "pv": 1},
           {"u": 1, "pu": 0, "v": 2, "pv": 1},
           {"u": 2, "pu": 0, "v": 0, "pv": 1}]})");
  EXPECT_EQ(g, build_cycle(3));
}

TEST(GraphIo, RoundTrip) {
  const PortGraph g = example_general_graph();
  EXPECT_EQ(parse_graph_json(graph_to_json(g)), g);
}

TEST(GraphIo, SyntaxErrorReportsLine) {
  try {
    parse_graph_json("{\"vertices\": 3,\n \"degree\": 2,\n \"edges\": [ oops ]}");
    FAIL();
  } catch (const ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
  }
}

TEST(GraphIo, FieldErrorReportsPath) {
  try {
    parse_graph_json(R"({"vertices": 2, "degree": 1, "edges": [{"u": 0, "pu": 0, "v": 1}]})");
    FAIL();
  } catch (const ConfigError& e) {
    EXPECT_EQ(e.field(), "$.edges[0].pv");
  }
  try {
    parse_graph_json(R"({"vertices": "two", "degree": 1, "edges": []})");
    FAIL();
  } catch (const ConfigError& e) {
    EXPECT_EQ(e.field(), "$.vertices");
  }
}

TEST(GraphIo, StructuralErrorsPropagate) {
  EXPECT_THROW(parse_graph_json(
                   R"({"vertices": 2, "degree": 2, "edges": [{"u": 0, "pu": 0, "v": 0, "pv": 1}]})"),
               StructuralError);
}
