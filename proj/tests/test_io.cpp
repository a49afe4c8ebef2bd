#include <gtest/gtest.h>

#include <sstream>

#include "emlab/io.hpp"

using namespace emlab;

namespace {

template <typename F>
int error_line(F&& f) {
  try {
    f();
  } catch (const io::ParseError& e) {
    return e.line();
  }
  return -1;
}

}  // namespace

TEST(Io, ParseGraph) {
  std::istringstream in("# comment\np 3\n\ne 1 2  # trailing\ne 2 2\n");
  const auto g = io::parse_graph(in);
  EXPECT_EQ(g, Graph(3, {{1, 2}, {2, 2}}));
}

TEST(Io, GraphErrorsCarryLineNumbers) {
  EXPECT_EQ(error_line([] {
              std::istringstream in("p 3\ne 1 4\n");
              io::parse_graph(in);
            }),
            2);
  EXPECT_EQ(error_line([] {
              std::istringstream in("e 1 2\np 3\n");
              io::parse_graph(in);
            }),
            1);
  EXPECT_EQ(error_line([] {
              std::istringstream in("p 3\ne 1 x\n");
              io::parse_graph(in);
            }),
            2);
  EXPECT_EQ(error_line([] {
              std::istringstream in("p 3\ne 1 2 3\n");
              io::parse_graph(in);
            }),
            2);
  EXPECT_EQ(error_line([] {
              std::istringstream in("p 3\np 4\n");
              io::parse_graph(in);
            }),
            2);
  EXPECT_EQ(error_line([] {
              std::istringstream in("p 2\nq 1 2\n");
              io::parse_graph(in);
            }),
            2);
  std::istringstream empty("# nothing\n");
  EXPECT_THROW(io::parse_graph(empty), io::ParseError);
}

TEST(Io, ParseLabeling) {
  std::istringstream in("v 1 1\nv 2 2\ne 1 3\n");
  EXPECT_EQ(io::parse_labeling(in, 2, 1), (TotalLabeling{{1, 2}, {3}}));
  EXPECT_EQ(error_line([] {
              std::istringstream bad("v 1 1\nv 1 2\ne 1 3\n");
              io::parse_labeling(bad, 2, 1);
            }),
            2);
  EXPECT_EQ(error_line([] {
              std::istringstream bad("v 1 1\nv 3 2\ne 1 3\n");
              io::parse_labeling(bad, 2, 1);
            }),
            2);
  std::istringstream missing("v 1 1\ne 1 3\n");
  EXPECT_THROW(io::parse_labeling(missing, 2, 1), io::ParseError);
  // duplicate labels parse; the verifier rejects them
  std::istringstream dup("v 1 1\nv 2 1\ne 1 3\n");
  EXPECT_NO_THROW(io::parse_labeling(dup, 2, 1));
}

TEST(Io, ParseLabeledDigraph) {
  std::istringstream in("p 2\na 1 1\na 1 2\nv 1 1\nv 2 2\ne 1 4\ne 2 3\n");
  const auto d = io::parse_labeled_digraph(in);
  EXPECT_EQ(d.digraph().arcs(), (std::vector<Arc>{{1, 1}, {1, 2}}));
  EXPECT_EQ(d.labeling().edge_labels, (std::vector<int>{4, 3}));
  std::istringstream bad("p 2\na 1 2\nv 1 1\nv 2 2\ne 1 4\n");
  EXPECT_THROW(io::parse_labeled_digraph(bad), io::ParseError);
}

TEST(Io, ParseAssignment) {
  std::istringstream in("# arc member\n2 1\n1 2\n3 1\n");
  EXPECT_EQ(io::parse_assignment(in, 3, 2), (std::vector<std::size_t>{1, 0, 0}));
  std::istringstream gap("1 1\n3 1\n");
  EXPECT_THROW(io::parse_assignment(gap, 3, 1), io::ParseError);
  std::istringstream range("1 3\n");
  EXPECT_EQ(error_line([&] { io::parse_assignment(range, 1, 2); }), 1);
}

TEST(Io, ParseIndexList) {
  EXPECT_EQ(io::parse_index_list("1,3", 4), (std::vector<std::size_t>{0, 2}));
  EXPECT_EQ(io::parse_index_list("2 4, 1", 4), (std::vector<std::size_t>{1, 3, 0}));
  EXPECT_TRUE(io::parse_index_list("", 4).empty());
  EXPECT_THROW(io::parse_index_list("0", 4), io::ParseError);
  EXPECT_THROW(io::parse_index_list("5", 4), io::ParseError);
  EXPECT_THROW(io::parse_index_list("1;2", 4), io::ParseError);
}

TEST(Io, WriteThenRead) {
  const auto g = mk_star_with_loop(3);
  std::ostringstream out;
  io::write_graph(out, g);
  std::istringstream back(out.str());
  EXPECT_EQ(io::parse_graph(back), g);
  const TotalLabeling f{{2, 1}, {3}};
  std::ostringstream lab;
  io::write_labeling(lab, f);
  std::istringstream lab_back(lab.str());
  EXPECT_EQ(io::parse_labeling(lab_back, 2, 1), f);
}
