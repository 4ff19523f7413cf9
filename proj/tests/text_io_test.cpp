#include <gtest/gtest.h>

#include <mtt/minors.hpp>
#include <mtt/text_io.hpp>

using namespace mtt;

TEST(GraphText, RoundTrip) {
  const DirectedGraph g(3, {{1, 2}, {3, 3}, {2, 1}});
  EXPECT_EQ(to_text(g), "D 3 3\n1 2\n3 3\n2 1\n");
  EXPECT_EQ(std::get<DirectedGraph>(parse_graph(to_text(g))), g);
  const UndirectedGraph u(2, {{2, 1}});
  EXPECT_EQ(to_text(u), "U 2 1\n1 2\n");
  EXPECT_EQ(std::get<UndirectedGraph>(parse_graph(to_text(u))), u);
}

TEST(GraphText, ToleratesBlankLinesAndCrlf) {
  EXPECT_EQ(std::get<DirectedGraph>(parse_graph("\nD 2 1\r\n\n1 2\r\n")), DirectedGraph(2, {{1, 2}}));
}

TEST(GraphText, ErrorsCarryLineNumbers) {
  auto line_of = [](const std::string& text) {
    try {
      parse_graph(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return -1;
  };
  EXPECT_EQ(line_of("X 2 1\n1 2\n"), 1);
  EXPECT_EQ(line_of("D 2 1 x\n1 2\n"), 1);
  EXPECT_EQ(line_of("D 2 2\n1 2\n1 3\n"), 3);
  EXPECT_EQ(line_of("D 2 2\n1 2\n"), 3);
  EXPECT_EQ(line_of("D 2 1\n1 2\n2 1\n"), 3);
  EXPECT_EQ(line_of("D 2 1\n1\n"), 2);
  EXPECT_EQ(line_of(""), 1);
  EXPECT_EQ(line_of("D 0 0\n"), 1);
}

TEST(SumText, Format) {
  EXPECT_EQ(to_text(universal_codim1(2, 1, 1, 2)), "FS 2 1\n1/1 | 2 1\n");
  EXPECT_EQ(to_text(universal_det(2, 1, {})), "FS 2 1\n");
  EXPECT_EQ(to_text(universal_det(2, 0, {1, 2})), "FS 2 0\n1/1 |\n");
  EXPECT_EQ(to_text(universal_det(2, 2, {})),
            "FS 2 2\n1/2 | 1 1 ; 2 2\n-1/2 | 1 2 ; 2 1\n-1/2 | 2 1 ; 1 2\n1/2 | 2 2 ; 1 1\n");
}

TEST(SumText, RoundTrip) {
  for (int n = 1; n <= 3; ++n)
    for (int k = 0; k <= 3; ++k) {
      const FormalSum s = universal_det(n, k, {});
      EXPECT_EQ(std::get<FormalSum>(parse_formal_sum(to_text(s))), s);
    }
  const UndirectedSum u(UndirectedGraph(2, {{1, 2}, {2, 2}}), Coefficient(-3) / 4);
  EXPECT_EQ(to_text(u), "FSU 2 2\n-3/4 | 1 2 ; 2 2\n");
  EXPECT_EQ(std::get<UndirectedSum>(parse_formal_sum(to_text(u))), u);
}

TEST(SumText, MergesRepeatedTerms) {
  const FormalSum s = std::get<FormalSum>(parse_formal_sum("FS 2 1\n1/2 | 1 2\n1/2 | 1 2\n-1 | 2 2\n1 | 2 2\n"));
  EXPECT_EQ(s, FormalSum(DirectedGraph(2, {{1, 2}})));
}

TEST(SumText, Errors) {
  EXPECT_THROW(parse_formal_sum("FS 2 1\n1/2 1 2\n"), ParseError);
  EXPECT_THROW(parse_formal_sum("FS 2 1\n1/0 | 1 2\n"), ParseError);
  EXPECT_THROW(parse_formal_sum("FS 2 2\n1 | 1 2\n"), ParseError);
  EXPECT_THROW(parse_formal_sum("FS 2 1\n1 | 1 3\n"), ParseError);
  EXPECT_THROW(parse_formal_sum("G 2 1\n"), ParseError);
}
