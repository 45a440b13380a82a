#include <gtest/gtest.h>

#include <random>
#include <string>

#include "gwring/expr.hpp"

using namespace gwring;
using namespace gwring::expr;

namespace {

std::size_t error_offset(const std::string& text) {
  try {
    parse_expr(text);
  } catch (const ParseError& e) {
    return e.offset();
  }
  return std::string::npos;
}

// Random well-formed text over one ring's atoms.
class Gen {
 public:
  Gen(std::uint32_t seed, std::vector<std::string> atoms) : rng_(seed), atoms_(std::move(atoms)) {}

  std::string expr(int depth) {
    std::uniform_int_distribution<int> op(0, depth <= 0 ? 0 : 5);
    switch (op(rng_)) {
      case 1: return expr(depth - 1) + " + " + expr(depth - 1);
      case 2: return expr(depth - 1) + "-" + expr(depth - 1);
      case 3: return expr(depth - 1) + "*" + expr(depth - 1);
      case 4: return "(" + expr(depth - 1) + ")^" + std::to_string(pick(0, 3));
      case 5: return "(" + expr(depth - 1) + ")";
      default: return atoms_[static_cast<std::size_t>(pick(0, static_cast<int>(atoms_.size()) - 1))];
    }
  }

 private:
  int pick(int a, int b) { return std::uniform_int_distribution<int>(a, b)(rng_); }
  std::mt19937 rng_;
  std::vector<std::string> atoms_;
};

}  // namespace

TEST(Parse, ProductOfGenerators) {
  Expr e = parse_expr("x-(1/2)*x+(3/2)");
  EXPECT_EQ(e.kind, Expr::Kind::Mul);
  ASSERT_EQ(e.children.size(), 2u);
  EXPECT_EQ(e.children[0].kind, Expr::Kind::XGen);
  EXPECT_EQ(e.children[0].sign, line::Sign::Minus);
  EXPECT_EQ(e.children[1].root, HalfInt::from_twice(3));
}

TEST(Parse, ErrorOffsets) {
  EXPECT_EQ(error_offset("x+("), 3u);
  EXPECT_EQ(error_offset("x+(1/2"), 6u);
  EXPECT_EQ(error_offset(""), 0u);
  EXPECT_EQ(error_offset("x+(1/2) *"), 9u);
  EXPECT_EQ(error_offset("x+(1/2) )"), 8u);
  EXPECT_EQ(error_offset("q"), 0u);
  EXPECT_NE(error_offset("x+(1/3)"), std::string::npos);
  EXPECT_EQ(error_offset("x+(1/2)*x-(5/2)"), std::string::npos);
}

TEST(Parse, AllAtomKinds) {
  for (const char* s : {"3", "x+(-1/2)", "y-(5/2)", "g(-2/3)", "xp+[1/2,3/2,5/2]",
                        "xp-[1/2]", "M[{1/2:1};(1/2,inf)]", "M[{};-inf,inf]",
                        "S[{1/2:1,3/2:1};(-inf,3/2);1/2:R]"}) {
    EXPECT_NO_THROW(parse_expr(s)) << s;
  }
}

TEST(Print, RoundTripFuzz) {
  std::vector<std::vector<std::string>> rings{
      {"1", "2", "x+(1/2)", "x-(-3/2)", "M[{1/2:1,5/2:2};(1/2,5/2)]"},
      {"y+(1/2)", "y-(3/2)", "x+(1/2)", "S[{1/2:1};(-inf,inf);1/2:L]"},
      {"g(2)", "g(-1/3)", "xp+[1/2,3/2,5/2]", "xp-[3/2,3/2,5/2]"}};
  std::uint32_t seed = 101;
  for (const auto& atoms : rings) {
    Gen gen(seed++, atoms);
    for (int i = 0; i < 400; ++i) {
      std::string text = gen.expr(4);
      Expr a = parse_expr(text);
      std::string printed = print_expr(a);
      Expr b = parse_expr(printed);
      EXPECT_EQ(a, b) << text << " -> " << printed;
      EXPECT_EQ(print_expr(b), printed);
    }
  }
}

TEST(Print, MinimalParentheses) {
  EXPECT_EQ(print_expr(parse_expr("(x+(1/2)*(x-(5/2)))")), "x+(1/2)*x-(5/2)");
  EXPECT_EQ(print_expr(parse_expr("x+(1/2)-(x+(1/2)-x-(1/2))")), "x+(1/2) - (x+(1/2) - x-(1/2))");
}

TEST(Types, InferenceAndMixing) {
  EXPECT_EQ(infer_ring(parse_expr("x+(1/2)*2")), Ring::Line);
  EXPECT_EQ(infer_ring(parse_expr("y+(1/2)*x+(1/2)")), Ring::Split);
  EXPECT_EQ(infer_ring(parse_expr("g(2)*xp+[1/2,1/2,1/2]")), Ring::Cylinder);
  EXPECT_THROW(infer_ring(parse_expr("g(2)*x+(1/2)")), TypeError);
  EXPECT_THROW(infer_ring(parse_expr("M[{};(-inf,inf)]*y+(1/2)")), TypeError);
  EXPECT_THROW(evaluate("xp+[1/2,3/2]*x-(1/2)", std::nullopt, 3), TypeError);
}

TEST(Evaluate, LineExamples) {
  EXPECT_EQ(evaluate("x+(1/2)*x-(5/2)"), "1*M[{1/2:1,5/2:1};(1/2,5/2)]");
  EXPECT_EQ(evaluate("x-(1/2)*x+(3/2)"), "0");
  EXPECT_EQ(evaluate("2*x+(1/2) - x+(1/2)"), "1*M[{1/2:1};(1/2,inf)]");
  EXPECT_EQ(evaluate("(x+(1/2)+x-(1/2))^2"),
            evaluate("x+(1/2)^2 + x-(1/2)^2 + 2*x+(1/2)*x-(1/2)"));
  EXPECT_EQ(evaluate("x+(1/2)^0"), "1*M[{};(-inf,inf)]");
}

TEST(Evaluate, SplitExamples) {
  EXPECT_EQ(evaluate("y+(1/2)*y-(1/2)"),
            "1*S[{1/2:2};(-inf,1/2)] + 1*S[{1/2:2};(1/2,inf)]");
  // x-only text is read in the line ring; force the split ring to compare.
  EXPECT_EQ(eval_split(parse_expr("y+(1/2)*y-(1/2)")),
            eval_split(parse_expr("x+(1/2)^2 + x-(1/2)^2")));
  EXPECT_EQ(normalize("x-(3/2)*y+(1/2)"), "1*y+(1/2)*x-(3/2)");
}

TEST(Evaluate, CylinderExamples) {
  EXPECT_EQ(evaluate("g(2)*g(3)", 3, 2), evaluate("g(6)", 3, 2));
  EXPECT_EQ(evaluate("xp+[3/2,3/2,5/2]*xp-[3/2,3/2,5/2]", std::nullopt, 2), "0");
  auto lhs = evaluate("xp+[3/2,3/2,5/2]*xp-[1/2,5/2,5/2] + xp+[1/2,5/2,5/2]*xp-[3/2,3/2,5/2]",
                      std::nullopt, 2);
  EXPECT_EQ(lhs, evaluate("xp+[1/2,3/2,5/2]*xp-[3/2,5/2,5/2]", std::nullopt, 2));
  EXPECT_THROW(evaluate("xp+[1/2,3/2,5/2]"), std::invalid_argument);
  EXPECT_THROW(evaluate("xp+[1/2,3/2,5/2]*xp+[1/2,3/2]", std::nullopt, 2),
               std::invalid_argument);
}

TEST(Evaluate, AgreesWithDirectLibraryCalls) {
  auto via_text = eval_line(parse_expr("x+(1/2)*x-(5/2)"));
  auto direct = line::class_from_word({{line::LineGenerator{line::Sign::Plus, HalfInt::from_twice(1)}, 1},
                                       {line::LineGenerator{line::Sign::Minus, HalfInt::from_twice(5)}, 1}});
  EXPECT_EQ(via_text, direct);
  auto g = cyl::CylGeometry::make(3, 2);
  EXPECT_EQ(eval_cylinder(parse_expr("1"), g), cyl::cyl_unit(g));
}
