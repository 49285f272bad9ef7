#include <gtest/gtest.h>

#include "klb/generate.hpp"
#include "klb/io.hpp"
#include "klb/transforms.hpp"

using namespace klb;

namespace {

std::size_t error_line(const std::function<void()> &f) {
  try {
    f();
  } catch (const ParseError &e) {
    return e.line();
  }
  return 0;
}

} // namespace

TEST(Dimacs, ParsesHeaderAndClause) {
  const CnfFormula f = io::parse_dimacs("p cnf 2 1\n1 -2 0\n");
  EXPECT_EQ(f, CnfFormula(2, {Clause::of({1, -2})}));
}

TEST(Dimacs, CommentsAndClausesSpanningLines) {
  const CnfFormula f = io::parse_dimacs("c a comment\np cnf 3 2\n1 2\n3 0 -1\nc mid\n0\n");
  EXPECT_EQ(f, CnfFormula(3, {Clause::of({1, 2, 3}), Clause::of({-1})}));
}

TEST(Dimacs, UnterminatedClauseReportsItsLine) {
  EXPECT_EQ(error_line([] { io::parse_dimacs("p cnf 2 2\n1 0\n-1 2\n"); }), 3u);
}

TEST(Dimacs, SemanticErrorsCarryLineNumbers) {
  EXPECT_EQ(error_line([] { io::parse_dimacs("p cnf 2 1\n1 3 0\n"); }), 2u);
  EXPECT_EQ(error_line([] { io::parse_dimacs("p cnf 2 1\n1 -1 0\n"); }), 2u);
  EXPECT_EQ(error_line([] { io::parse_dimacs("p cnf 2 1\n1 x 0\n"); }), 2u);
  EXPECT_EQ(error_line([] { io::parse_dimacs("c\np cnf 2 2\n1 0\n"); }), 2u);
  EXPECT_EQ(error_line([] { io::parse_dimacs("p dnf 2 2\n"); }), 1u);
}

TEST(Dimacs, RoundTripIsBitExact) {
  gen::Rng rng(1);
  for (int i = 0; i < 100; ++i) {
    const CnfFormula f = gen::random_cnf(rng, 1 + static_cast<int>(rng.below(8)), static_cast<int>(rng.below(10)), 0, 4);
    const std::string text = io::serialize_dimacs(f);
    EXPECT_EQ(io::parse_dimacs(text), f);
    EXPECT_EQ(io::serialize_dimacs(io::parse_dimacs(text)), text);
  }
}

TEST(Dimacs, WhitespaceNormalizes) {
  EXPECT_EQ(io::serialize_dimacs(io::parse_dimacs("p  cnf 2   1\n  1    -2 0   \n")), "p cnf 2 1\n1 -2 0\n");
}

TEST(Pace, TdBagLine) {
  const io::PaceTd td = io::parse_td("s td 1 2 2\nb 1 1 2\n");
  ASSERT_EQ(td.decomposition.num_nodes(), 1);
  EXPECT_EQ(td.decomposition.bag(1), (std::vector<int>{1, 2}));
  EXPECT_EQ(td.num_vertices, 2);
}

TEST(Pace, TdErrors) {
  EXPECT_EQ(error_line([] { io::parse_td("s td 2 2 3\nb 1 1 2\n1 2\n"); }), 1u);          // bag 2 missing
  EXPECT_EQ(error_line([] { io::parse_td("s td 1 3 3\nb 1 1 2\n"); }), 1u);               // width mismatch
  EXPECT_EQ(error_line([] { io::parse_td("s td 1 2 3\nb 1 1 4\n"); }), 2u);               // vertex range
  EXPECT_EQ(error_line([] { io::parse_td("s td 2 1 2\nb 1 1\nb 2 2\n1 3\n"); }), 4u);     // edge range
}

TEST(Pace, GrRoundTrip) {
  const std::string text = "p tw 4 3\n1 2\n1 3\n3 4\n";
  EXPECT_EQ(io::serialize_gr(io::parse_gr(text)), text);
  EXPECT_EQ(error_line([] { io::parse_gr("p tw 2 1\n1 1\n"); }), 2u);
  EXPECT_EQ(error_line([] { io::parse_gr("p tw 2 2\n1 2\n"); }), 1u);
}

TEST(Pace, TdRoundTrip) {
  gen::Rng rng(2);
  for (int i = 0; i < 50; ++i) {
    const CspInstance c = gen::random_width_network(rng, 8, 2, 5);
    const std::string text = io::serialize_td(c.decomposition, 8);
    const io::PaceTd td = io::parse_td(text);
    EXPECT_EQ(td.decomposition, c.decomposition);
    EXPECT_EQ(io::serialize_td(td), text);
  }
}

TEST(CspFormat, ParsesAndRoundTrips) {
  const std::string text = "# ne\nvar 3\nuniverse 0 1 2\ncon 1 2 : 0 1, 1 0 # comment\ncon 3 :\ncon : ()\n";
  const ConstraintNetwork net = io::parse_csp(text);
  EXPECT_EQ(net.num_vars(), 3);
  ASSERT_EQ(net.constraints().size(), 3u);
  EXPECT_EQ(net.constraints()[0].relation, (std::vector<Tuple>{{0, 1}, {1, 0}}));
  EXPECT_TRUE(net.constraints()[1].relation.empty());
  EXPECT_EQ(net.constraints()[2].relation, (std::vector<Tuple>{{}}));
  EXPECT_EQ(io::parse_csp(io::serialize_csp(net)), net);
}

TEST(CspFormat, Errors) {
  EXPECT_EQ(error_line([] { io::parse_csp("var 2\nuniverse 0 1\ncon 1 3 : 0 1\n"); }), 3u); // undeclared
  EXPECT_EQ(error_line([] { io::parse_csp("var 2\nuniverse 0 1\ncon 1 2 : 0\n"); }), 3u);   // arity
  EXPECT_EQ(error_line([] { io::parse_csp("var 2\nuniverse 0 1\ncon 1 2 : 0 5\n"); }), 3u); // value
  EXPECT_EQ(error_line([] { io::parse_csp("var 2\nuniverse 0 1\ncon 1 1 : 0 0\n"); }), 3u); // repeated
  EXPECT_EQ(error_line([] { io::parse_csp("con 1 : 0\n"); }), 1u);
  EXPECT_EQ(error_line([] { io::parse_csp("var 1\nuniverse 0\nfoo\n"); }), 3u);
}

TEST(CspFormat, GeneratedRoundTrip) {
  gen::Rng rng(4);
  for (int i = 0; i < 50; ++i) {
    const ConstraintNetwork net = gen::random_width_network(rng, 6, 1, 6).network;
    const std::string text = io::serialize_csp(net);
    EXPECT_EQ(io::parse_csp(text), net);
    EXPECT_EQ(io::serialize_csp(io::parse_csp(text)), text);
  }
}

TEST(GlobalFormat, RoundTripsAllEncodings) {
  gen::Rng rng(5);
  for (int i = 0; i < 30; ++i) {
    const CnfFormula f = gen::random_cnf(rng, 4, 5, 1, 3);
    for (GlobalKind k : {GlobalKind::NValue, GlobalKind::Disjoint, GlobalKind::Uses}) {
      const GlobalConstraint g = encode_global(f, k).instance;
      const std::string text = io::serialize_global(g);
      EXPECT_EQ(io::parse_global(text), g);
      EXPECT_EQ(io::serialize_global(io::parse_global(text)), text);
    }
  }
}

TEST(GlobalFormat, Errors) {
  EXPECT_EQ(error_line([] { io::parse_global("kind nvalue\nN 1\ndom a : 1\nX b\n"); }), 4u);
  EXPECT_EQ(error_line([] { io::parse_global("kind other\n"); }), 1u);
  EXPECT_EQ(error_line([] { io::parse_global("kind uses\ndom a : 1\ndom a : 2\n"); }), 3u);
  EXPECT_EQ(error_line([] { io::parse_global("kind disjoint\ndom a : 1\nX a\nY a\n"); }), 4u);
}

TEST(BnFormat, RowsAndQuery) {
  const BnQuery q = io::parse_bn("node b : a | 0 -> 1/3 1->1\nnode a : | -> 1/2 # prior\nquery b\n");
  EXPECT_EQ(q.net.num_nodes(), 2);
  EXPECT_EQ(q.net.parents(1), (std::vector<int>{2}));
  EXPECT_EQ(q.net.table(1), (std::vector<Rational>{Rational(1, 3), Rational(1)}));
  EXPECT_EQ(q.query, 1);
}

TEST(BnFormat, Errors) {
  EXPECT_EQ(error_line([] { io::parse_bn("node a : | -> 1/2\nnode b : a | 0 -> 1\n"); }), 2u); // missing row
  EXPECT_EQ(error_line([] { io::parse_bn("node a : c | 0 -> 1 1 -> 0\n"); }), 1u);             // undeclared
  EXPECT_EQ(error_line([] { io::parse_bn("node a : | -> 1/0\n"); }), 1u);
  EXPECT_EQ(error_line([] { io::parse_bn("node a : | -> 1/2\nquery z\n"); }), 2u);
  EXPECT_EQ(error_line([] { io::parse_bn("node a : | -> 1/2 -> 1\n"); }), 1u);
}

TEST(BnFormat, RoundTrip) {
  gen::Rng rng(6);
  for (int i = 0; i < 50; ++i) {
    const BnQuery q = gen::random_bn(rng, 7, 3);
    const std::string text = io::serialize_bn(q);
    EXPECT_EQ(io::parse_bn(text), q);
    EXPECT_EQ(io::serialize_bn(io::parse_bn(text)), text);
  }
  const BnQuery t = sat_to_bn(CnfFormula(4, {Clause::of({1, -2, 3, 4})})).instance;
  EXPECT_EQ(io::parse_bn(io::serialize_bn(t)), t);
}

TEST(LpFormat, RulesFactsAndNegation) {
  const LogicProgram p = io::parse_lp("a :- b, not c.\nb.\n# comment\nc :- not a.\n");
  EXPECT_EQ(p.atoms(), (std::vector<std::string>{"a", "b", "c"}));
  EXPECT_EQ(p.rules(), (std::vector<Rule>{Rule(1, {2}, {3}), Rule(2, {}, {}), Rule(3, {}, {1})}));
}

TEST(LpFormat, Errors) {
  EXPECT_EQ(error_line([] { io::parse_lp("a :- b\n"); }), 1u);
  EXPECT_EQ(error_line([] { io::parse_lp("atoms a\na :- b.\n"); }), 2u);
  EXPECT_EQ(error_line([] { io::parse_lp("a :- nt b.\n"); }), 1u);
  EXPECT_EQ(error_line([] { io::parse_lp("a b :- c.\n"); }), 1u);
}

TEST(LpFormat, RoundTrip) {
  gen::Rng rng(7);
  for (int i = 0; i < 50; ++i) {
    const LogicProgram p = gen::random_program(rng, 6, 8);
    const std::string text = io::serialize_lp(p);
    EXPECT_EQ(io::parse_lp(text), p);
    EXPECT_EQ(io::serialize_lp(io::parse_lp(text)), text);
  }
}

TEST(Certificate, OneIdentifierPerLine) {
  EXPECT_EQ(io::parse_certificate("u1\n# c\nx1_hat\n"), (std::vector<std::string>{"u1", "x1_hat"}));
  EXPECT_EQ(error_line([] { io::parse_certificate("a b\n"); }), 1u);
  EXPECT_EQ(io::parse_variable_certificate("3\n1\n", 3), (std::vector<int>{3, 1}));
  EXPECT_EQ(error_line([] { io::parse_variable_certificate("1\n4\n", 3); }), 2u);
  EXPECT_EQ(io::serialize_certificate(std::vector<int>{1, 2}), "1\n2\n");
}
