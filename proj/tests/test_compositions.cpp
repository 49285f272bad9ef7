#include <gtest/gtest.h>

#include "klb/compositions.hpp"
#include "klb/generate.hpp"
#include "klb/solvers.hpp"
#include "klb/verify.hpp"
#include "oracles.hpp"

using namespace klb;

namespace {

CnfFormula cnf(int n, std::initializer_list<std::initializer_list<int>> clauses) {
  std::vector<Clause> cs;
  for (auto c : clauses)
    cs.push_back(Clause::of(c));
  return CnfFormula(n, std::move(cs));
}

Constraint pin(int v, int value) { return Constraint({v}, {{value}}); }

// A width-1 Boolean network on x1 - x2 - x3 with the given binary relations.
CspInstance path3(std::vector<Tuple> r12, std::vector<Tuple> r23) {
  return {ConstraintNetwork(3, {0, 1}, {{{1, 2}, std::move(r12)}, {{2, 3}, std::move(r23)}}),
          TreeDecomposition({{1, 2}, {2, 3}}, {{1, 2}})};
}

} // namespace

// ---------------------------------------------------------------- CSP

TEST(ComposeCsp, SelectorRelation) {
  EXPECT_EQ(selector_relation(), (std::vector<Tuple>{{0, 0, 1}, {0, 1, 0}, {1, 1, 1}}));
}

TEST(ComposeCsp, UnsatisfiableAndSatisfiableInputs) {
  const std::vector<CspInstance> in{
      {ConstraintNetwork(1, {0, 1}, {pin(1, 0), pin(1, 1)}), TreeDecomposition({{1}}, {})},
      {ConstraintNetwork(1, {0, 1}, {pin(1, 0)}), TreeDecomposition({{1}}, {})}};
  const auto out = compose_csp(in);
  EXPECT_TRUE(csp_brute(out.network).satisfiable);
  EXPECT_EQ(out.network.num_vars(), 1 + 1 + 2 * 2 + 1);
}

TEST(ComposeCsp, BothInputsUnsatisfiable) {
  const std::vector<CspInstance> in{
      {ConstraintNetwork(1, {0, 1}, {pin(1, 0), pin(1, 1)}), TreeDecomposition({{1}}, {})},
      {ConstraintNetwork(2, {0, 1}, {pin(1, 1), Constraint({1, 2}, {{0, 0}})}), TreeDecomposition({{1, 2}}, {})}};
  // widths 0 and 1 differ
  EXPECT_THROW(compose_csp(in), InvalidInput);
  const std::vector<CspInstance> same{
      {ConstraintNetwork(2, {0, 1}, {pin(1, 0), Constraint({1, 2}, {{1, 1}})}), TreeDecomposition({{1, 2}}, {})},
      {ConstraintNetwork(2, {0, 1}, {pin(2, 1), Constraint({1, 2}, {{0, 0}})}), TreeDecomposition({{1, 2}}, {})}};
  const auto out = compose_csp(same);
  EXPECT_FALSE(csp_brute(out.network).satisfiable);
}

TEST(ComposeCsp, SizesAndWidth) {
  const std::vector<CspInstance> in{path3({{0, 1}}, {{1, 0}}), path3({{1, 1}}, {{0, 0}}), path3({}, {{0, 1}})};
  const auto out = compose_csp(in);
  EXPECT_EQ(out.network.num_vars(), 9 + 2 * 3 + 1);
  EXPECT_EQ(out.input_width, 1);
  EXPECT_EQ(out.width, 2);
  EXPECT_EQ(out.switches.size(), 3u);
  EXPECT_EQ(out.chain.size(), 4u);
  const auto r = verify::check_tree_decomposition(constraint_graph(out.network), out.decomposition, 2);
  EXPECT_TRUE(r.passed()) << r;
  EXPECT_TRUE(ref::valid_decomposition(constraint_graph(out.network), out.decomposition, 2));
}

TEST(ComposeCsp, ExactlyOneSwitchOffAndMonotoneChain) {
  gen::Rng rng(41);
  for (int iter = 0; iter < 60; ++iter) {
    const int w = rng.between(1, 2);
    const int t = rng.between(1, 3);
    std::vector<CspInstance> in;
    for (int i = 0; i < t; ++i)
      in.push_back(gen::random_width_network(rng, rng.between(w + 1, 3), w, rng.between(0, 3)));
    const auto out = compose_csp(in);
    for (const auto &sol : ref::csp_solutions(out.network)) {
      int off = 0;
      for (int a : out.switches)
        off += sol[static_cast<std::size_t>(a - 1)] == 0;
      EXPECT_EQ(off, 1);
      for (std::size_t j = 1; j < out.chain.size(); ++j)
        EXPECT_LE(sol[static_cast<std::size_t>(out.chain[j - 1] - 1)], sol[static_cast<std::size_t>(out.chain[j] - 1)]);
    }
  }
}

TEST(ComposeCsp, OrEquivalenceOnRandomInputs) {
  gen::Rng rng(42);
  for (int iter = 0; iter < 150; ++iter) {
    const int w = rng.between(1, 2);
    const int t = rng.between(1, 4);
    std::vector<CspInstance> in;
    std::vector<ConstraintNetwork> nets;
    for (int i = 0; i < t; ++i) {
      in.push_back(gen::random_width_network(rng, rng.between(w + 1, 4), w, rng.between(1, 5)));
      nets.push_back(in.back().network);
    }
    const auto out = compose_csp(in);
    // enumeration on the inputs; the output by enumeration only while it is small
    const bool small = out.network.num_vars() <= 16;
    const auto r = verify::check_or_equivalence(
        out.network, std::span<const ConstraintNetwork>(nets),
        [&](const ConstraintNetwork &n) {
          return &n != &out.network || small ? ref::csp(n) : csp_treewidth_dp(n, out.decomposition).satisfiable;
        },
        w, out.width);
    ASSERT_TRUE(r.passed()) << r;
    EXPECT_EQ(out.width, w + 1);
    EXPECT_TRUE(verify::check_tree_decomposition(constraint_graph(out.network), out.decomposition, w + 1).passed());
    EXPECT_EQ(csp_treewidth_dp(out.network, out.decomposition).satisfiable, r.params.at("yes inputs") > 0);
  }
}

TEST(ComposeCsp, RejectsBadInputs) {
  const std::vector<CspInstance> ternary{
      {ConstraintNetwork(1, {0, 1, 2}, {}), TreeDecomposition({{1}}, {})}};
  EXPECT_THROW(compose_csp(ternary), InvalidInput);
  const std::vector<CspInstance> bad_td{
      {ConstraintNetwork(2, {0, 1}, {Constraint({1, 2}, {{0, 0}})}), TreeDecomposition({{1}, {2}}, {{1, 2}})}};
  EXPECT_THROW(compose_csp(bad_td), InvalidInput);
  EXPECT_THROW(compose_csp(std::span<const CspInstance>{}), InvalidInput);
}

// ---------------------------------------------------------------- 3SAT backdoor

TEST(SelectorClauses, EachAssignmentFalsifiesExactlyOne) {
  for (int s = 1; s <= 4; ++s)
    for (int code = 0; code < (1 << s); ++code) {
      int falsified = 0;
      for (int i = 1; i <= (1 << s); ++i) {
        bool sat = false;
        for (Lit l : selector_clause(i, s, 1))
          sat = sat || (((code >> (l.var() - 1)) & 1) == (l.positive() ? 1 : 0));
        falsified += !sat;
      }
      EXPECT_EQ(falsified, 1);
    }
  EXPECT_EQ(selector_clause(1, 2, 5), (std::vector<Lit>{Lit(5, true), Lit(6, true)}));
  EXPECT_EQ(selector_clause(2, 2, 5), (std::vector<Lit>{Lit(5, false), Lit(6, true)}));
  EXPECT_EQ(selector_clause(3, 2, 5), (std::vector<Lit>{Lit(5, true), Lit(6, false)}));
}

TEST(Compose3Sat, ManyInputsTakeCase1) {
  gen::Rng rng(43);
  std::vector<BackdoorInstance> in;
  for (int i = 0; i < 5; ++i)
    in.push_back(gen::random_backdoor_instance(rng, SubSolverKind::Horn, 4, 6, 2));
  const auto out = compose_3sat_backdoor(in, SubSolverKind::Horn);
  EXPECT_EQ(out.case_taken, CompositionCase::Case1);
  bool any = false;
  for (const auto &b : in)
    any = any || ref::sat(b.formula);
  EXPECT_EQ(ref::sat(out.formula), any);
  ASSERT_GE(out.selected, 1);
  EXPECT_EQ(out.formula, in[static_cast<std::size_t>(out.selected - 1)].formula);
}

TEST(Compose3Sat, TwoInputsWithUnitBackdoorsTakeCase2) {
  // F1 = (b v x)(b v -x) is satisfiable, F2 = (b)(-b) is not; both Horn-backdoored by {b}.
  const std::vector<BackdoorInstance> in{{cnf(2, {{1, 2}, {1, -2}}), {1}}, {cnf(1, {{1}, {-1}}), {1}}};
  const auto out = compose_3sat_backdoor(in, SubSolverKind::Horn);
  EXPECT_EQ(out.case_taken, CompositionCase::Case2);
  EXPECT_EQ(out.s, 1);
  EXPECT_EQ(out.backdoor.size(), 2u);
  EXPECT_TRUE(out.formula.is_3cnf());
  EXPECT_TRUE(brute_sat(out.formula).satisfiable);
  EXPECT_TRUE(verify::check_backdoor(out.formula, out.backdoor, SubSolverKind::Horn).passed());
}

TEST(Compose3Sat, SingleInputPassesThrough) {
  const std::vector<BackdoorInstance> in{{cnf(2, {{1, 2}}), {1}}};
  const auto out = compose_3sat_backdoor(in, SubSolverKind::Horn);
  EXPECT_EQ(out.case_taken, CompositionCase::PassThrough);
  EXPECT_EQ(out.formula, in[0].formula);
  EXPECT_EQ(out.backdoor, in[0].backdoor);
}

TEST(Compose3Sat, FillerChainForFiveSelectors) {
  gen::Rng rng(44);
  std::vector<BackdoorInstance> in;
  for (int i = 0; i < 17; ++i)
    in.push_back(gen::random_backdoor_instance(rng, SubSolverKind::TwoCnf, 5, 3, 5));
  const auto out = compose_3sat_backdoor(in, SubSolverKind::TwoCnf);
  ASSERT_EQ(out.case_taken, CompositionCase::Case2);
  ASSERT_EQ(out.s, 5);
  const int y1 = out.k + 1;
  // Filler for i = 18 .. 32, each with z_2, z_3.
  for (int i = 18; i <= 32; ++i) {
    const auto l = selector_clause(i, 5, y1);
    const auto z2 = std::find(out.names.begin(), out.names.end(), "z" + std::to_string(i) + ".2");
    const auto z3 = std::find(out.names.begin(), out.names.end(), "z" + std::to_string(i) + ".3");
    ASSERT_NE(z2, out.names.end());
    ASSERT_NE(z3, out.names.end());
    const int v2 = static_cast<int>(z2 - out.names.begin()) + 1;
    const int v3 = static_cast<int>(z3 - out.names.begin()) + 1;
    const std::vector<Clause> expected{Clause{l[0], l[1], Lit(v2, false)}, Clause{l[2], Lit(v2, true), Lit(v3, false)},
                                       Clause{l[3], l[4], Lit(v3, true)}};
    for (const Clause &c : expected)
      EXPECT_NE(std::find(out.formula.clauses().begin(), out.formula.clauses().end(), c), out.formula.clauses().end());
  }
  EXPECT_TRUE(out.formula.is_3cnf());
  EXPECT_EQ(out.backdoor.size(), static_cast<std::size_t>(out.k + 5));
}

TEST(Compose3Sat, FillerChainIsEquisatisfiableWithItsClause) {
  // Split a width-s selector clause into the z-chain and compare against the
  // clause itself under every assignment of Y.
  for (int s = 4; s <= 7; ++s) {
    const int t = (1 << (s - 1)) + 1;
    std::vector<BackdoorInstance> in;
    for (int i = 0; i < t; ++i)
      in.push_back({cnf(s, {}), {1, 2, 3, 4, 5, 6, 7}});
    for (auto &b : in)
      b.backdoor.resize(static_cast<std::size_t>(s));
    const auto out = compose_3sat_backdoor(in, SubSolverKind::Horn);
    ASSERT_EQ(out.s, s);
    const int y1 = out.k + 1;
    for (int code = 0; code < (1 << s); ++code) {
      PartialAssignment tau;
      for (int j = 1; j <= s; ++j)
        tau[y1 + j - 1] = (code >> (j - 1)) & 1;
      bool excluded = false;
      for (int i = t + 1; i <= (1 << s); ++i) {
        bool sat = false;
        for (Lit l : selector_clause(i, s, y1))
          sat = sat || l.satisfied_by(tau[l.var()]);
        excluded = excluded || !sat;
      }
      EXPECT_EQ(ref::dpll(apply_assignment(out.formula, tau)), !excluded) << "s=" << s << " code=" << code;
    }
  }
}

TEST(Compose3Sat, GuardKeepsBackdoorOnlyClausesPerInput) {
  // F1 = (b1)(-b1 v x) : sat; F2 = (-b1)(b1 v -y)(y) : unsat. Clauses (b1) and
  // (-b1) mention only the backdoor.
  const std::vector<BackdoorInstance> in{{cnf(2, {{1}, {-1, 2}}), {1}}, {cnf(2, {{-1}, {1, -2}, {2}}), {1}}};
  for (auto kind : {SubSolverKind::Horn, SubSolverKind::TwoCnf}) {
    const auto out = compose_3sat_backdoor(in, kind);
    EXPECT_TRUE(ref::sat(out.formula));
    EXPECT_TRUE(verify::check_backdoor(out.formula, out.backdoor, kind).passed());
    const std::vector<BackdoorInstance> unsat{in[1], in[1]};
    EXPECT_FALSE(ref::sat(compose_3sat_backdoor(unsat, kind).formula));
  }
}

TEST(Compose3Sat, EmptyClauseInputs) {
  const std::vector<BackdoorInstance> in{{CnfFormula(1, {Clause{}}), {1}}, {cnf(1, {{1}}), {1}}};
  const auto out = compose_3sat_backdoor(in, SubSolverKind::Horn);
  EXPECT_TRUE(ref::sat(out.formula));
  const std::vector<BackdoorInstance> both{in[0], in[0]};
  EXPECT_FALSE(ref::sat(compose_3sat_backdoor(both, SubSolverKind::Horn).formula));
}

TEST(Compose3Sat, OrEquivalenceAndBackdoorOnRandomInputs) {
  gen::Rng rng(45);
  for (int iter = 0; iter < 200; ++iter) {
    const auto kind = iter % 2 ? SubSolverKind::Horn : SubSolverKind::TwoCnf;
    const int k = rng.between(1, 3);
    const int t = rng.between(1, 4);
    std::vector<BackdoorInstance> in;
    std::vector<CnfFormula> fs;
    for (int i = 0; i < t; ++i) {
      in.push_back(gen::random_backdoor_instance(rng, kind, rng.between(k, 4), rng.between(1, 8), k));
      fs.push_back(in.back().formula);
    }
    const auto out = compose_3sat_backdoor(in, kind);
    const auto r = verify::check_or_equivalence(out.formula, std::span<const CnfFormula>(fs),
                                                [](const CnfFormula &f) { return ref::dpll(f); }, k,
                                                static_cast<long long>(out.backdoor.size()));
    ASSERT_TRUE(r.passed()) << r;
    EXPECT_TRUE(out.formula.is_3cnf());
    if (out.case_taken == CompositionCase::Case2) {
      EXPECT_EQ(static_cast<int>(out.backdoor.size()), k + ceil_log2(t));
      EXPECT_LE(static_cast<int>(out.backdoor.size()), 2 * k);
      EXPECT_TRUE(verify::check_backdoor(out.formula, out.backdoor, kind).passed());
    }
    EXPECT_EQ(out.case_taken, t == 1 ? CompositionCase::PassThrough
                                     : t > (1 << k) ? CompositionCase::Case1 : CompositionCase::Case2);
  }
}

TEST(Compose3Sat, RejectsBadInputs) {
  const std::vector<BackdoorInstance> unequal{{cnf(2, {{1, 2}}), {1}}, {cnf(2, {{1, 2}}), {1, 2}}};
  EXPECT_THROW(compose_3sat_backdoor(unequal, SubSolverKind::Horn), InvalidInput);
  const std::vector<BackdoorInstance> not_backdoor{{cnf(3, {{1, 2, 3}}), {1}}, {cnf(2, {{1, 2}}), {1}}};
  EXPECT_THROW(compose_3sat_backdoor(not_backdoor, SubSolverKind::Horn), BackdoorInvalid);
  const std::vector<BackdoorInstance> wide{{cnf(4, {{1, 2, 3, 4}}), {1, 2, 3, 4}}};
  EXPECT_THROW(compose_3sat_backdoor(wide, SubSolverKind::Horn), InvalidInput);
}
