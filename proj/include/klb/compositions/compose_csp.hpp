#pragma once

#include <span>
#include <string>
#include <vector>

#include "klb/csp.hpp"
#include "klb/error.hpp"
#include "klb/graph.hpp"
#include "klb/verify/structure.hpp"

namespace klb {

/// A Boolean constraint network with a tree decomposition of its constraint graph.
struct CspInstance {
  ConstraintNetwork network;
  TreeDecomposition decomposition;
};

struct CspCompositionOutput {
  ConstraintNetwork network;
  TreeDecomposition decomposition;
  int width = 0;       // width of `decomposition`
  int input_width = 0; // common width w of the inputs
  std::vector<int> offsets; // variable v of input i is offsets[i] + v
  std::vector<int> switches; // a_1..a_t
  std::vector<int> chain;    // b_0..b_t
};

/// The three-ternary-relation selector: (b_{i-1}, b_i, a_i).
inline const std::vector<Tuple> &selector_relation() {
  static const std::vector<Tuple> r{{0, 0, 1}, {0, 1, 0}, {1, 1, 1}};
  return r;
}

/// OR-composition of t Boolean networks of common width w into one network
/// of width w + 1 (at least 2, since the selector constraints form triangles).
///
/// Inputs are renamed apart and new variables a_1..a_t, b_0..b_t appended.
///   (1) each constraint (S, R) of input i becomes (S + a_i, R'), where
///       R' = {(u, 0) : u in R} + {(1, ..., 1)}: a_i = 0 enforces R, a_i = 1
///       is met by all ones;
///   (2) (b_{i-1}, b_i, a_i) in {(0,0,1), (0,1,0), (1,1,1)} for each i;
///   (3) b_0 = 0 and b_t = 1.
/// The b-chain switches from 0 to 1 exactly once, at some i, which forces a_i
/// = 0 and every other a_j = 1.
///
/// Decomposition: a_i is added to every bag of T_i, a path of nodes with bags
/// {b_{i-1}, b_i, a_i} covers the selector, and the first node of each
/// augmented T_i hangs off the i-th path node.
inline CspCompositionOutput compose_csp(std::span<const CspInstance> inputs) {
  const int t = static_cast<int>(inputs.size());
  if (t == 0)
    throw InvalidInput("compose_csp: no inputs");
  const int w = inputs[0].decomposition.width();
  for (int i = 0; i < t; ++i) {
    const CspInstance &in = inputs[static_cast<std::size_t>(i)];
    const std::string where = "compose_csp: input " + std::to_string(i + 1);
    if (!in.network.is_boolean())
      throw InvalidInput(where + ": universe is not {0,1}");
    if (in.decomposition.width() != w)
      throw InvalidInput(where + ": width " + std::to_string(in.decomposition.width()) +
                         " differs from " + std::to_string(w));
    if (!verify::check_tree_decomposition(constraint_graph(in.network), in.decomposition).passed())
      throw InvalidInput(where + ": invalid tree decomposition");
  }

  CspCompositionOutput out;
  out.input_width = w;
  int next = 0;
  for (const CspInstance &in : inputs) {
    out.offsets.push_back(next);
    next += in.network.num_vars();
  }
  for (int i = 1; i <= t; ++i)
    out.switches.push_back(++next);
  for (int i = 0; i <= t; ++i)
    out.chain.push_back(++next);

  std::vector<Constraint> cons;
  std::vector<std::vector<int>> bags;
  std::vector<Edge> edges;
  std::vector<int> attach_node(static_cast<std::size_t>(t), 0);

  for (int i = 0; i < t; ++i) {
    const CspInstance &in = inputs[static_cast<std::size_t>(i)];
    const int off = out.offsets[static_cast<std::size_t>(i)];
    const int a = out.switches[static_cast<std::size_t>(i)];
    for (const Constraint &c : in.network.constraints()) {
      std::vector<int> scope;
      for (int v : c.scope)
        scope.push_back(off + v);
      scope.push_back(a);
      std::vector<Tuple> rel;
      for (Tuple tup : c.relation) {
        tup.push_back(0);
        rel.push_back(std::move(tup));
      }
      rel.push_back(Tuple(scope.size(), 1));
      cons.emplace_back(std::move(scope), std::move(rel));
    }
    const int node_off = static_cast<int>(bags.size());
    for (const auto &bag : in.decomposition.bags()) {
      std::vector<int> b;
      for (int v : bag)
        b.push_back(off + v);
      b.push_back(a);
      bags.push_back(std::move(b));
    }
    for (auto [p, q] : in.decomposition.tree_edges())
      edges.emplace_back(node_off + p, node_off + q);
    attach_node[static_cast<std::size_t>(i)] = in.decomposition.num_nodes() ? node_off + 1 : 0;
  }

  for (int i = 1; i <= t; ++i) {
    const int prev_b = out.chain[static_cast<std::size_t>(i - 1)];
    const int b = out.chain[static_cast<std::size_t>(i)];
    const int a = out.switches[static_cast<std::size_t>(i - 1)];
    cons.emplace_back(std::vector<int>{prev_b, b, a}, selector_relation());
    bags.push_back({prev_b, b, a});
    const int path_node = static_cast<int>(bags.size());
    if (i > 1)
      edges.emplace_back(path_node - 1, path_node);
    if (int att = attach_node[static_cast<std::size_t>(i - 1)])
      edges.emplace_back(path_node, att);
  }
  cons.emplace_back(std::vector<int>{out.chain.front()}, std::vector<Tuple>{{0}});
  cons.emplace_back(std::vector<int>{out.chain.back()}, std::vector<Tuple>{{1}});

  out.network = ConstraintNetwork(next, {0, 1}, std::move(cons));
  out.decomposition = TreeDecomposition(std::move(bags), std::move(edges));
  out.width = out.decomposition.width();
  return out;
}

} // namespace klb
