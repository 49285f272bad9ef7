#pragma once

#include <algorithm>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <vector>

#include "klb/bayes_net.hpp"
#include "klb/graph.hpp"
#include "klb/logic_program.hpp"
#include "klb/verify/report.hpp"

namespace klb::verify {

/// Checks a tree decomposition against a graph: T is a tree, bags mention
/// only vertices of G, (i) vertex cover, (ii) edge cover, (iii) connected
/// occurrence subtrees and, when `width_bound` is given, (iv) width bound.
inline VerificationReport check_tree_decomposition(const Graph &g, const TreeDecomposition &td,
                                                   std::optional<int> width_bound = std::nullopt) {
  VerificationReport rep;
  rep.subject = "tree decomposition";
  const int nodes = td.num_nodes();
  const Graph tree = td.tree();

  bool is_tree = nodes == 0 ? g.num_vertices() == 0
                            : is_forest(tree) && count_components(tree) == 1;
  rep.add("tree", is_tree,
          is_tree ? "" : std::to_string(nodes) + " nodes, " + std::to_string(tree.edges().size()) +
                             " edges, " + std::to_string(count_components(tree)) + " components");

  std::string stray;
  for (const auto &bag : td.bags())
    for (int v : bag)
      if (v > g.num_vertices() && stray.empty())
        stray = "vertex " + std::to_string(v) + " not in graph";
  rep.add("bag vertices", stray.empty(), stray);

  const auto n = static_cast<std::size_t>(g.num_vertices());
  std::vector<std::vector<int>> occurs(n + 1);
  for (int p = 1; p <= nodes; ++p)
    for (int v : td.bag(p))
      if (static_cast<std::size_t>(v) <= n)
        occurs[static_cast<std::size_t>(v)].push_back(p);

  std::string missing;
  for (std::size_t v = 1; v <= n && missing.empty(); ++v)
    if (occurs[v].empty())
      missing = "vertex " + g.label(static_cast<int>(v)) + " in no bag";
  rep.add("(i) vertices covered", missing.empty(), missing);

  std::string uncovered;
  for (auto [u, v] : g.edges()) {
    bool found = false;
    for (int p = 1; p <= nodes && !found; ++p) {
      const auto &b = td.bag(p);
      found = std::binary_search(b.begin(), b.end(), u) && std::binary_search(b.begin(), b.end(), v);
    }
    if (!found) {
      uncovered = "edge " + g.label(u) + "-" + g.label(v) + " in no bag";
      break;
    }
  }
  rep.add("(ii) edges covered", uncovered.empty(), uncovered);

  // For each vertex, the nodes whose bag holds it must induce a connected subtree.
  const auto adj = tree.adjacency();
  std::string broken;
  for (std::size_t v = 1; v <= n && broken.empty(); ++v) {
    const auto &holders = occurs[v];
    if (holders.size() < 2)
      continue;
    std::set<int> allowed(holders.begin(), holders.end());
    std::set<int> seen{holders.front()};
    std::queue<int> q;
    q.push(holders.front());
    while (!q.empty()) {
      int p = q.front();
      q.pop();
      for (int r : adj[static_cast<std::size_t>(p)])
        if (allowed.count(r) && seen.insert(r).second)
          q.push(r);
    }
    if (seen.size() != allowed.size())
      broken = "bags holding " + g.label(static_cast<int>(v)) + " are not connected";
  }
  rep.add("(iii) connected occurrences", broken.empty(), broken);

  if (width_bound) {
    bool ok = td.width() <= *width_bound;
    rep.add("(iv) width bound", ok,
            ok ? "" : "width " + std::to_string(td.width()) + " > " + std::to_string(*width_bound));
    rep.params["w"] = *width_bound;
  }
  rep.params["width"] = td.width();
  rep.params["nodes"] = nodes;
  return rep;
}

/// Passes iff deleting `cutset` leaves the skeleton of the network a forest,
/// i.e. at most one undirected path joins any two remaining nodes.
inline VerificationReport check_loop_cutset(const BayesNet &bn, const std::vector<int> &cutset) {
  VerificationReport rep;
  rep.subject = "loop cutset";
  std::set<int> s;
  std::string bad;
  for (int v : cutset) {
    if (v < 1 || v > bn.num_nodes())
      bad = "unknown node " + std::to_string(v);
    else
      s.insert(v);
  }
  rep.add("members are nodes", bad.empty(), bad);
  bool forest = is_forest(skeleton(bn).without(s));
  rep.add("singly connected after deletion", forest, forest ? "" : "an undirected cycle remains");
  rep.params["cutset size"] = static_cast<long long>(s.size());
  rep.params["nodes"] = bn.num_nodes();
  return rep;
}

/// Passes iff every cycle of U(P) runs through an atom of `atoms`.
inline VerificationReport check_feedback_set(const LogicProgram &p, const std::vector<int> &atoms) {
  VerificationReport rep;
  rep.subject = "feedback set";
  std::set<int> s;
  std::string bad;
  for (int a : atoms) {
    if (a < 1 || a > p.num_atoms())
      bad = "unknown atom " + std::to_string(a);
    else
      s.insert(a);
  }
  rep.add("members are atoms", bad.empty(), bad);
  bool acyclic = is_forest(undirected_dependency_graph(p).without(s));
  rep.add("U(P) acyclic after deletion", acyclic, acyclic ? "" : "a cycle avoids the set");
  rep.params["feedback size"] = static_cast<long long>(s.size());
  rep.params["atoms"] = p.num_atoms();
  return rep;
}

} // namespace klb::verify
