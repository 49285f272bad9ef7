#pragma once

#include <algorithm>
#include <span>
#include <string>
#include <vector>

#include "klb/caps.hpp"
#include "klb/instances.hpp"
#include "klb/solvers.hpp"
#include "klb/transforms/ppt.hpp"
#include "klb/verify/report.hpp"

namespace klb::oracles {

// Exhaustive deciders, one per problem family, usable wherever the harness
// asks for an oracle.

struct Sat {
  OracleCaps caps{};
  bool operator()(const CnfFormula &f) const { return brute_sat(f, caps).satisfiable; }
};

struct Csp {
  OracleCaps caps{};
  bool operator()(const ConstraintNetwork &n) const { return csp_brute(n, caps).satisfiable; }
};

struct Global {
  OracleCaps caps{};
  bool operator()(const GlobalConstraint &g) const { return global_consistency(g, caps).satisfiable; }
};

struct Bn {
  OracleCaps caps{};
  bool operator()(const BnQuery &q) const { return bn_positive_brute(q.net, q.query, caps); }
};

struct Stable {
  OracleCaps caps{};
  bool operator()(const LogicProgram &p) const { return stable_model_brute(p, caps).satisfiable; }
};

} // namespace klb::oracles

namespace klb::verify {

/// Composition condition: the output is a yes-instance iff some input is.
/// `input_k` and `output_k` are recorded for the parameter-bound check.
template <class Instance, class Oracle>
VerificationReport check_or_equivalence(const Instance &output, std::span<const Instance> inputs,
                                        Oracle &&oracle, long long input_k, long long output_k) {
  VerificationReport rep;
  rep.subject = "OR-composition";
  long long yes = 0;
  for (const Instance &in : inputs)
    yes += oracle(in) ? 1 : 0;
  const bool out = oracle(output);
  const bool expected = yes > 0;
  rep.add("output decision = OR of inputs", out == expected,
          std::string("output ") + (out ? "yes" : "no") + ", " + std::to_string(yes) + " of " +
              std::to_string(inputs.size()) + " inputs yes");
  rep.params["t"] = static_cast<long long>(inputs.size());
  rep.params["yes inputs"] = yes;
  rep.params["k"] = input_k;
  rep.params["k'"] = output_k;
  return rep;
}

/// Polynomial parameter transformation conditions on one source formula:
/// the produced instance has the source's answer and k' <= p(n).
template <class Instance, class Certificate, class Oracle, class Bound>
VerificationReport check_ppt(const CnfFormula &source, const PptOutput<Instance, Certificate> &produced,
                             Oracle &&oracle, Bound &&bound, const OracleCaps &caps = {}) {
  VerificationReport rep;
  rep.subject = "parameter transformation";
  const bool src = brute_sat(source, caps).satisfiable;
  const bool dst = oracle(produced.instance);
  rep.add("decision preserved", src == dst,
          std::string("source ") + (src ? "yes" : "no") + ", produced " + (dst ? "yes" : "no"));
  const long long n = source.num_vars();
  const long long limit = bound(n);
  rep.add("k' <= p(k)", produced.param_value <= limit,
          std::to_string(produced.param_value) + " vs " + std::to_string(limit));
  rep.params["n"] = n;
  rep.params["k'"] = produced.param_value;
  rep.params["p(n)"] = limit;
  return rep;
}

} // namespace klb::verify
