#pragma once

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "klb/klb.hpp"

namespace klb::cli {

namespace detail {

namespace fs = std::filesystem;

enum Exit : int { Yes = 0, No = 1, Usage = 2 };

class UsageError : public Error {
public:
  using Error::Error;
};

struct Options {
  std::string what;
  std::vector<std::string> files;
  std::string method;
  std::string kind;
  std::uint64_t seed = 0;
  long long cap = 0;
  std::string out;
  int count = 1;
  int vars = 0;
  int size = 0;
  int width = 1;     // gen csp
  int td_width = -1; // verify td; negative means no bound
  int k = 2;
};

inline std::string extension(const std::string &path) { return fs::path(path).extension().string(); }

inline void need_files(const Options &o, std::size_t lo, std::size_t hi, const std::string &usage) {
  if (o.files.size() < lo || o.files.size() > hi)
    throw UsageError("usage: " + usage);
}

inline std::string default_prefix(const Options &o, const std::string &input, const std::string &tag) {
  if (!o.out.empty())
    return o.out;
  fs::path p(input);
  p.replace_extension();
  return p.string() + "." + tag;
}

inline void write(std::ostream &out, const std::string &path, const std::string &content) {
  io::write_file(path, content);
  out << "wrote " << path << '\n';
}

inline CnfFormula read_cnf(const std::string &path) { return io::parse_dimacs(io::read_file(path)); }

inline std::vector<int> names_to_ids(const std::vector<std::string> &names,
                                     const std::function<int(const std::string &)> &find) {
  std::vector<int> ids;
  for (const auto &n : names)
    ids.push_back(find(n));
  return ids;
}

inline std::vector<std::string> ids_to_names(const std::vector<int> &ids,
                                             const std::function<std::string(int)> &name) {
  std::vector<std::string> out;
  for (int v : ids)
    out.push_back(name(v));
  return out;
}

inline SubSolverKind sub_kind(const Options &o) {
  if (o.kind.empty())
    throw UsageError("--kind horn|2cnf is required");
  try {
    return subsolver_kind_from_string(o.kind);
  } catch (const InvalidInput &e) {
    throw UsageError(e.what());
  }
}

inline Exit decision(std::ostream &out, bool yes) {
  out << (yes ? "yes" : "no") << '\n';
  return yes ? Yes : No;
}

inline Exit report(std::ostream &out, const verify::VerificationReport &r) {
  out << r;
  return r.passed() ? Yes : No;
}

// ---------------------------------------------------------------- solve

inline Exit solve(const Options &o, OracleCaps caps, std::ostream &out) {
  const std::string method = o.method;
  auto bad_method = [&](const std::string &allowed) {
    return UsageError("--method for '" + o.what + "' must be one of " + allowed);
  };
  if (o.what == "sat") {
    if (o.cap)
      caps.sat_vars = static_cast<int>(o.cap);
    SatResult r;
    if (method.empty() || method == "brute") {
      need_files(o, 1, 1, "solve sat [--method brute] F.cnf");
      r = brute_sat(read_cnf(o.files[0]), caps);
    } else if (method == "backdoor") {
      need_files(o, 2, 2, "solve sat --method backdoor --kind horn|2cnf F.cnf B.txt");
      const CnfFormula f = read_cnf(o.files[0]);
      const auto b = io::parse_variable_certificate(io::read_file(o.files[1]), f.num_vars());
      if (o.cap)
        caps.backdoor_size = static_cast<int>(o.cap);
      r = backdoor_solve(f, b, sub_kind(o), caps);
    } else {
      throw bad_method("brute, backdoor");
    }
    const Exit e = decision(out, r.satisfiable);
    if (r.witness) {
      out << 'v';
      for (std::size_t i = 0; i < r.witness->size(); ++i)
        out << ' ' << ((*r.witness)[i] ? "" : "-") << i + 1;
      out << " 0\n";
    }
    return e;
  }
  if (o.what == "csp") {
    if (o.cap)
      caps.csp_assignments = static_cast<std::uint64_t>(o.cap);
    CspResult r;
    if (method.empty() || method == "brute") {
      need_files(o, 1, 1, "solve csp [--method brute] N.csp");
      r = csp_brute(io::parse_csp(io::read_file(o.files[0])), caps);
    } else if (method == "dp") {
      need_files(o, 2, 2, "solve csp --method dp N.csp T.td");
      r = csp_treewidth_dp(io::parse_csp(io::read_file(o.files[0])),
                           io::parse_td(io::read_file(o.files[1])).decomposition);
    } else {
      throw bad_method("brute, dp");
    }
    const Exit e = decision(out, r.satisfiable);
    if (r.witness) {
      out << 'v';
      for (int x : *r.witness)
        out << ' ' << x;
      out << '\n';
    }
    return e;
  }
  if (o.what == "global") {
    need_files(o, 1, 1, "solve global [--method brute|dc] G.gc");
    if (o.cap)
      caps.global_instantiations = static_cast<std::uint64_t>(o.cap);
    const GlobalConstraint g = io::parse_global(io::read_file(o.files[0]));
    if (method.empty() || method == "brute") {
      const GlobalResult r = global_consistency(g, caps);
      const Exit e = decision(out, r.satisfiable);
      if (r.witness) {
        out << 'v';
        for (int v = 1; v <= g.num_vars(); ++v)
          out << ' ' << g.name(v) << '=' << (*r.witness)[static_cast<std::size_t>(v - 1)];
        out << '\n';
      }
      return e;
    }
    if (method == "dc") {
      const auto doms = global_domain_consistent(g, caps);
      bool nonempty = true;
      for (const auto &[v, d] : doms) {
        out << "dom " << g.name(v) << " :";
        for (int x : d)
          out << ' ' << x;
        out << '\n';
        nonempty = nonempty && !d.empty();
      }
      return nonempty ? Yes : No;
    }
    throw bad_method("brute, dc");
  }
  if (o.what == "bn") {
    if (o.cap)
      caps.bn_nodes = static_cast<int>(o.cap);
    const bool cutset = method == "cutset";
    if (!method.empty() && method != "brute" && !cutset)
      throw bad_method("brute, cutset");
    if (cutset)
      need_files(o, 2, 2, "solve bn --method cutset B.bn S.txt");
    else
      need_files(o, 1, 1, "solve bn [--method brute] B.bn");
    const BnQuery q = io::parse_bn(io::read_file(o.files[0]));
    if (!q.query)
      throw UsageError(o.files[0] + ": no 'query' line");
    if (!cutset)
      return decision(out, bn_positive_brute(q.net, q.query, caps));
    const auto s = names_to_ids(io::parse_certificate(io::read_file(o.files[1])),
                                [&](const std::string &n) { return q.net.find(n); });
    return decision(out, bn_positive_cutset(q.net, q.query, s));
  }
  if (o.what == "sme") {
    need_files(o, 1, 1, "solve sme P.lp");
    if (!method.empty() && method != "brute")
      throw bad_method("brute");
    if (o.cap)
      caps.atoms = static_cast<int>(o.cap);
    const LogicProgram p = io::parse_lp(io::read_file(o.files[0]));
    const StableResult r = stable_model_brute(p, caps);
    const Exit e = decision(out, r.satisfiable);
    if (r.witness) {
      out << "model";
      for (int a : *r.witness)
        out << ' ' << p.atom(a);
      out << '\n';
    }
    return e;
  }
  throw UsageError("solve: unknown problem '" + o.what + "' (sat, csp, global, bn, sme)");
}

// ---------------------------------------------------------------- compose

inline Exit compose(const Options &o, OracleCaps caps, std::ostream &out) {
  if (o.files.empty() || o.files.size() % 2)
    throw UsageError("usage: compose csp|3sat [--out PREFIX] I1 C1 I2 C2 ...");
  if (o.what == "csp") {
    std::vector<CspInstance> inputs;
    for (std::size_t i = 0; i < o.files.size(); i += 2)
      inputs.push_back({io::parse_csp(io::read_file(o.files[i])),
                        io::parse_td(io::read_file(o.files[i + 1])).decomposition});
    const CspCompositionOutput r = compose_csp(inputs);
    out << "inputs " << inputs.size() << '\n'
        << "input width " << r.input_width << '\n'
        << "output width " << r.width << '\n'
        << "variables " << r.network.num_vars() << '\n'
        << "constraints " << r.network.constraints().size() << '\n';
    if (!o.out.empty()) {
      write(out, o.out + ".csp", io::serialize_csp(r.network));
      write(out, o.out + ".td", io::serialize_td(r.decomposition, r.network.num_vars()));
    }
    return Yes;
  }
  if (o.what == "3sat") {
    if (o.cap)
      caps.backdoor_size = static_cast<int>(o.cap);
    const SubSolverKind kind = sub_kind(o);
    std::vector<BackdoorInstance> inputs;
    for (std::size_t i = 0; i < o.files.size(); i += 2) {
      CnfFormula f = read_cnf(o.files[i]);
      auto b = io::parse_variable_certificate(io::read_file(o.files[i + 1]), f.num_vars());
      inputs.push_back({std::move(f), std::move(b)});
    }
    const BackdoorCompositionOutput r = compose_3sat_backdoor(inputs, kind, caps);
    out << "inputs " << inputs.size() << '\n'
        << "case " << to_string(r.case_taken) << '\n'
        << "k " << r.k << '\n'
        << "backdoor size " << r.backdoor.size() << '\n'
        << "variables " << r.formula.num_vars() << '\n'
        << "clauses " << r.formula.num_clauses() << '\n';
    if (r.selected)
      out << "selected input " << r.selected << '\n';
    if (!o.out.empty()) {
      write(out, o.out + ".cnf", io::serialize_dimacs(r.formula));
      write(out, o.out + ".backdoor", io::serialize_certificate(r.backdoor));
    }
    return Yes;
  }
  throw UsageError("compose: unknown composition '" + o.what + "' (csp, 3sat)");
}

// ---------------------------------------------------------------- transform

inline Exit transform(const Options &o, std::ostream &out) {
  need_files(o, 1, 1, "transform backdoor|nvalue|disjoint|uses|bn|sme|kernel [--out PREFIX] F.cnf");
  const CnfFormula f = read_cnf(o.files[0]);
  const std::string prefix = default_prefix(o, o.files[0], o.what);
  out << "n " << f.num_vars() << '\n' << "m " << f.num_clauses() << '\n';
  if (o.what == "backdoor") {
    const auto r = trivial_backdoor(f);
    out << "k' " << r.param_value << '\n';
    write(out, prefix + ".cnf", io::serialize_dimacs(r.instance));
    write(out, prefix + ".backdoor", io::serialize_certificate(r.certificate));
    return Yes;
  }
  if (o.what == "nvalue" || o.what == "disjoint" || o.what == "uses") {
    const auto r = encode_global(f, global_kind_from_string(o.what));
    out << "dx " << r.certificate.dx << '\n'
        << "dxy " << r.certificate.dxy << '\n'
        << "dy " << r.certificate.dy << '\n'
        << "k' " << r.param_value << '\n';
    write(out, prefix + ".gc", io::serialize_global(r.instance));
    return Yes;
  }
  if (o.what == "bn") {
    const auto r = sat_to_bn(f);
    out << "nodes " << r.instance.net.num_nodes() << '\n' << "k' " << r.param_value << '\n';
    write(out, prefix + ".bn", io::serialize_bn(r.instance));
    write(out, prefix + ".cutset",
          io::serialize_certificate(ids_to_names(r.certificate, [&](int v) { return r.instance.net.name(v); })));
    return Yes;
  }
  if (o.what == "sme") {
    const auto r = sat_to_sme(f);
    out << "atoms " << r.instance.num_atoms() << '\n'
        << "rules " << r.instance.rules().size() << '\n'
        << "k' " << r.param_value << '\n';
    write(out, prefix + ".lp", io::serialize_lp(r.instance));
    write(out, prefix + ".feedback",
          io::serialize_certificate(ids_to_names(r.certificate, [&](int a) { return r.instance.atom(a); })));
    return Yes;
  }
  if (o.what == "kernel") {
    const CnfFormula g = kernel_3sat_vars(f);
    out << "kernel clauses " << g.num_clauses() << '\n'
        << "clause bound " << max_distinct_3clauses(f.num_vars()) << '\n';
    write(out, prefix + ".cnf", io::serialize_dimacs(g));
    return Yes;
  }
  throw UsageError("transform: unknown transformation '" + o.what + "'");
}

// ---------------------------------------------------------------- verify

inline Exit verify_cmd(const Options &o, OracleCaps caps, std::ostream &out) {
  if (o.what == "td") {
    need_files(o, 2, 2, "verify td [--width W] G.gr|N.csp T.td");
    const std::string ext = extension(o.files[0]);
    const Graph g = ext == ".csp" ? constraint_graph(io::parse_csp(io::read_file(o.files[0])))
                                  : io::parse_gr(io::read_file(o.files[0]));
    const io::PaceTd td = io::parse_td(io::read_file(o.files[1]));
    std::optional<int> bound;
    if (o.td_width >= 0)
      bound = o.td_width;
    return report(out, verify::check_tree_decomposition(g, td.decomposition, bound));
  }
  if (o.what == "backdoor") {
    need_files(o, 2, 2, "verify backdoor --kind horn|2cnf F.cnf B.txt");
    if (o.cap)
      caps.backdoor_size = static_cast<int>(o.cap);
    const CnfFormula f = read_cnf(o.files[0]);
    const auto b = io::parse_variable_certificate(io::read_file(o.files[1]), f.num_vars());
    return report(out, verify::check_backdoor(f, b, sub_kind(o), caps));
  }
  if (o.what == "cutset") {
    need_files(o, 2, 2, "verify cutset B.bn S.txt");
    const BnQuery q = io::parse_bn(io::read_file(o.files[0]));
    const auto s = names_to_ids(io::parse_certificate(io::read_file(o.files[1])),
                                [&](const std::string &n) { return q.net.find(n); });
    return report(out, verify::check_loop_cutset(q.net, s));
  }
  if (o.what == "feedback") {
    need_files(o, 2, 2, "verify feedback P.lp S.txt");
    const LogicProgram p = io::parse_lp(io::read_file(o.files[0]));
    const auto s = names_to_ids(io::parse_certificate(io::read_file(o.files[1])),
                                [&](const std::string &n) { return p.find(n); });
    return report(out, verify::check_feedback_set(p, s));
  }
  if (o.what == "ppt") {
    need_files(o, 1, 1, "verify ppt --kind backdoor|nvalue|disjoint|uses|bn|sme F.cnf");
    if (o.cap) {
      caps.sat_vars = caps.bn_nodes = caps.atoms = caps.backdoor_size = static_cast<int>(o.cap);
      caps.global_instantiations = std::uint64_t{1} << std::min<long long>(o.cap, 62);
    }
    const CnfFormula f = read_cnf(o.files[0]);
    const auto linear = [](long long n) { return n; };
    const auto twice = [](long long n) { return 2 * n; };
    if (o.kind == "backdoor")
      return report(out, verify::check_ppt(f, trivial_backdoor(f), oracles::Sat{caps}, linear, caps));
    if (o.kind == "nvalue" || o.kind == "disjoint" || o.kind == "uses")
      return report(out, verify::check_ppt(f, encode_global(f, global_kind_from_string(o.kind)),
                                           oracles::Global{caps}, twice, caps));
    if (o.kind == "bn")
      return report(out, verify::check_ppt(f, sat_to_bn(f), oracles::Bn{caps}, linear, caps));
    if (o.kind == "sme")
      return report(out, verify::check_ppt(f, sat_to_sme(f), oracles::Stable{caps}, twice, caps));
    throw UsageError("verify ppt: --kind must be backdoor, nvalue, disjoint, uses, bn or sme");
  }
  throw UsageError("verify: unknown check '" + o.what + "' (td, backdoor, cutset, feedback, ppt)");
}

// ---------------------------------------------------------------- gen

inline Exit gen_cmd(const Options &o, OracleCaps caps, std::ostream &out) {
  if (!o.files.empty())
    throw UsageError("gen takes no input files");
  if (o.count < 0)
    throw UsageError("--count must be nonnegative");
  const std::string dir = o.out.empty() ? "." : o.out;
  fs::create_directories(dir);
  gen::Rng rng(o.seed);
  auto name = [&](int i, const std::string &ext) {
    std::ostringstream os;
    os << dir << '/' << o.what << '-' << std::setw(4) << std::setfill('0') << i << ext;
    return os.str();
  };
  auto exceeds = [&](long long value, long long cap, const std::string &what) {
    if (value > cap)
      throw CapExceeded("gen: " + what + " " + std::to_string(value) + " exceeds cap " + std::to_string(cap));
  };
  const int vars = o.vars;
  const int size = o.size;
  for (int i = 1; i <= o.count; ++i) {
    if (o.what == "3cnf") {
      const int n = vars ? vars : 6, m = size ? size : 12;
      exceeds(n, o.cap ? o.cap : caps.sat_vars, "variables");
      write(out, name(i, ".cnf"), io::serialize_dimacs(gen::random_3cnf(rng, n, m)));
    } else if (o.what == "csp") {
      const int n = vars ? vars : 6, m = size ? size : 6;
      if (n >= 62)
        exceeds(n, 62, "variables");
      exceeds(1LL << n, o.cap ? o.cap : static_cast<long long>(caps.csp_assignments), "assignments");
      const CspInstance c = gen::random_width_network(rng, n, o.width, m);
      write(out, name(i, ".csp"), io::serialize_csp(c.network));
      write(out, name(i, ".td"), io::serialize_td(c.decomposition, n));
    } else if (o.what == "backdoor") {
      const int n = vars ? vars : 8, m = size ? size : 12;
      exceeds(o.k, o.cap ? o.cap : caps.backdoor_size, "backdoor size");
      const BackdoorInstance b = gen::random_backdoor_instance(rng, sub_kind(o), n, m, o.k, caps);
      write(out, name(i, ".cnf"), io::serialize_dimacs(b.formula));
      write(out, name(i, ".backdoor"), io::serialize_certificate(b.backdoor));
    } else if (o.what == "lp") {
      const int n = vars ? vars : 6, m = size ? size : 8;
      exceeds(n, o.cap ? o.cap : caps.atoms, "atoms");
      write(out, name(i, ".lp"), io::serialize_lp(gen::random_program(rng, n, m)));
    } else if (o.what == "bn") {
      const int n = vars ? vars : 8;
      exceeds(n, o.cap ? o.cap : caps.bn_nodes, "nodes");
      const BnQuery q = gen::random_bn(rng, n, o.k);
      const auto s = gen::greedy_loop_cutset(q.net);
      write(out, name(i, ".bn"), io::serialize_bn(q));
      write(out, name(i, ".cutset"),
            io::serialize_certificate(ids_to_names(s, [&](int v) { return q.net.name(v); })));
    } else {
      throw UsageError("gen: unknown kind '" + o.what + "' (3cnf, csp, backdoor, lp, bn)");
    }
  }
  return Yes;
}

} // namespace detail

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics to `err`. Returns 0 for yes/valid, 1 for no/invalid and 2 for
/// usage, parse or precondition errors.
inline int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  using detail::Options;
  CLI::App app{"Kernel lower bound constructions: solvers, compositions, transformations, verifiers"};
  app.name("klb");
  app.require_subcommand(1, 1);
  Options o;

  auto common = [&](CLI::App *sub, const std::string &what_help) {
    sub->add_option("what", o.what, what_help)->required();
    sub->add_option("files", o.files, "input files");
    sub->add_option("--cap", o.cap, "override the relevant oracle cap");
    return sub;
  };
  CLI::App *solve = common(app.add_subcommand("solve", "decide an instance"), "sat|csp|global|bn|sme");
  solve->add_option("--method", o.method, "solver to use");
  solve->add_option("--kind", o.kind, "sub-solver class for backdoor solving (horn|2cnf)");

  CLI::App *compose = common(app.add_subcommand("compose", "OR-compose instances"), "csp|3sat");
  compose->add_option("--kind", o.kind, "sub-solver class (3sat)");
  compose->add_option("--out", o.out, "output path prefix");

  CLI::App *transform = common(app.add_subcommand("transform", "apply a parameter transformation to a CNF"),
                               "backdoor|nvalue|disjoint|uses|bn|sme|kernel");
  transform->add_option("--out", o.out, "output path prefix");

  CLI::App *verify = common(app.add_subcommand("verify", "check a certificate or a transformation"),
                            "td|backdoor|cutset|feedback|ppt");
  verify->add_option("--kind", o.kind, "sub-solver class or transformation");
  verify->add_option("--width", o.td_width, "width bound for td");

  CLI::App *gen = common(app.add_subcommand("gen", "write a seeded random corpus"), "3cnf|csp|backdoor|lp|bn");
  gen->add_option("--seed", o.seed, "random seed");
  gen->add_option("--count", o.count, "number of instances");
  gen->add_option("--out", o.out, "output directory");
  gen->add_option("--kind", o.kind, "sub-solver class (backdoor)");
  gen->add_option("--vars", o.vars, "variables, atoms or nodes");
  gen->add_option("--size", o.size, "clauses, constraints or rules");
  gen->add_option("--width", o.width, "decomposition width (csp)");
  gen->add_option("--k", o.k, "backdoor size (backdoor) or maximum parents (bn)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError &e) {
    err << "klb: " << e.what() << '\n';
    return detail::Usage;
  }

  try {
    const OracleCaps caps{};
    if (solve->parsed())
      return detail::solve(o, caps, out);
    if (compose->parsed())
      return detail::compose(o, caps, out);
    if (transform->parsed())
      return detail::transform(o, out);
    if (verify->parsed())
      return detail::verify_cmd(o, caps, out);
    return detail::gen_cmd(o, caps, out);
  } catch (const std::exception &e) {
    err << "klb: " << e.what() << '\n';
    return detail::Usage;
  }
}

} // namespace klb::cli
