// Copyright 2026 The symex Authors.
// SPDX-License-Identifier: Apache-2.0

// symex: solve, verify, measure and generate basis-pair reconfiguration
// instances. Exit codes: 0 ok, 1 verification failed, 2 incompatible or
// unreachable, 3 unsupported structure or search cap exceeded, 4 parse
// error or invalid instance.

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "symex/errors.hpp"
#include "symex/generate.hpp"
#include "symex/io.hpp"
#include "symex/tree_gen.hpp"
#include "symex/union_partition.hpp"

namespace symex {
namespace {

enum Exit {
  kOk = 0,
  kVerifyFailed = 1,
  kIncompatible = 2,
  kUnsupported = 3,
  kBadInput = 4
};

struct Common {
  std::string instance;
  std::string mode;
  std::vector<std::string> forbidden;
  std::string last;
  bool json = false;
  int bfs_cap = 16;
};

void add_common(CLI::App* app, Common& c) {
  app->add_option("instance", c.instance, "instance JSON file")->required();
  app->add_option("--mode", c.mode, "white or gabow (overrides the file)")
      ->check(CLI::IsMember({"white", "gabow"}));
  app->add_option("--forbidden", c.forbidden, "labels that must not move")
      ->delimiter(',');
  app->add_option("--last", c.last, "label used by the final exchange");
  app->add_flag("--json", c.json, "machine-readable output");
  app->add_option("--bfs-cap", c.bfs_cap,
                  "largest ground set for exhaustive search")
      ->check(CLI::Range(1, 64));
}

InstanceFile load(const Common& c) {
  InstanceFile f = load_instance(c.instance);
  const Matroid& m = *f.inst.m;
  auto elem = [&](const std::string& l) {
    try {
      return m.find(l);
    } catch (const std::exception&) {
      throw ParseError("unknown element '" + l + "'");
    }
  };
  if (!c.mode.empty()) f.mode = parse_mode(c.mode);
  if (!c.forbidden.empty()) {
    f.inst.forbidden.clear();
    for (const auto& l : c.forbidden) f.inst.forbidden.push_back(elem(l));
    f.inst.forbidden = normalized(f.inst.forbidden);
  }
  if (!c.last.empty()) f.inst.last = elem(c.last);
  if (f.mode == Mode::kGabow) f.inst.y = swapped(f.inst.x);
  return f;
}

int run_solve(const Common& c) {
  InstanceFile f = load(c);
  SolveOptions opts;
  opts.bfs_cap = c.bfs_cap;
  SolveReport r;
  if (f.mode == Mode::kGabow) {
    if (!f.inst.forbidden.empty()) {
      throw DomainError("gabow mode does not take forbidden elements");
    }
    r = solve_gabow(f.inst.m, f.inst.x, f.inst.last, opts);
  } else {
    r = solve_white(f.inst, opts);
  }
  const Matroid& m = *f.inst.m;
  std::cout << (c.json ? format_report_json(m, r) : format_report_text(m, r));
  if (!r.within_bounds()) {
    std::cerr << "warning: sequence exceeds the guaranteed bounds\n";
  }
  return kOk;
}

int run_verify(const Common& c, const std::string& seq_path) {
  InstanceFile f = load(c);
  const Matroid& m = *f.inst.m;
  ExchangeSequence seq = parse_sequence(m, read_file(seq_path));
  std::string verdict = "ok";
  int step = -1;
  try {
    BasisPair end = apply_and_validate(m, f.inst.x, seq, f.inst.forbidden);
    if (end != f.inst.y) {
      verdict = "final pair differs from the target";
      step = static_cast<int>(seq.size());
    } else if (f.inst.last && !seq.empty() && seq.back().e != *f.inst.last &&
               seq.back().f != *f.inst.last) {
      verdict = "last step does not use " + m.label(*f.inst.last);
      step = static_cast<int>(seq.size()) - 1;
    }
  } catch (const ValidationError& e) {
    verdict = e.what();
    step = e.step();
  }
  const bool ok = step < 0;
  if (c.json) {
    std::cout << "{\"ok\": " << (ok ? "true" : "false")
              << ", \"length\": " << seq.size()
              << ", \"width\": " << sequence_width(seq);
    if (!ok) std::cout << ", \"step\": " << step;
    std::cout << "}\n";
  } else if (ok) {
    std::cout << "ok length " << seq.size() << " width " << sequence_width(seq)
              << "\n";
  } else {
    std::cout << "fail at step " << step << ": " << verdict << "\n";
  }
  return ok ? kOk : kVerifyFailed;
}

int run_distance(const Common& c) {
  InstanceFile f = load(c);
  const Matroid& m = *f.inst.m;
  BfsOptions opts;
  opts.forbidden = f.inst.forbidden;
  opts.monotone = f.mode == Mode::kGabow;
  opts.cap = c.bfs_cap;
  opts.last = f.inst.last;
  BfsResult r = bfs_oracle(m, f.inst.x, f.inst.y, opts);
  if (c.json) {
    std::cout << "{\"reachable\": " << (r.reachable ? "true" : "false")
              << ", \"distance\": " << r.distance
              << ", \"states\": " << r.states
              << ", \"sequence\": " << format_sequence_json(m, r.sequence)
              << "}\n";
  } else if (r.reachable) {
    std::cout << "distance " << r.distance << "\n"
              << format_sequence(m, r.sequence);
  } else {
    std::cout << "unreachable\n";
  }
  return kOk;
}

struct GenArgs {
  std::string kind;
  int n = 0;
  int arity = 3;
  std::uint64_t seed = 1;
  std::string mode = "white";
  std::string out;
};

InstanceFile generate(const GenArgs& g) {
  Rng rng(g.seed);
  InstanceFile f;
  f.mode = parse_mode(g.mode);
  if (g.kind == "bispanning") {
    const int n = g.n ? g.n : 10;
    f.inst.m = make_graphic(random_bispanning(n, rng));
    UnionPartition u = two_basis_partition(*f.inst.m);
    f.inst.x = {u.first, u.second};
  } else if (g.kind == "r10") {
    if (g.n && g.n != 10) throw DomainError("r10 has exactly 10 elements");
    Fixture fx = fixture("r10");
    f.inst.m = fx.m;
    f.inst.x = random_walk(*fx.m, fx.x, 10, {}, rng);
  } else if (g.kind == "tree-composed") {
    const int leaves = g.n ? g.n : 1;
    if (leaves < 1 || leaves > 8)
      throw DomainError("tree-composed takes 1 to 8 leaves");
    if (g.arity != 2 && g.arity != 3) throw DomainError("arity must be 2 or 3");
    for (int attempt = 0;; ++attempt) {
      if (attempt == 200) throw DomainError("no composed instance found");
      DecompositionTree t = g.arity == 2 ? random_two_sum_star(leaves, rng)
                                         : random_three_sum_star(leaves, rng);
      if (auto ci = make_composed_instance(g.kind, t)) {
        f.tree = ci->tree;
        f.inst.m = ci->m;
        f.inst.x = ci->x;
        break;
      }
    }
  } else {
    throw DomainError("unknown kind '" + g.kind + "'");
  }
  const int r = f.inst.m->full_rank();
  f.inst.y = f.mode == Mode::kGabow
                 ? swapped(f.inst.x)
                 : random_walk(*f.inst.m, f.inst.x, 2 * r, {}, rng);
  return f;
}

int run_gen(const GenArgs& g) {
  InstanceFile f;
  try {
    f = generate(g);
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  }
  const std::string text = format_instance_json(f);
  if (g.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream os(g.out, std::ios::binary);
    if (!(os << text)) throw ParseError("cannot write " + g.out);
  }
  return kOk;
}

int guarded(const std::function<int()>& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kBadInput;
  } catch (const CompositionError& e) {
    std::cerr << "invalid tree: " << e.what() << "\n";
    return kBadInput;
  } catch (const IncompatibleError& e) {
    std::cerr << "incompatible: " << e.what() << "\n";
    return kIncompatible;
  } catch (const DomainError& e) {
    std::cerr << "no solution: " << e.what() << "\n";
    return kIncompatible;
  } catch (const UnsupportedError& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return kUnsupported;
  } catch (const CapacityError& e) {
    std::cerr << "capacity: " << e.what() << "\n";
    return kUnsupported;
  } catch (const ValidationError& e) {
    std::cerr << "validation failed at step " << e.step() << ": " << e.what()
              << "\n";
    return kVerifyFailed;
  }
}

}  // namespace
}  // namespace symex

int main(int argc, char** argv) {
  using namespace symex;
  CLI::App app{"Symmetric exchange sequences for pairs of matroid bases"};
  app.require_subcommand(1);

  Common solve_args, verify_args, dist_args;
  std::string seq_path;
  GenArgs gen_args;

  CLI::App* solve = app.add_subcommand("solve", "compute an exchange sequence");
  add_common(solve, solve_args);
  CLI::App* verify = app.add_subcommand("verify", "check a sequence file");
  add_common(verify, verify_args);
  verify->add_option("sequence", seq_path, "sequence file (text or JSON)")
      ->required();
  CLI::App* dist = app.add_subcommand("distance", "exact distance by search");
  add_common(dist, dist_args);
  CLI::App* gen = app.add_subcommand("gen", "write a random instance");
  gen->add_option("kind", gen_args.kind, "bispanning, tree-composed or r10")
      ->required();
  gen->add_option("-n,--n", gen_args.n,
                  "vertices (bispanning) or leaves (tree-composed)");
  gen->add_option("--arity", gen_args.arity, "sum arity for tree-composed");
  gen->add_option("--seed", gen_args.seed, "mt19937_64 seed");
  gen->add_option("--mode", gen_args.mode, "white or gabow")
      ->check(CLI::IsMember({"white", "gabow"}));
  gen->add_option("-o,--output", gen_args.out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 4;
  }
  return guarded([&] {
    if (*solve) return run_solve(solve_args);
    if (*verify) return run_verify(verify_args, seq_path);
    if (*dist) return run_distance(dist_args);
    return run_gen(gen_args);
  });
}
