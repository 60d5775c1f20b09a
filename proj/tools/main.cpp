#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "ltlcore/report.hpp"
#include "ltlcore/rules_io.hpp"

using namespace ltlcore;

namespace {

void print_witness(const Lasso& w) {
  auto print_vals = [](const std::vector<Valuation>& vals) {
    std::cout << '[';
    for (std::size_t i = 0; i < vals.size(); ++i) {
      if (i) std::cout << ' ';
      std::cout << '{';
      for (std::size_t k = 0; k < vals[i].size(); ++k) {
        if (k) std::cout << ',';
        std::cout << vals[i][k];
      }
      std::cout << '}';
    }
    std::cout << ']';
  };
  std::cout << "witness: prefix=";
  print_vals(w.prefix);
  std::cout << " loop=";
  print_vals(w.loop);
  std::cout << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"LTL satisfiability solver with unsatisfiable-core extraction"};
  RunConfig cfg;
  app.add_option("input", cfg.input_path, "rules file (`name: formula` per line)")
      ->required();
  app.add_flag("--core,!--no-core", cfg.show_core, "print the unsatisfiable core (default on)");
  app.add_flag("--minimize", cfg.minimize, "deletion-minimize the core");
  app.add_flag("--fine-core", cfg.fine_core,
               "definitional translation first; map the coarse core back");
  app.add_flag("--oracle-check", cfg.oracle_check,
               "cross-check the verdict with the semantic oracle");
  app.add_flag("--stats", cfg.show_stats, "print search statistics");
  app.add_flag("--json", cfg.json, "emit the machine-readable record");
  app.add_option("--max-steps", cfg.max_steps, "search step limit (exceeding yields unknown)");
  app.add_option("--oracle-max-len", cfg.oracle_max_len,
                 "oracle lasso length bound (0 = complete bound)");
  app.add_option("--dump-graph", cfg.dump_graph_path,
                 "write the implication graph as graphviz to this path");
  app.add_flag("--check-invariants", cfg.check_invariants,
               "run structural invariant checks at every step");
  CLI11_PARSE(app, argc, argv);

  FormulaArena arena;
  RuleSet rules;
  try {
    rules = parse_rules_file(cfg.input_path, arena);
  } catch (const RulesFileError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }

  RunOutcome out;
  try {
    if (!cfg.dump_graph_path.empty()) {
      // Dump needs the solver context; run it directly here.
      SolverConfig scfg;
      scfg.max_steps = cfg.max_steps;
      scfg.check_invariants = cfg.check_invariants;
      Solver solver(arena, rules, scfg);
      Verdict v = solver.solve();
      std::ofstream dot(cfg.dump_graph_path);
      solver.graph().dump_dot(dot, solver.clause_store());
      (void)v;
    }
    out = run_pipeline(arena, rules, cfg);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }

  if (cfg.json) {
    std::cout << outcome_to_json(out) << '\n';
  } else {
    switch (out.verdict.kind) {
      case Verdict::Kind::Sat:
        std::cout << "sat\n";
        print_witness(out.verdict.witness);
        break;
      case Verdict::Kind::Unsat:
        std::cout << "unsat\n";
        if (cfg.show_core) {
          std::cout << "core:";
          for (const auto& n : out.core) std::cout << ' ' << n;
          std::cout << '\n';
          if (!out.fine_core.empty()) {
            std::cout << "fine core:";
            for (const auto& n : out.fine_core) std::cout << ' ' << n;
            std::cout << '\n';
          }
          std::cout << render_core_table(arena, rules, out.core);
          std::cout << (out.core_checked ? "core check: unsat confirmed\n"
                                         : "core check: FAILED\n");
        }
        break;
      case Verdict::Kind::Unknown:
        std::cout << "unknown: " << out.verdict.unknown_reason << '\n';
        break;
    }
    if (!out.oracle_summary.empty()) {
      std::cout << out.oracle_summary;
      if (out.oracle_agrees.has_value()) {
        std::cout << (*out.oracle_agrees ? " (agrees)" : " (DISAGREES)");
      }
      std::cout << '\n';
    }
    if (cfg.show_stats) {
      const SearchStats& s = out.verdict.stats;
      std::cout << "stats: decisions=" << s.decisions << " propagations=" << s.propagations
                << " boolean_conflicts=" << s.boolean_conflicts
                << " temporal_conflicts=" << s.temporal_conflicts
                << " learned_clauses=" << s.learned_clauses
                << " distinct_fpis=" << s.distinct_fpis
                << " max_stack_depth=" << s.max_stack_depth << '\n';
    }
  }
  return out.exit_code;
}
