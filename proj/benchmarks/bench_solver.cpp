#include <benchmark/benchmark.h>

#include "ltlcore/closure.hpp"
#include "ltlcore/oracle.hpp"
#include "ltlcore/parser.hpp"
#include "ltlcore/rules_io.hpp"
#include "ltlcore/search.hpp"

using namespace ltlcore;

namespace {

const char* kRunningExample =
    "r1.a: F(o)\nr1.b: G(!c)\nr2.a: G(o -> (F(p) & F(g)))\nr2.b: (!g) W p\n"
    "r3.a: F(i)\nr3.b: (!i) W p\nr3.c: G(p -> G(!i))\n";

// F(p0) & G(p0 -> F(p1)) & ... & G(p_{n-1} -> F(p0)): a satisfiable chain
// of chained obligations; depth grows with n.
std::string chain_rules(int n) {
  std::string out = "seed: F(p0)\n";
  for (int i = 0; i < n; ++i) {
    out += "c" + std::to_string(i) + ": G(p" + std::to_string(i) + " -> X(F(p" +
           std::to_string((i + 1) % n) + ")))\n";
  }
  return out;
}

void BM_SolveRunningExample(benchmark::State& state) {
  for (auto _ : state) {
    FormulaArena a;
    RuleSet rs = parse_rules_text(kRunningExample, a);
    Verdict v = solve(a, rs);
    benchmark::DoNotOptimize(v.kind);
  }
}
BENCHMARK(BM_SolveRunningExample);

void BM_SolveChain(benchmark::State& state) {
  std::string text = chain_rules(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    FormulaArena a;
    RuleSet rs = parse_rules_text(text, a);
    Verdict v = solve(a, rs);
    benchmark::DoNotOptimize(v.kind);
  }
}
BENCHMARK(BM_SolveChain)->Arg(2)->Arg(4)->Arg(6);

void BM_ClosureConstruction(benchmark::State& state) {
  FormulaArena a;
  RuleSet rs = parse_rules_text(kRunningExample, a);
  for (auto _ : state) {
    Closure cl(a, rs.root);
    benchmark::DoNotOptimize(cl.size());
  }
}
BENCHMARK(BM_ClosureConstruction);

void BM_OracleEval(benchmark::State& state) {
  FormulaArena a;
  FormulaId f = parse("F(i) & ((!i) W p) & G(!c) & G(p -> G(!i))", a);
  Lasso w;
  w.prefix = {{"p"}, {}};
  w.loop = {{"i"}, {}};
  for (auto _ : state) {
    benchmark::DoNotOptimize(eval_lasso(a, f, w, 0));
  }
}
BENCHMARK(BM_OracleEval);

}  // namespace

BENCHMARK_MAIN();
