#include <benchmark/benchmark.h>

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "netcalc/canonical.hpp"
#include "netcalc/compose.hpp"
#include "netcalc/run.hpp"
#include "netcalc/textio.hpp"
#include "netcalc/theorems.hpp"

namespace {

using namespace netcalc;

NetModule fixture(const std::string& name) {
  std::ifstream in(std::string(NETCALC_FIXTURE_DIR) + "/" + name,
                   std::ios::binary);
  if (!in) throw std::runtime_error("missing fixture " + name);
  std::ostringstream buf;
  buf << in.rdbuf();
  ParseOutcome out = parse_module(buf.str());
  if (!out) throw std::runtime_error("unparsable fixture " + name);
  return out.doc->body;
}

void BM_Compose(benchmark::State& state) {
  NetModule a = fixture("baker_two_cycle.netmod");
  NetModule b = fixture("vendor_two_cycle.netmod");
  for (auto _ : state) {
    Result<NetModule> r = try_compose(a, b);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_Compose);

void BM_CanonicalForm(benchmark::State& state) {
  NetModule r2 = fixture("r2.netmod");
  for (auto _ : state) {
    CanonicalForm c = canonical_form(r2);
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_CanonicalForm);

void BM_Isomorphism(benchmark::State& state) {
  NetModule r2 = fixture("r2.netmod");
  NetModule copy = r2;
  std::rotate(copy.elements.begin(), copy.elements.begin() + 3,
              copy.elements.end());
  // rebuild the rotated module's indices
  const std::size_t n = r2.size();
  std::vector<ElementId> perm(n);
  for (ElementId e = 0; e < n; ++e)
    perm[e] = static_cast<ElementId>((e + n - 3) % n);
  copy.arcs.clear();
  for (const Arc& a : r2.arcs) copy.arcs.push_back({perm[a.src], perm[a.dst]});
  normalize_arcs(copy);
  copy.left.clear();
  copy.right.clear();
  for (ElementId e : r2.left) copy.left.push_back(perm[e]);
  for (ElementId e : r2.right) copy.right.push_back(perm[e]);
  for (auto _ : state) {
    bool iso = is_isomorphic(r2, copy);
    benchmark::DoNotOptimize(iso);
  }
}
BENCHMARK(BM_Isomorphism);

void BM_RunsUpto(benchmark::State& state) {
  NetModule global = fixture("global.netmod");
  const std::size_t k = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    RunClassSet classes = runs_upto(global, k, StepUniverse::basic());
    benchmark::DoNotOptimize(classes);
  }
  state.counters["classes"] = static_cast<double>(
      runs_upto(global, k, StepUniverse::basic()).size());
}
BENCHMARK(BM_RunsUpto)->Arg(2)->Arg(3)->Arg(4);

void BM_Recognize(benchmark::State& state) {
  NetModule global = fixture("global.netmod");
  NetModule r1 = fixture("r1.netmod");
  for (auto _ : state) {
    auto steps = recognize_run(global, r1, StepUniverse::basic());
    benchmark::DoNotOptimize(steps);
  }
}
BENCHMARK(BM_Recognize);

void BM_WindowCheck(benchmark::State& state) {
  NetModule baker = fixture("baker.netmod");
  NetModule vendor = fixture("vendor.netmod");
  for (auto _ : state) {
    Verdict v = check_composition_theorem(baker, vendor, 3,
                                          StepUniverse::basic());
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_WindowCheck);

}  // namespace

BENCHMARK_MAIN();
