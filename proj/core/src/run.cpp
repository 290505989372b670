#include "netcalc/run.hpp"

#include <deque>
#include <map>

namespace netcalc {

std::vector<Step> step_universe_of(const NetModule& m, const StepUniverse& u,
                                   bool* truncated) {
  std::vector<Step> steps;
  std::set<CanonicalForm> seen;
  bool trunc = false;
  for (ElementId t = 0; t < m.size(); ++t) {
    if (!m.is_transition(t)) continue;
    if (u.kind == StepUniverse::Basic) {
      Step s = basic_step(m, t);
      if (seen.insert(canonical_form(s.net)).second) steps.push_back(std::move(s));
    } else {
      StepEnumeration e = enumerate_steps(m, t, u.step_budget);
      trunc = trunc || e.truncated;
      for (Step& s : e.steps)
        if (seen.insert(canonical_form(s.net)).second)
          steps.push_back(std::move(s));
    }
  }
  if (truncated) *truncated = trunc;
  return steps;
}

Run empty_run() { return Run{empty_module(), {}}; }

Result<Run> extend_run(const Run& r, const Step& s, RunDiscipline discipline) {
  Result<NetModule> composed = try_compose(r.net, s.net);
  if (!composed) return Result<Run>::fail(composed.reason());
  if (!is_acyclic(composed.value()))
    return Result<Run>::fail("cycle introduced");
  if (discipline == RunDiscipline::Strict &&
      !has_unbranched_places(composed.value()))
    return Result<Run>::fail("place branching introduced");
  Run out;
  out.net = std::move(composed).take();
  out.provenance = r.provenance;
  out.provenance.push_back(canonical_form(s.net));
  return Result<Run>::ok(std::move(out));
}

RunClassSet runs_upto(const NetModule& m, std::size_t bound,
                      const StepUniverse& universe, std::size_t work_budget,
                      std::vector<Run>* representatives,
                      RunDiscipline discipline) {
  RunClassSet out;
  out.bound = bound;

  bool step_trunc = false;
  const std::vector<Step> steps = step_universe_of(m, universe, &step_trunc);
  out.truncated = step_trunc;

  std::map<CanonicalForm, Run> reps;
  std::deque<const Run*> work;
  Run start = empty_run();
  CanonicalForm empty_class = canonical_form(start.net);
  reps.emplace(empty_class, std::move(start));
  work.push_back(&reps.at(empty_class));

  std::size_t spent = 0;
  while (!work.empty()) {
    const Run* r = work.front();
    work.pop_front();
    for (const Step& s : steps) {
      if (++spent > work_budget) {
        out.truncated = true;
        work.clear();
        break;
      }
      Result<Run> next = extend_run(*r, s, discipline);
      if (!next) continue;
      // a step fusing an interface transition keeps the count constant, so
      // the frontier is a worklist, not strict levels
      if (next.value().net.transition_count() > bound) continue;
      CanonicalForm c = canonical_form(next.value().net);
      if (reps.count(c)) continue;
      auto [it, fresh] = reps.emplace(std::move(c), std::move(next).take());
      if (fresh) work.push_back(&it->second);
    }
  }

  for (auto& [c, rep] : reps) {
    out.classes.insert(c);
    if (representatives) representatives->push_back(std::move(rep));
  }
  return out;
}

bool is_basic_run(const NetModule& net) {
  for (ElementId e : net.left)
    if (net.is_transition(e)) return false;
  for (ElementId e : net.right)
    if (net.is_transition(e)) return false;
  std::set<ElementId> left(net.left.begin(), net.left.end());
  std::set<ElementId> right(net.right.begin(), net.right.end());
  for (ElementId e = 0; e < net.size(); ++e) {
    if (!net.is_place(e)) continue;
    if ((net.in_degree(e) == 0) != (left.count(e) != 0)) return false;
    if ((net.out_degree(e) == 0) != (right.count(e) != 0)) return false;
  }
  return true;
}

RunClassSet compose_run_sets(const RunClassSet& a, const RunClassSet& b) {
  RunClassSet out;
  out.bound = a.bound + b.bound;
  out.truncated = a.truncated || b.truncated;
  std::vector<NetModule> as, bs;
  as.reserve(a.classes.size());
  bs.reserve(b.classes.size());
  for (const CanonicalForm& c : a.classes) as.push_back(decode_canonical(c));
  for (const CanonicalForm& c : b.classes) bs.push_back(decode_canonical(c));
  for (const NetModule& x : as) {
    for (const NetModule& y : bs) {
      Result<NetModule> r = try_compose(x, y);
      if (!r) continue;  // undefined pairs are filtered, not errors
      if (!is_acyclic(r.value()) || !has_unbranched_places(r.value())) continue;
      out.classes.insert(canonical_form(r.value()));
    }
  }
  return out;
}

namespace {

// Per-label element counts only ever grow along a fold.
std::map<Label, std::size_t> label_census(const NetModule& m) {
  std::map<Label, std::size_t> out;
  for (const Label& l : m.elements) ++out[l];
  return out;
}

bool census_within(const std::map<Label, std::size_t>& have,
                   const std::map<Label, std::size_t>& limit) {
  for (const auto& [l, cnt] : have) {
    auto it = limit.find(l);
    if (it == limit.end() || cnt > it->second) return false;
  }
  return true;
}

struct RecognizeSearch {
  const std::vector<Step>& steps;
  const CanonicalForm& target;
  const std::map<Label, std::size_t>& target_census;
  std::size_t target_transitions;
  std::size_t target_elements;
  std::set<CanonicalForm> visited;
  std::vector<Step> chosen;

  bool dfs(const Run& current) {
    for (const Step& s : steps) {
      Result<Run> next = extend_run(current, s);
      if (!next) continue;
      const NetModule& net = next.value().net;
      if (net.transition_count() > target_transitions) continue;
      if (net.size() > target_elements) continue;
      if (!census_within(label_census(net), target_census)) continue;
      CanonicalForm c = canonical_form(net);
      chosen.push_back(s);
      if (c == target) return true;
      if (visited.insert(c).second && dfs(next.value())) return true;
      chosen.pop_back();
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<Step>> recognize_run(const NetModule& m,
                                               const NetModule& r,
                                               const StepUniverse& universe) {
  const std::vector<Step> steps = step_universe_of(m, universe);
  const CanonicalForm target = canonical_form(r);
  const std::map<Label, std::size_t> census = label_census(r);

  Run start = empty_run();
  if (canonical_form(start.net) == target) return std::vector<Step>{};

  RecognizeSearch search{steps,          target,
                         census,         r.transition_count(),
                         r.size(),       {},
                         {}};
  if (search.dfs(start)) return search.chosen;
  return std::nullopt;
}

}  // namespace netcalc
