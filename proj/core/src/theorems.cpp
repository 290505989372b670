#include "netcalc/theorems.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "netcalc/textio.hpp"

namespace netcalc {

const char* to_string(Claim c) {
  switch (c) {
    case Claim::Theorem1: return "theorem1";
    case Claim::CompositionTheorem: return "composition";
    case Claim::Associativity: return "associativity";
    case Claim::Identity: return "identity";
  }
  return "?";
}

namespace {

// Deterministic across platforms; std::uniform_int_distribution is not.
class SplitMix {
 public:
  explicit SplitMix(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }
  std::size_t below(std::size_t n) {
    return n == 0 ? 0 : static_cast<std::size_t>(next() % n);
  }
  bool chance(std::size_t num, std::size_t den) { return below(den) < num; }

 private:
  std::uint64_t state_;
};

}  // namespace

NetModule random_module(const GenParams& p) {
  SplitMix rng(p.seed);
  NetModule m;

  const std::size_t places = rng.below(p.max_places + 1);
  const std::size_t transitions = rng.below(p.max_transitions + 1);
  const std::size_t alpha = std::max<std::size_t>(1, p.label_alphabet_size);
  for (std::size_t i = 0; i < places; ++i)
    m.elements.push_back(place_label("p" + std::to_string(rng.below(alpha))));
  for (std::size_t i = 0; i < transitions; ++i)
    m.elements.push_back(
        transition_label("t" + std::to_string(rng.below(alpha))));

  if (places > 0 && transitions > 0) {
    const std::size_t want = rng.below(p.max_arcs + 1);
    for (std::size_t i = 0; i < want; ++i) {
      ElementId pl = static_cast<ElementId>(rng.below(places));
      ElementId tr = static_cast<ElementId>(places + rng.below(transitions));
      if (rng.chance(1, 2))
        m.arcs.push_back({pl, tr});
      else
        m.arcs.push_back({tr, pl});
    }
    normalize_arcs(m);
  }

  auto fill_interface = [&](std::vector<ElementId>& iface) {
    if (m.elements.empty() || rng.chance(1, 4)) return;  // empty interfaces too
    std::size_t want = rng.below(std::min(p.max_interface, m.size()) + 1);
    std::vector<ElementId> pool(m.size());
    for (ElementId e = 0; e < m.size(); ++e) pool[e] = e;
    for (std::size_t i = 0; i + 1 < pool.size(); ++i) {
      std::size_t j = i + rng.below(pool.size() - i);
      std::swap(pool[i], pool[j]);
    }
    iface.assign(pool.begin(), pool.begin() + want);
  };
  fill_interface(m.left);
  fill_interface(m.right);
  return m;
}

Run random_basic_run(const NetModule& m, std::uint64_t seed,
                     std::size_t max_steps) {
  SplitMix rng(seed);
  std::vector<Step> steps = step_universe_of(m, StepUniverse::basic());
  Run r = empty_run();
  if (steps.empty()) return r;
  const std::size_t want = rng.below(max_steps + 1);
  for (std::size_t i = 0; i < want; ++i) {
    const Step& s = steps[rng.below(steps.size())];
    Result<Run> next = extend_run(r, s);
    if (next) r = std::move(next).take();
  }
  return r;
}

namespace {

Witness make_witness(std::vector<NetModule> operands,
                     std::vector<std::string> notes, std::uint64_t seed) {
  Witness w;
  w.operands = std::move(operands);
  w.notes = std::move(notes);
  w.seed = seed;
  return w;
}

// Obligations of basic-run closure on one composition. Empty result: all
// hold. The trace tells which result elements belong to the first operand's
// part, the second's, or the fused boundary.
std::vector<std::string> theorem1_obligations(const NetModule& r,
                                              const NetModule& s) {
  std::vector<std::string> broken;
  ComposeTrace trace;
  Result<NetModule> composed = try_compose(r, s, &trace);
  if (!composed) {
    broken.push_back("composition undefined: " + composed.reason());
    return broken;
  }
  const NetModule& c = composed.value();
  if (!is_acyclic(c)) broken.push_back("composition contains a cycle");

  std::set<ElementId> left_set(c.left.begin(), c.left.end());
  std::set<ElementId> right_set(c.right.begin(), c.right.end());
  for (ElementId e = 0; e < c.size(); ++e) {
    if (!c.is_place(e)) continue;
    if ((c.in_degree(e) == 0) != (left_set.count(e) != 0)) {
      broken.push_back("left interface is not exactly the places without "
                       "ingoing arcs (place \"" + c.elements[e].name + "\")");
      break;
    }
  }
  for (ElementId e = 0; e < c.size(); ++e) {
    if (!c.is_place(e)) continue;
    if ((c.out_degree(e) == 0) != (right_set.count(e) != 0)) {
      broken.push_back("right interface is not exactly the places without "
                       "outgoing arcs (place \"" + c.elements[e].name + "\")");
      break;
    }
  }
  for (ElementId e : c.left)
    if (c.is_transition(e))
      broken.push_back("transition in left interface");
  for (ElementId e : c.right)
    if (c.is_transition(e))
      broken.push_back("transition in right interface");

  // no arc from the second operand's part back into the first's; fused
  // elements are the boundary
  auto side = [&](ElementId e) { return trace.entries[e].origin; };
  for (const Arc& a : c.arcs) {
    bool backward = (side(a.src) == ElementOrigin::FromRightOperand &&
                     side(a.dst) != ElementOrigin::FromRightOperand) ||
                    (side(a.src) == ElementOrigin::Fused &&
                     side(a.dst) == ElementOrigin::FromLeftOperand);
    if (backward) {
      broken.push_back("backward arc from the second operand into the first");
      break;
    }
  }
  return broken;
}

}  // namespace

Verdict check_theorem1(const Run& r, const Run& s) {
  if (!is_basic_run(r) || !is_basic_run(s))
    throw std::invalid_argument("check_theorem1: operands not basic runs");

  Verdict v;
  v.claim = Claim::Theorem1;
  Result<NetModule> composed = try_compose(r.net, s.net);
  if (!composed) {
    v.applicable = false;
    v.holds = false;
    v.detail = "composition undefined: " + composed.reason();
    return v;
  }
  std::vector<std::string> broken = theorem1_obligations(r.net, s.net);
  v.holds = broken.empty();
  if (!v.holds)
    v.witness = make_witness({r.net, s.net}, std::move(broken), 0);
  else
    v.detail = "composition is a basic run";
  return v;
}

Verdict check_composition_theorem(const NetModule& m, const NetModule& n,
                                  std::size_t k, const StepUniverse& universe,
                                  std::size_t work_budget) {
  Verdict v;
  v.claim = Claim::CompositionTheorem;
  v.bounds = {k};

  Result<NetModule> composed = try_compose(m, n);
  if (!composed) {
    v.applicable = false;
    v.detail = "composition undefined: " + composed.reason();
    return v;
  }

  RunClassSet lhs = runs_upto(composed.value(), k, universe, work_budget);
  RunClassSet rm = runs_upto(m, k, universe, work_budget);
  RunClassSet rn = runs_upto(n, k, universe, work_budget);

  if (lhs.truncated || rm.truncated || rn.truncated) {
    v.inconclusive = true;
    v.holds = false;
    v.witness = make_witness({m, n},
                             {"enumeration truncated; verdict inconclusive, "
                              "rerun with a larger work budget"},
                             0);
    v.detail = "inconclusive (budget exhausted)";
    return v;
  }

  // Pairwise compositions that are runs, windowed to k transitions. By the
  // decomposition of composed transitions into per-operand parts, factors
  // with more than k transitions cannot contribute below the window.
  std::set<CanonicalForm> rhs;
  std::vector<NetModule> ms, ns;
  for (const CanonicalForm& c : rm.classes) ms.push_back(decode_canonical(c));
  for (const CanonicalForm& c : rn.classes) ns.push_back(decode_canonical(c));
  for (const NetModule& a : ms) {
    for (const NetModule& b : ns) {
      Result<NetModule> ab = try_compose(a, b);
      if (!ab) continue;
      if (!is_acyclic(ab.value()) || !has_unbranched_places(ab.value()))
        continue;
      if (ab.value().transition_count() > k) continue;
      rhs.insert(canonical_form(ab.value()));
    }
  }

  std::vector<CanonicalForm> missing, extra;
  std::set_difference(lhs.classes.begin(), lhs.classes.end(), rhs.begin(),
                      rhs.end(), std::back_inserter(missing));
  std::set_difference(rhs.begin(), rhs.end(), lhs.classes.begin(),
                      lhs.classes.end(), std::back_inserter(extra));

  v.detail = "lhs classes=" + std::to_string(lhs.classes.size()) +
             ", rhs classes=" + std::to_string(rhs.size()) +
             ", rhs subset of lhs=" + (extra.empty() ? "yes" : "no");
  v.holds = missing.empty() && extra.empty();
  if (!v.holds) {
    std::vector<std::string> notes;
    notes.push_back(v.detail);
    if (!missing.empty()) {
      // smallest class of the composed system with no pairwise factorization
      const CanonicalForm* best = &missing.front();
      for (const CanonicalForm& c : missing)
        if (c.bytes.size() < best->bytes.size()) best = &c;
      notes.push_back("smallest run class of the composition absent from the "
                      "pairwise compositions:\n" + best->bytes);
      notes.push_back(std::to_string(missing.size()) +
                      " class(es) missing from the right-hand side");
    }
    if (!extra.empty())
      notes.push_back(std::to_string(extra.size()) +
                      " class(es) on the right-hand side are not runs of the "
                      "composition:\n" + extra.front().bytes);
    v.witness = make_witness({m, n}, std::move(notes), 0);
  }
  return v;
}

Verdict check_associativity(const NetModule& a, const NetModule& b,
                            const NetModule& c) {
  Verdict v;
  v.claim = Claim::Associativity;

  Result<NetModule> ab = try_compose(a, b);
  Result<NetModule> left =
      ab ? try_compose(ab.value(), c) : Result<NetModule>::fail(ab.reason());
  Result<NetModule> bc = try_compose(b, c);
  Result<NetModule> right =
      bc ? try_compose(a, bc.value()) : Result<NetModule>::fail(bc.reason());

  if (!left || !right) {
    v.applicable = false;
    v.holds = false;
    v.detail = !left && !right
                   ? "both groupings undefined"
                   : std::string("one grouping undefined: ") +
                         (!left ? left.reason() : right.reason());
    return v;
  }
  v.holds = is_isomorphic(left.value(), right.value());
  if (!v.holds)
    v.witness = make_witness(
        {a, b, c},
        {"(a.b).c:\n" + canonical_form(left.value()).bytes,
         "a.(b.c):\n" + canonical_form(right.value()).bytes},
        0);
  return v;
}

Verdict check_identity(const NetModule& m) {
  Verdict v;
  v.claim = Claim::Identity;
  if (!validate(m).empty()) {
    v.applicable = false;
    v.detail = "invalid operand";
    return v;
  }
  NetModule e = empty_module();
  Result<NetModule> me = try_compose(m, e);
  Result<NetModule> em = try_compose(e, m);
  v.holds = me && em && is_isomorphic(me.value(), m) &&
            is_isomorphic(em.value(), m);
  if (!v.holds)
    v.witness = make_witness({m}, {"composition with the empty module is not "
                                   "isomorphic to the module"}, 0);
  return v;
}

namespace {

NetModule drop_element(const NetModule& m, ElementId victim) {
  NetModule out;
  std::vector<ElementId> remap(m.size(), static_cast<ElementId>(-1));
  for (ElementId e = 0; e < m.size(); ++e) {
    if (e == victim) continue;
    remap[e] = static_cast<ElementId>(out.elements.size());
    out.elements.push_back(m.elements[e]);
  }
  for (const Arc& a : m.arcs)
    if (a.src != victim && a.dst != victim)
      out.arcs.push_back({remap[a.src], remap[a.dst]});
  for (ElementId e : m.left)
    if (e != victim) out.left.push_back(remap[e]);
  for (ElementId e : m.right)
    if (e != victim) out.right.push_back(remap[e]);
  return out;
}

}  // namespace

Witness shrink(const Witness& w, const FailurePredicate& still_fails) {
  if (!still_fails(w.operands))
    throw std::invalid_argument("shrink: stale witness");

  Witness best = w;
  bool progress = true;
  while (progress) {
    progress = false;
    for (std::size_t i = 0; i < best.operands.size() && !progress; ++i) {
      // take a copy: accepting a reduction replaces best.operands
      const NetModule m = best.operands[i];
      auto attempt = [&](NetModule reduced) {
        std::vector<NetModule> c = best.operands;
        c[i] = std::move(reduced);
        if (still_fails(c)) {
          best.operands = std::move(c);
          progress = true;
        }
        return progress;
      };
      for (std::size_t a = 0; !progress && a < m.arcs.size(); ++a) {
        NetModule r = m;
        r.arcs.erase(r.arcs.begin() + a);
        attempt(std::move(r));
      }
      for (std::size_t p = 0; !progress && p < m.left.size(); ++p) {
        NetModule r = m;
        r.left.erase(r.left.begin() + p);
        attempt(std::move(r));
      }
      for (std::size_t p = 0; !progress && p < m.right.size(); ++p) {
        NetModule r = m;
        r.right.erase(r.right.begin() + p);
        attempt(std::move(r));
      }
      for (ElementId e = 0; !progress && e < m.size(); ++e)
        attempt(drop_element(m, e));
    }
  }
  best.notes.push_back("shrunk from " + std::to_string(w.operands.size()) +
                       " operand(s)");
  return best;
}

Witness shrink(const Verdict& failed) {
  if (failed.holds || !failed.witness)
    throw std::invalid_argument("shrink: verdict did not fail");
  const Witness& w = *failed.witness;

  FailurePredicate pred;
  switch (failed.claim) {
    case Claim::Identity:
      pred = [](const std::vector<NetModule>& ops) {
        if (ops.size() != 1) return false;
        Verdict v = check_identity(ops[0]);
        return v.applicable && !v.holds;
      };
      break;
    case Claim::Associativity:
      pred = [](const std::vector<NetModule>& ops) {
        if (ops.size() != 3) return false;
        Verdict v = check_associativity(ops[0], ops[1], ops[2]);
        return v.applicable && !v.holds;
      };
      break;
    case Claim::Theorem1:
      pred = [](const std::vector<NetModule>& ops) {
        if (ops.size() != 2) return false;
        if (!is_basic_run(ops[0]) || !is_basic_run(ops[1])) return false;
        if (!validate(ops[0]).empty() || !validate(ops[1]).empty()) return false;
        std::vector<std::string> broken = theorem1_obligations(ops[0], ops[1]);
        return !broken.empty() && broken.front().rfind("composition undefined", 0) != 0;
      };
      break;
    case Claim::CompositionTheorem: {
      std::size_t k = failed.bounds.empty() ? 4 : failed.bounds[0];
      pred = [k](const std::vector<NetModule>& ops) {
        if (ops.size() != 2) return false;
        Verdict v = check_composition_theorem(ops[0], ops[1], k,
                                              StepUniverse::basic());
        return v.applicable && !v.inconclusive && !v.holds;
      };
      break;
    }
  }
  return shrink(w, pred);
}

}  // namespace netcalc
