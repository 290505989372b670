#include <set>
#include <stdexcept>

#include "doctest.h"
#include "netcalc/compose.hpp"
#include "netcalc/theorems.hpp"
#include "support.hpp"

using namespace netcalc;
using netcalc::test::load_fixture;
using netcalc::test::mk;

TEST_CASE("random_module is deterministic and always valid") {
  GenParams p;
  p.seed = 42;
  NetModule a = random_module(p);
  NetModule b = random_module(p);
  CHECK(a == b);

  GenParams zero;
  zero.seed = 1;
  zero.max_places = 0;
  zero.max_transitions = 0;
  zero.max_arcs = 0;
  zero.max_interface = 0;
  CHECK(random_module(zero).empty());

  bool saw_overlap = false, saw_trans_iface = false, saw_branching = false,
       saw_empty_iface = false;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    GenParams q;
    q.seed = seed;
    NetModule m = random_module(q);
    CHECK(validate(m).empty());
    saw_overlap = saw_overlap || has_interface_overlap(m);
    saw_empty_iface = saw_empty_iface || (m.left.empty() && m.size() > 0);
    for (ElementId e : m.left)
      saw_trans_iface = saw_trans_iface || m.is_transition(e);
    saw_branching = saw_branching || !has_unbranched_places(m);
  }
  // the distribution reaches the corners the properties care about
  CHECK(saw_overlap);
  CHECK(saw_trans_iface);
  CHECK(saw_branching);
  CHECK(saw_empty_iface);
}

TEST_CASE("random basic runs are basic and replayable") {
  std::size_t nonempty = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    GenParams p;
    p.seed = seed;
    NetModule m = random_module(p);
    Run r = random_basic_run(m, seed ^ 0x5eed, 4);
    CHECK(is_basic_run(r));
    CHECK(is_acyclic(r.net));
    CHECK(has_unbranched_places(r.net));
    if (r.net.transition_count() > 0) ++nonempty;
  }
  CHECK(nonempty > 40);  // the generator is not vacuous
}

TEST_CASE("theorem1 verdicts") {
  NetModule r1 = load_fixture("r1.netmod").body;
  Run run1{r1, {}};
  Verdict v = check_theorem1(run1, run1);
  CHECK(v.holds);
  CHECK(v.claim == Claim::Theorem1);

  Verdict ve = check_theorem1(Run{empty_module(), {}}, run1);
  CHECK(ve.holds);

  Run not_basic{load_fixture("step_f.netmod").body, {}};
  CHECK_THROWS_WITH_AS(check_theorem1(not_basic, run1),
                       doctest::Contains("not basic"), std::invalid_argument);
}

TEST_CASE("theorem1 holds on seeded random basic-run pairs") {
  std::size_t defined = 0;
  for (std::uint64_t i = 0; i < 200; ++i) {
    GenParams p;
    p.seed = 1000 + 2 * i;
    GenParams q;
    q.seed = 1000 + 2 * i + 1;
    Run r = random_basic_run(random_module(p), p.seed ^ 0xabcd, 4);
    Run s = random_basic_run(random_module(q), q.seed ^ 0xabcd, 4);
    Verdict v = check_theorem1(r, s);
    if (!v.applicable) continue;
    ++defined;
    CHECK(v.holds);
    if (!v.holds && v.witness) {
      for (const std::string& note : v.witness->notes) MESSAGE(note);
    }
    // the verdict agrees with checking the composed module directly
    Result<NetModule> c = try_compose(r.net, s.net);
    REQUIRE(c);
    CHECK(v.holds == (is_basic_run(c.value()) && is_acyclic(c.value())));
  }
  CHECK(defined > 150);
}

TEST_CASE("identity law on fixtures and random modules") {
  CHECK(check_identity(load_fixture("baker.netmod").body).holds);
  CHECK(check_identity(empty_module()).holds);
  for (std::uint64_t seed = 500; seed < 550; ++seed) {
    GenParams p;
    p.seed = seed;
    CHECK(check_identity(random_module(p)).holds);
  }
}

TEST_CASE("associativity on the three-slice fixtures equals the global") {
  NetModule ts = load_fixture("take_supply.netmod").body;
  NetModule sm = load_fixture("supply_move.netmod").body;
  NetModule ms = load_fixture("move_sell.netmod").body;
  Verdict v = check_associativity(ts, sm, ms);
  CHECK(v.holds);

  NetModule both = compose(compose(ts, sm), ms);
  CHECK(is_isomorphic(both, load_fixture("global.netmod").body));
}

TEST_CASE("associativity classifies one-sided failures as not applicable") {
  // B fuses x with A's right; in B.C the same element is matched while it
  // also sits in B's right interface, so only one grouping is defined
  NetModule a = mk({{'p', "x"}}, {}, {}, {0});
  NetModule b = mk({{'p', "x"}}, {}, {0}, {0});
  NetModule c = mk({{'p', "x"}}, {}, {0}, {});
  Verdict v = check_associativity(a, b, c);
  CHECK_FALSE(v.applicable);
}

TEST_CASE("the composition window check reports the counterexample honestly") {
  NetModule baker = load_fixture("baker.netmod").body;
  NetModule vendor = load_fixture("vendor.netmod").body;
  Verdict v = check_composition_theorem(baker, vendor, 4, StepUniverse::basic());
  CHECK(v.applicable);
  CHECK_FALSE(v.inconclusive);
  // bounded run-set equality genuinely fails: the composed system has runs
  // that consume a channel token from outside while a produced one dangles,
  // and pairwise composition always fuses those instead
  CHECK_FALSE(v.holds);
  REQUIRE(v.witness);
  CHECK(v.detail.find("rhs subset of lhs=yes") != std::string::npos);

  // on label-disjoint operands the window equality does hold
  NetModule m = mk({{'p', "mx"}, {'t', "mt"}}, {{1, 0}}, {}, {0});
  NetModule n = mk({{'p', "ny"}, {'t', "nt"}}, {{0, 1}}, {0}, {});
  Verdict ok = check_composition_theorem(m, n, 3, StepUniverse::basic());
  CHECK(ok.holds);

  // the inclusion direction holds for the full universe too; checked on the
  // minimal channel pair to keep the enumeration small
  NetModule prod = mk({{'p', "c"}, {'t', "make"}}, {{1, 0}}, {}, {0});
  NetModule cons = mk({{'p', "c"}, {'t', "take"}}, {{0, 1}}, {0}, {});
  Verdict all = check_composition_theorem(prod, cons, 2, StepUniverse::all(9));
  CHECK_FALSE(all.inconclusive);
  CHECK(all.detail.find("rhs subset of lhs=yes") != std::string::npos);
}

TEST_CASE("a tiny work budget yields an inconclusive verdict") {
  NetModule baker = load_fixture("baker.netmod").body;
  NetModule vendor = load_fixture("vendor.netmod").body;
  Verdict v =
      check_composition_theorem(baker, vendor, 4, StepUniverse::basic(), 5);
  CHECK(v.inconclusive);
  CHECK_FALSE(v.holds);
}

TEST_CASE("shrinking keeps the failure and reaches a local minimum") {
  // stale witness: a passing triple cannot be shrunk
  Witness fine;
  fine.operands = {empty_module()};
  CHECK_THROWS_WITH_AS(
      shrink(fine, [](const std::vector<NetModule>&) { return false; }),
      doctest::Contains("stale witness"), std::invalid_argument);

  // a removable isolated place disappears
  NetModule noisy = mk({{'p', "x"}, {'p', "noise"}, {'t', "t"}}, {{0, 2}});
  Witness w;
  w.operands = {noisy};
  FailurePredicate wants_arc = [](const std::vector<NetModule>& ops) {
    return !ops[0].arcs.empty();
  };
  Witness small = shrink(w, wants_arc);
  CHECK(small.operands[0].size() == 2);
  CHECK(small.operands[0].arcs.size() == 1);

  // an already minimal witness stays put
  Witness again = shrink(small, wants_arc);
  CHECK(again.operands[0] == small.operands[0]);
}

TEST_CASE("an injected matching bug shrinks to a small counterexample") {
  // deliberate mutation: match the youngest available partner instead of
  // pairing equal degrees; the shrunken witness stays small
  auto buggy_matches = [](const InterfaceView& a, const InterfaceView& b) {
    std::vector<std::pair<ElementId, ElementId>> out;
    std::set<ElementId> used;
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = b.size(); j > 0; --j) {
        const InterfaceEntry& e = b.at(j - 1);
        if (a.at(i).label == e.label && !used.count(e.id)) {
          out.push_back({a.at(i).id, e.id});
          used.insert(e.id);
          break;
        }
      }
    return out;
  };
  FailurePredicate mismatched = [&](const std::vector<NetModule>& ops) {
    if (ops.size() != 2) return false;
    if (!validate(ops[0]).empty() || !validate(ops[1]).empty()) return false;
    auto real = matches(ops[0].right_view(), ops[1].left_view());
    auto fake = buggy_matches(ops[0].right_view(), ops[1].left_view());
    if (real.size() != fake.size()) return true;
    for (std::size_t i = 0; i < real.size(); ++i)
      if (real[i].left_element != fake[i].first ||
          real[i].right_element != fake[i].second)
        return true;
    return false;
  };

  // hunt a failing seeded pair, then shrink it
  bool found = false;
  for (std::uint64_t seed = 0; seed < 400 && !found; ++seed) {
    GenParams p;
    p.seed = seed * 2 + 31;
    GenParams q;
    q.seed = seed * 2 + 32;
    std::vector<NetModule> ops = {random_module(p), random_module(q)};
    if (!mismatched(ops)) continue;
    found = true;
    Witness w;
    w.operands = ops;
    Witness small = shrink(w, mismatched);
    std::size_t total = 0;
    for (const NetModule& m : small.operands) total += m.size();
    CHECK(total <= 6);
    CHECK(mismatched(small.operands));
  }
  CHECK(found);
}

TEST_CASE("canned shrinking replays the verdict's own claim") {
  Verdict v;
  v.claim = Claim::Identity;
  v.holds = false;
  v.witness = Witness{{load_fixture("baker.netmod").body}, {}, 0};
  // identity actually holds for the baker, so this witness is stale
  CHECK_THROWS_AS(shrink(v), std::invalid_argument);

  // the window mismatch is a real failure; its canned shrink stays failing
  // and ends tiny
  Verdict comp = check_composition_theorem(load_fixture("baker.netmod").body,
                                           load_fixture("vendor.netmod").body,
                                           2, StepUniverse::basic());
  REQUIRE_FALSE(comp.holds);
  Witness small = shrink(comp);
  std::size_t total = 0;
  for (const NetModule& m : small.operands) total += m.size();
  CHECK(total <= 6);
}
