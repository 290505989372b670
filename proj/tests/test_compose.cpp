#include <set>

#include "doctest.h"
#include "netcalc/canonical.hpp"
#include "netcalc/compose.hpp"
#include "netcalc/theorems.hpp"
#include "support.hpp"

using namespace netcalc;
using netcalc::test::load_fixture;
using netcalc::test::mk;

TEST_CASE("the empty module is a two-sided identity") {
  NetModule baker = load_fixture("baker.netmod").body;
  NetModule e = empty_module();
  CHECK(is_isomorphic(compose(baker, e), baker));
  CHECK(is_isomorphic(compose(e, baker), baker));
  CHECK(is_isomorphic(compose(e, e), e));
}

TEST_CASE("one matched pair fuses, unmatched entries survive in order") {
  // right(M) = <a, b>, left(N) = <b, c>, all labels distinct
  NetModule m = mk({{'p', "a"}, {'p', "b"}}, {}, {}, {0, 1});
  NetModule n = mk({{'p', "b"}, {'p', "c"}}, {}, {0, 1}, {});
  ComposeTrace trace;
  Result<NetModule> r = try_compose(m, n, &trace);
  REQUIRE(r);
  const NetModule& c = r.value();

  REQUIRE(trace.fused_pairs.size() == 1);
  CHECK(trace.fused_pairs[0].shared_label == place_label("b"));

  // interior gains exactly the fused b-pair
  auto interior = c.interior();
  REQUIRE(interior.size() == 1);
  CHECK(c.elements[interior[0]] == place_label("b"));

  // left(M.N) = left(M) then the c-element; right(M.N) = right(N) then a
  REQUIRE(c.left.size() == 1);
  CHECK(c.elements[c.left[0]] == place_label("c"));
  REQUIRE(c.right.size() == 1);
  CHECK(c.elements[c.right[0]] == place_label("a"));
}

TEST_CASE("the worked interface example drives composition") {
  NetModule m = mk({{'p', "ready"}, {'p', "aide busy"}, {'p', "aide free"},
                    {'p', "aide busy"}},
                   {}, {}, {0, 1, 2, 3});
  NetModule n = mk({{'p', "shelf empty"}, {'p', "aide busy"}, {'p', "aide free"},
                    {'p', "aide busy"}},
                   {}, {0, 1, 2, 3}, {});
  ComposeTrace trace;
  Result<NetModule> r = try_compose(m, n, &trace);
  REQUIRE(r);
  REQUIRE(trace.fused_pairs.size() == 3);
  CHECK(trace.fused_pairs[0].left_element == 1);   // busy/busy at degree 1
  CHECK(trace.fused_pairs[0].right_element == 1);
  CHECK(trace.fused_pairs[1].left_element == 2);   // free/free
  CHECK(trace.fused_pairs[1].right_element == 2);
  CHECK(trace.fused_pairs[2].left_element == 3);   // busy/busy at degree 2
  CHECK(trace.fused_pairs[2].right_element == 3);
  CHECK(trace.fused_pairs[2].shared_degree == 2);

  const NetModule& c = r.value();
  REQUIRE(c.right.size() == 1);  // "ready" survives on the right
  CHECK(c.elements[c.right[0]] == place_label("ready"));
  REQUIRE(c.left.size() == 1);  // "shelf empty" survives on the left
  CHECK(c.elements[c.left[0]] == place_label("shelf empty"));
}

TEST_CASE("a matched element may not sit in both interfaces of one operand") {
  // x is in left(M) and right(M) and matches left(N)
  NetModule m = mk({{'p', "x"}}, {}, {0}, {0});
  NetModule n = mk({{'p', "x"}}, {}, {0}, {});
  Result<NetModule> r = try_compose(m, n);
  REQUIRE_FALSE(r);
  CHECK(r.reason().find("ambiguous interface overlap") == 0);

  // mirror case on the right operand
  NetModule m2 = mk({{'p', "x"}}, {}, {}, {0});
  NetModule n2 = mk({{'p', "x"}}, {}, {0}, {0});
  Result<NetModule> r2 = try_compose(m2, n2);
  REQUIRE_FALSE(r2);
  CHECK(r2.reason().find("ambiguous interface overlap") == 0);

  // unmatched overlap is fine
  NetModule m3 = mk({{'p', "y"}}, {}, {0}, {0});
  CHECK(try_compose(m3, n));
}

TEST_CASE("invalid operands are refused") {
  NetModule bad = mk({{'p', "a"}, {'p', "b"}}, {{0, 1}});
  Result<NetModule> r = try_compose(bad, empty_module());
  REQUIRE_FALSE(r);
  CHECK(r.reason().find("invalid operand") == 0);
}

TEST_CASE("element and arc conservation") {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    GenParams p;
    p.seed = seed * 31 + 7;
    NetModule m = random_module(p);
    p.seed = seed * 31 + 8;
    NetModule n = random_module(p);
    ComposeTrace trace;
    Result<NetModule> r = try_compose(m, n, &trace);
    if (!r) continue;
    const NetModule& c = r.value();

    // every input element maps to exactly one output slot
    std::size_t fused = trace.fused_pairs.size();
    CHECK(c.size() == m.size() + n.size() - fused);
    std::set<ElementId> seen_m, seen_n;
    for (const TraceEntry& t : trace.entries) {
      if (t.origin != ElementOrigin::FromRightOperand)
        CHECK(seen_m.insert(t.in_left).second);
      if (t.origin != ElementOrigin::FromLeftOperand)
        CHECK(seen_n.insert(t.in_right).second);
    }
    CHECK(seen_m.size() == m.size());
    CHECK(seen_n.size() == n.size());

    // no arc is dropped; duplicates only collapse
    CHECK(c.arcs.size() <= m.arcs.size() + n.arcs.size());
    std::vector<ElementId> mmap(m.size()), nmap(n.size());
    for (ElementId e = 0; e < c.size(); ++e) {
      const TraceEntry& t = trace.entries[e];
      if (t.origin != ElementOrigin::FromRightOperand) mmap[t.in_left] = e;
      if (t.origin != ElementOrigin::FromLeftOperand) nmap[t.in_right] = e;
    }
    for (const Arc& a : m.arcs) CHECK(c.has_arc(mmap[a.src], mmap[a.dst]));
    for (const Arc& a : n.arcs) CHECK(c.has_arc(nmap[a.src], nmap[a.dst]));

    // the result validates
    CHECK(validate(c).empty());
  }
}

TEST_CASE("coinciding inherited arcs collapse to one") {
  // both operands draw an arc between the to-be-fused place and the
  // to-be-fused transition
  NetModule m = mk({{'p', "x"}, {'t', "t"}}, {{0, 1}}, {}, {0, 1});
  NetModule n = mk({{'p', "x"}, {'t', "t"}}, {{0, 1}}, {0, 1}, {});
  Result<NetModule> r = try_compose(m, n);
  REQUIRE(r);
  CHECK(r.value().size() == 2);
  CHECK(r.value().arcs.size() == 1);
}

TEST_CASE("compose_all folds left") {
  NetModule baker = load_fixture("baker.netmod").body;
  std::vector<NetModule> one = {baker};
  CHECK(is_isomorphic(compose_all(one), baker));
  CHECK_FALSE(try_compose_all({}));

  std::vector<NetModule> steps = {
      load_fixture("step_a.netmod").body, load_fixture("step_b.netmod").body,
      load_fixture("step_c.netmod").body, load_fixture("step_d.netmod").body};
  NetModule r1 = compose_all(steps);
  CHECK(r1.transition_count() == 4);
  CHECK(is_isomorphic(r1, load_fixture("r1.netmod").body));

  std::vector<NetModule> twice = {r1, r1};
  CHECK(is_isomorphic(compose_all(twice), load_fixture("r2.netmod").body));
}

TEST_CASE("associativity holds on seeded random triples") {
  std::size_t checked = 0;
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    GenParams p;
    p.seed = seed * 3 + 1;
    NetModule a = random_module(p);
    p.seed = seed * 3 + 2;
    NetModule b = random_module(p);
    p.seed = seed * 3 + 3;
    NetModule c = random_module(p);
    Verdict v = check_associativity(a, b, c);
    if (!v.applicable) continue;
    ++checked;
    CHECK(v.holds);
  }
  CHECK(checked > 40);
}
