#include "doctest.h"
#include "netcalc/net_module.hpp"
#include "support.hpp"

using namespace netcalc;
using netcalc::test::mk;

TEST_CASE("the empty module validates") {
  NetModule e = empty_module();
  CHECK(e.empty());
  CHECK(validate(e).empty());
  CHECK(e.interior().empty());
}

TEST_CASE("place-to-place arcs break bipartiteness") {
  NetModule m = mk({{'p', "a"}, {'p', "b"}}, {{0, 1}});
  auto v = validate(m);
  REQUIRE(v.size() == 1);
  CHECK(v[0].rule == "bipartiteness");

  NetModule tt = mk({{'t', "a"}, {'t', "b"}}, {{0, 1}});
  REQUIRE(validate(tt).size() == 1);
  CHECK(validate(tt)[0].rule == "bipartiteness");
}

TEST_CASE("interface references must hit member elements") {
  NetModule m = mk({{'p', "a"}}, {}, {0, 7});
  auto v = validate(m);
  REQUIRE(v.size() == 1);
  CHECK(v[0].rule == "dangling interface reference");
}

TEST_CASE("duplicate arcs and duplicate interface entries are violations") {
  NetModule m = mk({{'p', "a"}, {'t', "t"}}, {{0, 1}});
  m.arcs.push_back({0, 1});
  auto v = validate(m);
  REQUIRE(v.size() == 1);
  CHECK(v[0].rule == "duplicate arc");

  NetModule d = mk({{'p', "a"}}, {}, {0, 0});
  REQUIRE(validate(d).size() == 1);
  CHECK(validate(d)[0].rule == "duplicate interface entry");
}

TEST_CASE("interior is everything outside both interfaces") {
  NetModule m = mk({{'p', "a"}, {'p', "b"}, {'t', "t"}}, {{0, 2}, {2, 1}},
                   {0}, {1});
  auto in = m.interior();
  REQUIRE(in.size() == 1);
  CHECK(in[0] == 2);
  CHECK_FALSE(has_interface_overlap(m));

  // overlap is legal, flagged separately
  NetModule o = mk({{'p', "a"}}, {}, {0}, {0});
  CHECK(validate(o).empty());
  CHECK(has_interface_overlap(o));
  CHECK(o.interior().empty());
}

TEST_CASE("acyclicity and unbranched places") {
  NetModule cyc = mk({{'p', "x"}, {'t', "t"}}, {{0, 1}, {1, 0}});
  CHECK(validate(cyc).empty());  // self-loops are fine structurally
  CHECK_FALSE(is_acyclic(cyc));
  CHECK(has_unbranched_places(cyc));

  NetModule br = mk({{'p', "x"}, {'t', "t"}, {'t', "u"}}, {{0, 1}, {0, 2}});
  CHECK(is_acyclic(br));
  CHECK_FALSE(has_unbranched_places(br));

  NetModule chain = mk({{'p', "x"}, {'t', "t"}, {'p', "y"}}, {{0, 1}, {1, 2}});
  CHECK(is_acyclic(chain));
  CHECK(has_unbranched_places(chain));
}

TEST_CASE("interface views carry element labels") {
  NetModule m = mk({{'p', "a"}, {'t', "t"}}, {{0, 1}}, {0}, {});
  InterfaceView v = m.left_view();
  REQUIRE(v.size() == 1);
  CHECK(v.at(0).label == place_label("a"));
}
