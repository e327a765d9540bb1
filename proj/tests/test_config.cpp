#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <vector>

#include "opforge/config.hpp"
#include "opforge/tree.hpp"

using namespace opforge;

TEST_CASE("builtin configuration levels") {
  Configuration arity = builtin_config(ConfigKind::arity);
  CHECK(arity.level(1).size() == 1);
  CHECK(arity.level(3) == std::set<std::vector<int>>{{1}, {2}, {3}});
  CHECK(arity.name() == "arity");

  Configuration power = builtin_config(ConfigKind::power);
  CHECK(power.level(2).size() == 3);
  CHECK(power.level(3).size() == 7);
  CHECK(power.level(4).size() == 15);
  CHECK(power.contains(3, {1, 3}));
  CHECK(power.name() == "power");

  Configuration capped = builtin_config(ConfigKind::capped, 2);
  CHECK(capped.level(2).size() == 3);
  CHECK(capped.level(3).size() == 6);  // all nonempty subsets of [3] except [3]
  CHECK_FALSE(capped.contains(3, {1, 2, 3}));
  CHECK(capped.contains(3, {1, 2}));
  CHECK(capped.name() == "capped:2");

  Configuration trivial = builtin_config(ConfigKind::trivial);
  CHECK(trivial.level(4) == std::set<std::vector<int>>{{1, 2, 3, 4}});
  CHECK(trivial.name() == "trivial");

  Configuration sb = builtin_config(ConfigKind::singletons_below, 3);
  CHECK(sb.level(2) == std::set<std::vector<int>>{{1}, {2}, {1, 2}});
  CHECK(sb.level(3) == std::set<std::vector<int>>{{1, 2, 3}});
  CHECK(sb.level(5) == std::set<std::vector<int>>{{1, 2, 3, 4, 5}});

  CHECK_THROWS(arity.level(0));
  CHECK_THROWS(arity.level(8));
  CHECK_THROWS(builtin_config(ConfigKind::explicit_));
  CHECK_THROWS(builtin_config(ConfigKind::capped, 0));
}

TEST_CASE("meet picks the children a subset touches") {
  Tree t = Tree::vertex("m", {Tree::vertex("m", {Tree::leaf(1), Tree::leaf(2)}), Tree::leaf(3)});
  CHECK(meet({2}, t) == std::set<int>{1});
  CHECK(meet({1, 3}, t) == std::set<int>{1, 2});
  CHECK(meet({3}, t) == std::set<int>{2});
  CHECK(meet({5}, t).empty());
  CHECK_THROWS(meet({1}, Tree::leaf(1)));

  // the paper's six-leaf example: root has children leaf, ternary, binary
  Tree six = Tree::vertex("w3", {Tree::leaf(1),
                                 Tree::vertex("w1", {Tree::leaf(2), Tree::leaf(3), Tree::leaf(4)}),
                                 Tree::vertex("w2", {Tree::leaf(5), Tree::leaf(6)})});
  CHECK(meet({2}, six) == std::set<int>{2});
  CHECK(meet({1, 2, 4}, six) == std::set<int>{1, 2});
  CHECK(meet_at({1, 2, 4}, six, 1) == std::set<int>{1, 3});
  std::vector<const Tree*> verts;
  collect_vertices(six, verts);
  REQUIRE(verts.size() == 3);
  CHECK(verts[0]->gen() == "w3");
  CHECK(verts[1]->gen() == "w1");
  CHECK(verts[2]->gen() == "w2");
}

TEST_CASE("closure validation accepts the builtins and finds counterexamples") {
  for (auto kind : {ConfigKind::arity, ConfigKind::power, ConfigKind::trivial}) {
    Configuration C = builtin_config(kind);
    CHECK(validate_closure(C).valid);
  }
  CHECK(validate_closure(builtin_config(ConfigKind::capped, 2)).valid);
  CHECK(validate_closure(builtin_config(ConfigKind::capped, 3)).valid);
  CHECK(validate_closure(builtin_config(ConfigKind::singletons_below, 3)).valid);

  // {2} in C_3 without {1} in C_2: meeting {2} along m(m(1,2),3) lands on
  // child 1 of the inner vertex, which C_2 does not contain
  Configuration bad = explicit_config({{1, {{1}}},
                                       {2, {{1, 2}}},
                                       {3, {{2}, {1, 2, 3}}}},
                                      3);
  ClosureReport rep = validate_closure(bad);
  CHECK_FALSE(rep.valid);
  CHECK(rep.J == std::set<int>{2});
  CHECK_FALSE(rep.str().empty());

  // adding the singletons at level 2 repairs it
  Configuration fixed = explicit_config({{1, {{1}}},
                                         {2, {{1, 2}, {1}, {2}}},
                                         {3, {{2}, {1, 2, 3}}}},
                                        3);
  CHECK(validate_closure(fixed).valid);
}

TEST_CASE("symmetric invariance of levels") {
  CHECK(s_invariant(builtin_config(ConfigKind::arity)));
  CHECK(s_invariant(builtin_config(ConfigKind::power)));
  CHECK(s_invariant(builtin_config(ConfigKind::trivial)));
  CHECK(s_invariant(builtin_config(ConfigKind::capped, 2)));
  CHECK(s_invariant(builtin_config(ConfigKind::singletons_below, 4)));

  Configuration skew = explicit_config({{1, {{1}}},
                                        {2, {{1}, {1, 2}}}},
                                       2);
  CHECK_FALSE(s_invariant(skew));
}

TEST_CASE("index of a configuration") {
  CHECK(index_of(builtin_config(ConfigKind::arity)).str() == "1");
  CHECK(index_of(builtin_config(ConfigKind::power)).str() == "infinite");
  CHECK(index_of(builtin_config(ConfigKind::capped, 2)).str() == "2");
  CHECK(index_of(builtin_config(ConfigKind::capped, 4)).str() == "4");
  CHECK(index_of(builtin_config(ConfigKind::trivial)).str() == "none");
  CHECK(index_of(builtin_config(ConfigKind::singletons_below, 3)).str() == "2");

  Configuration full2 = explicit_config({{1, {{1}}},
                                         {2, {{1}, {2}, {1, 2}}}},
                                        2);
  IndexValue iv = index_of(full2);
  CHECK(iv.tag == IndexValue::at_least);
  CHECK(iv.value == 2);
}

TEST_CASE("explicit configurations validate their sets") {
  CHECK_THROWS(explicit_config({{2, {{1, 5}}}}, 3));   // 5 outside [2]
  CHECK_THROWS(explicit_config({{2, {{}}}}, 3));        // empty part
  CHECK_THROWS(explicit_config({{2, {{1, 1}}}}, 3));    // duplicate entry
  Configuration ok = explicit_config({{2, {{2, 1}}}}, 2);
  CHECK(ok.contains(2, {1, 2}));  // stored sorted
}
