#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>
#include <string>
#include <vector>

#include "opforge/catalog.hpp"
#include "opforge/config.hpp"
#include "opforge/splitting.hpp"

using namespace opforge;
using catdet::at_slot;
using catdet::corolla;

namespace {

std::string report_brief(const Report& rep) {
  const CheckResult* f = rep.first_failure();
  if (!f) return rep.title + ": ok";
  return rep.title + ": " + f->label + " [" + f->witness + "]";
}

size_t skip_count(const Report& rep) {
  size_t n = 0;
  for (const auto& c : rep.checks) n += c.status == CheckResult::skipped;
  return n;
}

// ternary w1, binary w2, ternary w3, no relations; enough to split trees
OperadPresentation mixed_alphabet() {
  OperadPresentation P;
  P.name = "mixed";
  P.alphabet = {{"w1", 3}, {"w2", 2}, {"w3", 3}};
  return P;
}

}  // namespace

TEST_CASE("split alphabet enumerates (generator, part) pairs") {
  Configuration arity = builtin_config(ConfigKind::arity);
  Configuration power = builtin_config(ConfigKind::power);

  OperadPresentation As = builtin_presentation("As");
  SplitAlphabet SA = split_alphabet(As, arity);
  CHECK(SA.alphabet.size() == 2);
  CHECK(SA.id("mu", {1}) == "mu_1");
  CHECK(SA.id("mu", {2}) == "mu_2");
  CHECK(SA.part_of.at("mu_1").base == "mu");
  CHECK(SA.part_of.at("mu_2").part == std::vector<int>{2});
  CHECK(SA.actions.empty());
  CHECK_THROWS_AS(SA.id("nu", {1}), std::invalid_argument);
  CHECK_THROWS_AS(SA.id("mu", {1, 2}), std::invalid_argument);

  SplitAlphabet SP = split_alphabet(As, power);
  CHECK(SP.alphabet.size() == 3);
  CHECK(SP.id("mu", {1, 2}) == "mu_12");

  // the skew ternary bracket: (brk, e_I)^{s_i} = -(brk, e_{s_i(I)})
  OperadPresentation L3 = builtin_presentation("3Lie");
  SplitAlphabet SL = split_alphabet(L3, arity);
  CHECK(SL.alphabet.size() == 3);
  const ActionTable& t1 = SL.actions.at("brk_1");
  CHECK(t1.rows[0] == std::make_pair(std::string("brk_2"), -1));
  CHECK(t1.rows[1] == std::make_pair(std::string("brk_1"), -1));
  const ActionTable& t3 = SL.actions.at("brk_3");
  CHECK(t3.rows[0] == std::make_pair(std::string("brk_3"), -1));
  CHECK(t3.rows[1] == std::make_pair(std::string("brk_2"), -1));
}

TEST_CASE("split alphabet rejects unsplittable input") {
  OperadPresentation U;
  U.name = "unary";
  U.alphabet = {{"d", 1, true}};
  CHECK_THROWS_AS(split_alphabet(U, builtin_config(ConfigKind::arity)), std::invalid_argument);

  OperadPresentation L3 = builtin_presentation("3Lie");
  CHECK_THROWS_AS(split_alphabet(L3, builtin_config(ConfigKind::arity, 0, 2)),
                  std::invalid_argument);

  // a symmetric presentation cannot be split along a skew level set
  Configuration skew = explicit_config({{1, {{1}}}, {2, {{1}, {1, 2}}}}, 2);
  OperadPresentation Lie = builtin_presentation("Lie");
  CHECK_THROWS_AS(split_alphabet(Lie, skew), std::invalid_argument);
}

TEST_CASE("splitting a mixed-arity tree relabels vertex by vertex") {
  OperadPresentation P = mixed_alphabet();
  Configuration arity = builtin_config(ConfigKind::arity);
  Configuration power = builtin_config(ConfigKind::power);
  SplitAlphabet SA = split_alphabet(P, arity);
  SplitAlphabet SP = split_alphabet(P, power);

  Tree inner1 = corolla("w1", {2, 3, 4});
  Tree inner2 = corolla("w2", {5, 6});
  Tree tau = Tree::vertex("w3", {Tree::leaf(1), inner1, inner2});

  // J = {2}: the root sees it in its second branch, the ternary vertex in its
  // first, and the binary vertex not at all, so that vertex is starred.
  TreePoly got = split_tree(tau, {2}, arity, SA);
  auto piece = [&](const std::string& root, const std::string& a, const std::string& b) {
    return Tree::vertex(root, {Tree::leaf(1), Tree::vertex(a, {Tree::leaf(2), Tree::leaf(3), Tree::leaf(4)}),
                               Tree::vertex(b, {Tree::leaf(5), Tree::leaf(6)})});
  };
  TreePoly want = TreePoly(piece("w3_2", "w1_1", "w2_1")) + TreePoly(piece("w3_2", "w1_1", "w2_2"));
  CHECK(got == want);

  // J = {1,2,4} over the power configuration: meets {1,2} at the root and
  // {1,3} at the ternary vertex; the binary vertex expands over three parts
  TreePoly got2 = split_tree(tau, {1, 2, 4}, power, SP);
  TreePoly want2;
  for (const std::string& b : {"w2_1", "w2_2", "w2_12"}) {
    want2 += TreePoly(Tree::vertex("w3_12", {Tree::leaf(1),
                                             Tree::vertex("w1_13", {Tree::leaf(2), Tree::leaf(3), Tree::leaf(4)}),
                                             Tree::vertex(b, {Tree::leaf(5), Tree::leaf(6)})}));
  }
  CHECK(got2 == want2);

  // the empty set stars every vertex
  CHECK(split_tree(tau, {}, arity, SA).size() == 3 * 3 * 2);
  CHECK(split_tree(tau, {}, power, SP).size() == 7 * 7 * 3);

  // a singleton lights up exactly the path to that leaf
  TreePoly sp5 = split_tree(tau, {5}, arity, SA);
  CHECK(sp5.size() == 3);
  for (const auto& [t, c] : sp5.terms()) {
    CHECK(t.gen() == "w3_3");
    CHECK(t.children()[2].gen() == "w2_1");
    CHECK(c == 1);
  }

  CHECK_THROWS_AS(split_tree(tau, {9}, arity, SA), std::invalid_argument);
  CHECK_THROWS_AS(split_tree(tau, {2, 5}, arity, SA), std::invalid_argument);
}

TEST_CASE("split presentations reproduce the classical two- and three-part operads") {
  Configuration arity = builtin_config(ConfigKind::arity);
  Configuration power = builtin_config(ConfigKind::power);

  OperadPresentation As = builtin_presentation("As");
  OperadPresentation SA = split_presentation(As, arity);
  CHECK(SA.name == "split(As,arity)");
  REQUIRE(SA.relations.size() == 3);
  OperadPresentation D = builtin_presentation("Dend");
  OperadPresentation SAr = rename_generators(SA, {{"mu_1", "prec"}, {"mu_2", "succ"}});
  CHECK(span_relate(SAr.relations, D.relations) == SpanRel::equal);

  OperadPresentation SP = split_presentation(As, power);
  REQUIRE(SP.relations.size() == 7);
  OperadPresentation T = builtin_presentation("TriDend");
  OperadPresentation SPr =
      rename_generators(SP, {{"mu_1", "prec"}, {"mu_2", "succ"}, {"mu_12", "dot"}});
  CHECK(span_relate(SPr.relations, T.relations) == SpanRel::equal);

  OperadPresentation Lie = builtin_presentation("Lie");
  OperadPresentation SL = rename_generators(split_presentation(Lie, arity),
                                            {{"brk_1", "pl1"}, {"brk_2", "pl2"}});
  OperadPresentation PL = builtin_presentation("PreLie");
  CHECK(SL.actions == PL.actions);
  CHECK(span_relate(orbit_closed_relations(SL), orbit_closed_relations(PL), &PL.actions) ==
        SpanRel::equal);

  OperadPresentation SLP = rename_generators(
      split_presentation(Lie, power), {{"brk_1", "po1"}, {"brk_2", "po2"}, {"brk_12", "po3"}});
  OperadPresentation PO = builtin_presentation("PostLie");
  CHECK(SLP.actions == PO.actions);
  CHECK(span_relate(orbit_closed_relations(SLP), orbit_closed_relations(PO), &PO.actions) ==
        SpanRel::equal);

  OperadPresentation P3 = builtin_presentation("PAs", 3);
  OperadPresentation SP3 = rename_generators(split_presentation(P3, arity),
                                             {{"op_1", "nw"}, {"op_2", "up"}, {"op_3", "ne"}});
  REQUIRE(SP3.relations.size() == 5);
  CHECK(span_relate(SP3.relations, builtin_presentation("PartDend3").relations) ==
        SpanRel::equal);

  OperadPresentation T3 = builtin_presentation("TAs", 3);
  OperadPresentation ST3 = rename_generators(split_presentation(T3, arity),
                                             {{"op_1", "nw"}, {"op_2", "up"}, {"op_3", "ne"}});
  REQUIRE(ST3.relations.size() == 10);
  CHECK(span_relate(ST3.relations, builtin_presentation("TotDend3").relations) ==
        SpanRel::equal);
}

TEST_CASE("splitting the ternary bracket by arity yields its pre-Lie analogue") {
  Configuration arity = builtin_config(ConfigKind::arity);
  OperadPresentation L3 = builtin_presentation("3Lie");
  OperadPresentation S = rename_generators(split_presentation(L3, arity),
                                           {{"brk_1", "tp1"}, {"brk_2", "tp2"}, {"brk_3", "tp3"}});
  OperadPresentation TP = builtin_presentation("3PreLie");
  CHECK(S.actions == TP.actions);
  REQUIRE(S.relations.size() == 5);
  CHECK(span_relate(orbit_closed_relations(S), orbit_closed_relations(TP), &TP.actions) ==
        SpanRel::equal);
}

TEST_CASE("splitting along the trivial configuration renames the presentation") {
  Configuration triv = builtin_config(ConfigKind::trivial);
  OperadPresentation As = builtin_presentation("As");
  OperadPresentation S = split_presentation(As, triv);
  REQUIRE(S.relations.size() == 1);
  CHECK(rename_generators(S, {{"mu_12", "mu"}}).relations == As.relations);

  OperadPresentation Lie = builtin_presentation("Lie");
  OperadPresentation SL = split_presentation(Lie, triv);
  CHECK(rename_generators(SL, {{"brk_12", "brk"}}).relations == Lie.relations);
}

TEST_CASE("split presentation validates its inputs") {
  OperadPresentation bad;
  bad.name = "bad";
  bad.alphabet = {{"mu", 2}};
  bad.relations = {TreePoly()};
  CHECK_THROWS_AS(split_presentation(bad, builtin_config(ConfigKind::arity)),
                  std::invalid_argument);

  Configuration broken = explicit_config({{1, {{1}}}, {2, {{1, 2}}}, {3, {{2}, {1, 2, 3}}}}, 3);
  OperadPresentation As = builtin_presentation("As");
  CHECK_THROWS_AS(split_presentation(As, broken), std::invalid_argument);

  // everything the split presentation produces is well formed
  Report rep = validate(split_presentation(As, builtin_config(ConfigKind::power)));
  INFO(report_brief(rep));
  CHECK(rep.ok());
  rep = validate(split_presentation(builtin_presentation("3Lie"), builtin_config(ConfigKind::arity)));
  INFO(report_brief(rep));
  CHECK(rep.ok());
}

TEST_CASE("splitting-sum identity holds exhaustively at small sizes") {
  OperadPresentation As = builtin_presentation("As");
  Configuration arity = builtin_config(ConfigKind::arity);
  Configuration power = builtin_config(ConfigKind::power);
  Configuration triv = builtin_config(ConfigKind::trivial);
  Configuration cap2 = builtin_config(ConfigKind::capped, 2);

  CHECK(splitting_sum_bound(arity) == std::numeric_limits<int>::max());
  CHECK(splitting_sum_bound(triv) == std::numeric_limits<int>::max());
  CHECK(splitting_sum_bound(power) == std::numeric_limits<int>::max());
  CHECK(splitting_sum_bound(cap2) == 2);

  Report r1 = check_splitting_sum(As, arity, 4);
  INFO(report_brief(r1));
  CHECK(r1.ok());
  CHECK(skip_count(r1) == 0);

  Report r2 = check_splitting_sum(As, power, 4);
  INFO(report_brief(r2));
  CHECK(r2.ok());

  Report r3 = check_splitting_sum(As, triv, 4);
  INFO(report_brief(r3));
  CHECK(r3.ok());

  // above the index the identity is not asserted, and not silently tested
  Report r4 = check_splitting_sum(As, cap2, 4);
  INFO(report_brief(r4));
  CHECK(r4.ok());
  CHECK(skip_count(r4) == 2);

  Report r5 = check_splitting_sum(builtin_presentation("3Lie"), arity, 5);
  INFO(report_brief(r5));
  CHECK(r5.ok());

  CHECK_THROWS_AS(check_splitting_sum(As, arity, 0), std::invalid_argument);
  CHECK_THROWS_AS(check_splitting_sum(As, arity, 8), std::invalid_argument);
}

TEST_CASE("canonical morphisms pass, fail, or step aside as their hypotheses dictate") {
  OperadPresentation As = builtin_presentation("As");
  Configuration arity = builtin_config(ConfigKind::arity);
  Configuration power = builtin_config(ConfigKind::power);
  Configuration triv = builtin_config(ConfigKind::trivial);
  Configuration cap2 = builtin_config(ConfigKind::capped, 2);

  Report r = check_canonical_morphisms(As, arity, MorphismVariant::sum_arity);
  INFO(report_brief(r));
  CHECK(r.ok());
  CHECK(skip_count(r) == 0);

  // the arity-indexed sum is only a morphism statement for the arity family
  CHECK_FALSE(check_canonical_morphisms(As, power, MorphismVariant::sum_arity).ok());

  r = check_canonical_morphisms(As, power, MorphismVariant::sum_full);
  INFO(report_brief(r));
  CHECK(r.ok());
  CHECK(skip_count(r) == 0);

  r = check_canonical_morphisms(As, arity, MorphismVariant::sum_full);
  CHECK(r.ok());
  CHECK(skip_count(r) == 1);  // C_2 is not the full power set

  r = check_canonical_morphisms(As, cap2, MorphismVariant::sum_full);
  CHECK(r.ok());
  CHECK(skip_count(r) == 1);  // relation arity exceeds the index

  r = check_canonical_morphisms(As, power, MorphismVariant::top);
  INFO(report_brief(r));
  CHECK(r.ok());
  CHECK(skip_count(r) == 0);

  r = check_canonical_morphisms(As, triv, MorphismVariant::top);
  INFO(report_brief(r));
  CHECK(r.ok());
  CHECK(skip_count(r) == 0);

  CHECK(skip_count(check_canonical_morphisms(As, arity, MorphismVariant::top)) == 1);
  CHECK(skip_count(check_canonical_morphisms(As, cap2, MorphismVariant::top)) == 1);

  r = check_canonical_morphisms(builtin_presentation("Lie"), arity, MorphismVariant::sum_arity);
  INFO(report_brief(r));
  CHECK(r.ok());
  CHECK(skip_count(r) == 0);

  r = check_canonical_morphisms(builtin_presentation("3Lie"), power, MorphismVariant::top);
  INFO(report_brief(r));
  CHECK(r.ok());
  CHECK(skip_count(r) == 0);
}

TEST_CASE("induced morphisms of split operads") {
  Configuration arity = builtin_config(ConfigKind::arity);
  OperadPresentation As = builtin_presentation("As");

  Report r = induced_split_morphism({{"mu", {"mu", 1}}}, As, As, arity);
  INFO(report_brief(r));
  CHECK(r.ok());

  // the sign-reversed bracket is an automorphism of the Lie presentation
  OperadPresentation Lie = builtin_presentation("Lie");
  r = induced_split_morphism({{"brk", {"brk", -1}}}, Lie, Lie, arity);
  INFO(report_brief(r));
  CHECK(r.ok());

  // sending the product to one dendriform half is not a morphism
  OperadPresentation D = builtin_presentation("Dend");
  OperadPresentation AsD = As;
  AsD.alphabet = D.alphabet;  // same relations, target alphabet for lookup
  r = induced_split_morphism({{"mu", {"prec", 1}}}, As, D, arity);
  CHECK_FALSE(r.ok());

  // arity mismatch, missing image, and symmetry mismatch are all rejected
  CHECK_FALSE(induced_split_morphism({{"mu", {"brk", 1}}}, As,
                                     builtin_presentation("3Lie"), arity).ok());
  CHECK_FALSE(induced_split_morphism({}, As, As, arity).ok());
  CHECK_FALSE(induced_split_morphism({{"brk", {"mu", 1}}}, Lie, As, arity).ok());

  // equivariance failure: the skew bracket cannot map to a basis vector of
  // the two-sided product pair
  OperadPresentation S;
  S.name = "SymAs";
  S.symmetric = true;
  S.alphabet = {{"a", 2}, {"b", 2}};
  S.actions = {{"a", ActionTable{2, {{"b", 1}}}}, {"b", ActionTable{2, {{"a", 1}}}}};
  TreePoly assoc = TreePoly(at_slot("a", {3}, 1, corolla("a", {1, 2}))) -
                   TreePoly(at_slot("a", {1}, 2, corolla("a", {2, 3})));
  S.relations = {normal_form(assoc, &S.actions)};
  r = induced_split_morphism({{"brk", {"a", 1}}}, Lie, S, arity);
  CHECK_FALSE(r.ok());
  REQUIRE(r.first_failure() != nullptr);
  CHECK(r.first_failure()->label == "equivariance");
}

TEST_CASE("restriction kills exactly the parts outside the smaller configuration") {
  Configuration arity = builtin_config(ConfigKind::arity);
  Configuration power = builtin_config(ConfigKind::power);
  Configuration cap2 = builtin_config(ConfigKind::capped, 2);

  OperadPresentation As = builtin_presentation("As");
  Report r = restriction_morphism(As, arity, power);
  INFO(report_brief(r));
  CHECK(r.ok());
  CHECK(r.checks.size() == 1 + 7);  // containment plus one check per part of C'_3

  // Between capped(2) and power the map does not exist: the configurations
  // agree at arity 2, so nothing is killed, and the full-set splitting of
  // associativity survives as dot-associativity, which the six capped
  // splittings cannot span (none of them touches a doubly-dotted tree).
  r = restriction_morphism(As, cap2, power);
  CHECK_FALSE(r.ok());
  REQUIRE(r.first_failure() != nullptr);
  CHECK(r.first_failure()->label == "relation 1, J={1,2,3}");

  CHECK_FALSE(restriction_morphism(As, power, arity).ok());

  r = restriction_morphism(builtin_presentation("Lie"), arity, power);
  INFO(report_brief(r));
  CHECK(r.ok());

  r = restriction_morphism(builtin_presentation("PAs", 3), arity, power);
  INFO(report_brief(r));
  CHECK(r.ok());
}
