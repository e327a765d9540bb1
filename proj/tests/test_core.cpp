#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>
#include <vector>

#include "opforge/action.hpp"
#include "opforge/perm.hpp"
#include "opforge/poly.hpp"
#include "opforge/rational.hpp"
#include "opforge/span.hpp"
#include "opforge/threads.hpp"
#include "opforge/tree.hpp"

using namespace opforge;

TEST_CASE("rationals parse, normalize and print") {
  CHECK(rat_str(rat(1, 2)) == "1/2");
  CHECK(rat_str(rat(2, 4)) == "1/2");
  CHECK(rat_str(rat(-3, 6)) == "-1/2");
  CHECK(rat_str(rat(7, 1)) == "7");
  CHECK(rat_parse("3/4") == rat(3, 4));
  CHECK(rat_parse("-5") == rat(-5, 1));
  CHECK(rat_parse("0/9") == 0);
  CHECK_THROWS(rat_parse("1/0"));
  CHECK(rat_pow(rat(1, 2), 3) == rat(1, 8));
  CHECK(rat_pow(rat(5, 7), 0) == 1);
}

TEST_CASE("permutations compose, invert and sign correctly") {
  Perm id = Perm::identity(4);
  Perm s1 = Perm::transposition(4, 1);
  Perm s2 = Perm::transposition(4, 2);
  CHECK(id.is_identity());
  CHECK(s1(1) == 2);
  CHECK(s1(2) == 1);
  CHECK(s1(3) == 3);
  CHECK(compose(s1, s1).is_identity());
  CHECK(perm_sign(s1) == -1);
  CHECK(perm_sign(compose(s1, s2)) == 1);
  Perm c = compose(s1, s2);  // (a.b)(i) = a(b(i))
  CHECK(c(2) == 3);
  CHECK(c(3) == 1);
  CHECK(compose(c, inverse(c)).is_identity());

  // adjacent_word decomposes into transpositions, leftmost applied last
  Perm sigma({3, 1, 4, 2});
  Perm acc = Perm::identity(4);
  for (int i : adjacent_word(sigma)) acc = compose(acc, Perm::transposition(4, i));
  CHECK(acc.str() == sigma.str());

  std::set<int> J = {1, 3};
  std::set<int> img = apply_perm(sigma, J);
  CHECK(img == std::set<int>{3, 4});

  CHECK(all_perms(4).size() == 24);
}

TEST_CASE("tree construction enforces distinct labels and fixed arity") {
  Tree t = Tree::vertex("mu", {Tree::leaf(1), Tree::leaf(2)});
  CHECK(t.arity() == 2);
  CHECK(t.leaf_count() == 2);
  CHECK(t.str() == "mu(1,2)");
  CHECK_THROWS(Tree::vertex("mu", {Tree::leaf(1), Tree::leaf(1)}));

  Tree big = Tree::vertex("mu", {t, Tree::leaf(3)});
  CHECK(big.leaf_labels() == std::vector<int>{1, 2, 3});
  CHECK(big.min_leaf() == 1);
  CHECK(big.internal_vertex_count() == 2);

  Alphabet A = {{"mu", 2}};
  CHECK_NOTHROW(validate_tree(A, big));
  Tree alien = Tree::vertex("nu", {Tree::leaf(1), Tree::leaf(2)});
  CHECK_THROWS(validate_tree(A, alien));

  Generator mu = *A.find("mu");
  CHECK_THROWS(graft(mu, {Tree::leaf(1)}));
  CHECK(graft(mu, {Tree::leaf(2), Tree::leaf(1)}).str() == "mu(2,1)");
}

TEST_CASE("tree ordering is a strict total order on samples") {
  std::vector<Tree> ts = {
      Tree::vertex("a", {Tree::leaf(1), Tree::leaf(2)}),
      Tree::vertex("b", {Tree::leaf(1), Tree::leaf(2)}),
      Tree::vertex("a", {Tree::leaf(2), Tree::leaf(1)}),
      Tree::vertex("a", {Tree::vertex("a", {Tree::leaf(1), Tree::leaf(2)}), Tree::leaf(3)}),
      Tree::vertex("a", {Tree::leaf(1), Tree::vertex("a", {Tree::leaf(2), Tree::leaf(3)})}),
  };
  for (size_t i = 0; i < ts.size(); ++i)
    for (size_t j = 0; j < ts.size(); ++j) {
      if (i == j) {
        CHECK(ts[i] == ts[j]);
        continue;
      }
      bool lt = ts[i] < ts[j], gt = ts[j] < ts[i];
      CHECK(lt != gt);
    }
}

// Independent count of planar reduced rooted trees by leaves: the
// super-Catalan (little Schroeder) recurrence n*S(n) = 3(2n-3)S(n-1) - (n-3)S(n-2).
static long super_catalan(int n) {
  std::vector<long> s(static_cast<size_t>(n) + 1, 0);
  s[1] = 1;
  if (n >= 2) s[2] = 1;
  for (int k = 3; k <= n; ++k)
    s[static_cast<size_t>(k)] =
        (3 * (2 * k - 3) * s[static_cast<size_t>(k - 1)] - (k - 3) * s[static_cast<size_t>(k - 2)]) / k;
  return s[static_cast<size_t>(n)];
}

static long catalan(int n) {  // binary trees with n+1 leaves
  long c = 1;
  for (int i = 0; i < n; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

TEST_CASE("reduced tree enumeration matches classical counts") {
  std::set<int> all = {2, 3, 4, 5, 6, 7};
  const long expected[] = {1, 1, 3, 11, 45, 197, 903};
  for (int n = 1; n <= 7; ++n) {
    CAPTURE(n);
    long count = static_cast<long>(enumerate_reduced_trees(n, all).size());
    CHECK(count == expected[n - 1]);
    CHECK(count == super_catalan(n));
  }
  for (int n = 1; n <= 7; ++n) {
    CAPTURE(n);
    CHECK(static_cast<long>(enumerate_reduced_trees(n, {2}).size()) == catalan(n - 1));
  }
  // ternary-only: Fuss-Catalan 1, 1, 3, 12 at 1, 3, 5, 7 leaves; none at even counts
  CHECK(enumerate_reduced_trees(3, {3}).size() == 1);
  CHECK(enumerate_reduced_trees(4, {3}).empty());
  CHECK(enumerate_reduced_trees(5, {3}).size() == 3);
  CHECK(enumerate_reduced_trees(7, {3}).size() == 12);
}

TEST_CASE("decorated enumeration multiplies shape counts by vertex choices") {
  Alphabet three = {{"a", 2}, {"b", 2}, {"c", 2}};
  CHECK(enumerate_decorated_trees(3, three).size() == 2 * 9);
  Alphabet mixed = {{"m", 2}, {"t", 3}};
  // 3 leaves: two binary shapes (1 decoration each... 1 binary gen => 1 each) + corolla
  CHECK(enumerate_decorated_trees(3, mixed).size() == 2 * 1 + 1);
  // every enumerated tree is valid and has planar labels 1..n
  for (const Tree& t : enumerate_decorated_trees(4, mixed)) {
    CHECK_NOTHROW(validate_tree(mixed, t));
    std::vector<int> labs = t.leaf_labels();
    for (size_t i = 0; i < labs.size(); ++i) CHECK(labs[i] == static_cast<int>(i) + 1);
  }
}

TEST_CASE("relabeling permutes leaves in place") {
  Tree t = Tree::vertex("mu", {Tree::vertex("mu", {Tree::leaf(1), Tree::leaf(2)}), Tree::leaf(3)});
  Perm sigma({2, 3, 1});
  Tree r = relabel_leaves(t, sigma);
  CHECK(r.str() == "mu(mu(2,3),1)");
  std::map<int, int> partial = {{1, 5}, {2, 1}, {3, 3}};
  CHECK(relabel_leaves(t, partial).str() == "mu(mu(5,1),3)");
}

TEST_CASE("substitution replaces generators simultaneously without label clashes") {
  // template leaves act as slots; images with swapped labels must not collide
  Tree t = Tree::vertex("g", {Tree::leaf(2), Tree::leaf(1)});
  TreePoly flip;
  flip.add(Tree::vertex("h", {Tree::leaf(2), Tree::leaf(1)}), 1);
  std::map<std::string, TreePoly> gmap = {{"g", flip}};
  TreePoly out = substitute_generators(TreePoly(t), gmap);
  REQUIRE(out.size() == 1);
  CHECK(out.terms().begin()->first.str() == "h(1,2)");

  // multilinearity: two-term image on a two-vertex tree gives four terms
  TreePoly two;
  two.add(Tree::vertex("h", {Tree::leaf(1), Tree::leaf(2)}), 1);
  two.add(Tree::vertex("h", {Tree::leaf(2), Tree::leaf(1)}), rat(1, 2));
  Tree nest = Tree::vertex("g", {Tree::vertex("g", {Tree::leaf(1), Tree::leaf(2)}), Tree::leaf(3)});
  TreePoly four = substitute_generators(TreePoly(nest), {{"g", two}});
  CHECK(four.size() == 4);
  Rat total = 0;
  for (const auto& [tree, c] : four.terms()) total += c;
  CHECK(total == rat(9, 4));  // (1 + 1/2)^2
}

static ActionSet sample_actions() {
  ActionSet acts;
  ActionTable brk;
  brk.arity = 3;
  brk.rows = {{"brk", -1}, {"brk", -1}};
  acts["brk"] = brk;
  ActionTable a, b;
  a.arity = 2;
  a.rows = {{"b", -1}};
  b.arity = 2;
  b.rows = {{"a", -1}};
  acts["a"] = a;
  acts["b"] = b;
  return acts;
}

TEST_CASE("normal form orients misordered children with the right sign") {
  ActionSet acts = sample_actions();
  REQUIRE_FALSE(validate_actions(acts).has_value());

  TreePoly p(Tree::vertex("brk", {Tree::leaf(2), Tree::leaf(1), Tree::leaf(3)}));
  TreePoly n = normal_form(p, &acts);
  REQUIRE(n.size() == 1);
  CHECK(n.terms().begin()->first.str() == "brk(1,2,3)");
  CHECK(n.terms().begin()->second == -1);

  TreePoly q(Tree::vertex("brk", {Tree::leaf(1), Tree::leaf(3), Tree::leaf(2)}));
  TreePoly m = normal_form(q, &acts);
  REQUIRE(m.size() == 1);
  CHECK(m.terms().begin()->first.str() == "brk(1,2,3)");
  CHECK(m.terms().begin()->second == -1);

  // orbit pair: a(2,1) = -b(1,2)
  TreePoly r(Tree::vertex("a", {Tree::leaf(2), Tree::leaf(1)}));
  TreePoly s = normal_form(r, &acts);
  REQUIRE(s.size() == 1);
  CHECK(s.terms().begin()->first.str() == "b(1,2)");
  CHECK(s.terms().begin()->second == -1);

  // a cyclic relabeling of the skew corolla: brk(2,3,1) = +brk(1,2,3)
  TreePoly c(Tree::vertex("brk", {Tree::leaf(2), Tree::leaf(3), Tree::leaf(1)}));
  TreePoly cn = normal_form(c, &acts);
  REQUIRE(cn.size() == 1);
  CHECK(cn.terms().begin()->first.str() == "brk(1,2,3)");
  CHECK(cn.terms().begin()->second == 1);

  // without actions the poly is untouched
  CHECK(normal_form(p, nullptr) == p);
}

static Tree random_shape(int n, std::mt19937& rng, int& next_label) {
  if (n == 1) return Tree::leaf(next_label++);
  std::vector<int> arities;
  for (int k = 2; k <= std::min(n, 3); ++k) arities.push_back(k);
  int k = arities[rng() % arities.size()];
  std::vector<int> parts(static_cast<size_t>(k), 1);
  for (int extra = n - k; extra > 0; --extra) ++parts[rng() % parts.size()];
  std::vector<Tree> kids;
  for (int p : parts) kids.push_back(random_shape(p, rng, next_label));
  return Tree::vertex(k == 3 ? "brk" : (rng() % 2 ? "a" : "b"), kids);
}

// Reorder the children at every vertex by a random permutation, replacing the
// decoration via the group action so the result denotes the same element:
// omega(kids) = sign * omega^{pi^{-1}}(kids[pi(1)], ..., kids[pi(k)]).
static Tree scramble_tree(const Tree& t, const ActionCache& cache, std::mt19937& rng, int& sign) {
  if (t.is_leaf()) return t;
  std::vector<Tree> kids;
  kids.reserve(t.children().size());
  for (const Tree& c : t.children()) kids.push_back(scramble_tree(c, cache, rng, sign));
  int k = static_cast<int>(kids.size());
  auto perms = all_perms(k);
  Perm pi = perms[rng() % perms.size()];
  auto [target, s] = cache.act(t.gen(), inverse(pi));
  sign *= s;
  std::vector<Tree> re;
  re.reserve(kids.size());
  for (int j = 1; j <= k; ++j) re.push_back(kids[pi(j) - 1]);
  return Tree::vertex(target, std::move(re));
}

static bool children_sorted_everywhere(const Tree& t) {
  if (t.is_leaf()) return true;
  const auto& kids = t.children();
  for (size_t i = 0; i + 1 < kids.size(); ++i)
    if (kids[i].min_leaf() > kids[i + 1].min_leaf()) return false;
  for (const Tree& c : kids)
    if (!children_sorted_everywhere(c)) return false;
  return true;
}

TEST_CASE("normal form is idempotent and invariant under vertex-level scrambles") {
  ActionSet acts = sample_actions();
  ActionCache cache(&acts);
  std::mt19937 rng(20240817);
  for (int trial = 0; trial < 500; ++trial) {
    int n = 2 + static_cast<int>(rng() % 5);
    int next = 1;
    Tree t = random_shape(n, rng, next);
    int sign = 1;
    Tree u = scramble_tree(t, cache, rng, sign);

    TreePoly nt = normal_form(TreePoly(t), &acts);
    TreePoly nu = normal_form(TreePoly(u), &acts);
    REQUIRE(nt.size() == 1);
    REQUIRE(nu.size() == 1);
    CAPTURE(t.str(), u.str(), sign);
    CHECK(nu == nt * rat(sign));
    CHECK(abs(nt.terms().begin()->second) == 1);
    CHECK(children_sorted_everywhere(nt.terms().begin()->first));
    CHECK(normal_form(nt, &acts) == nt);
    CHECK(normal_form(nu, &acts) == nu);
  }
}

TEST_CASE("polynomial arithmetic and homogeneity") {
  Tree t1 = Tree::vertex("a", {Tree::leaf(1), Tree::leaf(2)});
  Tree t2 = Tree::vertex("b", {Tree::leaf(1), Tree::leaf(2)});
  TreePoly p = TreePoly(t1) + TreePoly(t2) * rat(2, 3);
  CHECK(p.size() == 2);
  CHECK(p.homogeneous());
  CHECK(p.arity() == 2);
  TreePoly z = p - p;
  CHECK(z.empty());

  TreePoly mixed = p;
  mixed.add(Tree::vertex("a", {Tree::vertex("a", {Tree::leaf(1), Tree::leaf(2)}), Tree::leaf(3)}), 1);
  CHECK_FALSE(mixed.homogeneous());

  CHECK(combine({{rat(2, 1), TreePoly(t1)}, {rat(-2, 1), TreePoly(t1)}}).empty());
}

TEST_CASE("span comparison distinguishes equality, containment and incomparability") {
  Tree l = Tree::vertex("mu", {Tree::vertex("mu", {Tree::leaf(1), Tree::leaf(2)}), Tree::leaf(3)});
  Tree r = Tree::vertex("mu", {Tree::leaf(1), Tree::vertex("mu", {Tree::leaf(2), Tree::leaf(3)})});
  TreePoly assoc = TreePoly(l) - TreePoly(r);

  CHECK(span_relate({assoc}, {assoc * rat(-7, 2)}) == SpanRel::equal);
  CHECK(span_relate({assoc}, {TreePoly(l), TreePoly(r)}) == SpanRel::a_in_b);
  CHECK(span_relate({TreePoly(l), TreePoly(r)}, {assoc}) == SpanRel::b_in_a);
  CHECK(span_relate({TreePoly(l)}, {TreePoly(r)}) == SpanRel::incomparable);
  CHECK(span_rank({assoc, TreePoly(l), TreePoly(r)}) == 2);
  CHECK(span_rank({}) == 0);
}

TEST_CASE("parallel blocks cover a range exactly once") {
  const size_t n = 10007;
  std::vector<int> hits(n, 0);
  parallel_blocks(n, [&](size_t b, size_t e) {
    for (size_t i = b; i < e; ++i) ++hits[i];
  });
  for (size_t i = 0; i < n; ++i) REQUIRE(hits[i] == 1);
  CHECK(worker_count() >= 1);
}
