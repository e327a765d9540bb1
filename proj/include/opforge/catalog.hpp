#pragma once
#include <string>
#include <vector>

#include "opforge/presentation.hpp"

namespace opforge {
namespace catdet {

inline Tree corolla(const std::string& g, const std::vector<int>& labs) {
  std::vector<Tree> kids;
  kids.reserve(labs.size());
  for (int l : labs) kids.push_back(Tree::leaf(l));
  return Tree::vertex(g, std::move(kids));
}

// g(a_1,...,a_{pos-1}, t, a_pos,...): outer corolla with `t` in slot pos
// (1-based) and leaf labels `around` filling the remaining slots in order.
inline Tree at_slot(const std::string& g, const std::vector<int>& around, int pos,
                    const Tree& t) {
  std::vector<Tree> kids;
  kids.reserve(around.size() + 1);
  int j = 0;
  for (int slot = 1; slot <= static_cast<int>(around.size()) + 1; ++slot) {
    if (slot == pos)
      kids.push_back(t);
    else
      kids.push_back(Tree::leaf(around[j++]));
  }
  return Tree::vertex(g, std::move(kids));
}

inline TreePoly at_slot(const std::string& g, const std::vector<int>& around, int pos,
                        const TreePoly& inner) {
  TreePoly out;
  for (const auto& [t, c] : inner.terms()) out.add(at_slot(g, around, pos, t), c);
  return out;
}

// Sum of corollas over several operation names, same argument labels.
inline TreePoly star_corolla(const std::vector<std::string>& gens,
                             const std::vector<int>& labs) {
  TreePoly out;
  for (const std::string& g : gens) out += TreePoly(corolla(g, labs));
  return out;
}

inline std::vector<int> range(int from, int to) {
  std::vector<int> v;
  for (int i = from; i <= to; ++i) v.push_back(i);
  return v;
}

// Skew action: g^sigma = sgn(sigma) g for every adjacent transposition.
inline ActionSet skew_action(const std::string& g, int n) {
  ActionTable t{n, {}};
  for (int i = 1; i < n; ++i) t.rows.emplace_back(g, -1);
  return {{g, t}};
}

// Orbit-basis action g_j^{s_i} = -g_{s_i(j)} on generators ids[0..n-1]
// (ids[j-1] plays the role of the part {j}).
inline ActionSet orbit_action(const std::vector<std::string>& ids) {
  int n = static_cast<int>(ids.size());
  ActionSet out;
  for (int j = 1; j <= n; ++j) {
    ActionTable t{n, {}};
    for (int i = 1; i < n; ++i) {
      int img = (j == i) ? i + 1 : (j == i + 1 ? i : j);
      t.rows.emplace_back(ids[img - 1], -1);
    }
    out[ids[j - 1]] = std::move(t);
  }
  return out;
}

// Cyclic sum {a_i,...,a_n,a_1,...,a_{i-1}} with the sign (-1)^{(1+i)(n+1-i)}
// attached to the i-th summand; all +1 for n = 3.
inline TreePoly cyclic_sum(const std::string& g, const std::vector<int>& args) {
  int n = static_cast<int>(args.size());
  TreePoly out;
  for (int i = 1; i <= n; ++i) {
    std::vector<int> rot;
    for (int k = 0; k < n; ++k) rot.push_back(args[(i - 1 + k) % n]);
    int sign = ((1 + i) * (n + 1 - i)) % 2 == 0 ? 1 : -1;
    out.add(corolla(g, rot), sign);
  }
  return out;
}

}  // namespace catdet

namespace catdet {

inline OperadPresentation make_As() {
  OperadPresentation P;
  P.name = "As";
  P.alphabet = {{"mu", 2}};
  TreePoly r(at_slot("mu", {3}, 1, Tree(corolla("mu", {1, 2}))));
  r -= TreePoly(at_slot("mu", {1}, 2, Tree(corolla("mu", {2, 3}))));
  P.relations = {r};
  return P;
}

inline OperadPresentation make_Dend(bool with_dot) {
  OperadPresentation P;
  P.name = with_dot ? "TriDend" : "Dend";
  P.alphabet = {{"prec", 2}, {"succ", 2}};
  if (with_dot) P.alphabet.add({"dot", 2});
  std::vector<std::string> star = {"prec", "succ"};
  if (with_dot) star.push_back("dot");
  auto in1 = [&](const std::string& outer, const TreePoly& inner) {
    return at_slot(outer, std::vector<int>{3}, 1, inner);
  };
  auto in2 = [&](const std::string& outer, const TreePoly& inner) {
    return at_slot(outer, std::vector<int>{1}, 2, inner);
  };
  TreePoly c12 = star_corolla(star, {1, 2}), c23 = star_corolla(star, {2, 3});
  TreePoly prec12(corolla("prec", {1, 2})), succ12(corolla("succ", {1, 2}));
  TreePoly prec23(corolla("prec", {2, 3})), succ23(corolla("succ", {2, 3}));
  // (x < y) < z = x < (y * z);  (x > y) < z = x > (y < z);  (x * y) > z = x > (y > z)
  P.relations.push_back(in1("prec", prec12) - in2("prec", c23));
  P.relations.push_back(in1("prec", succ12) - in2("succ", prec23));
  P.relations.push_back(in1("succ", c12) - in2("succ", succ23));
  if (with_dot) {
    TreePoly dot12(corolla("dot", {1, 2})), dot23(corolla("dot", {2, 3}));
    // (x . y) < z = x . (y < z);  (x < y) . z = x . (y > z);  (x > y) . z = x > (y . z)
    P.relations.push_back(in1("prec", dot12) - in2("dot", prec23));
    P.relations.push_back(in1("dot", prec12) - in2("dot", succ23));
    P.relations.push_back(in1("dot", succ12) - in2("succ", dot23));
    // (x . y) . z = x . (y . z)
    P.relations.push_back(in1("dot", dot12) - in2("dot", dot23));
  }
  return P;
}

// op(x_1,...,op(x_pos,...,x_{pos+n-1}),...,x_{2n-1}), pos 1-based.
inline Tree nested_assoc(const std::string& g, int n, int pos) {
  std::vector<int> around;
  for (int i = 1; i < pos; ++i) around.push_back(i);
  for (int i = pos + n; i <= 2 * n - 1; ++i) around.push_back(i);
  return at_slot(g, around, pos, corolla(g, range(pos, pos + n - 1)));
}

inline OperadPresentation make_PAs(int n) {
  OperadPresentation P;
  P.name = "PAs" + std::to_string(n);
  P.alphabet = {{"op", n}};
  TreePoly r;
  for (int i = 0; i < n; ++i)
    r.add(nested_assoc("op", n, i + 1), (i * (n - 1)) % 2 == 0 ? 1 : -1);
  P.relations = {r};
  return P;
}

inline OperadPresentation make_TAs(int n) {
  OperadPresentation P;
  P.name = "TAs" + std::to_string(n);
  P.alphabet = {{"op", n}};
  for (int j = 2; j <= n; ++j) {
    TreePoly r(nested_assoc("op", n, 1));
    r -= TreePoly(nested_assoc("op", n, j));
    P.relations.push_back(std::move(r));
  }
  return P;
}

inline OperadPresentation make_Lie() {
  OperadPresentation P;
  P.name = "Lie";
  P.symmetric = true;
  P.alphabet = {{"brk", 2}};
  P.actions = skew_action("brk", 2);
  P.absorbed = {"[x1,x2] = -[x2,x1] carried by the action table"};
  // [[x1,x2],x3] + [[x2,x3],x1] + [[x3,x1],x2] = 0
  TreePoly r(at_slot("brk", {3}, 1, Tree(corolla("brk", {1, 2}))));
  r += TreePoly(at_slot("brk", {1}, 1, Tree(corolla("brk", {2, 3}))));
  r += TreePoly(at_slot("brk", {2}, 1, Tree(corolla("brk", {3, 1}))));
  P.relations = {normal_form(r, &P.actions)};
  return P;
}

// Right pre-Lie over the orbit basis pl1, pl2 = -pl1^{(12)}: with x.y :=
// pl1(x,y), the relation reads (x.y).z - x.(y.z) = (x.z).y - x.(z.y).
inline OperadPresentation make_PreLie() {
  OperadPresentation P;
  P.name = "PreLie";
  P.symmetric = true;
  P.alphabet = {{"pl1", 2}, {"pl2", 2}};
  P.actions = orbit_action({"pl1", "pl2"});
  P.absorbed = {"pl2(x,y) = -pl1(y,x): the transposed product is a basis vector"};
  TreePoly r(at_slot("pl1", {3}, 1, Tree(corolla("pl1", {1, 2}))));
  r -= TreePoly(at_slot("pl1", {1}, 2, Tree(corolla("pl1", {2, 3}))));
  r -= TreePoly(at_slot("pl1", {2}, 1, Tree(corolla("pl1", {1, 3}))));
  r += TreePoly(at_slot("pl1", {1}, 2, Tree(corolla("pl1", {3, 2}))));
  P.relations = {normal_form(r, &P.actions)};
  return P;
}

// Orbit basis po1, po2 = -po1^{(12)}, po3 skew: with x o y := po1(x,y) and
// [x,y] := po3(x,y), the three relations are the Jacobi identity for [.,.],
// x o [y,z] = (x o y) o z - x o (y o z) - (x o z) o y + x o (z o y), and
// [x,y] o z = [x o z, y] + [x, y o z].
inline OperadPresentation make_PostLie() {
  OperadPresentation P;
  P.name = "PostLie";
  P.symmetric = true;
  P.alphabet = {{"po1", 2}, {"po2", 2}, {"po3", 2}};
  ActionSet a = orbit_action({"po1", "po2"});
  ActionSet s = skew_action("po3", 2);
  a.insert(s.begin(), s.end());
  P.actions = std::move(a);
  P.absorbed = {"po2(x,y) = -po1(y,x); po3 is the skew bracket"};
  TreePoly a1(at_slot("po1", {3}, 1, Tree(corolla("po1", {1, 2}))));
  a1 -= TreePoly(at_slot("po1", {1}, 2, Tree(corolla("po1", {2, 3}))));
  a1 -= TreePoly(at_slot("po1", {1}, 2, Tree(corolla("po2", {2, 3}))));
  a1 -= TreePoly(at_slot("po1", {1}, 2, Tree(corolla("po3", {2, 3}))));
  a1 -= TreePoly(at_slot("po1", {2}, 1, Tree(corolla("po1", {1, 3}))));
  TreePoly a2(at_slot("po3", {3}, 1, Tree(corolla("po2", {1, 2}))));
  a2 -= TreePoly(at_slot("po2", {1}, 2, Tree(corolla("po3", {2, 3}))));
  a2 -= TreePoly(at_slot("po3", {2}, 1, Tree(corolla("po2", {1, 3}))));
  TreePoly a3(at_slot("po3", {3}, 1, Tree(corolla("po3", {1, 2}))));
  a3 -= TreePoly(at_slot("po3", {1}, 2, Tree(corolla("po3", {2, 3}))));
  a3 -= TreePoly(at_slot("po3", {2}, 1, Tree(corolla("po3", {1, 3}))));
  P.relations = {normal_form(a1, &P.actions), normal_form(a2, &P.actions),
                 normal_form(a3, &P.actions)};
  return P;
}

inline OperadPresentation make_3Lie() {
  OperadPresentation P;
  P.name = "3Lie";
  P.symmetric = true;
  P.alphabet = {{"brk", 3}};
  P.actions = skew_action("brk", 3);
  P.absorbed = {"[x1,x2,x3] is skew-symmetric: carried by the action table"};
  // [[1,2,3],4,5] = [[1,4,5],2,3] + [1,[2,4,5],3] + [1,2,[3,4,5]]
  TreePoly r(at_slot("brk", {4, 5}, 1, Tree(corolla("brk", {1, 2, 3}))));
  r -= TreePoly(at_slot("brk", {2, 3}, 1, Tree(corolla("brk", {1, 4, 5}))));
  r -= TreePoly(at_slot("brk", {1, 3}, 2, Tree(corolla("brk", {2, 4, 5}))));
  r -= TreePoly(at_slot("brk", {1, 2}, 3, Tree(corolla("brk", {3, 4, 5}))));
  P.relations = {normal_form(r, &P.actions)};
  return P;
}

inline OperadPresentation make_nLie(int n) {
  OperadPresentation P;
  P.name = "nLie" + std::to_string(n);
  P.symmetric = true;
  P.alphabet = {{"brk", n}};
  P.actions = skew_action("brk", n);
  P.absorbed = {"the n-ary bracket is skew-symmetric: carried by the action table"};
  // [[x1..xn],x_{n+1}..x_{2n-1}] = sum_i [x1,..,[xi,x_{n+1},..,x_{2n-1}],..,xn]
  TreePoly r(at_slot("brk", range(n + 1, 2 * n - 1), 1, corolla("brk", range(1, n))));
  for (int i = 1; i <= n; ++i) {
    std::vector<int> inner = {i};
    for (int k = n + 1; k <= 2 * n - 1; ++k) inner.push_back(k);
    std::vector<int> around;
    for (int k = 1; k <= n; ++k)
      if (k != i) around.push_back(k);
    r -= TreePoly(at_slot("brk", around, i, corolla("brk", inner)));
  }
  P.relations = {normal_form(r, &P.actions)};
  return P;
}

inline OperadPresentation make_GenLie3() {
  OperadPresentation P;
  P.name = "GenLie3";
  P.symmetric = true;
  P.alphabet = {{"brk", 3}};
  P.actions = skew_action("brk", 3);
  P.absorbed = {"[x1,x2,x3] is skew-symmetric: carried by the action table"};
  // the 10-term alternating sum [[xa,xb,xc],xd,xe]
  struct Term {
    int a, b, c, d, e, sign;
  };
  std::vector<Term> terms = {
      {1, 2, 3, 4, 5, 1},  {1, 2, 4, 3, 5, -1}, {1, 3, 4, 2, 5, 1},  {2, 3, 4, 1, 5, -1},
      {1, 2, 5, 3, 4, 1},  {3, 4, 5, 1, 2, 1},  {1, 3, 5, 2, 4, -1}, {2, 4, 5, 1, 3, -1},
      {1, 4, 5, 2, 3, 1},  {2, 3, 5, 1, 4, 1},
  };
  TreePoly r;
  for (const Term& t : terms)
    r.add(at_slot("brk", {t.d, t.e}, 1, corolla("brk", {t.a, t.b, t.c})), t.sign);
  P.relations = {normal_form(r, &P.actions)};
  return P;
}

inline OperadPresentation make_3PreLie() {
  OperadPresentation P;
  P.name = "3PreLie";
  P.symmetric = true;
  P.alphabet = {{"tp1", 3}, {"tp2", 3}, {"tp3", 3}};
  P.actions = orbit_action({"tp1", "tp2", "tp3"});
  P.absorbed = {"{x1,x2,x3} = -{x1,x3,x2} carried by the action of (23) on tp1"};
  auto circ = [&](int a, int b, int c) {
    return cyclic_sum("tp1", {a, b, c});
  };
  // {{1,2,3},4,5} = {{1,4,5},2,3} + {1,o{2,4,5},3} + {1,2,o{3,4,5}}
  TreePoly r1(at_slot("tp1", {4, 5}, 1, corolla("tp1", {1, 2, 3})));
  r1 -= TreePoly(at_slot("tp1", {2, 3}, 1, corolla("tp1", {1, 4, 5})));
  r1 -= at_slot("tp1", {1, 3}, 2, circ(2, 4, 5));
  r1 -= at_slot("tp1", {1, 2}, 3, circ(3, 4, 5));
  // {4,o{1,2,3},5} = {{4,1,5},2,3} + {{4,2,5},3,1} + {{4,3,5},1,2}
  TreePoly r2 = at_slot("tp1", {4, 5}, 2, circ(1, 2, 3));
  r2 -= TreePoly(at_slot("tp1", {2, 3}, 1, corolla("tp1", {4, 1, 5})));
  r2 -= TreePoly(at_slot("tp1", {3, 1}, 1, corolla("tp1", {4, 2, 5})));
  r2 -= TreePoly(at_slot("tp1", {1, 2}, 1, corolla("tp1", {4, 3, 5})));
  P.relations = {normal_form(r1, &P.actions), normal_form(r2, &P.actions)};
  return P;
}

inline OperadPresentation make_nPreLie(int n) {
  OperadPresentation P;
  P.name = "nPreLie" + std::to_string(n);
  P.symmetric = true;
  std::vector<std::string> ids;
  for (int j = 1; j <= n; ++j) {
    std::string id = "np" + std::to_string(j);
    P.alphabet.add({id, n});
    ids.push_back(id);
  }
  P.actions = orbit_action(ids);
  P.absorbed = {"{x1,..,xn} = sgn(s){x1,x_{s(2)},..,x_{s(n)}} for s fixing 1, via actions"};
  std::vector<int> tail = range(n + 1, 2 * n - 1);
  // {{x1..xn},tail} = {{x1,tail},x2..xn} + sum_{i>=2} {x1,..,o{xi,tail},..,xn}
  TreePoly r1(at_slot("np1", tail, 1, corolla("np1", range(1, n))));
  {
    std::vector<int> inner = {1};
    for (int k : tail) inner.push_back(k);
    r1 -= TreePoly(at_slot("np1", range(2, n), 1, corolla("np1", inner)));
  }
  for (int i = 2; i <= n; ++i) {
    std::vector<int> args = {i};
    for (int k : tail) args.push_back(k);
    std::vector<int> around;
    for (int k = 1; k <= n; ++k)
      if (k != i) around.push_back(k);
    r1 -= at_slot("np1", around, i, cyclic_sum("np1", args));
  }
  // {x_{n+1},o{x1..xn},x_{n+2}..} = sum_i sgn_i {{x_{n+1},xi,x_{n+2}..},x_{i+1}..x_{i-1}}
  std::vector<int> around2 = {n + 1};
  for (int k = n + 2; k <= 2 * n - 1; ++k) around2.push_back(k);
  TreePoly r2 = at_slot("np1", around2, 2, cyclic_sum("np1", range(1, n)));
  for (int i = 1; i <= n; ++i) {
    std::vector<int> inner = {n + 1, i};
    for (int k = n + 2; k <= 2 * n - 1; ++k) inner.push_back(k);
    std::vector<int> around;
    for (int k = i + 1; k <= n; ++k) around.push_back(k);
    for (int k = 1; k < i; ++k) around.push_back(k);
    int sign = ((1 + i) * (n + 1 - i)) % 2 == 0 ? 1 : -1;
    r2.add(at_slot("np1", around, 1, corolla("np1", inner)), -sign);
  }
  P.relations = {normal_form(r1, &P.actions), normal_form(r2, &P.actions)};
  return P;
}

inline OperadPresentation make_GenPreLie3() {
  OperadPresentation P;
  P.name = "GenPreLie3";
  P.symmetric = true;
  P.alphabet = {{"gp1", 3}, {"gp2", 3}, {"gp3", 3}};
  P.actions = orbit_action({"gp1", "gp2", "gp3"});
  P.absorbed = {"{x1,x2,x3} = -{x1,x3,x2} carried by the action of (23) on gp1"};
  auto circ = [&](int a, int b, int c) { return cyclic_sum("gp1", {a, b, c}); };
  auto top = [&](int a, int b, int c, int d, int e) {
    return TreePoly(at_slot("gp1", {d, e}, 1, corolla("gp1", {a, b, c})));
  };
  TreePoly r = top(1, 2, 3, 4, 5);
  r -= top(1, 2, 4, 3, 5);
  r += top(1, 2, 5, 3, 4);
  r += top(1, 3, 4, 2, 5);
  r -= top(1, 3, 5, 2, 4);
  r += top(1, 4, 5, 2, 3);
  r += at_slot("gp1", {1, 5}, 2, circ(2, 3, 4));
  r -= at_slot("gp1", {1, 4}, 2, circ(2, 3, 5));
  r += at_slot("gp1", {1, 3}, 2, circ(2, 4, 5));
  r -= at_slot("gp1", {1, 2}, 2, circ(3, 4, 5));
  P.relations = {normal_form(r, &P.actions)};
  return P;
}

inline OperadPresentation make_PartDend3() {
  OperadPresentation P;
  P.name = "PartDend3";
  P.alphabet = {{"nw", 3}, {"up", 3}, {"ne", 3}};
  std::vector<std::string> star = {"nw", "up", "ne"};
  auto one = [&](const std::string& outer, const std::vector<int>& around, int pos,
                 const std::string& inner, const std::vector<int>& labs) {
    return TreePoly(at_slot(outer, around, pos, corolla(inner, labs)));
  };
  auto all = [&](const std::string& outer, const std::vector<int>& around, int pos,
                 const std::vector<int>& labs) {
    return at_slot(outer, around, pos, star_corolla(star, labs));
  };
  TreePoly p1 = one("nw", {4, 5}, 1, "nw", {1, 2, 3}) + all("nw", {1, 5}, 2, {2, 3, 4}) +
                all("nw", {1, 2}, 3, {3, 4, 5});
  TreePoly p2 = one("nw", {4, 5}, 1, "up", {1, 2, 3}) + one("up", {1, 5}, 2, "nw", {2, 3, 4}) +
                all("up", {1, 2}, 3, {3, 4, 5});
  TreePoly p3 = one("nw", {4, 5}, 1, "ne", {1, 2, 3}) + one("up", {1, 5}, 2, "up", {2, 3, 4}) +
                one("ne", {1, 2}, 3, "nw", {3, 4, 5});
  TreePoly p4 = all("up", {4, 5}, 1, {1, 2, 3}) + one("up", {1, 5}, 2, "ne", {2, 3, 4}) +
                one("ne", {1, 2}, 3, "up", {3, 4, 5});
  TreePoly p5 = all("ne", {4, 5}, 1, {1, 2, 3}) + all("ne", {1, 5}, 2, {2, 3, 4}) +
                one("ne", {1, 2}, 3, "ne", {3, 4, 5});
  P.relations = {p1, p2, p3, p4, p5};
  return P;
}

inline OperadPresentation make_TotDend3() {
  OperadPresentation P;
  P.name = "TotDend3";
  P.alphabet = {{"nw", 3}, {"up", 3}, {"ne", 3}};
  std::vector<std::string> star = {"nw", "up", "ne"};
  auto one = [&](const std::string& outer, const std::vector<int>& around, int pos,
                 const std::string& inner, const std::vector<int>& labs) {
    return TreePoly(at_slot(outer, around, pos, corolla(inner, labs)));
  };
  auto all = [&](const std::string& outer, const std::vector<int>& around, int pos,
                 const std::vector<int>& labs) {
    return at_slot(outer, around, pos, star_corolla(star, labs));
  };
  TreePoly nw_nw1 = one("nw", {4, 5}, 1, "nw", {1, 2, 3});
  TreePoly nw_up1 = one("nw", {4, 5}, 1, "up", {1, 2, 3});
  TreePoly nw_ne1 = one("nw", {4, 5}, 1, "ne", {1, 2, 3});
  TreePoly up_star1 = all("up", {4, 5}, 1, {1, 2, 3});
  TreePoly ne_star1 = all("ne", {4, 5}, 1, {1, 2, 3});
  P.relations = {
      nw_nw1 - all("nw", {1, 5}, 2, {2, 3, 4}),
      nw_nw1 - all("nw", {1, 2}, 3, {3, 4, 5}),
      nw_up1 - one("up", {1, 5}, 2, "nw", {2, 3, 4}),
      nw_up1 - all("up", {1, 2}, 3, {3, 4, 5}),
      nw_ne1 - one("up", {1, 5}, 2, "up", {2, 3, 4}),
      nw_ne1 - one("ne", {1, 2}, 3, "nw", {3, 4, 5}),
      up_star1 - one("up", {1, 5}, 2, "ne", {2, 3, 4}),
      up_star1 - one("ne", {1, 2}, 3, "up", {3, 4, 5}),
      ne_star1 - all("ne", {1, 5}, 2, {2, 3, 4}),
      ne_star1 - one("ne", {1, 2}, 3, "ne", {3, 4, 5}),
  };
  return P;
}

}  // namespace catdet

inline std::vector<std::string> builtin_names() {
  return {"As",     "Dend",    "TriDend", "PAs",       "TAs",       "Lie",
          "PreLie", "PostLie", "3Lie",    "nLie",      "GenLie3",   "3PreLie",
          "nPreLie", "GenPreLie3", "PartDend3", "TotDend3"};
}

// Catalog lookup. `n` selects the member of an n-ary family (PAs, TAs, nLie,
// nPreLie) and must lie in 2..4; other names ignore it.
inline OperadPresentation builtin_presentation(const std::string& name, int n = 0) {
  auto need_n = [&]() {
    if (n < 2 || n > 4)
      throw std::invalid_argument("builtin " + name + " needs a parameter n in 2..4");
  };
  if (name == "As") return catdet::make_As();
  if (name == "Dend") return catdet::make_Dend(false);
  if (name == "TriDend") return catdet::make_Dend(true);
  if (name == "PAs") {
    need_n();
    return catdet::make_PAs(n);
  }
  if (name == "TAs") {
    need_n();
    return catdet::make_TAs(n);
  }
  if (name == "Lie") return catdet::make_Lie();
  if (name == "PreLie") return catdet::make_PreLie();
  if (name == "PostLie") return catdet::make_PostLie();
  if (name == "3Lie") return catdet::make_3Lie();
  if (name == "nLie") {
    need_n();
    return catdet::make_nLie(n);
  }
  if (name == "GenLie3") return catdet::make_GenLie3();
  if (name == "3PreLie") return catdet::make_3PreLie();
  if (name == "nPreLie") {
    need_n();
    return catdet::make_nPreLie(n);
  }
  if (name == "GenPreLie3") return catdet::make_GenPreLie3();
  if (name == "PartDend3") return catdet::make_PartDend3();
  if (name == "TotDend3") return catdet::make_TotDend3();
  throw std::invalid_argument("unknown builtin presentation: " + name);
}

}  // namespace opforge
