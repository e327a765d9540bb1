#pragma once
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "opforge/config.hpp"
#include "opforge/poly.hpp"
#include "opforge/presentation.hpp"
#include "opforge/rational.hpp"
#include "opforge/report.hpp"
#include "opforge/splitting.hpp"
#include "opforge/tree.hpp"

namespace opforge {

// The adjoined unary operator symbol. Fixed rather than configurable: trees
// mixing several operators are out of scope, and a fixed name keeps the
// rendered output stable.
inline const std::string& rb_operator_symbol() {
  static const std::string s = "P";
  return s;
}

// Base alphabet plus the operator symbol. The base must be operator-free:
// exactly one unary symbol may live in a tree alphabet, and it is this one.
inline Alphabet rb_alphabet(const Alphabet& base) {
  Alphabet out;
  for (const Generator& g : base.gens()) {
    if (g.unary || g.arity < 2)
      throw std::invalid_argument("rb_alphabet: base alphabet already carries the unary symbol '" +
                                  g.id + "'");
    if (g.id == rb_operator_symbol())
      throw std::invalid_argument("rb_alphabet: base alphabet reserves the operator name '" +
                                  rb_operator_symbol() + "'");
    out.add(g);
  }
  out.add({rb_operator_symbol(), 1, true});
  return out;
}

namespace detail {

inline Tree wrap_op(Tree t) {
  return Tree::vertex(rb_operator_symbol(), {std::move(t)});
}

}  // namespace detail

// Defining relations of a weight-lambda operator, one polynomial per
// generator w of arity n:
//
//   w(P(1),...,P(n)) - sum_{I in C_n} lambda^{|I|-1} P(w(a_1,...,a_n)),
//
// where a_i is the bare leaf i for i in I and P(i) otherwise. For the arity
// family every part is a singleton and lambda never enters; for the power
// family the full part contributes the classical lambda-weighted term.
inline std::vector<TreePoly> rb_relations(const OperadPresentation& P, const Configuration& C,
                                          const Rat& weight) {
  ClosureReport cl = validate_closure(C);
  if (!cl.valid) throw std::invalid_argument("rb_relations: " + cl.str());
  std::vector<TreePoly> out;
  for (const Generator& g : P.alphabet.gens()) {
    const int n = g.arity;
    if (n > C.n_max())
      throw std::invalid_argument("rb_relations: configuration stops at n_max=" +
                                  std::to_string(C.n_max()) + ", below arity of '" + g.id + "'");
    TreePoly r;
    std::vector<Tree> wrapped;
    for (int i = 1; i <= n; ++i) wrapped.push_back(detail::wrap_op(Tree::leaf(i)));
    r.add(Tree::vertex(g.id, std::move(wrapped)), 1);
    for (const std::vector<int>& I : C.level(n)) {
      std::set<int> in(I.begin(), I.end());
      std::vector<Tree> args;
      for (int i = 1; i <= n; ++i)
        args.push_back(in.count(i) ? Tree::leaf(i) : detail::wrap_op(Tree::leaf(i)));
      r.add(detail::wrap_op(Tree::vertex(g.id, std::move(args))),
            -rat_pow(weight, static_cast<unsigned>(I.size() - 1)));
    }
    out.push_back(std::move(r));
  }
  return out;
}

// Interprets a split vertex (w, e_I) as the base generator w with the
// operator applied to every argument position off I. Children are handled
// recursively, so a split tree maps to an operator-decorated tree over
// rb_alphabet of the base.
inline Tree xi_tree(const Tree& t, const SplitAlphabet& SA) {
  if (t.is_leaf()) return t;
  auto it = SA.part_of.find(t.gen());
  if (it == SA.part_of.end())
    throw std::invalid_argument("xi: '" + t.gen() + "' is not a split-alphabet generator");
  const SplitPart& sp = it->second;
  std::set<int> in(sp.part.begin(), sp.part.end());
  std::vector<Tree> kids;
  for (int j = 1; j <= t.arity(); ++j) {
    Tree k = xi_tree(t.children()[static_cast<size_t>(j - 1)], SA);
    kids.push_back(in.count(j) ? std::move(k) : detail::wrap_op(std::move(k)));
  }
  return Tree::vertex(sp.base, std::move(kids));
}

// Split vertices decorate their inputs with distinct operator patterns, so
// distinct trees stay distinct and coefficients carry over term by term.
inline TreePoly xi(const TreePoly& p, const SplitAlphabet& SA) {
  TreePoly out;
  for (const auto& [t, c] : p.terms()) out.add(xi_tree(t, SA), c);
  return out;
}

namespace detail {

// Operator count on the root-to-leaf path of every leaf, by label.
inline void op_depths(const Tree& t, int above, std::map<int, int>& out) {
  if (t.is_leaf()) {
    out[t.label()] = above;
    return;
  }
  const bool is_op = t.gen() == rb_operator_symbol();
  for (const Tree& k : t.children()) op_depths(k, above + (is_op ? 1 : 0), out);
}

}  // namespace detail

// Shape invariants of xi applied to a one-tree splitting: every term of
// xi(Sp_J(t)) keeps the leaf set of t, carries the operator on the path to a
// leaf exactly when that leaf is off J, and has arity(root) - |J meet root|
// operator children at the root. Checked exhaustively over all decorated
// trees with up to leaf_max leaves and all parts J in the configuration.
inline Report check_xi_split_shape(const OperadPresentation& P, const Configuration& C,
                                   int leaf_max) {
  Report rep("xi of split trees: " + P.name + " along " + C.name());
  SplitAlphabet SA = split_alphabet(P, C);
  const int top = std::min(leaf_max, C.n_max());
  for (int n = 2; n <= top; ++n) {
    std::vector<Tree> trees = enumerate_decorated_trees(n, P.alphabet);
    for (const std::vector<int>& J : C.level(n)) {
      std::set<int> js(J.begin(), J.end());
      std::string label = "n=" + std::to_string(n) + " J={";
      for (int x : J) label += std::to_string(x) + (x == J.back() ? "" : ",");
      label += "}";
      std::string bad;
      int terms = 0;
      for (const Tree& t : trees) {
        std::set<int> mt = meet(js, t);
        const int root_ops = t.arity() - static_cast<int>(mt.size());
        TreePoly q = split_tree(t, js, C, SA);
        for (const auto& [u, c] : xi(q, SA).terms()) {
          (void)c;
          ++terms;
          if (u.leaf_set() != t.leaf_set()) {
            bad = "leaf set changed: " + t.str() + " -> " + u.str();
            break;
          }
          int ops = 0;
          for (const Tree& k : u.children())
            ops += !k.is_leaf() && k.gen() == rb_operator_symbol();
          if (ops != root_ops) {
            bad = "root has " + std::to_string(ops) + " operator children, expected " +
                  std::to_string(root_ops) + ": " + t.str() + " -> " + u.str();
            break;
          }
          std::map<int, int> depth;
          detail::op_depths(u, 0, depth);
          for (const auto& [leaf, d] : depth)
            if ((d == 0) != (js.count(leaf) > 0)) {
              bad = "leaf " + std::to_string(leaf) + " sits under " + std::to_string(d) +
                    " operators: " + t.str() + " -> " + u.str();
              break;
            }
          if (!bad.empty()) break;
        }
        if (!bad.empty()) break;
      }
      if (bad.empty())
        rep.add_pass(label + " (" + std::to_string(terms) + " terms)");
      else
        rep.add_fail(label, bad);
    }
  }
  return rep;
}

}  // namespace opforge
