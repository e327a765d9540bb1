#pragma once
#include <map>
#include <set>
#include <string>
#include <vector>

#include "opforge/action.hpp"
#include "opforge/poly.hpp"
#include "opforge/report.hpp"
#include "opforge/span.hpp"
#include "opforge/tree.hpp"

namespace opforge {

// Generators with an optional signed S_n-action plus locally homogeneous tree
// relations. Symmetric presentations keep symmetry laws (skew brackets etc.)
// in the action tables, never as relations; `absorbed` records which displayed
// laws were folded in that way, for reports.
struct OperadPresentation {
  std::string name;
  bool symmetric = false;
  Alphabet alphabet;
  ActionSet actions;
  std::vector<TreePoly> relations;
  std::vector<std::string> absorbed;

  const ActionSet* action_ptr() const { return symmetric ? &actions : nullptr; }
};

inline TreePoly relabel_poly(const TreePoly& p, const Perm& sigma) {
  TreePoly out;
  for (const auto& [t, c] : p.terms()) out.add(relabel_leaves(t, sigma), c);
  return out;
}

// Scale so the first term (in term order) has coefficient 1; used to compare
// polys up to a scalar.
inline TreePoly monic(const TreePoly& p) {
  if (p.empty()) return p;
  Rat lead = p.terms().begin()->second;
  TreePoly out = p;
  out *= Rat(1) / lead;
  return out;
}

inline Report validate(const OperadPresentation& P) {
  Report rep{"validate " + P.name};
  if (P.alphabet.size() == 0) {
    rep.add_fail("alphabet nonempty", "no generators");
    return rep;
  }
  if (P.symmetric) {
    bool tables_ok = true;
    for (const Generator& g : P.alphabet.gens()) {
      if (g.unary) continue;
      auto it = P.actions.find(g.id);
      if (it == P.actions.end()) {
        rep.add_fail("action tables total", "generator " + g.id + " has no table");
        tables_ok = false;
      } else if (it->second.arity != g.arity) {
        rep.add_fail("action tables total", "table arity mismatch on " + g.id);
        tables_ok = false;
      }
    }
    for (const auto& [gid, tab] : P.actions) {
      (void)tab;
      if (!P.alphabet.find(gid)) {
        rep.add_fail("action tables total", "table for unknown generator " + gid);
        tables_ok = false;
      }
    }
    if (tables_ok) {
      if (auto issue = validate_actions(P.actions))
        rep.add_fail("action tables consistent", issue->gen + ": " + issue->detail);
      else
        rep.add_pass("action tables consistent");
    }
  } else if (!P.actions.empty()) {
    rep.add_fail("nonsymmetric has no actions",
                 std::to_string(P.actions.size()) + " tables present");
  }

  int idx = 0;
  for (const TreePoly& r : P.relations) {
    std::string label = "relation " + std::to_string(idx++);
    if (r.empty()) {
      rep.add_fail(label + " nonzero", "zero polynomial stored");
      continue;
    }
    if (!r.homogeneous()) {
      rep.add_fail(label + " homogeneous", "terms with different leaf sets");
      continue;
    }
    int n = r.arity();
    std::set<int> want;
    for (int i = 1; i <= n; ++i) want.insert(i);
    if (r.terms().begin()->first.leaf_set() != want) {
      rep.add_fail(label + " labels 1..n", "labels are not exactly 1.." + std::to_string(n));
      continue;
    }
    bool trees_ok = true;
    for (const auto& [t, c] : r.terms()) {
      (void)c;
      try {
        validate_tree(P.alphabet, t);
      } catch (const std::exception& e) {
        rep.add_fail(label + " trees over alphabet", e.what());
        trees_ok = false;
        break;
      }
      if (!P.symmetric) {
        std::vector<int> labs = t.leaf_labels();
        for (int i = 0; i < n; ++i)
          if (labs[i] != i + 1) {
            rep.add_fail(label + " planar labels", "term " + t.str() +
                                                       " is not labeled 1..n left to right");
            trees_ok = false;
            break;
          }
        if (!trees_ok) break;
      }
    }
    if (!trees_ok) continue;
    if (normal_form(r, P.action_ptr()) != r)
      rep.add_fail(label + " in normal form", r.str());
    else
      rep.add_pass(label);
  }
  return rep;
}

// All S_n-relabelings of r in normal form, deduplicated up to scalar.
inline std::vector<TreePoly> relation_orbit(const OperadPresentation& P, const TreePoly& r) {
  if (!P.symmetric)
    throw std::invalid_argument("relation_orbit: presentation " + P.name + " is nonsymmetric");
  if (r.empty()) return {};
  int n = r.arity();
  std::set<TreePoly> seen;
  for (const Perm& sigma : all_perms(n)) {
    TreePoly q = normal_form(relabel_poly(r, sigma), &P.actions);
    if (!q.empty()) seen.insert(monic(q));
  }
  return std::vector<TreePoly>(seen.begin(), seen.end());
}

// Relations closed under relabeling (symmetric case); the stored list as-is
// for nonsymmetric presentations. This is the span-generating set used by the
// comparison checks.
inline std::vector<TreePoly> orbit_closed_relations(const OperadPresentation& P) {
  if (!P.symmetric) return P.relations;
  std::set<TreePoly> seen;
  for (const TreePoly& r : P.relations)
    for (TreePoly& q : relation_orbit(P, r)) seen.insert(std::move(q));
  return std::vector<TreePoly>(seen.begin(), seen.end());
}

namespace detail {
inline int count_vertices_with(const Tree& t, const std::string& gid) {
  if (t.is_leaf()) return 0;
  int c = t.gen() == gid ? 1 : 0;
  for (const Tree& k : t.children()) c += count_vertices_with(k, gid);
  return c;
}
}  // namespace detail

// Spanning set of the n-leaf component of the ideal generated by P's
// relations: every composite with exactly one relation factor and free
// corollas elsewhere, relabel-closed when symmetric. Used for membership
// tests (is this poly a consequence of the relations at n leaves?).
inline std::vector<TreePoly> ideal_component(const OperadPresentation& P, int n) {
  if (n > 7) throw std::invalid_argument("ideal_component: n > 7 not supported");
  const std::string hole = "_hole";
  std::map<std::string, TreePoly> base_map;
  for (const Generator& g : P.alphabet.gens()) {
    std::vector<Tree> kids;
    for (int i = 1; i <= g.arity; ++i) kids.push_back(Tree::leaf(i));
    base_map[g.id] = TreePoly(Tree::vertex(g.id, std::move(kids)));
  }

  std::set<TreePoly> out;
  for (const TreePoly& r : P.relations) {
    if (r.empty()) continue;
    int m = r.arity();
    if (m > n) continue;
    Alphabet ext;
    for (const Generator& g : P.alphabet.gens()) ext.add(g);
    ext.add(Generator{hole, m, m == 1});
    std::map<std::string, TreePoly> gmap = base_map;
    gmap[hole] = r;
    for (const Tree& ctx : enumerate_decorated_trees(n, ext)) {
      if (detail::count_vertices_with(ctx, hole) != 1) continue;
      TreePoly q = normal_form(substitute_generators(TreePoly(ctx), gmap), P.action_ptr());
      if (q.empty()) continue;
      if (!P.symmetric) {
        out.insert(monic(q));
        continue;
      }
      for (const Perm& sigma : all_perms(n)) {
        TreePoly qs = normal_form(relabel_poly(q, sigma), &P.actions);
        if (!qs.empty()) out.insert(monic(qs));
      }
    }
  }
  return std::vector<TreePoly>(out.begin(), out.end());
}

// Rename generators everywhere (alphabet, action tables, relations). The map
// must cover every generator and stay injective.
inline OperadPresentation rename_generators(const OperadPresentation& P,
                                            const std::map<std::string, std::string>& names) {
  auto img = [&](const std::string& id) {
    auto it = names.find(id);
    if (it == names.end())
      throw std::invalid_argument("rename_generators: no image for " + id);
    return it->second;
  };
  std::set<std::string> targets;
  for (const auto& [from, to] : names) {
    (void)from;
    if (!targets.insert(to).second)
      throw std::invalid_argument("rename_generators: duplicate target " + to);
  }
  OperadPresentation Q;
  Q.name = P.name;
  Q.symmetric = P.symmetric;
  Q.absorbed = P.absorbed;
  for (const Generator& g : P.alphabet.gens())
    Q.alphabet.add(Generator{img(g.id), g.arity, g.unary});
  for (const auto& [gid, tab] : P.actions) {
    ActionTable t2{tab.arity, {}};
    for (const auto& [tgt, s] : tab.rows) t2.rows.emplace_back(img(tgt), s);
    Q.actions[img(gid)] = std::move(t2);
  }
  auto rename_tree = [&](const Tree& t, auto&& self) -> Tree {
    if (t.is_leaf()) return t;
    std::vector<Tree> kids;
    for (const Tree& k : t.children()) kids.push_back(self(k, self));
    return Tree::vertex(img(t.gen()), std::move(kids));
  };
  for (const TreePoly& r : P.relations) {
    TreePoly q;
    for (const auto& [t, c] : r.terms()) q.add(rename_tree(t, rename_tree), c);
    Q.relations.push_back(std::move(q));
  }
  return Q;
}

inline TreePoly rename_poly(const TreePoly& p, const std::map<std::string, std::string>& names) {
  auto rename_tree = [&](const Tree& t, auto&& self) -> Tree {
    if (t.is_leaf()) return t;
    std::vector<Tree> kids;
    for (const Tree& k : t.children()) kids.push_back(self(k, self));
    auto it = names.find(t.gen());
    return Tree::vertex(it == names.end() ? t.gen() : it->second, std::move(kids));
  };
  TreePoly out;
  for (const auto& [t, c] : p.terms()) out.add(rename_tree(t, rename_tree), c);
  return out;
}

}  // namespace opforge
