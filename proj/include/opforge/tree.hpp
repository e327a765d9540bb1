#pragma once
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "opforge/perm.hpp"

namespace opforge {

struct Generator {
  std::string id;
  int arity = 2;
  bool unary = false;  // only the adjoined operator symbol has arity 1
};

inline void check_generator(const Generator& g) {
  if (g.id.empty()) throw std::invalid_argument("generator with empty id");
  if (g.unary ? g.arity != 1 : g.arity < 2)
    throw std::invalid_argument("generator " + g.id + ": arity " + std::to_string(g.arity) +
                                (g.unary ? " (unary flag requires arity 1)" : " (must be >= 2)"));
}

class Alphabet {
 public:
  Alphabet() = default;
  Alphabet(std::initializer_list<Generator> gens) {
    for (const auto& g : gens) add(g);
  }
  void add(Generator g) {
    check_generator(g);
    if (by_id_.count(g.id)) throw std::invalid_argument("duplicate generator id: " + g.id);
    by_id_[g.id] = gens_.size();
    gens_.push_back(std::move(g));
  }
  const Generator* find(const std::string& id) const {
    auto it = by_id_.find(id);
    return it == by_id_.end() ? nullptr : &gens_[it->second];
  }
  const Generator& at(const std::string& id) const {
    const Generator* g = find(id);
    if (!g) throw std::invalid_argument("unknown generator: " + id);
    return *g;
  }
  const std::vector<Generator>& gens() const { return gens_; }
  size_t size() const { return gens_.size(); }

 private:
  std::vector<Generator> gens_;
  std::map<std::string, size_t> by_id_;
};

// Planar reduced rooted tree: a leaf carries a positive label, a vertex carries
// a generator id and an ordered child list. Leaf labels are pairwise distinct
// within one tree. Value type; immutable once built.
class Tree {
 public:
  static Tree leaf(int label) {
    if (label < 1) throw std::invalid_argument("leaf label must be positive");
    Tree t;
    t.leaf_ = label;
    return t;
  }
  static Tree vertex(std::string gen_id, std::vector<Tree> children) {
    if (gen_id.empty()) throw std::invalid_argument("vertex with empty generator id");
    if (children.empty()) throw std::invalid_argument("vertex with no children");
    Tree t;
    t.gen_ = std::move(gen_id);
    t.kids_ = std::move(children);
    std::set<int> labs;
    t.collect_labels(labs);
    return t;
  }

  bool is_leaf() const { return leaf_ != 0; }
  int label() const { return leaf_; }
  const std::string& gen() const { return gen_; }
  const std::vector<Tree>& children() const { return kids_; }
  int arity() const { return static_cast<int>(kids_.size()); }

  int leaf_count() const {
    if (is_leaf()) return 1;
    int c = 0;
    for (const Tree& k : kids_) c += k.leaf_count();
    return c;
  }
  // lin(t): leaf labels left to right.
  void leaf_labels(std::vector<int>& out) const {
    if (is_leaf()) {
      out.push_back(leaf_);
      return;
    }
    for (const Tree& k : kids_) k.leaf_labels(out);
  }
  std::vector<int> leaf_labels() const {
    std::vector<int> v;
    leaf_labels(v);
    return v;
  }
  std::set<int> leaf_set() const {
    auto v = leaf_labels();
    return std::set<int>(v.begin(), v.end());
  }
  int min_leaf() const {
    if (is_leaf()) return leaf_;
    int m = kids_[0].min_leaf();
    for (size_t i = 1; i < kids_.size(); ++i) m = std::min(m, kids_[i].min_leaf());
    return m;
  }
  int internal_vertex_count() const {
    if (is_leaf()) return 0;
    int c = 1;
    for (const Tree& k : kids_) c += k.internal_vertex_count();
    return c;
  }

  // Term order: lexicographic on the preorder traversal sequence of
  // (generator id, leaf label) tokens; leaves sort before vertices.
  int compare(const Tree& o) const {
    std::vector<const Tree*> a, b;
    flatten(a);
    o.flatten(b);
    size_t n = std::min(a.size(), b.size());
    for (size_t i = 0; i < n; ++i) {
      const Tree *x = a[i], *y = b[i];
      if (x->is_leaf() != y->is_leaf()) return x->is_leaf() ? -1 : 1;
      if (x->is_leaf()) {
        if (x->leaf_ != y->leaf_) return x->leaf_ < y->leaf_ ? -1 : 1;
      } else {
        if (int c = x->gen_.compare(y->gen_); c != 0) return c < 0 ? -1 : 1;
      }
    }
    return a.size() == b.size() ? 0 : (a.size() < b.size() ? -1 : 1);
  }
  friend bool operator<(const Tree& a, const Tree& b) { return a.compare(b) < 0; }
  friend bool operator==(const Tree& a, const Tree& b) { return a.compare(b) == 0; }
  friend bool operator!=(const Tree& a, const Tree& b) { return a.compare(b) != 0; }

  std::string str() const {
    if (is_leaf()) return std::to_string(leaf_);
    std::string s = gen_ + "(";
    for (size_t i = 0; i < kids_.size(); ++i) s += (i ? "," : "") + kids_[i].str();
    return s + ")";
  }

 private:
  Tree() = default;
  void collect_labels(std::set<int>& labs) const {
    if (is_leaf()) {
      if (!labs.insert(leaf_).second)
        throw std::invalid_argument("duplicate leaf label " + std::to_string(leaf_));
      return;
    }
    for (const Tree& k : kids_) k.collect_labels(labs);
  }
  void flatten(std::vector<const Tree*>& out) const {
    out.push_back(this);
    for (const Tree& k : kids_) k.flatten(out);
  }

  int leaf_ = 0;
  std::string gen_;
  std::vector<Tree> kids_;
};

// Grafting with arity validation against the generator.
inline Tree graft(const Generator& g, std::vector<Tree> children) {
  if (static_cast<int>(children.size()) != g.arity)
    throw std::invalid_argument("graft: generator " + g.id + " expects " +
                                std::to_string(g.arity) + " children, got " +
                                std::to_string(children.size()));
  return Tree::vertex(g.id, std::move(children));
}

// Checks every vertex against the alphabet: known generator, matching arity,
// and reduced shape (arity-1 vertices only for unary-flagged generators).
inline void validate_tree(const Alphabet& a, const Tree& t) {
  if (t.is_leaf()) return;
  const Generator& g = a.at(t.gen());
  if (g.arity != t.arity())
    throw std::invalid_argument("vertex " + g.id + " has " + std::to_string(t.arity()) +
                                " children, generator arity is " + std::to_string(g.arity));
  for (const Tree& k : t.children()) validate_tree(a, k);
}

inline Tree relabel_leaves(const Tree& t, const std::map<int, int>& m) {
  if (t.is_leaf()) {
    auto it = m.find(t.label());
    if (it == m.end())
      throw std::invalid_argument("relabel: no image for leaf " + std::to_string(t.label()));
    return Tree::leaf(it->second);
  }
  std::vector<Tree> kids;
  kids.reserve(t.children().size());
  for (const Tree& k : t.children()) kids.push_back(relabel_leaves(k, m));
  return Tree::vertex(t.gen(), std::move(kids));
}

inline Tree relabel_leaves(const Tree& t, const Perm& sigma) {
  std::map<int, int> m;
  for (int i = 1; i <= sigma.n(); ++i) m[i] = sigma(i);
  return relabel_leaves(t, m);
}

namespace detail {
inline std::string shape_gen_id(int arity) { return "#" + std::to_string(arity); }

inline void compositions(int n, int parts, std::vector<int>& cur,
                         std::vector<std::vector<int>>& out) {
  if (parts == 1) {
    if (n >= 1) {
      cur.push_back(n);
      out.push_back(cur);
      cur.pop_back();
    }
    return;
  }
  for (int first = 1; first + (parts - 1) <= n; ++first) {
    cur.push_back(first);
    compositions(n - first, parts - 1, cur, out);
    cur.pop_back();
  }
}

inline Tree shift_labels(const Tree& t, int offset) {
  if (offset == 0) return t;
  std::map<int, int> m;
  for (int l : t.leaf_labels()) m[l] = l + offset;
  return relabel_leaves(t, m);
}
}  // namespace detail

// All planar reduced rooted trees with n leaves labeled 1..n left to right,
// vertex arities drawn from `arities`; vertices carry placeholder generators
// "#k" (one per arity). Deterministic order.
inline std::vector<Tree> enumerate_reduced_trees(int n, const std::set<int>& arities) {
  if (n < 1) throw std::invalid_argument("enumerate_reduced_trees: n must be >= 1");
  if (arities.empty()) throw std::invalid_argument("enumerate_reduced_trees: no arities");
  for (int a : arities)
    if (a < 2) throw std::invalid_argument("enumerate_reduced_trees: arity < 2");
  std::vector<std::vector<Tree>> memo(n + 1);
  memo[1] = {Tree::leaf(1)};
  for (int k = 2; k <= n; ++k) {
    for (int a : arities) {
      if (a > k) continue;
      std::vector<std::vector<int>> comps;
      std::vector<int> cur;
      detail::compositions(k, a, cur, comps);
      for (const auto& comp : comps) {
        bool feasible = true;
        for (int part : comp)
          if (memo[part].empty()) {
            feasible = false;
            break;
          }
        if (!feasible) continue;
        // one subtree choice per part, labels shifted to stay 1..k planar
        std::vector<size_t> pick(a, 0);
        while (true) {
          std::vector<Tree> kids;
          int off = 0;
          for (int j = 0; j < a; ++j) {
            kids.push_back(detail::shift_labels(memo[comp[j]][pick[j]], off));
            off += comp[j];
          }
          memo[k].push_back(Tree::vertex(detail::shape_gen_id(a), std::move(kids)));
          int j = a - 1;
          while (j >= 0 && ++pick[j] == memo[comp[j]].size()) pick[j--] = 0;
          if (j < 0) break;
        }
      }
    }
  }
  return memo[n];
}

// Every way of decorating the shapes over `alphabet`'s arity multiset: each
// placeholder vertex replaced by each generator of matching arity.
inline std::vector<Tree> enumerate_decorated_trees(int n, const Alphabet& alphabet) {
  std::set<int> arities;
  std::map<int, std::vector<std::string>> by_arity;
  for (const Generator& g : alphabet.gens()) {
    if (g.unary) continue;
    arities.insert(g.arity);
    by_arity[g.arity].push_back(g.id);
  }
  if (arities.empty()) throw std::invalid_argument("alphabet has no generators of arity >= 2");
  std::vector<Tree> out;
  auto decorate = [&](const Tree& t, auto&& self) -> std::vector<Tree> {
    if (t.is_leaf()) return {t};
    std::vector<std::vector<Tree>> kid_choices;
    for (const Tree& k : t.children()) kid_choices.push_back(self(k, self));
    std::vector<Tree> res;
    std::vector<size_t> pick(kid_choices.size(), 0);
    while (true) {
      std::vector<Tree> kids;
      for (size_t j = 0; j < pick.size(); ++j) kids.push_back(kid_choices[j][pick[j]]);
      for (const std::string& gid : by_arity[t.arity()])
        res.push_back(Tree::vertex(gid, std::vector<Tree>(kids)));
      int j = static_cast<int>(pick.size()) - 1;
      while (j >= 0 && ++pick[j] == kid_choices[j].size()) pick[j--] = 0;
      if (j < 0) break;
    }
    return res;
  };
  for (const Tree& shape : enumerate_reduced_trees(n, arities))
    for (Tree& t : decorate(shape, decorate)) out.push_back(std::move(t));
  return out;
}

}  // namespace opforge
