#pragma once
#include <map>
#include <string>
#include <vector>

#include "opforge/action.hpp"
#include "opforge/rational.hpp"
#include "opforge/tree.hpp"

namespace opforge {

// Finite rational linear combination of trees; zero coefficients never stored.
class TreePoly {
 public:
  TreePoly() = default;
  TreePoly(const Tree& t, const Rat& c = 1) { add(t, c); }

  void add(const Tree& t, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(t, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  TreePoly& operator+=(const TreePoly& o) {
    for (const auto& [t, c] : o.terms_) add(t, c);
    return *this;
  }
  TreePoly& operator-=(const TreePoly& o) {
    for (const auto& [t, c] : o.terms_) add(t, -c);
    return *this;
  }
  TreePoly& operator*=(const Rat& c) {
    if (c == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [t, coeff] : terms_) coeff *= c;
    return *this;
  }
  friend TreePoly operator+(TreePoly a, const TreePoly& b) { return a += b; }
  friend TreePoly operator-(TreePoly a, const TreePoly& b) { return a -= b; }
  friend TreePoly operator*(const Rat& c, TreePoly p) { return p *= c; }
  friend TreePoly operator*(TreePoly p, const Rat& c) { return p *= c; }

  bool empty() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }
  const std::map<Tree, Rat>& terms() const { return terms_; }
  friend bool operator==(const TreePoly& a, const TreePoly& b) { return a.terms_ == b.terms_; }
  friend bool operator<(const TreePoly& a, const TreePoly& b) { return a.terms_ < b.terms_; }

  // All terms share one leaf-label set.
  bool homogeneous() const {
    if (terms_.empty()) return true;
    auto ref = terms_.begin()->first.leaf_set();
    for (const auto& [t, c] : terms_)
      if (t.leaf_set() != ref) return false;
    return true;
  }
  // Leaf count of a homogeneous nonzero poly.
  int arity() const {
    if (terms_.empty()) throw std::invalid_argument("arity of the zero poly");
    return terms_.begin()->first.leaf_count();
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [t, c] : terms_) {
      std::string coeff = rat_str(c);
      s += (s.empty() ? "" : " + ") + (coeff == "1/1" ? "" : coeff + "*") + t.str();
    }
    return s;
  }

 private:
  std::map<Tree, Rat> terms_;
};

inline TreePoly combine(const std::vector<std::pair<Rat, TreePoly>>& terms) {
  TreePoly out;
  for (const auto& [c, p] : terms)
    for (const auto& [t, coeff] : p.terms()) out.add(t, c * coeff);
  return out;
}

// Canonical representative of a tree under the signed S-action: children
// sorted ascending by minimum leaf label at every vertex, the sorting
// block-permutation pushed into the generator through its action table.
// Returns (sign, tree): input = sign * output as elements of the free operad.
inline std::pair<int, Tree> normal_form_tree(const Tree& t, const ActionCache& cache) {
  if (t.is_leaf()) return {1, t};
  int sign = 1;
  std::vector<Tree> kids;
  kids.reserve(t.children().size());
  for (const Tree& k : t.children()) {
    auto [s, nk] = normal_form_tree(k, cache);
    sign *= s;
    kids.push_back(std::move(nk));
  }
  int n = static_cast<int>(kids.size());
  if (n == 1) return {sign, Tree::vertex(t.gen(), std::move(kids))};  // unary operator symbol
  // tau(j) = original index of the j-th smallest child; then
  // omega(kids) = omega^{tau^{-1}}(sorted kids).
  std::vector<int> order(n);
  for (int j = 0; j < n; ++j) order[j] = j + 1;
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return kids[a - 1].min_leaf() < kids[b - 1].min_leaf(); });
  Perm tau(order);
  std::vector<Tree> sorted;
  sorted.reserve(n);
  for (int j = 1; j <= n; ++j) sorted.push_back(kids[tau(j) - 1]);
  auto [target, s2] = cache.act(t.gen(), inverse(tau));
  return {sign * s2, Tree::vertex(target, std::move(sorted))};
}

// actions == nullptr selects nonsymmetric mode: the identity map.
inline TreePoly normal_form(const TreePoly& p, const ActionSet* actions) {
  if (!actions) return p;
  ActionCache cache(actions);
  TreePoly out;
  for (const auto& [t, c] : p.terms()) {
    auto [sign, nt] = normal_form_tree(t, cache);
    out.add(nt, sign * c);
  }
  return out;
}

namespace detail {
// Template leaves are placeholder slots 1..m; replace all of them at once so
// placeholder labels never mix with the real leaf labels of the grafts.
inline Tree graft_all(const Tree& tmpl, const std::vector<const Tree*>& subs) {
  if (tmpl.is_leaf()) {
    int slot = tmpl.label();
    if (slot < 1 || slot > static_cast<int>(subs.size()))
      throw std::invalid_argument("substitution template has a leaf outside 1..arity");
    return *subs[slot - 1];
  }
  std::vector<Tree> kids;
  kids.reserve(tmpl.children().size());
  for (const Tree& k : tmpl.children()) kids.push_back(graft_all(k, subs));
  return Tree::vertex(tmpl.gen(), std::move(kids));
}

inline TreePoly substitute_tree(const Tree& t, const std::map<std::string, TreePoly>& gmap) {
  if (t.is_leaf()) return TreePoly(t);
  auto it = gmap.find(t.gen());
  if (it == gmap.end())
    throw std::invalid_argument("substitute_generators: no image for " + t.gen());
  std::vector<TreePoly> kid_polys;
  kid_polys.reserve(t.children().size());
  for (const Tree& k : t.children()) kid_polys.push_back(substitute_tree(k, gmap));
  size_t m = kid_polys.size();
  std::vector<std::vector<std::pair<const Tree*, const Rat*>>> choices(m);
  for (size_t j = 0; j < m; ++j) {
    for (const auto& [tr, c] : kid_polys[j].terms()) choices[j].push_back({&tr, &c});
    if (choices[j].empty()) return TreePoly();  // a child substituted to zero
  }
  TreePoly out;
  for (const auto& [tmpl, c0] : it->second.terms()) {
    auto slots = tmpl.leaf_labels();
    std::sort(slots.begin(), slots.end());
    bool ok = slots.size() == m;
    for (size_t j = 0; ok && j < m; ++j) ok = slots[j] == static_cast<int>(j) + 1;
    if (!ok)
      throw std::invalid_argument("substitution template for " + t.gen() +
                                  " must use placeholder leaves 1.." + std::to_string(m));
    std::vector<size_t> pick(m, 0);
    while (true) {
      std::vector<const Tree*> subs(m);
      Rat c = c0;
      for (size_t j = 0; j < m; ++j) {
        subs[j] = choices[j][pick[j]].first;
        c *= *choices[j][pick[j]].second;
      }
      out.add(graft_all(tmpl, subs), c);
      int j = static_cast<int>(m) - 1;
      while (j >= 0 && ++pick[j] == choices[j].size()) pick[j--] = 0;
      if (j < 0) break;
    }
  }
  return out;
}
}  // namespace detail

// gmap values are templates: homogeneous polys whose leaves 1..arity(g) are
// placeholders receiving the vertex's children.
inline TreePoly substitute_generators(const TreePoly& p,
                                      const std::map<std::string, TreePoly>& gmap) {
  TreePoly out;
  for (const auto& [t, c] : p.terms()) {
    TreePoly q = detail::substitute_tree(t, gmap);
    q *= c;
    out += q;
  }
  return out;
}

}  // namespace opforge
