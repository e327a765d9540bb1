#pragma once
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "opforge/perm.hpp"
#include "opforge/tree.hpp"

namespace opforge {

enum class ConfigKind { arity, power, capped, trivial, singletons_below, explicit_ };

inline const char* config_kind_name(ConfigKind k) {
  switch (k) {
    case ConfigKind::arity: return "arity";
    case ConfigKind::power: return "power";
    case ConfigKind::capped: return "capped";
    case ConfigKind::trivial: return "trivial";
    case ConfigKind::singletons_below: return "singletons_below";
    default: return "explicit";
  }
}

// sup { n | C_n = B_n }: a number, infinite (power), absent (trivial-like), or
// ">= n_max" when explicit data is full at every stored level.
struct IndexValue {
  enum Tag { none, finite, infinite, at_least };
  Tag tag = none;
  int value = 0;
  std::string str() const {
    switch (tag) {
      case finite: return std::to_string(value);
      case infinite: return "infinite";
      case at_least: return ">= " + std::to_string(value);
      default: return "none";
    }
  }
};

// A family (C_n)_{1<=n<=n_max} of nonempty subsets of [n]. Closure under the
// meet along tree vertices is a separate validation step (validate_closure),
// not a construction invariant, so counterexample configurations can exist
// long enough to be reported.
class Configuration {
 public:
  Configuration(ConfigKind kind, int m, int n_max,
                std::map<int, std::vector<std::vector<int>>> explicit_sets = {})
      : kind_(kind), m_(m), n_max_(n_max) {
    if (n_max < 1) throw std::invalid_argument("configuration needs n_max >= 1");
    if ((kind == ConfigKind::capped || kind == ConfigKind::singletons_below) && m < 1)
      throw std::invalid_argument("configuration kind requires parameter m >= 1");
    levels_.resize(n_max + 1);
    for (int n = 1; n <= n_max; ++n) {
      switch (kind_) {
        case ConfigKind::arity:
          for (int i = 1; i <= n; ++i) insert(n, {i});
          break;
        case ConfigKind::power:
          insert_bounded(n, n);
          break;
        case ConfigKind::capped:
          insert_bounded(n, std::min(n, m_));
          break;
        case ConfigKind::trivial:
          insert(n, full(n));
          break;
        case ConfigKind::singletons_below:
          insert(n, full(n));
          if (n < m_)
            for (int i = 1; i <= n; ++i) insert(n, {i});
          break;
        case ConfigKind::explicit_: {
          auto it = explicit_sets.find(n);
          if (it == explicit_sets.end()) break;
          for (auto J : it->second) {
            std::set<int> s(J.begin(), J.end());
            if (s.empty() || *s.begin() < 1 || *s.rbegin() > n ||
                s.size() != J.size())
              throw std::invalid_argument("explicit configuration: bad subset at level " +
                                          std::to_string(n));
            insert(n, std::vector<int>(s.begin(), s.end()));
          }
          break;
        }
      }
    }
  }

  ConfigKind kind() const { return kind_; }
  int m() const { return m_; }
  int n_max() const { return n_max_; }

  const std::set<std::vector<int>>& level(int n) const {
    if (n < 1 || n > n_max_)
      throw std::invalid_argument("configuration level " + std::to_string(n) +
                                  " outside 1..n_max=" + std::to_string(n_max_));
    return levels_[n];
  }
  bool contains(int n, const std::set<int>& J) const {
    return level(n).count(std::vector<int>(J.begin(), J.end())) > 0;
  }

  std::string name() const {
    std::string s = config_kind_name(kind_);
    if (kind_ == ConfigKind::capped || kind_ == ConfigKind::singletons_below)
      s += ":" + std::to_string(m_);
    return s;
  }

 private:
  static std::vector<int> full(int n) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = i + 1;
    return v;
  }
  void insert(int n, std::vector<int> J) { levels_[n].insert(std::move(J)); }
  // all nonempty subsets of [n] with at most k elements
  void insert_bounded(int n, int k) {
    if (n > 20)
      throw std::invalid_argument("configuration level too large to enumerate (n > 20)");
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
      if (__builtin_popcount(mask) > k) continue;
      std::vector<int> J;
      for (int i = 0; i < n; ++i)
        if (mask & (1u << i)) J.push_back(i + 1);
      insert(n, std::move(J));
    }
  }

  ConfigKind kind_;
  int m_;
  int n_max_;
  std::vector<std::set<std::vector<int>>> levels_;
};

inline Configuration builtin_config(ConfigKind kind, int m = 0, int n_max = 7) {
  if (kind == ConfigKind::explicit_)
    throw std::invalid_argument("builtin_config: explicit kind takes data, use Configuration");
  return Configuration(kind, m, n_max);
}

inline Configuration explicit_config(std::map<int, std::vector<std::vector<int>>> sets,
                                     int n_max = 7) {
  return Configuration(ConfigKind::explicit_, 0, n_max, std::move(sets));
}

// J meet omega for the vertex with children tau_1..tau_l:
// { i | J intersects lin(tau_i) }.
inline std::set<int> meet(const std::set<int>& J, const Tree& vertex) {
  if (vertex.is_leaf()) throw std::invalid_argument("meet at a leaf");
  std::set<int> out;
  int i = 0;
  for (const Tree& kid : vertex.children()) {
    ++i;
    for (int l : kid.leaf_labels())
      if (J.count(l)) {
        out.insert(i);
        break;
      }
  }
  return out;
}

// Internal vertices in preorder; handle = index into this list.
inline void collect_vertices(const Tree& t, std::vector<const Tree*>& out) {
  if (t.is_leaf()) return;
  out.push_back(&t);
  for (const Tree& k : t.children()) collect_vertices(k, out);
}

inline std::set<int> meet_at(const std::set<int>& J, const Tree& tree, int vertex_index) {
  std::vector<const Tree*> v;
  collect_vertices(tree, v);
  if (vertex_index < 0 || vertex_index >= static_cast<int>(v.size()))
    throw std::invalid_argument("vertex handle out of range");
  return meet(J, *v[vertex_index]);
}

struct ClosureReport {
  bool valid = true;
  std::set<int> J;
  std::optional<Tree> tree;
  int vertex = -1;
  std::string str() const {
    if (valid) return "closure holds";
    std::string s = "closure violated: J={";
    for (int j : J) s += std::to_string(j) + ",";
    s += "} tree=" + (tree ? tree->str() : "?") + " vertex#" + std::to_string(vertex);
    return s;
  }
};

// Exhaustive closure check over every reduced tree shape with <= n_max leaves
// (vertex arities 2..n_max) and every J at the matching level.
inline ClosureReport validate_closure(const Configuration& C) {
  std::set<int> arities;
  for (int a = 2; a <= C.n_max(); ++a) arities.insert(a);
  for (int n = 2; n <= C.n_max(); ++n) {
    if (C.level(n).empty()) continue;
    std::vector<Tree> trees = enumerate_reduced_trees(n, arities);
    for (const auto& Jv : C.level(n)) {
      std::set<int> J(Jv.begin(), Jv.end());
      for (const Tree& t : trees) {
        std::vector<const Tree*> verts;
        collect_vertices(t, verts);
        for (size_t vi = 0; vi < verts.size(); ++vi) {
          std::set<int> K = meet(J, *verts[vi]);
          if (!K.empty() && !C.contains(verts[vi]->arity(), K)) {
            ClosureReport r;
            r.valid = false;
            r.J = J;
            r.tree = t;
            r.vertex = static_cast<int>(vi);
            return r;
          }
        }
      }
    }
  }
  return {};
}

inline bool s_invariant(const Configuration& C) {
  for (int n = 2; n <= C.n_max(); ++n) {
    for (const auto& Jv : C.level(n)) {
      std::set<int> J(Jv.begin(), Jv.end());
      for (int i = 1; i < n; ++i)
        if (!C.contains(n, apply_perm(Perm::transposition(n, i), J))) return false;
    }
  }
  return true;
}

inline IndexValue index_of(const Configuration& C) {
  switch (C.kind()) {
    case ConfigKind::arity: return {IndexValue::finite, 1};
    case ConfigKind::power: return {IndexValue::infinite, 0};
    case ConfigKind::capped: return {IndexValue::finite, C.m()};
    case ConfigKind::trivial: return {IndexValue::none, 0};
    case ConfigKind::singletons_below:
      // levels below m are {[n]} plus singletons: full exactly for n <= 2
      if (C.m() >= 3) return {IndexValue::finite, 2};
      if (C.m() == 2) return {IndexValue::finite, 1};
      return {IndexValue::none, 0};
    case ConfigKind::explicit_: {
      // sup over the stored range only; a full top level leaves the true
      // supremum open, so that case is reported as a lower bound.
      int best = 0;
      bool all_full = true;
      for (int n = 1; n <= C.n_max(); ++n) {
        size_t want = (size_t{1} << n) - 1;
        if (C.level(n).size() == want)
          best = n;
        else
          all_full = false;
      }
      if (all_full) return {IndexValue::at_least, C.n_max()};
      if (best >= 1) return {IndexValue::finite, best};
      return {IndexValue::none, 0};
    }
  }
  return {IndexValue::none, 0};
}

}  // namespace opforge
