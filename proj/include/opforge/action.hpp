#pragma once
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "opforge/perm.hpp"
#include "opforge/tree.hpp"

namespace opforge {

// Signed monomial S_n-action on an alphabet basis: each adjacent transposition
// sends a generator to (target generator, sign). General linear actions are
// out of contract and rejected wherever a table is required but absent.
struct ActionTable {
  int arity = 0;
  // rows[i-1] = image of this generator under (i, i+1), 1 <= i < arity
  std::vector<std::pair<std::string, int>> rows;

  bool operator==(const ActionTable&) const = default;
};

using ActionSet = std::map<std::string, ActionTable>;

struct ActionIssue {
  std::string gen;
  std::string detail;
};

namespace detail {
// Walks the whole of S_n from `start`, composing table rows; returns the full
// map sigma -> (target, sign) or an inconsistency witness. With the convention
// (omega^sigma)^pi = omega^{pi o sigma}, extending by s_i means key s_i o sigma.
inline std::optional<ActionIssue> action_orbit(
    const ActionSet& actions, const std::string& start,
    std::map<Perm, std::pair<std::string, int>>* out) {
  const ActionTable& t0 = actions.at(start);
  int n = t0.arity;
  std::map<Perm, std::pair<std::string, int>> acc;
  std::vector<Perm> frontier;
  Perm id = Perm::identity(n);
  acc[id] = {start, 1};
  frontier.push_back(id);
  while (!frontier.empty()) {
    Perm sigma = frontier.back();
    frontier.pop_back();
    auto [cur, sign] = acc.at(sigma);
    auto it = actions.find(cur);
    if (it == actions.end())
      return ActionIssue{start, "action row targets unknown generator " + cur};
    const ActionTable& tab = it->second;
    if (tab.arity != n)
      return ActionIssue{start, "action row targets " + cur + " of different arity"};
    if (static_cast<int>(tab.rows.size()) != n - 1)
      return ActionIssue{cur, "action table must have one row per adjacent transposition"};
    for (int i = 1; i < n; ++i) {
      const auto& [tgt, s] = tab.rows[i - 1];
      if (s != 1 && s != -1) return ActionIssue{cur, "sign must be +1 or -1"};
      Perm key = compose(Perm::transposition(n, i), sigma);
      std::pair<std::string, int> val = {tgt, sign * s};
      auto [pos, inserted] = acc.try_emplace(key, val);
      if (inserted) {
        frontier.push_back(key);
      } else if (pos->second != val) {
        return ActionIssue{start, "inconsistent action at permutation " + key.str() + ": " +
                                      pos->second.first + " vs " + val.first};
      }
    }
  }
  if (out) *out = std::move(acc);
  return std::nullopt;
}
}  // namespace detail

// Exhaustive well-definedness for n <= 7 (the full group walk revisits every
// element through every adjacent edge); random equal-word pairs above that.
inline std::optional<ActionIssue> validate_actions(const ActionSet& actions) {
  for (const auto& [gid, tab] : actions) {
    if (tab.arity < 2) return ActionIssue{gid, "action table on arity < 2"};
    if (static_cast<int>(tab.rows.size()) != tab.arity - 1)
      return ActionIssue{gid, "action table must have one row per adjacent transposition"};
    if (tab.arity <= 7) {
      if (auto issue = detail::action_orbit(actions, gid, nullptr)) return issue;
    } else {
      std::mt19937 rng(20240 + tab.arity);
      int n = tab.arity;
      auto act_word = [&](const std::vector<int>& word) {
        std::string cur = gid;
        int sign = 1;
        for (auto it = word.rbegin(); it != word.rend(); ++it) {
          const auto& row = actions.at(cur).rows[*it - 1];
          sign *= row.second;
          cur = row.first;
        }
        return std::pair<std::string, int>{cur, sign};
      };
      for (int trial = 0; trial < 200; ++trial) {
        std::vector<int> w1;
        Perm sigma = Perm::identity(n);
        std::uniform_int_distribution<int> d(1, n - 1);
        for (int k = std::uniform_int_distribution<int>(0, 12)(rng); k > 0; --k) {
          int i = d(rng);
          w1.push_back(i);
          sigma = compose(sigma, Perm::transposition(n, i));
        }
        // w1 composes (left to right) to sigma; adjacent_word gives a second word
        if (act_word(w1) != act_word(adjacent_word(sigma)))
          return ActionIssue{gid, "random word pair disagreed at " + sigma.str()};
      }
    }
  }
  return std::nullopt;
}

// Lazy full-group lookup tables per generator; requires validated actions.
class ActionCache {
 public:
  explicit ActionCache(const ActionSet* actions) : actions_(actions) {}

  // Image of gen under sigma as (target id, sign): gen^sigma = sign * target.
  std::pair<std::string, int> act(const std::string& gen, const Perm& sigma) const {
    if (sigma.is_identity()) return {gen, 1};
    auto& orbit = table(gen, sigma.n());
    auto it = orbit.find(sigma);
    if (it == orbit.end())
      throw std::invalid_argument("permutation degree mismatch for generator " + gen);
    return it->second;
  }

  bool has(const std::string& gen) const { return actions_ && actions_->count(gen); }

 private:
  const std::map<Perm, std::pair<std::string, int>>& table(const std::string& gen,
                                                           int degree) const {
    auto it = full_.find(gen);
    if (it != full_.end()) return it->second;
    if (!actions_ || !actions_->count(gen))
      throw std::invalid_argument("missing action table for generator " + gen);
    if (actions_->at(gen).arity != degree)
      throw std::invalid_argument("permutation degree mismatch for generator " + gen);
    std::map<Perm, std::pair<std::string, int>> orbit;
    if (auto issue = detail::action_orbit(*actions_, gen, &orbit))
      throw std::invalid_argument("inconsistent action table: " + issue->gen + ": " +
                                  issue->detail);
    return full_.emplace(gen, std::move(orbit)).first->second;
  }

  const ActionSet* actions_;
  mutable std::map<std::string, std::map<Perm, std::pair<std::string, int>>> full_;
};

}  // namespace opforge
