#pragma once
#include <map>
#include <vector>

#include "opforge/poly.hpp"
#include "opforge/rational.hpp"
#include "opforge/tree.hpp"

namespace opforge {

// Assigns stable coordinates to trees in insertion-independent term order:
// coordinates are allocated on first sight, but all comparisons below reduce
// rows against a pivot-per-coordinate basis, so results depend only on the
// tree order, not on insertion order.
class TreeIndexer {
 public:
  size_t id(const Tree& t) {
    auto [it, inserted] = idx_.try_emplace(t, trees_.size());
    if (inserted) trees_.push_back(t);
    return it->second;
  }
  const Tree& tree(size_t i) const { return trees_.at(i); }
  size_t size() const { return trees_.size(); }

 private:
  std::map<Tree, size_t> idx_;
  std::vector<Tree> trees_;
};

// Sparse row: sorted (coordinate, nonzero coefficient) pairs.
using SparseRow = std::vector<std::pair<size_t, Rat>>;

inline SparseRow to_row(const TreePoly& p, TreeIndexer& ix) {
  std::map<size_t, Rat> m;
  for (const auto& [t, c] : p.terms()) m[ix.id(t)] = c;
  return SparseRow(m.begin(), m.end());
}

// Incremental exact row-echelon basis: one pivot per coordinate, pivot
// coefficient 1, rows kept reduced against every pivot.
class SpanBasis {
 public:
  // Reduces r against the basis; returns the residue.
  SparseRow reduce(SparseRow r) const {
    bool changed = true;
    while (changed && !r.empty()) {
      changed = false;
      auto it = pivots_.find(r.front().first);
      if (it != pivots_.end()) {
        axpy(r, -r.front().second, rows_[it->second]);
        changed = true;
      }
    }
    return r;
  }
  // Returns true if r was independent (rank grew).
  bool add(const SparseRow& r) {
    SparseRow res = reduce(r);
    if (res.empty()) return false;
    Rat lead = res.front().second;
    for (auto& [c, v] : res) v /= lead;
    // back-substitute into existing rows to keep full reduction
    for (auto& row : rows_) eliminate(row, res);
    pivots_[res.front().first] = rows_.size();
    rows_.push_back(std::move(res));
    return true;
  }
  bool contains(const TreePoly& p, TreeIndexer& ix) const {
    return reduce(to_row(p, ix)).empty();
  }
  size_t rank() const { return rows_.size(); }
  const std::vector<SparseRow>& rows() const { return rows_; }

 private:
  static void axpy(SparseRow& r, const Rat& c, const SparseRow& src) {
    std::map<size_t, Rat> m(r.begin(), r.end());
    for (const auto& [col, v] : src) {
      Rat& slot = m[col];
      slot += c * v;
      if (slot == 0) m.erase(col);
    }
    r.assign(m.begin(), m.end());
  }
  static void eliminate(SparseRow& row, const SparseRow& pivot_row) {
    size_t pc = pivot_row.front().first;
    for (const auto& [col, v] : row) {
      if (col == pc) {
        axpy(row, -v, pivot_row);
        return;
      }
      if (col > pc) return;
    }
  }

  std::map<size_t, size_t> pivots_;  // coordinate -> row index
  std::vector<SparseRow> rows_;
};

enum class SpanRel { equal, a_in_b, b_in_a, incomparable };

inline const char* span_rel_name(SpanRel r) {
  switch (r) {
    case SpanRel::equal: return "equal";
    case SpanRel::a_in_b: return "A subset of B";
    case SpanRel::b_in_a: return "B subset of A";
    default: return "incomparable";
  }
}

// Compares rational row spaces exactly. Polys are normalized first when an
// action set is supplied (symmetric mode).
inline SpanRel span_relate(const std::vector<TreePoly>& A, const std::vector<TreePoly>& B,
                           const ActionSet* actions = nullptr) {
  TreeIndexer ix;
  SpanBasis a, b;
  for (const auto& p : A) a.add(to_row(normal_form(p, actions), ix));
  for (const auto& p : B) b.add(to_row(normal_form(p, actions), ix));
  bool a_in_b = true, b_in_a = true;
  for (const auto& row : a.rows())
    if (!b.reduce(row).empty()) {
      a_in_b = false;
      break;
    }
  for (const auto& row : b.rows())
    if (!a.reduce(row).empty()) {
      b_in_a = false;
      break;
    }
  if (a_in_b && b_in_a) return SpanRel::equal;
  if (a_in_b) return SpanRel::a_in_b;
  if (b_in_a) return SpanRel::b_in_a;
  return SpanRel::incomparable;
}

inline size_t span_rank(const std::vector<TreePoly>& A, const ActionSet* actions = nullptr) {
  TreeIndexer ix;
  SpanBasis b;
  for (const auto& p : A) b.add(to_row(normal_form(p, actions), ix));
  return b.rank();
}

}  // namespace opforge
