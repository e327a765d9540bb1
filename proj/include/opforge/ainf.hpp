#pragma once
// Bookkeeping for the arity-splitting of the homotopy-associative relation.
// The quadratic part of the differential on an n-ary operation is the signed
// sum of insertions w_k o_{p+1} w_q over p+q+r = n with k = p+1+r; splitting
// every term along the i-th leaf must reproduce, for each i, exactly the
// quintuple family (p, q, r, l, j) defining the split homotopy operad. Both
// sides are generated independently and compared as signed multisets.

#include <map>
#include <stdexcept>
#include <string>
#include <tuple>

#include "opforge/report.hpp"

namespace opforge {

namespace detail {

// (p, q, r, l, j): outer operation w_{p+1+r} split at leaf l, inner w_q
// split at leaf j, grafted into slot p+1 of the outer one.
using AinfKey = std::tuple<int, int, int, int, int>;

inline std::string ainf_key_str(const AinfKey& k) {
  auto [p, q, r, l, j] = k;
  return "(p=" + std::to_string(p) + ",q=" + std::to_string(q) + ",r=" +
         std::to_string(r) + ",l=" + std::to_string(l) + ",j=" + std::to_string(j) + ")";
}

}  // namespace detail

// For each leaf i of the n-ary relation: route one applies the leaf-i
// splitting to every quadratic term directly (the i-th leaf sits either left
// of the graft, inside it, or right of it; the off-leaf factor picks up the
// sum over all of its split labels). Route two enumerates the quintuple
// ranges with their side conditions. The two signed multisets must agree;
// the unary/differential terms (k = 1 or q = 1) are excluded on both sides.
inline Report ainf_split_bookkeeping(int n) {
  if (n < 2 || n > 6)
    throw std::invalid_argument("ainf_split_bookkeeping: n must be in 2..6");
  Report rep("homotopy-relation split bookkeeping, n=" + std::to_string(n));

  for (int i = 1; i <= n; ++i) {
    std::map<detail::AinfKey, long> direct, table;
    for (int p = 0; p <= n - 2; ++p) {
      for (int q = 2; q <= n - p; ++q) {
        const int r = n - p - q;
        const int k = p + 1 + r;
        if (r < 0 || k < 2) continue;
        const long sgn = ((p + q * r) % 2 == 0) ? 1 : -1;

        // Route one: where does leaf i land?
        if (i <= p) {
          for (int j = 1; j <= q; ++j) direct[{p, q, r, i, j}] += sgn;
        } else if (i <= p + q) {
          direct[{p, q, r, p + 1, i - p}] += sgn;
        } else {
          for (int j = 1; j <= q; ++j) direct[{p, q, r, i - q + 1, j}] += sgn;
        }

        // Route two: the quintuple ranges and side conditions.
        for (int l = 1; l <= k; ++l) {
          for (int j = 1; j <= q; ++j) {
            const bool hit = (l <= p && i == l) ||
                             (l == p + 1 && i == l - 1 + j) ||
                             (l >= p + 2 && i == q + l - 1);
            if (hit) table[{p, q, r, l, j}] += sgn;
          }
        }
      }
    }

    std::string label = "leaf i=" + std::to_string(i) + " (" +
                        std::to_string(direct.size()) + " signed terms)";
    if (direct == table) {
      rep.add_pass(label);
      continue;
    }
    for (const auto& [key, c] : direct) {
      auto it = table.find(key);
      if (it == table.end() || it->second != c) {
        rep.add_fail(label, "direct splitting has " + std::to_string(c) + " * " +
                     detail::ainf_key_str(key) + ", quintuple table has " +
                     std::to_string(it == table.end() ? 0 : it->second));
        break;
      }
    }
    for (const auto& [key, c] : table) {
      if (!direct.count(key)) {
        rep.add_fail(label, "quintuple table has extra term " + std::to_string(c) +
                     " * " + detail::ainf_key_str(key));
        break;
      }
    }
  }
  return rep;
}

}  // namespace opforge
