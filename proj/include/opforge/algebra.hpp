#pragma once
#include <algorithm>
#include <atomic>
#include <cstdint>
#include <map>
#include <optional>
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
#include "opforge/rota_baxter.hpp"
#include "opforge/splitting.hpp"
#include "opforge/threads.hpp"
#include "opforge/tree.hpp"

namespace opforge {

namespace detail {

// Tuple and storage guards. Checks are exhaustive over basis tuples, so both
// the tensors themselves and every dim^n scan must stay desk-sized.
inline size_t checked_cells(int dim, int arity, const std::string& who) {
  size_t cells = static_cast<size_t>(dim);
  for (int i = 0; i < arity; ++i) {
    cells *= static_cast<size_t>(dim);
    if (cells > 20'000'000)
      throw std::invalid_argument(who + ": structure tensor with " + std::to_string(dim) + "^" +
                                  std::to_string(arity + 1) +
                                  " entries exceeds the 2*10^7 storage guard");
  }
  return cells;
}

inline size_t checked_tuples(int dim, int arity, const std::string& who) {
  size_t t = 1;
  for (int i = 0; i < arity; ++i) {
    t *= static_cast<size_t>(dim);
    if (t > 1'000'000)
      throw std::invalid_argument(who + ": " + std::to_string(dim) + "^" +
                                  std::to_string(arity) +
                                  " basis tuples exceed the 10^6 evaluation guard");
  }
  return t;
}

inline void decode_tuple(size_t idx, int dim, std::vector<int>& d) {
  for (size_t j = d.size(); j-- > 0;) {
    d[j] = static_cast<int>(idx % static_cast<size_t>(dim));
    idx /= static_cast<size_t>(dim);
  }
}

inline std::string tuple_str(const std::vector<int>& d) {
  std::string s = "(";
  for (size_t j = 0; j < d.size(); ++j) s += (j ? ",e" : "e") + std::to_string(d[j] + 1);
  return s + ")";
}

// Lowest failing index across parallel blocks. Blocks scan ascending and may
// stop once they pass an already-recorded smaller index, so the final value
// is the true minimum regardless of scheduling.
struct FirstBad {
  std::atomic<size_t> idx{SIZE_MAX};
  bool record(size_t i) {
    size_t cur = idx.load(std::memory_order_relaxed);
    while (i < cur && !idx.compare_exchange_weak(cur, i)) {
    }
    return true;
  }
  bool cuts(size_t i) const { return i >= idx.load(std::memory_order_relaxed); }
  std::optional<size_t> get() const {
    size_t v = idx.load();
    return v == SIZE_MAX ? std::nullopt : std::optional<size_t>(v);
  }
};

}  // namespace detail

// A finite-dimensional vector space with one multilinear operation per
// alphabet generator, stored as an exact rational tensor: dim^arity argument
// slots, each holding the dim output coordinates of the operation on that
// basis tuple. Interpretation of presentations, operators and modules all
// evaluate against this one container.
class MultilinearAlgebra {
 public:
  MultilinearAlgebra(int dim, Alphabet ops) : dim_(dim), ops_(std::move(ops)) {
    if (dim < 1) throw std::invalid_argument("algebra dimension must be >= 1");
    for (const Generator& g : ops_.gens()) {
      if (g.unary)
        throw std::invalid_argument("algebra alphabet carries the unary symbol '" + g.id +
                                    "'; operators are bound separately, not stored as tensors");
      tensors_[g.id].assign(detail::checked_cells(dim_, g.arity, "algebra"), Rat(0));
    }
  }

  int dim() const { return dim_; }
  const Alphabet& ops() const { return ops_; }

  const std::vector<Rat>& tensor(const std::string& gen) const {
    auto it = tensors_.find(gen);
    if (it == tensors_.end()) throw std::invalid_argument("algebra: unknown operation '" + gen + "'");
    return it->second;
  }
  std::vector<Rat>& tensor(const std::string& gen) {
    auto it = tensors_.find(gen);
    if (it == tensors_.end()) throw std::invalid_argument("algebra: unknown operation '" + gen + "'");
    return it->second;
  }

  // Flat position of a basis argument tuple; the dim output coordinates of
  // the operation on that tuple sit at [flat*dim, flat*dim+dim).
  size_t flat_index(const std::string& gen, const std::vector<int>& args) const {
    const Generator& g = ops_.at(gen);
    if (static_cast<int>(args.size()) != g.arity)
      throw std::invalid_argument("algebra: '" + gen + "' takes " + std::to_string(g.arity) +
                                  " arguments, got " + std::to_string(args.size()));
    size_t idx = 0;
    for (int a : args) {
      if (a < 0 || a >= dim_) throw std::invalid_argument("algebra: basis index out of range");
      idx = idx * static_cast<size_t>(dim_) + static_cast<size_t>(a);
    }
    return idx;
  }

  Rat& entry(const std::string& gen, const std::vector<int>& args, int out) {
    return tensor(gen)[flat_index(gen, args) * static_cast<size_t>(dim_) + check_out(out)];
  }
  const Rat& entry(const std::string& gen, const std::vector<int>& args, int out) const {
    return tensor(gen)[flat_index(gen, args) * static_cast<size_t>(dim_) + check_out(out)];
  }

  // Output coordinates of the operation on one basis tuple.
  const Rat* slice(const std::string& gen, const std::vector<int>& args) const {
    return tensor(gen).data() + flat_index(gen, args) * static_cast<size_t>(dim_);
  }

  // Multilinear extension to arbitrary coordinate vectors. Iterates over the
  // nonzero support of each argument, so sparse inputs (operator columns,
  // basis vectors) cost what they carry.
  void apply_into(const std::string& gen, const std::vector<const std::vector<Rat>*>& args,
                  std::vector<Rat>& out) const {
    const Generator& g = ops_.at(gen);
    if (static_cast<int>(args.size()) != g.arity)
      throw std::invalid_argument("algebra: '" + gen + "' takes " + std::to_string(g.arity) +
                                  " arguments, got " + std::to_string(args.size()));
    out.assign(static_cast<size_t>(dim_), Rat(0));
    std::vector<std::vector<int>> nz(args.size());
    for (size_t j = 0; j < args.size(); ++j) {
      if (static_cast<int>(args[j]->size()) != dim_)
        throw std::invalid_argument("algebra: argument vector has wrong dimension");
      for (int i = 0; i < dim_; ++i)
        if ((*args[j])[static_cast<size_t>(i)] != 0) nz[j].push_back(i);
      if (nz[j].empty()) return;
    }
    const std::vector<Rat>& T = tensor(gen);
    std::vector<size_t> pick(args.size(), 0);
    while (true) {
      Rat c = 1;
      size_t idx = 0;
      for (size_t j = 0; j < args.size(); ++j) {
        const int i = nz[j][pick[j]];
        c *= (*args[j])[static_cast<size_t>(i)];
        idx = idx * static_cast<size_t>(dim_) + static_cast<size_t>(i);
      }
      const Rat* s = T.data() + idx * static_cast<size_t>(dim_);
      for (int o = 0; o < dim_; ++o)
        if (s[o] != 0) out[static_cast<size_t>(o)] += c * s[o];
      size_t j = args.size();
      while (j-- > 0) {
        if (++pick[j] < nz[j].size()) break;
        pick[j] = 0;
        if (j == 0) return;
      }
    }
  }

  std::vector<Rat> apply(const std::string& gen, const std::vector<std::vector<Rat>>& args) const {
    std::vector<const std::vector<Rat>*> ptrs;
    for (const auto& a : args) ptrs.push_back(&a);
    std::vector<Rat> out;
    apply_into(gen, ptrs, out);
    return out;
  }

 private:
  int check_out(int out) const {
    if (out < 0 || out >= dim_) throw std::invalid_argument("algebra: output index out of range");
    return out;
  }

  int dim_;
  Alphabet ops_;
  std::map<std::string, std::vector<Rat>> tensors_;
};

// Square matrix acting on coordinate vectors; row i, column j holds
// coordinate i of the image of e_{j+1}.
struct LinearOperator {
  std::vector<std::vector<Rat>> matrix;
  int dim() const { return static_cast<int>(matrix.size()); }
};

inline LinearOperator zero_operator(int dim) {
  LinearOperator op;
  op.matrix.assign(static_cast<size_t>(dim), std::vector<Rat>(static_cast<size_t>(dim), Rat(0)));
  return op;
}

inline LinearOperator identity_operator(int dim) {
  LinearOperator op = zero_operator(dim);
  for (int i = 0; i < dim; ++i) op.matrix[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
  return op;
}

inline void check_operator_shape(const LinearOperator& op, int dim, const std::string& who) {
  if (op.dim() != dim)
    throw std::invalid_argument(who + ": operator is " + std::to_string(op.dim()) +
                                "-dimensional, algebra is " + std::to_string(dim));
  for (const auto& row : op.matrix)
    if (static_cast<int>(row.size()) != dim)
      throw std::invalid_argument(who + ": operator matrix is not square");
}

inline std::vector<Rat> operator_column(const LinearOperator& op, int j) {
  std::vector<Rat> col(op.matrix.size(), Rat(0));
  for (size_t i = 0; i < op.matrix.size(); ++i) col[i] = op.matrix[i][static_cast<size_t>(j)];
  return col;
}

inline void apply_operator_into(const LinearOperator& op, const std::vector<Rat>& v,
                                std::vector<Rat>& out) {
  const size_t n = op.matrix.size();
  if (v.size() != n) throw std::invalid_argument("operator: vector dimension mismatch");
  out.assign(n, Rat(0));
  for (size_t j = 0; j < n; ++j) {
    if (v[j] == 0) continue;
    for (size_t i = 0; i < n; ++i)
      if (op.matrix[i][j] != 0) out[i] += v[j] * op.matrix[i][j];
  }
}

inline std::vector<Rat> apply_operator(const LinearOperator& op, const std::vector<Rat>& v) {
  std::vector<Rat> out;
  apply_operator_into(op, v, out);
  return out;
}

namespace detail {

inline std::vector<Rat> eval_rec(const MultilinearAlgebra& A, const Tree& t,
                                 const std::map<int, std::vector<Rat>>& assignment,
                                 const LinearOperator* op, const std::string& op_symbol) {
  if (t.is_leaf()) {
    auto it = assignment.find(t.label());
    if (it == assignment.end())
      throw std::invalid_argument("eval_tree: leaf " + std::to_string(t.label()) +
                                  " has no assigned vector");
    if (static_cast<int>(it->second.size()) != A.dim())
      throw std::invalid_argument("eval_tree: assignment for leaf " + std::to_string(t.label()) +
                                  " has wrong dimension");
    return it->second;
  }
  if (t.gen() == op_symbol && t.arity() == 1) {
    if (!op)
      throw std::invalid_argument("eval_tree: tree uses the operator symbol '" + op_symbol +
                                  "' but no operator is bound");
    return apply_operator(*op, eval_rec(A, t.children()[0], assignment, op, op_symbol));
  }
  if (!A.ops().find(t.gen()))
    throw std::invalid_argument("eval_tree: no structure constants for generator '" + t.gen() +
                                "'");
  std::vector<std::vector<Rat>> kids;
  std::vector<const std::vector<Rat>*> ptrs;
  kids.reserve(t.children().size());
  for (const Tree& k : t.children()) kids.push_back(eval_rec(A, k, assignment, op, op_symbol));
  for (const auto& k : kids) ptrs.push_back(&k);
  std::vector<Rat> out;
  A.apply_into(t.gen(), ptrs, out);
  return out;
}

// Basis-tuple evaluation: leaf labeled l takes basis index digit_of_label[l-1].
// Vertices whose children are all leaves read the tensor slice directly.
inline std::vector<Rat> eval_on_basis(const MultilinearAlgebra& A, const Tree& t,
                                      const std::vector<int>& digit_of_label) {
  if (t.is_leaf()) {
    std::vector<Rat> v(static_cast<size_t>(A.dim()), Rat(0));
    v[static_cast<size_t>(digit_of_label[static_cast<size_t>(t.label() - 1)])] = 1;
    return v;
  }
  bool flat = true;
  for (const Tree& k : t.children()) flat = flat && k.is_leaf();
  if (flat) {
    std::vector<int> args;
    for (const Tree& k : t.children())
      args.push_back(digit_of_label[static_cast<size_t>(k.label() - 1)]);
    const Rat* s = A.slice(t.gen(), args);
    return std::vector<Rat>(s, s + A.dim());
  }
  std::vector<std::vector<Rat>> kids;
  std::vector<const std::vector<Rat>*> ptrs;
  for (const Tree& k : t.children()) kids.push_back(eval_on_basis(A, k, digit_of_label));
  for (const auto& k : kids) ptrs.push_back(&k);
  std::vector<Rat> out;
  A.apply_into(t.gen(), ptrs, out);
  return out;
}

}  // namespace detail

// Bottom-up evaluation of an operator-decorated tree on concrete vectors.
// Leaves look up the assignment by label; the operator symbol applies `op`.
inline std::vector<Rat> eval_tree(const MultilinearAlgebra& A, const Tree& t,
                                  const std::map<int, std::vector<Rat>>& assignment,
                                  const LinearOperator* op = nullptr,
                                  const std::string& op_symbol = rb_operator_symbol()) {
  return detail::eval_rec(A, t, assignment, op, op_symbol);
}

inline std::vector<Rat> eval_tree(const MultilinearAlgebra& A, const TreePoly& p,
                                  const std::map<int, std::vector<Rat>>& assignment,
                                  const LinearOperator* op = nullptr,
                                  const std::string& op_symbol = rb_operator_symbol()) {
  std::vector<Rat> acc(static_cast<size_t>(A.dim()), Rat(0));
  for (const auto& [t, c] : p.terms()) {
    std::vector<Rat> v = detail::eval_rec(A, t, assignment, op, op_symbol);
    for (size_t i = 0; i < acc.size(); ++i)
      if (v[i] != 0) acc[i] += c * v[i];
  }
  return acc;
}

// Exhaustive check that the algebra satisfies the presentation on all basis
// tuples. For a symmetric presentation the action tables are checked first as
// semantic identities, w(x_{s_i(1)},...,x_{s_i(n)}) = s * w'(x_1,...,x_n);
// relations are stored one representative per orbit, and with the action
// verified a representative vanishing on every tuple covers its whole orbit.
inline Report check_algebra(const MultilinearAlgebra& A, const OperadPresentation& P) {
  Report rep("algebra(dim=" + std::to_string(A.dim()) + ") vs " + P.name);
  for (const Generator& g : P.alphabet.gens()) {
    const Generator* h = A.ops().find(g.id);
    if (!h)
      throw std::invalid_argument("check_algebra: algebra has no operation '" + g.id + "'");
    if (h->arity != g.arity)
      throw std::invalid_argument("check_algebra: arity mismatch on '" + g.id + "'");
  }
  const int dim = A.dim();

  if (P.symmetric) {
    for (const Generator& g : P.alphabet.gens()) {
      const ActionTable& tab = P.actions.at(g.id);
      const int n = g.arity;
      const size_t tuples = detail::checked_tuples(dim, n, "check_algebra");
      const std::vector<Rat>& T = A.tensor(g.id);
      for (int i = 1; i < n; ++i) {
        const auto& [target, sign] = tab.rows[static_cast<size_t>(i - 1)];
        const std::vector<Rat>& T2 = A.tensor(target);
        detail::FirstBad bad;
        parallel_blocks(tuples, [&](size_t b, size_t e) {
          std::vector<int> d(static_cast<size_t>(n));
          for (size_t idx = b; idx < e && !bad.cuts(idx); ++idx) {
            detail::decode_tuple(idx, dim, d);
            std::swap(d[static_cast<size_t>(i - 1)], d[static_cast<size_t>(i)]);
            size_t swapped = 0;
            for (int a : d) swapped = swapped * static_cast<size_t>(dim) + static_cast<size_t>(a);
            std::swap(d[static_cast<size_t>(i - 1)], d[static_cast<size_t>(i)]);
            const Rat* lhs = T.data() + swapped * static_cast<size_t>(dim);
            const Rat* rhs = T2.data() + idx * static_cast<size_t>(dim);
            for (int o = 0; o < dim; ++o) {
              const bool same = sign > 0 ? lhs[o] == rhs[o] : lhs[o] == -rhs[o];
              if (!same) {
                bad.record(idx);
                break;
              }
            }
          }
        });
        const std::string label =
            "action of " + g.id + " under s_" + std::to_string(i) + " (" +
            std::to_string(tuples) + " tuples)";
        if (auto w = bad.get()) {
          std::vector<int> d(static_cast<size_t>(n));
          detail::decode_tuple(*w, dim, d);
          rep.add_fail(label, g.id + " on swapped " + detail::tuple_str(d) + " is not " +
                                  (sign > 0 ? "" : "-") + target + " on " + detail::tuple_str(d));
        } else {
          rep.add_pass(label);
        }
      }
    }
  }

  int ridx = 0;
  for (const TreePoly& r : P.relations) {
    ++ridx;
    const int n = r.arity();
    const size_t tuples = detail::checked_tuples(dim, n, "check_algebra");
    std::vector<std::pair<const Tree*, Rat>> terms;
    for (const auto& [t, c] : r.terms()) terms.push_back({&t, c});
    detail::FirstBad bad;
    parallel_blocks(tuples, [&](size_t b, size_t e) {
      std::vector<int> d(static_cast<size_t>(n));
      std::vector<Rat> acc;
      for (size_t idx = b; idx < e && !bad.cuts(idx); ++idx) {
        detail::decode_tuple(idx, dim, d);
        acc.assign(static_cast<size_t>(dim), Rat(0));
        for (const auto& [t, c] : terms) {
          std::vector<Rat> v = detail::eval_on_basis(A, *t, d);
          for (int o = 0; o < dim; ++o)
            if (v[static_cast<size_t>(o)] != 0) acc[static_cast<size_t>(o)] += c * v[static_cast<size_t>(o)];
        }
        for (int o = 0; o < dim; ++o)
          if (acc[static_cast<size_t>(o)] != 0) {
            bad.record(idx);
            break;
          }
      }
    });
    const std::string label =
        "relation " + std::to_string(ridx) + " (" + std::to_string(tuples) + " tuples)";
    if (auto w = bad.get()) {
      std::vector<int> d(static_cast<size_t>(n));
      detail::decode_tuple(*w, dim, d);
      std::vector<Rat> acc(static_cast<size_t>(dim), Rat(0));
      for (const auto& [t, c] : terms) {
        std::vector<Rat> v = detail::eval_on_basis(A, *t, d);
        for (int o = 0; o < dim; ++o) acc[static_cast<size_t>(o)] += c * v[static_cast<size_t>(o)];
      }
      std::string val = "(";
      for (int o = 0; o < dim; ++o) val += (o ? "," : "") + rat_str(acc[static_cast<size_t>(o)]);
      rep.add_fail(label, "nonzero on " + detail::tuple_str(d) + ": " + val + ")");
    } else {
      rep.add_pass(label);
    }
  }
  return rep;
}

namespace detail {

// Shared data for evaluating the defining operator identity: basis vectors
// and, per arity, the configuration parts with their lambda^{|I|-1} weights.
struct CrbChecker {
  const MultilinearAlgebra& A;
  std::vector<std::vector<Rat>> basis;
  std::map<int, std::vector<std::pair<std::vector<int>, Rat>>> parts;

  CrbChecker(const MultilinearAlgebra& a, const Configuration& C, const Rat& weight) : A(a) {
    basis.assign(static_cast<size_t>(A.dim()),
                 std::vector<Rat>(static_cast<size_t>(A.dim()), Rat(0)));
    for (int i = 0; i < A.dim(); ++i) basis[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
    for (const Generator& g : A.ops().gens()) {
      if (g.arity > C.n_max())
        throw std::invalid_argument("rota-baxter check: configuration stops at n_max=" +
                                    std::to_string(C.n_max()) + ", below arity of '" + g.id + "'");
      if (!parts.count(g.arity)) {
        auto& v = parts[g.arity];
        for (const std::vector<int>& I : C.level(g.arity))
          v.push_back({I, rat_pow(weight, static_cast<unsigned>(I.size() - 1))});
      }
    }
  }

  struct Scratch {
    std::vector<Rat> lhs, rhs, acc, tmp;
    std::vector<const std::vector<Rat>*> args;
  };

  // The identity on one basis tuple (0-based digits), with the operator given
  // by its columns: w(Pd_1,...,Pd_n) == P(sum_I lambda^{|I|-1} w(args_I)).
  bool tuple_ok(const std::vector<std::vector<Rat>>& col, const Generator& g,
                const std::vector<int>& d, Scratch& s) const {
    const int n = g.arity;
    const int dim = A.dim();
    s.args.assign(static_cast<size_t>(n), nullptr);
    for (int j = 0; j < n; ++j) s.args[static_cast<size_t>(j)] = &col[static_cast<size_t>(d[static_cast<size_t>(j)])];
    A.apply_into(g.id, s.args, s.lhs);
    s.acc.assign(static_cast<size_t>(dim), Rat(0));
    for (const auto& [I, w] : parts.at(n)) {
      if (w == 0) continue;
      size_t pi = 0;
      for (int j = 0; j < n; ++j) {
        const bool in = pi < I.size() && I[pi] == j + 1;
        if (in) ++pi;
        s.args[static_cast<size_t>(j)] =
            in ? &basis[static_cast<size_t>(d[static_cast<size_t>(j)])]
               : &col[static_cast<size_t>(d[static_cast<size_t>(j)])];
      }
      A.apply_into(g.id, s.args, s.tmp);
      for (int o = 0; o < dim; ++o)
        if (s.tmp[static_cast<size_t>(o)] != 0)
          s.acc[static_cast<size_t>(o)] += w * s.tmp[static_cast<size_t>(o)];
    }
    s.rhs.assign(static_cast<size_t>(dim), Rat(0));
    for (int j = 0; j < dim; ++j) {
      if (s.acc[static_cast<size_t>(j)] == 0) continue;
      const std::vector<Rat>& cj = col[static_cast<size_t>(j)];
      for (int i = 0; i < dim; ++i)
        if (cj[static_cast<size_t>(i)] != 0)
          s.rhs[static_cast<size_t>(i)] += s.acc[static_cast<size_t>(j)] * cj[static_cast<size_t>(i)];
    }
    return s.lhs == s.rhs;
  }

  // Fail-fast scan over every generator and tuple; used by the search.
  bool matrix_ok(const std::vector<std::vector<Rat>>& col, Scratch& s) const {
    for (const Generator& g : A.ops().gens()) {
      const size_t tuples = checked_tuples(A.dim(), g.arity, "search_rb_operators");
      std::vector<int> d(static_cast<size_t>(g.arity));
      for (size_t idx = 0; idx < tuples; ++idx) {
        decode_tuple(idx, A.dim(), d);
        if (!tuple_ok(col, g, d, s)) return false;
      }
    }
    return true;
  }
};

}  // namespace detail

// Exhaustive check of the defining weight-`weight` identity of the operator
// along the configuration, one report line per operation.
inline Report check_crb_operator(const MultilinearAlgebra& A, const LinearOperator& op,
                                 const Configuration& C, const Rat& weight) {
  check_operator_shape(op, A.dim(), "check_crb_operator");
  Report rep("operator of weight " + rat_str(weight) + " along " + C.name() + " on algebra(dim=" +
             std::to_string(A.dim()) + ")");
  detail::CrbChecker chk(A, C, weight);
  std::vector<std::vector<Rat>> col(static_cast<size_t>(A.dim()));
  for (int j = 0; j < A.dim(); ++j) col[static_cast<size_t>(j)] = operator_column(op, j);
  for (const Generator& g : A.ops().gens()) {
    const size_t tuples = detail::checked_tuples(A.dim(), g.arity, "check_crb_operator");
    detail::FirstBad bad;
    parallel_blocks(tuples, [&](size_t b, size_t e) {
      detail::CrbChecker::Scratch s;
      std::vector<int> d(static_cast<size_t>(g.arity));
      for (size_t idx = b; idx < e && !bad.cuts(idx); ++idx) {
        detail::decode_tuple(idx, A.dim(), d);
        if (!chk.tuple_ok(col, g, d, s)) bad.record(idx);
      }
    });
    const std::string label = "operation " + g.id + " (" + std::to_string(tuples) + " tuples, " +
                              std::to_string(chk.parts.at(g.arity).size()) + " parts)";
    if (auto w = bad.get()) {
      std::vector<int> d(static_cast<size_t>(g.arity));
      detail::decode_tuple(*w, A.dim(), d);
      rep.add_fail(label, "identity fails on " + detail::tuple_str(d));
    } else {
      rep.add_pass(label);
    }
  }
  return rep;
}

// Structure constants of the split operations: (w, e_I) applies the operator
// to every argument position off I, then w. The output is re-verified against
// the split presentation and against the summed identity
// op((sum_I (w,e_I))(x_1,...,x_n)) = w(op(x_1),...,op(x_n)); both hold by
// theorem once the preconditions do, so a failure there aborts.
inline MultilinearAlgebra induce_split_algebra(const MultilinearAlgebra& A,
                                               const LinearOperator& op,
                                               const OperadPresentation& P,
                                               const Configuration& C) {
  Report alg = check_algebra(A, P);
  if (!alg.ok())
    throw std::invalid_argument("induce_split_algebra: not a " + P.name +
                                "-algebra: " + alg.first_failure()->label + " [" +
                                alg.first_failure()->witness + "]");
  Report rb = check_crb_operator(A, op, C, 1);
  if (!rb.ok())
    throw std::invalid_argument("induce_split_algebra: operator fails the weight-one identity: " +
                                rb.first_failure()->label + " [" + rb.first_failure()->witness +
                                "]");

  const int dim = A.dim();
  SplitAlphabet SA = split_alphabet(P, C);
  MultilinearAlgebra B(dim, SA.alphabet);
  std::vector<std::vector<Rat>> col(static_cast<size_t>(dim)), basis(static_cast<size_t>(dim));
  for (int j = 0; j < dim; ++j) {
    col[static_cast<size_t>(j)] = operator_column(op, j);
    basis[static_cast<size_t>(j)].assign(static_cast<size_t>(dim), Rat(0));
    basis[static_cast<size_t>(j)][static_cast<size_t>(j)] = 1;
  }

  for (const Generator& g : P.alphabet.gens()) {
    const int n = g.arity;
    const size_t tuples = detail::checked_tuples(dim, n, "induce_split_algebra");
    for (const std::vector<int>& I : C.level(n)) {
      std::vector<Rat>& T = B.tensor(SA.id(g.id, I));
      std::vector<int> d(static_cast<size_t>(n));
      std::vector<const std::vector<Rat>*> args(static_cast<size_t>(n));
      std::vector<Rat> out;
      for (size_t idx = 0; idx < tuples; ++idx) {
        detail::decode_tuple(idx, dim, d);
        size_t pi = 0;
        for (int j = 0; j < n; ++j) {
          const bool in = pi < I.size() && I[pi] == j + 1;
          if (in) ++pi;
          args[static_cast<size_t>(j)] =
              in ? &basis[static_cast<size_t>(d[static_cast<size_t>(j)])]
                 : &col[static_cast<size_t>(d[static_cast<size_t>(j)])];
        }
        A.apply_into(g.id, args, out);
        for (int o = 0; o < dim; ++o)
          T[idx * static_cast<size_t>(dim) + static_cast<size_t>(o)] = out[static_cast<size_t>(o)];
      }
    }
  }

  Report split_ok = check_algebra(B, split_presentation(P, C));
  if (!split_ok.ok())
    throw std::logic_error("induce_split_algebra: induced operations violate the split relations: " +
                           split_ok.first_failure()->label + " [" +
                           split_ok.first_failure()->witness + "]");

  for (const Generator& g : P.alphabet.gens()) {
    const int n = g.arity;
    const size_t tuples = detail::checked_tuples(dim, n, "induce_split_algebra");
    std::vector<int> d(static_cast<size_t>(n));
    std::vector<const std::vector<Rat>*> args(static_cast<size_t>(n));
    std::vector<Rat> want, acc, lhs;
    for (size_t idx = 0; idx < tuples; ++idx) {
      detail::decode_tuple(idx, dim, d);
      acc.assign(static_cast<size_t>(dim), Rat(0));
      for (const std::vector<int>& I : C.level(n)) {
        const Rat* s = B.tensor(SA.id(g.id, I)).data() + idx * static_cast<size_t>(dim);
        for (int o = 0; o < dim; ++o)
          if (s[o] != 0) acc[static_cast<size_t>(o)] += s[o];
      }
      apply_operator_into(op, acc, lhs);
      for (int j = 0; j < n; ++j)
        args[static_cast<size_t>(j)] = &col[static_cast<size_t>(d[static_cast<size_t>(j)])];
      A.apply_into(g.id, args, want);
      if (lhs != want)
        throw std::logic_error(
            "induce_split_algebra: summed split operations fail the homomorphism identity on " +
            detail::tuple_str(d));
    }
  }
  return B;
}

namespace detail {

// Deterministic matrix enumeration over a finite entry set. When 0 is among
// the entries, matrices come by ascending support size (Gosper's hack walks
// the supports of one size in ascending bit-pattern order), so sparse
// witnesses surface first; otherwise a plain odometer over all cells.
class MatrixStream {
 public:
  MatrixStream(int cells, const std::vector<Rat>& entries) : cells_(cells) {
    for (size_t i = 0; i < entries.size(); ++i) {
      if (entries[i] == 0)
        zero_ = static_cast<int>(i);
      else
        nz_.push_back(static_cast<int>(i));
    }
    entry_count_ = static_cast<int>(entries.size());
    if (zero_ < 0) digits_.assign(static_cast<size_t>(cells_), 0);
  }

  // Writes the entry-set index of every cell; false once exhausted.
  bool next(std::vector<int>& cell_entry) {
    cell_entry.assign(static_cast<size_t>(cells_), 0);
    if (zero_ < 0) {
      if (done_) return false;
      for (int c = 0; c < cells_; ++c) cell_entry[static_cast<size_t>(c)] = digits_[static_cast<size_t>(c)];
      int j = cells_ - 1;
      while (j >= 0 && ++digits_[static_cast<size_t>(j)] == entry_count_) {
        digits_[static_cast<size_t>(j)] = 0;
        --j;
      }
      if (j < 0) done_ = true;
      return true;
    }
    if (done_) return false;
    if (fresh_) {
      fresh_ = false;
      for (int c = 0; c < cells_; ++c) cell_entry[static_cast<size_t>(c)] = zero_;
      if (!advance_support()) done_ = true;
      return true;
    }
    int slot = 0;
    for (int c = 0; c < cells_; ++c)
      cell_entry[static_cast<size_t>(c)] =
          (mask_ >> c & 1u) ? nz_[static_cast<size_t>(digits_[static_cast<size_t>(slot++)])] : zero_;
    int j = pop_ - 1;
    while (j >= 0 && ++digits_[static_cast<size_t>(j)] == static_cast<int>(nz_.size())) {
      digits_[static_cast<size_t>(j)] = 0;
      --j;
    }
    if (j < 0 && !advance_mask()) done_ = true;
    return true;
  }

 private:
  bool advance_mask() {
    const uint32_t c = mask_ & (~mask_ + 1u);
    const uint32_t r = mask_ + c;
    const uint32_t nxt = (((r ^ mask_) >> 2) / c) | r;
    if (nxt < (1u << cells_)) {
      mask_ = nxt;
      return true;
    }
    return advance_support();
  }
  bool advance_support() {
    if (nz_.empty() || pop_ == cells_) return false;
    ++pop_;
    mask_ = (1u << pop_) - 1u;
    digits_.assign(static_cast<size_t>(pop_), 0);
    return true;
  }

  int cells_;
  int entry_count_ = 0;
  int zero_ = -1;
  std::vector<int> nz_;  // entry-set indices of the nonzero values
  bool fresh_ = true;
  bool done_ = false;
  int pop_ = 0;
  uint32_t mask_ = 0;
  std::vector<int> digits_;
};

}  // namespace detail

// Brute-force enumeration of operator matrices over a finite entry set,
// keeping those that satisfy the weight-`weight` identity along C on every
// basis tuple. The scan runs in deterministic chunks (parallel within a
// chunk, candidates kept in enumeration order), stops once max_results have
// been collected, and returns the survivors in a canonical matrix order.
inline std::vector<LinearOperator> search_rb_operators(const MultilinearAlgebra& A,
                                                       const Configuration& C, const Rat& weight,
                                                       std::vector<Rat> entries, int max_results) {
  std::sort(entries.begin(), entries.end());
  entries.erase(std::unique(entries.begin(), entries.end()), entries.end());
  if (entries.empty())
    throw std::invalid_argument("search_rb_operators: entry set is empty");
  if (max_results < 1)
    throw std::invalid_argument("search_rb_operators: max_results must be >= 1");
  const int dim = A.dim();
  const int cells = dim * dim;
  if (cells > 25)
    throw std::invalid_argument("search_rb_operators: dim^2 = " + std::to_string(cells) +
                                " exceeds the 25-cell enumeration bound");
  long double space = 1;
  for (int c = 0; c < cells; ++c) {
    space *= static_cast<long double>(entries.size());
    if (space > 1e8L)
      throw std::invalid_argument("search_rb_operators: " + std::to_string(entries.size()) + "^" +
                                  std::to_string(cells) + " candidates exceed the 10^8 guard");
  }

  detail::CrbChecker chk(A, C, weight);
  detail::MatrixStream stream(cells, entries);
  std::vector<LinearOperator> found;
  const size_t chunk = 16384;
  std::vector<std::vector<int>> cand;
  std::vector<int> row(static_cast<size_t>(cells));
  bool exhausted = false;
  while (!exhausted && static_cast<int>(found.size()) < max_results) {
    cand.clear();
    while (cand.size() < chunk) {
      if (!stream.next(row)) {
        exhausted = true;
        break;
      }
      cand.push_back(row);
    }
    if (cand.empty()) break;
    std::vector<char> ok(cand.size(), 0);
    parallel_blocks(cand.size(), [&](size_t b, size_t e) {
      detail::CrbChecker::Scratch s;
      std::vector<std::vector<Rat>> col(static_cast<size_t>(dim),
                                        std::vector<Rat>(static_cast<size_t>(dim)));
      for (size_t i = b; i < e; ++i) {
        for (int c = 0; c < cells; ++c)
          col[static_cast<size_t>(c % dim)][static_cast<size_t>(c / dim)] =
              entries[static_cast<size_t>(cand[i][static_cast<size_t>(c)])];
        ok[i] = chk.matrix_ok(col, s) ? 1 : 0;
      }
    });
    for (size_t i = 0; i < cand.size() && static_cast<int>(found.size()) < max_results; ++i) {
      if (!ok[i]) continue;
      LinearOperator op = zero_operator(dim);
      for (int c = 0; c < cells; ++c)
        op.matrix[static_cast<size_t>(c / dim)][static_cast<size_t>(c % dim)] =
            entries[static_cast<size_t>(cand[i][static_cast<size_t>(c)])];
      if (!check_crb_operator(A, op, C, weight).ok())
        throw std::logic_error("search_rb_operators: scan and checker disagree on a candidate");
      found.push_back(std::move(op));
    }
  }

  std::sort(found.begin(), found.end(), [](const LinearOperator& a, const LinearOperator& b) {
    return a.matrix < b.matrix;
  });
  return found;
}

// First cell where two algebras over the same alphabet differ, as a printable
// witness; nullopt when they agree entry for entry.
inline std::optional<std::string> first_structure_difference(const MultilinearAlgebra& a,
                                                             const MultilinearAlgebra& b) {
  if (a.dim() != b.dim())
    return "dimensions differ: " + std::to_string(a.dim()) + " vs " + std::to_string(b.dim());
  std::vector<std::string> ids;
  for (const Generator& g : a.ops().gens()) ids.push_back(g.id);
  std::vector<std::string> other;
  for (const Generator& g : b.ops().gens()) other.push_back(g.id);
  std::sort(ids.begin(), ids.end());
  std::sort(other.begin(), other.end());
  if (ids != other) return std::string("operation alphabets differ");
  for (const std::string& id : ids) {
    if (a.ops().at(id).arity != b.ops().at(id).arity)
      return "arity of '" + id + "' differs";
    const std::vector<Rat>& ta = a.tensor(id);
    const std::vector<Rat>& tb = b.tensor(id);
    for (size_t k = 0; k < ta.size(); ++k)
      if (ta[k] != tb[k]) {
        const int dim = a.dim();
        const int n = a.ops().at(id).arity;
        std::vector<int> d(static_cast<size_t>(n));
        detail::decode_tuple(k / static_cast<size_t>(dim), dim, d);
        return "operation " + id + " on " + detail::tuple_str(d) + " coordinate " +
               std::to_string(k % static_cast<size_t>(dim) + 1) + ": " + rat_str(ta[k]) + " vs " +
               rat_str(tb[k]);
      }
  }
  return std::nullopt;
}

}  // namespace opforge
