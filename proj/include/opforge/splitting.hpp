#pragma once
// Splitting a presented operad along a configuration. The split alphabet
// carries one generator per (base operation, part) pair; split_tree relabels
// a decorated tree by the meet of a leaf subset with each vertex (summing
// over all parts where the meet is empty); split_presentation assembles the
// split operad's relations. The remaining routines verify, exactly and over
// the free operad, the identities this construction is supposed to satisfy:
// the splitting-sum identity, the canonical morphisms into the split operad,
// morphisms induced on split operads, and restriction between configurations.

#include <algorithm>
#include <limits>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "opforge/action.hpp"
#include "opforge/config.hpp"
#include "opforge/poly.hpp"
#include "opforge/presentation.hpp"
#include "opforge/report.hpp"
#include "opforge/span.hpp"
#include "opforge/threads.hpp"
#include "opforge/tree.hpp"

namespace opforge {

struct SplitPart {
  std::string base;       // generator of the unsplit presentation
  std::vector<int> part;  // sorted subset of [arity]
};

// Naming scheme: the part {1,3} of generator "mu" becomes "mu_13". Parts are
// subsets of [arity] with arity <= 9, so the digit string is unambiguous.
inline std::string split_id(const std::string& base, const std::vector<int>& part) {
  std::string s = base;
  s += '_';
  for (int i : part) s += static_cast<char>('0' + i);
  return s;
}

struct SplitAlphabet {
  Alphabet alphabet;
  ActionSet actions;  // empty when the base presentation is nonsymmetric
  std::map<std::string, std::map<std::vector<int>, std::string>> id_of;
  std::map<std::string, SplitPart> part_of;

  const std::string& id(const std::string& base, const std::vector<int>& part) const {
    auto g = id_of.find(base);
    if (g == id_of.end())
      throw std::invalid_argument("split alphabet: unknown base generator '" + base + "'");
    auto it = g->second.find(part);
    if (it == g->second.end()) {
      std::ostringstream os;
      os << "split alphabet: part {";
      for (int i : part) os << i << (i == part.back() ? "" : ",");
      os << "} of '" << base << "' is not in the configuration";
      throw std::invalid_argument(os.str());
    }
    return it->second;
  }
};

inline SplitAlphabet split_alphabet(const OperadPresentation& P, const Configuration& C) {
  SplitAlphabet out;
  for (const Generator& g : P.alphabet.gens()) {
    if (g.arity < 2)
      throw std::invalid_argument("split_alphabet: generator '" + g.id +
                                  "' has arity " + std::to_string(g.arity) +
                                  "; only arities >= 2 can be split");
    if (g.arity > 9)
      throw std::invalid_argument("split_alphabet: arity of '" + g.id +
                                  "' exceeds the digit-suffix naming scheme");
    if (g.arity > C.n_max())
      throw std::invalid_argument("split_alphabet: configuration stops at n_max=" +
                                  std::to_string(C.n_max()) + ", below arity of '" + g.id + "'");
  }
  if (P.symmetric && !s_invariant(C))
    throw std::invalid_argument(
        "split_alphabet: configuration '" + C.name() +
        "' is not invariant under the symmetric action; a symmetric "
        "presentation cannot be split along it");

  for (const Generator& g : P.alphabet.gens()) {
    for (const std::vector<int>& I : C.level(g.arity)) {
      std::string id = split_id(g.id, I);
      out.alphabet.add({id, g.arity});
      out.id_of[g.id][I] = id;
      out.part_of[id] = {g.id, I};
    }
  }

  if (P.symmetric) {
    // s_i sends (w, e_I) to (w', e_{s_i(I)}) with the sign of w ^ s_i = s * w'.
    for (const Generator& g : P.alphabet.gens()) {
      const ActionTable& base = P.actions.at(g.id);
      for (const std::vector<int>& I : C.level(g.arity)) {
        ActionTable tab;
        tab.arity = g.arity;
        for (int i = 1; i < g.arity; ++i) {
          const auto& row = base.rows[static_cast<size_t>(i - 1)];
          std::set<int> img;
          for (int x : I) img.insert(x == i ? i + 1 : (x == i + 1 ? i : x));
          tab.rows.push_back({out.id(row.first, std::vector<int>(img.begin(), img.end())),
                              row.second});
        }
        out.actions[out.id(g.id, I)] = std::move(tab);
      }
    }
    if (auto issue = validate_actions(out.actions))
      throw std::logic_error("split_alphabet: constructed action is inconsistent on '" +
                             issue->gen + "': " + issue->detail);
  }
  return out;
}

namespace detail {

inline TreePoly split_rec(const Tree& t, const std::set<int>& J,
                          const Configuration& C, const SplitAlphabet& SA) {
  if (t.is_leaf()) return TreePoly(t);
  const int k = t.arity();
  std::vector<std::vector<std::pair<Tree, Rat>>> kid(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) {
    TreePoly p = split_rec(t.children()[static_cast<size_t>(i)], J, C, SA);
    kid[static_cast<size_t>(i)].assign(p.terms().begin(), p.terms().end());
  }

  std::set<int> K = meet(J, t);
  std::vector<const std::string*> labels;
  if (!K.empty()) {
    if (!C.contains(k, K)) {
      std::ostringstream os;
      os << "split_tree: meet {";
      for (int i : K) os << i << (i == *K.rbegin() ? "" : ",");
      os << "} at a " << k << "-ary vertex is outside the configuration "
         << "(closure violation in '" << C.name() << "')";
      throw std::invalid_argument(os.str());
    }
    labels.push_back(&SA.id(t.gen(), std::vector<int>(K.begin(), K.end())));
  } else {
    for (const std::vector<int>& I : C.level(k)) labels.push_back(&SA.id(t.gen(), I));
  }

  TreePoly out;
  std::vector<size_t> idx(static_cast<size_t>(k), 0);
  while (true) {
    Rat coeff = 1;
    std::vector<Tree> sub;
    sub.reserve(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) {
      const auto& term = kid[static_cast<size_t>(i)][idx[static_cast<size_t>(i)]];
      sub.push_back(term.first);
      coeff *= term.second;
    }
    for (const std::string* lab : labels) out.add(Tree::vertex(*lab, sub), coeff);
    int pos = k - 1;
    while (pos >= 0 && ++idx[static_cast<size_t>(pos)] == kid[static_cast<size_t>(pos)].size()) {
      idx[static_cast<size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
  }
  return out;
}

}  // namespace detail

// Sp_J of a decorated tree: each vertex is relabeled by the part (meet of J
// with its children's leaf sets) when that meet is nonempty, and replaced by
// the sum over all parts of its arity otherwise. J = {} stars every vertex.
inline TreePoly split_tree(const Tree& t, const std::set<int>& J,
                           const Configuration& C, const SplitAlphabet& SA) {
  if (!J.empty()) {
    std::set<int> leaves = t.leaf_set();
    const int n = static_cast<int>(leaves.size());
    for (int x : J)
      if (!leaves.count(x))
        throw std::invalid_argument("split_tree: J contains " + std::to_string(x) +
                                    ", which is not a leaf label of the tree");
    if (n > C.n_max() || !C.contains(n, J)) {
      std::ostringstream os;
      os << "split_tree: J = {";
      for (int x : J) os << x << (x == *J.rbegin() ? "" : ",");
      os << "} is not a part of '" << C.name() << "' at arity " << n;
      throw std::invalid_argument(os.str());
    }
  }
  return detail::split_rec(t, J, C, SA);
}

inline TreePoly split_poly(const TreePoly& p, const std::set<int>& J,
                           const Configuration& C, const SplitAlphabet& SA) {
  TreePoly out;
  for (const auto& [t, c] : p.terms()) out += split_tree(t, J, C, SA) * c;
  return out;
}

struct SplitPresentation {
  OperadPresentation pres;
  SplitAlphabet alpha;
};

// Relations of the split operad: one splitting per (relation, part J) pair,
// normal-formed, with vanishing images dropped. Order is deterministic:
// relations in presentation order, J in the level's set order.
inline SplitPresentation split_presentation_full(const OperadPresentation& P,
                                                 const Configuration& C) {
  Report v = validate(P);
  if (!v.ok()) {
    const CheckResult* f = v.first_failure();
    throw std::invalid_argument("split_presentation: presentation '" + P.name +
                                "' fails validation: " + f->label + " [" + f->witness + "]");
  }
  ClosureReport cl = validate_closure(C);
  if (!cl.valid)
    throw std::invalid_argument("split_presentation: " + cl.str());

  SplitPresentation out;
  out.alpha = split_alphabet(P, C);
  out.pres.name = "split(" + P.name + "," + C.name() + ")";
  out.pres.symmetric = P.symmetric;
  out.pres.alphabet = out.alpha.alphabet;
  out.pres.actions = out.alpha.actions;
  out.pres.absorbed = P.absorbed;

  for (const TreePoly& r : P.relations) {
    const int n = r.arity();
    if (n > C.n_max())
      throw std::invalid_argument("split_presentation: relation with " + std::to_string(n) +
                                  " leaves exceeds the configuration's n_max");
    for (const std::vector<int>& J : C.level(n)) {
      TreePoly q = split_poly(r, std::set<int>(J.begin(), J.end()), C, out.alpha);
      q = normal_form(q, out.pres.action_ptr());
      if (!q.empty()) out.pres.relations.push_back(std::move(q));
    }
  }
  return out;
}

inline OperadPresentation split_presentation(const OperadPresentation& P,
                                             const Configuration& C) {
  return split_presentation_full(P, C).pres;
}

// Largest leaf count at which the splitting-sum identity is guaranteed:
// unbounded for the arity and trivial families, the configuration's index
// otherwise. Leaf counts above the bound are reported as skipped, not tested.
inline int splitting_sum_bound(const Configuration& C) {
  if (C.kind() == ConfigKind::arity || C.kind() == ConfigKind::trivial)
    return std::numeric_limits<int>::max();
  IndexValue iv = index_of(C);
  switch (iv.tag) {
    case IndexValue::infinite: return std::numeric_limits<int>::max();
    case IndexValue::finite:
    case IndexValue::at_least: return iv.value;
    default: return 1;
  }
}

// Exhaustive check that sum_{J in C_n} Sp_J(t) = Sp_{}(t) for every decorated
// tree with up to leaf_max leaves, as an exact equality of tree polynomials.
inline Report check_splitting_sum(const OperadPresentation& P, const Configuration& C,
                                  int leaf_max = 6) {
  Report rep("splitting-sum: " + P.name + " along " + C.name());
  if (leaf_max < 1 || leaf_max > 7)
    throw std::invalid_argument("check_splitting_sum: leaf_max must be in 1..7");
  ClosureReport cl = validate_closure(C);
  if (!cl.valid) {
    rep.add_fail("configuration closure", cl.str());
    return rep;
  }
  SplitAlphabet SA = split_alphabet(P, C);
  const int bound = splitting_sum_bound(C);

  for (int n = 2; n <= leaf_max; ++n) {
    std::string label = "n=" + std::to_string(n);
    if (n > C.n_max()) {
      rep.add_skip(label, "configuration not defined at this arity");
      continue;
    }
    if (n > bound) {
      rep.add_skip(label, "leaf count exceeds the configuration index; "
                          "the identity is not asserted there");
      continue;
    }
    std::vector<Tree> trees = enumerate_decorated_trees(n, P.alphabet);
    std::vector<std::string> bad(trees.size());
    parallel_blocks(trees.size(), [&](size_t b, size_t e) {
      for (size_t i = b; i < e; ++i) {
        TreePoly total;
        for (const std::vector<int>& J : C.level(n))
          total += split_tree(trees[i], std::set<int>(J.begin(), J.end()), C, SA);
        if (!(total == split_tree(trees[i], {}, C, SA))) bad[i] = trees[i].str();
      }
    });
    bool failed = false;
    for (const std::string& w : bad)
      if (!w.empty()) {
        rep.add_fail(label, "sum over parts differs from the starred splitting on " + w);
        failed = true;
        break;
      }
    if (!failed)
      rep.add_pass(label + " (" + std::to_string(trees.size()) + " trees)");
  }
  return rep;
}

enum class MorphismVariant { sum_arity, sum_full, top };

inline const char* morphism_variant_name(MorphismVariant v) {
  switch (v) {
    case MorphismVariant::sum_arity: return "sum-arity";
    case MorphismVariant::sum_full: return "sum-full";
    default: return "top";
  }
}

// The three canonical maps from an operad into its split operad:
//   sum-arity: w -> sum_i (w, e_{i})          (arity configuration only)
//   sum-full:  w -> sum_{I in C_k} (w, e_I)   (needs full levels at every
//                                              generator and relation arity)
//   top:       w -> (w, e_{[k]})              (needs [k] in C_k likewise)
// Each relation's image under the substitution must equal the corresponding
// sum of splittings (resp. the top splitting) exactly; hypothesis failures
// are reported as skipped rather than silently worked around.
inline Report check_canonical_morphisms(const OperadPresentation& P, const Configuration& C,
                                        MorphismVariant v) {
  Report rep(std::string("canonical morphism ") + morphism_variant_name(v) + ": " +
             P.name + " along " + C.name());
  ClosureReport cl = validate_closure(C);
  if (!cl.valid) {
    rep.add_fail("configuration closure", cl.str());
    return rep;
  }
  if (v == MorphismVariant::sum_arity && C.kind() != ConfigKind::arity) {
    rep.add_fail("variant precondition",
                 "the sum-arity morphism is stated for the arity configuration, not " +
                 C.name());
    return rep;
  }

  auto level_full = [&C](int k) {
    return C.level(k).size() == (static_cast<size_t>(1) << k) - 1;
  };
  auto has_top = [&C](int k) { return C.contains(k, [k] {
    std::set<int> full;
    for (int i = 1; i <= k; ++i) full.insert(i);
    return full;
  }()); };

  std::set<int> needed;
  for (const Generator& g : P.alphabet.gens()) needed.insert(g.arity);
  for (const TreePoly& r : P.relations) needed.insert(r.arity());
  for (int k : needed) {
    if (k > C.n_max()) {
      rep.add_skip("hypothesis", "configuration not defined at arity " + std::to_string(k));
      return rep;
    }
    if (v == MorphismVariant::sum_full && !level_full(k)) {
      rep.add_skip("hypothesis", "C_" + std::to_string(k) +
                   " is not the full power set; the summed morphism is only "
                   "asserted below the configuration index");
      return rep;
    }
    if (v == MorphismVariant::top && !has_top(k)) {
      rep.add_skip("hypothesis", "[" + std::to_string(k) + "] is not a part of C_" +
                   std::to_string(k) + "; the top morphism is undefined there");
      return rep;
    }
  }

  SplitPresentation S = split_presentation_full(P, C);
  std::map<std::string, TreePoly> gmap;
  for (const Generator& g : P.alphabet.gens()) {
    std::vector<Tree> args;
    for (int i = 1; i <= g.arity; ++i) args.push_back(Tree::leaf(i));
    TreePoly img;
    if (v == MorphismVariant::top) {
      std::vector<int> full;
      for (int i = 1; i <= g.arity; ++i) full.push_back(i);
      img.add(Tree::vertex(S.alpha.id(g.id, full), args), 1);
    } else if (v == MorphismVariant::sum_arity) {
      for (int i = 1; i <= g.arity; ++i)
        img.add(Tree::vertex(S.alpha.id(g.id, {i}), args), 1);
    } else {
      for (const std::vector<int>& I : C.level(g.arity))
        img.add(Tree::vertex(S.alpha.id(g.id, I), args), 1);
    }
    gmap[g.id] = std::move(img);
  }

  int idx = 0;
  for (const TreePoly& r : P.relations) {
    ++idx;
    const int n = r.arity();
    TreePoly img = substitute_generators(r, gmap);
    TreePoly expect;
    std::string what;
    if (v == MorphismVariant::top) {
      std::set<int> full;
      for (int i = 1; i <= n; ++i) full.insert(i);
      expect = split_poly(r, full, C, S.alpha);
      what = "its top splitting";
    } else {
      for (const std::vector<int>& J : C.level(n))
        expect += split_poly(r, std::set<int>(J.begin(), J.end()), C, S.alpha);
      what = "the sum of its splittings";
    }
    std::string label = "relation " + std::to_string(idx) + " maps to " + what;
    if (img == expect)
      rep.add_pass(label);
    else
      rep.add_fail(label, "image " + img.str() + " differs from " + expect.str());
  }
  return rep;
}

// A generator-wise morphism candidate: source generator -> (target generator,
// sign). Extended to trees multiplicatively.
using GeneratorMap = std::map<std::string, std::pair<std::string, int>>;

namespace detail {

inline std::map<std::string, TreePoly> morphism_substitution(const GeneratorMap& eta,
                                                             const Alphabet& src,
                                                             const Alphabet& dst) {
  std::map<std::string, TreePoly> gmap;
  for (const Generator& g : src.gens()) {
    auto it = eta.find(g.id);
    if (it == eta.end())
      throw std::invalid_argument("morphism: no image for generator '" + g.id + "'");
    const auto& [target, sign] = it->second;
    const Generator* h = dst.find(target);
    if (!h)
      throw std::invalid_argument("morphism: image '" + target + "' is not a target generator");
    if (h->arity != g.arity)
      throw std::invalid_argument("morphism: '" + g.id + "' and '" + target +
                                  "' have different arities");
    if (sign != 1 && sign != -1)
      throw std::invalid_argument("morphism: sign for '" + g.id + "' must be +1 or -1");
    std::vector<Tree> args;
    for (int i = 1; i <= g.arity; ++i) args.push_back(Tree::leaf(i));
    TreePoly img;
    img.add(Tree::vertex(target, args), sign);
    gmap[g.id] = std::move(img);
  }
  return gmap;
}

// Lazily built span bases of a presentation's ideal components, one per arity.
class IdealSpans {
 public:
  explicit IdealSpans(const OperadPresentation& P) : P_(&P) {}

  bool contains(const TreePoly& p) {
    if (p.empty()) return true;
    const int n = p.arity();
    auto it = spans_.find(n);
    if (it == spans_.end()) {
      auto [ins, _] = spans_.try_emplace(n);
      it = ins;
      for (const TreePoly& q : ideal_component(*P_, n))
        it->second.basis.add(to_row(q, it->second.ix));
    }
    return it->second.basis.contains(p, it->second.ix);
  }

 private:
  struct Entry {
    TreeIndexer ix;
    SpanBasis basis;
  };
  const OperadPresentation* P_;
  std::map<int, Entry> spans_;
};

}  // namespace detail

// Checks that eta induces a morphism of split operads. Three layers, each
// reported separately:
//   1. eta is a morphism of the unsplit presentations (relation images land
//      in the target ideal; generator images are equivariant when symmetric);
//   2. the induced map (w, e_I) -> (eta(w), e_I) sends split relations into
//      the split target ideal;
//   3. the square  alpha_dst . eta = induced . alpha_src  commutes on
//      generators, where alpha is the summed canonical morphism.
inline Report induced_split_morphism(const GeneratorMap& eta,
                                     const OperadPresentation& Psrc,
                                     const OperadPresentation& Pdst,
                                     const Configuration& C) {
  Report rep("induced split morphism: " + Psrc.name + " -> " + Pdst.name +
             " along " + C.name());
  if (Psrc.symmetric != Pdst.symmetric) {
    rep.add_fail("compatibility", "source and target disagree on symmetry");
    return rep;
  }

  std::map<std::string, TreePoly> gmap;
  try {
    gmap = detail::morphism_substitution(eta, Psrc.alphabet, Pdst.alphabet);
  } catch (const std::invalid_argument& e) {
    rep.add_fail("generator images", e.what());
    return rep;
  }

  if (Psrc.symmetric) {
    bool ok = true;
    for (const Generator& g : Psrc.alphabet.gens()) {
      const ActionTable& srow = Psrc.actions.at(g.id);
      const auto& [h, u] = eta.at(g.id);
      const ActionTable& drow = Pdst.actions.at(h);
      for (int i = 1; i < g.arity && ok; ++i) {
        const auto& [g2, s] = srow.rows[static_cast<size_t>(i - 1)];
        const auto& [h2, v] = drow.rows[static_cast<size_t>(i - 1)];
        const auto& [h3, w] = eta.at(g2);
        if (h3 != h2 || s * w != u * v) {
          rep.add_fail("equivariance",
                       "images of '" + g.id + "' break the (" + std::to_string(i) + " " +
                       std::to_string(i + 1) + ") action: eta(" + g.id + "^s) is " +
                       (s * w < 0 ? "-" : "") + h3 + " but eta(" + g.id + ")^s is " +
                       (u * v < 0 ? "-" : "") + h2);
          ok = false;
        }
      }
    }
    if (ok) rep.add_pass("generator images are equivariant");
    else return rep;
  }

  detail::IdealSpans dst_ideal(Pdst);
  int idx = 0;
  for (const TreePoly& r : Psrc.relations) {
    ++idx;
    TreePoly img = normal_form(substitute_generators(r, gmap), Pdst.action_ptr());
    std::string label = "relation " + std::to_string(idx) + " image lies in the target ideal";
    if (dst_ideal.contains(img))
      rep.add_pass(label);
    else {
      rep.add_fail(label, "image " + img.str() + " is not a consequence of the target relations");
      return rep;
    }
  }

  SplitPresentation Ss = split_presentation_full(Psrc, C);
  SplitPresentation Sd = split_presentation_full(Pdst, C);
  std::map<std::string, TreePoly> theta;
  for (const auto& [id, sp] : Ss.alpha.part_of) {
    const auto& [target, sign] = eta.at(sp.base);
    const Generator* g = Ss.alpha.alphabet.find(id);
    std::vector<Tree> args;
    for (int i = 1; i <= g->arity; ++i) args.push_back(Tree::leaf(i));
    TreePoly img;
    img.add(Tree::vertex(Sd.alpha.id(target, sp.part), args), sign);
    theta[id] = std::move(img);
  }

  detail::IdealSpans split_ideal(Sd.pres);
  idx = 0;
  for (const TreePoly& q : Ss.pres.relations) {
    ++idx;
    TreePoly img = normal_form(substitute_generators(q, theta), Sd.pres.action_ptr());
    std::string label = "split relation " + std::to_string(idx) +
                        " image lies in the split target ideal";
    if (split_ideal.contains(img))
      rep.add_pass(label);
    else {
      rep.add_fail(label, "image " + img.str() + " is not a consequence of the split target relations");
      return rep;
    }
  }

  for (const Generator& g : Psrc.alphabet.gens()) {
    const auto& [h, sign] = eta.at(g.id);
    std::vector<Tree> args;
    for (int i = 1; i <= g.arity; ++i) args.push_back(Tree::leaf(i));
    TreePoly lhs;  // alpha_dst(eta(g))
    for (const std::vector<int>& I : C.level(g.arity))
      lhs.add(Tree::vertex(Sd.alpha.id(h, I), args), sign);
    TreePoly alpha_src;
    for (const std::vector<int>& I : C.level(g.arity))
      alpha_src.add(Tree::vertex(Ss.alpha.id(g.id, I), args), 1);
    TreePoly rhs = substitute_generators(alpha_src, theta);
    std::string label = "functoriality square commutes on '" + g.id + "'";
    if (lhs == rhs)
      rep.add_pass(label);
    else
      rep.add_fail(label, lhs.str() + " differs from " + rhs.str());
  }
  return rep;
}

// Restriction between configurations C <= C' of the same presentation: the
// map fixing (w, e_I) for parts I in C and killing the rest. It descends to
// the split operads exactly when every split relation of C' lands in the
// split ideal of C. For J in C_n the image equals the J-splitting over C on
// the nose (the meets of J stay inside C by closure). For J outside C_n the
// image is usually zero; when it is not, ideal membership is the morphism
// criterion, and a surviving image outside the ideal is a genuine
// obstruction: with C = capped(2) inside C' = power, the full-set splitting
// of associativity survives as dot-associativity, which the capped
// splittings do not span, so that restriction is not a morphism at all.
inline Report restriction_morphism(const OperadPresentation& P, const Configuration& C,
                                   const Configuration& Cbig) {
  Report rep("restriction: " + P.name + " from " + Cbig.name() + " to " + C.name());
  const int nm = std::min(C.n_max(), Cbig.n_max());
  for (int n = 1; n <= nm; ++n)
    for (const std::vector<int>& I : C.level(n))
      if (!Cbig.contains(n, std::set<int>(I.begin(), I.end()))) {
        std::ostringstream os;
        os << "C_" << n << " contains a part outside the larger configuration";
        rep.add_fail("containment", os.str());
        return rep;
      }
  rep.add_pass("levelwise containment");

  SplitPresentation big = split_presentation_full(P, Cbig);
  SplitPresentation small = split_presentation_full(P, C);

  auto survives = [&](const Tree& t) {
    std::vector<const Tree*> verts;
    collect_vertices(t, verts);
    for (const Tree* v : verts) {
      const SplitPart& sp = big.alpha.part_of.at(v->gen());
      if (!C.contains(v->arity(), std::set<int>(sp.part.begin(), sp.part.end())))
        return false;
    }
    return true;
  };

  detail::IdealSpans small_ideal(small.pres);
  int idx = 0;
  for (const TreePoly& r : P.relations) {
    ++idx;
    const int n = r.arity();
    for (const std::vector<int>& J : Cbig.level(n)) {
      std::set<int> Jset(J.begin(), J.end());
      TreePoly q = normal_form(split_poly(r, Jset, Cbig, big.alpha), big.pres.action_ptr());
      TreePoly img;
      for (const auto& [t, c] : q.terms())
        if (survives(t)) img.add(t, c);

      std::ostringstream lab;
      lab << "relation " << idx << ", J={";
      for (int x : J) lab << x << (x == J.back() ? "" : ",");
      lab << "}";
      if (C.contains(n, Jset)) {
        TreePoly expect = normal_form(split_poly(r, Jset, C, small.alpha),
                                      small.pres.action_ptr());
        if (img == expect)
          rep.add_pass(lab.str() + ": restricts to the matching splitting");
        else
          rep.add_fail(lab.str(), "restricted image " + img.str() +
                       " differs from the splitting over the smaller configuration " +
                       expect.str());
      } else if (img.empty()) {
        rep.add_pass(lab.str() + ": killed (part outside the smaller configuration)");
      } else if (small_ideal.contains(img)) {
        rep.add_pass(lab.str() + ": survives but is a consequence of the smaller relations");
      } else {
        rep.add_fail(lab.str(), "image " + img.str() +
                     " survives restriction and is not a consequence of the "
                     "smaller configuration's relations; the restriction map "
                     "is not a morphism for this pair");
      }
    }
  }
  return rep;
}

}  // namespace opforge
