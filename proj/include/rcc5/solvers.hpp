#ifndef RCC5_SOLVERS_HPP
#define RCC5_SOLVERS_HPP

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "rcc5/catalog.hpp"
#include "rcc5/closure.hpp"
#include "rcc5/composition.hpp"
#include "rcc5/interpretation.hpp"
#include "rcc5/network.hpp"
#include "rcc5/scc.hpp"

namespace rcc5 {

enum class Verdict { Satisfiable, Unsatisfiable };

/// Outcome of a decision procedure. The model is present exactly when
/// the verdict is Satisfiable and model construction was requested; it
/// is always verified against the input before being returned.
struct SolveResult {
  Verdict verdict = Verdict::Unsatisfiable;
  std::optional<Interpretation> model;
  std::string algorithm;

  bool sat() const { return verdict == Verdict::Satisfiable; }
};

struct SolveOptions {
  bool build_model = true;
};

/// An input's relation set falls outside the procedure's subclass.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

inline void require_subclass(const Network& net, Subclass allowed,
                             const char* algorithm) {
  Subclass rs = relation_set(net);
  if (!rs.subset_of(allowed)) {
    rs.for_each([&](Relation r) {
      if (!allowed.contains(r))
        throw PreconditionError(std::string(algorithm) +
                                ": relation outside subclass: " +
                                r.to_string());
    });
  }
}

inline SolveResult checked(SolveResult result, const Network& original) {
  if (result.model && !satisfies(*result.model, original))
    throw std::logic_error(result.algorithm +
                           ": constructed model failed verification");
  return result;
}

}  // namespace detail

/// Decision procedure for R_5^17: reject iff some label is null,
/// otherwise the all-equal interpretation is a model (every surviving
/// label contains EQ).
inline SolveResult solve_a17(const Network& net, SolveOptions opts = {}) {
  detail::require_subclass(net, Catalog::r17(), "a17");
  SolveResult result;
  result.algorithm = "a17";
  for (const Formula& f : net.formulas())
    if (f.rel.empty()) return result;
  result.verdict = Verdict::Satisfiable;
  if (opts.build_model) {
    Interpretation model;
    for (const std::string& v : net.variables()) model.assign(v, {1});
    result.model = std::move(model);
  }
  return detail::checked(std::move(result), net);
}

/// Decision procedure for R_5^20: to a fixpoint, reject reflexive labels
/// without EQ and null labels, merge EQ-related variables, intersect
/// parallel formulas, drop reflexive labels with EQ. On acceptance the
/// model assigns pairwise-disjoint base sets plus a shared fresh element
/// per surviving PO-type formula.
inline SolveResult solve_a20(const Network& net, SolveOptions opts = {}) {
  detail::require_subclass(net, Catalog::r20(), "a20");
  SolveResult result;
  result.algorithm = "a20";

  std::vector<std::string> vars = net.variables();
  int n = static_cast<int>(vars.size());
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  // Representative of a merged class is the lexicographically least
  // name, which with sorted vars is the least index.
  auto unite = [&](int a, int b) {
    a = find(a);
    b = find(b);
    parent[std::max(a, b)] = std::min(a, b);
  };
  std::map<std::string, int> index;
  for (int i = 0; i < n; ++i) index[vars[i]] = i;

  std::map<std::pair<int, int>, Relation> merged;
  while (true) {
    merged.clear();
    for (const Formula& f : net.formulas()) {
      int a = find(index[f.x]), b = find(index[f.y]);
      Relation rel = f.rel;
      if (a == b) {
        if (!rel.contains(Basic::EQ)) return result;  // line 5
        continue;                                     // line 10
      }
      if (b < a) {
        std::swap(a, b);
        rel = rel.converse();
      }
      auto [it, inserted] = merged.try_emplace({a, b}, rel);
      if (!inserted) it->second &= rel;  // lines 8-9
    }
    bool unified = false;
    for (const auto& [key, rel] : merged) {
      if (rel.empty()) return result;  // line 6
      if (rel == Relation::only(Basic::EQ)) {
        unite(key.first, key.second);  // line 7
        unified = true;
      }
    }
    if (!unified) break;
  }

  result.verdict = Verdict::Satisfiable;
  if (opts.build_model) {
    Interpretation model;
    int next_element = 0;
    std::vector<std::set<int>> sets(n);
    for (int i = 0; i < n; ++i)
      if (find(i) == i) sets[i].insert(next_element++);
    for (const auto& [key, rel] : merged) {
      if (rel.contains(Basic::DR)) continue;
      // In R_5^20 a surviving non-DR label is {PO} or {PO,EQ}; force PO
      // with a shared fresh element.
      int alpha = next_element++;
      sets[key.first].insert(alpha);
      sets[key.second].insert(alpha);
    }
    for (int i = 0; i < n; ++i) model.assign(vars[i], sets[find(i)]);
    result.model = std::move(model);
  }
  return detail::checked(std::move(result), net);
}

/// Decision procedure for R_5^9: strongly connected components of the
/// {PP,EQ}-labelled subgraph; reject iff an EQ-free label connects two
/// nodes of one component. On acceptance, components collapse to single
/// variables and the condensation is satisfied by a nested-set chain
/// along a topological order (every cross-component label contains PP
/// and, when reoriented, PPI).
inline SolveResult solve_a9(const Network& net, SolveOptions opts = {}) {
  detail::require_subclass(net, Catalog::r9(), "a9");
  SolveResult result;
  result.algorithm = "a9";

  std::vector<std::string> vars = net.variables();
  int n = static_cast<int>(vars.size());
  auto index = [&](const std::string& v) {
    return static_cast<int>(std::lower_bound(vars.begin(), vars.end(), v) -
                            vars.begin());
  };

  const Relation pp_eq = Relation::only(Basic::PP).with(Basic::EQ);
  std::vector<std::vector<int>> subgraph(n);
  for (const Formula& f : net.formulas())
    if (f.rel == pp_eq && f.x != f.y)
      subgraph[index(f.x)].push_back(index(f.y));

  int component_count = 0;
  std::vector<int> comp =
      strongly_connected_components(subgraph, component_count);

  for (const Formula& f : net.formulas())
    if (!f.rel.contains(Basic::EQ) && comp[index(f.x)] == comp[index(f.y)])
      return result;

  result.verdict = Verdict::Satisfiable;
  if (opts.build_model) {
    // Tarjan numbers components in reverse topological order of the
    // {PP,EQ} condensation, so position N-1-c respects every such arc.
    Interpretation model;
    for (int i = 0; i < n; ++i) {
      int depth = component_count - comp[i];
      std::set<int> elems;
      for (int e = 1; e <= depth; ++e) elems.insert(e);
      model.assign(vars[i], std::move(elems));
    }
    result.model = std::move(model);
  }
  return detail::checked(std::move(result), net);
}

/// Derivations of every closure relation over a base subclass; leaves
/// are base relations. Drives the closure-instance transformation.
struct ClosureRewriteTable {
  Subclass base;
  ClosureResult derivations;
};

inline ClosureRewriteTable make_rewrite_table(Subclass base,
                                              const CompositionTable& table) {
  return {base, closure(base, table)};
}

/// Rewrites a network over a closure into an equisatisfiable network over
/// the base subclass, following each label's derivation tree: converse
/// flips endpoints, intersection duplicates the pair, composition routes
/// through a fresh variable.
inline Network rewrite_closure_instance(const Network& net, Subclass base,
                                        const ClosureRewriteTable& table) {
  std::set<std::string> used;
  for (const std::string& v : net.variables()) used.insert(v);
  int counter = 0;
  auto fresh = [&] {
    std::string name;
    do {
      name = "_z" + std::to_string(counter++);
    } while (used.count(name));
    used.insert(name);
    return name;
  };

  Network out;
  auto emit = [&](auto&& self, int idx, const std::string& x,
                  const std::string& y) -> void {
    const DerivedRelation& d = table.derivations.members()[idx];
    switch (d.rule) {
      case DerivedRelation::Rule::Given:
        out.add(x, d.relation, y);
        return;
      case DerivedRelation::Rule::Converse:
        self(self, d.lhs, y, x);
        return;
      case DerivedRelation::Rule::Intersect:
        self(self, d.lhs, x, y);
        self(self, d.rhs, x, y);
        return;
      case DerivedRelation::Rule::Compose: {
        std::string z = fresh();
        self(self, d.lhs, x, z);
        self(self, d.rhs, z, y);
        return;
      }
    }
  };

  for (const Formula& f : net.formulas()) {
    int idx = table.derivations.index_of(f.rel);
    if (idx < 0 ||
        (table.derivations.members()[idx].rule ==
             DerivedRelation::Rule::Given &&
         !table.base.contains(f.rel)))
      throw PreconditionError("no derivation for relation " +
                              f.rel.to_string());
    emit(emit, idx, f.x, f.y);
  }
  return out;
}

/// Decision procedure for R_5^14 = closure(R_5^9): rewrite to an
/// equisatisfiable R_5^9 instance, solve with A^9, and read the model
/// back off the original variables.
inline SolveResult solve_r5_14(const Network& net,
                               const CompositionTable& table,
                               SolveOptions opts = {}) {
  detail::require_subclass(net, Catalog::r14(), "r514");
  static const ClosureRewriteTable rewrite_table =
      make_rewrite_table(Catalog::r9(), composition_table());
  (void)table;

  Network rewritten = rewrite_closure_instance(net, Catalog::r9(),
                                               rewrite_table);
  SolveResult inner = solve_a9(rewritten, opts);
  SolveResult result;
  result.algorithm = "r514";
  result.verdict = inner.verdict;
  if (inner.sat() && inner.model) {
    Interpretation model;
    for (const std::string& v : net.variables())
      model.assign(v, inner.model->get(v));
    result.model = std::move(model);
  }
  return detail::checked(std::move(result), net);
}

namespace detail {

/// Square label matrix over indexed variables, kept converse-symmetric.
struct LabelMatrix {
  int n = 0;
  std::vector<Relation> m;

  explicit LabelMatrix(int n_) : n(n_), m(n_ * n_, Relation::full()) {
    for (int i = 0; i < n; ++i) at(i, i) = Relation::only(Basic::EQ);
  }
  Relation& at(int i, int j) { return m[i * n + j]; }
  Relation at(int i, int j) const { return m[i * n + j]; }
};

/// Queue-driven triangle tightening to a fixpoint. Returns false when a
/// label becomes null.
inline bool pc_fixpoint(LabelMatrix& mat, const CompositionTable& table,
                        std::deque<std::pair<int, int>> queue) {
  int n = mat.n;
  std::vector<bool> queued(n * n, false);
  for (auto [i, j] : queue) queued[i * n + j] = true;

  auto tighten = [&](int a, int b, Relation by) -> int {
    Relation next = mat.at(a, b) & by;
    if (next == mat.at(a, b)) return 0;
    mat.at(a, b) = next;
    mat.at(b, a) = next.converse();
    if (next.empty()) return -1;
    int lo = std::min(a, b), hi = std::max(a, b);
    if (!queued[lo * n + hi]) {
      queued[lo * n + hi] = true;
      queue.emplace_back(lo, hi);
    }
    return 1;
  };

  while (!queue.empty()) {
    auto [i, j] = queue.front();
    queue.pop_front();
    queued[i * n + j] = false;
    Relation rij = mat.at(i, j);
    for (int k = 0; k < n; ++k) {
      if (k == i || k == j) continue;
      if (tighten(i, k, table.compose(rij, mat.at(j, k))) < 0) return false;
      if (tighten(k, j, table.compose(mat.at(k, i), rij)) < 0) return false;
      rij = mat.at(i, j);
    }
  }
  return true;
}

inline std::deque<std::pair<int, int>> all_pairs(int n) {
  std::deque<std::pair<int, int>> queue;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) queue.emplace_back(i, j);
  return queue;
}

/// Model for a fully atomic, path-consistent matrix: EQ-classes collapse,
/// each class gets a private element, PP-predecessors' elements are
/// inherited, and each PO pair shares a fresh element propagated to the
/// pair's PP-ancestors. Path consistency keeps DR pairs disjoint.
inline Interpretation atomic_model(const std::vector<std::string>& vars,
                                   const LabelMatrix& mat) {
  int n = mat.n;
  const Relation eq = Relation::only(Basic::EQ);
  const Relation pp = Relation::only(Basic::PP);
  const Relation po = Relation::only(Basic::PO);

  std::vector<int> rep(n);
  std::iota(rep.begin(), rep.end(), 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j)
      if (mat.at(i, j) == eq && rep[j] < rep[i]) rep[i] = rep[j];

  int next_element = 0;
  std::vector<std::set<int>> sets(n);
  std::vector<int> base(n, -1);
  for (int i = 0; i < n; ++i)
    if (rep[i] == i) base[i] = next_element++;
  for (int i = 0; i < n; ++i) {
    if (rep[i] != i) continue;
    sets[i].insert(base[i]);
    for (int j = 0; j < n; ++j)
      if (rep[j] == j && mat.at(j, i) == pp) sets[i].insert(base[j]);
  }
  for (int i = 0; i < n; ++i) {
    if (rep[i] != i) continue;
    for (int j = i + 1; j < n; ++j) {
      if (rep[j] != j || mat.at(i, j) != po) continue;
      int alpha = next_element++;
      for (int k = 0; k < n; ++k) {
        if (rep[k] != k) continue;
        if (k == i || k == j || mat.at(i, k) == pp || mat.at(j, k) == pp)
          sets[k].insert(alpha);
      }
    }
  }

  Interpretation model;
  for (int i = 0; i < n; ++i) model.assign(vars[i], sets[rep[i]]);
  return model;
}

}  // namespace detail

/// Result of path consistency: either the tightened network or an
/// unsatisfiability verdict (some label became null).
struct PathConsistencyResult {
  bool satisfiable = false;
  Network net;
};

/// Triangle tightening R_xy <- R_xy intersect (R_xz o R_zy) to a
/// fixpoint, with missing arcs treated as the universal relation. Sound
/// for any input; complete as a decision procedure on R_5^28.
inline PathConsistencyResult path_consistency(const Network& net,
                                              const CompositionTable& table) {
  NormalizeResult norm = normalize(net);
  if (!norm.satisfiable) return {};

  std::vector<std::string> vars = norm.net.variables();
  int n = static_cast<int>(vars.size());
  std::map<std::string, int> index;
  for (int i = 0; i < n; ++i) index[vars[i]] = i;

  detail::LabelMatrix mat(n);
  std::deque<std::pair<int, int>> queue;
  for (const Formula& f : norm.net.formulas()) {
    int i = index[f.x], j = index[f.y];
    mat.at(i, j) = f.rel;
    mat.at(j, i) = f.rel.converse();
    queue.emplace_back(std::min(i, j), std::max(i, j));
  }
  if (!detail::pc_fixpoint(mat, table, std::move(queue))) return {};

  PathConsistencyResult result;
  result.satisfiable = true;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!mat.at(i, j).is_full())
        result.net.add(vars[i], mat.at(i, j), vars[j]);
  return result;
}

/// Complete solver for all of R_5: depth-first refinement of pairs to
/// basic relations with path-consistency pruning after each choice. At an
/// atomic path-consistent leaf a witness model is constructed and
/// verified before answering.
inline SolveResult solve_backtracking(const Network& net,
                                      const CompositionTable& table,
                                      SolveOptions opts = {}) {
  SolveResult result;
  result.algorithm = "bt";

  NormalizeResult norm = normalize(net);
  if (!norm.satisfiable) return result;

  std::vector<std::string> vars = norm.net.variables();
  int n = static_cast<int>(vars.size());
  std::map<std::string, int> index;
  for (int i = 0; i < n; ++i) index[vars[i]] = i;

  detail::LabelMatrix mat(n);
  for (const Formula& f : norm.net.formulas()) {
    int i = index[f.x], j = index[f.y];
    mat.at(i, j) = f.rel;
    mat.at(j, i) = f.rel.converse();
  }
  if (!detail::pc_fixpoint(mat, table, detail::all_pairs(n))) return result;

  // EQ merges shrink the instance fastest, so try EQ first.
  constexpr std::array<Basic, 5> value_order = {Basic::EQ, Basic::PP,
                                                Basic::PPI, Basic::PO,
                                                Basic::DR};

  auto search = [&](auto&& self, detail::LabelMatrix cur) -> bool {
    int pi = -1, pj = -1;
    for (int i = 0; i < n && pi < 0; ++i)
      for (int j = i + 1; j < n; ++j)
        if (cur.at(i, j).size() > 1) {
          pi = i;
          pj = j;
          break;
        }
    if (pi < 0) {
      mat = cur;  // atomic, path-consistent leaf
      return true;
    }
    for (Basic b : value_order) {
      if (!cur.at(pi, pj).contains(b)) continue;
      detail::LabelMatrix child = cur;
      child.at(pi, pj) = Relation::only(b);
      child.at(pj, pi) = Relation::only(b).converse();
      if (!detail::pc_fixpoint(child, table, {{pi, pj}})) continue;
      if (self(self, std::move(child))) return true;
    }
    return false;
  };

  if (!search(search, mat)) return result;

  result.verdict = Verdict::Satisfiable;
  if (opts.build_model) {
    Interpretation model = detail::atomic_model(vars, mat);
    // Variables dropped by normalization (reflexive-only) still need a
    // value; any non-empty set works.
    for (const std::string& v : net.variables())
      if (!model.has(v)) model.assign(v, {0});
    if (!satisfies(model, net))
      throw std::logic_error("bt: atomic-leaf model failed verification");
    result.model = std::move(model);
  }
  return result;
}

/// Verdict for R_5^28 via path consistency; a witness, when requested, is
/// extracted by the backtracking solver (guaranteed to succeed).
inline SolveResult solve_pc(const Network& net, const CompositionTable& table,
                            SolveOptions opts = {}) {
  detail::require_subclass(net, Catalog::r28(), "pc");
  SolveResult result;
  result.algorithm = "pc";
  if (!path_consistency(net, table).satisfiable) return result;
  result.verdict = Verdict::Satisfiable;
  if (opts.build_model) {
    SolveResult witness = solve_backtracking(net, table, opts);
    if (!witness.sat())
      throw std::logic_error("pc: path-consistent R_5^28 instance refuted "
                             "by backtracking");
    result.model = std::move(witness.model);
  }
  return detail::checked(std::move(result), net);
}

/// Routes an instance to the cheapest applicable procedure:
/// A^17, A^20, the R_5^14 pipeline, path consistency, then backtracking.
inline SolveResult dispatch(const Network& net, const CompositionTable& table,
                            SolveOptions opts = {}) {
  Subclass rs = relation_set(net);
  if (rs.subset_of(Catalog::r17())) return solve_a17(net, opts);
  if (rs.subset_of(Catalog::r20())) return solve_a20(net, opts);
  if (rs.subset_of(Catalog::r14())) return solve_r5_14(net, table, opts);
  if (rs.subset_of(Catalog::r28())) return solve_pc(net, table, opts);
  return solve_backtracking(net, table, opts);
}

}  // namespace rcc5

#endif  // RCC5_SOLVERS_HPP
