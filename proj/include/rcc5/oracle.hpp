#ifndef RCC5_ORACLE_HPP
#define RCC5_ORACLE_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "rcc5/composition.hpp"
#include "rcc5/interpretation.hpp"
#include "rcc5/network.hpp"
#include "rcc5/relation.hpp"

namespace rcc5 {

inline constexpr int kOracleMaxVariables = 4;

/// A canonical finite model: which of the 2^n - 1 non-empty Venn cells of
/// n variables are occupied. Every variable must lie in some occupied
/// cell (regions are non-empty).
struct CellPattern {
  int variable_count = 0;
  unsigned occupied = 0;  // cell c at bit c-1

  Interpretation realize(const std::vector<std::string>& vars) const {
    Interpretation out;
    for (int v = 0; v < variable_count; ++v) {
      Interpretation::Elements elems;
      for (unsigned c = 1; c < (1u << variable_count); ++c)
        if ((occupied & (1u << (c - 1))) && (c & (1u << v)))
          elems.insert(static_cast<int>(c));
      out.assign(vars[v], std::move(elems));
    }
    return out;
  }
};

struct OracleResult {
  bool satisfiable = false;
  std::optional<Interpretation> witness;
  CellPattern pattern;
};

namespace detail {

// Precomputed per variable count: the basic relation of each ordered
// variable pair under each pattern, and per-pattern variable occupancy.
struct PatternTables {
  int n = 0;
  unsigned pattern_count = 0;
  std::vector<uint8_t> occupancy;          // variable bitmask per pattern
  std::vector<std::vector<uint8_t>> rel;   // [a*n+b][pattern] -> Basic

  explicit PatternTables(int n_) : n(n_) {
    pattern_count = 1u << ((1u << n) - 1);
    occupancy.resize(pattern_count);
    rel.assign(static_cast<size_t>(n) * n, {});
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (a != b) rel[a * n + b].resize(pattern_count);
    for (unsigned p = 0; p < pattern_count; ++p) {
      uint8_t occ = 0;
      for (int v = 0; v < n; ++v)
        if (cells::variable_occupied(p, n, v)) occ |= uint8_t(1u << v);
      occupancy[p] = occ;
      if (occ != (1u << n) - 1) continue;
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          if (a != b)
            rel[a * n + b][p] = static_cast<uint8_t>(
                cells::relation_in_pattern(p, n, a, b));
    }
  }
};

inline const PatternTables& pattern_tables(int n) {
  static const std::array<PatternTables, kOracleMaxVariables> tables = {
      PatternTables(1), PatternTables(2), PatternTables(3), PatternTables(4)};
  return tables[n - 1];
}

}  // namespace detail

/// Ground-truth decision procedure for small instances: exhausts every
/// occupancy pattern over the network's variables. Returns the
/// lexicographically least satisfying pattern as witness.
inline OracleResult oracle_satisfiable(const Network& net) {
  std::vector<std::string> vars = net.variables();
  int n = static_cast<int>(vars.size());
  if (n > kOracleMaxVariables)
    throw std::invalid_argument("oracle limited to 4 variables, got " +
                                std::to_string(n));
  if (n == 0) {
    // No variables: satisfiable unless some (variable-free, impossible)
    // formula exists. An empty net is trivially satisfiable.
    OracleResult r;
    r.satisfiable = true;
    r.witness = Interpretation{};
    return r;
  }

  auto var_index = [&](const std::string& v) {
    return static_cast<int>(std::lower_bound(vars.begin(), vars.end(), v) -
                            vars.begin());
  };

  // Compile formulas to (pair slot, label). Reflexive formulas always
  // evaluate to EQ and are settled up front.
  struct Check {
    const std::vector<uint8_t>* rel;
    unsigned label_bits;
  };
  std::vector<Check> checks;
  const auto& tab = detail::pattern_tables(n);
  for (const Formula& f : net.formulas()) {
    if (f.x == f.y) {
      if (!f.rel.contains(Basic::EQ)) return {};
      continue;
    }
    int a = var_index(f.x), b = var_index(f.y);
    checks.push_back({&tab.rel[a * n + b], f.rel.bits()});
  }

  const uint8_t all_vars = static_cast<uint8_t>((1u << n) - 1);
  for (unsigned p = 0; p < tab.pattern_count; ++p) {
    if (tab.occupancy[p] != all_vars) continue;
    bool ok = true;
    for (const Check& c : checks) {
      if (!(c.label_bits & (1u << (*c.rel)[p]))) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    OracleResult r;
    r.satisfiable = true;
    r.pattern = {n, p};
    r.witness = r.pattern.realize(vars);
    return r;
  }
  return {};
}

/// A relation is acyclic iff every uniformly labelled cycle is
/// unsatisfiable. For RCC-5 exactly the null relation, {PP} and {PPI}
/// qualify; the test suite cross-validates this characterization against
/// oracle sweeps of all uniform cycles of length 1..3.
inline bool is_acyclic_relation(Relation r, const CompositionTable&) {
  return r.empty() || r == Relation::only(Basic::PP) ||
         r == Relation::only(Basic::PPI);
}

namespace detail {

/// Nested/disjoint/overlapping canonical models for DAGs whose labels all
/// contain a given basic relation. Nodes must be in topological order.
inline Interpretation dag_model(const std::vector<std::string>& topo,
                                Basic b) {
  Interpretation out;
  int n = static_cast<int>(topo.size());
  for (int i = 0; i < n; ++i) {
    Interpretation::Elements elems;
    switch (b) {
      case Basic::EQ:
        elems = {0};
        break;
      case Basic::DR:
        elems = {i + 1};
        break;
      case Basic::PO:
        elems = {0, i + 1};
        break;
      case Basic::PP:
        for (int k = 0; k <= i; ++k) elems.insert(k);
        break;
      case Basic::PPI:
        for (int k = i; k < n; ++k) elems.insert(k);
        break;
    }
    out.assign(topo[i], std::move(elems));
  }
  return out;
}

}  // namespace detail

/// Falsification harness for the DAG-satisfiability of a basic relation:
/// random DAGs labelled by relations containing b must all be
/// satisfiable. Small instances are decided by the oracle, larger ones
/// by constructing and verifying a canonical model.
inline bool is_dag_satisfying_check(Basic b, unsigned seed = 0) {
  std::mt19937 rng(seed * 31 + static_cast<unsigned>(b));
  auto random_label = [&](Basic must) {
    return Relation(rng() % kNumRelations).with(must);
  };
  auto node_name = [](int i) { return "v" + std::to_string(i); };

  for (int trial = 0; trial < 60; ++trial) {
    int n = 1 + static_cast<int>(rng() % kOracleMaxVariables);
    Network net;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (rng() % 5 < 3) net.add(node_name(i), random_label(b), node_name(j));
    if (net.empty()) continue;
    if (!oracle_satisfiable(net).satisfiable) return false;
  }

  for (int trial = 0; trial < 40; ++trial) {
    int n = 5 + static_cast<int>(rng() % 8);
    Network net;
    std::vector<std::string> topo;
    for (int i = 0; i < n; ++i) topo.push_back(node_name(i));
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (rng() % 5 < 2) net.add(topo[i], random_label(b), topo[j]);
    Interpretation model = detail::dag_model(topo, b);
    if (!satisfies(model, net)) return false;
  }
  return true;
}

}  // namespace rcc5

#endif  // RCC5_ORACLE_HPP
