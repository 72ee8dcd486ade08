#ifndef RCC5_CLOSURE_HPP
#define RCC5_CLOSURE_HPP

#include <array>
#include <vector>

#include "rcc5/composition.hpp"
#include "rcc5/relation.hpp"

namespace rcc5 {

/// One relation of a closure together with how it was first derived.
/// Operand fields index into the owning ClosureResult's member list, so a
/// whole derivation forest is shared and acyclic by construction.
struct DerivedRelation {
  enum class Rule { Given, Converse, Intersect, Compose };

  Relation relation;
  Rule rule = Rule::Given;
  int lhs = -1;  // operand index; -1 for Given
  int rhs = -1;  // second operand for Intersect/Compose
};

/// Result of closing a subclass under converse, intersection and
/// composition, with one derivation per discovered relation.
class ClosureResult {
 public:
  const std::vector<DerivedRelation>& members() const { return members_; }
  Subclass relations() const { return relations_; }

  /// Index of a relation's derivation, or -1 if not in the closure.
  int index_of(Relation r) const { return index_[r.bits()]; }

  /// Re-evaluates a derivation tree with the algebra operations.
  Relation evaluate(int idx, const CompositionTable& table) const {
    const DerivedRelation& d = members_[idx];
    switch (d.rule) {
      case DerivedRelation::Rule::Given:
        return d.relation;
      case DerivedRelation::Rule::Converse:
        return evaluate(d.lhs, table).converse();
      case DerivedRelation::Rule::Intersect:
        return evaluate(d.lhs, table) & evaluate(d.rhs, table);
      case DerivedRelation::Rule::Compose:
        return table.compose(evaluate(d.lhs, table), evaluate(d.rhs, table));
    }
    return Relation();
  }

  bool add(Relation r, DerivedRelation::Rule rule, int lhs, int rhs) {
    if (index_[r.bits()] >= 0) return false;
    index_[r.bits()] = static_cast<int>(members_.size());
    members_.push_back({r, rule, lhs, rhs});
    relations_ = relations_.with(r);
    return true;
  }

 private:
  std::vector<DerivedRelation> members_;
  Subclass relations_;
  std::array<int, kNumRelations> index_ = [] {
    std::array<int, kNumRelations> a{};
    a.fill(-1);
    return a;
  }();
};

/// Least fixpoint of s under converse, intersection and composition.
/// Deterministic: each pass visits current members in canonical mask
/// order, so the first derivation found for a relation is reproducible.
inline ClosureResult closure(Subclass s, const CompositionTable& table) {
  ClosureResult out;
  s.for_each([&](Relation r) {
    out.add(r, DerivedRelation::Rule::Given, -1, -1);
  });
  bool changed = true;
  while (changed) {
    changed = false;
    Subclass cur = out.relations();
    cur.for_each([&](Relation r) {
      int ri = out.index_of(r);
      if (out.add(r.converse(), DerivedRelation::Rule::Converse, ri, -1))
        changed = true;
      cur.for_each([&](Relation t) {
        int ti = out.index_of(t);
        if (out.add(r & t, DerivedRelation::Rule::Intersect, ri, ti))
          changed = true;
        if (out.add(table.compose(r, t), DerivedRelation::Rule::Compose, ri,
                    ti))
          changed = true;
      });
    });
  }
  return out;
}

/// Relation set of the closure, without derivation bookkeeping. Cheap
/// enough for the exhaustive classification sweeps.
inline Subclass closure_relations(Subclass s, const CompositionTable& table) {
  // Precomputed 32x32 compose and 32 converse tables, shared per table
  // identity is unnecessary: the toolkit only ever uses one table.
  static const auto compose32 = [&] {
    std::array<std::array<uint8_t, kNumRelations>, kNumRelations> c{};
    for (unsigned a = 0; a < kNumRelations; ++a)
      for (unsigned b = 0; b < kNumRelations; ++b)
        c[a][b] = static_cast<uint8_t>(
            table.compose(Relation(a), Relation(b)).bits());
    return c;
  }();
  static const auto conv32 = [] {
    std::array<uint8_t, kNumRelations> c{};
    for (unsigned a = 0; a < kNumRelations; ++a)
      c[a] = static_cast<uint8_t>(Relation(a).converse().bits());
    return c;
  }();

  uint32_t cur = s.bits();
  bool changed = true;
  while (changed) {
    changed = false;
    uint32_t next = cur;
    for (unsigned a = 0; a < kNumRelations; ++a) {
      if (!(cur & (1u << a))) continue;
      next |= 1u << conv32[a];
      for (unsigned b = 0; b < kNumRelations; ++b) {
        if (!(cur & (1u << b))) continue;
        next |= 1u << (a & b);
        next |= 1u << compose32[a][b];
      }
    }
    if (next != cur) {
      cur = next;
      changed = true;
    }
  }
  return Subclass(cur);
}

/// A subclass is a subalgebra iff it equals its own closure.
inline bool is_subalgebra(Subclass s, const CompositionTable& table) {
  return closure_relations(s, table) == s;
}

}  // namespace rcc5

#endif  // RCC5_CLOSURE_HPP
