#ifndef RCC5_COMPOSITION_HPP
#define RCC5_COMPOSITION_HPP

#include <array>

#include "rcc5/relation.hpp"

namespace rcc5 {

/// The 5x5 composition table on basic relations. Composition of full
/// relations is the union of component-wise entries.
class CompositionTable {
 public:
  constexpr CompositionTable() = default;
  explicit constexpr CompositionTable(const std::array<unsigned, 25>& masks) {
    for (int i = 0; i < 25; ++i) entries_[i] = Relation(masks[i]);
  }

  constexpr Relation entry(Basic a, Basic b) const {
    return entries_[static_cast<unsigned>(a) * kNumBasic +
                    static_cast<unsigned>(b)];
  }
  constexpr void set_entry(Basic a, Basic b, Relation r) {
    entries_[static_cast<unsigned>(a) * kNumBasic + static_cast<unsigned>(b)] =
        r;
  }

  constexpr Relation compose(Relation r, Relation s) const {
    Relation out;
    for (unsigned i = 0; i < kNumBasic; ++i) {
      if (!r.contains(Basic(i))) continue;
      for (unsigned j = 0; j < kNumBasic; ++j)
        if (s.contains(Basic(j))) out |= entry(Basic(i), Basic(j));
    }
    return out;
  }

  friend constexpr bool operator==(const CompositionTable&,
                                   const CompositionTable&) = default;

 private:
  std::array<Relation, 25> entries_{};
};

namespace cells {

// Venn-cell machinery shared with the model oracle. A cell is a non-empty
// subset of variable indices; a pattern is the set of occupied cells,
// stored as a bitmask with cell c (1 <= c < 2^n) at bit c-1.

inline constexpr Basic basic_of(bool x_only, bool common, bool y_only) {
  if (!common) return Basic::DR;
  if (x_only && y_only) return Basic::PO;
  if (y_only) return Basic::PP;
  if (x_only) return Basic::PPI;
  return Basic::EQ;
}

/// Basic relation between variables a and b under an occupancy pattern
/// over n variables. Occupancy of the three a/b regions determines the
/// relation; all other structure is invisible to RCC-5.
inline constexpr Basic relation_in_pattern(unsigned pattern, int n, int a,
                                           int b) {
  bool x_only = false, common = false, y_only = false;
  for (unsigned c = 1; c < (1u << n); ++c) {
    if (!(pattern & (1u << (c - 1)))) continue;
    bool in_a = c & (1u << a), in_b = c & (1u << b);
    if (in_a && in_b) common = true;
    else if (in_a) x_only = true;
    else if (in_b) y_only = true;
  }
  return basic_of(x_only, common, y_only);
}

inline constexpr bool variable_occupied(unsigned pattern, int n, int v) {
  for (unsigned c = 1; c < (1u << n); ++c)
    if ((pattern & (1u << (c - 1))) && (c & (1u << v))) return true;
  return false;
}

}  // namespace cells

/// Derives the composition table extensionally: entry(B, B') collects every
/// basic relation B'' realized between X and Y in some triple of non-empty
/// sets with X B Z and Z B' Y. All RCC-5-distinguishable triples are
/// exhausted by the 128 occupancy patterns of the 7 non-empty Venn cells.
inline constexpr CompositionTable derive_composition_table() {
  CompositionTable table;
  constexpr int kX = 0, kY = 1, kZ = 2;
  for (unsigned pattern = 0; pattern < 128; ++pattern) {
    bool ok = true;
    for (int v = 0; v < 3; ++v)
      if (!cells::variable_occupied(pattern, 3, v)) ok = false;
    if (!ok) continue;
    Basic b = cells::relation_in_pattern(pattern, 3, kX, kZ);
    Basic bp = cells::relation_in_pattern(pattern, 3, kZ, kY);
    Basic bpp = cells::relation_in_pattern(pattern, 3, kX, kY);
    table.set_entry(b, bp, table.entry(b, bp).with(bpp));
  }
  return table;
}

/// Frozen copy of the derived table, row-major over (B, B') in index
/// order. Tests re-derive the table and compare against this fixture.
inline constexpr std::array<unsigned, 25> kCompositionFixtureMasks = {
    31, 7, 7, 1, 1,    // DR o _
    11, 31, 6, 11, 2,  // PO o _
    1, 7, 4, 31, 4,    // PP o _
    11, 10, 30, 8, 8,  // PPI o _
    1, 2, 4, 8, 16,    // EQ o _
};

inline constexpr CompositionTable kCompositionFixture{kCompositionFixtureMasks};

/// The table used throughout: derived once at compile time.
inline const CompositionTable& composition_table() {
  static constexpr CompositionTable table = derive_composition_table();
  return table;
}

}  // namespace rcc5

#endif  // RCC5_COMPOSITION_HPP
