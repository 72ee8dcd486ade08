#ifndef RCC5_CATALOG_HPP
#define RCC5_CATALOG_HPP

#include <initializer_list>

#include "rcc5/relation.hpp"

namespace rcc5 {

namespace detail {
constexpr Subclass subclass_of(std::initializer_list<unsigned> masks) {
  Subclass s;
  for (unsigned m : masks) s = s.with(Relation(m));
  return s;
}
}  // namespace detail

/// The four maximal tractable subalgebras, the R_5^9 generator of
/// R_5^14, and the two NP-hardness kernels.
///
/// Relation bit order: DR=1, PO=2, PP=4, PPI=8, EQ=16.
struct Catalog {
  // Everything except the four relations containing PP and PPI but not PO.
  static constexpr Subclass r28() {
    return detail::subclass_of({0,  1,  2,  3,  4,  5,  6,  7,  8,  9,
                                10, 11, 14, 15, 16, 17, 18, 19, 20, 21,
                                22, 23, 24, 25, 26, 27, 30, 31});
  }

  // Relations where PP or PPI forces DR alongside.
  static constexpr Subclass r20() {
    return detail::subclass_of({0, 1, 2, 3, 5, 7, 9, 11, 13, 15, 16, 17, 18,
                                19, 21, 23, 25, 27, 29, 31});
  }

  // The null relation plus every relation containing EQ.
  static constexpr Subclass r17() {
    return detail::subclass_of({0, 16, 17, 18, 19, 20, 21, 22, 23, 24, 25, 26,
                                27, 28, 29, 30, 31});
  }

  // The closure of r9().
  static constexpr Subclass r14() {
    return detail::subclass_of(
        {0, 4, 8, 12, 13, 14, 15, 16, 20, 24, 28, 29, 30, 31});
  }

  // {{PP,EQ}} together with every relation containing both PP and PPI.
  static constexpr Subclass r9() {
    return detail::subclass_of({20, 12, 13, 14, 15, 28, 29, 30, 31});
  }

  // NP-hardness kernels: C1 = {{PO},{PP,PPI}}, C2 = {{DR,PO},{PP,PPI}}.
  static constexpr Subclass c1() { return detail::subclass_of({2, 12}); }
  static constexpr Subclass c2() { return detail::subclass_of({3, 12}); }

  struct Named {
    const char* name;
    Subclass subclass;
  };

  /// The members of R_P in catalog order.
  static constexpr std::array<Named, 4> tractable() {
    return {{{"R_5^28", r28()},
             {"R_5^20", r20()},
             {"R_5^17", r17()},
             {"R_5^14", r14()}}};
  }
};

}  // namespace rcc5

#endif  // RCC5_CATALOG_HPP
