#ifndef RCC5_INTERPRETATION_HPP
#define RCC5_INTERPRETATION_HPP

#include <map>
#include <set>
#include <stdexcept>
#include <string>

#include "rcc5/network.hpp"
#include "rcc5/relation.hpp"

namespace rcc5 {

/// An R-interpretation: region variables mapped to finite non-empty sets
/// of abstract element identifiers.
class Interpretation {
 public:
  using Elements = std::set<int>;

  void assign(const std::string& var, Elements elems) {
    if (elems.empty())
      throw std::invalid_argument("region must be non-empty: " + var);
    assignment_[var] = std::move(elems);
  }

  bool has(const std::string& var) const { return assignment_.count(var); }

  const Elements& get(const std::string& var) const {
    auto it = assignment_.find(var);
    if (it == assignment_.end())
      throw std::out_of_range("unassigned variable: " + var);
    return it->second;
  }

  const std::map<std::string, Elements>& assignment() const {
    return assignment_;
  }

  /// One line per variable: "X = {1,2,3}".
  std::string to_string() const {
    std::string out;
    for (const auto& [var, elems] : assignment_) {
      out += var;
      out += " = {";
      bool first = true;
      for (int e : elems) {
        if (!first) out += ',';
        out += std::to_string(e);
        first = false;
      }
      out += "}\n";
    }
    return out;
  }

 private:
  std::map<std::string, Elements> assignment_;
};

/// The unique basic relation between two interpreted regions.
inline Basic relation_of(const Interpretation& i, const std::string& x,
                         const std::string& y) {
  const auto& a = i.get(x);
  const auto& b = i.get(y);
  bool x_only = false, y_only = false, common = false;
  for (int e : a)
    (b.count(e) ? common : x_only) = true;
  for (int e : b)
    if (!a.count(e)) y_only = true;
  if (!common) return Basic::DR;
  if (x_only && y_only) return Basic::PO;
  if (y_only) return Basic::PP;
  if (x_only) return Basic::PPI;
  return Basic::EQ;
}

/// True iff every formula's label contains the basic relation actually
/// holding under i. A null label forces false.
inline bool satisfies(const Interpretation& i, const Network& net) {
  for (const Formula& f : net.formulas())
    if (!f.rel.contains(relation_of(i, f.x, f.y))) return false;
  return true;
}

}  // namespace rcc5

#endif  // RCC5_INTERPRETATION_HPP
