#ifndef RCC5_CLASSIFIER_HPP
#define RCC5_CLASSIFIER_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

#include "rcc5/catalog.hpp"
#include "rcc5/closure.hpp"
#include "rcc5/composition.hpp"
#include "rcc5/interpretation.hpp"
#include "rcc5/network.hpp"
#include "rcc5/relation.hpp"

namespace rcc5 {

enum class Tractability { Polynomial, NPComplete };

/// Verdict for a subclass: tractable with the containing members of R_P,
/// or NP-complete with the kernel found in the closure.
struct Classification {
  Tractability verdict = Tractability::Polynomial;
  std::vector<std::string> containing;  // all R_P members containing s
  std::string kernel;                   // "C1" or "C2" when NP-complete
};

/// A subclass is polynomial iff it is a subset of some member of R_P;
/// otherwise its closure contains one of the kernels C1, C2. A subclass
/// matching neither branch would contradict the classification theorem
/// and raises an internal error.
inline Classification classify(Subclass s, const CompositionTable& table) {
  Classification out;
  for (const auto& member : Catalog::tractable())
    if (s.subset_of(member.subclass)) out.containing.push_back(member.name);
  if (!out.containing.empty()) return out;

  Subclass cl = closure_relations(s, table);
  out.verdict = Tractability::NPComplete;
  if (Catalog::c1().subset_of(cl)) {
    out.kernel = "C1";
  } else if (Catalog::c2().subset_of(cl)) {
    out.kernel = "C2";
  } else {
    throw std::logic_error("classification dichotomy violated for " +
                           s.to_string());
  }
  return out;
}

/// One enumerated case of the classification sweep.
struct EnumerationRow {
  Subclass subset;
  std::string branch;  // "subset:R_5^k" or "kernel:C1"/"kernel:C2"

  std::string to_string() const {
    std::string rels;
    subset.for_each([&](Relation r) {
      if (!rels.empty()) rels += ',';
      rels += r.to_string();
    });
    if (rels.empty()) rels = "(empty)";
    return "subset " + rels + " ; branch " + branch;
  }
};

struct EnumerationReport {
  long subsets_checked = 0;
  long subset_branch = 0;
  long kernel_c1 = 0;
  long kernel_c2 = 0;
  std::vector<Subclass> failures;

  bool passed() const { return failures.empty(); }
};

namespace detail {

/// All subsets of R_5 of size <= 4, by size then lexicographic mask
/// order. sum_{i=0}^{4} C(32,i) = 41449.
inline std::vector<uint32_t> enumeration_subsets() {
  std::vector<uint32_t> out;
  out.reserve(41449);
  out.push_back(0);
  for (int a = 0; a < 32; ++a) out.push_back(1u << a);
  for (int a = 0; a < 32; ++a)
    for (int b = a + 1; b < 32; ++b) out.push_back((1u << a) | (1u << b));
  for (int a = 0; a < 32; ++a)
    for (int b = a + 1; b < 32; ++b)
      for (int c = b + 1; c < 32; ++c)
        out.push_back((1u << a) | (1u << b) | (1u << c));
  for (int a = 0; a < 32; ++a)
    for (int b = a + 1; b < 32; ++b)
      for (int c = b + 1; c < 32; ++c)
        for (int d = c + 1; d < 32; ++d)
          out.push_back((1u << a) | (1u << b) | (1u << c) | (1u << d));
  return out;
}

// 0 = subset of R_5^28 .. 3 = subset of R_5^14, 4 = C1, 5 = C2, 6 = fail
inline int classify_branch(Subclass s, const CompositionTable& table,
                           std::unordered_map<uint32_t, uint32_t>& memo) {
  const auto members = Catalog::tractable();
  for (int i = 0; i < 4; ++i)
    if (s.subset_of(members[i].subclass)) return i;
  auto it = memo.find(s.bits());
  Subclass cl;
  if (it != memo.end()) {
    cl = Subclass(it->second);
  } else {
    cl = closure_relations(s, table);
    memo.emplace(s.bits(), cl.bits());
  }
  if (Catalog::c1().subset_of(cl)) return 4;
  if (Catalog::c2().subset_of(cl)) return 5;
  return 6;
}

inline std::string branch_name(int branch) {
  switch (branch) {
    case 0: return "subset:R_5^28";
    case 1: return "subset:R_5^20";
    case 2: return "subset:R_5^17";
    case 3: return "subset:R_5^14";
    case 4: return "kernel:C1";
    case 5: return "kernel:C2";
    default: return "FAIL";
  }
}

}  // namespace detail

/// Machine-assisted case analysis behind the classification theorem:
/// every subset of size <= 4 is either below a member of R_P or has a
/// kernel in its closure. The report is deterministic regardless of the
/// worker count; rows are streamed in enumeration order when a callback
/// is supplied.
inline EnumerationReport verify_theorem_4_2(
    const CompositionTable& table, unsigned workers = 1,
    const std::function<void(const EnumerationRow&)>& row_callback = nullptr) {
  std::vector<uint32_t> subsets = detail::enumeration_subsets();
  std::vector<uint8_t> branches(subsets.size());

  if (workers <= 1) {
    std::unordered_map<uint32_t, uint32_t> memo;
    for (size_t i = 0; i < subsets.size(); ++i)
      branches[i] = static_cast<uint8_t>(
          detail::classify_branch(Subclass(subsets[i]), table, memo));
  } else {
    std::vector<std::thread> pool;
    size_t chunk = (subsets.size() + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      size_t begin = w * chunk;
      size_t end = std::min(subsets.size(), begin + chunk);
      if (begin >= end) break;
      pool.emplace_back([&, begin, end] {
        std::unordered_map<uint32_t, uint32_t> memo;
        for (size_t i = begin; i < end; ++i)
          branches[i] = static_cast<uint8_t>(
              detail::classify_branch(Subclass(subsets[i]), table, memo));
      });
    }
    for (auto& t : pool) t.join();
  }

  EnumerationReport report;
  for (size_t i = 0; i < subsets.size(); ++i) {
    ++report.subsets_checked;
    switch (branches[i]) {
      case 0: case 1: case 2: case 3:
        ++report.subset_branch;
        break;
      case 4:
        ++report.kernel_c1;
        break;
      case 5:
        ++report.kernel_c2;
        break;
      default:
        report.failures.push_back(Subclass(subsets[i]));
    }
    if (row_callback)
      row_callback({Subclass(subsets[i]), detail::branch_name(branches[i])});
  }
  return report;
}

struct MaximalityReport {
  struct Entry {
    std::string algebra;
    Relation added;
    Tractability verdict = Tractability::Polynomial;
  };
  std::vector<Entry> entries;
  int np_complete = 0;

  bool passed() const {
    return np_complete == static_cast<int>(entries.size());
  }
};

/// Maximality of the four algebras: every one-relation extension of each
/// member of R_P classifies NP-complete (4 + 12 + 15 + 18 = 49 checks).
inline MaximalityReport verify_maximality(const CompositionTable& table) {
  MaximalityReport report;
  for (const auto& member : Catalog::tractable()) {
    for (unsigned m = 0; m < kNumRelations; ++m) {
      Relation r(m);
      if (member.subclass.contains(r)) continue;
      Classification c = classify(member.subclass.with(r), table);
      report.entries.push_back({member.name, r, c.verdict});
      if (c.verdict == Tractability::NPComplete) ++report.np_complete;
    }
  }
  return report;
}

/// The hardness reduction from the C1 kernel to the C2 kernel: {PP,PPI}
/// formulas are copied, {PO} formulas relabelled {DR,PO}.
inline Network reduce_c1_to_c2(const Network& net) {
  Subclass rs = relation_set(net);
  if (!rs.subset_of(Catalog::c1()))
    throw std::invalid_argument("reduce_c1_to_c2: input not over C1");
  const Relation po = Relation::only(Basic::PO);
  const Relation dr_po = po.with(Basic::DR);
  Network out;
  for (const Formula& f : net.formulas())
    out.add(f.x, f.rel == po ? dr_po : f.rel, f.y);
  return out;
}

/// Back-translation of a C2-instance model to the C1 instance it came
/// from: one shared fresh element joins every region, turning DR into PO
/// and preserving PO, PP and PPI.
inline Interpretation lift_c2_model(const Interpretation& model) {
  int alpha = 0;
  for (const auto& [var, elems] : model.assignment())
    alpha = std::max(alpha, *elems.rbegin() + 1);
  Interpretation out;
  for (const auto& [var, elems] : model.assignment()) {
    auto extended = elems;
    extended.insert(alpha);
    out.assign(var, std::move(extended));
  }
  return out;
}

}  // namespace rcc5

#endif  // RCC5_CLASSIFIER_HPP
