#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "rcc5/classifier.hpp"
#include "rcc5/oracle.hpp"
#include "rcc5/solvers.hpp"

using namespace rcc5;

namespace {
Relation rel(std::string_view text) { return *Relation::parse(text); }
const CompositionTable& table() { return composition_table(); }
}  // namespace

TEST_CASE("catalog cardinalities") {
  CHECK(Catalog::r28().size() == 28);
  CHECK(Catalog::r20().size() == 20);
  CHECK(Catalog::r17().size() == 17);
  CHECK(Catalog::r14().size() == 14);
  CHECK(Catalog::r9().size() == 9);
  CHECK(Catalog::c1().size() == 2);
  CHECK(Catalog::c2().size() == 2);
}

TEST_CASE("kernels and generators are where they should be") {
  CHECK(Catalog::c1() ==
        Subclass::none().with(rel("{PO}")).with(rel("{PP,PPI}")));
  CHECK(Catalog::c2() ==
        Subclass::none().with(rel("{DR,PO}")).with(rel("{PP,PPI}")));
  CHECK(Catalog::r9().contains(rel("{PP,EQ}")));
  CHECK(Catalog::r9().subset_of(Catalog::r14()));
  // top and bottom are in every catalog column
  for (const auto& member : Catalog::tractable()) {
    CHECK(member.subclass.contains(Relation::none()));
    CHECK(member.subclass.contains(Relation::full()));
  }
}

TEST_CASE("classify examples") {
  Classification c1 = classify(Catalog::c1(), table());
  CHECK(c1.verdict == Tractability::NPComplete);
  CHECK(c1.kernel == "C1");

  Classification r28 = classify(Catalog::r28(), table());
  CHECK(r28.verdict == Tractability::Polynomial);
  REQUIRE(r28.containing.size() == 1);
  CHECK(r28.containing[0] == "R_5^28");

  Classification empty = classify(Subclass::none(), table());
  CHECK(empty.verdict == Tractability::Polynomial);
  CHECK(empty.containing.size() == 4);
}

TEST_CASE("classify reports all containing members") {
  Subclass s = Subclass::none().with(rel("{EQ}")).with(rel("{DR,EQ}"));
  Classification c = classify(s, table());
  REQUIRE(c.verdict == Tractability::Polynomial);
  CHECK(c.containing ==
        std::vector<std::string>{"R_5^28", "R_5^20", "R_5^17"});
}

TEST_CASE("classify witnesses actually witness") {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 300; ++trial) {
    Subclass s(rng() & rng() & rng());
    Classification c = classify(s, table());
    if (c.verdict == Tractability::Polynomial) {
      for (const auto& name : c.containing)
        for (const auto& member : Catalog::tractable())
          if (name == member.name) CHECK(s.subset_of(member.subclass));
    } else {
      Subclass cl = closure_relations(s, table());
      Subclass kernel = c.kernel == "C1" ? Catalog::c1() : Catalog::c2();
      CHECK(kernel.subset_of(cl));
    }
  }
}

TEST_CASE("classify is monotone toward hardness") {
  std::mt19937 rng(43);
  for (int trial = 0; trial < 200; ++trial) {
    Subclass s(rng() & rng() & rng());
    Subclass t = s | Subclass(rng() & rng());
    if (classify(s, table()).verdict == Tractability::NPComplete)
      CHECK(classify(t, table()).verdict == Tractability::NPComplete);
  }
}

TEST_CASE("classify agrees on a subclass and its closure") {
  std::mt19937 rng(47);
  for (int trial = 0; trial < 200; ++trial) {
    Subclass s(rng() & rng() & rng());
    CHECK(classify(s, table()).verdict ==
          classify(closure_relations(s, table()), table()).verdict);
  }
}

TEST_CASE("theorem enumeration: 41449 subsets, zero failures") {
  EnumerationReport report = verify_theorem_4_2(table());
  CHECK(report.subsets_checked == 41449);
  CHECK(report.passed());
  CHECK(report.subset_branch + report.kernel_c1 + report.kernel_c2 ==
        report.subsets_checked);
  CHECK(report.kernel_c1 > 0);
  CHECK(report.kernel_c2 > 0);

  // The report is independent of the worker count.
  EnumerationReport parallel = verify_theorem_4_2(table(), 4);
  CHECK(parallel.subsets_checked == report.subsets_checked);
  CHECK(parallel.subset_branch == report.subset_branch);
  CHECK(parallel.kernel_c1 == report.kernel_c1);
  CHECK(parallel.kernel_c2 == report.kernel_c2);
}

TEST_CASE("enumeration rows stream deterministically") {
  std::vector<std::string> first_rows;
  int count = 0;
  verify_theorem_4_2(table(), 1, [&](const EnumerationRow& row) {
    if (count++ < 3) first_rows.push_back(row.to_string());
  });
  REQUIRE(first_rows.size() == 3);
  CHECK(first_rows[0] == "subset (empty) ; branch subset:R_5^28");
  CHECK(first_rows[1] == "subset {} ; branch subset:R_5^28");
  CHECK(first_rows[2] == "subset {DR} ; branch subset:R_5^28");
}

TEST_CASE("maximality: every one-relation extension is NP-complete") {
  MaximalityReport report = verify_maximality(table());
  CHECK(report.entries.size() == 49);  // 4 + 12 + 15 + 18
  CHECK(report.passed());

  Classification ext = classify(Catalog::r17().with(rel("{DR}")), table());
  CHECK(ext.verdict == Tractability::NPComplete);
  Classification ext28 =
      classify(Catalog::r28().with(rel("{PP,PPI}")), table());
  CHECK(ext28.verdict == Tractability::NPComplete);
  CHECK(ext28.kernel == "C1");
}

TEST_CASE("reduce_c1_to_c2 construction") {
  Network in = parse("X {PO} Y\nY {PP,PPI} Z\n");
  Network out = reduce_c1_to_c2(in);
  CHECK(serialize(out) == "X {DR,PO} Y\nY {PP,PPI} Z\n");
  CHECK_THROWS_AS(reduce_c1_to_c2(parse("X {DR} Y\n")),
                  std::invalid_argument);
}

TEST_CASE("reduce_c1_to_c2 preserves oracle verdicts exhaustively") {
  // Every <= 3-variable C1 instance: each unordered pair carries no
  // label, {PO} or {PP,PPI}.
  const std::array<std::string, 3> vars = {"X", "Y", "Z"};
  for (int pick = 0; pick < 27; ++pick) {
    Network net;
    int p = pick;
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) {
        int choice = p % 3;
        p /= 3;
        if (choice == 1) net.add(vars[i], rel("{PO}"), vars[j]);
        if (choice == 2) net.add(vars[i], rel("{PP,PPI}"), vars[j]);
      }
    if (net.empty()) continue;
    Network reduced = reduce_c1_to_c2(net);
    bool truth = oracle_satisfiable(net).satisfiable;
    CHECK(oracle_satisfiable(reduced).satisfiable == truth);

    if (truth) {
      // The model back-transformer lifts any C2 witness to a C1 witness.
      SolveResult c2 = solve_backtracking(reduced, table());
      REQUIRE(c2.sat());
      Interpretation lifted = lift_c2_model(*c2.model);
      CHECK(satisfies(lifted, net));
    }
  }
}

TEST_CASE("lifting turns DR into PO and preserves the rest") {
  Interpretation base;
  base.assign("A", {1});
  base.assign("B", {2});
  base.assign("C", {1, 2});
  Interpretation lifted = lift_c2_model(base);
  CHECK(relation_of(base, "A", "B") == Basic::DR);
  CHECK(relation_of(lifted, "A", "B") == Basic::PO);
  CHECK(relation_of(base, "A", "C") == Basic::PP);
  CHECK(relation_of(lifted, "A", "C") == Basic::PP);
}
