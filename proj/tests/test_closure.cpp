#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "rcc5/catalog.hpp"
#include "rcc5/closure.hpp"
#include "rcc5/composition.hpp"

using namespace rcc5;

TEST_CASE("closure of the empty subclass is empty") {
  ClosureResult c = closure(Subclass::none(), composition_table());
  CHECK(c.relations().empty());
  CHECK(c.members().empty());
}

TEST_CASE("closure of R_5^9 is the R_5^14 catalog") {
  ClosureResult c = closure(Catalog::r9(), composition_table());
  CHECK(c.relations() == Catalog::r14());
  CHECK(c.relations().size() == 14);
}

TEST_CASE("the four catalog subalgebras are closure fixpoints") {
  for (const auto& member : Catalog::tractable()) {
    CHECK(closure(member.subclass, composition_table()).relations() ==
          member.subclass);
    CHECK(is_subalgebra(member.subclass, composition_table()));
  }
}

TEST_CASE("is_subalgebra examples") {
  CHECK(is_subalgebra(Catalog::r17(), composition_table()));
  Subclass pp_only = Subclass::none().with(Relation::only(Basic::PP));
  CHECK(!is_subalgebra(pp_only, composition_table()));
  CHECK(is_subalgebra(Subclass::none(), composition_table()));
}

TEST_CASE("derivation trees re-evaluate to their relations") {
  for (Subclass seed : {Catalog::r9(), Catalog::c1(), Catalog::c2(),
                        Subclass(0x00010014u)}) {
    ClosureResult c = closure(seed, composition_table());
    for (size_t i = 0; i < c.members().size(); ++i)
      CHECK(c.evaluate(static_cast<int>(i), composition_table()) ==
            c.members()[i].relation);
  }
}

TEST_CASE("derivation leaves are seed relations") {
  ClosureResult c = closure(Catalog::r9(), composition_table());
  for (const DerivedRelation& d : c.members())
    if (d.rule == DerivedRelation::Rule::Given)
      CHECK(Catalog::r9().contains(d.relation));
}

TEST_CASE("closure is extensive, monotone and idempotent") {
  std::mt19937 rng(7);
  const auto& table = composition_table();
  for (int trial = 0; trial < 200; ++trial) {
    Subclass s(rng() & rng());  // biased sparse
    Subclass t = s | Subclass(rng() & rng() & rng());
    Subclass cs = closure_relations(s, table);
    CHECK(s.subset_of(cs));
    CHECK(cs.subset_of(closure_relations(t, table)));
    CHECK(closure_relations(cs, table) == cs);
  }
}

TEST_CASE("worklist closure and relation-set closure agree") {
  std::mt19937 rng(11);
  const auto& table = composition_table();
  for (int trial = 0; trial < 100; ++trial) {
    Subclass s(rng() & rng() & rng());
    CHECK(closure(s, table).relations() == closure_relations(s, table));
  }
}

TEST_CASE("closure is deterministic across runs") {
  ClosureResult a = closure(Catalog::r9(), composition_table());
  ClosureResult b = closure(Catalog::r9(), composition_table());
  REQUIRE(a.members().size() == b.members().size());
  for (size_t i = 0; i < a.members().size(); ++i) {
    CHECK(a.members()[i].relation == b.members()[i].relation);
    CHECK(a.members()[i].rule == b.members()[i].rule);
    CHECK(a.members()[i].lhs == b.members()[i].lhs);
    CHECK(a.members()[i].rhs == b.members()[i].rhs);
  }
}
