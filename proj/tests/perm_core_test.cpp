#include <gtest/gtest.h>

#include "kusub/error.hpp"
#include "kusub/group.hpp"
#include "kusub/structure.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace kusub;
using testing_support::perm;

namespace {

Group s4() { return group_from_generators({perm(4, "(1 2 3 4)"), perm(4, "(1 2)")}); }

std::vector<oracle::Perm> raw(Group const& g) {
  std::vector<oracle::Perm> out;
  for (auto const& x : g.generators()) out.emplace_back(x.images().begin(), x.images().end());
  return out;
}

}  // namespace

TEST(Permutation, ComposesLeftToRight) {
  auto a = perm(3, "(1 2)");
  auto b = perm(3, "(2 3)");
  // 1 -> 2 under a, then 2 -> 3 under b.
  EXPECT_EQ((a * b)[0], 2u);
  EXPECT_EQ((a * b).to_cycle_string(), "(1 3 2)");
  EXPECT_EQ((a * a).to_cycle_string(), "()");
}

TEST(Permutation, InverseConjugateAndOrder) {
  auto x = perm(5, "(1 2 3)(4 5)");
  EXPECT_TRUE((x * x.inverse()).is_identity());
  EXPECT_EQ(x.order(), 6u);
  auto by = perm(5, "(1 4)");
  // x^by = by^-1 x by relabels points through by.
  EXPECT_EQ(x.conjugate_by(by).to_cycle_string(), "(1 5)(2 3 4)");
}

TEST(Permutation, RejectsBadInput) {
  EXPECT_THROW(Permutation::from_images({0, 0, 1}), Error);
  try {
    Permutation::from_cycles(3, {{1, 4}});
    FAIL();
  } catch (Error const& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegreeMismatch);
  }
  try {
    Permutation::from_cycles(3, {{1, 2, 1}});
    FAIL();
  } catch (Error const& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotABijection);
  }
}

TEST(Group, SpecOrders) {
  EXPECT_EQ(group_from_generators({perm(3, "(1 2)"), perm(3, "(1 2 3)")}).order(), 6u);
  EXPECT_EQ(s4().order(), 24u);
  EXPECT_EQ(group_from_generators({Permutation::identity(5)}).order(), 1u);
  EXPECT_EQ(build("alternating(4)").order(), 12u);
  EXPECT_EQ(build("dihedral(10)").order(), 20u);
  EXPECT_EQ(s4().prime_set(), (std::vector<std::uint64_t>{2, 3}));
}

TEST(Group, Errors) {
  auto code = [](auto&& f) {
    try {
      f();
    } catch (Error const& e) {
      return e.code();
    }
    return ErrorCode::Io;
  };
  EXPECT_EQ(code([] { group_from_generators({}); }), ErrorCode::EmptyGenerators);
  EXPECT_EQ(code([] { group_from_generators({Permutation::identity(3), Permutation::identity(4)}); }),
            ErrorCode::MixedDegree);
  EXPECT_EQ(code([] { s4().contains(Permutation::identity(5)); }), ErrorCode::MixedDegree);
  EXPECT_EQ(code([] { build("symmetric(7)").elements(100); }), ErrorCode::GroupTooLarge);
}

TEST(Group, Contains) {
  auto a4 = build("alternating(4)");
  EXPECT_FALSE(a4.contains(perm(4, "(1 2)")));
  EXPECT_TRUE(a4.contains(perm(4, "(1 2 3)")));
  EXPECT_TRUE(a4.contains(Permutation::identity(4)));
}

TEST(Group, ElementsSpecExamples) {
  EXPECT_EQ(build("cyclic(4)").elements().size(), 4u);
  EXPECT_EQ(s4().elements().size(), 24u);
  auto q8 = build("quaternion(8)");
  EXPECT_EQ(q8.elements().size(), oracle::closure(raw(q8), 8).size());
  EXPECT_EQ(q8.elements().size(), 8u);
}

TEST(Group, EnumerationIsDeterministicBreadthFirst) {
  auto g = s4();
  auto const& elts = g.elements();
  EXPECT_TRUE(elts[0].is_identity());
  // Layer one holds the generators, sorted by image sequence.
  auto gens = g.generators();
  std::sort(gens.begin(), gens.end());
  EXPECT_EQ(elts[1], gens[0]);
  EXPECT_EQ(elts[2], gens[1]);
  auto again = s4();
  EXPECT_EQ(again.elements(), elts);
  for (std::size_t i = 0; i < elts.size(); ++i) EXPECT_EQ(g.index_of(elts[i]), i);
}

TEST(Group, ElementClosure) {
  auto g = build("directProduct(symmetric(3), cyclic(4))");
  auto const& elts = g.elements();
  for (auto const& x : elts) {
    EXPECT_TRUE(g.index_of(x.inverse()).has_value());
    for (auto const& y : elts) EXPECT_TRUE(g.contains(x * y));
  }
}

TEST(Group, ExponentAbelianCyclic) {
  EXPECT_EQ(exponent(build("cyclic(6)")), 6u);
  EXPECT_EQ(exponent(build("directProduct(cyclic(2), cyclic(2))")), 2u);
  EXPECT_EQ(exponent(build("symmetric(3)")), 6u);
  EXPECT_TRUE(is_abelian(build("cyclic(12)")));
  EXPECT_FALSE(is_abelian(build("symmetric(3)")));
  EXPECT_FALSE(is_abelian(build("quaternion(8)")));
  EXPECT_TRUE(is_cyclic(build("cyclic(15)")));
  EXPECT_FALSE(is_cyclic(build("directProduct(cyclic(2), cyclic(2))")));
  EXPECT_FALSE(is_cyclic(build("symmetric(3)")));
}

TEST(Group, OrderMatchesBruteForceOnCorpus) {
  for (auto const& source : testing_support::corpus()) {
    auto g = to_group(source);
    EXPECT_EQ(g.order(), oracle::closure(raw(g), g.degree()).size()) << source.name;
    EXPECT_EQ(g.elements().size(), g.order()) << source.name;
  }
}

TEST(Quotient, SpecExamples) {
  auto g = s4();
  auto lattice = SubgroupLattice::build(g);
  auto v4 = testing_support::sub(lattice, {"(1 2)(3 4)", "(1 3)(2 4)"});
  auto q = quotient(g, lattice.subgroup(v4));
  EXPECT_EQ(q.order(), 6u);
  EXPECT_FALSE(is_abelian(q));
  EXPECT_EQ(quotient(g, lattice.subgroup(lattice.trivial())).order(), 24u);
  EXPECT_EQ(quotient(g, lattice.subgroup(lattice.whole())).order(), 1u);
}

TEST(Quotient, Errors) {
  auto g = s4();
  auto lattice = SubgroupLattice::build(g);
  try {
    quotient(g, lattice.subgroup(testing_support::sub(lattice, {"(1 2)"})));
    FAIL();
  } catch (Error const& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotNormal);
  }
  ElementSet junk(24);
  junk.insert(1);
  try {
    quotient(g, junk);
    FAIL();
  } catch (Error const& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotASubgroup);
  }
}

TEST(Quotient, OrdersForEveryNormalSubgroup) {
  for (auto const& source : testing_support::corpus()) {
    auto g = to_group(source);
    if (g.order() > 48) continue;
    auto lattice = SubgroupLattice::build(g);
    for (SubgroupId n : normal_subgroups(lattice)) {
      auto action = coset_action(g, lattice.subgroup(n));
      EXPECT_EQ(action.quotient.order(), g.order() / lattice.order(n)) << source.name;
      // The coset map is a homomorphism onto the quotient.
      auto const& elts = g.elements();
      for (ElementId a = 0; a < elts.size(); a += 3) {
        for (ElementId b = 0; b < elts.size(); b += 5) {
          ElementId ab = *g.index_of(elts[a] * elts[b]);
          EXPECT_EQ(action.image(g, ab), action.image(g, a) * action.image(g, b));
        }
      }
    }
  }
}

TEST(Conjugation, PreservesSizeAndClosure) {
  auto g = s4();
  auto lattice = SubgroupLattice::build(g);
  for (SubgroupId h = 0; h < lattice.size(); ++h) {
    for (ElementId x = 0; x < g.order(); ++x) {
      auto c = conjugate(g, lattice.subgroup(h), x);
      EXPECT_EQ(c.size(), lattice.subgroup(h).size());
      EXPECT_TRUE(is_subgroup(g, c));
    }
  }
}
