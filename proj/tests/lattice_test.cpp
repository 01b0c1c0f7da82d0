#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "kusub/error.hpp"
#include "kusub/lattice.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace kusub;
using testing_support::lattice_of;
using testing_support::sub;

namespace {

std::set<oracle::PermSet> library_subgroups(SubgroupLattice const& lattice) {
  std::set<oracle::PermSet> out;
  for (SubgroupId h = 0; h < lattice.size(); ++h) out.insert(oracle::to_perms(lattice, h));
  return out;
}

std::vector<std::uint64_t> orders_of(SubgroupLattice const& lattice, std::vector<SubgroupId> const& ids) {
  std::vector<std::uint64_t> out;
  for (auto h : ids) out.push_back(lattice.order(h));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(Lattice, SubgroupCounts) {
  auto s4 = lattice_of("symmetric(4)");
  auto a4 = lattice_of("alternating(4)");
  auto whole_s4 = oracle::to_perms(s4, s4.whole());
  auto whole_a4 = oracle::to_perms(a4, a4.whole());
  // Both counts are confirmed by the independent oracle before being checked.
  ASSERT_EQ(oracle::subgroups_from_small_subsets(whole_s4).size(), 30u);
  ASSERT_EQ(oracle::subgroups_from_small_subsets(whole_a4).size(), 10u);
  EXPECT_EQ(s4.size(), 30u);
  EXPECT_EQ(a4.size(), 10u);
  for (int p : {2, 3, 5, 7, 11}) EXPECT_EQ(lattice_of("cyclic(" + std::to_string(p) + ")").size(), 2u);
}

TEST(Lattice, MatchesIndependentOracleUpToOrder24) {
  for (auto const& source : testing_support::corpus()) {
    auto g = to_group(source);
    if (g.order() > 24) continue;
    auto lattice = SubgroupLattice::build(g);
    auto whole = oracle::to_perms(lattice, lattice.whole());
    EXPECT_EQ(library_subgroups(lattice), oracle::subgroups_from_small_subsets(whole)) << source.name;
  }
}

TEST(Lattice, MatchesJoinClosureOracleUpTo48) {
  for (auto const& source : testing_support::corpus()) {
    auto g = to_group(source);
    if (g.order() <= 24 || g.order() > 48) continue;
    auto lattice = SubgroupLattice::build(g);
    EXPECT_EQ(library_subgroups(lattice), oracle::all_subgroups(oracle::to_perms(lattice, lattice.whole())))
        << source.name;
  }
}

TEST(Lattice, CanonicalOrder) {
  auto lattice = lattice_of("directProduct(symmetric(3), cyclic(2))");
  EXPECT_EQ(lattice.order(lattice.trivial()), 1u);
  EXPECT_EQ(lattice.order(lattice.whole()), 12u);
  for (SubgroupId h = 1; h < lattice.size(); ++h) EXPECT_LE(lattice.order(h - 1), lattice.order(h));
  for (SubgroupId h = 0; h < lattice.size(); ++h) EXPECT_EQ(lattice.find(lattice.subgroup(h)), h);
}

TEST(Lattice, ElementArithmeticMatchesPermutations) {
  for (auto expr : {"symmetric(4)", "quaternion(8)", "dihedral(12)", "directProduct(cyclic(4), cyclic(6))"}) {
    auto lattice = lattice_of(expr);
    auto const& elts = lattice.group().elements();
    for (ElementId a = 0; a < elts.size(); ++a) {
      auto im = elts[a].images();
      EXPECT_EQ(lattice.element_order(a), oracle::element_order(oracle::Perm(im.begin(), im.end()))) << expr;
      EXPECT_EQ(elts[lattice.inverse(a)], elts[a].inverse());
      for (ElementId b = 0; b < elts.size(); ++b) EXPECT_EQ(elts[lattice.multiply(a, b)], elts[a] * elts[b]);
    }
  }
}

TEST(Lattice, MaximalSubgroupsSpecExamples) {
  auto s4 = lattice_of("symmetric(4)");
  auto maxs = s4.maximal_subgroups(s4.whole());
  EXPECT_EQ(orders_of(s4, maxs), (std::vector<std::uint64_t>{6, 6, 6, 6, 8, 8, 8, 12}));
  auto c6 = lattice_of("cyclic(6)");
  EXPECT_EQ(orders_of(c6, c6.maximal_subgroups(c6.whole())), (std::vector<std::uint64_t>{2, 3}));
  EXPECT_TRUE(s4.maximal_subgroups(s4.trivial()).empty());
  EXPECT_EQ(maximal_subgroups(s4, s4.whole()), maxs);
}

TEST(Lattice, MaximalSubgroupsMatchOracle) {
  for (auto const& source : testing_support::corpus()) {
    auto g = to_group(source);
    if (g.order() > 24) continue;
    auto lattice = SubgroupLattice::build(g);
    auto subs = library_subgroups(lattice);
    for (SubgroupId h = 0; h < lattice.size(); ++h) {
      std::set<oracle::PermSet> mine, theirs;
      for (auto m : lattice.maximal_subgroups(h)) mine.insert(oracle::to_perms(lattice, m));
      for (auto const& m : oracle::maximal_subgroups(oracle::to_perms(lattice, h), subs)) theirs.insert(m);
      EXPECT_EQ(mine, theirs) << source.name;
    }
  }
}

TEST(Lattice, NMaximalSubgroups) {
  auto s3 = lattice_of("symmetric(3)");
  EXPECT_EQ(n_maximal_subgroups(s3, 2), (std::vector<SubgroupId>{s3.trivial()}));
  auto c8 = lattice_of("cyclic(8)");
  EXPECT_EQ(n_maximal_subgroups(c8, 3), (std::vector<SubgroupId>{c8.trivial()}));
  auto s4 = lattice_of("symmetric(4)");
  auto three = n_maximal_subgroups(s4, 3);
  auto c2 = sub(s4, {"(1 2)(3 4)"});
  EXPECT_NE(std::find(three.begin(), three.end(), c2), three.end());
  EXPECT_EQ(n_maximal_subgroups(s4, 0), (std::vector<SubgroupId>{s4.whole()}));
}

TEST(Lattice, MaximalChainsAreValid) {
  auto s4 = lattice_of("symmetric(4)");
  for (std::size_t n = 1; n <= 4; ++n) {
    for (SubgroupId h : n_maximal_subgroups(s4, n)) {
      auto chain = find_maximal_chain(s4, h, n);
      ASSERT_TRUE(chain.has_value());
      EXPECT_TRUE(chain->is_valid(s4));
      EXPECT_EQ(chain->length(), n);
      EXPECT_EQ(chain->steps.front(), s4.whole());
      EXPECT_EQ(chain->steps.back(), h);
    }
  }
  EXPECT_FALSE(find_maximal_chain(s4, s4.whole(), 1).has_value());
}

TEST(Lattice, Cores) {
  auto s4 = lattice_of("symmetric(4)");
  EXPECT_EQ(core(s4, sub(s4, {"(1 2)", "(1 2 3)"})), s4.trivial());
  auto v4 = sub(s4, {"(1 2)(3 4)", "(1 3)(2 4)"});
  EXPECT_EQ(core(s4, sub(s4, {"(1 2 3 4)", "(1 3)"})), v4);
  EXPECT_EQ(core(s4, v4), v4);
  auto whole = oracle::to_perms(s4, s4.whole());
  for (SubgroupId h = 0; h < s4.size(); ++h) {
    EXPECT_EQ(oracle::to_perms(s4, core(s4, h)), oracle::core(oracle::to_perms(s4, h), whole));
  }
}

TEST(Lattice, Normalizers) {
  auto s4 = lattice_of("symmetric(4)");
  auto a4 = sub(s4, {"(1 2 3)", "(1 2)(3 4)"});
  EXPECT_EQ(s4.order(a4), 12u);
  EXPECT_EQ(normalizer(s4, a4), s4.whole());
  EXPECT_EQ(normalizer(s4, s4.whole()), s4.whole());
  auto s3 = lattice_of("symmetric(3)");
  auto c2 = sub(s3, {"(1 2)"});
  EXPECT_EQ(normalizer(s3, c2), c2);
  for (auto const& source : testing_support::corpus()) {
    auto g = to_group(source);
    if (g.order() > 24) continue;
    auto lattice = SubgroupLattice::build(g);
    auto whole = oracle::to_perms(lattice, lattice.whole());
    for (SubgroupId h = 0; h < lattice.size(); ++h) {
      EXPECT_EQ(oracle::to_perms(lattice, normalizer(lattice, h)), oracle::normalizer(oracle::to_perms(lattice, h), whole))
          << source.name;
    }
  }
}

TEST(Lattice, ConjugacyClasses) {
  auto s4 = lattice_of("symmetric(4)");
  EXPECT_EQ(conjugacy_classes_of_subgroups(s4).size(), 11u);
  std::set<std::size_t> maximal_classes;
  for (auto m : s4.maximal_subgroups(s4.whole())) maximal_classes.insert(s4.conjugacy_class_of(m));
  EXPECT_EQ(maximal_classes.size(), 3u);
  std::vector<std::size_t> sizes;
  for (auto c : maximal_classes) sizes.push_back(s4.conjugacy_classes()[c].size());
  std::sort(sizes.begin(), sizes.end());
  EXPECT_EQ(sizes, (std::vector<std::size_t>{1, 3, 4}));

  auto s3 = lattice_of("symmetric(3)");
  std::vector<std::size_t> s3_sizes;
  for (auto const& c : conjugacy_classes_of_subgroups(s3)) s3_sizes.push_back(c.size());
  std::sort(s3_sizes.begin(), s3_sizes.end());
  EXPECT_EQ(s3_sizes, (std::vector<std::size_t>{1, 1, 1, 3}));

  auto ab = lattice_of("directProduct(cyclic(2), cyclic(4))");
  for (auto const& c : conjugacy_classes_of_subgroups(ab)) EXPECT_EQ(c.size(), 1u);
}

TEST(Lattice, ConjugacyClassesMatchOracle) {
  auto s4 = lattice_of("symmetric(4)");
  auto whole = oracle::to_perms(s4, s4.whole());
  for (SubgroupId h = 0; h < s4.size(); ++h) {
    std::set<oracle::PermSet> expected;
    for (auto const& x : whole) expected.insert(oracle::conjugate(oracle::to_perms(s4, h), x));
    std::set<oracle::PermSet> actual;
    for (auto k : s4.conjugacy_classes()[s4.conjugacy_class_of(h)]) actual.insert(oracle::to_perms(s4, k));
    EXPECT_EQ(actual, expected);
  }
}

TEST(Lattice, IsNormalIn) {
  auto s4 = lattice_of("symmetric(4)");
  auto v4 = sub(s4, {"(1 2)(3 4)", "(1 3)(2 4)"});
  auto a4 = sub(s4, {"(1 2 3)", "(1 2)(3 4)"});
  auto c3 = sub(s4, {"(1 2 3)"});
  EXPECT_TRUE(is_normal_in(s4, v4, s4.whole()));
  EXPECT_FALSE(is_normal_in(s4, c3, a4));
  EXPECT_TRUE(is_normal_in(s4, c3, c3));
  try {
    is_normal_in(s4, a4, c3);
    FAIL();
  } catch (Error const& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotContained);
  }
}

TEST(Lattice, JoinMeetClosure) {
  auto s4 = lattice_of("symmetric(4)");
  auto a = sub(s4, {"(1 2)"});
  auto b = sub(s4, {"(2 3)"});
  EXPECT_EQ(s4.order(s4.join(a, b)), 6u);
  EXPECT_EQ(s4.meet(a, b), s4.trivial());
  EXPECT_EQ(s4.join(a, s4.trivial()), a);
  EXPECT_EQ(s4.meet(a, s4.whole()), a);
}

TEST(Lattice, FromSubgroupsRoundTrip) {
  auto s4 = lattice_of("symmetric(4)");
  auto again = SubgroupLattice::from_subgroups(s4.group(), s4.subgroups());
  EXPECT_EQ(again.subgroups(), s4.subgroups());
  for (SubgroupId h = 0; h < s4.size(); ++h) {
    EXPECT_EQ(again.maximal_subgroups(h), s4.maximal_subgroups(h));
    EXPECT_EQ(again.normalizer(h), s4.normalizer(h));
  }
  auto broken = s4.subgroups();
  std::swap(broken[3], broken[20]);
  EXPECT_THROW(SubgroupLattice::from_subgroups(s4.group(), broken), Error);
}

TEST(Lattice, CapIsEnforced) {
  try {
    SubgroupLattice::build(build("symmetric(5)"), Caps{5000, 100});
    FAIL();
  } catch (Error const& e) {
    EXPECT_EQ(e.code(), ErrorCode::GroupTooLarge);
  }
}
