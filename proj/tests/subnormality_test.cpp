#include <gtest/gtest.h>

#include "kusub/error.hpp"
#include "kusub/formations.hpp"
#include "kusub/structure.hpp"
#include "kusub/subnormality.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace kusub;
using testing_support::lattice_of;
using testing_support::sub;

TEST(Subnormality, Subnormal) {
  auto s3 = lattice_of("symmetric(3)");
  EXPECT_FALSE(is_subnormal(s3, sub(s3, {"(1 2)"})));
  auto s4 = lattice_of("symmetric(4)");
  EXPECT_TRUE(is_subnormal(s4, sub(s4, {"(1 2)(3 4)", "(1 3)(2 4)"})));
  EXPECT_TRUE(is_subnormal(s4, sub(s4, {"(1 2)(3 4)"})));
  auto d16 = lattice_of("dihedral(8)");
  for (SubgroupId h = 0; h < d16.size(); ++h) EXPECT_TRUE(is_subnormal(d16, h));
}

TEST(Subnormality, USubnormal) {
  auto s3 = lattice_of("symmetric(3)");
  EXPECT_TRUE(is_u_subnormal(s3, sub(s3, {"(1 2)"})));
  auto s4 = lattice_of("symmetric(4)");
  auto c3 = sub(s4, {"(1 2 3)"});
  auto whole = oracle::to_perms(s4, s4.whole());
  auto subs = oracle::all_subgroups(whole);
  ASSERT_FALSE(oracle::ku_reachable(oracle::to_perms(s4, c3), whole, subs, false));
  EXPECT_FALSE(is_u_subnormal(s4, c3));
  auto d12 = lattice_of("dihedral(12)");
  for (SubgroupId h = 0; h < d12.size(); ++h) EXPECT_TRUE(is_u_subnormal(d12, h));
}

TEST(Subnormality, KUSubnormal) {
  auto s3 = lattice_of("symmetric(3)");
  EXPECT_TRUE(is_k_u_subnormal(s3, sub(s3, {"(1 2)"})));
  auto s4 = lattice_of("symmetric(4)");
  auto c3 = sub(s4, {"(1 2 3)"});
  auto whole = oracle::to_perms(s4, s4.whole());
  auto subs = oracle::all_subgroups(whole);
  ASSERT_FALSE(oracle::ku_reachable(oracle::to_perms(s4, c3), whole, subs, true));
  EXPECT_FALSE(is_k_u_subnormal(s4, c3));
  EXPECT_FALSE(k_u_subnormal_chain(s4, c3).has_value());
  SubgroupId res = u_residual(s4);
  for (SubgroupId k : s4.overgroups_of(res)) EXPECT_TRUE(is_k_u_subnormal(s4, k));
}

TEST(Subnormality, MatchesReachabilityOracle) {
  for (auto const& source : testing_support::corpus()) {
    auto g = to_group(source);
    if (g.order() > 24) continue;
    auto lattice = SubgroupLattice::build(g);
    auto whole = oracle::to_perms(lattice, lattice.whole());
    auto subs = oracle::all_subgroups(whole);
    for (SubgroupId h = 0; h < lattice.size(); ++h) {
      auto hp = oracle::to_perms(lattice, h);
      EXPECT_EQ(is_k_u_subnormal(lattice, h), oracle::ku_reachable(hp, whole, subs, true)) << source.name;
      EXPECT_EQ(is_u_subnormal(lattice, h), oracle::ku_reachable(hp, whole, subs, false)) << source.name;
    }
  }
}

TEST(Subnormality, ImplicationsAndWitnessChains) {
  for (auto const& source : testing_support::corpus()) {
    auto g = to_group(source);
    if (g.order() > 100) continue;
    auto lattice = SubgroupLattice::build(g);
    bool soluble = is_soluble(lattice);
    for (SubgroupId h = 0; h < lattice.size(); ++h) {
      bool ku = is_k_u_subnormal(lattice, h);
      bool u = is_u_subnormal(lattice, h);
      if (is_subnormal(lattice, h)) EXPECT_TRUE(ku) << source.name;
      if (u) EXPECT_TRUE(ku) << source.name;
      if (soluble) EXPECT_EQ(ku, u) << source.name;
      auto chain = k_u_subnormal_chain(lattice, h);
      EXPECT_EQ(chain.has_value(), ku);
      if (chain) {
        EXPECT_TRUE(chain->is_valid(lattice)) << source.name;
        EXPECT_EQ(chain->subgroups.front(), h);
        EXPECT_EQ(chain->subgroups.back(), lattice.whole());
      }
      auto uchain = u_subnormal_chain(lattice, h);
      EXPECT_EQ(uchain.has_value(), u);
      if (uchain) {
        EXPECT_TRUE(uchain->is_valid(lattice)) << source.name;
        for (auto kind : uchain->step_kinds) EXPECT_EQ(kind, StepKind::UQuotient);
      }
    }
  }
}

TEST(Subnormality, ChainValidationRejectsBadChains) {
  auto s4 = lattice_of("symmetric(4)");
  auto c3 = sub(s4, {"(1 2 3)"});
  auto s3 = sub(s4, {"(1 2)", "(1 2 3)"});
  KUChain bad{{c3, s3, s4.whole()}, {StepKind::Normal, StepKind::UQuotient}};
  EXPECT_FALSE(bad.is_valid(s4));
  KUChain mislabelled{{c3, s3}, {StepKind::UQuotient}};
  EXPECT_FALSE(mislabelled.is_valid(s4));
}

TEST(Subnormality, NMaximal) {
  auto a4 = lattice_of("alternating(4)");
  EXPECT_TRUE(all_n_maximal_ku_subnormal(a4, 2).holds);
  auto s4 = lattice_of("symmetric(4)");
  auto verdict = all_n_maximal_ku_subnormal(s4, 2);
  EXPECT_FALSE(verdict.holds);
  auto c3 = sub(s4, {"(1 2 3)"});
  bool conjugate_of_c3 = false;
  for (SubgroupId f : verdict.failing) {
    if (s4.conjugacy_class_of(f) == s4.conjugacy_class_of(c3)) conjugate_of_c3 = true;
  }
  EXPECT_TRUE(conjugate_of_c3);
  for (auto expr : {"symmetric(3)", "dihedral(12)", "cyclic(30)"}) {
    auto lattice = lattice_of(expr);
    for (std::size_t n = 1; n <= 4; ++n) EXPECT_TRUE(all_n_maximal_ku_subnormal(lattice, n).holds) << expr;
  }
  try {
    all_n_maximal_ku_subnormal(s4, 0);
    FAIL();
  } catch (Error const& e) {
    EXPECT_EQ(e.code(), ErrorCode::PreconditionViolated);
  }
}

TEST(Subnormality, RelativeToSubgroup) {
  auto s4 = lattice_of("symmetric(4)");
  auto a4 = sub(s4, {"(1 2 3)", "(1 2)(3 4)"});
  auto c3 = sub(s4, {"(1 2 3)"});
  // Inside A4, C3 is maximal with A4/core(C3) = A4 not supersoluble.
  EXPECT_FALSE(is_k_u_subnormal(s4.view(a4), c3));
  auto s3 = sub(s4, {"(1 2)", "(1 2 3)"});
  EXPECT_TRUE(is_k_u_subnormal(s4.view(s3), c3));
  EXPECT_TRUE(is_k_u_subnormal(s4.view(s3), sub(s4, {"(1 2)"})));
}
