#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "kusub/lattice.hpp"

namespace kusub {

// 1 = N_0 < N_1 < ... < N_k = top, every N_i normal in the view and each
// factor a chief factor.
struct ChiefSeries {
  std::vector<SubgroupId> chain;
  std::vector<std::uint64_t> factor_orders;
};

// An ordering of pi(G).
struct PrimeOrdering {
  std::vector<std::uint64_t> primes;
};

std::vector<SubgroupId> normal_subgroups(GroupView g);
// Throws TrivialGroup when |G| = 1.
std::vector<SubgroupId> minimal_normal_subgroups(GroupView g);

// Canonically least Sylow p-subgroup. Throws PrimeDoesNotDivide.
SubgroupId sylow_subgroup(GroupView g, std::uint64_t p);
std::vector<SubgroupId> sylow_subgroups(GroupView g, std::uint64_t p);
// Canonically least subgroup whose order is the full {primes}-part of |G|.
std::optional<SubgroupId> hall_subgroup(GroupView g, std::vector<std::uint64_t> const& primes);
std::vector<SubgroupId> hall_subgroups(GroupView g, std::vector<std::uint64_t> const& primes);

// Intersection of the maximal subgroups. Throws TrivialGroup when |G| = 1.
SubgroupId frattini(GroupView g);
SubgroupId derived_subgroup(GroupView g);
// G = G^(0) > G' > G'' > ... down to the first repeated term.
std::vector<SubgroupId> derived_series(GroupView g);
// Smallest normal subgroup of the view containing h.
SubgroupId normal_closure(GroupView g, SubgroupId h);
// O_p(G): the largest normal p-subgroup.
SubgroupId p_core(GroupView g, std::uint64_t p);
SubgroupId fitting(GroupView g);
SubgroupId center(GroupView g);

// Bottom-up chief series: each step adjoins the canonically least normal
// subgroup strictly containing the previous term.
ChiefSeries chief_series(GroupView g);
// Same, starting from a normal subgroup `bottom` (a chief series of G/bottom
// pulled back to G). Throws NotNormal.
ChiefSeries chief_series_from(GroupView g, SubgroupId bottom);

bool is_soluble(GroupView g);
bool is_soluble_by_chief_factors(GroupView g);
bool is_soluble_by_derived_series(GroupView g);
bool is_nilpotent(GroupView g);
bool is_abelian(GroupView g);
bool is_cyclic(GroupView g);
std::uint64_t exponent(GroupView g);

// All S with S meet N = 1 and |S||N| = |G|. Throws NotNormal.
std::vector<SubgroupId> complements(GroupView g, SubgroupId n);

// Throws BadOrdering unless phi is a permutation of pi(G).
bool is_phi_dispersive(GroupView g, PrimeOrdering const& phi);
// phi-dispersive for the strictly decreasing ordering of pi(G).
bool is_ore_dispersive(GroupView g);

}  // namespace kusub
