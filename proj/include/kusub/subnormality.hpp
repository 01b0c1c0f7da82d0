#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "kusub/lattice.hpp"

namespace kusub {

enum class StepKind { Normal, UQuotient };

// H = H_0 < H_1 < ... < H_t = top. Step i joins H_i to H_{i+1}; a Normal
// step has H_i normal in H_{i+1}, a UQuotient step has H_{i+1}/core(H_i)
// supersoluble. Steps that qualify both ways are recorded as Normal.
struct KUChain {
  std::vector<SubgroupId> subgroups;
  std::vector<StepKind> step_kinds;

  bool is_valid(GroupView g) const;
};

bool is_subnormal(GroupView g, SubgroupId h);
// A chain exists in which every step is a UQuotient step.
bool is_u_subnormal(GroupView g, SubgroupId h);
// A chain exists in which every step is Normal or UQuotient.
bool is_k_u_subnormal(GroupView g, SubgroupId h);

// Shortest chains, ties broken by the canonically least next subgroup.
std::optional<KUChain> k_u_subnormal_chain(GroupView g, SubgroupId h);
std::optional<KUChain> u_subnormal_chain(GroupView g, SubgroupId h);

struct NMaximalVerdict {
  bool holds = true;
  std::vector<SubgroupId> failing;
};

// P_n(G): every n-maximal subgroup is K-U-subnormal.
NMaximalVerdict all_n_maximal_ku_subnormal(GroupView g, std::size_t n);

}  // namespace kusub
