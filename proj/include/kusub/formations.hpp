#pragma once

#include "kusub/lattice.hpp"

namespace kusub {

struct UProfile {
  bool supersoluble = false;
  SubgroupId u_residual = 0;
  bool minimal_nonsupersoluble = false;
  bool sdh = false;
  bool schmidt = false;
};

// True iff the section top/bottom is supersoluble, i.e. every chief factor of
// the view lying above `bottom` has prime order. Memoized per lattice.
// Throws NotNormal unless bottom is normal in the view.
bool is_supersoluble_section(GroupView g, SubgroupId bottom);
bool is_supersoluble(GroupView g);

// G^U: the smallest normal subgroup with supersoluble quotient.
SubgroupId u_residual(GroupView g);

// G/M_G is supersoluble. Throws NotMaximal.
bool is_u_normal_maximal(GroupView g, SubgroupId m);

bool is_minimal_nonsupersoluble(GroupView g);
// Minimal nonsupersoluble with G^U minimal normal.
bool is_sdh(GroupView g);
// Minimal nonnilpotent.
bool is_schmidt(GroupView g);
// Minimal nonabelian.
bool is_miller_moreno(GroupView g);

UProfile u_profile(GroupView g);

}  // namespace kusub
