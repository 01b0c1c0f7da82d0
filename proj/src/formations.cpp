#include "kusub/formations.hpp"

#include <algorithm>
#include <stdexcept>

#include "kusub/detail/memo.hpp"
#include "kusub/error.hpp"
#include "kusub/number_theory.hpp"
#include "kusub/structure.hpp"

namespace kusub {

bool is_supersoluble_section(GroupView g, SubgroupId bottom) {
  auto& slot = g.lattice().memo().section(g.top(), bottom);
  auto cached = slot.load(std::memory_order_relaxed);
  if (cached != detail::LatticeMemo::kUnknown) return cached == 1;
  auto series = chief_series_from(g, bottom);
  bool result = std::all_of(series.factor_orders.begin(), series.factor_orders.end(),
                            [](std::uint64_t f) { return is_prime(f); });
  slot.store(result ? 1 : 0, std::memory_order_relaxed);
  return result;
}

bool is_supersoluble(GroupView g) { return is_supersoluble_section(g, g.lattice().trivial()); }

SubgroupId u_residual(GroupView g) {
  auto const& lattice = g.lattice();
  SubgroupId out = g.top();
  for (SubgroupId n : normal_subgroups(g)) {
    if (is_supersoluble_section(g, n)) out = lattice.meet(out, n);
  }
  if (!is_supersoluble_section(g, out)) throw std::logic_error("quotient by the U-residual is not supersoluble");
  return out;
}

bool is_u_normal_maximal(GroupView g, SubgroupId m) {
  auto const& maximals = g.maximal_subgroups();
  if (!std::binary_search(maximals.begin(), maximals.end(), m)) {
    throw Error(ErrorCode::NotMaximal, "subgroup is not maximal");
  }
  return is_supersoluble_section(g, core(g, m));
}

bool is_minimal_nonsupersoluble(GroupView g) {
  if (is_supersoluble(g)) return false;
  auto const& maximals = g.maximal_subgroups();
  return std::all_of(maximals.begin(), maximals.end(),
                     [&](SubgroupId m) { return is_supersoluble(g.sub(m)); });
}

bool is_sdh(GroupView g) {
  if (!is_minimal_nonsupersoluble(g)) return false;
  auto minimal = minimal_normal_subgroups(g);
  return std::binary_search(minimal.begin(), minimal.end(), u_residual(g));
}

bool is_schmidt(GroupView g) {
  if (is_nilpotent(g)) return false;
  auto const& maximals = g.maximal_subgroups();
  return std::all_of(maximals.begin(), maximals.end(),
                     [&](SubgroupId m) { return is_nilpotent(g.sub(m)); });
}

bool is_miller_moreno(GroupView g) {
  if (is_abelian(g)) return false;
  auto const& maximals = g.maximal_subgroups();
  return std::all_of(maximals.begin(), maximals.end(),
                     [&](SubgroupId m) { return is_abelian(g.sub(m)); });
}

UProfile u_profile(GroupView g) {
  UProfile out;
  out.supersoluble = is_supersoluble(g);
  out.u_residual = u_residual(g);
  out.minimal_nonsupersoluble = is_minimal_nonsupersoluble(g);
  out.sdh = is_sdh(g);
  out.schmidt = is_schmidt(g);
  return out;
}

}  // namespace kusub
