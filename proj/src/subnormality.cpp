#include "kusub/subnormality.hpp"

#include <memory>
#include <mutex>

#include "kusub/detail/memo.hpp"
#include "kusub/error.hpp"
#include "kusub/formations.hpp"
#include "kusub/structure.hpp"

namespace kusub {

namespace {

bool u_quotient_step(SubgroupLattice const& lattice, SubgroupId lower, SubgroupId upper) {
  GroupView up(lattice, upper);
  return is_supersoluble_section(up, core(up, lower));
}

bool normal_step(SubgroupLattice const& lattice, SubgroupId lower, SubgroupId upper) {
  return lattice.normalizes(upper, lower);
}

// Shortest-chain distances from every subgroup of the view up to its top.
// Subgroups are visited in descending canonical order, so every proper
// overgroup is settled before the subgroups below it.
std::shared_ptr<detail::Reachability const> compute_reachability(GroupView g, bool allow_normal) {
  auto const& lattice = g.lattice();
  auto out = std::make_shared<detail::Reachability>();
  out->distance.assign(lattice.size(), -1);
  out->next.assign(lattice.size(), lattice.size());
  out->distance[g.top()] = 0;
  auto subs = g.subgroups();
  for (auto it = subs.rbegin(); it != subs.rend(); ++it) {
    SubgroupId a = *it;
    if (a == g.top()) continue;
    int best = -1;
    SubgroupId best_next = lattice.size();
    for (SubgroupId b : lattice.overgroups_of(a)) {
      if (b == a || !g.contains(b) || out->distance[b] < 0) continue;
      int candidate = out->distance[b] + 1;
      if (best >= 0 && candidate >= best) continue;
      bool edge = (allow_normal && normal_step(lattice, a, b)) || u_quotient_step(lattice, a, b);
      if (edge) {
        best = candidate;
        best_next = b;
      }
    }
    out->distance[a] = best;
    out->next[a] = best_next;
  }
  return out;
}

std::shared_ptr<detail::Reachability const> reachability(GroupView g, bool allow_normal) {
  auto& memo = g.lattice().memo();
  {
    std::lock_guard lock(memo.reach_mutex);
    auto& table = allow_normal ? memo.ku_reach : memo.u_reach;
    if (table.size() != memo.n) table.resize(memo.n);
    if (table[g.top()]) return table[g.top()];
  }
  auto computed = compute_reachability(g, allow_normal);
  std::lock_guard lock(memo.reach_mutex);
  auto& slot = (allow_normal ? memo.ku_reach : memo.u_reach)[g.top()];
  if (!slot) slot = computed;
  return slot;
}

void require_contained(GroupView g, SubgroupId h) {
  if (!g.contains(h)) throw Error(ErrorCode::NotContained, "subgroup is not contained in the view");
}

std::optional<KUChain> chain_from(GroupView g, SubgroupId h, bool allow_normal) {
  require_contained(g, h);
  auto reach = reachability(g, allow_normal);
  if (reach->distance[h] < 0) return std::nullopt;
  auto const& lattice = g.lattice();
  KUChain chain;
  chain.subgroups.push_back(h);
  for (SubgroupId cur = h; cur != g.top();) {
    SubgroupId next = reach->next[cur];
    bool normal = allow_normal && normal_step(lattice, cur, next);
    chain.step_kinds.push_back(normal ? StepKind::Normal : StepKind::UQuotient);
    chain.subgroups.push_back(next);
    cur = next;
  }
  return chain;
}

}  // namespace

bool KUChain::is_valid(GroupView g) const {
  auto const& lattice = g.lattice();
  if (subgroups.empty() || subgroups.back() != g.top()) return false;
  if (step_kinds.size() + 1 != subgroups.size()) return false;
  for (std::size_t i = 0; i < step_kinds.size(); ++i) {
    SubgroupId lower = subgroups[i];
    SubgroupId upper = subgroups[i + 1];
    if (!lattice.contains(upper, lower)) return false;
    bool ok = step_kinds[i] == StepKind::Normal ? normal_step(lattice, lower, upper)
                                                 : u_quotient_step(lattice, lower, upper);
    if (!ok) return false;
  }
  return true;
}

bool is_subnormal(GroupView g, SubgroupId h) {
  require_contained(g, h);
  // Descend from the top by successive normal closures of h; h is subnormal
  // exactly when this sequence reaches h.
  SubgroupId current = g.top();
  for (;;) {
    if (current == h) return true;
    SubgroupId next = normal_closure(g.sub(current), h);
    if (next == current) return false;
    current = next;
  }
}

bool is_u_subnormal(GroupView g, SubgroupId h) { return u_subnormal_chain(g, h).has_value(); }

bool is_k_u_subnormal(GroupView g, SubgroupId h) { return k_u_subnormal_chain(g, h).has_value(); }

std::optional<KUChain> k_u_subnormal_chain(GroupView g, SubgroupId h) { return chain_from(g, h, true); }

std::optional<KUChain> u_subnormal_chain(GroupView g, SubgroupId h) { return chain_from(g, h, false); }

NMaximalVerdict all_n_maximal_ku_subnormal(GroupView g, std::size_t n) {
  if (n == 0) throw Error(ErrorCode::PreconditionViolated, "n must be positive");
  NMaximalVerdict out;
  for (SubgroupId h : n_maximal_subgroups(g, n)) {
    if (!is_k_u_subnormal(g, h)) out.failing.push_back(h);
  }
  out.holds = out.failing.empty();
  return out;
}

}  // namespace kusub
