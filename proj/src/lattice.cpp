#include "kusub/lattice.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>

#include "kusub/detail/memo.hpp"
#include "kusub/error.hpp"
#include "kusub/number_theory.hpp"

namespace kusub {

SubgroupLattice::SubgroupLattice(SubgroupLattice&&) noexcept = default;
SubgroupLattice& SubgroupLattice::operator=(SubgroupLattice&&) noexcept = default;
SubgroupLattice::~SubgroupLattice() = default;

void SubgroupLattice::init_arithmetic(Caps caps) {
  if (group_.order() > caps.lattice) {
    throw Error(ErrorCode::GroupTooLarge, "order " + std::to_string(group_.order()) +
                                              " exceeds lattice cap " + std::to_string(caps.lattice));
  }
  auto const& elts = group_.elements(caps.enumeration);
  std::size_t const n = elts.size();
  table_.resize(n * n);
  inverse_.resize(n);
  element_order_.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      ElementId ab = *group_.index_of(elts[a] * elts[b]);
      table_[a * n + b] = ab;
      if (ab == 0) inverse_[a] = static_cast<ElementId>(b);
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    std::uint64_t k = 1;
    for (ElementId x = static_cast<ElementId>(a); x != 0; x = multiply(x, static_cast<ElementId>(a))) ++k;
    element_order_[a] = k;
  }
}

ElementSet SubgroupLattice::close(ElementSet start, std::vector<ElementId> const& gens) const {
  std::vector<ElementId> members = start.ids();
  if (members.empty()) {
    start.insert(0);
    members.push_back(0);
  }
  for (std::size_t k = 0; k < members.size(); ++k) {
    for (ElementId g : gens) {
      ElementId y = multiply(members[k], g);
      if (!start.contains(y)) {
        start.insert(y);
        members.push_back(y);
      }
    }
  }
  return start;
}

std::vector<ElementId> SubgroupLattice::small_generating_set(ElementSet const& s) const {
  std::vector<ElementId> gens;
  ElementSet current(element_count());
  current.insert(0);
  s.for_each([&](ElementId x) {
    if (current.contains(x)) return;
    gens.push_back(x);
    current = close(current, gens);
  });
  return gens;
}

SubgroupLattice SubgroupLattice::build(Group const& g, Caps caps) {
  SubgroupLattice out;
  out.group_ = g;
  out.init_arithmetic(caps);
  std::size_t const n = out.element_count();

  std::vector<ElementSet> found;
  std::vector<std::vector<ElementId>> gens;
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> seen;
  auto record = [&](ElementSet s, std::vector<ElementId> generators) {
    if (seen.contains(s)) return;
    seen.emplace(s, found.size());
    found.push_back(std::move(s));
    gens.push_back(std::move(generators));
  };

  std::vector<std::size_t> cyclic_ids;
  for (ElementId x = 0; x < n; ++x) {
    ElementSet c(n);
    ElementId y = 0;
    do {
      c.insert(y);
      y = out.multiply(y, x);
    } while (y != 0);
    if (!seen.contains(c)) {
      cyclic_ids.push_back(found.size());
      record(std::move(c), x == 0 ? std::vector<ElementId>{} : std::vector<ElementId>{x});
    }
  }

  // Every subgroup is generated by its cyclic subgroups, so closing under
  // "join with a cyclic subgroup" reaches the full lattice.
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (std::size_t c : cyclic_ids) {
      if (gens[c].empty()) continue;
      ElementId x = gens[c].front();
      if (found[i].contains(x)) continue;
      auto joined_gens = gens[i];
      joined_gens.push_back(x);
      ElementSet joined = out.close(found[i], joined_gens);
      if (!seen.contains(joined)) record(std::move(joined), std::move(joined_gens));
    }
  }

  out.finish(std::move(found), std::move(gens));
  return out;
}

SubgroupLattice SubgroupLattice::from_subgroups(Group const& g, std::vector<ElementSet> subgroups,
                                                Caps caps) {
  SubgroupLattice out;
  out.group_ = g;
  out.init_arithmetic(caps);
  std::size_t const n = out.element_count();
  std::vector<std::vector<ElementId>> gens;
  for (std::size_t i = 0; i < subgroups.size(); ++i) {
    auto const& s = subgroups[i];
    if (s.universe() != n || !s.contains(0)) {
      throw Error(ErrorCode::Malformed, "subgroup list entry " + std::to_string(i) + " is not a subgroup");
    }
    if (i > 0 && !canonical_less(subgroups[i - 1], s)) {
      throw Error(ErrorCode::Malformed, "subgroup list is not in canonical order");
    }
    auto sg = out.small_generating_set(s);
    if (!(out.close(ElementSet(n), sg) == s)) {
      throw Error(ErrorCode::Malformed, "subgroup list entry " + std::to_string(i) + " is not closed");
    }
    gens.push_back(std::move(sg));
  }
  if (subgroups.empty() || subgroups.front().size() != 1 || subgroups.back().size() != n) {
    throw Error(ErrorCode::Malformed, "subgroup list must start at 1 and end at the whole group");
  }
  out.finish(std::move(subgroups), std::move(gens));
  return out;
}

void SubgroupLattice::finish(std::vector<ElementSet> subgroups, std::vector<std::vector<ElementId>> gens) {
  std::vector<std::size_t> order_idx(subgroups.size());
  std::iota(order_idx.begin(), order_idx.end(), std::size_t{0});
  std::sort(order_idx.begin(), order_idx.end(), [&](std::size_t a, std::size_t b) {
    return canonical_less(subgroups[a], subgroups[b]);
  });
  std::size_t const count = subgroups.size();
  subgroups_.clear();
  gens_.clear();
  for (std::size_t k : order_idx) {
    subgroups_.push_back(std::move(subgroups[k]));
    gens_.push_back(std::move(gens[k]));
  }
  orders_.resize(count);
  lookup_.clear();
  for (std::size_t i = 0; i < count; ++i) {
    orders_[i] = subgroups_[i].size();
    lookup_.emplace(subgroups_[i], i);
  }

  below_.assign(count, ElementSet(count));
  for (std::size_t j = 0; j < count; ++j) {
    for (std::size_t i = 0; i <= j; ++i) {
      if (orders_[j] % orders_[i] == 0 && subgroups_[i].is_subset_of(subgroups_[j])) {
        below_[j].insert(static_cast<ElementId>(i));
      }
    }
  }

  maximals_.assign(count, {});
  for (std::size_t j = 0; j < count; ++j) {
    ElementSet strict = below_[j];
    strict.erase(static_cast<ElementId>(j));
    ElementSet covers = strict;
    strict.for_each([&](ElementId k) {
      ElementSet under = below_[k];
      under.erase(k);
      covers = covers - under;
    });
    for (ElementId i : covers.ids()) maximals_[j].push_back(i);
  }

  std::size_t const n = element_count();
  normalizers_.resize(count);
  for (std::size_t h = 0; h < count; ++h) {
    ElementSet norm(n);
    for (ElementId x = 0; x < n; ++x) {
      ElementId x_inv = inverse(x);
      bool ok = std::all_of(gens_[h].begin(), gens_[h].end(), [&](ElementId g) {
        return subgroups_[h].contains(multiply(multiply(x_inv, g), x));
      });
      if (ok) norm.insert(x);
    }
    normalizers_[h] = lookup_.at(norm);
  }

  // Conjugacy classes: orbits under conjugation by the group's generators.
  std::vector<std::size_t> parent(count);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  std::function<std::size_t(std::size_t)> root = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<ElementId> group_gens;
  for (auto const& p : group_.generators()) group_gens.push_back(*group_.index_of(p));
  for (std::size_t h = 0; h < count; ++h) {
    for (ElementId x : group_gens) {
      std::size_t a = root(h);
      std::size_t b = root(conjugate(h, x));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  classes_.clear();
  class_of_.assign(count, 0);
  std::vector<std::size_t> class_index(count, count);
  for (std::size_t h = 0; h < count; ++h) {
    std::size_t r = root(h);
    if (class_index[r] == count) {
      class_index[r] = classes_.size();
      classes_.emplace_back();
    }
    class_of_[h] = class_index[r];
    classes_[class_index[r]].push_back(h);
  }

  memo_ = std::make_unique<detail::LatticeMemo>(count);
}

std::vector<SubgroupId> SubgroupLattice::subgroups_of(SubgroupId h) const {
  std::vector<SubgroupId> out;
  below_[h].for_each([&](ElementId i) { out.push_back(i); });
  return out;
}

std::vector<SubgroupId> SubgroupLattice::overgroups_of(SubgroupId h) const {
  std::vector<SubgroupId> out;
  for (SubgroupId j = h; j < size(); ++j) {
    if (contains(j, h)) out.push_back(j);
  }
  return out;
}

std::vector<std::pair<SubgroupId, SubgroupId>> SubgroupLattice::maximality_edges() const {
  std::vector<std::pair<SubgroupId, SubgroupId>> out;
  for (SubgroupId j = 0; j < size(); ++j) {
    for (SubgroupId i : maximals_[j]) out.emplace_back(i, j);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<SubgroupId> SubgroupLattice::find(ElementSet const& s) const {
  auto it = lookup_.find(s);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

SubgroupId SubgroupLattice::meet(SubgroupId a, SubgroupId b) const {
  return lookup_.at(subgroups_[a] & subgroups_[b]);
}

SubgroupId SubgroupLattice::join(SubgroupId a, SubgroupId b) const {
  if (contains(a, b)) return a;
  if (contains(b, a)) return b;
  auto gens = gens_[a];
  gens.insert(gens.end(), gens_[b].begin(), gens_[b].end());
  return lookup_.at(close(subgroups_[a], gens));
}

SubgroupId SubgroupLattice::closure(std::vector<ElementId> const& gens) const {
  return lookup_.at(close(ElementSet(element_count()), gens));
}

SubgroupId SubgroupLattice::conjugate(SubgroupId h, ElementId by) const {
  ElementSet out(element_count());
  ElementId by_inv = inverse(by);
  subgroups_[h].for_each([&](ElementId x) { out.insert(multiply(multiply(by_inv, x), by)); });
  return lookup_.at(out);
}

GroupView SubgroupLattice::view(SubgroupId top) const { return GroupView(*this, top); }

std::vector<std::uint64_t> GroupView::primes() const { return prime_divisors(order()); }

bool MaximalChain::is_valid(SubgroupLattice const& lattice) const {
  for (std::size_t k = 0; k + 1 < steps.size(); ++k) {
    auto const& maxs = lattice.maximal_subgroups(steps[k]);
    if (std::find(maxs.begin(), maxs.end(), steps[k + 1]) == maxs.end()) return false;
  }
  return !steps.empty();
}

SubgroupLattice all_subgroups(Group const& g, Caps caps) { return SubgroupLattice::build(g, caps); }

std::vector<SubgroupId> maximal_subgroups(SubgroupLattice const& lattice, SubgroupId h) {
  return lattice.maximal_subgroups(h);
}

std::vector<SubgroupId> n_maximal_subgroups(GroupView g, std::size_t n) {
  auto const& lattice = g.lattice();
  // Level k holds every subgroup at the end of some maximal chain of length k.
  ElementSet level(lattice.size());
  level.insert(static_cast<ElementId>(g.top()));
  for (std::size_t k = 0; k < n; ++k) {
    ElementSet next(lattice.size());
    level.for_each([&](ElementId h) {
      for (SubgroupId m : lattice.maximal_subgroups(h)) next.insert(static_cast<ElementId>(m));
    });
    level = std::move(next);
  }
  std::vector<SubgroupId> out;
  level.for_each([&](ElementId h) { out.push_back(h); });
  return out;
}

std::optional<MaximalChain> find_maximal_chain(GroupView g, SubgroupId h, std::size_t n) {
  auto const& lattice = g.lattice();
  if (!g.contains(h)) return std::nullopt;
  std::vector<SubgroupId> path{g.top()};
  std::vector<std::vector<bool>> dead(n + 1, std::vector<bool>(lattice.size(), false));
  std::function<bool(SubgroupId, std::size_t)> dfs = [&](SubgroupId at, std::size_t left) {
    if (left == 0) return at == h;
    if (dead[left][at]) return false;
    for (SubgroupId m : lattice.maximal_subgroups(at)) {
      if (!lattice.contains(m, h)) continue;
      path.push_back(m);
      if (dfs(m, left - 1)) return true;
      path.pop_back();
    }
    dead[left][at] = true;
    return false;
  };
  if (!dfs(g.top(), n)) return std::nullopt;
  return MaximalChain{path};
}

SubgroupId core(GroupView g, SubgroupId h) {
  auto const& lattice = g.lattice();
  if (!g.contains(h)) throw Error(ErrorCode::NotContained, "subgroup is not contained in the view");
  auto& slot = lattice.memo().core(g.top(), h);
  auto cached = slot.load(std::memory_order_relaxed);
  if (cached != detail::LatticeMemo::kNoCore) return cached;
  auto subs = lattice.subgroups_of(h);
  SubgroupId result = lattice.trivial();
  for (auto it = subs.rbegin(); it != subs.rend(); ++it) {
    if (lattice.normalizes(g.top(), *it)) {
      result = *it;
      break;
    }
  }
  slot.store(static_cast<std::uint32_t>(result), std::memory_order_relaxed);
  return result;
}

SubgroupId normalizer(SubgroupLattice const& lattice, SubgroupId h) { return lattice.normalizer(h); }

std::vector<std::vector<SubgroupId>> conjugacy_classes_of_subgroups(SubgroupLattice const& lattice) {
  return lattice.conjugacy_classes();
}

bool is_normal_in(SubgroupLattice const& lattice, SubgroupId h, SubgroupId k) {
  if (!lattice.contains(k, h)) throw Error(ErrorCode::NotContained, "first subgroup is not contained in the second");
  return lattice.normalizes(k, h);
}

}  // namespace kusub
