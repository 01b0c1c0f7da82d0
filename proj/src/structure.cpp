#include "kusub/structure.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "kusub/error.hpp"
#include "kusub/number_theory.hpp"

namespace kusub {

namespace {

std::uint64_t hall_order(std::uint64_t n, std::vector<std::uint64_t> const& primes) {
  std::uint64_t out = 1;
  for (auto p : primes) out *= prime_part(n, p);
  return out;
}

std::vector<SubgroupId> subgroups_of_order(GroupView g, std::uint64_t order) {
  std::vector<SubgroupId> out;
  for (SubgroupId h : g.subgroups()) {
    if (g.lattice().order(h) == order) out.push_back(h);
  }
  return out;
}

// Subgroup of the view generated by the given elements together with all
// their conjugates under the view.
SubgroupId normal_closure_of(GroupView g, std::vector<ElementId> elts) {
  auto const& lattice = g.lattice();
  auto const& top_gens = lattice.generators(g.top());
  SubgroupId current = lattice.closure(elts);
  for (;;) {
    bool grew = false;
    for (ElementId t : top_gens) {
      ElementId t_inv = lattice.inverse(t);
      for (ElementId x : lattice.generators(current)) {
        ElementId c = lattice.multiply(lattice.multiply(t_inv, x), t);
        if (!lattice.subgroup(current).contains(c)) {
          elts.push_back(c);
          grew = true;
        }
      }
    }
    if (!grew) return current;
    current = lattice.closure(elts);
  }
}

}  // namespace

std::vector<SubgroupId> normal_subgroups(GroupView g) {
  std::vector<SubgroupId> out;
  for (SubgroupId h : g.subgroups()) {
    if (g.is_normal(h)) out.push_back(h);
  }
  return out;
}

std::vector<SubgroupId> minimal_normal_subgroups(GroupView g) {
  if (g.is_trivial()) throw Error(ErrorCode::TrivialGroup, "trivial group has no minimal normal subgroups");
  auto const& lattice = g.lattice();
  auto normals = normal_subgroups(g);
  std::vector<SubgroupId> out;
  for (SubgroupId n : normals) {
    if (n == lattice.trivial()) continue;
    bool minimal = std::none_of(normals.begin(), normals.end(), [&](SubgroupId m) {
      return m != lattice.trivial() && m != n && lattice.contains(n, m);
    });
    if (minimal) out.push_back(n);
  }
  return out;
}

std::vector<SubgroupId> sylow_subgroups(GroupView g, std::uint64_t p) {
  if (!is_prime(p) || g.order() % p != 0) {
    throw Error(ErrorCode::PrimeDoesNotDivide, std::to_string(p) + " does not divide " + std::to_string(g.order()));
  }
  return subgroups_of_order(g, prime_part(g.order(), p));
}

SubgroupId sylow_subgroup(GroupView g, std::uint64_t p) { return sylow_subgroups(g, p).front(); }

std::vector<SubgroupId> hall_subgroups(GroupView g, std::vector<std::uint64_t> const& primes) {
  return subgroups_of_order(g, hall_order(g.order(), primes));
}

std::optional<SubgroupId> hall_subgroup(GroupView g, std::vector<std::uint64_t> const& primes) {
  auto all = hall_subgroups(g, primes);
  if (all.empty()) return std::nullopt;
  return all.front();
}

SubgroupId frattini(GroupView g) {
  if (g.is_trivial()) throw Error(ErrorCode::TrivialGroup, "trivial group has no maximal subgroups");
  auto const& lattice = g.lattice();
  SubgroupId out = g.top();
  for (SubgroupId m : g.maximal_subgroups()) out = lattice.meet(out, m);
  return out;
}

SubgroupId derived_subgroup(GroupView g) {
  auto const& lattice = g.lattice();
  auto const& gens = lattice.generators(g.top());
  std::vector<ElementId> commutators;
  for (ElementId a : gens) {
    for (ElementId b : gens) {
      ElementId c = lattice.multiply(lattice.multiply(lattice.inverse(a), lattice.inverse(b)),
                                     lattice.multiply(a, b));
      if (c != 0) commutators.push_back(c);
    }
  }
  return normal_closure_of(g, std::move(commutators));
}

std::vector<SubgroupId> derived_series(GroupView g) {
  std::vector<SubgroupId> out{g.top()};
  for (;;) {
    SubgroupId next = derived_subgroup(g.sub(out.back()));
    if (next == out.back()) return out;
    out.push_back(next);
  }
}

SubgroupId normal_closure(GroupView g, SubgroupId h) {
  if (!g.contains(h)) throw Error(ErrorCode::NotContained, "subgroup is not contained in the view");
  return normal_closure_of(g, g.lattice().generators(h));
}

SubgroupId p_core(GroupView g, std::uint64_t p) {
  // The normal p-subgroups are closed under products, so the one of largest
  // order contains all the others.
  auto const& lattice = g.lattice();
  SubgroupId best = lattice.trivial();
  for (SubgroupId h : normal_subgroups(g)) {
    if (is_power_of(lattice.order(h), p) && lattice.order(h) > lattice.order(best)) best = h;
  }
  return best;
}

SubgroupId fitting(GroupView g) {
  auto const& lattice = g.lattice();
  SubgroupId out = lattice.trivial();
  for (auto p : g.primes()) out = lattice.join(out, p_core(g, p));
  return out;
}

SubgroupId center(GroupView g) {
  auto const& lattice = g.lattice();
  auto const& gens = lattice.generators(g.top());
  std::vector<ElementId> central;
  lattice.subgroup(g.top()).for_each([&](ElementId x) {
    bool commutes = std::all_of(gens.begin(), gens.end(), [&](ElementId t) {
      return lattice.multiply(x, t) == lattice.multiply(t, x);
    });
    if (commutes) central.push_back(x);
  });
  return lattice.closure(central);
}

ChiefSeries chief_series_from(GroupView g, SubgroupId bottom) {
  auto const& lattice = g.lattice();
  if (!g.is_normal(bottom)) throw Error(ErrorCode::NotNormal, "series base is not normal");
  std::vector<SubgroupId> above;
  for (SubgroupId n : normal_subgroups(g)) {
    if (lattice.contains(n, bottom) && n != bottom) above.push_back(n);
  }
  ChiefSeries out;
  out.chain.push_back(bottom);
  SubgroupId current = bottom;
  while (current != g.top()) {
    // Ascending canonical order lists smaller orders first, so the first
    // normal subgroup over `current` is a minimal one.
    auto it = std::find_if(above.begin(), above.end(), [&](SubgroupId n) {
      return n != current && lattice.contains(n, current);
    });
    SubgroupId next = *it;
    out.factor_orders.push_back(lattice.order(next) / lattice.order(current));
    out.chain.push_back(next);
    current = next;
  }
  return out;
}

ChiefSeries chief_series(GroupView g) { return chief_series_from(g, g.lattice().trivial()); }

bool is_soluble_by_chief_factors(GroupView g) {
  auto series = chief_series(g);
  return std::all_of(series.factor_orders.begin(), series.factor_orders.end(),
                     [](std::uint64_t f) { return is_prime_power(f); });
}

bool is_soluble_by_derived_series(GroupView g) {
  return g.lattice().order(derived_series(g).back()) == 1;
}

bool is_soluble(GroupView g) {
  bool by_chief = is_soluble_by_chief_factors(g);
  if (by_chief != is_soluble_by_derived_series(g)) {
    throw std::logic_error("solubility tests disagree");
  }
  return by_chief;
}

bool is_nilpotent(GroupView g) {
  for (auto p : g.primes()) {
    if (!g.is_normal(sylow_subgroup(g, p))) return false;
  }
  return true;
}

bool is_abelian(GroupView g) {
  auto const& lattice = g.lattice();
  auto const& gens = lattice.generators(g.top());
  for (ElementId a : gens) {
    for (ElementId b : gens) {
      if (lattice.multiply(a, b) != lattice.multiply(b, a)) return false;
    }
  }
  return true;
}

bool is_cyclic(GroupView g) {
  auto const& lattice = g.lattice();
  bool found = false;
  lattice.subgroup(g.top()).for_each([&](ElementId x) {
    if (lattice.element_order(x) == g.order()) found = true;
  });
  return found;
}

std::uint64_t exponent(GroupView g) {
  auto const& lattice = g.lattice();
  std::uint64_t e = 1;
  lattice.subgroup(g.top()).for_each([&](ElementId x) { e = std::lcm(e, lattice.element_order(x)); });
  return e;
}

std::vector<SubgroupId> complements(GroupView g, SubgroupId n) {
  auto const& lattice = g.lattice();
  if (!g.is_normal(n)) throw Error(ErrorCode::NotNormal, "subgroup is not normal");
  std::vector<SubgroupId> out;
  for (SubgroupId s : g.subgroups()) {
    if (lattice.order(s) * lattice.order(n) == g.order() && lattice.meet(s, n) == lattice.trivial()) {
      out.push_back(s);
    }
  }
  return out;
}

bool is_phi_dispersive(GroupView g, PrimeOrdering const& phi) {
  auto sorted = phi.primes;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != g.primes()) throw Error(ErrorCode::BadOrdering, "ordering is not a permutation of pi(G)");
  auto const& lattice = g.lattice();
  auto normals = normal_subgroups(g);
  std::uint64_t target = 1;
  for (auto p : phi.primes) {
    target *= prime_part(g.order(), p);
    bool found = std::any_of(normals.begin(), normals.end(),
                             [&](SubgroupId n) { return lattice.order(n) == target; });
    if (!found) return false;
  }
  return true;
}

bool is_ore_dispersive(GroupView g) {
  auto primes = g.primes();
  std::reverse(primes.begin(), primes.end());
  return is_phi_dispersive(g, PrimeOrdering{primes});
}

}  // namespace kusub
