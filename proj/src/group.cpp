#include "kusub/group.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <string>
#include <unordered_map>

#include "kusub/error.hpp"
#include "kusub/number_theory.hpp"

namespace kusub {

// ---------------------------------------------------------------------------
// StabilizerChain

StabilizerChain::StabilizerChain(std::size_t degree, std::vector<Permutation> const& generators)
    : degree_(degree) {
  auto smallest_moved = [](Permutation const& p) -> Point {
    for (Point x = 0; x < p.degree(); ++x) {
      if (p[x] != x) return x;
    }
    return 0;
  };

  std::vector<Permutation> strong;
  for (auto const& g : generators) {
    if (!g.is_identity()) strong.push_back(g);
  }

  // Initial base: make sure no strong generator fixes the whole base.
  std::vector<Point> base;
  for (auto const& s : strong) {
    bool fixes_base = std::all_of(base.begin(), base.end(), [&](Point b) { return s[b] == b; });
    if (fixes_base) base.push_back(smallest_moved(s));
  }

  auto fixes_prefix = [&](Permutation const& s, std::size_t i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (s[levels_[j].base_point] != levels_[j].base_point) return false;
    }
    return true;
  };

  for (Point b : base) {
    Level level;
    level.base_point = b;
    levels_.push_back(std::move(level));
  }
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    for (auto const& s : strong) {
      if (fixes_prefix(s, i)) levels_[i].generators.push_back(s);
    }
    rebuild_orbit(levels_[i]);
  }

  // Holt's SCHREIERSIMS: verify Schreier generators bottom-up; on a
  // non-trivial residue extend the lower levels and restart there.
  std::size_t i = levels_.size();
  while (i > 0) {
    std::size_t const level_index = i - 1;
    bool restarted = false;
    Level const& level = levels_[level_index];
    for (std::size_t oi = 0; oi < level.orbit.size() && !restarted; ++oi) {
      Point beta = level.orbit[oi];
      for (std::size_t si = 0; si < level.generators.size() && !restarted; ++si) {
        auto const& s = level.generators[si];
        Permutation const& u_beta = *level.transversal[beta];
        Permutation const& u_image = *level.transversal[s[beta]];
        Permutation h = u_beta * s * u_image.inverse();
        if (h.is_identity()) continue;
        auto [residue, failed_at] = strip(h, level_index + 1);
        if (residue.is_identity()) continue;

        if (failed_at == levels_.size()) {
          Level fresh;
          fresh.base_point = smallest_moved(residue);
          levels_.push_back(std::move(fresh));
        }
        for (std::size_t l = level_index + 1; l <= failed_at; ++l) {
          levels_[l].generators.push_back(residue);
          rebuild_orbit(levels_[l]);
        }
        i = failed_at + 1;
        restarted = true;
      }
    }
    if (!restarted) --i;
  }
}

void StabilizerChain::rebuild_orbit(Level& level) const {
  level.transversal.assign(degree_, std::nullopt);
  level.orbit.clear();
  level.transversal[level.base_point] = Permutation::identity(degree_);
  level.orbit.push_back(level.base_point);
  for (std::size_t k = 0; k < level.orbit.size(); ++k) {
    Point x = level.orbit[k];
    for (auto const& s : level.generators) {
      Point y = s[x];
      if (!level.transversal[y]) {
        level.transversal[y] = *level.transversal[x] * s;
        level.orbit.push_back(y);
      }
    }
  }
}

std::pair<Permutation, std::size_t> StabilizerChain::strip(Permutation h, std::size_t from) const {
  for (std::size_t m = from; m < levels_.size(); ++m) {
    Point beta = h[levels_[m].base_point];
    if (!levels_[m].transversal[beta]) return {std::move(h), m};
    h = h * levels_[m].transversal[beta]->inverse();
  }
  return {std::move(h), levels_.size()};
}

std::uint64_t StabilizerChain::order() const {
  std::uint64_t n = 1;
  for (auto const& level : levels_) n *= level.orbit.size();
  return n;
}

bool StabilizerChain::contains(Permutation const& x) const {
  if (x.degree() != degree_) return false;
  return strip(x, 0).first.is_identity();
}

std::vector<Point> StabilizerChain::base() const {
  std::vector<Point> out;
  for (auto const& level : levels_) out.push_back(level.base_point);
  return out;
}

std::vector<std::size_t> StabilizerChain::orbit_sizes() const {
  std::vector<std::size_t> out;
  for (auto const& level : levels_) out.push_back(level.orbit.size());
  return out;
}

// ---------------------------------------------------------------------------
// Group

namespace detail {

struct GroupData {
  GroupData(std::size_t deg, std::vector<Permutation> gens)
      : degree(deg), generators(std::move(gens)), chain(deg, generators) {
    order = chain.order();
    primes = prime_divisors(order);
  }

  std::size_t degree;
  std::vector<Permutation> generators;
  StabilizerChain chain;
  std::uint64_t order = 1;
  std::vector<std::uint64_t> primes;

  std::once_flag enumerated;
  std::vector<Permutation> elements;
  std::unordered_map<Permutation, ElementId, PermutationHash> index;
};

}  // namespace detail

Group group_from_generators(std::vector<Permutation> gens) {
  if (gens.empty()) throw Error(ErrorCode::EmptyGenerators, "generator list is empty");
  std::size_t degree = gens.front().degree();
  if (degree == 0) throw Error(ErrorCode::MixedDegree, "degree must be at least 1");
  for (auto const& g : gens) {
    if (g.degree() != degree) {
      throw Error(ErrorCode::MixedDegree, "generators have degrees " + std::to_string(degree) +
                                              " and " + std::to_string(g.degree()));
    }
  }
  Group out;
  out.data_ = std::make_shared<detail::GroupData>(degree, std::move(gens));
  return out;
}

std::size_t Group::degree() const { return data_->degree; }
std::vector<Permutation> const& Group::generators() const { return data_->generators; }
std::uint64_t Group::order() const { return data_->order; }
std::vector<std::uint64_t> const& Group::prime_set() const { return data_->primes; }
StabilizerChain const& Group::chain() const { return data_->chain; }

bool Group::contains(Permutation const& x) const {
  if (x.degree() != data_->degree) {
    throw Error(ErrorCode::MixedDegree, "element degree " + std::to_string(x.degree()) +
                                            " differs from group degree " +
                                            std::to_string(data_->degree));
  }
  return data_->chain.contains(x);
}

std::vector<Permutation> const& Group::elements(std::size_t cap) const {
  auto& d = *data_;
  if (d.order > cap) {
    throw Error(ErrorCode::GroupTooLarge, "order " + std::to_string(d.order) +
                                              " exceeds enumeration cap " + std::to_string(cap));
  }
  std::call_once(d.enumerated, [&d] {
    d.elements.reserve(d.order);
    auto add = [&d](Permutation p) {
      auto id = static_cast<ElementId>(d.elements.size());
      if (d.index.emplace(p, id).second) {
        d.elements.push_back(std::move(p));
        return true;
      }
      return false;
    };
    add(Permutation::identity(d.degree));
    std::size_t layer_begin = 0;
    while (layer_begin < d.elements.size()) {
      std::size_t layer_end = d.elements.size();
      std::vector<Permutation> next;
      for (std::size_t k = layer_begin; k < layer_end; ++k) {
        for (auto const& g : d.generators) {
          Permutation p = d.elements[k] * g;
          if (!d.index.contains(p)) {
            next.push_back(std::move(p));
          }
        }
      }
      std::sort(next.begin(), next.end());
      next.erase(std::unique(next.begin(), next.end()), next.end());
      for (auto& p : next) add(std::move(p));
      layer_begin = layer_end;
    }
  });
  return d.elements;
}

std::optional<ElementId> Group::index_of(Permutation const& x) const {
  elements(data_->order);
  auto it = data_->index.find(x);
  if (it == data_->index.end()) return std::nullopt;
  return it->second;
}

std::uint64_t order(Group const& g) { return g.order(); }
bool contains(Group const& g, Permutation const& x) { return g.contains(x); }
std::vector<Permutation> const& elements(Group const& g, std::size_t cap) { return g.elements(cap); }

std::uint64_t exponent(Group const& g, std::size_t cap) {
  std::uint64_t e = 1;
  for (auto const& x : g.elements(cap)) e = std::lcm(e, x.order());
  return e;
}

bool is_abelian(Group const& g) {
  auto const& gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (gens[i] * gens[j] != gens[j] * gens[i]) return false;
    }
  }
  return true;
}

bool is_cyclic(Group const& g, std::size_t cap) {
  auto const& elts = g.elements(cap);
  return std::any_of(elts.begin(), elts.end(),
                     [&](Permutation const& x) { return x.order() == g.order(); });
}

ElementSet conjugate(Group const& g, ElementSet const& h_set, ElementId by) {
  auto const& elts = g.elements(g.order());
  Permutation const& x = elts[by];
  Permutation x_inv = x.inverse();
  ElementSet out(elts.size());
  h_set.for_each([&](ElementId h) { out.insert(*g.index_of(x_inv * elts[h] * x)); });
  return out;
}

namespace {

// A generating set for s built greedily together with its closure.
std::pair<std::vector<ElementId>, ElementSet> greedy_closure(Group const& g, ElementSet const& s) {
  auto const& elts = g.elements(g.order());
  ElementSet closure(elts.size());
  closure.insert(0);
  std::vector<ElementId> gens;
  std::vector<ElementId> members{0};
  s.for_each([&](ElementId x) {
    if (closure.contains(x)) return;
    gens.push_back(x);
    // Regrow the closure with the enlarged generator set.
    for (std::size_t k = 0; k < members.size(); ++k) {
      for (ElementId gen : gens) {
        ElementId y = *g.index_of(elts[members[k]] * elts[gen]);
        if (!closure.contains(y)) {
          closure.insert(y);
          members.push_back(y);
        }
      }
    }
  });
  return {std::move(gens), std::move(closure)};
}

}  // namespace

bool is_subgroup(Group const& g, ElementSet const& s) {
  if (s.empty() || s.universe() != g.order()) return false;
  return greedy_closure(g, s).second == s;
}

Permutation CosetAction::image(Group const& parent, ElementId g) const {
  auto const& elts = parent.elements(parent.order());
  std::vector<Point> images(representatives.size());
  for (std::size_t c = 0; c < representatives.size(); ++c) {
    images[c] = coset_of[*parent.index_of(elts[representatives[c]] * elts[g])];
  }
  return Permutation::from_images(std::move(images));
}

CosetAction coset_action(Group const& g, ElementSet const& n, std::size_t cap) {
  auto const& elts = g.elements(cap);
  if (n.universe() != elts.size() || n.empty()) {
    throw Error(ErrorCode::NotASubgroup, "element set does not belong to this group");
  }
  auto [n_gens, closure] = greedy_closure(g, n);
  if (!(closure == n)) throw Error(ErrorCode::NotASubgroup, "element set is not closed");
  for (auto const& x : g.generators()) {
    Permutation x_inv = x.inverse();
    for (ElementId h : n_gens) {
      if (!n.contains(*g.index_of(x_inv * elts[h] * x))) {
        throw Error(ErrorCode::NotNormal, "subgroup is not normal");
      }
    }
  }

  CosetAction out;
  constexpr Point kUnset = ~Point{0};
  out.coset_of.assign(elts.size(), kUnset);
  auto members = n.ids();
  for (ElementId r = 0; r < elts.size(); ++r) {
    if (out.coset_of[r] != kUnset) continue;
    auto c = static_cast<Point>(out.representatives.size());
    out.representatives.push_back(r);
    for (ElementId h : members) out.coset_of[*g.index_of(elts[h] * elts[r])] = c;
  }

  std::vector<Permutation> gens;
  for (auto const& x : g.generators()) {
    gens.push_back(out.image(g, *g.index_of(x)));
  }
  out.quotient = group_from_generators(std::move(gens));
  return out;
}

Group quotient(Group const& g, ElementSet const& n, std::size_t cap) {
  return coset_action(g, n, cap).quotient;
}

}  // namespace kusub
