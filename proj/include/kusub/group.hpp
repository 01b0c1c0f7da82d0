#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "kusub/element_set.hpp"
#include "kusub/permutation.hpp"

namespace kusub {

inline constexpr std::size_t kDefaultEnumerationCap = 5000;
inline constexpr std::size_t kDefaultLatticeCap = 2000;

// Size limits for operations that materialize elements or subgroups.
struct Caps {
  std::size_t enumeration = kDefaultEnumerationCap;
  std::size_t lattice = kDefaultLatticeCap;
};

// Base and strong generating set with one Schreier transversal per level.
// Base points are chosen as the smallest point moved by the element that
// forces a new level, so the chain is a function of the generator list.
class StabilizerChain {
 public:
  StabilizerChain(std::size_t degree, std::vector<Permutation> const& generators);

  std::uint64_t order() const;
  bool contains(Permutation const& x) const;
  std::vector<Point> base() const;
  std::vector<std::size_t> orbit_sizes() const;

 private:
  struct Level {
    Point base_point = 0;
    std::vector<Permutation> generators;
    // transversal[x] maps base_point to x; empty when x is outside the orbit.
    std::vector<std::optional<Permutation>> transversal;
    std::vector<Point> orbit;
  };

  void rebuild_orbit(Level& level) const;
  // Returns the residue and the first level at which sifting failed
  // (levels_.size() when every level was passed).
  std::pair<Permutation, std::size_t> strip(Permutation h, std::size_t from) const;

  std::size_t degree_;
  std::vector<Level> levels_;
};

namespace detail {
struct GroupData;
}

// A permutation group given by generators. Immutable; copies share caches.
class Group {
 public:
  std::size_t degree() const;
  std::vector<Permutation> const& generators() const;
  std::uint64_t order() const;
  // pi(G): distinct primes dividing the order, increasing.
  std::vector<std::uint64_t> const& prime_set() const;
  StabilizerChain const& chain() const;

  bool contains(Permutation const& x) const;

  // All elements in the deterministic enumeration order: breadth-first from
  // the identity with generators applied in input order, each BFS layer
  // sorted lexicographically by image sequence. Element ids index this list.
  std::vector<Permutation> const& elements(std::size_t cap = kDefaultEnumerationCap) const;
  std::optional<ElementId> index_of(Permutation const& x) const;

 private:
  friend Group group_from_generators(std::vector<Permutation> gens);
  std::shared_ptr<detail::GroupData> data_;
};

Group group_from_generators(std::vector<Permutation> gens);

std::uint64_t order(Group const& g);
bool contains(Group const& g, Permutation const& x);
std::vector<Permutation> const& elements(Group const& g, std::size_t cap = kDefaultEnumerationCap);
std::uint64_t exponent(Group const& g, std::size_t cap = kDefaultEnumerationCap);
bool is_abelian(Group const& g);
bool is_cyclic(Group const& g, std::size_t cap = kDefaultEnumerationCap);

// Conjugate set {g^-1 h g : h in h_set} as an ElementSet of the same group.
ElementSet conjugate(Group const& g, ElementSet const& h_set, ElementId by);

// True iff the set is closed under products (and nonempty).
bool is_subgroup(Group const& g, ElementSet const& s);

// The action of G on the right cosets Nx of a normal subgroup N. Cosets are
// numbered by their smallest element id, so the numbering is deterministic.
struct CosetAction {
  Group quotient;
  // coset_of[g] = zero-based coset point containing element g.
  std::vector<Point> coset_of;
  // Smallest element id in each coset.
  std::vector<ElementId> representatives;

  // Image of an element of G in the quotient group.
  Permutation image(Group const& parent, ElementId g) const;
};

CosetAction coset_action(Group const& g, ElementSet const& n, std::size_t cap = kDefaultEnumerationCap);
Group quotient(Group const& g, ElementSet const& n, std::size_t cap = kDefaultEnumerationCap);

}  // namespace kusub
