#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "kusub/element_set.hpp"
#include "kusub/group.hpp"

namespace kusub {

// Index into SubgroupLattice's canonical subgroup list.
using SubgroupId = std::size_t;

namespace detail {
struct LatticeMemo;
}

class GroupView;

// Every subgroup of a small group, materialized as element sets in canonical
// order (by order, then lexicographically by sorted element ids). The
// trivial subgroup is always id 0 and the whole group is always the last id.
//
// Construction computes containment, maximality edges, normalizers and
// conjugacy classes up front; later analyses memoize into internal caches
// whose fills are idempotent, so a finished lattice may be shared by
// concurrent readers.
class SubgroupLattice {
 public:
  // Fixpoint closure of all cyclic subgroups under joins.
  // Throws GroupTooLarge when |G| exceeds caps.lattice.
  static SubgroupLattice build(Group const& g, Caps caps = {});

  // Rebuilds derived data from a previously computed canonical subgroup list
  // (lattice cache). Throws Malformed if the list is not a valid canonical
  // subgroup list of g.
  static SubgroupLattice from_subgroups(Group const& g, std::vector<ElementSet> subgroups,
                                        Caps caps = {});

  SubgroupLattice(SubgroupLattice&&) noexcept;
  SubgroupLattice& operator=(SubgroupLattice&&) noexcept;
  ~SubgroupLattice();

  Group const& group() const noexcept { return group_; }
  std::size_t size() const noexcept { return subgroups_.size(); }
  SubgroupId trivial() const noexcept { return 0; }
  SubgroupId whole() const noexcept { return subgroups_.size() - 1; }

  ElementSet const& subgroup(SubgroupId h) const { return subgroups_[h]; }
  std::vector<ElementSet> const& subgroups() const noexcept { return subgroups_; }
  std::uint64_t order(SubgroupId h) const { return orders_[h]; }
  std::vector<ElementId> const& generators(SubgroupId h) const { return gens_[h]; }

  // small <= big
  bool contains(SubgroupId big, SubgroupId small) const { return below_[big].contains(static_cast<ElementId>(small)); }
  // Subgroups of h (including h), ascending canonical order.
  std::vector<SubgroupId> subgroups_of(SubgroupId h) const;
  // Subgroups containing h (including h), ascending canonical order.
  std::vector<SubgroupId> overgroups_of(SubgroupId h) const;
  // Maximal subgroups of h, ascending canonical order.
  std::vector<SubgroupId> const& maximal_subgroups(SubgroupId h) const { return maximals_[h]; }
  std::vector<std::pair<SubgroupId, SubgroupId>> maximality_edges() const;

  SubgroupId normalizer(SubgroupId h) const { return normalizers_[h]; }
  // True iff every element of k normalizes h.
  bool normalizes(SubgroupId k, SubgroupId h) const { return contains(normalizers_[h], k); }
  std::size_t conjugacy_class_of(SubgroupId h) const { return class_of_[h]; }
  std::vector<std::vector<SubgroupId>> const& conjugacy_classes() const noexcept { return classes_; }

  std::optional<SubgroupId> find(ElementSet const& s) const;
  SubgroupId meet(SubgroupId a, SubgroupId b) const;
  SubgroupId join(SubgroupId a, SubgroupId b) const;
  SubgroupId closure(std::vector<ElementId> const& gens) const;
  SubgroupId cyclic(ElementId x) const { return closure({x}); }
  SubgroupId conjugate(SubgroupId h, ElementId by) const;

  // Element arithmetic over the enumeration of group().
  std::size_t element_count() const noexcept { return inverse_.size(); }
  ElementId multiply(ElementId a, ElementId b) const { return table_[a * inverse_.size() + b]; }
  ElementId inverse(ElementId a) const { return inverse_[a]; }
  std::uint64_t element_order(ElementId a) const { return element_order_[a]; }

  GroupView view(SubgroupId top) const;

  detail::LatticeMemo& memo() const { return *memo_; }

 private:
  SubgroupLattice() = default;
  void init_arithmetic(Caps caps);
  void finish(std::vector<ElementSet> subgroups, std::vector<std::vector<ElementId>> gens);
  ElementSet close(ElementSet start, std::vector<ElementId> const& gens) const;
  std::vector<ElementId> small_generating_set(ElementSet const& s) const;

  Group group_;
  std::vector<ElementId> table_;
  std::vector<ElementId> inverse_;
  std::vector<std::uint64_t> element_order_;

  std::vector<ElementSet> subgroups_;
  std::vector<std::uint64_t> orders_;
  std::vector<std::vector<ElementId>> gens_;
  std::vector<ElementSet> below_;  // bitsets over subgroup ids
  std::vector<std::vector<SubgroupId>> maximals_;
  std::vector<SubgroupId> normalizers_;
  std::vector<std::size_t> class_of_;
  std::vector<std::vector<SubgroupId>> classes_;
  std::unordered_map<ElementSet, SubgroupId, ElementSetHash> lookup_;
  std::unique_ptr<detail::LatticeMemo> memo_;
};

// A subgroup of a materialized lattice treated as a group in its own right.
// Its subgroups are exactly the lattice subgroups it contains, so every
// structural computation can be carried out relative to any subgroup
// without building a new lattice. Implicitly constructible from a lattice
// (the whole group).
class GroupView {
 public:
  GroupView(SubgroupLattice const& lattice)  // NOLINT(google-explicit-constructor)
      : lattice_(&lattice), top_(lattice.whole()) {}
  GroupView(SubgroupLattice const& lattice, SubgroupId top) : lattice_(&lattice), top_(top) {}

  SubgroupLattice const& lattice() const noexcept { return *lattice_; }
  SubgroupId top() const noexcept { return top_; }
  std::uint64_t order() const { return lattice_->order(top_); }
  bool is_trivial() const { return order() == 1; }

  bool contains(SubgroupId h) const { return lattice_->contains(top_, h); }
  // h is a subgroup of the view and normal in it.
  bool is_normal(SubgroupId h) const { return contains(h) && lattice_->normalizes(top_, h); }
  std::vector<SubgroupId> subgroups() const { return lattice_->subgroups_of(top_); }
  std::vector<SubgroupId> const& maximal_subgroups() const { return lattice_->maximal_subgroups(top_); }
  std::vector<std::uint64_t> primes() const;

  GroupView sub(SubgroupId h) const { return GroupView(*lattice_, h); }

 private:
  SubgroupLattice const* lattice_;
  SubgroupId top_;
};

// Sequence top = M_0 > M_1 > ... > M_n, each step a maximality edge.
struct MaximalChain {
  std::vector<SubgroupId> steps;

  std::size_t length() const { return steps.empty() ? 0 : steps.size() - 1; }
  bool is_valid(SubgroupLattice const& lattice) const;
};

SubgroupLattice all_subgroups(Group const& g, Caps caps = {});

std::vector<SubgroupId> maximal_subgroups(SubgroupLattice const& lattice, SubgroupId h);

// Subgroups reachable from the view's top by a maximal chain of length n.
std::vector<SubgroupId> n_maximal_subgroups(GroupView g, std::size_t n);

// Some maximal chain of length n from the view's top down to h.
std::optional<MaximalChain> find_maximal_chain(GroupView g, SubgroupId h, std::size_t n);

// Largest subgroup of h normal in the view (intersection of conjugates).
SubgroupId core(GroupView g, SubgroupId h);
SubgroupId normalizer(SubgroupLattice const& lattice, SubgroupId h);
std::vector<std::vector<SubgroupId>> conjugacy_classes_of_subgroups(SubgroupLattice const& lattice);
// Throws NotContained unless h <= k.
bool is_normal_in(SubgroupLattice const& lattice, SubgroupId h, SubgroupId k);

}  // namespace kusub
