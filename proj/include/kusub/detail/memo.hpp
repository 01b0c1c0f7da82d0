#pragma once

#include <atomic>
#include <cstdint>
#include <memory>
#include <mutex>
#include <vector>

#include "kusub/lattice.hpp"

namespace kusub::detail {

// Chain reachability towards one top subgroup: distance[h] is the length of
// the shortest qualifying chain from h up to the top (-1 if none) and
// next[h] the canonically least first step of such a chain.
struct Reachability {
  std::vector<int> distance;
  std::vector<SubgroupId> next;
};

// Lazily filled per-lattice caches. Entries are written with relaxed atomics;
// concurrent fills of the same entry compute the same value.
struct LatticeMemo {
  explicit LatticeMemo(std::size_t subgroup_count) : n(subgroup_count) {}

  static constexpr std::int8_t kUnknown = -1;
  static constexpr std::uint32_t kNoCore = ~std::uint32_t{0};

  std::atomic<std::int8_t>& section(SubgroupId top, SubgroupId bottom) {
    std::call_once(section_once, [this] {
      section_supersoluble = std::make_unique<std::atomic<std::int8_t>[]>(n * n);
      for (std::size_t i = 0; i < n * n; ++i) section_supersoluble[i].store(kUnknown);
    });
    return section_supersoluble[top * n + bottom];
  }

  std::atomic<std::uint32_t>& core(SubgroupId top, SubgroupId h) {
    std::call_once(core_once, [this] {
      cores = std::make_unique<std::atomic<std::uint32_t>[]>(n * n);
      for (std::size_t i = 0; i < n * n; ++i) cores[i].store(kNoCore);
    });
    return cores[top * n + h];
  }

  std::size_t n;

  std::once_flag section_once;
  std::unique_ptr<std::atomic<std::int8_t>[]> section_supersoluble;
  std::once_flag core_once;
  std::unique_ptr<std::atomic<std::uint32_t>[]> cores;

  std::mutex reach_mutex;
  std::vector<std::shared_ptr<Reachability const>> ku_reach;  // indexed by top
  std::vector<std::shared_ptr<Reachability const>> u_reach;
};

}  // namespace kusub::detail
