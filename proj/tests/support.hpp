#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "kusub/cli.hpp"
#include "kusub/io.hpp"
#include "kusub/lattice.hpp"

namespace testing_support {

inline kusub::SubgroupLattice lattice_of(std::string_view expr) {
  return kusub::SubgroupLattice::build(kusub::build(expr));
}

inline kusub::Permutation perm(std::size_t degree, std::string const& cycles) {
  auto src = kusub::parse_group_file("degree " + std::to_string(degree) + "\ngen " + cycles + "\n");
  return src.generators.front();
}

// Subgroup generated by the given cycle strings.
inline kusub::SubgroupId sub(kusub::SubgroupLattice const& lattice, std::vector<std::string> const& gens) {
  std::vector<kusub::ElementId> ids;
  for (auto const& g : gens) ids.push_back(*lattice.group().index_of(perm(lattice.group().degree(), g)));
  return lattice.closure(ids);
}

inline std::vector<kusub::GroupSource> const& corpus() {
  static auto const loaded = kusub::load_corpus(KUSUB_CORPUS_DIR);
  return loaded.sources;
}

}  // namespace testing_support

namespace testing_support {

inline kusub::SubgroupLattice corpus_lattice(std::string const& name) {
  for (auto const& source : corpus()) {
    if (source.name == name) return kusub::SubgroupLattice::build(kusub::to_group(source));
  }
  throw std::runtime_error("no corpus group named " + name);
}

}  // namespace testing_support
