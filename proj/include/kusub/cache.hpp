#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "kusub/group.hpp"
#include "kusub/lattice.hpp"

namespace kusub {

// FNV-1a over the degree and the ordered generator image sequences, as 16
// lowercase hex digits.
std::string lattice_cache_key(Group const& g);

std::filesystem::path lattice_cache_path(std::filesystem::path const& dir, Group const& g);

// Reads a cache file; nullopt when it is missing, stale or malformed.
std::optional<std::vector<ElementSet>> read_lattice_cache(std::filesystem::path const& file, Group const& g);
// Throws Io when the file cannot be written.
void write_lattice_cache(std::filesystem::path const& file, SubgroupLattice const& lattice);

// Loads the lattice from `dir` when a valid entry exists, otherwise builds
// it and writes the entry. `hit` reports which happened.
SubgroupLattice cached_lattice(Group const& g, std::filesystem::path const& dir, Caps caps = {},
                               bool* hit = nullptr);

}  // namespace kusub
