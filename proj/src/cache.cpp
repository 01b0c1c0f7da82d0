#include "kusub/cache.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "kusub/error.hpp"

namespace kusub {

namespace {

constexpr char const* kHeader = "cache-version 1";

}  // namespace

std::string lattice_cache_key(Group const& g) {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&](std::uint64_t v) {
    for (int i = 0; i < 4; ++i) {
      h ^= (v >> (8 * i)) & 0xff;
      h *= 1099511628211ull;
    }
  };
  mix(g.degree());
  for (auto const& gen : g.generators()) {
    for (Point x : gen.images()) mix(x);
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::filesystem::path lattice_cache_path(std::filesystem::path const& dir, Group const& g) {
  return dir / (lattice_cache_key(g) + ".lattice");
}

std::optional<std::vector<ElementSet>> read_lattice_cache(std::filesystem::path const& file, Group const& g) {
  std::ifstream in(file);
  if (!in) return std::nullopt;
  std::string line;
  if (!std::getline(in, line) || line != kHeader) return std::nullopt;
  std::string word, key;
  std::uint64_t order = 0;
  std::size_t count = 0;
  if (!(in >> word >> key) || word != "group" || key != lattice_cache_key(g)) return std::nullopt;
  if (!(in >> word >> order) || word != "order" || order != g.order()) return std::nullopt;
  if (!(in >> word >> count) || word != "subgroups") return std::nullopt;
  std::getline(in, line);
  std::vector<ElementSet> out;
  for (std::size_t i = 0; i < count; ++i) {
    if (!std::getline(in, line)) return std::nullopt;
    std::istringstream ids(line);
    ElementSet s(order);
    std::uint64_t id = 0;
    while (ids >> id) {
      if (id >= order) return std::nullopt;
      s.insert(static_cast<ElementId>(id));
    }
    out.push_back(std::move(s));
  }
  return out;
}

void write_lattice_cache(std::filesystem::path const& file, SubgroupLattice const& lattice) {
  std::ostringstream out;
  out << kHeader << "\n";
  out << "group " << lattice_cache_key(lattice.group()) << "\n";
  out << "order " << lattice.group().order() << "\n";
  out << "subgroups " << lattice.size() << "\n";
  for (auto const& s : lattice.subgroups()) {
    bool first = true;
    s.for_each([&](ElementId x) {
      if (!first) out << ' ';
      first = false;
      out << x;
    });
    out << "\n";
  }
  // Write then rename so concurrent readers never see a partial file.
  auto tmp = file;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary);
    if (!f || !(f << out.str())) throw Error(ErrorCode::Io, "cannot write " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, file, ec);
  if (ec) throw Error(ErrorCode::Io, "cannot write " + file.string() + ": " + ec.message());
}

SubgroupLattice cached_lattice(Group const& g, std::filesystem::path const& dir, Caps caps, bool* hit) {
  auto file = lattice_cache_path(dir, g);
  if (auto subgroups = read_lattice_cache(file, g)) {
    try {
      auto lattice = SubgroupLattice::from_subgroups(g, std::move(*subgroups), caps);
      if (hit) *hit = true;
      return lattice;
    } catch (Error const& e) {
      if (e.code() != ErrorCode::Malformed) throw;
    }
  }
  if (hit) *hit = false;
  auto lattice = SubgroupLattice::build(g, caps);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  write_lattice_cache(file, lattice);
  return lattice;
}

}  // namespace kusub
