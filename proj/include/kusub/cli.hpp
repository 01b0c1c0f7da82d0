#pragma once

#include <filesystem>
#include <iosfwd>
#include <vector>

#include "kusub/io.hpp"

namespace kusub {

// Group files in a corpus directory: *.grp, *.cayley and *.expr, sorted by
// file name. Unreadable or malformed files land in `errors`.
struct LoadedCorpus {
  std::vector<GroupSource> sources;
  std::vector<std::pair<std::string, std::string>> errors;
};
LoadedCorpus load_corpus(std::filesystem::path const& dir, Caps caps = {});

// Exit status: 0 success, 1 an equivalence failed, 2 bad input or usage.
int run(int argc, char const* const* argv, std::ostream& out, std::ostream& err);

}  // namespace kusub
