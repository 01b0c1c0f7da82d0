#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "kusub/group.hpp"
#include "kusub/permutation.hpp"

namespace kusub {

enum class SourceKind { Generators, Cayley, Builder };

// A named group as read from a file or expression. Every kind is reduced to
// a degree and generator list when parsed; `text` keeps the original payload.
struct GroupSource {
  std::string name;
  SourceKind kind = SourceKind::Generators;
  std::size_t degree = 0;
  std::vector<Permutation> generators;
  std::string text;
};

// Line grammar: `name <token>`, `degree <n>`, one or more `gen <cycles>`;
// `#` starts a comment. Throws SyntaxError (with line number),
// DegreeMismatch, NotABijection.
GroupSource parse_group_file(std::string_view text);
std::string emit_group_file(GroupSource const& source);

// First line n, then n rows of n one-based entries; row i column j holds
// the index of the product of elements i and j, element 1 the identity.
// Converted to the right regular representation. An optional leading
// `name <token>` line is accepted. Throws Malformed, NotAssociative,
// NoIdentity, NoInverse.
GroupSource parse_cayley_table(std::string_view text, std::string name = "cayley");

// cyclic(n), dihedral(n) (order 2n), symmetric(n), alternating(n),
// quaternion(8), directProduct(e1, e2), fromGenerators(d; (cycles); ...).
// Throws SyntaxError, and GroupTooLarge when the order exceeds
// caps.enumeration.
GroupSource parse_builder(std::string_view expr, std::string name = "expr", Caps caps = {});
Group build(std::string_view expr, Caps caps = {});

// Picks the parser from the extension: .cayley, .expr, anything else is a
// generator file. Default name is the file stem. Throws Io.
GroupSource load_group_file(std::filesystem::path const& path, Caps caps = {});

Group to_group(GroupSource const& source);

}  // namespace kusub
