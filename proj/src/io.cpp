#include "kusub/io.hpp"

#include <cctype>
#include <fstream>
#include <numeric>
#include <sstream>

#include "kusub/error.hpp"

namespace kusub {

namespace {

std::string detail_of(Error const& e) {
  std::string what = e.what();
  auto pos = what.find(": ");
  return pos == std::string::npos ? what : what.substr(pos + 2);
}

[[noreturn]] void syntax_error(std::size_t line, std::string const& message) {
  throw Error(ErrorCode::SyntaxError, "line " + std::to_string(line) + ": " + message);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string_view strip_comment(std::string_view s) {
  auto hash = s.find('#');
  return hash == std::string_view::npos ? s : s.substr(0, hash);
}

bool parse_number(std::string_view s, std::size_t& out) {
  if (s.empty() || s.size() > 9) return false;
  out = 0;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    out = out * 10 + static_cast<std::size_t>(c - '0');
  }
  return true;
}

// "(1 2 3)(4 5)" or "()". Returns false on malformed text.
bool parse_cycles(std::string_view s, std::vector<std::vector<Point>>& out) {
  s = trim(s);
  if (s.empty()) return false;
  while (!s.empty()) {
    if (s.front() != '(') return false;
    auto close = s.find(')');
    if (close == std::string_view::npos) return false;
    std::istringstream points{std::string(s.substr(1, close - 1))};
    std::vector<Point> cycle;
    std::string token;
    while (points >> token) {
      std::size_t x = 0;
      if (!parse_number(token, x)) return false;
      cycle.push_back(static_cast<Point>(x));
    }
    if (cycle.size() > 1) out.push_back(std::move(cycle));
    s = trim(s.substr(close + 1));
  }
  return true;
}

Permutation cycles_permutation(std::size_t degree, std::string_view text, std::size_t line) {
  std::vector<std::vector<Point>> cycles;
  if (!parse_cycles(text, cycles)) syntax_error(line, "bad cycle notation '" + std::string(text) + "'");
  try {
    return Permutation::from_cycles(degree, cycles);
  } catch (Error const& e) {
    throw Error(e.code(), "line " + std::to_string(line) + ": " + detail_of(e));
  }
}

// Recursive-descent evaluator for builder expressions.
class BuilderParser {
 public:
  BuilderParser(std::string_view text, Caps caps) : text_(text), caps_(caps) {}

  GroupSource parse_all() {
    auto g = expression();
    skip_space();
    if (pos_ != text_.size()) fail("trailing input");
    return g;
  }

 private:
  [[noreturn]] void fail(std::string const& message) const {
    throw Error(ErrorCode::SyntaxError, "column " + std::to_string(pos_ + 1) + ": " + message);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string identifier() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a builder name");
    return std::string(text_.substr(start, pos_ - start));
  }

  std::size_t number() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::size_t n = 0;
    if (!parse_number(text_.substr(start, pos_ - start), n)) fail("expected a number");
    return n;
  }

  GroupSource make(std::size_t degree, std::vector<Permutation> gens) const {
    GroupSource out;
    out.kind = SourceKind::Builder;
    out.degree = degree;
    if (gens.empty()) gens.push_back(Permutation::identity(degree));
    out.generators = std::move(gens);
    if (group_from_generators(out.generators).order() > caps_.enumeration) {
      throw Error(ErrorCode::GroupTooLarge, "builder result exceeds the enumeration cap");
    }
    return out;
  }

  static Permutation cycle_of(std::size_t degree, std::vector<Point> cycle) {
    return Permutation::from_cycles(degree, {std::move(cycle)});
  }

  GroupSource expression() {
    auto name = identifier();
    expect('(');
    GroupSource result;
    if (name == "directProduct") {
      auto a = expression();
      expect(',');
      auto b = expression();
      result = direct_product(a, b);
    } else if (name == "fromGenerators") {
      std::size_t degree = number();
      if (degree == 0) fail("degree must be positive");
      std::vector<Permutation> gens;
      while (accept(';')) {
        skip_space();
        std::size_t start = pos_;
        int depth = 0;
        while (pos_ < text_.size() && (depth > 0 || (text_[pos_] != ';' && text_[pos_] != ')'))) {
          if (text_[pos_] == '(') ++depth;
          if (text_[pos_] == ')') --depth;
          ++pos_;
        }
        std::vector<std::vector<Point>> cycles;
        if (!parse_cycles(text_.substr(start, pos_ - start), cycles)) fail("bad cycle notation");
        gens.push_back(Permutation::from_cycles(degree, cycles));
      }
      result = make(degree, std::move(gens));
    } else {
      result = named(name, number());
    }
    expect(')');
    return result;
  }

  GroupSource named(std::string const& name, std::size_t n) {
    if (n == 0) fail("argument must be positive");
    std::vector<Point> all(n);
    std::iota(all.begin(), all.end(), Point{1});
    if (name == "cyclic") {
      return make(n, n > 1 ? std::vector{cycle_of(n, all)} : std::vector<Permutation>{});
    }
    if (name == "dihedral") {
      if (n < 3) fail("dihedral(n) needs n >= 3");
      // Reflection fixing point 1: i -> 2 - i (mod n).
      std::vector<Point> images(n);
      for (std::size_t i = 0; i < n; ++i) images[i] = static_cast<Point>((n - i) % n);
      return make(n, {cycle_of(n, all), Permutation::from_images(images)});
    }
    if (name == "symmetric") {
      if (n == 1) return make(1, {});
      if (n == 2) return make(2, {cycle_of(2, {1, 2})});
      return make(n, {cycle_of(n, all), cycle_of(n, {1, 2})});
    }
    if (name == "alternating") {
      std::vector<Permutation> gens;
      for (Point k = 3; k <= n; ++k) gens.push_back(cycle_of(n, {1, 2, k}));
      return make(n, std::move(gens));
    }
    if (name == "quaternion") {
      if (n != 8) fail("only quaternion(8) is supported");
      return quaternion();
    }
    fail("unknown builder '" + name + "'");
  }

  GroupSource quaternion() const {
    // Elements 1,i,j,k,-1,-i,-j,-k as 0..7; sign bit 4. Right regular action.
    auto mul = [](std::size_t a, std::size_t b) {
      static constexpr int unit[4][4] = {{0, 1, 2, 3}, {1, 4, 3, 6}, {2, 7, 4, 1}, {3, 2, 5, 4}};
      // unit[x][y] encodes the product of basis units x,y (4 = -1 flag added).
      int r = unit[a % 4][b % 4];
      std::size_t base = static_cast<std::size_t>(r % 4);
      bool negative = (r >= 4) ^ (a >= 4) ^ (b >= 4);
      return base + (negative ? 4 : 0);
    };
    std::vector<Permutation> gens;
    for (std::size_t g : {std::size_t{1}, std::size_t{2}}) {
      std::vector<Point> images(8);
      for (std::size_t x = 0; x < 8; ++x) images[x] = static_cast<Point>(mul(x, g));
      gens.push_back(Permutation::from_images(images));
    }
    return make(8, std::move(gens));
  }

  GroupSource direct_product(GroupSource const& a, GroupSource const& b) const {
    std::size_t degree = a.degree + b.degree;
    std::vector<Permutation> gens;
    for (auto const& x : a.generators) {
      std::vector<Point> images(degree);
      std::iota(images.begin(), images.end(), Point{0});
      for (std::size_t i = 0; i < a.degree; ++i) images[i] = x[i];
      gens.push_back(Permutation::from_images(images));
    }
    for (auto const& y : b.generators) {
      std::vector<Point> images(degree);
      std::iota(images.begin(), images.end(), Point{0});
      for (std::size_t i = 0; i < b.degree; ++i) images[a.degree + i] = static_cast<Point>(a.degree + y[i]);
      gens.push_back(Permutation::from_images(images));
    }
    return make(degree, std::move(gens));
  }

  std::string_view text_;
  Caps caps_;
  std::size_t pos_ = 0;
};

}  // namespace

GroupSource parse_group_file(std::string_view text) {
  GroupSource out;
  out.kind = SourceKind::Generators;
  out.text = std::string(text);
  bool have_degree = false;
  std::vector<std::pair<std::size_t, std::string>> gen_lines;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    auto content = trim(strip_comment(raw));
    if (content.empty()) continue;
    auto space = content.find_first_of(" \t");
    auto keyword = content.substr(0, space);
    auto rest = space == std::string_view::npos ? std::string_view{} : trim(content.substr(space));
    if (keyword == "name") {
      if (rest.empty() || rest.find_first_of(" \t") != std::string_view::npos) syntax_error(line, "name takes one token");
      out.name = std::string(rest);
    } else if (keyword == "degree") {
      if (have_degree) syntax_error(line, "degree given twice");
      if (!parse_number(rest, out.degree) || out.degree == 0) syntax_error(line, "degree must be a positive integer");
      have_degree = true;
    } else if (keyword == "gen") {
      gen_lines.emplace_back(line, std::string(rest));
    } else {
      syntax_error(line, "unknown keyword '" + std::string(keyword) + "'");
    }
  }
  if (!have_degree) syntax_error(line, "missing degree line");
  if (gen_lines.empty()) syntax_error(line, "no gen lines");
  for (auto const& [at, cycles] : gen_lines) out.generators.push_back(cycles_permutation(out.degree, cycles, at));
  return out;
}

std::string emit_group_file(GroupSource const& source) {
  std::string out;
  if (!source.name.empty()) out += "name " + source.name + "\n";
  out += "degree " + std::to_string(source.degree) + "\n";
  for (auto const& g : source.generators) out += "gen " + g.to_cycle_string() + "\n";
  return out;
}

GroupSource parse_cayley_table(std::string_view text, std::string name) {
  std::istringstream in{std::string(text)};
  std::vector<std::string> tokens;
  std::string raw;
  while (std::getline(in, raw)) {
    std::istringstream words{std::string(strip_comment(raw))};
    std::string w;
    while (words >> w) tokens.push_back(w);
  }
  std::size_t at = 0;
  if (tokens.size() >= 2 && tokens[0] == "name") {
    name = tokens[1];
    at = 2;
  }
  std::size_t n = 0;
  if (at >= tokens.size() || !parse_number(tokens[at], n) || n == 0) {
    throw Error(ErrorCode::Malformed, "table size must be a positive integer");
  }
  ++at;
  if (tokens.size() - at != n * n) throw Error(ErrorCode::Malformed, "expected " + std::to_string(n * n) + " entries");
  std::vector<std::size_t> table(n * n);
  for (std::size_t i = 0; i < n * n; ++i) {
    std::size_t v = 0;
    if (!parse_number(tokens[at + i], v) || v < 1 || v > n) {
      throw Error(ErrorCode::Malformed, "entry '" + tokens[at + i] + "' outside 1.." + std::to_string(n));
    }
    table[i] = v - 1;
  }
  auto mul = [&](std::size_t a, std::size_t b) { return table[a * n + b]; };
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) {
          throw Error(ErrorCode::NotAssociative, "(" + std::to_string(a + 1) + " " + std::to_string(b + 1) + ") " +
                                                     std::to_string(c + 1) + " differs from the other bracketing");
        }
      }
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (mul(0, a) != a || mul(a, 0) != a) throw Error(ErrorCode::NoIdentity, "element 1 is not the identity");
  }
  for (std::size_t a = 0; a < n; ++a) {
    bool found = false;
    for (std::size_t b = 0; b < n && !found; ++b) found = mul(a, b) == 0 && mul(b, a) == 0;
    if (!found) throw Error(ErrorCode::NoInverse, "element " + std::to_string(a + 1) + " has no inverse");
  }

  GroupSource out;
  out.name = std::move(name);
  out.kind = SourceKind::Cayley;
  out.degree = n;
  out.text = std::string(text);
  auto regular = [&](std::size_t g) {
    std::vector<Point> images(n);
    for (std::size_t x = 0; x < n; ++x) images[x] = static_cast<Point>(mul(x, g));
    return Permutation::from_images(images);
  };
  // Greedy generating set: add each element not yet in the span.
  std::vector<bool> span(n, false);
  span[0] = true;
  for (std::size_t g = 1; g < n; ++g) {
    if (span[g]) continue;
    out.generators.push_back(regular(g));
    std::vector<std::size_t> members;
    for (std::size_t x = 0; x < n; ++x) {
      if (span[x]) members.push_back(x);
    }
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (auto const& gen_perm : out.generators) {
        std::size_t y = gen_perm[static_cast<Point>(members[i])];
        if (!span[y]) {
          span[y] = true;
          members.push_back(y);
        }
      }
    }
  }
  if (out.generators.empty()) out.generators.push_back(Permutation::identity(n));
  return out;
}

GroupSource parse_builder(std::string_view expr, std::string name, Caps caps) {
  auto out = BuilderParser(expr, caps).parse_all();
  out.name = std::move(name);
  out.text = std::string(expr);
  return out;
}

Group build(std::string_view expr, Caps caps) { return to_group(parse_builder(expr, "expr", caps)); }

GroupSource load_group_file(std::filesystem::path const& path, Caps caps) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot read " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  std::string text = buffer.str();
  std::string stem = path.stem().string();
  GroupSource out;
  if (path.extension() == ".cayley") {
    out = parse_cayley_table(text, stem);
  } else if (path.extension() == ".expr") {
    // Optional `name <token>` line and comments, then the expression.
    std::string name = stem;
    std::string expr;
    std::istringstream lines(text);
    std::string raw;
    while (std::getline(lines, raw)) {
      auto content = trim(strip_comment(raw));
      if (content.substr(0, 5) == "name " && expr.empty()) {
        name = std::string(trim(content.substr(5)));
      } else {
        expr += std::string(content) + " ";
      }
    }
    out = parse_builder(expr, name, caps);
    out.text = text;
  } else {
    out = parse_group_file(text);
    if (out.name.empty()) out.name = stem;
  }
  return out;
}

Group to_group(GroupSource const& source) { return group_from_generators(source.generators); }

}  // namespace kusub
