#include "kusub/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <optional>
#include <ostream>
#include <sstream>

#include "kusub/cache.hpp"
#include "kusub/classifier.hpp"
#include "kusub/error.hpp"
#include "kusub/formations.hpp"
#include "kusub/structure.hpp"
#include "kusub/subnormality.hpp"

namespace kusub {

namespace {

std::string words(std::vector<std::uint64_t> const& xs) {
  std::string out;
  for (auto x : xs) out += (out.empty() ? "" : " ") + std::to_string(x);
  return out.empty() ? "-" : out;
}

std::string generator_list(SubgroupLattice const& lattice, SubgroupId h) {
  auto const& elts = lattice.group().elements();
  std::string out;
  for (ElementId x : lattice.generators(h)) out += (out.empty() ? "" : " ") + elts[x].to_cycle_string();
  return out.empty() ? "()" : out;
}

struct Options {
  std::size_t cap = 0;
  std::string cache_dir;
};

Caps caps_of(Options const& o) {
  Caps caps;
  if (o.cap > 0) caps.enumeration = caps.lattice = o.cap;
  return caps;
}

SubgroupLattice lattice_for(Group const& g, Options const& o, std::optional<bool>* hit = nullptr) {
  if (o.cache_dir.empty()) return SubgroupLattice::build(g, caps_of(o));
  bool h = false;
  auto lattice = cached_lattice(g, o.cache_dir, caps_of(o), &h);
  if (hit) *hit = h;
  return lattice;
}

void analyze(GroupSource const& source, Options const& o, std::ostream& out) {
  auto g = to_group(source);
  auto lattice = lattice_for(g, o);
  GroupView v(lattice);
  auto flag = [](bool b) { return b ? "true" : "false"; };
  auto profile = u_profile(v);
  out << "group: " << source.name << "\n";
  out << "degree: " << g.degree() << "\n";
  out << "order: " << v.order() << "\n";
  out << "pi: " << words(v.primes()) << "\n";
  out << "exponent: " << exponent(v) << "\n";
  out << "abelian: " << flag(is_abelian(v)) << "\n";
  out << "cyclic: " << flag(is_cyclic(v)) << "\n";
  out << "nilpotent: " << flag(is_nilpotent(v)) << "\n";
  out << "soluble: " << flag(is_soluble(v)) << "\n";
  out << "supersoluble: " << flag(profile.supersoluble) << "\n";
  out << "subgroups: " << lattice.size() << "\n";
  out << "subgroup_classes: " << lattice.conjugacy_classes().size() << "\n";
  out << "normal_subgroups: " << normal_subgroups(v).size() << "\n";
  out << "maximal_subgroups: " << v.maximal_subgroups().size() << "\n";
  out << "chief_factors: " << words(chief_series(v).factor_orders) << "\n";
  out << "frattini_order: " << (v.is_trivial() ? 1 : lattice.order(frattini(v))) << "\n";
  out << "fitting_order: " << lattice.order(fitting(v)) << "\n";
  out << "uresidual_order: " << lattice.order(profile.u_residual) << "\n";
  out << "minimal_nonsupersoluble: " << flag(profile.minimal_nonsupersoluble) << "\n";
  out << "sdh: " << flag(profile.sdh) << "\n";
  out << "schmidt: " << flag(profile.schmidt) << "\n";
  out << "miller_moreno: " << flag(is_miller_moreno(v)) << "\n";
  out << "ore_dispersive: " << flag(v.is_trivial() || is_ore_dispersive(v)) << "\n";
}

void print_lattice(GroupSource const& source, Options const& o, std::ostream& out) {
  auto g = to_group(source);
  std::optional<bool> hit;
  auto lattice = lattice_for(g, o, &hit);
  out << "group: " << source.name << "\n";
  out << "order: " << g.order() << "\n";
  out << "subgroups: " << lattice.size() << "\n";
  if (hit) out << "cache: " << (*hit ? "hit" : "miss") << "\n";
  for (SubgroupId h = 0; h < lattice.size(); ++h) {
    out << h << " order " << lattice.order(h) << " class " << lattice.conjugacy_class_of(h)
        << (lattice.normalizes(lattice.whole(), h) ? " normal" : "") << " gens " << generator_list(lattice, h)
        << "\n";
  }
}

std::optional<TheoremFilter> parse_filter(std::string const& s) {
  if (s == "A") return TheoremFilter::A;
  if (s == "B") return TheoremFilter::B;
  if (s == "C") return TheoremFilter::C;
  if (s == "D") return TheoremFilter::D;
  if (s == "ALL") return TheoremFilter::All;
  return std::nullopt;
}

}  // namespace

LoadedCorpus load_corpus(std::filesystem::path const& dir, Caps caps) {
  LoadedCorpus out;
  std::vector<std::filesystem::path> files;
  std::error_code ec;
  for (auto const& entry : std::filesystem::directory_iterator(dir, ec)) {
    auto ext = entry.path().extension();
    if (entry.is_regular_file() && (ext == ".grp" || ext == ".cayley" || ext == ".expr")) files.push_back(entry.path());
  }
  if (ec) throw Error(ErrorCode::Io, "cannot list " + dir.string() + ": " + ec.message());
  std::sort(files.begin(), files.end());
  for (auto const& f : files) {
    try {
      out.sources.push_back(load_group_file(f, caps));
    } catch (Error const& e) {
      out.errors.emplace_back(f.filename().string(), e.what());
    }
  }
  return out;
}

int run(int argc, char const* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite group lattice analysis and K-U-subnormality classification"};
  app.require_subcommand(1);
  Options options;
  app.add_option("--cap", options.cap, "Maximum group order for enumeration and lattices")->check(CLI::PositiveNumber);
  app.add_option("--cache", options.cache_dir, "Directory for lattice cache files");

  std::string file;
  auto* analyze_cmd = app.add_subcommand("analyze", "Structural summary of one group");
  analyze_cmd->add_option("file", file, "Group file")->required();
  auto* classify_cmd = app.add_subcommand("classify", "Classification report for one group");
  classify_cmd->add_option("file", file, "Group file")->required();
  auto* lattice_cmd = app.add_subcommand("lattice", "List every subgroup of one group");
  lattice_cmd->add_option("file", file, "Group file")->required();
  lattice_cmd->add_option("--cache", options.cache_dir, "Directory for lattice cache files");

  std::string theorem = "ALL";
  std::string corpus;
  unsigned workers = 0;
  auto* verify_cmd = app.add_subcommand("verify", "Check the theorem equivalences on a corpus");
  verify_cmd->add_option("--theorem", theorem, "A, B, C, D or ALL");
  verify_cmd->add_option("--corpus", corpus, "Corpus directory")->required();
  verify_cmd->add_option("--workers", workers, "Worker threads (default: hardware concurrency)");

  std::string expr;
  auto* build_cmd = app.add_subcommand("build", "Evaluate a builder expression to a generator file");
  build_cmd->add_option("--expr", expr, "Builder expression")->required();

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const&) {
    out << app.help();
    return 0;
  } catch (CLI::ParseError const& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return 2;
  }

  try {
    Caps caps = caps_of(options);
    if (*analyze_cmd) {
      analyze(load_group_file(file, caps), options, out);
      return 0;
    }
    if (*lattice_cmd) {
      print_lattice(load_group_file(file, caps), options, out);
      return 0;
    }
    if (*classify_cmd) {
      auto source = load_group_file(file, caps);
      auto lattice = lattice_for(to_group(source), options);
      auto report = classify(lattice, source.name);
      out << emit_report(report);
      return report.equivalence_ok ? 0 : 1;
    }
    if (*build_cmd) {
      auto source = parse_builder(expr, "expr", caps);
      out << emit_group_file(source);
      out << "# order " << to_group(source).order() << "\n";
      return 0;
    }
    if (*verify_cmd) {
      auto filter = parse_filter(theorem);
      if (!filter) {
        err << "usage error: --theorem must be one of A, B, C, D, ALL\n";
        return 2;
      }
      auto loaded = load_corpus(corpus, caps);
      auto summary = verify_corpus(loaded.sources, *filter, caps, workers);
      for (auto const& [name, message] : loaded.errors) summary.errors.push_back({name, message});
      std::sort(summary.errors.begin(), summary.errors.end(),
                [](auto const& a, auto const& b) { return a.name < b.name; });
      out << emit_summary(summary, *filter);
      if (!summary.all_held) return 1;
      return summary.errors.empty() ? 0 : 2;
    }
  } catch (Error const& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace kusub
