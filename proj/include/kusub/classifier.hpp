#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "kusub/io.hpp"
#include "kusub/lattice.hpp"

namespace kusub {

// theorem is one of 'A', 'B', 'C', 'D'; label is e.g. "B-II", "D-1",
// "SUPERSOLUBLE" or "NONE".
struct TypeLabel {
  char theorem = 'A';
  std::string label = "NONE";
};

// Outcome of one type theorem on one group: the first matching type plus
// every other type whose conditions also held.
struct TypeMatch {
  TypeLabel first;
  std::vector<std::string> all;
};

struct ClassificationReport {
  std::string group_name;
  std::uint64_t order = 0;
  std::size_t pi_size = 0;
  std::vector<std::uint64_t> primes;
  bool soluble = false;
  bool supersoluble = false;
  bool p2 = false;
  bool p3 = false;
  std::uint64_t u_residual_order = 1;
  // 'B', 'C' or 'D' when a type theorem applies to |pi(G)|, else 0.
  char type_theorem = 0;
  std::vector<std::string> labels;
  bool theorem_a_ok = false;
  bool type_theorem_ok = false;
  bool equivalence_ok = false;
  std::vector<std::string> witnesses;
};

// Supersoluble or SDH.
bool recognize_theorem_a(SubgroupLattice const& lattice);

// Each recognizer requires a nonsupersoluble soluble group with the matching
// |pi(G)| (2, 3, 4) and throws PreconditionViolated otherwise.
TypeMatch recognize_theorem_b(SubgroupLattice const& lattice);
TypeMatch recognize_theorem_c(SubgroupLattice const& lattice);
TypeMatch recognize_theorem_d(SubgroupLattice const& lattice);

ClassificationReport classify(SubgroupLattice const& lattice, std::string const& name);

// Key-colon-value lines in fixed order, LF terminated.
std::string emit_report(ClassificationReport const& report);

enum class TheoremFilter { A, B, C, D, All };

struct CorpusError {
  std::string name;
  std::string message;
};

struct TheoremTally {
  std::size_t in_scope = 0;
  // In-scope groups where the theorem's hypothesis is nonvacuous: all
  // groups for A, nonsupersoluble groups for B/C/D.
  std::size_t nonvacuous = 0;
  std::size_t held = 0;
};

struct CorpusSummary {
  std::vector<ClassificationReport> reports;  // sorted by name
  std::vector<CorpusError> errors;            // sorted by name
  TheoremTally a, b, c, d;
  bool all_held = true;
};

// Classifies every source on a worker pool. Per-group failures are
// collected in `errors` rather than thrown.
CorpusSummary verify_corpus(std::vector<GroupSource> const& corpus, TheoremFilter filter, Caps caps = {},
                            unsigned workers = 0);
std::string emit_summary(CorpusSummary const& summary, TheoremFilter filter);

}  // namespace kusub
