#include "kusub/classifier.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <thread>

#include "kusub/error.hpp"
#include "kusub/formations.hpp"
#include "kusub/number_theory.hpp"
#include "kusub/structure.hpp"
#include "kusub/subnormality.hpp"

namespace kusub {

namespace {

// Lattice queries phrased the way the type conditions are written.
class Analyzer {
 public:
  explicit Analyzer(SubgroupLattice const& lattice)
      : L(lattice), G(lattice), minimal_(minimal_normal_subgroups(G)), normal_(normal_subgroups(G)) {}

  SubgroupLattice const& L;
  GroupView G;

  std::uint64_t order(SubgroupId h) const { return L.order(h); }
  bool u(SubgroupId h) const { return is_supersoluble(L.view(h)); }
  bool sdh(SubgroupId h) const { return is_sdh(L.view(h)); }
  bool u_or_sdh(SubgroupId h) const { return u(h) || sdh(h); }
  bool cyclic(SubgroupId h) const { return is_cyclic(L.view(h)); }

  std::vector<SubgroupId> const& minimal_normal() const { return minimal_; }
  std::vector<SubgroupId> const& normal() const { return normal_; }
  bool is_minimal_normal(SubgroupId h) const { return std::binary_search(minimal_.begin(), minimal_.end(), h); }
  bool unique_minimal_normal(SubgroupId h) const { return minimal_.size() == 1 && minimal_.front() == h; }

  std::uint64_t part(std::uint64_t p) const { return prime_part(G.order(), p); }

  std::optional<SubgroupId> normal_sylow(std::uint64_t p) const {
    SubgroupId s = sylow_subgroup(G, p);
    if (!G.is_normal(s)) return std::nullopt;
    return s;
  }

  std::optional<SubgroupId> normal_of_order(std::uint64_t n) const {
    for (SubgroupId h : normal_) {
      if (order(h) == n) return h;
    }
    return std::nullopt;
  }

  // AB when the set product is a subgroup.
  std::optional<SubgroupId> product(SubgroupId a, SubgroupId b) const {
    SubgroupId j = L.join(a, b);
    if (order(a) * order(b) != order(j) * order(L.meet(a, b))) return std::nullopt;
    return j;
  }

  // A x| B: A normal in AB, A meet B = 1.
  std::optional<SubgroupId> semidirect(SubgroupId a, SubgroupId b) const {
    auto j = product(a, b);
    if (!j || L.meet(a, b) != L.trivial() || !L.normalizes(*j, a)) return std::nullopt;
    return j;
  }

  // Join of subgroups of pairwise coprime orders, provided it has the
  // product order.
  std::optional<SubgroupId> coprime_product(std::vector<SubgroupId> const& parts) const {
    SubgroupId j = L.trivial();
    std::uint64_t expected = 1;
    for (SubgroupId h : parts) {
      j = L.join(j, h);
      expected *= order(h);
    }
    if (order(j) != expected) return std::nullopt;
    return j;
  }

  std::vector<SubgroupId> subgroups_of_order(SubgroupId within, std::uint64_t n) const {
    std::vector<SubgroupId> out;
    for (SubgroupId h : L.subgroups_of(within)) {
      if (order(h) == n) out.push_back(h);
    }
    return out;
  }

  bool maximals_containing_all(SubgroupId x, std::function<bool(SubgroupId)> const& pred) const {
    for (SubgroupId m : G.maximal_subgroups()) {
      if (L.contains(m, x) && !pred(m)) return false;
    }
    return true;
  }

  bool every_maximal(std::function<bool(SubgroupId)> const& pred) const {
    auto const& ms = G.maximal_subgroups();
    return std::all_of(ms.begin(), ms.end(), pred);
  }

  bool some_maximal_nonsupersoluble() const {
    return !every_maximal([&](SubgroupId m) { return u(m); });
  }

  // Frattini subgroup, with Phi(1) = 1.
  SubgroupId phi(SubgroupId h) const { return order(h) == 1 ? h : frattini(L.view(h)); }

  bool two_maximals_abelian_exponent_divides(SubgroupId h, std::uint64_t m) const {
    for (SubgroupId k : n_maximal_subgroups(L.view(h), 2)) {
      GroupView kv = L.view(k);
      if (!is_abelian(kv) || m % exponent(kv) != 0) return false;
    }
    return true;
  }

  // The maximal subgroups of G form exactly the conjugacy classes of the
  // given representatives, one class each.
  bool maximal_classes_are(std::vector<SubgroupId> const& reps) const {
    auto const& ms = G.maximal_subgroups();
    std::set<std::size_t> rep_classes;
    for (SubgroupId r : reps) {
      if (!std::binary_search(ms.begin(), ms.end(), r)) return false;
      rep_classes.insert(L.conjugacy_class_of(r));
    }
    if (rep_classes.size() != reps.size()) return false;
    std::set<std::size_t> all;
    for (SubgroupId m : ms) all.insert(L.conjugacy_class_of(m));
    return all == rep_classes;
  }

  bool is_p_group(SubgroupId h, std::uint64_t p) const { return order(h) > 1 && is_power_of(order(h), p); }

 private:
  std::vector<SubgroupId> minimal_;
  std::vector<SubgroupId> normal_;
};

bool type_one(Analyzer const& a) {
  if (is_minimal_nonsupersoluble(a.G)) {
    SubgroupId residual = u_residual(a.G);
    if (is_prime(a.order(a.phi(residual)))) return true;
  }
  return is_sdh(a.G);
}

// ---- Theorem B, one labeling (p, q) of the two primes ----

bool b_two(Analyzer const& a, std::uint64_t p, std::uint64_t q) {
  auto gp = a.normal_sylow(p);
  if (!gp || !a.unique_minimal_normal(*gp)) return false;
  SubgroupId gq = sylow_subgroup(a.G, q);
  if (!a.two_maximals_abelian_exponent_divides(gq, p - 1)) return false;
  if (!a.maximals_containing_all(*gp, [&](SubgroupId m) { return a.u_or_sdh(m); })) return false;
  return a.some_maximal_nonsupersoluble();
}

bool b_three(Analyzer const& a, std::uint64_t p, std::uint64_t q) {
  auto gp = a.normal_sylow(p);
  if (!gp || !a.is_minimal_normal(*gp)) return false;
  std::uint64_t gq_order = a.part(q);
  for (SubgroupId q1 : a.minimal_normal()) {
    if (a.order(q1) != q) continue;
    auto base = a.product(*gp, q1);
    if (!base) continue;
    if (!a.maximals_containing_all(*base, [&](SubgroupId m) { return a.u(m); })) continue;
    for (SubgroupId q2 : a.subgroups_of_order(a.L.whole(), gq_order / q)) {
      if (a.L.meet(q1, q2) != a.L.trivial()) continue;
      auto sylow = a.product(q1, q2);
      if (!sylow || a.order(*sylow) != gq_order) continue;
      auto whole = a.semidirect(*base, q2);
      if (!whole || *whole != a.L.whole()) continue;
      auto gp_q2 = a.semidirect(*gp, q2);
      if (!gp_q2 || !a.sdh(*gp_q2)) continue;
      if (p < q) {
        bool nilpotent = true;
        for (SubgroupId k : n_maximal_subgroups(a.G, 2)) {
          if (!is_nilpotent(a.L.view(k))) {
            nilpotent = false;
            break;
          }
        }
        if (!nilpotent) continue;
      }
      return true;
    }
  }
  return false;
}

bool b_four(Analyzer const& a, std::uint64_t p, std::uint64_t q) {
  auto gp = a.normal_sylow(p);
  if (!gp || !a.is_minimal_normal(*gp)) return false;
  if (a.order(p_core(a.G, q)) == 1) return false;
  SubgroupId frat = a.phi(a.L.whole());
  if (a.order(frat) == 1) return false;
  if (!a.maximals_containing_all(*gp, [&](SubgroupId m) { return a.u_or_sdh(m); })) return false;
  auto action = coset_action(a.L.group(), a.L.subgroup(frat));
  auto quotient = SubgroupLattice::build(action.quotient);
  if (quotient.size() == 0 || quotient.order(quotient.whole()) == 1) return false;
  Analyzer qa(quotient);
  if (qa.G.primes() != a.G.primes()) return false;
  return b_two(qa, p, q) || b_three(qa, p, q);
}

bool b_five(Analyzer const& a, std::uint64_t p, std::uint64_t q) {
  auto gp = a.normal_sylow(p);
  if (!gp) return false;
  if (!a.maximals_containing_all(*gp, [&](SubgroupId m) { return a.u(m); })) return false;
  SubgroupId gq = sylow_subgroup(a.G, q);
  for (SubgroupId p1 : a.minimal_normal()) {
    for (SubgroupId p2 : a.minimal_normal()) {
      if (p1 == p2 || !a.L.contains(*gp, p1) || !a.L.contains(*gp, p2)) continue;
      if (a.L.meet(p1, p2) != a.L.trivial() || a.order(p1) * a.order(p2) != a.order(*gp)) continue;
      auto p1q = a.semidirect(p1, gq);
      auto p2q = a.semidirect(p2, gq);
      if (!p1q || !p2q || !a.sdh(*p1q)) continue;
      if (a.sdh(*p2q) || (a.u(*p2q) && a.order(p2) == p)) return true;
    }
  }
  return false;
}

bool b_six(Analyzer const& a, std::uint64_t p, std::uint64_t q) {
  auto gp = a.normal_sylow(p);
  if (!gp) return false;
  SubgroupId f = a.phi(*gp);
  if (!a.is_minimal_normal(f)) return false;
  if (!a.maximals_containing_all(*gp, [&](SubgroupId m) { return a.u(m); })) return false;
  auto fq = a.semidirect(f, sylow_subgroup(a.G, q));
  return fq && a.sdh(*fq);
}

bool b_seven_small_p(Analyzer const& a, std::uint64_t p, std::uint64_t q) {
  auto const& L = a.L;
  for (SubgroupId p1 : a.minimal_normal()) {
    if (!a.is_p_group(p1, p)) continue;
    for (SubgroupId gq : sylow_subgroups(a.G, q)) {
      if (!a.cyclic(gq)) continue;
      SubgroupId aq = a.phi(gq);  // <a^q> for a cyclic q-group
      if (!a.G.is_normal(aq)) continue;
      auto p1gq = a.semidirect(p1, gq);
      if (!p1gq || !a.sdh(*p1gq)) continue;
      for (SubgroupId p2 : a.subgroups_of_order(L.whole(), p)) {
        if (L.meet(p1, p2) != L.trivial()) continue;
        auto gp = a.semidirect(p1, p2);
        if (!gp || a.order(*gp) != a.part(p)) continue;
        auto x = a.semidirect(gq, p2);
        if (!x) continue;
        auto whole = a.semidirect(p1, *x);
        if (!whole || *whole != L.whole()) continue;
        auto third = a.semidirect(aq, *gp);
        if (!third) continue;
        if (a.maximal_classes_are({*p1gq, *x, *third})) return true;
      }
    }
  }
  return false;
}

bool b_seven_large_p(Analyzer const& a, std::uint64_t p, std::uint64_t q) {
  auto const& L = a.L;
  std::vector<SubgroupId> cyclic_p;
  for (SubgroupId h : L.subgroups_of(L.whole())) {
    if (a.is_p_group(h, p) && a.cyclic(h)) cyclic_p.push_back(h);
  }
  for (SubgroupId p1 : a.normal()) {
    if (!a.is_p_group(p1, p)) continue;
    for (SubgroupId p2 : cyclic_p) {
      SubgroupId meet = L.meet(p1, p2);
      if (meet == L.trivial() || meet != a.phi(p2)) continue;
      auto gp = a.product(p1, p2);
      if (!gp || a.order(*gp) != a.part(p)) continue;
      for (SubgroupId gq : sylow_subgroups(a.G, q)) {
        auto x = a.semidirect(gq, p2);
        if (!x || a.G.order() / a.order(*x) != p || !a.sdh(*x)) continue;
        auto whole = a.product(p1, *x);
        if (!whole || *whole != L.whole()) continue;
        auto p1gq = a.semidirect(p1, gq);
        if (!p1gq || !a.G.is_normal(*p1gq) || !a.u(*p1gq)) continue;
        if (a.maximal_classes_are({*p1gq, *x, *gp})) return true;
      }
    }
  }
  return false;
}

bool b_seven(Analyzer const& a, std::uint64_t p, std::uint64_t q) {
  if (a.normal_sylow(p) || a.normal_sylow(q)) return false;
  return p < q ? b_seven_small_p(a, p, q) : b_seven_large_p(a, p, q);
}

// ---- Theorem C, one labeling (p, q, r) ----

// G = G_p x| (G_q x| G_r): normal Sylow p, normal Hall {p,q}, a Hall
// {q,r}-subgroup H in which G_q = H meet G_pG_q is normal.
struct CTower {
  SubgroupId gp, gq, gr, h, gpgq;
};

std::optional<CTower> c_tower(Analyzer const& a, std::uint64_t p, std::uint64_t q, std::uint64_t r) {
  auto gp = a.normal_sylow(p);
  if (!gp) return std::nullopt;
  auto gpgq = a.normal_of_order(a.part(p) * a.part(q));
  auto h = hall_subgroup(a.G, {q, r});
  if (!gpgq || !h) return std::nullopt;
  SubgroupId gq = a.L.meet(*h, *gpgq);
  if (a.order(gq) != a.part(q) || !a.L.normalizes(*h, gq)) return std::nullopt;
  SubgroupId gr = sylow_subgroup(a.L.view(*h), r);
  return CTower{*gp, gq, gr, *h, *gpgq};
}

bool c_two(Analyzer const& a, std::uint64_t p, std::uint64_t q, std::uint64_t r) {
  auto t = c_tower(a, p, q, r);
  if (!t || !a.is_minimal_normal(t->gp)) return false;
  if (!a.every_maximal([&](SubgroupId m) { return a.u_or_sdh(m); })) return false;
  if (!a.some_maximal_nonsupersoluble()) return false;
  if (a.unique_minimal_normal(t->gp) && !a.two_maximals_abelian_exponent_divides(t->h, p - 1)) return false;
  if (a.sdh(t->h)) {
    if (!a.maximals_containing_all(t->gpgq, [&](SubgroupId m) { return a.u(m); })) return false;
    auto gpgr = a.semidirect(t->gp, t->gr);
    if (!gpgr) return false;
    if (!(a.sdh(*gpgr) || (a.u(*gpgr) && a.order(t->gp) == p))) return false;
  }
  return true;
}

bool c_three(Analyzer const& a, std::uint64_t p, std::uint64_t q, std::uint64_t r) {
  auto t = c_tower(a, p, q, r);
  if (!t || !a.cyclic(t->gq) || !a.cyclic(t->gr)) return false;
  if (!a.maximals_containing_all(t->gp, [&](SubgroupId m) { return a.u(m); })) return false;
  for (SubgroupId p1 : a.minimal_normal()) {
    for (SubgroupId p2 : a.minimal_normal()) {
      if (p1 == p2 || !a.L.contains(t->gp, p1) || !a.L.contains(t->gp, p2)) continue;
      if (a.L.meet(p1, p2) != a.L.trivial() || a.order(p1) * a.order(p2) != a.order(t->gp)) continue;
      auto p1h = a.semidirect(p1, t->h);
      auto p2h = a.semidirect(p2, t->h);
      if (!p1h || !p2h || !a.sdh(*p1h)) continue;
      if (a.sdh(*p2h) || (a.u(*p2h) && a.order(p2) == p)) return true;
    }
  }
  return false;
}

bool c_four(Analyzer const& a, std::uint64_t p, std::uint64_t q, std::uint64_t r) {
  auto t = c_tower(a, p, q, r);
  if (!t) return false;
  SubgroupId f = a.phi(t->gp);
  if (!a.is_minimal_normal(f)) return false;
  if (!a.maximals_containing_all(t->gp, [&](SubgroupId m) { return a.u(m); })) return false;
  auto fh = a.semidirect(f, t->h);
  return fh && a.sdh(*fh);
}

void require(bool ok, char const* what) {
  if (!ok) throw Error(ErrorCode::PreconditionViolated, what);
}

void require_type_hypothesis(SubgroupLattice const& lattice, std::size_t pi_size) {
  GroupView g(lattice);
  require(g.primes().size() == pi_size, "|pi(G)| does not match the theorem");
  require(!is_supersoluble(g), "group is supersoluble");
  require(is_soluble(g), "group is not soluble");
}

using Recognizer = std::function<bool(Analyzer const&, std::vector<std::uint64_t> const&)>;

TypeMatch run_types(Analyzer const& a, char theorem, std::vector<std::pair<std::string, Recognizer>> const& types) {
  auto primes = a.G.primes();
  TypeMatch out;
  out.first.theorem = theorem;
  for (auto const& [label, recognize] : types) {
    // Try every assignment of the letters p, q, ... to pi(G).
    auto labeling = primes;
    std::sort(labeling.begin(), labeling.end());
    bool matched = false;
    do {
      matched = recognize(a, labeling);
    } while (!matched && std::next_permutation(labeling.begin(), labeling.end()));
    if (matched) out.all.push_back(label);
  }
  if (!out.all.empty()) out.first.label = out.all.front();
  return out;
}

std::string subgroup_token(SubgroupLattice const& lattice, SubgroupId h) {
  auto const& elts = lattice.group().elements();
  std::string out = std::to_string(lattice.order(h)) + ":<";
  bool first = true;
  for (ElementId x : lattice.generators(h)) {
    if (!first) out += ",";
    first = false;
    auto cycles = elts[x].to_cycle_string();
    std::replace(cycles.begin(), cycles.end(), ' ', ',');
    out += cycles;
  }
  return out + ">";
}

void add_failures(ClassificationReport& report, SubgroupLattice const& lattice, std::string const& key,
                  std::vector<SubgroupId> const& failing) {
  if (failing.empty()) return;
  report.witnesses.push_back(key + "-failures=" + std::to_string(failing.size()));
  report.witnesses.push_back(key + "-first-failure=" + subgroup_token(lattice, failing.front()));
}

std::string join_words(std::vector<std::string> const& words) {
  std::string out;
  for (auto const& w : words) {
    if (!out.empty()) out += " ";
    out += w;
  }
  return out.empty() ? "-" : out;
}

}  // namespace

bool recognize_theorem_a(SubgroupLattice const& lattice) {
  GroupView g(lattice);
  return is_supersoluble(g) || is_sdh(g);
}

TypeMatch recognize_theorem_b(SubgroupLattice const& lattice) {
  require_type_hypothesis(lattice, 2);
  Analyzer a(lattice);
  auto pair = [](bool (*f)(Analyzer const&, std::uint64_t, std::uint64_t)) -> Recognizer {
    return [f](Analyzer const& an, std::vector<std::uint64_t> const& l) { return f(an, l[0], l[1]); };
  };
  return run_types(a, 'B',
                   {{"B-I", [](Analyzer const& an, auto const&) { return type_one(an); }},
                    {"B-II", pair(b_two)},
                    {"B-III", pair(b_three)},
                    {"B-IV", pair(b_four)},
                    {"B-V", pair(b_five)},
                    {"B-VI", pair(b_six)},
                    {"B-VII", pair(b_seven)}});
}

TypeMatch recognize_theorem_c(SubgroupLattice const& lattice) {
  require_type_hypothesis(lattice, 3);
  Analyzer a(lattice);
  auto triple = [](bool (*f)(Analyzer const&, std::uint64_t, std::uint64_t, std::uint64_t)) -> Recognizer {
    return [f](Analyzer const& an, std::vector<std::uint64_t> const& l) { return f(an, l[0], l[1], l[2]); };
  };
  return run_types(a, 'C',
                   {{"C-I", [](Analyzer const& an, auto const&) { return type_one(an); }},
                    {"C-II", triple(c_two)},
                    {"C-III", triple(c_three)},
                    {"C-IV", triple(c_four)}});
}

TypeMatch recognize_theorem_d(SubgroupLattice const& lattice) {
  require_type_hypothesis(lattice, 4);
  Analyzer a(lattice);
  auto const& L = a.L;
  TypeMatch out;
  out.first.theorem = 'D';
  auto primes = a.G.primes();
  std::uint64_t p = primes[3], q = primes[2], r = primes[1], t = primes[0];

  auto matched = [&]() -> std::optional<std::string> {
    auto gp = a.normal_sylow(p);
    auto n2 = a.normal_of_order(a.part(p) * a.part(q));
    auto n3 = a.normal_of_order(a.part(p) * a.part(q) * a.part(r));
    auto w = hall_subgroup(a.G, {q, r, t});
    if (!gp || !n2 || !n3 || !w) return std::nullopt;
    SubgroupId gq = L.meet(*w, *n2);
    if (a.order(gq) != a.part(q) || !L.normalizes(*w, gq)) return std::nullopt;
    auto v = hall_subgroup(L.view(*w), {r, t});
    if (!v) return std::nullopt;
    SubgroupId gr = L.meet(*v, *n3);
    if (a.order(gr) != a.part(r) || !L.normalizes(*v, gr)) return std::nullopt;
    SubgroupId gt = sylow_subgroup(L.view(*v), t);
    if (!a.cyclic(gr) || !a.cyclic(gt)) return std::nullopt;

    auto m2 = a.coprime_product({*gp, gq, gr, a.phi(gt)});
    auto m3 = a.coprime_product({*gp, gq, a.phi(gr), gt});
    auto m4 = a.coprime_product({*gp, a.phi(gq), gr, gt});
    if (!m2 || !m3 || !m4) return std::nullopt;
    if (!a.maximal_classes_are({*w, *m2, *m3, *m4})) return std::nullopt;
    if (!a.every_maximal([&](SubgroupId m) { return a.u(m) || a.sdh(m); })) return std::nullopt;

    if (a.sdh(*w)) {
      auto gpgq = a.coprime_product({*gp, gq});
      if (!gpgq || u_residual(a.G) != *gpgq || !a.is_minimal_normal(gq)) return std::nullopt;
      if (!a.u(*m2) || !a.u(*m3)) return std::nullopt;
      auto gpgrgt = a.coprime_product({*gp, gr, gt});
      if (!gpgrgt) return std::nullopt;
      if (!(a.sdh(*gpgrgt) || (a.u(*gpgrgt) && a.order(*gp) == p))) return std::nullopt;
      return "D-1";
    }
    if (a.u(*w)) {
      if (!a.cyclic(gq)) return std::nullopt;
      return "D-2";
    }
    return std::nullopt;
  }();
  if (matched) {
    out.first.label = *matched;
    out.all.push_back(*matched);
  }
  return out;
}

ClassificationReport classify(SubgroupLattice const& lattice, std::string const& name) {
  GroupView g(lattice);
  ClassificationReport report;
  report.group_name = name;
  report.order = g.order();
  report.primes = g.primes();
  report.pi_size = report.primes.size();
  report.soluble = is_soluble(g);
  report.supersoluble = is_supersoluble(g);
  report.u_residual_order = lattice.order(u_residual(g));

  auto p2 = all_n_maximal_ku_subnormal(g, 2);
  auto p3 = all_n_maximal_ku_subnormal(g, 3);
  report.p2 = p2.holds;
  report.p3 = p3.holds;
  add_failures(report, lattice, "p2", p2.failing);
  add_failures(report, lattice, "p3", p3.failing);

  bool theorem_a = recognize_theorem_a(lattice);
  report.theorem_a_ok = report.p2 == theorem_a;

  if (report.supersoluble) {
    report.labels.push_back("SUPERSOLUBLE");
    // Every subgroup of a supersoluble group is K-U-subnormal.
    report.type_theorem_ok = report.p3;
  } else {
    if (theorem_a) report.labels.push_back("A");
    static constexpr char kTheoremFor[] = {0, 0, 'B', 'C', 'D'};
    report.type_theorem = report.pi_size <= 4 ? kTheoremFor[report.pi_size] : 0;
    std::string label = "NONE";
    if (!report.soluble) {
      report.witnesses.push_back("insoluble");
    } else if (report.type_theorem == 0) {
      report.witnesses.push_back("pi-size-over-4");
    } else {
      TypeMatch match = report.type_theorem == 'B'   ? recognize_theorem_b(lattice)
                        : report.type_theorem == 'C' ? recognize_theorem_c(lattice)
                                                     : recognize_theorem_d(lattice);
      label = match.first.label;
      for (std::size_t i = 1; i < match.all.size(); ++i) report.witnesses.push_back("also-matched=" + match.all[i]);
    }
    report.labels.push_back(label);
    report.type_theorem_ok = report.p3 == (label != "NONE");
  }
  report.equivalence_ok = report.theorem_a_ok && report.type_theorem_ok;
  return report;
}

std::string emit_report(ClassificationReport const& r) {
  auto flag = [](bool b) { return b ? "true" : "false"; };
  std::vector<std::string> primes;
  for (auto p : r.primes) primes.push_back(std::to_string(p));
  std::string out;
  out += "group: " + r.group_name + "\n";
  out += "order: " + std::to_string(r.order) + "\n";
  out += "pi: " + join_words(primes) + "\n";
  out += std::string("soluble: ") + flag(r.soluble) + "\n";
  out += std::string("supersoluble: ") + flag(r.supersoluble) + "\n";
  out += std::string("p2: ") + flag(r.p2) + "\n";
  out += std::string("p3: ") + flag(r.p3) + "\n";
  out += "uresidual_order: " + std::to_string(r.u_residual_order) + "\n";
  out += "labels: " + join_words(r.labels) + "\n";
  out += std::string("equivalence: ") + (r.equivalence_ok ? "ok" : "FAIL") + "\n";
  out += "witnesses: " + join_words(r.witnesses) + "\n";
  return out;
}

CorpusSummary verify_corpus(std::vector<GroupSource> const& corpus, TheoremFilter filter, Caps caps,
                            unsigned workers) {
  CorpusSummary summary;
  std::map<std::string, std::size_t> seen;
  std::vector<GroupSource const*> jobs;
  for (auto const& source : corpus) {
    if (seen[source.name]++ > 0) {
      summary.errors.push_back({source.name, "duplicate group name"});
    } else {
      jobs.push_back(&source);
    }
  }

  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(jobs.size(), 1)));
  std::atomic<std::size_t> next{0};
  std::mutex out_mutex;
  auto work = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      auto const& source = *jobs[i];
      try {
        auto lattice = SubgroupLattice::build(to_group(source), caps);
        auto report = classify(lattice, source.name);
        std::lock_guard lock(out_mutex);
        summary.reports.push_back(std::move(report));
      } catch (Error const& e) {
        std::lock_guard lock(out_mutex);
        summary.errors.push_back({source.name, e.what()});
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  for (auto& th : pool) th.join();

  std::sort(summary.reports.begin(), summary.reports.end(),
            [](auto const& x, auto const& y) { return x.group_name < y.group_name; });
  std::sort(summary.errors.begin(), summary.errors.end(),
            [](auto const& x, auto const& y) { return x.name < y.name; });

  for (auto const& r : summary.reports) {
    summary.a.in_scope++;
    summary.a.nonvacuous++;
    if (r.theorem_a_ok) summary.a.held++;
    TheoremTally* tally = r.pi_size == 2 ? &summary.b : r.pi_size == 3 ? &summary.c : r.pi_size == 4 ? &summary.d : nullptr;
    if (tally) {
      tally->in_scope++;
      if (!r.supersoluble) tally->nonvacuous++;
      if (r.type_theorem_ok) tally->held++;
    }
  }
  auto held = [](TheoremTally const& t) { return t.held == t.in_scope; };
  switch (filter) {
    case TheoremFilter::A: summary.all_held = held(summary.a); break;
    case TheoremFilter::B: summary.all_held = held(summary.b); break;
    case TheoremFilter::C: summary.all_held = held(summary.c); break;
    case TheoremFilter::D: summary.all_held = held(summary.d); break;
    case TheoremFilter::All:
      summary.all_held = std::all_of(summary.reports.begin(), summary.reports.end(),
                                     [](auto const& r) { return r.equivalence_ok; });
      break;
  }
  return summary;
}

std::string emit_summary(CorpusSummary const& summary, TheoremFilter filter) {
  auto in_filter = [&](ClassificationReport const& r) {
    switch (filter) {
      case TheoremFilter::B: return r.pi_size == 2;
      case TheoremFilter::C: return r.pi_size == 3;
      case TheoremFilter::D: return r.pi_size == 4;
      default: return true;
    }
  };
  std::string out;
  for (auto const& r : summary.reports) {
    if (in_filter(r)) out += emit_report(r) + "\n";
  }
  for (auto const& e : summary.errors) out += "error: " + e.name + ": " + e.message + "\n";
  auto tally_line = [](char theorem, TheoremTally const& t) {
    std::string line = std::string("theorem ") + theorem + ": in-scope " + std::to_string(t.in_scope) +
                       " nonvacuous " + std::to_string(t.nonvacuous) + " held " + std::to_string(t.held);
    if (t.nonvacuous == 0) line += " (vacuous)";
    return line + "\n";
  };
  out += "groups: " + std::to_string(summary.reports.size()) + " errors: " + std::to_string(summary.errors.size()) + "\n";
  if (filter == TheoremFilter::A || filter == TheoremFilter::All) out += tally_line('A', summary.a);
  if (filter == TheoremFilter::B || filter == TheoremFilter::All) out += tally_line('B', summary.b);
  if (filter == TheoremFilter::C || filter == TheoremFilter::All) out += tally_line('C', summary.c);
  if (filter == TheoremFilter::D || filter == TheoremFilter::All) out += tally_line('D', summary.d);
  out += std::string("result: ") + (summary.all_held ? "ok" : "FAIL") + "\n";
  return out;
}

}  // namespace kusub
