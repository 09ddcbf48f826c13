// One PASS/FAIL line per acceptance criterion; exits nonzero if any fails.
#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <thread>

#include "support.hpp"
#include "tpl/blocks.hpp"
#include "tpl/canonical.hpp"
#include "tpl/constructions.hpp"
#include "tpl/counting.hpp"
#include "tpl/enumeration.hpp"
#include "tpl/graph6.hpp"
#include "tpl/oracle.hpp"
#include "tpl/planarity.hpp"
#include "tpl/verifier.hpp"

using namespace tpl;

namespace {

int passed = 0, failed = 0;

// Collects the first few failure details of one criterion.
class Criterion {
 public:
  Criterion(std::string id, std::string text) : id_(std::move(id)), text_(std::move(text)) {}
  void fail(const std::string& detail) {
    if (++failures_ <= 5) details_ << (failures_ > 1 ? "; " : "") << detail;
  }
  void note(const std::string& n) { notes_ << (notes_.tellp() > 0 ? "; " : "") << n; }
  ~Criterion() { done(); }
  void done() {
    if (reported_) return;
    reported_ = true;
    const bool ok = failures_ == 0;
    (ok ? passed : failed)++;
    std::cout << (ok ? "PASS " : "FAIL ") << id_ << "  " << text_;
    if (!ok) std::cout << "  [" << failures_ << " failure(s): " << details_.str() << "]";
    if (notes_.tellp() > 0) std::cout << "  (" << notes_.str() << ")";
    std::cout << std::endl;
  }

 private:
  std::string id_, text_;
  int failures_ = 0;
  bool reported_ = false;
  std::ostringstream details_, notes_;
};

// Detail strings are built only on failure.
#define EXPECT(criterion, cond, detail) \
  do {                                  \
    if (!(cond)) (criterion).fail(detail); \
  } while (0)

std::string at(int n) { return "n=" + std::to_string(n); }

std::string rat(const Rational& r) {
  return r.denominator() == 1 ? std::to_string(r.numerator())
                              : std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Rational q(Count c) { return Rational(static_cast<std::int64_t>(c)); }

int threads() { return static_cast<int>(std::max(1u, std::thread::hardware_concurrency())); }

int exhaustive_hi() { return std::getenv("TPL_MAX_N") ? std::max(9, exhaustive_cap()) : 9; }

VerifyOptions options() {
  VerifyOptions o;
  o.threads = threads();
  o.cap = exhaustive_hi();
  o.persist_counterexamples = false;
  return o;
}

bool bound_status(Status s) {
  return s == Status::ExactMatch || s == Status::BoundHolds || s == Status::BoundHoldsWithGap;
}

void exact_values() {
  const int hi = exhaustive_hi();
  {
    Criterion c("1.1", "max #C4 over triangle-free planar graphs = C(n-2,2), unique extremal K_{2,n-2}, n=4.." + std::to_string(hi));
    for (const auto& r : verify_theorem(TheoremId::C4C3, 4, hi, options())) {
      EXPECT(c, r.status == Status::ExactMatch && r.mode == CheckMode::Assert,
              at(r.n) + ": max " + std::to_string(r.computed_max) + " vs " + rat(r.formula));
      EXPECT(c, r.audit && r.audit->equal && r.witnesses.size() == 1, at(r.n) + ": argmax is not {K_{2,n-2}}");
      EXPECT(c, r.oracle_recount_ok, at(r.n) + ": oracle recount disagrees");
    }
  }
  {
    Criterion c("1.2", "max #C4 over C5-free planar graphs = C(n-2,2), n=4.." + std::to_string(hi));
    for (const auto& r : verify_theorem(TheoremId::C4C5, 4, hi, options())) {
      EXPECT(c, r.status == Status::ExactMatch && r.mode == CheckMode::Assert,
              at(r.n) + ": max " + std::to_string(r.computed_max) + " vs " + rat(r.formula));
      EXPECT(c, r.oracle_recount_ok, at(r.n) + ": oracle recount disagrees");
    }
  }
  {
    Criterion c("1.3", "max #C5 over triangle-free planar graphs = floor((n-3)/2)ceil((n-3)/2), argmax = J_n, n=5.." +
                           std::to_string(hi));
    for (const auto& r : verify_theorem(TheoremId::C5C3, 5, hi, options())) {
      EXPECT(c, r.status == Status::ExactMatch && r.mode == CheckMode::Assert,
              at(r.n) + ": max " + std::to_string(r.computed_max) + " vs " + rat(r.formula));
      EXPECT(c, r.audit && r.audit->equal,
              at(r.n) + ": argmax set differs from enumerate_jn (" + std::to_string(r.audit ? r.audit->argmax_count : 0) +
                  " vs " + std::to_string(r.audit ? r.audit->family_count : 0) + ")");
      EXPECT(c, r.oracle_recount_ok, at(r.n) + ": oracle recount disagrees");
    }
  }
}

void upper_bounds() {
  const int hi = exhaustive_hi();
  {
    Criterion c("2.1", "max #C3 over C4-free planar graphs <= 5(n-2)/7, n=4.." + std::to_string(hi));
    for (const auto& r : verify_theorem(TheoremId::C3C4, 4, hi, options()))
      EXPECT(c, bound_status(r.status) && r.mode == CheckMode::Assert && r.oracle_recount_ok,
              at(r.n) + ": max " + std::to_string(r.computed_max) + " vs " + rat(r.formula));
  }
  std::map<int, VerificationReport> k4;
  {
    Criterion c("2.2", "max #C3 over K4-free planar graphs <= 7n/3-6, n=4.." + std::to_string(hi));
    for (auto& r : verify_theorem(TheoremId::C3K4, 4, hi, options())) {
      EXPECT(c, bound_status(r.status) && r.mode == CheckMode::Assert && r.oracle_recount_ok,
              at(r.n) + ": max " + std::to_string(r.computed_max) + " vs " + rat(r.formula));
      k4.emplace(r.n, std::move(r));
    }
  }
  {
    Criterion c("2.3", "equality 7n/3-6 at n in {6,9}, attained by build_k4_stack");
    for (int n : {6, 9}) {
      const auto& r = k4.at(n);
      const Graph stack = build_k4_stack(n / 3);
      EXPECT(c, r.status == Status::ExactMatch, at(n) + ": max " + std::to_string(r.computed_max) + " vs " + rat(r.formula));
      EXPECT(c, q(count_cycles(stack, 3)) == r.formula && count_k4(stack) == 0 && is_planar(stack),
              at(n) + ": stack does not reach the bound");
      EXPECT(c, std::any_of(r.witnesses.begin(), r.witnesses.end(), [&](const Graph& w) { return is_isomorphic(w, stack); }),
              at(n) + ": stack is not among the maximizers");
    }
  }
}

void golden() {
  {
    Criterion c("3.1", "count_cycles(build_hn(n),6) = h(n), 6<=n<=40");
    for (int n = 6; n <= 40; ++n) EXPECT(c, q(count_cycles(build_hn(n), 6)) == h_value(n), at(n));
  }
  {
    Criterion c("3.2", "minimum per-vertex C6 count in H_n = h1(n), 6<=n<=24");
    for (int n = 6; n <= 24; ++n) {
      const Graph g = build_hn(n);
      Count lo = ~Count{0};
      for (Vertex v = 0; v < n; ++v) lo = std::min(lo, count_cycles_through(g, v, 6));
      EXPECT(c, q(lo) == h1_value(n), at(n) + ": " + std::to_string(lo) + " vs " + rat(h1_value(n)));
    }
  }
  {
    Criterion c("3.3", "h(n)-h(n-1) = h1(n), 7<=n<=200");
    for (int n = 7; n <= 200; ++n) EXPECT(c, h_value(n) - h_value(n - 1) == h1_value(n), at(n));
  }
  {
    Criterion c("3.4", "build_k4_stack(t) has 7t-6 triangles and no K4, t<=8");
    for (int t = 1; t <= 8; ++t) {
      const Graph g = build_k4_stack(t);
      EXPECT(c, count_cycles(g, 3) == static_cast<Count>(7 * t - 6) && count_k4(g) == 0 && is_planar(g),
              "t=" + std::to_string(t));
    }
  }
}

void ratio_exhaustive(const std::string& id, RatioRegime regime, Constraint forbid, const std::string& text) {
  Criterion c(id, text);
  std::size_t graphs = 0;
  for (int n = 1; n <= 9; ++n)
    enumerate({n, {Constraint::Planar, forbid}}, [&](const Graph& g) {
      ++graphs;
      const RatioCheck r = check_ratio_bound(g, regime);
      EXPECT(c, r.holds, at(n) + " " + encode_graph6(g) + ": ratio " + rat(r.ratio));
    }, {threads()});
  c.note(std::to_string(graphs) + " graphs");
}

void ratio_random(const std::string& id, RatioRegime regime, Constraint forbid, const std::string& text) {
  Criterion c(id, text);
  std::mt19937_64 rng(regime == RatioRegime::C5free ? 5 : 6);
  std::uniform_int_distribution<int> order(4, 60);
  Rational worst(0);
  for (int i = 0; i < 10000; ++i) {
    const int n = order(rng);
    const Graph g = random_planar_ffree(n, {Constraint::Planar, forbid}, rng());
    const RatioCheck r = check_ratio_bound(g, regime);
    worst = std::max(worst, r.ratio);
    EXPECT(c, r.holds && is_planar(g), at(n) + " " + encode_graph6(g) + ": ratio " + rat(r.ratio));
  }
  c.note("10000 instances, largest ratio " + rat(worst));
}

void instance_invariants() {
  ratio_exhaustive("4.1", RatioRegime::C5free, Constraint::C5free, "#C3 <= 2e/3 on every C5-free planar graph, n<=9");
  ratio_random("4.2", RatioRegime::C5free, Constraint::C5free, "#C3 <= 2e/3 on 10^4 random C5-free planar graphs, n<=60");
  ratio_exhaustive("4.3", RatioRegime::C6free, Constraint::C6free, "#C3 <= 7e/9 on every C6-free planar graph, n<=9");
  ratio_random("4.4", RatioRegime::C6free, Constraint::C6free, "#C3 <= 7e/9 on 10^4 random C6-free planar graphs, n<=60");

  Criterion pair("4.5", "#P5(u,v) <= ((n-1)/2)^2-2 for all pairs of every triangle-free planar graph, 5<=n<=8");
  Criterion triple("4.6", "sum of #P5 over the three pairs <= 3((n+1)/3)^2-6 for all triples, triangle-free planar, 5<=n<=8");
  for (int n = 5; n <= 8; ++n) {
    const Rational pb = formula_value(TheoremId::P5pair, n), tb = formula_value(TheoremId::P5triple, n);
    Count worst_pair = 0, worst_triple = 0;
    enumerate({n, {Constraint::Planar, Constraint::C3free}}, [&](const Graph& g) {
      const auto p = pair_path_matrix(g);
      for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
          worst_pair = std::max(worst_pair, p[a][b]);
          EXPECT(pair, q(p[a][b]) <= pb, at(n) + " " + encode_graph6(g) + " pair " + std::to_string(p[a][b]));
          for (int d = b + 1; d < n; ++d) {
            const Count t = p[a][b] + p[b][d] + p[a][d];
            worst_triple = std::max(worst_triple, t);
            EXPECT(triple, q(t) <= tb, at(n) + " " + encode_graph6(g) + " triple (" + std::to_string(a) + "," +
                                         std::to_string(b) + "," + std::to_string(d) + ") " + std::to_string(t) + " > " +
                                         rat(tb));
          }
        }
    });
    pair.note(at(n) + " max " + std::to_string(worst_pair) + " vs " + rat(pb));
    triple.note(at(n) + " max " + std::to_string(worst_triple) + " vs " + rat(tb));
  }
  pair.done();
  triple.done();

  Criterion tight("4.7", "H_n attains 3((n+1)/3)^2-6 on (u1,u2,u3) for n = 2 mod 3, 8<=n<=62");
  for (int n = 8; n <= 62; n += 3)
    EXPECT(tight, q(triple_path_total(build_hn(n), 0, 1, 2)) == formula_value(TheoremId::P5triple, n), at(n));
}

void taxonomy() {
  const BlockLabel small[] = {BlockLabel::K2, BlockLabel::K3, BlockLabel::Theta4, BlockLabel::K4};
  Criterion c5("5.1", "every triangular block of a C5-free planar graph (n<=9) is K2, K3, Theta4 or K4");
  Criterion c6("5.2", "every triangular block of a C6-free planar graph (n<=9) is one of the eight named blocks");
  Criterion laws("5.3", "blocks partition E(G) and per-block triangles plus leftovers = #C3, both closure modes");
  std::map<std::string, std::size_t> seen5, seen6;
  auto run = [&](Constraint forbid, Criterion& c, std::map<std::string, std::size_t>& seen, bool only_small) {
    for (int n = 1; n <= 9; ++n)
      enumerate({n, {Constraint::Planar, forbid}}, [&](const Graph& g) {
        for (ClosureMode mode : {ClosureMode::Face, ClosureMode::Triangle}) {
          const BlockCensus census = block_census(g, mode);
          std::size_t edges = 0;
          Count blocks_c3 = 0;
          for (std::size_t i = 0; i < census.blocks.size(); ++i) {
            edges += census.blocks[i].edges.size();
            blocks_c3 += census.per_block_c3[i];
          }
          EXPECT(laws, edges == static_cast<std::size_t>(g.size()), encode_graph6(g) + ": edges not partitioned");
          EXPECT(laws, blocks_c3 + census.leftover_triangles == count_cycles(g, 3), encode_graph6(g) + ": census identity");
          if (mode != ClosureMode::Face) continue;
          for (const TriangularBlock& b : census.blocks) {
            ++seen[std::string(block_label_name(b.label))];
            const bool ok = only_small ? std::find(std::begin(small), std::end(small), b.label) != std::end(small)
                                       : b.label != BlockLabel::Other;
            EXPECT(c, ok, at(n) + " " + encode_graph6(g) + ": block " + std::string(block_label_name(b.label)));
          }
        }
      }, {threads()});
  };
  run(Constraint::C5free, c5, seen5, true);
  run(Constraint::C6free, c6, seen6, false);
  for (const auto& [label, count] : seen5) c5.note(label + " " + std::to_string(count));
  for (const auto& [label, count] : seen6) c6.note(label + " " + std::to_string(count));
  c5.done();
  c6.done();
}

void oracle_equivalence() {
  {
    Criterion c("6.1", "fast cycle counts (k=3..n) agree with the permutation oracle on every graph, n<=7");
    Criterion p("6.2", "fast counts of paths of length four agree with the tuple oracle for every pair, n<=7");
    std::size_t graphs = 0;
    for (int n = 1; n <= 7; ++n)
      enumerate({n, {}}, [&](const Graph& g) {
        ++graphs;
        for (int k = 3; k <= n; ++k)
          EXPECT(c, count_cycles(g, k) == oracle::count_cycles(g, k), encode_graph6(g) + " k=" + std::to_string(k));
        for (Vertex u = 0; u < n; ++u)
          for (Vertex v = u + 1; v < n; ++v)
            EXPECT(p, count_paths4(g, u, v) == oracle::count_paths4(g, u, v), encode_graph6(g));
      });
    c.note(std::to_string(graphs) + " graphs");
    c.done();
  }
  {
    Criterion c("6.3", "canonical_form agrees with brute-force permutation minimisation on all labeled graphs, n<=6");
    for (int n = 1; n <= 6; ++n) {
      std::map<CanonicalForm, std::vector<bool>> forward;
      std::map<std::vector<bool>, CanonicalForm> backward;
      testing::for_each_labeled_graph(n, [&](const Graph& g) {
        const CanonicalForm f = canonical_form(g);
        const std::vector<bool> key = oracle::permutation_key(g);
        const auto [fi, fnew] = forward.emplace(f, key);
        const auto [bi, bnew] = backward.emplace(key, f);
        EXPECT(c, (fnew || fi->second == key) && (bnew || bi->second == f), at(n) + " " + encode_graph6(g));
      });
      c.note(at(n) + " " + std::to_string(forward.size()) + " classes");
    }
  }
}

void observe_mode() {
  {
    Criterion c("7.1", "C6 over triangle-free planar graphs, n<=9: reported in observe mode, max >= h(n) where H_n fits");
    for (const auto& r : verify_theorem(TheoremId::C6C3, 1, 9, options())) {
      EXPECT(c, r.mode == CheckMode::Observe && r.status != Status::Violation, at(r.n) + ": asserted or violated");
      if (r.n >= 6) {
        EXPECT(c, q(r.computed_max) >= r.formula, at(r.n) + ": max below h(n)");
        if (q(r.computed_max) > r.formula) {
          EXPECT(c, !r.note.empty(), at(r.n) + ": exceedance without a note");
          c.note(at(r.n) + " max " + std::to_string(r.computed_max) + " > h(n) " + rat(r.formula) + ", small-n phenomenon");
        }
      }
    }
  }
  {
    Criterion c("7.2", "explore_conjecture for k=2..4 emits comparisons without assertions, n<=9 and report-only n=12");
    std::size_t rows = 0, matches = 0, below = 0;
    for (int k = 2; k <= 4; ++k) {
      try {
        auto part = explore_conjecture(k, 4, 9, options());
        const auto far = explore_conjecture(k, 12, 12, options());
        part.insert(part.end(), far.begin(), far.end());
        for (const auto& r : part) {
          ++rows;
          matches += r.relation == "match";
          below += r.relation == "construction below exhaustive maximum";
          EXPECT(c, !r.relation.empty(), "k=" + std::to_string(k) + " " + at(r.n) + ": empty row");
          if (r.n > 9) EXPECT(c, !r.exhaustive_max, at(r.n) + ": exhaustive value beyond cap");
        }
      } catch (const std::exception& e) {
        c.fail("k=" + std::to_string(k) + ": " + e.what());
      }
    }
    c.note(std::to_string(rows) + " rows, " + std::to_string(matches) + " match, " + std::to_string(below) +
           " below the exhaustive maximum");
  }
}

}  // namespace

int main() {
  exact_values();
  upper_bounds();
  golden();
  instance_invariants();
  taxonomy();
  oracle_equivalence();
  observe_mode();
  std::cout << passed << " passed, " << failed << " failed" << std::endl;
  return failed == 0 ? 0 : 1;
}
