#include "tpl/verifier.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "tpl/blocks.hpp"
#include "tpl/canonical.hpp"
#include "tpl/graph6.hpp"
#include "tpl/oracle.hpp"
#include "tpl/planarity.hpp"

namespace tpl {

namespace {

Rational as_rational(Count c) { return Rational(static_cast<std::int64_t>(c)); }

std::string rational_text(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Rational floor_of(const Rational& r) {
  std::int64_t q = r.numerator() / r.denominator();
  if (r.numerator() % r.denominator() != 0 && r.numerator() < 0) --q;
  return Rational(q);
}

int cycle_length(Counted c) {
  switch (c) {
    case Counted::C3: return 3;
    case Counted::C4: return 4;
    case Counted::C5: return 5;
    case Counted::C6: return 6;
    default: return 0;
  }
}

Count max_pair(const std::vector<std::vector<Count>>& p) {
  Count best = 0;
  for (const auto& row : p)
    for (Count c : row) best = std::max(best, c);
  return best;
}

Count max_triple(const std::vector<std::vector<Count>>& p) {
  const int n = static_cast<int>(p.size());
  Count best = 0;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) best = std::max(best, p[a][b] + p[b][c] + p[a][c]);
  return best;
}

std::vector<std::vector<Count>> oracle_pair_matrix(const Graph& g) {
  const int n = g.order();
  std::vector<std::vector<Count>> p(static_cast<std::size_t>(n), std::vector<Count>(static_cast<std::size_t>(n), 0));
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) p[u][v] = p[v][u] = oracle::count_paths4(g, u, v);
  return p;
}

std::string persist(const VerificationReport& r, const VerifyOptions& options) {
  namespace fs = std::filesystem;
  fs::create_directories(options.counterexample_dir);
  const fs::path path = fs::path(options.counterexample_dir) /
                        ("counterexample_" + report_theorem_id(r.theorem) + "_n" + std::to_string(r.n) + ".g6");
  std::ofstream out(path);
  for (const Graph& w : r.witnesses) out << encode_graph6(w) << '\n';
  if (!out) throw VerifyError("could not write " + path.string());
  return path.string();
}

std::vector<Graph> family_of(TheoremId id, int n, std::string& name) {
  switch (id) {
    case TheoremId::C4C3:
      name = "K_{2,n-2}";
      return n >= 4 ? std::vector<Graph>{build_k2_bipartite(n)} : std::vector<Graph>{};
    case TheoremId::C5C3:
      name = "J_n";
      return n >= 5 ? enumerate_jn(n) : std::vector<Graph>{};
    case TheoremId::C6C3:
      name = "H_n";
      return n >= 6 ? std::vector<Graph>{build_hn(n)} : std::vector<Graph>{};
    default: throw VerifyError("no extremal family for " + std::string(theorem_name(id)));
  }
}

WitnessAudit audit_against(TheoremId id, int n, const std::vector<Graph>& argmax) {
  WitnessAudit a;
  const std::vector<Graph> family = family_of(id, n, a.family);
  a.asserted = id != TheoremId::C6C3;
  std::map<CanonicalForm, Graph> lhs, rhs;
  for (const Graph& g : argmax) lhs.emplace(canonical_form(g), g);
  for (const Graph& g : family) rhs.emplace(canonical_form(g), canonical_graph(g));
  a.argmax_count = lhs.size();
  a.family_count = rhs.size();
  for (const auto& [f, g] : lhs)
    if (!rhs.count(f)) a.only_in_argmax.push_back(g);
  for (const auto& [f, g] : rhs)
    if (!lhs.count(f)) a.only_in_family.push_back(g);
  a.equal = a.only_in_argmax.empty() && a.only_in_family.empty();
  return a;
}

Count paths4_through(const Graph& g, Vertex u, Vertex v, VertexMask m) {
  Count total = 0;
  const VertexMask ends = bit(u) | bit(v);
  for_each_bit(g.neighbors(u) & ~ends, [&](Vertex a) {
    for_each_bit(g.neighbors(a) & ~ends & ~bit(a), [&](Vertex b) {
      for_each_bit(g.neighbors(b) & g.neighbors(v) & ~ends & ~bit(a) & ~bit(b), [&](Vertex c) {
        if ((bit(a) | bit(b) | bit(c)) & m) ++total;
      });
    });
  });
  return total;
}

}  // namespace

std::string_view status_name(Status s) {
  switch (s) {
    case Status::ExactMatch: return "ExactMatch";
    case Status::BoundHolds: return "BoundHolds";
    case Status::BoundHoldsWithGap: return "BoundHoldsWithGap";
    case Status::Violation: return "Violation";
    case Status::OutOfValidityRange: return "OutOfValidityRange";
  }
  return "?";
}

std::string_view mode_name(CheckMode m) { return m == CheckMode::Assert ? "assert" : "observe"; }

std::string_view outcome_name(CheckOutcome o) {
  switch (o) {
    case CheckOutcome::Pass: return "pass";
    case CheckOutcome::Fail: return "fail";
    case CheckOutcome::Skipped: return "skipped";
  }
  return "?";
}

std::string report_theorem_id(TheoremId id) { return "T_" + std::string(theorem_name(id)); }

int exhaustive_cap() {
  if (const char* env = std::getenv("TPL_MAX_N")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) return static_cast<int>(std::min<long>(v, kMaxEnumOrder));
  }
  return 10;
}

Extremum exhaustive_extremum(const EnumSpec& spec, const Scorer& score, int threads) {
  const std::size_t units = work_units(spec, 0).size();
  std::vector<Extremum> partial(units);
  for_each_unit_parallel(spec, threads, 0, [&](const WorkUnit& u, const Graph& g) {
    Extremum& e = partial[u.index];
    ++e.examined;
    const Count s = score(g);
    if (e.witnesses.empty() || s > e.max) {
      e.witnesses.clear();
      e.max = s;
    }
    if (s == e.max) e.witnesses.push_back(g);
  });
  Extremum out;
  bool any = false;
  std::map<CanonicalForm, Graph> best;
  for (const Extremum& e : partial) {
    out.examined += e.examined;
    if (e.witnesses.empty()) continue;
    if (!any || e.max > out.max) {
      best.clear();
      out.max = e.max;
      any = true;
    }
    if (e.max == out.max)
      for (const Graph& g : e.witnesses) best.emplace(canonical_form(g), canonical_graph(g));
  }
  for (auto& [f, g] : best) out.witnesses.push_back(g);
  return out;
}

ConstraintSet theorem_class(TheoremId id) {
  const ConstraintSet planar{Constraint::Planar};
  switch (bound_spec(id).forbidden.value_or(Pattern::C3)) {
    case Pattern::C3: return planar.with(Constraint::C3free);
    case Pattern::C4: return planar.with(Constraint::C4free);
    case Pattern::C5: return planar.with(Constraint::C5free);
    case Pattern::C6: return planar.with(Constraint::C6free);
    case Pattern::K4: return planar.with(Constraint::K4free);
  }
  return planar;
}

std::vector<std::vector<Count>> pair_path_matrix(const Graph& g) {
  const int n = g.order();
  std::vector<std::vector<Count>> p(static_cast<std::size_t>(n), std::vector<Count>(static_cast<std::size_t>(n), 0));
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) p[u][v] = p[v][u] = count_paths4(g, u, v);
  return p;
}

Count theorem_score(TheoremId id, const Graph& g) {
  const Counted c = bound_spec(id).counted;
  if (c == Counted::P5Pair) return max_pair(pair_path_matrix(g));
  if (c == Counted::P5Triple) return max_triple(pair_path_matrix(g));
  return count_cycles(g, cycle_length(c));
}

Count oracle_score(TheoremId id, const Graph& g) {
  const Counted c = bound_spec(id).counted;
  if (c == Counted::P5Pair) return max_pair(oracle_pair_matrix(g));
  if (c == Counted::P5Triple) return max_triple(oracle_pair_matrix(g));
  return oracle::count_cycles(g, cycle_length(c));
}

VerificationReport verify_theorem_at(TheoremId id, int n, const VerifyOptions& options) {
  const BoundSpec& spec = bound_spec(id);
  const int cap = options.cap > 0 ? std::min(options.cap, kMaxEnumOrder) : exhaustive_cap();
  if (n < 1) throw VerifyError("n must be positive");
  if (n > cap) throw VerifyError("n = " + std::to_string(n) + " exceeds the exhaustive cap " + std::to_string(cap));

  VerificationReport r;
  r.theorem = id;
  r.n = n;
  const Extremum ex = exhaustive_extremum({n, theorem_class(id)}, [id](const Graph& g) { return theorem_score(id, g); },
                                          options.threads);
  r.computed_max = ex.max;
  r.witnesses = ex.witnesses;
  r.graphs_examined = ex.examined;
  r.formula = spec.formula(n);
  r.gap = r.formula - as_rational(r.computed_max);

  const Rational c = as_rational(r.computed_max);
  Status natural;
  if (spec.kind == BoundKind::Exact)
    natural = c == r.formula ? Status::ExactMatch : Status::Violation;
  else if (c > r.formula)
    natural = Status::Violation;
  else if (c == r.formula)
    natural = Status::ExactMatch;
  else
    natural = c == floor_of(r.formula) ? Status::BoundHolds : Status::BoundHoldsWithGap;

  for (const Graph& w : r.witnesses)
    if (oracle_score(id, w) != r.computed_max) r.oracle_recount_ok = false;

  r.status = natural;
  r.mode = CheckMode::Assert;
  if (n < spec.min_n) {
    r.mode = CheckMode::Observe;
    r.status = Status::OutOfValidityRange;
    r.note = "n below the validity threshold " + std::to_string(spec.min_n);
  } else if (spec.large_n_only || options.mode == CheckMode::Observe) {
    r.mode = CheckMode::Observe;
    if (natural == Status::Violation) {
      r.status = Status::OutOfValidityRange;
      r.note = c > r.formula ? "exhaustive maximum exceeds the formula: small-n phenomenon, not asserted"
                             : "exhaustive maximum below the formula, not asserted";
    } else {
      r.note = "observe mode";
    }
  } else if (natural == Status::Violation && id == TheoremId::P5triple) {
    r.mode = CheckMode::Observe;
    r.status = Status::OutOfValidityRange;
    r.note = "small-n counterexample to the triple bound; downgraded to observe mode";
  }
  if (!r.oracle_recount_ok) {
    r.status = Status::Violation;
    r.note = "oracle recount disagrees with the fast counter";
  }
  if (id == TheoremId::C4C3 || id == TheoremId::C5C3 || id == TheoremId::C6C3)
    if (n >= spec.min_n) r.audit = audit_against(id, n, r.witnesses);
  if (r.status == Status::Violation && options.persist_counterexamples) r.counterexample_path = persist(r, options);
  return r;
}

std::vector<VerificationReport> verify_theorem(TheoremId id, int n_lo, int n_hi, const VerifyOptions& options) {
  if (n_lo > n_hi) throw VerifyError("empty n range");
  std::vector<VerificationReport> out;
  for (int n = n_lo; n <= n_hi; ++n) out.push_back(verify_theorem_at(id, n, options));
  return out;
}

WitnessAudit verify_uniqueness(TheoremId id, int n, const VerifyOptions& options) {
  if (id != TheoremId::C4C3 && id != TheoremId::C5C3 && id != TheoremId::C6C3)
    throw VerifyError("uniqueness audits exist for C4C3, C5C3 and C6C3 only");
  VerificationReport r = verify_theorem_at(id, n, options);
  if (!r.audit) throw VerifyError("n below the family's smallest member");
  return *r.audit;
}

std::vector<SixCycleCheck> six_cycle_side_checks(const Graph& g, const Embedding& e) {
  const int n = g.order();
  std::vector<SixCycleCheck> out;
  std::vector<Vertex> cyc(6);
  auto handle = [&]() {
    for (int i = 0; i < 3; ++i)
      if (g.adjacent(cyc[i], cyc[i + 3])) return;
    for (int i = 0; i < 6; ++i)
      if (g.adjacent(cyc[i], cyc[(i + 2) % 6])) return;
    VertexMask on = 0;
    for (Vertex c : cyc) on |= bit(c);
    // Side of each direct attachment from the rotation at its cycle vertex.
    std::vector<int> side(static_cast<std::size_t>(n), -1);
    for (int i = 0; i < 6; ++i) {
      const Vertex c = cyc[i], prev = cyc[(i + 5) % 6], next = cyc[(i + 1) % 6];
      const auto& rot = e.rotation[c];
      const auto at = std::find(rot.begin(), rot.end(), prev) - rot.begin();
      int current = 0;
      for (std::size_t k = 1; k < rot.size(); ++k) {
        const Vertex x = rot[(at + k) % rot.size()];
        if (x == next) {
          current = 1;
          continue;
        }
        if (on & bit(x)) continue;
        if (side[x] >= 0 && side[x] != current) throw std::logic_error("embedding sides are inconsistent");
        side[x] = current;
      }
    }
    VertexMask region[2] = {0, 0};
    VertexMask assigned = 0;
    for (Vertex x = 0; x < n; ++x) {
      if (side[x] < 0 || (assigned & bit(x))) continue;
      VertexMask comp = bit(x), frontier = bit(x);
      while (frontier) {
        const Vertex y = lowest(frontier);
        frontier &= frontier - 1;
        const VertexMask fresh = g.neighbors(y) & ~on & ~comp;
        comp |= fresh;
        frontier |= fresh;
      }
      for_each_bit(comp, [&](Vertex y) {
        if (side[y] >= 0 && side[y] != side[x]) throw std::logic_error("embedding sides are inconsistent");
      });
      region[side[x]] |= comp;
      assigned |= comp;
    }
    for (int s = 0; s < 2; ++s) {
      const VertexMask m = region[s];
      if (!m) continue;
      for (int offset = 0; offset < 2; ++offset) {
        const Vertex u[3] = {cyc[offset], cyc[offset + 2], cyc[(offset + 4) % 6]};
        bool hypothesis = true;
        for_each_bit(m, [&](Vertex x) {
          int hits = 0;
          for (Vertex ui : u) hits += g.adjacent(x, ui);
          if (hits > 1) hypothesis = false;
        });
        if (!hypothesis) continue;
        SixCycleCheck check;
        for (int i = 0; i < 6; ++i) check.cycle.push_back(cyc[(offset + i) % 6]);
        check.side = s;
        check.m = popcount(m);
        for (int i = 0; i < 3; ++i) check.paths += paths4_through(g, u[i], u[(i + 1) % 3], m);
        check.bound = Rational((check.m + 5) * (check.m + 5), 3) - 3;
        out.push_back(std::move(check));
      }
    }
  };
  // Each 6-cycle once: smallest vertex first, second vertex below the last.
  std::function<void(int, VertexMask)> walk = [&](int depth, VertexMask used) {
    const Vertex last = cyc[depth - 1];
    if (depth == 6) {
      if (g.adjacent(last, cyc[0]) && cyc[1] < cyc[5]) handle();
      return;
    }
    for_each_bit(g.neighbors(last) & ~used & ~low_mask(cyc[0] + 1), [&](Vertex x) {
      cyc[depth] = x;
      walk(depth + 1, used | bit(x));
    });
  };
  for (Vertex s = 0; s < n; ++s) {
    cyc[0] = s;
    walk(1, bit(s));
  }
  return out;
}

std::vector<InstanceCheck> verify_instance(const Graph& g) {
  std::vector<InstanceCheck> out;
  const int n = g.order();
  const bool planar = is_planar(g);
  out.push_back({"planar", planar ? CheckOutcome::Pass : CheckOutcome::Fail, planar ? "" : "graph is not planar"});
  const char* names[] = {"P5pair", "P5triple", "ratio_C5free", "ratio_C6free", "P5for3vtx"};
  if (!planar) {
    for (const char* name : names) out.push_back({name, CheckOutcome::Skipped, "graph is not planar"});
    return out;
  }
  const bool triangle_free = is_f_free(g, Pattern::C3);
  if (!triangle_free || n < 5) {
    const char* why = triangle_free ? "needs n >= 5" : "graph has a triangle";
    out.push_back({"P5pair", CheckOutcome::Skipped, why});
    out.push_back({"P5triple", CheckOutcome::Skipped, why});
  } else {
    const auto p = pair_path_matrix(g);
    const Count pair = max_pair(p), triple = max_triple(p);
    const Rational pb = formula_value(TheoremId::P5pair, n), tb = formula_value(TheoremId::P5triple, n);
    out.push_back({"P5pair", as_rational(pair) <= pb ? CheckOutcome::Pass : CheckOutcome::Fail,
                   "max " + std::to_string(pair) + " vs bound " + rational_text(pb)});
    out.push_back({"P5triple", as_rational(triple) <= tb ? CheckOutcome::Pass : CheckOutcome::Fail,
                   "max " + std::to_string(triple) + " vs bound " + rational_text(tb)});
  }
  const std::pair<const char*, RatioRegime> regimes[] = {{"ratio_C5free", RatioRegime::C5free},
                                                         {"ratio_C6free", RatioRegime::C6free}};
  for (auto [name, regime] : regimes) {
    try {
      RatioCheck rc = check_ratio_bound(g, regime);
      out.push_back({name, rc.holds ? CheckOutcome::Pass : CheckOutcome::Fail,
                     "ratio " + rational_text(rc.ratio) + " vs bound " + rational_text(rc.bound)});
    } catch (const RegimeViolated& e) {
      out.push_back({name, CheckOutcome::Skipped, e.what()});
    }
  }
  if (!triangle_free) {
    out.push_back({"P5for3vtx", CheckOutcome::Skipped, "graph has a triangle"});
    return out;
  }
  const auto checks = six_cycle_side_checks(g, embed_components(g));
  if (checks.empty()) {
    out.push_back({"P5for3vtx", CheckOutcome::Skipped, "no induced 6-cycle with a side meeting the hypothesis"});
    return out;
  }
  for (const SixCycleCheck& c : checks)
    if (as_rational(c.paths) > c.bound) {
      out.push_back({"P5for3vtx", CheckOutcome::Fail,
                     std::to_string(c.paths) + " paths with m = " + std::to_string(c.m) + " exceed " + rational_text(c.bound)});
      return out;
    }
  out.push_back({"P5for3vtx", CheckOutcome::Pass, std::to_string(checks.size()) + " cycle sides checked"});
  return out;
}

std::vector<ConjectureRow> explore_conjecture(int k, int n_lo, int n_hi, const VerifyOptions& options) {
  if (k < 2 || k > 4) throw VerifyError("conjecture exploration supports 2 <= k <= 4");
  if (n_lo > n_hi) throw VerifyError("empty n range");
  const int cap = options.cap > 0 ? std::min(options.cap, kMaxEnumOrder) : exhaustive_cap();
  std::vector<ConjectureRow> out;
  for (int n = n_lo; n <= n_hi; ++n) {
    for (int odd = 0; odd <= (k <= 3 ? 1 : 0); ++odd) {
      ConjectureRow row;
      row.k = k;
      row.n = n;
      row.side = odd ? "odd" : "even";
      row.cycle_length = 2 * k + odd;
      const int min_order = odd ? g_odd_min_order(k) : g_even_min_order(k);
      if (n >= min_order) {
        const Graph g = odd ? build_g_odd(n, k) : build_g_even(n, k);
        row.construction = count_cycles(g, row.cycle_length);
      }
      if (n <= cap) {
        const int len = row.cycle_length;
        row.exhaustive_max =
            exhaustive_extremum({n, {Constraint::Planar, Constraint::C3free}},
                                [len](const Graph& h) { return count_cycles(h, len); }, options.threads)
                .max;
      }
      if (row.construction && row.exhaustive_max)
        row.relation = *row.construction == *row.exhaustive_max ? "match" : "construction below exhaustive maximum";
      else if (row.construction)
        row.relation = "construction only";
      else
        row.relation = "construction unavailable";
      out.push_back(std::move(row));
    }
  }
  return out;
}

std::string reports_csv(const std::vector<VerificationReport>& reports) {
  std::ostringstream os;
  os << "theorem_id,n,computed_max,formula_num,formula_den,status,witness_count,witnesses_graph6\n";
  for (const auto& r : reports) {
    os << report_theorem_id(r.theorem) << ',' << r.n << ',' << r.computed_max << ',' << r.formula.numerator() << ','
       << r.formula.denominator() << ',' << status_name(r.status);
    if (r.status == Status::BoundHoldsWithGap) os << '(' << rational_text(r.gap) << ')';
    os << ',' << r.witnesses.size() << ',';
    for (std::size_t i = 0; i < r.witnesses.size(); ++i) os << (i ? ";" : "") << encode_graph6(r.witnesses[i]);
    os << '\n';
  }
  return os.str();
}

std::string reports_json(const std::vector<VerificationReport>& reports) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    nlohmann::ordered_json j;
    j["theorem_id"] = report_theorem_id(r.theorem);
    j["n"] = r.n;
    j["computed_max"] = r.computed_max;
    j["formula_num"] = r.formula.numerator();
    j["formula_den"] = r.formula.denominator();
    j["status"] = status_name(r.status);
    if (r.status == Status::BoundHoldsWithGap) j["gap"] = rational_text(r.gap);
    j["mode"] = mode_name(r.mode);
    j["witness_count"] = r.witnesses.size();
    std::vector<std::string> w;
    for (const Graph& g : r.witnesses) w.push_back(encode_graph6(g));
    j["witnesses_graph6"] = w;
    j["graphs_examined"] = r.graphs_examined;
    j["oracle_recount_ok"] = r.oracle_recount_ok;
    if (r.audit) {
      nlohmann::ordered_json a;
      a["family"] = r.audit->family;
      a["asserted"] = r.audit->asserted;
      a["equal"] = r.audit->equal;
      a["argmax_count"] = r.audit->argmax_count;
      a["family_count"] = r.audit->family_count;
      j["witness_audit"] = a;
    }
    if (!r.note.empty()) j["note"] = r.note;
    if (!r.counterexample_path.empty()) j["counterexample"] = r.counterexample_path;
    arr.push_back(j);
  }
  return arr.dump(2) + "\n";
}

std::string reports_text(const std::vector<VerificationReport>& reports) {
  std::ostringstream os;
  for (const auto& r : reports) {
    os << report_theorem_id(r.theorem) << " n=" << r.n << " max=" << r.computed_max << " formula=" << rational_text(r.formula)
       << " status=" << status_name(r.status);
    if (r.status == Status::BoundHoldsWithGap) os << '(' << rational_text(r.gap) << ')';
    os << " mode=" << mode_name(r.mode) << " witnesses=" << r.witnesses.size() << " examined=" << r.graphs_examined;
    if (r.audit)
      os << " audit[" << r.audit->family << "]=" << (r.audit->equal ? "equal" : "differs") << (r.audit->asserted ? "" : "(observe)");
    if (!r.note.empty()) os << " note=\"" << r.note << '"';
    if (!r.counterexample_path.empty()) os << " counterexample=" << r.counterexample_path;
    os << '\n';
  }
  return os.str();
}

}  // namespace tpl
