#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tpl/constructions.hpp"
#include "tpl/enumeration.hpp"
#include "tpl/graph.hpp"

namespace tpl {

enum class Status { ExactMatch, BoundHolds, BoundHoldsWithGap, Violation, OutOfValidityRange };
enum class CheckMode { Assert, Observe };

std::string_view status_name(Status s);
std::string_view mode_name(CheckMode m);

class VerifyError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct WitnessAudit {
  std::string family;
  bool asserted = true;
  bool equal = false;
  std::size_t argmax_count = 0;
  std::size_t family_count = 0;
  std::vector<Graph> only_in_argmax;
  std::vector<Graph> only_in_family;
};

struct VerificationReport {
  TheoremId theorem = TheoremId::C4C3;
  int n = 0;
  Count computed_max = 0;
  Rational formula{0};
  Status status = Status::OutOfValidityRange;
  Rational gap{0};  // formula - computed_max
  CheckMode mode = CheckMode::Assert;
  std::vector<Graph> witnesses;  // canonical graphs, ordered by canonical form
  std::size_t graphs_examined = 0;
  bool oracle_recount_ok = true;
  std::optional<WitnessAudit> audit;
  std::string note;
  std::string counterexample_path;
};

/// TPL_MAX_N if set (clamped to the hard cap), else 10.
int exhaustive_cap();

struct VerifyOptions {
  int threads = 1;
  int cap = 0;  // 0 reads exhaustive_cap()
  std::string counterexample_dir = ".";
  bool persist_counterexamples = true;
  std::optional<CheckMode> mode;  // forces observe mode when set to Observe
};

struct Extremum {
  Count max = 0;
  std::vector<Graph> witnesses;  // canonical, ordered by canonical form
  std::size_t examined = 0;
};

using Scorer = std::function<Count(const Graph&)>;

/// Maximum score over the class with every maximizer; deterministic for any thread count.
Extremum exhaustive_extremum(const EnumSpec& spec, const Scorer& score, int threads = 1);

ConstraintSet theorem_class(TheoremId id);
Count theorem_score(TheoremId id, const Graph& g);
/// Recount with the exponential oracles.
Count oracle_score(TheoremId id, const Graph& g);

std::vector<VerificationReport> verify_theorem(TheoremId id, int n_lo, int n_hi, const VerifyOptions& options = {});
VerificationReport verify_theorem_at(TheoremId id, int n, const VerifyOptions& options = {});

/// Argmax set against the construction family, by canonical form.
WitnessAudit verify_uniqueness(TheoremId id, int n, const VerifyOptions& options = {});

enum class CheckOutcome { Pass, Fail, Skipped };
std::string_view outcome_name(CheckOutcome o);

struct InstanceCheck {
  std::string invariant;
  CheckOutcome outcome = CheckOutcome::Skipped;
  std::string detail;
};

std::vector<InstanceCheck> verify_instance(const Graph& g);

/// Pair path counts P[u][v] = count_paths4(g,u,v), zero on the diagonal.
std::vector<std::vector<Count>> pair_path_matrix(const Graph& g);

struct SixCycleCheck {
  std::vector<Vertex> cycle;  // u1 v1 u2 v2 u3 v3
  int side = 0;
  int m = 0;
  Count paths = 0;
  Rational bound{0};
};

/// Every induced 6-cycle, alternate choice of u's and non-empty side M in the
/// given plane embedding such that each vertex of M sees at most one u_i.
/// paths counts four-edge u_i-u_{i+1} paths through M; bound = 3((m+5)/3)^2-3.
std::vector<SixCycleCheck> six_cycle_side_checks(const Graph& g, const Embedding& e);

struct ConjectureRow {
  int k = 0;
  int n = 0;
  std::string side;  // "even" or "odd"
  int cycle_length = 0;
  std::optional<Count> construction;
  std::optional<Count> exhaustive_max;
  std::string relation;
};

std::vector<ConjectureRow> explore_conjecture(int k, int n_lo, int n_hi, const VerifyOptions& options = {});

std::string reports_csv(const std::vector<VerificationReport>& reports);
std::string reports_json(const std::vector<VerificationReport>& reports);
std::string reports_text(const std::vector<VerificationReport>& reports);
std::string report_theorem_id(TheoremId id);  // "T_C4C3"

}  // namespace tpl
