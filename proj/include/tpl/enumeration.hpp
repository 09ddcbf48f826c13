#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tpl/counting.hpp"
#include "tpl/graph.hpp"

namespace tpl {

enum class Constraint : std::uint32_t {
  Planar = 1U << 0,
  C3free = 1U << 1,
  C4free = 1U << 2,
  C5free = 1U << 3,
  C6free = 1U << 4,
  K4free = 1U << 5,
  Connected = 1U << 6,
};

class ConstraintSet {
 public:
  constexpr ConstraintSet() = default;
  constexpr ConstraintSet(std::initializer_list<Constraint> cs) {
    for (Constraint c : cs) bits_ |= static_cast<std::uint32_t>(c);
  }
  constexpr bool has(Constraint c) const { return (bits_ & static_cast<std::uint32_t>(c)) != 0; }
  constexpr ConstraintSet with(Constraint c) const {
    ConstraintSet out = *this;
    out.bits_ |= static_cast<std::uint32_t>(c);
    return out;
  }
  constexpr std::uint32_t bits() const { return bits_; }
  std::vector<Pattern> forbidden() const;
  friend constexpr bool operator==(ConstraintSet, ConstraintSet) = default;

 private:
  std::uint32_t bits_ = 0;
};

/// Comma separated: planar, c3free .. c6free, k4free, connected. Throws EnumError.
ConstraintSet parse_constraints(std::string_view text);
std::string to_string(ConstraintSet cs);
ConstraintSet forbidding(Pattern p);
bool satisfies(const Graph& g, ConstraintSet cs);

class EnumError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr int kMaxEnumOrder = 11;

struct EnumSpec {
  int n = 0;
  ConstraintSet constraints;
};

/// Roots of independent subtrees, in generation order.
struct WorkUnit {
  std::size_t index = 0;
  Graph root;
};

using GraphSink = std::function<void(const Graph&)>;

struct EnumOptions {
  int threads = 1;
  int split_depth = 0;  // 0 picks a depth from n
  std::function<bool(std::size_t)> skip_unit;  // resume support
  std::function<void(std::size_t)> unit_done;  // called in unit order
};

int default_split_depth(int n);
std::vector<WorkUnit> work_units(const EnumSpec& spec, int split_depth);
/// Emits the members of one unit's subtree in generation order.
void enumerate_unit(const EnumSpec& spec, const WorkUnit& unit, const GraphSink& sink);
/// Output order does not depend on the thread count.
void enumerate(const EnumSpec& spec, const GraphSink& sink, const EnumOptions& options = {});
std::vector<Graph> enumerate_all(const EnumSpec& spec, const EnumOptions& options = {});

/// Runs work(unit, graph) on worker threads; each unit is handled by one
/// thread, so per-unit state indexed by unit.index needs no locking.
void for_each_unit_parallel(const EnumSpec& spec, int threads, int split_depth,
                            const std::function<void(const WorkUnit&, const Graph&)>& work);

/// Randomized maximal planar graph under the constraints; deterministic per seed.
Graph random_planar_ffree(int n, ConstraintSet constraints, std::uint64_t seed);

}  // namespace tpl
