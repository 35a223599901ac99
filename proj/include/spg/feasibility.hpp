#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "spg/budget.hpp"
#include "spg/item_set.hpp"
#include "spg/rational.hpp"

namespace spg {

struct Job {
  Rational release;
  Rational processing;
  Rational deadline;
  bool operator==(const Job&) const = default;
};

struct TimeWindow {
  Rational release;
  Rational deadline;
  bool operator==(const TimeWindow&) const = default;
};

/// Downward-closed family given by its maximal sets.
struct ExplicitFamily {
  std::vector<ItemSet> maximal_sets;
  bool operator==(const ExplicitFamily&) const = default;
};

struct SingleMachine {
  std::map<ItemIndex, Job> jobs;
  bool operator==(const SingleMachine&) const = default;
};

struct IdenticalMachines {
  std::uint32_t copies = 1;
  std::map<ItemIndex, Job> jobs;
  bool operator==(const IdenticalMachines&) const = default;
};

/// processing[m] maps item -> processing time on machine m; a missing entry
/// means the job cannot run on that machine.
struct UnrelatedMachines {
  std::vector<std::string> machines;
  std::vector<std::map<ItemIndex, Rational>> processing;
  std::map<ItemIndex, TimeWindow> jobs;
  bool operator==(const UnrelatedMachines&) const = default;
};

class FeasibilitySystem;

/// A player combining `copies` disjoint members of one shared family.
struct SharedSymmetric {
  std::shared_ptr<const FeasibilitySystem> base;
  std::uint32_t copies = 1;
  bool operator==(const SharedSymmetric& other) const;
};

class FeasibilitySystem {
 public:
  using Variant = std::variant<ExplicitFamily, SingleMachine, IdenticalMachines,
                               UnrelatedMachines, SharedSymmetric>;

  /// Validates index ranges, positive processing times and copy counts.
  FeasibilitySystem(std::size_t universe, Variant descriptor);

  std::size_t universe() const { return universe_; }
  const Variant& descriptor() const { return descriptor_; }

  /// "explicit", "single_machine", "identical_machines",
  /// "unrelated_machines" or "shared_symmetric".
  std::string kind_name() const;

  /// Number of feasible sets (machines) the player combines.
  std::uint32_t copies() const;

  /// Items the system can ever accept individually or otherwise mentions.
  ItemSet support() const;

  bool is_scheduling() const;

  bool operator==(const FeasibilitySystem&) const = default;

 private:
  std::size_t universe_;
  Variant descriptor_;
};

struct ScheduledJob {
  ItemIndex item;
  Rational start;
  bool operator==(const ScheduledJob&) const = default;
};

/// One ordered job sequence per machine copy.
struct ScheduleWitness {
  std::vector<std::vector<ScheduledJob>> machines;
};

struct Membership {
  bool member = false;
  std::optional<ScheduleWitness> witness;
};

/// Membership with a schedule certificate for scheduling systems. Items the
/// system does not know make the answer false. Throws BudgetExceeded when the
/// order search for general release dates runs out of nodes.
Membership check_membership(const FeasibilitySystem& system, const ItemSet& items,
                            Budget& budget);

bool is_member(const FeasibilitySystem& system, const ItemSet& items, Budget& budget);

/// Re-checks a witness from scratch: every item placed once, windows
/// respected, no overlap on any machine.
bool witness_is_valid(const FeasibilitySystem& system, const ItemSet& items,
                      const ScheduleWitness& witness);

struct ClosureCheck {
  bool ok = true;
  std::optional<ItemSet> feasible;  ///< counterexample: accepted set
  std::optional<ItemSet> subset;    ///< counterexample: rejected subset
};

/// Exact antichain test for explicit families, sampled subset checks for
/// oracle systems.
ClosureCheck validate_downward_closed(const FeasibilitySystem& system, std::size_t samples,
                                      std::uint64_t seed, Budget& budget);

/// Deadline of an item under a scheduling system, if it has one.
std::optional<Rational> deadline_of(const FeasibilitySystem& system, ItemIndex item);

/// Largest feasible subset of `available`. With prefer_largest_deadline the
/// result is the maximum-cardinality set picked by scanning deadlines in
/// decreasing order (ties by item id); otherwise the scan is in id order.
ItemSet max_cardinality_feasible(const FeasibilitySystem& system, const ItemSet& available,
                                 bool prefer_largest_deadline, Budget& budget);

}  // namespace spg
