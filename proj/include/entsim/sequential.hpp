// Copyright 2026 The entsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "entsim/rng.hpp"
#include "entsim/vec3.hpp"

#include "json.hpp"

namespace entsim {

/// Probability that two successive spin readings at relative angle theta
/// (radians, canonicalized to [0, pi]) agree: cos^2(theta/2).
double malus_same_reading_prob(double theta_rad);

/// Average of the product of the two successive readings:
/// 2 * malus_same_reading_prob(theta) - 1 = cos(theta).
double malus_product_average(double theta_rad);

/// Pair correlation of the two-sided sequential mechanism:
/// -(2 cos^2(theta/2) - 1) = -cos(theta). Agrees with the quantum closed form
/// at the same relative angle.
double sequential_correlation_closed_form(double theta_rad);

/// Outcomes of one pair: s_e along a on the electron, s_p along b on the
/// positron.
struct PairSample {
  int s_e;
  int s_p;
};

/// Draw one pair through the conservation + successive-reading mechanism:
/// s_e is a fair +/-1 (the pair state looks the same along every axis); the
/// positron carries -s_e along a by conservation of the total (zero) spin;
/// its reading along b then equals that carried value with probability
/// cos^2(theta/2), theta the angle from a to b. Consumes exactly two uniform
/// variates, s_e first.
PairSample simulate_pair(const UnitVector3 &a, const UnitVector3 &b, RandomStream &rng);

// ---------------------------------------------------------------------------
// Knowledge ledger: which observable values are defined on which time
// intervals, and from when they can actually be known.
// ---------------------------------------------------------------------------

enum class Particle { electron, positron };

std::string to_string(Particle p);

/// A point on the ledger's time line. eps == -1 marks the instant
/// "immediately before t": later than every real time below t, earlier than
/// t itself. It carries no metric distance.
struct Instant {
  double t = 0.0;
  int eps = 0;  // 0, or -1 for just-before

  static Instant at(double t) { return {t, 0}; }
  static Instant just_before(double t) { return {t, -1}; }

  friend auto operator<=>(const Instant &, const Instant &) = default;
};

/// Interval with open/closed endpoints over Instants. An open pair
/// (just_before(t), t) counts as nonempty: the lower endpoint stands for
/// "arbitrarily close before t", so the window between them never closes.
struct TimeInterval {
  Instant lo;
  Instant hi;
  bool lo_open = false;
  bool hi_open = false;

  static TimeInterval closed_unbounded(double lo);              // [lo, inf)
  static TimeInterval open_bounded(double lo, double hi);       // (lo, hi)
  static TimeInterval open_unbounded(double lo);                // (lo, inf)

  bool contains(const Instant &x) const;
  bool empty() const;
  std::string str() const;

  friend std::optional<TimeInterval> intersect(const TimeInterval &a, const TimeInterval &b);
  friend bool operator==(const TimeInterval &, const TimeInterval &) = default;
};

/// When each measurement happens (ledger reference frame). t0 is the first
/// measurement (electron along a), t1 the second (positron along b); either
/// may be absent. `separation` asserts the two measurements are space-like
/// separated; without it the ledger refuses to emit the entry that would give
/// one particle two axis values at once.
struct EventTimeline {
  std::optional<double> t0;
  std::optional<double> t1;
  bool separation = true;
};

struct LedgerEntry {
  Particle particle;
  UnitVector3 axis;
  int value;  // +1 or -1
  TimeInterval defined_on;
  std::optional<double> knowable_from;  // empty = never knowable
  std::string derivation;
};

class KnowledgeLedger {
 public:
  explicit KnowledgeLedger(std::vector<LedgerEntry> entries,
                           std::vector<std::string> diagnostics = {});

  const std::vector<LedgerEntry> &entries() const { return entries_; }
  const std::vector<std::string> &diagnostics() const { return diagnostics_; }
  bool empty() const { return entries_.empty(); }

  /// Value defined for (particle, axis) at real time t, if any.
  std::optional<int> value_at(Particle p, const UnitVector3 &axis, double t) const;

  /// Intervals on which the particle has defined values along two distinct
  /// axes simultaneously.
  std::vector<TimeInterval> double_knowledge_intervals(Particle p) const;

  /// Entries participating in a double-knowledge interval for the particle.
  std::vector<const LedgerEntry *> double_knowledge_entries(Particle p) const;

  /// Invariants: no two entries give the same (particle, axis) different
  /// values on overlapping intervals, and nothing is knowable before it is
  /// defined.
  bool consistent() const;

  nlohmann::json to_json() const;
  std::string to_table() const;

 private:
  std::vector<LedgerEntry> entries_;
  std::vector<std::string> diagnostics_;
};

/// Assemble the ledger for one measured pair. Requires t0 < t1 when both are
/// present (validation_error otherwise); an empty timeline yields an empty
/// ledger.
KnowledgeLedger build_ledger(const EventTimeline &timeline, const UnitVector3 &a,
                             const UnitVector3 &b, const PairSample &outcomes);

}  // namespace entsim
