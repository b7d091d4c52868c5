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

#include "entsim/sequential.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <utility>

#include "entsim/angles.hpp"
#include "entsim/errors.hpp"

namespace entsim {

double malus_same_reading_prob(double theta_rad) {
  double c = std::cos(0.5 * canonical_theta(theta_rad));
  return c * c;
}

double malus_product_average(double theta_rad) {
  return 2.0 * malus_same_reading_prob(theta_rad) - 1.0;
}

double sequential_correlation_closed_form(double theta_rad) {
  return -malus_product_average(theta_rad);
}

PairSample simulate_pair(const UnitVector3 &a, const UnitVector3 &b, RandomStream &rng) {
  // First variate: the electron reading along a. The pair state looks the
  // same along every axis, so the marginal is a fair coin.
  int s_e = rng.next_uniform() < 0.5 ? 1 : -1;

  // The positron carries -s_e along a (total spin along a stays 0). Its
  // reading along b repeats that carried value with the same-reading
  // probability at the relative angle.
  double same = malus_same_reading_prob(angle_between(a, b));
  int s_p = rng.next_uniform() < same ? -s_e : s_e;
  return {s_e, s_p};
}

std::string to_string(Particle p) { return p == Particle::electron ? "e" : "p"; }

namespace {

std::string fmt_time(double t) {
  if (std::isinf(t)) return t > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", t);
  return buf;
}

std::string fmt_instant(const Instant &x) {
  std::string s = fmt_time(x.t);
  if (x.eps == -1) s += "^-";
  return s;
}

bool same_axis(const UnitVector3 &a, const UnitVector3 &b) {
  return dot(a, b) > 1.0 - 1e-9;
}

}  // namespace

TimeInterval TimeInterval::closed_unbounded(double lo) {
  return {Instant::at(lo), Instant::at(std::numeric_limits<double>::infinity()), false, true};
}

TimeInterval TimeInterval::open_bounded(double lo, double hi) {
  return {Instant::at(lo), Instant::at(hi), true, true};
}

TimeInterval TimeInterval::open_unbounded(double lo) {
  return {Instant::at(lo), Instant::at(std::numeric_limits<double>::infinity()), true, true};
}

bool TimeInterval::contains(const Instant &x) const {
  bool above = lo_open ? lo < x : lo <= x;
  bool below = hi_open ? x < hi : x <= hi;
  return above && below;
}

bool TimeInterval::empty() const {
  if (lo > hi) return true;
  if (lo == hi) return lo_open || hi_open;
  return false;
}

std::string TimeInterval::str() const {
  std::string s;
  s += lo_open ? '(' : '[';
  s += fmt_instant(lo);
  s += ", ";
  s += fmt_instant(hi);
  s += hi_open ? ')' : ']';
  return s;
}

std::optional<TimeInterval> intersect(const TimeInterval &a, const TimeInterval &b) {
  TimeInterval r;
  if (a.lo == b.lo) {
    r.lo = a.lo;
    r.lo_open = a.lo_open || b.lo_open;
  } else if (a.lo > b.lo) {
    r.lo = a.lo;
    r.lo_open = a.lo_open;
  } else {
    r.lo = b.lo;
    r.lo_open = b.lo_open;
  }
  if (a.hi == b.hi) {
    r.hi = a.hi;
    r.hi_open = a.hi_open || b.hi_open;
  } else if (a.hi < b.hi) {
    r.hi = a.hi;
    r.hi_open = a.hi_open;
  } else {
    r.hi = b.hi;
    r.hi_open = b.hi_open;
  }
  if (r.empty()) return std::nullopt;
  return r;
}

KnowledgeLedger::KnowledgeLedger(std::vector<LedgerEntry> entries,
                                 std::vector<std::string> diagnostics)
    : entries_(std::move(entries)), diagnostics_(std::move(diagnostics)) {
  for (const LedgerEntry &e : entries_) {
    if (e.value != 1 && e.value != -1) {
      throw validation_error("KnowledgeLedger: entry value must be +1 or -1");
    }
  }
}

std::optional<int> KnowledgeLedger::value_at(Particle p, const UnitVector3 &axis,
                                             double t) const {
  for (const LedgerEntry &e : entries_) {
    if (e.particle == p && same_axis(e.axis, axis) && e.defined_on.contains(Instant::at(t))) {
      return e.value;
    }
  }
  return std::nullopt;
}

std::vector<TimeInterval> KnowledgeLedger::double_knowledge_intervals(Particle p) const {
  std::vector<TimeInterval> out;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    for (std::size_t j = i + 1; j < entries_.size(); ++j) {
      const LedgerEntry &ei = entries_[i], &ej = entries_[j];
      if (ei.particle != p || ej.particle != p) continue;
      if (same_axis(ei.axis, ej.axis)) continue;
      std::optional<TimeInterval> iv = intersect(ei.defined_on, ej.defined_on);
      if (!iv) continue;
      bool seen = false;
      for (const TimeInterval &k : out) {
        if (k == *iv) seen = true;
      }
      if (!seen) out.push_back(*iv);
    }
  }
  return out;
}

std::vector<const LedgerEntry *> KnowledgeLedger::double_knowledge_entries(Particle p) const {
  std::vector<const LedgerEntry *> out;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    for (std::size_t j = i + 1; j < entries_.size(); ++j) {
      const LedgerEntry &ei = entries_[i], &ej = entries_[j];
      if (ei.particle != p || ej.particle != p) continue;
      if (same_axis(ei.axis, ej.axis)) continue;
      if (!intersect(ei.defined_on, ej.defined_on)) continue;
      for (const LedgerEntry *e : {&ei, &ej}) {
        bool seen = false;
        for (const LedgerEntry *k : out) {
          if (k == e) seen = true;
        }
        if (!seen) out.push_back(e);
      }
    }
  }
  return out;
}

bool KnowledgeLedger::consistent() const {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const LedgerEntry &ei = entries_[i];
    if (ei.knowable_from && Instant::at(*ei.knowable_from) < ei.defined_on.lo) {
      return false;  // knowable before the value is even defined
    }
    for (std::size_t j = i + 1; j < entries_.size(); ++j) {
      const LedgerEntry &ej = entries_[j];
      if (ei.particle != ej.particle || !same_axis(ei.axis, ej.axis)) continue;
      if (ei.value != ej.value && intersect(ei.defined_on, ej.defined_on)) {
        return false;  // conflicting values on overlapping intervals
      }
    }
  }
  return true;
}

nlohmann::json KnowledgeLedger::to_json() const {
  nlohmann::json entries = nlohmann::json::array();
  for (const LedgerEntry &e : entries_) {
    nlohmann::json j{{"particle", to_string(e.particle)},
                     {"axis", {e.axis.x, e.axis.y, e.axis.z}},
                     {"value", e.value},
                     {"defined_on", e.defined_on.str()},
                     {"derivation", e.derivation}};
    if (e.knowable_from) {
      j["knowable_from"] = *e.knowable_from;
    } else {
      j["knowable_from"] = nullptr;
    }
    entries.push_back(j);
  }
  return nlohmann::json{{"entries", entries}, {"diagnostics", diagnostics_}};
}

std::string KnowledgeLedger::to_table() const {
  std::ostringstream os;
  char line[160];
  std::snprintf(line, sizeof line, "%-9s %-26s %-6s %-14s %-13s %s\n", "particle", "axis",
                "value", "defined_on", "knowable_from", "derivation");
  os << line;
  for (const LedgerEntry &e : entries_) {
    char axis[40];
    std::snprintf(axis, sizeof axis, "(%.4g, %.4g, %.4g)", e.axis.x, e.axis.y, e.axis.z);
    std::string know = e.knowable_from ? fmt_time(*e.knowable_from) : "never";
    std::snprintf(line, sizeof line, "%-9s %-26s %+-6d %-14s %-13s %s\n",
                  to_string(e.particle).c_str(), axis, e.value, e.defined_on.str().c_str(),
                  know.c_str(), e.derivation.c_str());
    os << line;
  }
  for (const std::string &d : diagnostics_) os << "note: " << d << "\n";
  return os.str();
}

KnowledgeLedger build_ledger(const EventTimeline &timeline, const UnitVector3 &a,
                             const UnitVector3 &b, const PairSample &outcomes) {
  if (timeline.t1 && !timeline.t0) {
    throw validation_error("build_ledger: second measurement time without a first");
  }
  if (timeline.t0 && timeline.t1 && !(*timeline.t0 < *timeline.t1)) {
    throw validation_error("build_ledger: need t0 < t1");
  }
  if (!timeline.t0) return KnowledgeLedger({});

  if (outcomes.s_e != 1 && outcomes.s_e != -1) {
    throw validation_error("build_ledger: s_e must be +1 or -1");
  }
  double t0 = *timeline.t0;

  std::vector<LedgerEntry> entries;
  std::vector<std::string> diags;

  entries.push_back({Particle::electron, a, outcomes.s_e, TimeInterval::closed_unbounded(t0), t0,
                     "read out along a at t0"});

  // Conservation: the total spin along a is 0 at creation and stays 0, so the
  // partner carries the opposite value (v2 = v0 - v1 with v0 = 0 here; a
  // nonzero conserved total would shift the entry to v0 - s_e) until its own
  // measurement overwrites it.
  TimeInterval carried = timeline.t1 ? TimeInterval::open_bounded(t0, *timeline.t1)
                                     : TimeInterval::open_unbounded(t0);
  entries.push_back({Particle::positron, a, -outcomes.s_e, carried, t0,
                     "opposite of the t0 reading (total spin along a conserved at 0)"});

  if (timeline.t1) {
    if (outcomes.s_p != 1 && outcomes.s_p != -1) {
      throw validation_error("build_ledger: s_p must be +1 or -1");
    }
    double t1 = *timeline.t1;
    if (timeline.separation) {
      // Valid on (t1^-, t1]: the reading also describes the instant just
      // before the measurement, but only becomes accessible at t1.
      entries.push_back({Particle::positron, b, outcomes.s_p,
                         {Instant::just_before(t1), Instant::at(t1), true, false}, t1,
                         "t1 reading; also valid just before t1; knowable only from t1"});
    } else {
      diags.push_back(
          "measurements not space-like separated: the just-before-t1 entry is suppressed, so no "
          "interval carries two axis values for the same particle");
    }
    entries.push_back({Particle::positron, b, outcomes.s_p, TimeInterval::closed_unbounded(t1),
                       t1, "read out along b at t1; values along other axes are erased"});
  }

  return KnowledgeLedger(std::move(entries), std::move(diags));
}

}  // namespace entsim
