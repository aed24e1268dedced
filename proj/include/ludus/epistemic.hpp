// Copyright 2026 The ludus authors
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

#ifndef LUDUS_EPISTEMIC_HPP
#define LUDUS_EPISTEMIC_HPP

#include <cmath>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ludus/rng.hpp"

namespace ludus {
namespace know {

/// Events over a state space of m <= 32 states are bitmasks.
using Event = uint32_t;

inline Event full_event(int states) {
  return states >= 32 ? ~Event{0} : ((Event{1} << states) - 1);
}

/// P(sigma): the set of states the agent considers possible at sigma.
/// Always contains sigma itself.
struct InfoFunction {
  int states = 0;
  std::vector<Event> p;

  void validate() const {
    if (states < 1 || states > 32)
      throw std::invalid_argument("InfoFunction: need 1 <= states <= 32");
    if (static_cast<int>(p.size()) != states)
      throw std::invalid_argument("InfoFunction: one cell per state required");
    for (int s = 0; s < states; ++s) {
      if (p[s] & ~full_event(states))
        throw std::invalid_argument("InfoFunction: cell mentions unknown states");
      if (!(p[s] & (Event{1} << s)))
        throw std::invalid_argument("InfoFunction: sigma must lie in P(sigma)");
    }
  }
};

/// K(E) = { sigma | P(sigma) subseteq E }.
inline Event knowledge(const InfoFunction& pf, Event e) {
  Event k = 0;
  for (int s = 0; s < pf.states; ++s) {
    if ((pf.p[s] & ~e) == 0) k |= Event{1} << s;
  }
  return k;
}

/// Partitional: equal or disjoint cells (the "strict" functions are
/// implemented as partitional ones; evident events are then unions of cells).
inline bool is_partitional(const InfoFunction& pf) {
  for (int s = 0; s < pf.states; ++s) {
    for (int t = 0; t < pf.states; ++t) {
      Event a = pf.p[s], b = pf.p[t];
      if ((a & b) != 0 && a != b) return false;
    }
  }
  return true;
}

/// Builds the partitional information function with the given cells.
inline InfoFunction partition_info(int states, const std::vector<Event>& cells) {
  InfoFunction pf;
  pf.states = states;
  pf.p.assign(static_cast<size_t>(states), 0);
  Event covered = 0;
  for (Event c : cells) {
    if (c & covered) throw std::invalid_argument("partition_info: overlapping cells");
    covered |= c;
    for (int s = 0; s < states; ++s) {
      if (c & (Event{1} << s)) pf.p[s] = c;
    }
  }
  if (covered != full_event(states))
    throw std::invalid_argument("partition_info: cells do not cover the space");
  return pf;
}

struct AxiomReport {
  bool k1 = false;  // K(S) = S
  bool k2 = false;  // monotone
  bool k3 = false;  // K(E and F) = K(E) and K(F)
  bool k4 = false;  // K(E) subseteq E
  bool k5 = false;  // K(K(E)) = K(E)            (transparency)
  bool k6 = false;  // S \ K(E) = K(S \ K(E))    (wisdom: aware of not knowing)
  bool exhaustive = false;
};

/// Verifies the knowledge axioms. Exhaustive over all events for m <= 16,
/// and over all event pairs for m <= 10; otherwise 1000 seeded samples per
/// axiom. A precomputed K table keeps the exhaustive sweeps cheap.
inline AxiomReport check_axioms(const InfoFunction& pf, uint64_t seed = 1) {
  pf.validate();
  AxiomReport rep;
  const Event full = full_event(pf.states);
  rep.k1 = knowledge(pf, full) == full;
  const bool single_exhaustive = pf.states <= 16;
  const bool pairs_exhaustive = pf.states <= 10;
  rep.exhaustive = single_exhaustive && pairs_exhaustive;
  rep.k2 = rep.k3 = rep.k4 = rep.k5 = rep.k6 = true;

  std::vector<Event> ktab;
  if (single_exhaustive) {
    ktab.resize(size_t{1} << pf.states);
    for (Event e = 0;; ++e) {
      ktab[e] = knowledge(pf, e);
      if (e == full) break;
    }
  }
  auto k_of = [&](Event e) { return ktab.empty() ? knowledge(pf, e) : ktab[e]; };
  auto check_single = [&](Event e) {
    Event ke = k_of(e);
    if (ke & ~e) rep.k4 = false;
    if (k_of(ke) != ke) rep.k5 = false;
    if ((full & ~ke) != k_of(full & ~ke)) rep.k6 = false;
  };
  auto check_pair = [&](Event e, Event f) {
    if (k_of(e & f) != (k_of(e) & k_of(f))) rep.k3 = false;
    if (k_of(e & f) & ~k_of(f)) rep.k2 = false;  // monotone on (e & f) inside f
  };

  if (single_exhaustive) {
    for (Event e = 0;; ++e) {
      check_single(e);
      if (e == full) break;
    }
  } else {
    Rng rng(seed);
    for (int it = 0; it < 1000; ++it) check_single(static_cast<Event>(rng.next_u64()) & full);
  }
  if (pairs_exhaustive) {
    for (Event e = 0;; ++e) {
      for (Event f = 0;; ++f) {
        check_pair(e, f);
        if (f == full) break;
      }
      if (e == full) break;
    }
  } else {
    Rng rng(seed + 1);
    for (int it = 0; it < 1000; ++it) {
      check_pair(static_cast<Event>(rng.next_u64()) & full,
                 static_cast<Event>(rng.next_u64()) & full);
    }
  }
  return rep;
}

struct CommonKnowledge {
  bool holds = false;
  Event evident_core = 0;  // largest event inside E evident for every agent
};

/// Greatest-fixpoint computation of the evident core of E; E is common
/// knowledge at sigma exactly when sigma lies in the core.
inline CommonKnowledge common_knowledge(const std::vector<InfoFunction>& agents, Event e,
                                        int sigma) {
  if (agents.empty()) throw std::invalid_argument("common_knowledge: need an agent");
  for (const auto& pf : agents) pf.validate();
  if (sigma < 0 || sigma >= agents[0].states)
    throw std::invalid_argument("common_knowledge: state out of range");
  Event f = e;
  for (;;) {
    Event next = f;
    for (const auto& pf : agents) next &= knowledge(pf, f);
    if (next == f) break;
    f = next;
  }
  return CommonKnowledge{(f & (Event{1} << sigma)) != 0, f};
}

/// K_{i1}(K_{i2}(...K_{im}(E)...)) applied right to left.
inline Event nested_knowledge(const std::vector<InfoFunction>& agents, Event e,
                              const std::vector<int>& sequence) {
  if (sequence.empty()) throw std::invalid_argument("nested_knowledge: empty sequence");
  Event cur = e;
  for (size_t k = sequence.size(); k-- > 0;) {
    int i = sequence[k];
    if (i < 0 || i >= static_cast<int>(agents.size()))
      throw std::invalid_argument("nested_knowledge: agent index out of range");
    cur = knowledge(agents[static_cast<size_t>(i)], cur);
  }
  return cur;
}

/// Pr(E given A), with the convention Pr(E given A) = 0 when Pr(A) = 0.
inline double conditional_probability(const std::vector<double>& prior, Event e, Event a) {
  double pa = 0.0, pea = 0.0;
  for (size_t s = 0; s < prior.size(); ++s) {
    Event bit = Event{1} << s;
    if (a & bit) {
      pa += prior[s];
      if (e & bit) pea += prior[s];
    }
  }
  return pa > 0.0 ? pea / pa : 0.0;
}

struct AgreementScan {
  std::vector<double> estimate1, estimate2;  // per-state conditionals
  // States where, for some specific pair eta1 != eta2, the event "agent 1
  // estimates eta1 and agent 2 estimates eta2" is common knowledge. Empty
  // whenever both information functions are partitional.
  std::vector<int> value_disagreement_states;
  // The broad event "the agents' estimates differ", and the states where it
  // is common knowledge (nonempty even for partitional functions).
  Event disagreement_event = 0;
  std::vector<int> disagreement_ck_states;
};

/// Scans for states in which differing conditional estimates on E are
/// common knowledge, following the strict-information proposition's
/// construction E_i = { sigma | Pr(E | P_i(sigma)) = eta_i }.
inline AgreementScan agreement_scan(const InfoFunction& p1, const InfoFunction& p2,
                                    const std::vector<double>& prior, Event e) {
  p1.validate();
  p2.validate();
  if (static_cast<int>(prior.size()) != p1.states || p1.states != p2.states)
    throw std::invalid_argument("agreement_scan: size mismatch");
  double total = 0.0;
  for (double p : prior) {
    if (p < 0.0) throw std::invalid_argument("agreement_scan: negative prior");
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-12)
    throw std::invalid_argument("agreement_scan: prior does not sum to 1");
  const int m = p1.states;
  AgreementScan out;
  out.estimate1.resize(m);
  out.estimate2.resize(m);
  for (int s = 0; s < m; ++s) {
    out.estimate1[s] = conditional_probability(prior, e, p1.p[s]);
    out.estimate2[s] = conditional_probability(prior, e, p2.p[s]);
  }
  std::vector<InfoFunction> both{p1, p2};
  for (int s = 0; s < m; ++s) {
    if (out.estimate1[s] != out.estimate2[s]) out.disagreement_event |= Event{1} << s;
  }
  // specific value pairs, as in the proposition's proof
  std::vector<int> hits;
  for (int s = 0; s < m; ++s) {
    double eta1 = out.estimate1[s], eta2 = out.estimate2[s];
    if (eta1 == eta2) continue;
    Event e1 = 0, e2 = 0;
    for (int t = 0; t < m; ++t) {
      if (out.estimate1[t] == eta1) e1 |= Event{1} << t;
      if (out.estimate2[t] == eta2) e2 |= Event{1} << t;
    }
    if (common_knowledge(both, e1 & e2, s).holds) hits.push_back(s);
  }
  out.value_disagreement_states = std::move(hits);
  for (int s = 0; s < m; ++s) {
    if (common_knowledge(both, out.disagreement_event, s).holds)
      out.disagreement_ck_states.push_back(s);
  }
  return out;
}

// ---- the red hats scenario ----

/// Three girls, hats red or white; state bit i set = girl i wears red.
/// The teacher rules out the all-white state, then counts; silence after a
/// count eliminates the states in which someone would have known her color.
struct RedHatsReport {
  double entropy_initial = 0.0;             // log2 8 = 3
  double entropy_after_announcement = 0.0;  // log2 7
  std::vector<int> resolution_round;        // per state; 0 = ruled out upfront
  std::vector<std::vector<int>> raisers;    // girls raising at that state's round
};

inline RedHatsReport red_hats_demo() {
  const int girls = 3, states = 8;
  const Event all_white = 0;
  RedHatsReport rep;
  rep.entropy_initial = std::log2(static_cast<double>(states));
  rep.entropy_after_announcement = std::log2(static_cast<double>(states - 1));
  rep.resolution_round.assign(states, 0);
  rep.raisers.assign(states, {});

  Event alive = full_event(states) & ~(Event{1} << all_white);
  for (int round = 1; round <= girls && alive; ++round) {
    Event resolved = 0;
    for (int s = 0; s < states; ++s) {
      if (!(alive & (Event{1} << s))) continue;
      std::vector<int> raising;
      for (int g = 0; g < girls; ++g) {
        Event cell = (Event{1} << s) | (Event{1} << (s ^ (1 << g)));
        // girl g knows her color iff only one candidate state survives
        if (__builtin_popcount(cell & alive) == 1) raising.push_back(g);
      }
      if (!raising.empty()) {
        resolved |= Event{1} << s;
        rep.resolution_round[s] = round;
        rep.raisers[s] = raising;
      }
    }
    alive &= ~resolved;
  }
  return rep;
}

}  // namespace know
}  // namespace ludus

#endif  // LUDUS_EPISTEMIC_HPP
