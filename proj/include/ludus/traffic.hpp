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

#ifndef LUDUS_TRAFFIC_HPP
#define LUDUS_TRAFFIC_HPP

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace ludus {
namespace traffic {

/// Per-edge congestion cost at integer load, either affine a*load + b or an
/// explicit table for loads 1..table.size().
struct EdgeCost {
  bool affine = true;
  long long a = 0, b = 0;
  std::vector<long long> table;

  static EdgeCost make_affine(long long a, long long b) {
    EdgeCost c;
    c.affine = true;
    c.a = a;
    c.b = b;
    return c;
  }
  static EdgeCost make_table(std::vector<long long> t) {
    EdgeCost c;
    c.affine = false;
    c.table = std::move(t);
    return c;
  }

  long long at(int load) const {
    if (load < 1) throw std::invalid_argument("EdgeCost: load must be >= 1");
    if (affine) return a * load + b;
    if (static_cast<size_t>(load) > table.size())
      throw std::domain_error("EdgeCost: load exceeds cost-table domain");
    return table[static_cast<size_t>(load) - 1];
  }
};

struct Edge {
  int from = 0, to = 0;
  EdgeCost cost;
};

/// A unit player with an enumerated set of paths (edge-index sequences).
struct PlayerSpec {
  int origin = 0, dest = 0;
  std::vector<std::vector<int>> paths;
};

struct CongestionInstance {
  int node_count = 0;
  std::vector<Edge> edges;
  std::vector<PlayerSpec> players;

  void validate() const {
    for (const auto& e : edges) {
      if (e.from < 0 || e.from >= node_count || e.to < 0 || e.to >= node_count)
        throw std::invalid_argument("CongestionInstance: edge endpoint out of range");
    }
    for (const auto& pl : players) {
      if (pl.paths.empty())
        throw std::invalid_argument("CongestionInstance: player without paths");
      for (const auto& path : pl.paths) {
        int at = pl.origin;
        for (int e : path) {
          if (e < 0 || e >= static_cast<int>(edges.size()))
            throw std::invalid_argument("CongestionInstance: bad edge index in path");
          if (edges[e].from != at)
            throw std::invalid_argument("CongestionInstance: path does not chain");
          at = edges[e].to;
        }
        if (at != pl.dest)
          throw std::invalid_argument("CongestionInstance: path misses destination");
      }
    }
  }
};

/// Assignment of one path index per player.
struct FlowState {
  std::vector<int> choice;
};

inline std::vector<int> edge_loads(const CongestionInstance& inst, const FlowState& flow) {
  if (flow.choice.size() != inst.players.size())
    throw std::invalid_argument("edge_loads: one choice per player required");
  std::vector<int> loads(inst.edges.size(), 0);
  for (size_t i = 0; i < inst.players.size(); ++i) {
    int c = flow.choice[i];
    if (c < 0 || c >= static_cast<int>(inst.players[i].paths.size()))
      throw std::invalid_argument("edge_loads: path choice out of range");
    for (int e : inst.players[i].paths[c]) ++loads[e];
  }
  return loads;
}

/// Rosenthal potential Phi(x) = sum_e sum_{t=1..x_e} c_e(t).
inline long long potential(const CongestionInstance& inst, const FlowState& flow) {
  auto loads = edge_loads(inst, flow);
  long long phi = 0;
  for (size_t e = 0; e < loads.size(); ++e) {
    for (int t = 1; t <= loads[e]; ++t) phi += inst.edges[e].cost.at(t);
  }
  return phi;
}

/// Player's congestion cost along the chosen path: sum of c_e(x_e) over its
/// edges (the marginal-potential form).
inline long long player_cost(const CongestionInstance& inst, const FlowState& flow,
                             size_t player) {
  auto loads = edge_loads(inst, flow);
  long long total = 0;
  for (int e : inst.players[player].paths[flow.choice[player]])
    total += inst.edges[e].cost.at(loads[e]);
  return total;
}

/// The load-weighted variant sum of c_e(x_e) * x_e along the path (the
/// text's other reading; not the one driving the dynamics).
inline long long player_cost_weighted(const CongestionInstance& inst, const FlowState& flow,
                                      size_t player) {
  auto loads = edge_loads(inst, flow);
  long long total = 0;
  for (int e : inst.players[player].paths[flow.choice[player]])
    total += inst.edges[e].cost.at(loads[e]) * loads[e];
  return total;
}

/// Total congestion cost C(x) = sum_e c_e(x_e) x_e.
inline long long total_cost(const CongestionInstance& inst, const FlowState& flow) {
  auto loads = edge_loads(inst, flow);
  long long total = 0;
  for (size_t e = 0; e < loads.size(); ++e) {
    if (loads[e] > 0) total += inst.edges[e].cost.at(loads[e]) * loads[e];
  }
  return total;
}

namespace detail {

/// Cost of `player` taking `path` when everyone else keeps `flow` choices
/// (the player is removed and re-added on the candidate path).
inline long long deviation_cost(const CongestionInstance& inst, const FlowState& flow,
                                size_t player, int path) {
  auto loads = edge_loads(inst, flow);
  for (int e : inst.players[player].paths[flow.choice[player]]) --loads[e];
  for (int e : inst.players[player].paths[path]) ++loads[e];
  long long total = 0;
  for (int e : inst.players[player].paths[path]) total += inst.edges[e].cost.at(loads[e]);
  return total;
}

}  // namespace detail

/// True when no player has a strictly cheaper alternative path, others
/// held fixed.
inline bool is_nash_flow(const CongestionInstance& inst, const FlowState& flow) {
  for (size_t i = 0; i < inst.players.size(); ++i) {
    long long current = player_cost(inst, flow, i);
    for (int p = 0; p < static_cast<int>(inst.players[i].paths.size()); ++p) {
      if (p == flow.choice[i]) continue;
      if (detail::deviation_cost(inst, flow, i, p) < current) return false;
    }
  }
  return true;
}

struct DynamicsStep {
  size_t player = 0;
  int from_path = 0, to_path = 0;
  long long cost_before = 0, cost_after = 0;
  long long potential_after = 0;
  long long total_cost_after = 0;
};

struct DynamicsResult {
  FlowState flow;
  long long iterations = 0;
  bool converged = false;
  std::vector<DynamicsStep> trace;
};

/// Best-response dynamics: repeatedly the lexicographically first player
/// with a strictly improving switch moves to its cheapest alternative
/// (ties by path order). The potential strictly decreases each step, so the
/// dynamics terminates.
inline DynamicsResult best_response_dynamics(const CongestionInstance& inst,
                                             FlowState initial, long long max_iters) {
  if (max_iters < 1) throw std::invalid_argument("best_response_dynamics: max_iters < 1");
  inst.validate();
  edge_loads(inst, initial);  // validates the choice vector
  DynamicsResult res;
  res.flow = std::move(initial);
  while (res.iterations < max_iters) {
    bool moved = false;
    for (size_t i = 0; i < inst.players.size() && !moved; ++i) {
      long long current = player_cost(inst, res.flow, i);
      int best_path = -1;
      long long best_cost = current;
      for (int p = 0; p < static_cast<int>(inst.players[i].paths.size()); ++p) {
        if (p == res.flow.choice[i]) continue;
        long long c = detail::deviation_cost(inst, res.flow, i, p);
        if (c < best_cost) {
          best_cost = c;
          best_path = p;
        }
      }
      if (best_path >= 0) {
        DynamicsStep step;
        step.player = i;
        step.from_path = res.flow.choice[i];
        step.to_path = best_path;
        step.cost_before = current;
        step.cost_after = best_cost;
        res.flow.choice[i] = best_path;
        step.potential_after = potential(inst, res.flow);
        step.total_cost_after = total_cost(inst, res.flow);
        res.trace.push_back(step);
        ++res.iterations;
        moved = true;
      }
    }
    if (!moved) {
      res.converged = true;
      break;
    }
  }
  return res;
}

// ---- the Braess network ----

/// Four users from s to t over paths P = s-r-t, Ptilde = s-q-t and
/// Q = s-r-q-t, with c_sr(x) = x, c_sq = 4, c_rt = 4, c_qt(x) = x and the
/// cross link r-q costing `cross` (10 in the base network, 0 after the
/// "improvement").
inline CongestionInstance braess_network(long long cross_cost) {
  CongestionInstance inst;
  inst.node_count = 4;  // s=0, r=1, q=2, t=3
  inst.edges = {
      {0, 1, EdgeCost::make_affine(1, 0)},          // s-r: x
      {0, 2, EdgeCost::make_affine(0, 4)},          // s-q: 4
      {1, 3, EdgeCost::make_affine(0, 4)},          // r-t: 4
      {2, 3, EdgeCost::make_affine(1, 0)},          // q-t: x
      {1, 2, EdgeCost::make_affine(0, cross_cost)}  // r-q
  };
  PlayerSpec user;
  user.origin = 0;
  user.dest = 3;
  user.paths = {{0, 2}, {1, 3}, {0, 4, 3}};  // P, Ptilde, Q
  inst.players.assign(4, user);
  return inst;
}

struct BraessReport {
  long long base_total = 0;            // Nash flow total in the base network
  bool base_is_nash = false;
  long long switch_cost_before = 0;    // 6: a P user's cost at the old equilibrium
  long long switch_cost_after = 0;     // 5: the same user after switching to Q
  long long improved_total = 0;        // 25: total after that first greedy switch
  long long final_total = 0;           // 26: total once the dynamics re-settles
  bool final_is_nash = false;
  bool final_contains_q = false;
  bool potential_monotone = false;     // potential decreased along every step
  long long dynamics_steps = 0;
};

/// Reproduces the paradox: improving the cross link from cost 10 to 0
/// raises the settled totals (24 -> 25 after the first selfish switch; the
/// fully re-settled flow costs even more).
inline BraessReport braess_demo() {
  BraessReport rep;
  auto base = braess_network(10);
  FlowState start{{0, 0, 0, 0}};  // everyone on P
  auto base_run = best_response_dynamics(base, start, 1000);
  rep.base_total = total_cost(base, base_run.flow);
  rep.base_is_nash = base_run.converged && is_nash_flow(base, base_run.flow);

  auto improved = braess_network(0);
  // the old equilibrium is re-evaluated in the improved network
  FlowState eq = base_run.flow;
  // a P user's switch to Q, the classic demonstration of the paradox
  size_t p_user = 0;
  for (size_t i = 0; i < 4; ++i) {
    if (eq.choice[i] == 0) p_user = i;
  }
  rep.switch_cost_before = player_cost(improved, eq, p_user);
  rep.switch_cost_after = detail::deviation_cost(improved, eq, p_user, 2);
  FlowState after = eq;
  after.choice[p_user] = 2;
  rep.improved_total = total_cost(improved, after);

  auto improved_run = best_response_dynamics(improved, eq, 1000);
  rep.final_total = total_cost(improved, improved_run.flow);
  rep.final_is_nash = improved_run.converged && is_nash_flow(improved, improved_run.flow);
  for (int c : improved_run.flow.choice) {
    if (c == 2) rep.final_contains_q = true;
  }
  rep.dynamics_steps = improved_run.iterations;
  rep.potential_monotone = true;
  long long prev = potential(improved, eq);
  for (const auto& step : improved_run.trace) {
    if (step.potential_after >= prev) rep.potential_monotone = false;
    prev = step.potential_after;
  }
  return rep;
}

}  // namespace traffic
}  // namespace ludus

#endif  // LUDUS_TRAFFIC_HPP
