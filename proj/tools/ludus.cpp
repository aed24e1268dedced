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
//
// ludus: the command-line front end. One subcommand tree per module; JSON
// in, JSON (or a plain table) out. All randomness flows from --seed, and
// identical inputs with identical seeds produce byte-identical output.

#include <chrono>
#include <functional>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ludus/betting.hpp"
#include "ludus/boltzmann.hpp"
#include "ludus/combinatorial.hpp"
#include "ludus/coopgame.hpp"
#include "ludus/epistemic.hpp"
#include "ludus/interaction.hpp"
#include "ludus/lp.hpp"
#include "ludus/rational.hpp"
#include "ludus/traffic.hpp"
#include "ludus/zerosum.hpp"

using json = nlohmann::ordered_json;
using ludus::Rational;

namespace {

constexpr const char* kVersion = "0.1.0";

// ---- deterministic JSON dumping (floats at 12 significant digits) ----

std::string format_double(double v) {
  if (std::isinf(v)) return v > 0 ? "\"inf\"" : "\"-inf\"";
  if (std::isnan(v)) return "\"nan\"";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

void dump(const json& node, std::string* out) {
  switch (node.type()) {
    case json::value_t::object: {
      out->push_back('{');
      bool first = true;
      for (auto it = node.begin(); it != node.end(); ++it) {
        if (!first) out->push_back(',');
        first = false;
        *out += json(it.key()).dump();
        out->push_back(':');
        dump(it.value(), out);
      }
      out->push_back('}');
      break;
    }
    case json::value_t::array: {
      out->push_back('[');
      bool first = true;
      for (const auto& item : node) {
        if (!first) out->push_back(',');
        first = false;
        dump(item, out);
      }
      out->push_back(']');
      break;
    }
    case json::value_t::number_float:
      *out += format_double(node.get<double>());
      break;
    default:
      *out += node.dump();
  }
}

void dump_table(const json& node, const std::string& prefix, std::string* out) {
  if (node.is_object()) {
    for (auto it = node.begin(); it != node.end(); ++it)
      dump_table(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
  } else if (node.is_array()) {
    bool scalar = true;
    for (const auto& item : node) scalar = scalar && !item.is_structured();
    if (scalar) {
      std::string line;
      dump(node, &line);
      *out += prefix + "  " + line + "\n";
    } else {
      size_t i = 0;
      for (const auto& item : node)
        dump_table(item, prefix + "[" + std::to_string(i++) + "]", out);
    }
  } else {
    std::string line;
    dump(node, &line);
    *out += prefix + "  " + line + "\n";
  }
}

struct Options {
  std::string format = "json";
  std::optional<uint64_t> seed;
  double tolerance = 1e-9;
  bool timings = false;
};

uint64_t fnv1a(const std::string& bytes) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open input file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// ---- parsing helpers ----

Rational parse_rational(const json& v, const char* what) {
  if (v.is_number_integer()) return Rational(v.get<long long>());
  if (v.is_string()) return Rational::from_string(v.get<std::string>());
  throw std::invalid_argument(std::string(what) +
                              ": rationals must be integers or \"p/q\" strings");
}

std::vector<Rational> parse_rational_vector(const json& v, const char* what) {
  std::vector<Rational> out;
  for (const auto& x : v) out.push_back(parse_rational(x, what));
  return out;
}

std::vector<std::vector<Rational>> parse_rational_matrix(const json& v, const char* what) {
  std::vector<std::vector<Rational>> out;
  for (const auto& row : v) out.push_back(parse_rational_vector(row, what));
  return out;
}

std::vector<Rational> parse_rational_csv(const std::string& csv) {
  std::vector<Rational> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(Rational::from_string(item));
  return out;
}

std::vector<long long> parse_int_list(const std::string& csv) {
  std::vector<long long> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stoll(item));
  return out;
}

json rational_json(const Rational& r) {
  if (r.den() == ludus::BigInt(1) && r.num().fits_int64())
    return json(std::strtoll(r.num().to_string().c_str(), nullptr, 10));
  return json(r.to_string());
}

json rational_vector_json(const std::vector<Rational>& v) {
  json arr = json::array();
  for (const auto& x : v) arr.push_back(rational_json(x));
  return arr;
}

json double_vector_json(const std::vector<double>& v) {
  json arr = json::array();
  for (double x : v) arr.push_back(x);
  return arr;
}

// TU game file: {"n":4,"values":[...dense by mask]} or {"n":4,"values":{"0b0011":1,...}}
template <class V, class Parse>
ludus::coop::TuGame<V> parse_tu_game(const json& j, Parse parse) {
  int n = j.at("n").get<int>();
  ludus::coop::TuGame<V> game(n);
  const auto& values = j.at("values");
  if (values.is_array()) {
    if (values.size() != game.coalition_count())
      throw std::invalid_argument("tu game: dense values array must have 2^n entries");
    for (size_t s = 0; s < values.size(); ++s)
      game[static_cast<ludus::coop::Mask>(s)] = parse(values[s]);
  } else {
    for (auto it = values.begin(); it != values.end(); ++it) {
      const std::string& key = it.key();
      unsigned long mask = (key.rfind("0b", 0) == 0) ? std::stoul(key.substr(2), nullptr, 2)
                                                     : std::stoul(key);
      if (mask >= game.coalition_count())
        throw std::invalid_argument("tu game: coalition key out of range: " + key);
      game[static_cast<ludus::coop::Mask>(mask)] = parse(it.value());
    }
  }
  return game;
}

ludus::coop::TuGame<Rational> parse_tu_game_rational(const json& j) {
  return parse_tu_game<Rational>(j, [](const json& v) { return parse_rational(v, "tu game"); });
}

ludus::coop::TuGame<double> parse_tu_game_double(const json& j) {
  return parse_tu_game<double>(j, [](const json& v) { return v.get<double>(); });
}

ludus::traffic::CongestionInstance parse_traffic(const json& j) {
  ludus::traffic::CongestionInstance inst;
  inst.node_count = j.at("nodes").get<int>();
  for (const auto& e : j.at("edges")) {
    ludus::traffic::Edge edge;
    edge.from = e.at("from").get<int>();
    edge.to = e.at("to").get<int>();
    const auto& cost = e.at("cost");
    if (cost.contains("affine")) {
      edge.cost = ludus::traffic::EdgeCost::make_affine(cost["affine"][0].get<long long>(),
                                                        cost["affine"][1].get<long long>());
    } else {
      std::vector<long long> table;
      for (const auto& t : cost.at("table")) table.push_back(t.get<long long>());
      edge.cost = ludus::traffic::EdgeCost::make_table(std::move(table));
    }
    inst.edges.push_back(edge);
  }
  for (const auto& p : j.at("players")) {
    ludus::traffic::PlayerSpec spec;
    spec.origin = p.at("origin").get<int>();
    spec.dest = p.at("dest").get<int>();
    for (const auto& path : p.at("paths"))
      spec.paths.push_back(path.get<std::vector<int>>());
    inst.players.push_back(std::move(spec));
  }
  inst.validate();
  return inst;
}

ludus::qi::CVector parse_complex_vector(const json& row) {
  ludus::qi::CVector r;
  for (const auto& x : row) {
    if (x.is_array()) {
      r.push_back({x[0].get<double>(), x[1].get<double>()});
    } else {
      r.push_back({x.get<double>(), 0.0});
    }
  }
  return r;
}

ludus::qi::CMatrix parse_complex_matrix(const json& j) {
  ludus::qi::CMatrix c;
  for (const auto& row : j) c.push_back(parse_complex_vector(row));
  return c;
}

ludus::qi::RMatrix parse_real_matrix(const json& j) {
  ludus::qi::RMatrix a;
  for (const auto& row : j) a.push_back(row.get<std::vector<double>>());
  return a;
}

// ---- command implementations ----

json cmd_lp_solve(const json& in) {
  ludus::lp::LinearProgram p;
  std::string sense = in.value("sense", "max");
  p.sense = (sense == "min") ? ludus::lp::Sense::Minimize : ludus::lp::Sense::Maximize;
  p.objective = parse_rational_vector(in.at("c"), "lp");
  p.constraint_matrix = parse_rational_matrix(in.at("A"), "lp");
  p.rhs = parse_rational_vector(in.at("b"), "lp");
  auto sol = ludus::lp::solve(p);
  json out;
  switch (sol.status) {
    case ludus::lp::Status::Optimal: out["status"] = "optimal"; break;
    case ludus::lp::Status::Infeasible: out["status"] = "infeasible"; break;
    case ludus::lp::Status::Unbounded: out["status"] = "unbounded"; break;
  }
  if (sol.status == ludus::lp::Status::Optimal) {
    out["value"] = rational_json(sol.value);
    out["primal"] = rational_vector_json(sol.primal);
    out["dual"] = rational_vector_json(sol.dual);
    out["certified"] = ludus::lp::duality_certificate(p, sol);
  }
  return out;
}

ludus::zerosum::MatrixGame parse_matrix_game(const json& in) {
  ludus::zerosum::MatrixGame g;
  g.payoff = parse_rational_matrix(in.at("U"), "matrix game");
  g.validate();
  return g;
}

json cmd_zerosum_solve(const json& in) {
  auto sol = ludus::zerosum::solve_randomized(parse_matrix_game(in));
  json out;
  out["value"] = rational_json(sol.value);
  out["row_strategy"] = rational_vector_json(sol.profile.row_dist);
  out["col_strategy"] = rational_vector_json(sol.profile.col_dist);
  return out;
}

json cmd_zerosum_saddle(const json& in) {
  auto g = parse_matrix_game(in);
  json cells = json::array();
  for (auto [i, j] : ludus::zerosum::pure_equilibria(g)) {
    json cell;
    cell["row"] = i + 1;
    cell["col"] = j + 1;
    cell["value"] = rational_json(g.payoff[i][j]);
    cells.push_back(cell);
  }
  json out;
  out["saddle_points"] = cells;
  return out;
}

// bimatrix format {"A":[[...]],"B":[[...]],"profile":[[...],[...]],"mode":"cost"}
json cmd_zerosum_verify(const json& in) {
  auto game = ludus::zerosum::StrategicGame::from_bimatrix(
      in.at("A").get<std::vector<std::vector<double>>>(),
      in.at("B").get<std::vector<std::vector<double>>>());
  auto profile = in.at("profile").get<std::vector<std::vector<double>>>();
  auto mode = in.value("mode", "gain") == "cost" ? ludus::zerosum::Mode::Cost
                                                 : ludus::zerosum::Mode::Gain;
  json out;
  out["equilibrium"] = ludus::zerosum::verify_mixed_equilibrium(game, profile, mode);
  out["expected_utilities"] =
      double_vector_json(ludus::zerosum::nperson_expected_utility(game, profile));
  return out;
}

const char* player_name(ludus::comb::Player p) {
  return p == ludus::comb::Player::Left ? "left" : "right";
}

json cmd_comb(const std::string& action, const std::string& nim_csv,
              const std::string& frogs_csv, const std::string& subtraction_spec,
              int debruijn_n, bool misere, const std::string& first) {
  ludus::comb::Arena arena;
  ludus::comb::Game game = arena.empty_game();
  std::vector<long long> piles;
  if (!nim_csv.empty()) {
    piles = parse_int_list(nim_csv);
    game = arena.nim(piles);
  } else if (!frogs_csv.empty()) {
    auto nk = parse_int_list(frogs_csv);
    if (nk.size() != 2) throw std::invalid_argument("--frogs expects n,k");
    game = arena.frogs(static_cast<int>(nk[0]), static_cast<int>(nk[1]));
  } else if (!subtraction_spec.empty()) {
    auto colon = subtraction_spec.find(':');
    if (colon == std::string::npos)
      throw std::invalid_argument("--subtraction expects n:a,b,c");
    int n = std::stoi(subtraction_spec.substr(0, colon));
    std::vector<int> allowed;
    for (long long a : parse_int_list(subtraction_spec.substr(colon + 1)))
      allowed.push_back(static_cast<int>(a));
    game = arena.subtraction_game(n, allowed);
  } else if (debruijn_n >= 0) {
    game = arena.de_bruijn(debruijn_n);
  } else {
    throw std::invalid_argument(
        "specify a position: --nim, --frogs, --subtraction or --debruijn");
  }

  json out;
  if (action == "grundy" || action == "move") {
    int g = arena.grundy(game);
    out["grundy"] = g;
    out["winner"] = (g == 0) ? "second" : "first";
    if (action == "move") {
      if (piles.empty()) throw std::invalid_argument("comb move requires --nim piles");
      auto mv = ludus::comb::winning_move(piles);
      if (mv) {
        json move;
        move["pile"] = mv->first + 1;
        move["new_size"] = mv->second;
        out["move"] = move;
      } else {
        out["move"] = nullptr;
      }
    }
  } else {  // outcome
    ludus::comb::Rule rule =
        misere ? ludus::comb::Rule::Misere : ludus::comb::Rule::Normal;
    ludus::comb::Player mover = (first == "R" || first == "right")
                                    ? ludus::comb::Player::Right
                                    : ludus::comb::Player::Left;
    auto winner = arena.outcome(game, mover, rule);
    out["rule"] = misere ? "misere" : "normal";
    out["first_mover"] = player_name(mover);
    out["winner"] = player_name(winner);
    out["winner_is"] = (winner == mover) ? "first" : "second";
  }
  return out;
}

json cmd_coop_shapley(const json& in) {
  json out;
  out["shapley"] = rational_vector_json(ludus::coop::shapley(parse_tu_game_rational(in)));
  return out;
}

json cmd_coop_banzhaf(const json& in) {
  json out;
  out["banzhaf"] = rational_vector_json(ludus::coop::banzhaf(parse_tu_game_rational(in)));
  return out;
}

json cmd_coop_core_check(const json& in, const std::string& alloc_csv, bool cost_mode) {
  auto game = parse_tu_game_rational(in);
  auto alloc = parse_rational_csv(alloc_csv);
  bool inside = ludus::coop::core_contains(
      game, alloc, cost_mode ? ludus::coop::CoreMode::Cost : ludus::coop::CoreMode::Profit);
  json out;
  out["mode"] = cost_mode ? "cost" : "profit";
  out["in_core"] = inside;
  return out;
}

json cmd_coop_core_nonempty(const json& in) {
  auto rep = ludus::coop::core_nonempty(parse_tu_game_rational(in));
  json out;
  out["nonempty"] = rep.nonempty;
  if (rep.nonempty) {
    out["witness"] = rational_vector_json(rep.witness);
  } else {
    out["deficit"] = rational_json(rep.deficit);
  }
  return out;
}

std::string mask_key(ludus::coop::Mask mask, int players) {
  std::string bits = "0b";
  for (int i = players - 1; i >= 0; --i) bits += (mask & (1u << i)) ? '1' : '0';
  return bits;
}

json cmd_coop_monge(const json& in, const std::string& c_csv) {
  auto game = parse_tu_game_rational(in);
  auto c = parse_rational_csv(c_csv);
  auto y = ludus::coop::monge_dual(game, c);
  json duals = json::object();
  for (const auto& [mask, value] : y) duals[mask_key(mask, game.players())] = rational_json(value);
  json out;
  out["primal"] = rational_vector_json(ludus::coop::monge_primal(game, c));
  out["dual"] = duals;
  out["extension_value"] = rational_json(ludus::coop::monge_extension(game, c));
  out["supermodular"] = ludus::coop::is_supermodular(game);
  return out;
}

json tu_game_json(const ludus::coop::TuGame<Rational>& game) {
  json values = json::array();
  for (size_t s = 0; s < game.coalition_count(); ++s)
    values.push_back(rational_json(game.value(static_cast<ludus::coop::Mask>(s))));
  json out;
  out["n"] = game.players();
  out["values"] = values;
  return out;
}

json cmd_coop_gen(const std::string& kind, const std::string& weights_csv,
                  const std::string& threshold, const json* network_cost) {
  json out;
  if (kind == "voting") {
    auto game = ludus::coop::voting_game(parse_rational_csv(weights_csv),
                                         Rational::from_string(threshold));
    out["game"] = tu_game_json(game);
  } else if (kind == "additive") {
    out["game"] = tu_game_json(ludus::coop::additive_game(parse_rational_csv(weights_csv)));
  } else if (kind == "network") {
    if (!network_cost)
      throw std::invalid_argument("network generator needs --file with a cost matrix");
    auto net = ludus::coop::network_game(
        parse_rational_matrix(network_cost->at("cost"), "network"));
    out["game"] = tu_game_json(net.game);
    out["greedy_charges"] = rational_vector_json(net.greedy_charges);
  } else {
    throw std::invalid_argument("unknown generator: " + kind);
  }
  return out;
}

json cmd_boltz_value(const json& in, double t, const std::string& convention) {
  auto conv = convention == "symmetric-diff" ? ludus::boltz::Convention::SymmetricDiff
                                             : ludus::boltz::Convention::MarginalDef;
  json out;
  out["T"] = t;
  out["value"] = double_vector_json(
      ludus::boltz::boltzmann_value(parse_tu_game_double(in), t, conv));
  return out;
}

json cmd_boltz_solve_t(const json& in, double mu) {
  std::vector<double> v = in.at("values").get<std::vector<double>>();
  double t = ludus::boltz::temperature_solve(v, mu);
  auto d = ludus::boltz::boltzmann_distribution(v, t);
  json out;
  out["T"] = t;
  out["mu"] = ludus::boltz::expected_value(d, v);
  out["entropy"] = ludus::boltz::entropy(d);
  return out;
}

json cmd_boltz_anneal(const json& in, const std::string& schedule_spec, long long steps,
                      uint64_t seed) {
  std::vector<double> v = in.at("values").get<std::vector<double>>();
  if (schedule_spec.rfind("geometric:", 0) != 0)
    throw std::invalid_argument("schedule must look like geometric:0.01:1.05");
  auto rest = schedule_spec.substr(10);
  auto colon = rest.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("schedule must look like geometric:0.01:1.05");
  double t0 = std::stod(rest.substr(0, colon));
  double growth = std::stod(rest.substr(colon + 1));
  auto res = ludus::boltz::simulated_annealing(
      v, ludus::boltz::geometric_schedule(t0, growth), steps, seed);
  json out;
  out["best_state"] = res.best_state;
  out["best_value"] = res.best_value;
  out["final_state"] = res.final_state;
  return out;
}

json cmd_bet_kelly(const std::string& p_str, const std::string& rho_str) {
  Rational pq = Rational::from_string(p_str);
  Rational rhoq = Rational::from_string(rho_str);
  ludus::bet::SimpleBet b{pq.to_double(), rhoq.to_double(), 1.0};
  json out;
  // exact fraction clamp(p - q/r, 0, 1) in rational arithmetic
  Rational r = rhoq - Rational(1);
  Rational frac(0);
  if (pq == Rational(1)) {
    frac = Rational(1);
  } else if (r > Rational(0)) {
    frac = pq - (Rational(1) - pq) / r;
    if (frac < Rational(0)) frac = Rational(0);
    if (frac > Rational(1)) frac = Rational(1);
  }
  out["fraction"] = frac.to_string();
  out["fraction_float"] = ludus::bet::kelly_fraction(b);
  return out;
}

json cmd_bet_alternatives(const json& in) {
  ludus::bet::AlternativesBet b;
  b.p = in.at("p").get<std::vector<double>>();
  b.rho = in.at("rho").get<std::vector<double>>();
  auto plan = ludus::bet::optimal_alternatives(b);
  json out;
  out["allocation"] = double_vector_json(plan.allocation);
  out["log_utility"] = plan.log_utility;
  return out;
}

json cmd_bet_doubling(double budget, const std::string& win) {
  double w = Rational::from_string(win).to_double();
  auto rep = ludus::bet::doubling_analysis(budget, w);
  json out;
  out["max_rounds"] = rep.max_rounds;
  out["ruin_prob"] = rep.ruin_prob;
  out["success_prob"] = rep.success_prob;
  out["net_gain_on_success"] = 1;
  return out;
}

json cmd_bet_channel(const json& in) {
  ludus::bet::Channel ch;
  ch.trust = in.at("trust").get<std::vector<std::vector<double>>>();
  if (in.contains("input")) {
    ch.input = in.at("input").get<std::vector<double>>();
  } else {
    ch.input.assign(ch.trust.size(), 1.0 / static_cast<double>(ch.trust.size()));
  }
  json out;
  out["transmission_rate"] = ludus::bet::transmission_rate(ch);
  out["conditional_entropy"] = ludus::bet::conditional_entropy(ch);
  auto cap = ludus::bet::channel_capacity(ch.trust, 1e-9);
  out["capacity"] = cap.capacity;
  out["capacity_gap"] = cap.gap;
  return out;
}

json cmd_traffic_solve(const json& in) {
  auto inst = parse_traffic(in);
  ludus::traffic::FlowState start;
  if (in.contains("initial")) {
    start.choice = in.at("initial").get<std::vector<int>>();
  } else {
    start.choice.assign(inst.players.size(), 0);
  }
  long long space = 1;
  for (const auto& p : inst.players) space *= static_cast<long long>(p.paths.size());
  auto res = ludus::traffic::best_response_dynamics(inst, start, space + 16);
  json out;
  out["converged"] = res.converged;
  out["iterations"] = res.iterations;
  out["choices"] = res.flow.choice;
  out["total_cost"] = ludus::traffic::total_cost(inst, res.flow);
  out["potential"] = ludus::traffic::potential(inst, res.flow);
  out["is_nash"] = ludus::traffic::is_nash_flow(inst, res.flow);
  return out;
}

json cmd_traffic_braess() {
  auto rep = ludus::traffic::braess_demo();
  json out;
  out["base_total"] = rep.base_total;
  out["improved_total"] = rep.improved_total;
  out["switch_cost_before"] = rep.switch_cost_before;
  out["switch_cost_after"] = rep.switch_cost_after;
  out["final_total"] = rep.final_total;
  out["final_is_nash"] = rep.final_is_nash;
  return out;
}

ludus::know::InfoFunction parse_info(const json& j, int states) {
  ludus::know::InfoFunction pf;
  pf.states = states;
  for (const auto& cell : j) pf.p.push_back(cell.get<ludus::know::Event>());
  pf.validate();
  return pf;
}

json cmd_know_ck(const json& in) {
  int states = in.at("states").get<int>();
  std::vector<ludus::know::InfoFunction> agents;
  for (const auto& a : in.at("agents")) agents.push_back(parse_info(a, states));
  auto ck = ludus::know::common_knowledge(agents, in.at("event").get<ludus::know::Event>(),
                                          in.at("state").get<int>());
  json out;
  out["common_knowledge"] = ck.holds;
  out["evident_core"] = ck.evident_core;
  return out;
}

json cmd_know_axioms(const json& in, uint64_t seed) {
  auto pf = parse_info(in.at("p"), in.at("states").get<int>());
  auto rep = ludus::know::check_axioms(pf, seed);
  json out;
  out["K1"] = rep.k1;
  out["K2"] = rep.k2;
  out["K3"] = rep.k3;
  out["K4"] = rep.k4;
  out["K5"] = rep.k5;
  out["K6"] = rep.k6;
  out["exhaustive"] = rep.exhaustive;
  out["partitional"] = ludus::know::is_partitional(pf);
  return out;
}

json cmd_know_redhats() {
  auto rep = ludus::know::red_hats_demo();
  json out;
  out["entropy_initial_bits"] = rep.entropy_initial;
  out["entropy_after_announcement_bits"] = rep.entropy_after_announcement;
  json rounds = json::array();
  for (int s = 0; s < 8; ++s) {
    json st;
    std::string hats;
    for (int g = 0; g < 3; ++g) hats += (s & (1 << g)) ? 'R' : 'W';
    st["hats"] = hats;
    st["resolved_at_count"] = rep.resolution_round[s];
    st["raising"] = rep.raisers[s];
    rounds.push_back(st);
  }
  out["states"] = rounds;
  return out;
}

json cmd_qi_spectral(const json& in) {
  auto sf = ludus::qi::spectral_decomposition(parse_complex_matrix(in.at("matrix")));
  json out;
  out["eigenvalues"] = double_vector_json(sf.eigenvalues);
  json vecs = json::array();
  for (const auto& v : sf.eigenvectors) {
    json vec = json::array();
    for (const auto& x : v) vec.push_back(json::array({x.re, x.im}));
    vecs.push_back(vec);
  }
  out["eigenvectors"] = vecs;
  return out;
}

json cmd_qi_measure(const json& matrix_in, const json& vector_in) {
  auto c = parse_complex_matrix(matrix_in.at("matrix"));
  auto v = parse_complex_vector(vector_in.at("vector"));
  auto m = ludus::qi::measurement(c, v);
  json out;
  out["distribution"] = double_vector_json(m.distribution);
  out["expectation"] = m.expectation;
  return out;
}

json cmd_qi_decompose(const json& in) {
  auto a = parse_real_matrix(in.at("matrix"));
  auto [plus, minus] = ludus::qi::symmetry_decomposition(a);
  auto cm = ludus::qi::hermitian_map(a);
  json jp = json::array(), jm = json::array(), jh = json::array();
  for (size_t i = 0; i < a.size(); ++i) {
    jp.push_back(double_vector_json(plus[i]));
    jm.push_back(double_vector_json(minus[i]));
    json row = json::array();
    for (size_t j = 0; j < a.size(); ++j)
      row.push_back(json::array({cm[i][j].re, cm[i][j].im}));
    jh.push_back(row);
  }
  json out;
  out["symmetric"] = jp;
  out["skew"] = jm;
  out["hermitian"] = jh;
  out["selfadjoint"] = ludus::qi::is_selfadjoint(cm);
  return out;
}

// ---- demos: classic worked scenarios next to their reference numbers ----

json cmd_demo(const std::string& name) {
  json out;
  if (name == "braess") {
    out = cmd_traffic_braess();
    out["reference"]["base_total"] = 24;
    out["reference"]["improved_total"] = 25;
  } else if (name == "redhats") {
    out = cmd_know_redhats();
    out["reference"]["entropy_initial_bits"] = 3.0;
    out["reference"]["entropy_after_announcement_bits"] = std::log2(7.0);
  } else if (name == "nim1357") {
    ludus::comb::Arena arena;
    out["grundy"] = arena.grundy(arena.nim({1, 3, 5, 7}));
    out["winner"] = "second";
    auto mv = ludus::comb::winning_move({1, 3, 5, 4});
    json move;
    move["pile"] = mv->first + 1;
    move["new_size"] = mv->second;
    out["reply_after_7_to_4"] = move;
    out["reference"]["grundy"] = 0;
    out["reference"]["reply"] = "remove the entire 3-pile";
  } else if (name == "greedy-network") {
    std::vector<std::vector<Rational>> cost{
        {Rational(0), Rational(100), Rational(101)},
        {Rational(100), Rational(0), Rational(2)},
        {Rational(101), Rational(2), Rational(0)}};
    auto net = ludus::coop::network_game(cost);
    out["charges"] = rational_vector_json(net.greedy_charges);
    out["total"] = rational_json(net.game[0b11]);
    out["charges_in_cost_core"] =
        ludus::coop::core_contains(net.game, net.greedy_charges, ludus::coop::CoreMode::Cost);
    out["reference"]["charges"] = json::array({100, 2});
    out["reference"]["total"] = 102;
  } else if (name == "prisoners") {
    auto pd =
        ludus::zerosum::StrategicGame::from_bimatrix({{7, 1}, {9, 3}}, {{7, 9}, {1, 3}});
    json eqs = json::array();
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        std::vector<std::vector<double>> prof(2, std::vector<double>(2, 0.0));
        prof[0][i] = 1.0;
        prof[1][j] = 1.0;
        if (ludus::zerosum::verify_mixed_equilibrium(pd, prof, ludus::zerosum::Mode::Cost)) {
          auto u = ludus::zerosum::nperson_expected_utility(pd, prof);
          json eq;
          eq["profile"] = json::array({i + 1, j + 1});
          eq["utilities"] = double_vector_json(u);
          eqs.push_back(eq);
        }
      }
    }
    out["cost_equilibria"] = eqs;
    std::vector<std::vector<double>> silent{{0, 1}, {0, 1}};
    out["silent_profile_is_equilibrium"] =
        ludus::zerosum::verify_mixed_equilibrium(pd, silent, ludus::zerosum::Mode::Cost);
    out["reference"]["equilibrium_profile"] = json::array({1, 1});
    out["reference"]["equilibrium_utilities"] = json::array({7, 7});
  } else if (name == "petersburg") {
    auto rep = ludus::bet::st_petersburg(100.0, 20);
    out["expected_return_partial"] = rep.expected_return_partial;
    out["log2_utility_partial"] = rep.log2_utility_partial;
    out["prob_return_covers_fee_100"] = rep.prob_return_covers_fee;
    out["reference"]["log2_utility_limit"] = 2.0;
    out["reference"]["prob_exact"] = "1/64";
  } else {
    throw std::invalid_argument("unknown demo: " + name);
  }
  return out;
}

int emit(const Options& opts, const std::string& command, json result,
         const std::optional<std::string>& input_bytes,
         std::chrono::steady_clock::time_point started) {
  json report;
  report["command"] = command;
  report["version"] = kVersion;
  if (input_bytes) {
    char digest[32];
    std::snprintf(digest, sizeof(digest), "%016" PRIx64, fnv1a(*input_bytes));
    report["input_digest"] = digest;
  }
  if (opts.seed) report["seed"] = *opts.seed;
  report["result"] = std::move(result);
  if (opts.timings) {
    auto elapsed = std::chrono::duration_cast<std::chrono::microseconds>(
                       std::chrono::steady_clock::now() - started)
                       .count();
    report["elapsed_us"] = elapsed;
  }
  std::string text;
  if (opts.format == "table") {
    dump_table(report, "", &text);
  } else {
    dump(report, &text);
    text.push_back('\n');
  }
  std::fputs(text.c_str(), stdout);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  auto started = std::chrono::steady_clock::now();
  CLI::App app{"ludus: a computational game-theory workbench"};
  app.require_subcommand(1);
  Options opts;
  app.add_option("--format", opts.format, "json or table")
      ->check(CLI::IsMember({"json", "table"}));
  uint64_t seed_arg = 0;
  auto* seed_opt = app.add_option("--seed", seed_arg, "seed for stochastic commands");
  app.add_option("--tolerance", opts.tolerance, "numeric tolerance where applicable");
  app.add_flag("--timings", opts.timings, "include wall-clock timing in the report");

  auto* lp_cmd = app.add_subcommand("lp", "exact-rational linear programs");
  std::string lp_file;
  auto* lp_solve = lp_cmd->add_subcommand("solve", "solve max/min c.x s.t. Ax <= b, x >= 0");
  lp_solve->add_option("file", lp_file, "LP JSON file")->required();

  auto* zs_cmd = app.add_subcommand("zerosum", "matrix games");
  std::string zs_file, zs_saddle_file, zs_verify_file;
  auto* zs_solve = zs_cmd->add_subcommand("solve", "randomized equilibrium via LPs");
  zs_solve->add_option("file", zs_file)->required();
  auto* zs_saddle = zs_cmd->add_subcommand("saddle", "pure saddle points");
  zs_saddle->add_option("file", zs_saddle_file)->required();
  auto* zs_verify = zs_cmd->add_subcommand("verify", "check a bimatrix profile");
  zs_verify->add_option("file", zs_verify_file)->required();

  auto* comb_cmd = app.add_subcommand("comb", "combinatorial games");
  std::string comb_nim, comb_frogs, comb_sub, comb_first = "L";
  int comb_debruijn = -1;
  bool comb_misere = false;
  auto add_position_opts = [&](CLI::App* sub) {
    sub->add_option("--nim", comb_nim, "pile sizes, e.g. 1,3,5,7");
    sub->add_option("--frogs", comb_frogs, "n,k");
    sub->add_option("--subtraction", comb_sub, "n:a,b,c");
    sub->add_option("--debruijn", comb_debruijn, "n (<= 16)");
  };
  auto* comb_grundy = comb_cmd->add_subcommand("grundy", "Grundy number");
  add_position_opts(comb_grundy);
  auto* comb_move = comb_cmd->add_subcommand("move", "a winning move (nim positions)");
  add_position_opts(comb_move);
  auto* comb_outcome = comb_cmd->add_subcommand("outcome", "perfect-play winner");
  add_position_opts(comb_outcome);
  comb_outcome->add_flag("--misere", comb_misere, "misere winning rule");
  comb_outcome->add_option("--first", comb_first, "first mover: L or R");

  auto* coop_cmd = app.add_subcommand("coop", "cooperative TU games");
  std::string coop_file, coop_alloc, coop_c, coop_kind, coop_weights, coop_threshold,
      coop_gen_file;
  bool coop_cost = false;
  auto* coop_shap = coop_cmd->add_subcommand("shapley", "exact Shapley value");
  coop_shap->add_option("file", coop_file)->required();
  auto* coop_banz = coop_cmd->add_subcommand("banzhaf", "Banzhaf power index");
  coop_banz->add_option("file", coop_file)->required();
  auto* coop_core = coop_cmd->add_subcommand("core-check", "membership of an allocation");
  coop_core->add_option("file", coop_file)->required();
  coop_core->add_option("--alloc", coop_alloc, "allocation, e.g. 100,2")->required();
  coop_core->add_flag("--cost", coop_cost, "check the cost core");
  auto* coop_ne = coop_cmd->add_subcommand("core-nonempty", "LP feasibility of the core");
  coop_ne->add_option("file", coop_file)->required();
  auto* coop_monge = coop_cmd->add_subcommand("monge", "Monge vectors and extension");
  coop_monge->add_option("file", coop_file)->required();
  coop_monge->add_option("--c", coop_c, "parameter vector")->required();
  auto* coop_gen = coop_cmd->add_subcommand("gen", "game generators");
  coop_gen->add_option("kind", coop_kind, "voting | additive | network")->required();
  coop_gen->add_option("--weights", coop_weights, "weights for voting/additive");
  coop_gen->add_option("--threshold", coop_threshold, "voting threshold");
  coop_gen->add_option("--file", coop_gen_file, "cost matrix file for network");

  auto* boltz_cmd = app.add_subcommand("boltz", "Boltzmann values and dynamics");
  std::string boltz_file, boltz_schedule = "geometric:0.01:1.05",
              boltz_convention = "marginal";
  double boltz_t = 0.0, boltz_mu = 0.0;
  long long boltz_steps = 100000;
  auto* boltz_value = boltz_cmd->add_subcommand("value", "Boltzmann value of a TU game");
  boltz_value->add_option("file", boltz_file)->required();
  boltz_value->add_option("--T", boltz_t, "temperature parameter")->required();
  boltz_value->add_option("--convention", boltz_convention, "marginal | symmetric-diff");
  auto* boltz_solvet = boltz_cmd->add_subcommand("solve-T", "invert mu(T)");
  boltz_solvet->add_option("file", boltz_file)->required();
  boltz_solvet->add_option("--mu", boltz_mu, "target expected value")->required();
  auto* boltz_anneal = boltz_cmd->add_subcommand("anneal", "simulated annealing");
  boltz_anneal->add_option("file", boltz_file)->required();
  boltz_anneal->add_option("--schedule", boltz_schedule, "geometric:T0:growth");
  boltz_anneal->add_option("--steps", boltz_steps, "iterations");

  auto* bet_cmd = app.add_subcommand("bet", "betting mathematics");
  std::string bet_p, bet_rho, bet_win, bet_file;
  double bet_budget = 0.0;
  auto* bet_kelly = bet_cmd->add_subcommand("kelly", "fortune-formula fraction");
  bet_kelly->add_option("--p", bet_p, "success probability")->required();
  bet_kelly->add_option("--rho", bet_rho, "payoff multiple")->required();
  auto* bet_alt = bet_cmd->add_subcommand("alternatives", "bet-your-belief split");
  bet_alt->add_option("file", bet_file)->required();
  auto* bet_doub = bet_cmd->add_subcommand("doubling", "doubling-strategy analysis");
  bet_doub->add_option("--budget", bet_budget)->required();
  bet_doub->add_option("--win", bet_win, "per-round win probability (e.g. 18/37)")->required();
  auto* bet_chan = bet_cmd->add_subcommand("channel", "transmission rate and capacity");
  bet_chan->add_option("file", bet_file)->required();

  auto* traffic_cmd = app.add_subcommand("traffic", "congestion games");
  std::string traffic_file;
  auto* traffic_solve = traffic_cmd->add_subcommand("solve", "best-response dynamics");
  traffic_solve->add_option("file", traffic_file)->required();
  auto* traffic_braess = traffic_cmd->add_subcommand("braess", "the Braess paradox numbers");

  auto* know_cmd = app.add_subcommand("know", "knowledge calculus");
  std::string know_file;
  auto* know_ck = know_cmd->add_subcommand("ck", "common knowledge query");
  know_ck->add_option("file", know_file)->required();
  auto* know_ax = know_cmd->add_subcommand("axioms", "knowledge axioms K.1-K.6");
  know_ax->add_option("file", know_file)->required();
  auto* know_red = know_cmd->add_subcommand("redhats", "the red hats scenario");

  auto* qi_cmd = app.add_subcommand("qi", "interaction and quantum representation");
  std::string qi_file, qi_vector_file;
  auto* qi_spectral = qi_cmd->add_subcommand("spectral", "spectral decomposition");
  qi_spectral->add_option("file", qi_file)->required();
  auto* qi_measure = qi_cmd->add_subcommand("measure", "measurement distribution");
  qi_measure->add_option("matrix", qi_file)->required();
  qi_measure->add_option("vector", qi_vector_file)->required();
  auto* qi_decompose = qi_cmd->add_subcommand("decompose", "symmetry decomposition");
  qi_decompose->add_option("file", qi_file)->required();

  auto* demo_cmd = app.add_subcommand("demo", "reproduce the classic worked scenarios");
  std::string demo_name;
  demo_cmd
      ->add_option("name", demo_name,
                   "braess | redhats | nim1357 | greedy-network | prisoners | petersburg")
      ->required();

  // global flags (--seed etc.) may appear after any subcommand
  std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* cmd) {
    cmd->fallthrough();
    for (auto* sub : cmd->get_subcommands({})) enable_fallthrough(sub);
  };
  for (auto* sub : app.get_subcommands({})) enable_fallthrough(sub);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (seed_opt->count() > 0) opts.seed = seed_arg;
  if (boltz_anneal->parsed() && !opts.seed) {
    std::fprintf(stderr, "usage error: boltz anneal is stochastic, an explicit --seed is required\n");
    return 2;
  }

  try {
    std::optional<std::string> input;
    auto load = [&input](const std::string& path) {
      std::string bytes = read_file(path);
      input = input ? *input + bytes : bytes;
      return json::parse(bytes);
    };

    json result;
    std::string command;
    if (lp_solve->parsed()) {
      command = "lp solve";
      result = cmd_lp_solve(load(lp_file));
    } else if (zs_solve->parsed()) {
      command = "zerosum solve";
      result = cmd_zerosum_solve(load(zs_file));
    } else if (zs_saddle->parsed()) {
      command = "zerosum saddle";
      result = cmd_zerosum_saddle(load(zs_saddle_file));
    } else if (zs_verify->parsed()) {
      command = "zerosum verify";
      result = cmd_zerosum_verify(load(zs_verify_file));
    } else if (comb_grundy->parsed() || comb_move->parsed() || comb_outcome->parsed()) {
      command = comb_grundy->parsed() ? "comb grundy"
                : comb_move->parsed() ? "comb move"
                                      : "comb outcome";
      result = cmd_comb(command.substr(5), comb_nim, comb_frogs, comb_sub, comb_debruijn,
                        comb_misere, comb_first);
    } else if (coop_shap->parsed()) {
      command = "coop shapley";
      result = cmd_coop_shapley(load(coop_file));
    } else if (coop_banz->parsed()) {
      command = "coop banzhaf";
      result = cmd_coop_banzhaf(load(coop_file));
    } else if (coop_core->parsed()) {
      command = "coop core-check";
      result = cmd_coop_core_check(load(coop_file), coop_alloc, coop_cost);
    } else if (coop_ne->parsed()) {
      command = "coop core-nonempty";
      result = cmd_coop_core_nonempty(load(coop_file));
    } else if (coop_monge->parsed()) {
      command = "coop monge";
      result = cmd_coop_monge(load(coop_file), coop_c);
    } else if (coop_gen->parsed()) {
      command = "coop gen";
      json cost_json;
      const json* cost_ptr = nullptr;
      if (!coop_gen_file.empty()) {
        cost_json = load(coop_gen_file);
        cost_ptr = &cost_json;
      }
      result = cmd_coop_gen(coop_kind, coop_weights, coop_threshold, cost_ptr);
    } else if (boltz_value->parsed()) {
      command = "boltz value";
      result = cmd_boltz_value(load(boltz_file), boltz_t, boltz_convention);
    } else if (boltz_solvet->parsed()) {
      command = "boltz solve-T";
      result = cmd_boltz_solve_t(load(boltz_file), boltz_mu);
    } else if (boltz_anneal->parsed()) {
      command = "boltz anneal";
      result = cmd_boltz_anneal(load(boltz_file), boltz_schedule, boltz_steps, *opts.seed);
    } else if (bet_kelly->parsed()) {
      command = "bet kelly";
      result = cmd_bet_kelly(bet_p, bet_rho);
    } else if (bet_alt->parsed()) {
      command = "bet alternatives";
      result = cmd_bet_alternatives(load(bet_file));
    } else if (bet_doub->parsed()) {
      command = "bet doubling";
      result = cmd_bet_doubling(bet_budget, bet_win);
    } else if (bet_chan->parsed()) {
      command = "bet channel";
      result = cmd_bet_channel(load(bet_file));
    } else if (traffic_solve->parsed()) {
      command = "traffic solve";
      result = cmd_traffic_solve(load(traffic_file));
    } else if (traffic_braess->parsed()) {
      command = "traffic braess";
      result = cmd_traffic_braess();
    } else if (know_ck->parsed()) {
      command = "know ck";
      result = cmd_know_ck(load(know_file));
    } else if (know_ax->parsed()) {
      command = "know axioms";
      result = cmd_know_axioms(load(know_file), opts.seed.value_or(1));
    } else if (know_red->parsed()) {
      command = "know redhats";
      result = cmd_know_redhats();
    } else if (qi_spectral->parsed()) {
      command = "qi spectral";
      result = cmd_qi_spectral(load(qi_file));
    } else if (qi_measure->parsed()) {
      command = "qi measure";
      json m = load(qi_file);
      json v = load(qi_vector_file);
      result = cmd_qi_measure(m, v);
    } else if (qi_decompose->parsed()) {
      command = "qi decompose";
      result = cmd_qi_decompose(load(qi_file));
    } else if (demo_cmd->parsed()) {
      command = "demo " + demo_name;
      result = cmd_demo(demo_name);
    } else {
      std::fprintf(stderr, "no subcommand selected\n");
      return 2;
    }
    return emit(opts, command, std::move(result), input, started);
  } catch (const json::exception& e) {
    std::fprintf(stderr, "input error: %s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}
