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

#ifndef LUDUS_COMBINATORIAL_HPP
#define LUDUS_COMBINATORIAL_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

namespace ludus {
namespace comb {

enum class Player { Left, Right };
enum class Rule { Normal, Misere };

inline Player other(Player p) { return p == Player::Left ? Player::Right : Player::Left; }

class Arena;

/// Handle to a node of the (immutable, hash-consed) game DAG owned by an
/// Arena. Structural equality is id equality, since equal option sets are
/// interned to the same node.
class Game {
 public:
  Game() = default;
  uint32_t id() const { return id_; }
  friend bool operator==(Game a, Game b) { return a.id_ == b.id_; }
  friend bool operator!=(Game a, Game b) { return a.id_ != b.id_; }
  friend bool operator<(Game a, Game b) { return a.id_ < b.id_; }

 private:
  friend class Arena;
  explicit Game(uint32_t id) : id_(id) {}
  uint32_t id_ = 0;
};

/// Analysis session: owns the game graph and all memo tables. Sessions are
/// independent; do not share one across threads.
class Arena {
 public:
  Arena() {
    // node 0 is O = {|}
    nodes_.push_back(Node{});
    nodes_[0].impartial = true;
    intern_[key_of(nodes_[0])] = 0;
  }

  Game empty_game() const { return Game(0); }

  /// Interns the position with the given option lists (duplicates collapse).
  Game make(std::vector<Game> left, std::vector<Game> right) {
    Node node;
    node.left = ids(std::move(left));
    node.right = ids(std::move(right));
    return intern(std::move(node));
  }

  Game make_impartial(std::vector<Game> options) {
    auto o = ids(std::move(options));
    Node node;
    node.left = o;
    node.right = std::move(o);
    return intern(std::move(node));
  }

  const std::vector<uint32_t>& left_options(Game g) const { return nodes_[g.id()].left; }
  const std::vector<uint32_t>& right_options(Game g) const { return nodes_[g.id()].right; }
  Game handle(uint32_t id) const { return Game(id); }
  bool impartial(Game g) const { return nodes_[g.id()].impartial; }
  size_t node_count() const { return nodes_.size(); }

  /// -G: players swap roles in every position.
  Game negate(Game g) {
    auto it = negate_memo_.find(g.id());
    if (it != negate_memo_.end()) return Game(it->second);
    std::vector<Game> nl, nr;
    for (uint32_t o : nodes_[g.id()].right) nl.push_back(negate(Game(o)));
    for (uint32_t o : nodes_[g.id()].left) nr.push_back(negate(Game(o)));
    Game r = make(std::move(nl), std::move(nr));
    negate_memo_[g.id()] = r.id();
    return r;
  }

  /// G+H: a move is a move in either summand.
  Game sum(Game g, Game h) {
    uint64_t key = (static_cast<uint64_t>(g.id()) << 32) | h.id();
    auto it = sum_memo_.find(key);
    if (it != sum_memo_.end()) return Game(it->second);
    std::vector<Game> sl, sr;
    for (uint32_t o : nodes_[g.id()].left) sl.push_back(sum(Game(o), h));
    for (uint32_t o : nodes_[h.id()].left) sl.push_back(sum(g, Game(o)));
    for (uint32_t o : nodes_[g.id()].right) sr.push_back(sum(Game(o), h));
    for (uint32_t o : nodes_[h.id()].right) sr.push_back(sum(g, Game(o)));
    Game r = make(std::move(sl), std::move(sr));
    sum_memo_[key] = r.id();
    return r;
  }

  Game difference(Game g, Game h) { return sum(g, negate(h)); }

  /// Perfect-play winner with the given first mover.
  Player outcome(Game g, Player first, Rule rule = Rule::Normal) {
    uint64_t key = (static_cast<uint64_t>(g.id()) << 2) |
                   (first == Player::Left ? 2u : 0u) | (rule == Rule::Misere ? 1u : 0u);
    auto it = outcome_memo_.find(key);
    if (it != outcome_memo_.end()) return it->second;
    const auto& opts =
        (first == Player::Left) ? nodes_[g.id()].left : nodes_[g.id()].right;
    Player winner;
    if (opts.empty()) {
      winner = (rule == Rule::Normal) ? other(first) : first;
    } else {
      winner = other(first);  // pessimistic until a winning option is found
      for (uint32_t o : opts) {
        if (outcome(Game(o), other(first), rule) == first) {
          winner = first;
          break;
        }
      }
    }
    outcome_memo_[key] = winner;
    return winner;
  }

  bool second_player_wins(Game g, Rule rule = Rule::Normal) {
    return outcome(g, Player::Left, rule) == Player::Right &&
           outcome(g, Player::Right, rule) == Player::Left;
  }

  /// G == H  iff  G-H is a second-player win in normal play.
  bool congruent(Game g, Game h) { return second_player_wins(difference(g, h)); }

  /// Grundy number of an impartial position (mex recursion).
  int grundy(Game g) {
    if (!nodes_[g.id()].impartial)
      throw std::invalid_argument("grundy: position is not impartial");
    auto it = grundy_memo_.find(g.id());
    if (it != grundy_memo_.end()) return it->second;
    std::set<int> seen;
    for (uint32_t o : nodes_[g.id()].left) seen.insert(grundy(Game(o)));
    int m = 0;
    while (seen.count(m)) ++m;
    grundy_memo_[g.id()] = m;
    return m;
  }

  // ---- generators ----

  /// Single nim pile *n with options *0,..,*(n-1).
  Game nim_pile(long long n) {
    while (static_cast<long long>(nim_piles_.size()) <= n) {
      std::vector<Game> opts;
      opts.reserve(nim_piles_.size());
      for (Game g : nim_piles_) opts.push_back(g);
      if (nim_piles_.empty()) {
        nim_piles_.push_back(empty_game());
        continue;
      }
      nim_piles_.push_back(make_impartial(std::move(opts)));
    }
    return nim_piles_[static_cast<size_t>(n)];
  }

  Game nim(const std::vector<long long>& piles) {
    Game g = empty_game();
    for (long long p : piles) g = sum(g, nim_pile(p));
    return g;
  }

  /// Take between 1 and max(allowed) from a heap of n, restricted to the
  /// allowed removal amounts.
  Game subtraction_game(int n, const std::vector<int>& allowed) {
    if (n < 0) throw std::invalid_argument("subtraction_game: n < 0");
    std::vector<Game> pos(static_cast<size_t>(n) + 1);
    pos[0] = empty_game();
    for (int j = 1; j <= n; ++j) {
      std::vector<Game> opts;
      for (int a : allowed) {
        if (a >= 1 && a <= j) opts.push_back(pos[j - a]);
      }
      pos[j] = make_impartial(std::move(opts));
    }
    return pos[n];
  }

  /// Frogs n apart, leaps of 1..k: the subtraction game on {1,..,k}.
  Game frogs(int n, int k) {
    if (k < 1) throw std::invalid_argument("frogs: k < 1");
    std::vector<int> allowed(k);
    for (int i = 0; i < k; ++i) allowed[i] = i + 1;
    return subtraction_game(n, allowed);
  }

  /// Numbers 1..n on a board; a move erases a surviving number together
  /// with all of its divisors. State = bitmask of survivors.
  Game de_bruijn(int n) {
    if (n < 0 || n > 16)
      throw std::invalid_argument("de_bruijn: n must be in 0..16");
    std::vector<uint32_t> closure(static_cast<size_t>(n) + 1, 0);
    for (int m = 1; m <= n; ++m) {
      for (int d = 1; d <= m; ++d) {
        if (m % d == 0) closure[m] |= 1u << (d - 1);
      }
    }
    std::unordered_map<uint32_t, Game> memo;
    uint32_t full = (n == 0) ? 0u : ((n == 32) ? ~0u : ((1u << n) - 1));
    return de_bruijn_state(full, closure, &memo);
  }

 private:
  struct Node {
    std::vector<uint32_t> left, right;
    bool impartial = false;
  };

  std::vector<uint32_t> ids(std::vector<Game> games) {
    std::vector<uint32_t> v;
    v.reserve(games.size());
    for (Game g : games) v.push_back(g.id());
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
  }

  static std::string key_of(const Node& n) {
    std::string k;
    k.reserve((n.left.size() + n.right.size() + 1) * 4);
    auto put = [&k](uint32_t x) {
      for (int i = 0; i < 4; ++i) k.push_back(static_cast<char>((x >> (8 * i)) & 0xff));
    };
    put(static_cast<uint32_t>(n.left.size()));
    for (uint32_t x : n.left) put(x);
    for (uint32_t x : n.right) put(x);
    return k;
  }

  Game intern(Node node) {
    std::string key = key_of(node);
    auto it = intern_.find(key);
    if (it != intern_.end()) return Game(it->second);
    node.impartial = node.left == node.right;
    if (node.impartial) {
      for (uint32_t o : node.left) {
        if (!nodes_[o].impartial) {
          node.impartial = false;
          break;
        }
      }
    }
    uint32_t id = static_cast<uint32_t>(nodes_.size());
    nodes_.push_back(std::move(node));
    intern_[key] = id;
    return Game(id);
  }

  Game de_bruijn_state(uint32_t state, const std::vector<uint32_t>& closure,
                       std::unordered_map<uint32_t, Game>* memo) {
    auto it = memo->find(state);
    if (it != memo->end()) return it->second;
    std::vector<Game> opts;
    for (int m = 1; m < static_cast<int>(closure.size()); ++m) {
      if (state & (1u << (m - 1)))
        opts.push_back(de_bruijn_state(state & ~closure[m], closure, memo));
    }
    Game g = make_impartial(std::move(opts));
    (*memo)[state] = g;
    return g;
  }

  std::vector<Node> nodes_;
  std::unordered_map<std::string, uint32_t> intern_;
  std::unordered_map<uint32_t, uint32_t> negate_memo_;
  std::unordered_map<uint64_t, uint32_t> sum_memo_;
  std::unordered_map<uint32_t, int> grundy_memo_;
  std::unordered_map<uint64_t, Player> outcome_memo_;
  std::vector<Game> nim_piles_;
};

/// mex: least nonnegative integer not in the set.
inline int mex(const std::set<int>& values) {
  int m = 0;
  while (values.count(m)) ++m;
  return m;
}

/// Nim-sum of the pile sizes (the Grundy number of the nim position).
inline long long nim_value(const std::vector<long long>& piles) {
  long long x = 0;
  for (long long p : piles) {
    if (p < 0) throw std::invalid_argument("nim_value: negative pile");
    x ^= p;
  }
  return x;
}

/// A move to a Grundy-0 option: reduce the first pile whose size drops when
/// xored with the nim-sum. Absent when the position is already lost (value 0).
inline std::optional<std::pair<size_t, long long>> winning_move(
    const std::vector<long long>& piles) {
  long long x = nim_value(piles);
  if (x == 0) return std::nullopt;
  for (size_t i = 0; i < piles.size(); ++i) {
    long long target = piles[i] ^ x;
    if (target < piles[i]) return std::make_pair(i, target);
  }
  return std::nullopt;  // unreachable for x != 0
}

}  // namespace comb
}  // namespace ludus

#endif  // LUDUS_COMBINATORIAL_HPP
