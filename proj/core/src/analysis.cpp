#include "jpca/analysis.hpp"

#include <bit>
#include <deque>
#include <unordered_set>

namespace jpca {

DeBruijnPresentation::DeBruijnPresentation(const LocalRule& rule) {
  const unsigned n = rule.alphabet_size();
  const unsigned s = rule.span();
  vertex_count = ipow(n, s - 1);
  if (vertex_count > 64)
    throw std::invalid_argument(
        "de Bruijn presentation has more than 64 vertices; span is out of the "
        "supported range for structural analysis");
  alphabet = n;
  successor_mask.assign(static_cast<size_t>(vertex_count) * n, 0);
  for (std::uint64_t block = 0; block < rule.table().size(); ++block) {
    const std::uint64_t from = block / n;
    const std::uint64_t to = block % vertex_count;
    const unsigned label = rule.table()[block];
    successor_mask[from * n + label] |= std::uint64_t{1} << to;
  }
}

bool is_surjective(const LocalRule& rule) {
  const DeBruijnPresentation g(rule);
  const unsigned n = g.alphabet;
  const std::uint64_t full = (g.vertex_count == 64) ? ~std::uint64_t{0}
                                                    : (std::uint64_t{1} << g.vertex_count) - 1;
  std::unordered_set<std::uint64_t> seen{full};
  std::deque<std::uint64_t> queue{full};
  constexpr size_t kSubsetCap = size_t{1} << 22;
  while (!queue.empty()) {
    const std::uint64_t mask = queue.front();
    queue.pop_front();
    for (unsigned c = 0; c < n; ++c) {
      std::uint64_t next = 0;
      std::uint64_t m = mask;
      while (m) {
        const unsigned u = static_cast<unsigned>(std::countr_zero(m));
        m &= m - 1;
        next |= g.successor_mask[std::uint64_t{u} * n + c];
      }
      if (next == 0) return false;
      if (seen.insert(next).second) {
        if (seen.size() > kSubsetCap)
          throw std::runtime_error("is_surjective: subset construction exceeded its cap");
        queue.push_back(next);
      }
    }
  }
  return true;
}

bool is_left_permutative(const LocalRule& rule) {
  const unsigned n = rule.alphabet_size();
  const std::uint64_t rest = rule.table().size() / n;
  for (std::uint64_t w = 0; w < rest; ++w) {
    unsigned seen = 0;
    for (unsigned a = 0; a < n; ++a) seen |= 1u << rule.table()[a * rest + w];
    if (seen != (1u << n) - 1) return false;
  }
  return true;
}

bool is_right_permutative(const LocalRule& rule) {
  const unsigned n = rule.alphabet_size();
  const std::uint64_t rest = rule.table().size() / n;
  for (std::uint64_t w = 0; w < rest; ++w) {
    unsigned seen = 0;
    for (unsigned a = 0; a < n; ++a) seen |= 1u << rule.table()[w * n + a];
    if (seen != (1u << n) - 1) return false;
  }
  return true;
}

PairGraph::PairGraph(const LocalRule& rule) {
  const DeBruijnPresentation g(rule);
  const unsigned n = g.alphabet;
  single_count_ = g.vertex_count;
  pair_count_ = single_count_ * single_count_;
  out_.assign(pair_count_, {});
  in_.assign(pair_count_, {});
  // decode masks back to successor lists once
  std::vector<std::vector<std::uint32_t>> succ(single_count_ * n);
  for (std::uint64_t u = 0; u < single_count_; ++u)
    for (unsigned c = 0; c < n; ++c) {
      std::uint64_t m = g.successor_mask[u * n + c];
      while (m) {
        succ[u * n + c].push_back(static_cast<std::uint32_t>(std::countr_zero(m)));
        m &= m - 1;
      }
    }
  for (std::uint64_t u = 0; u < single_count_; ++u)
    for (std::uint64_t v = 0; v < single_count_; ++v) {
      const std::uint64_t pair = u * single_count_ + v;
      for (unsigned c = 0; c < n; ++c)
        for (std::uint32_t un : succ[u * n + c])
          for (std::uint32_t vn : succ[v * n + c]) {
            const std::uint64_t to = std::uint64_t{un} * single_count_ + vn;
            out_[pair].push_back(static_cast<std::uint32_t>(to));
            in_[to].push_back(static_cast<std::uint32_t>(pair));
          }
    }
}

std::vector<bool> PairGraph::trim(bool forward) const {
  const auto& edges = forward ? out_ : in_;
  const auto& redges = forward ? in_ : out_;
  std::vector<std::uint32_t> degree(pair_count_);
  std::vector<bool> alive(pair_count_, true);
  std::deque<std::uint32_t> dead;
  for (std::uint64_t v = 0; v < pair_count_; ++v) {
    degree[v] = static_cast<std::uint32_t>(edges[v].size());
    if (degree[v] == 0) {
      alive[v] = false;
      dead.push_back(static_cast<std::uint32_t>(v));
    }
  }
  while (!dead.empty()) {
    const std::uint32_t v = dead.front();
    dead.pop_front();
    for (std::uint32_t u : redges[v]) {
      if (!alive[u]) continue;
      if (--degree[u] == 0) {
        alive[u] = false;
        dead.push_back(u);
      }
    }
  }
  return alive;
}

std::vector<bool> PairGraph::bfs(bool forward) const {
  const auto& edges = forward ? out_ : in_;
  std::vector<bool> seen(pair_count_, false);
  std::deque<std::uint32_t> queue;
  for (std::uint64_t d = 0; d < single_count_; ++d) {
    const std::uint64_t v = d * single_count_ + d;
    seen[v] = true;
    queue.push_back(static_cast<std::uint32_t>(v));
  }
  while (!queue.empty()) {
    const std::uint32_t v = queue.front();
    queue.pop_front();
    for (std::uint32_t w : edges[v])
      if (!seen[w]) {
        seen[w] = true;
        queue.push_back(w);
      }
  }
  return seen;
}

std::vector<bool> PairGraph::forward_core() const { return trim(true); }
std::vector<bool> PairGraph::backward_core() const { return trim(false); }
std::vector<bool> PairGraph::reachable_from_diagonal() const { return bfs(true); }
std::vector<bool> PairGraph::reaching_diagonal() const { return bfs(false); }

ClosingStatus closing_status(const LocalRule& rule) {
  const PairGraph pg(rule);
  ClosingStatus st{true, true};
  // not right closing: a divergence from the diagonal that extends forever
  const auto fwd_core = pg.forward_core();
  const auto from_diag = pg.reachable_from_diagonal();
  // not left closing: mirrored, with edges reversed
  const auto bwd_core = pg.backward_core();
  const auto to_diag = pg.reaching_diagonal();
  for (std::uint64_t v = 0; v < pg.vertex_count(); ++v) {
    if (pg.is_diagonal(v)) continue;
    if (from_diag[v] && fwd_core[v]) st.right_closing = false;
    if (to_diag[v] && bwd_core[v]) st.left_closing = false;
  }
  return st;
}

bool is_injective(const LocalRule& rule) {
  const PairGraph pg(rule);
  const auto fwd = pg.forward_core();
  const auto bwd = pg.backward_core();
  // a non-diagonal pair on a bi-infinite label-matched path collapses two
  // distinct points
  for (std::uint64_t v = 0; v < pg.vertex_count(); ++v)
    if (!pg.is_diagonal(v) && fwd[v] && bwd[v]) return false;
  return true;
}

}  // namespace jpca
