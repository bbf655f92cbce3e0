// Structural properties of a rule, decided on the de Bruijn presentation
// and on the label-matched pair graph.
#pragma once

#include <cstdint>
#include <vector>

#include "jpca/rule.hpp"

namespace jpca {

// Edge-labeled de Bruijn presentation of a block code: vertices are the
// (span-1)-blocks, the edge for block u goes prefix(u) -> suffix(u) with
// label table[u]. Every vertex has N in- and N out-edges.
struct DeBruijnPresentation {
  explicit DeBruijnPresentation(const LocalRule& rule);

  unsigned alphabet = 0;
  std::uint64_t vertex_count = 0;  // N^(span-1)
  // successor_mask[u * N + c] = bitset of vertices reached from u by an
  // edge labeled c (vertex_count <= 64 in scope)
  std::vector<std::uint64_t> successor_mask;
};

struct ClosingStatus {
  bool left_closing = false;
  bool right_closing = false;
};

// Subset construction from the full vertex set; surjective iff the empty
// subset is unreachable.
bool is_surjective(const LocalRule& rule);

bool is_left_permutative(const LocalRule& rule);
bool is_right_permutative(const LocalRule& rule);

ClosingStatus closing_status(const LocalRule& rule);

bool is_injective(const LocalRule& rule);

// Label-matched product of the de Bruijn presentation with itself.
// Vertex (u,v) is encoded u * vertex_count + v; the diagonal is u == v.
class PairGraph {
 public:
  explicit PairGraph(const LocalRule& rule);

  std::uint64_t vertex_count() const { return pair_count_; }
  bool is_diagonal(std::uint64_t pair) const {
    return pair / single_count_ == pair % single_count_;
  }

  // vertices with an infinite forward (resp. backward) path
  std::vector<bool> forward_core() const;
  std::vector<bool> backward_core() const;
  // vertices reachable from the diagonal / that can reach the diagonal
  std::vector<bool> reachable_from_diagonal() const;
  std::vector<bool> reaching_diagonal() const;

 private:
  std::vector<bool> trim(bool forward) const;
  std::vector<bool> bfs(bool forward) const;

  std::uint64_t single_count_ = 0;
  std::uint64_t pair_count_ = 0;
  std::vector<std::vector<std::uint32_t>> out_;
  std::vector<std::vector<std::uint32_t>> in_;
};

}  // namespace jpca
