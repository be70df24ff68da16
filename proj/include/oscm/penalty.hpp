#ifndef OSCM_PENALTY_HPP
#define OSCM_PENALTY_HPP

#include <optional>
#include <variant>
#include <vector>

#include "oscm/crossings.hpp"
#include "oscm/instance.hpp"

namespace oscm {

// Arc u -> v with weight cr(u,v) - cr(v,u) > 0: placing u above v costs
// `weight` more than the other way around.
struct PenaltyArc {
    vertex_t from;
    vertex_t to;
    count_t weight;

    friend bool operator==(const PenaltyArc&, const PenaltyArc&) = default;
};

// The penalty digraph on the free layer. The multigraph's parallel arcs are
// collapsed into the integer weight; at most one of (u,v), (v,u) exists.
struct PenaltyGraph {
    vertex_t n_free = 0;
    std::vector<PenaltyArc> arcs;  // sorted by (from, to)
};

PenaltyGraph build_penalty_graph(const CrossingMatrix& m);

bool is_acyclic(const PenaltyGraph& pg);

// One directed cycle in DFS discovery order (consecutive arcs exist and the
// last vertex closes back to the first), or nullopt if acyclic.
std::optional<std::vector<vertex_t>> find_cycle(const PenaltyGraph& pg);

// Total weight of arcs the ordering pays for: arcs (u,v) with u placed
// before v.
count_t penalized_weight(const PenaltyGraph& pg, const Ordering& ord);

struct CyclicWitness {
    std::vector<vertex_t> cycle;
};

// The ordering algorithm under test: if the penalty digraph is acyclic,
// return the order that places every arc's target before its source (Kahn,
// smallest free id first among available vertices); it attains
// pair_min_sum(cr). If the digraph is cyclic, return a witness cycle instead.
std::variant<Ordering, CyclicWitness> harrigan_healy_order(const Instance& inst);

}  // namespace oscm

#endif
