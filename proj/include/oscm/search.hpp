#ifndef OSCM_SEARCH_HPP
#define OSCM_SEARCH_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "oscm/instance.hpp"

namespace oscm {

// A tree plus fixed-layer order whose penalty digraph contains a directed
// cycle. cr_profile holds the six off-diagonal crossing numbers
// (cr(0,1), cr(1,0), cr(0,2), cr(2,0), cr(1,2), cr(2,1)) when n_free == 3,
// and is empty otherwise.
struct CounterexampleWitness {
    Instance instance;
    int n_total = 0;
    std::vector<vertex_t> cycle;
    std::vector<count_t> cr_profile;
};

inline constexpr int kSearchBudget = 10;

// Visits every labeled tree on n_fixed + n_free vertices whose edges all
// join the two sides (Prufer sequences over all n vertices, filtered).
// Fixed labels are pi1 positions; free labels are free ids. The number of
// visited trees is n_fixed^(n_free-1) * n_free^(n_fixed-1).
void enumerate_bipartite_trees(vertex_t n_fixed, vertex_t n_free,
                               const std::function<void(const std::vector<Edge>&)>& visit);

std::uint64_t count_bipartite_trees(vertex_t n_fixed, vertex_t n_free);

// Exhaustive witness search over every bipartition with at most
// max_total_vertices vertices, every labeled bipartite tree, modulo pi1
// reversal (reversing pi1 swaps cr(u,v) with cr(v,u) and preserves
// cyclicity). Witnesses are deduplicated up to free-vertex relabeling,
// canonicalized, and returned sorted by (total vertices, n_fixed, edge set).
// Deterministic for any `jobs`. Throws SizeGuardError above kSearchBudget.
std::vector<CounterexampleWitness> find_cyclic_counterexamples(int max_total_vertices,
                                                               int jobs = 1);

// True iff some relabeling of the three free vertices reproduces the profile
// cr(g,h)=2, cr(h,g)=3, cr(g,i)=3, cr(i,g)=2, cr(h,i)=4, cr(i,h)=5.
// Throws std::invalid_argument unless n_free == 3.
bool match_paper_profile(const CounterexampleWitness& w);

// Instance text plus sidecar comment lines with the cr profile and the
// penalty cycle.
std::string witness_to_text(const CounterexampleWitness& w);

}  // namespace oscm

#endif
