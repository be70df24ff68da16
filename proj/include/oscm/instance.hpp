#ifndef OSCM_INSTANCE_HPP
#define OSCM_INSTANCE_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace oscm {

using vertex_t = std::int32_t;
using count_t = std::int64_t;  // crossing totals grow as O(m^2)

// One edge of the bipartite graph. `fixed` is a pi1 position (0 = top of the
// fixed layer), `free` is a stable free-vertex id in [0, n_free).
struct Edge {
    vertex_t fixed;
    vertex_t free;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// A two-layer instance with the fixed-layer order baked in: fixed vertex k IS
// the k-th vertex of pi1. Instances are immutable after construction and safe
// to share across threads.
class Instance {
   public:
    Instance() = default;

    vertex_t n_fixed() const { return n_fixed_; }
    vertex_t n_free() const { return n_free_; }
    std::size_t n_edges() const { return edges_.size(); }

    // Edges in canonical order (by fixed position, then free id).
    const std::vector<Edge>& edges() const { return edges_; }

    // pi1 positions adjacent to free vertex u, sorted ascending.
    const std::vector<vertex_t>& neighbors(vertex_t u) const { return adj_[u]; }
    vertex_t degree(vertex_t u) const { return static_cast<vertex_t>(adj_[u].size()); }

    // Optional display names (empty when unset); equality ignores them.
    const std::vector<std::string>& fixed_names() const { return fixed_names_; }
    const std::vector<std::string>& free_names() const { return free_names_; }
    void set_names(std::vector<std::string> fixed_names, std::vector<std::string> free_names);
    std::string fixed_label(vertex_t pos) const;
    std::string free_label(vertex_t u) const;

    friend bool operator==(const Instance& a, const Instance& b) {
        return a.n_fixed_ == b.n_fixed_ && a.n_free_ == b.n_free_ && a.edges_ == b.edges_;
    }

    friend Instance build_instance(vertex_t n_fixed, vertex_t n_free, std::vector<Edge> edges);

   private:
    vertex_t n_fixed_ = 0;
    vertex_t n_free_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<vertex_t>> adj_;  // per free vertex, sorted
    std::vector<std::string> fixed_names_;
    std::vector<std::string> free_names_;
};

// A candidate pi2: a permutation of the free ids 0..n_free-1.
using Ordering = std::vector<vertex_t>;

// Validates and builds an instance. Throws std::invalid_argument naming the
// offending pair on an out-of-range endpoint or a duplicate edge.
Instance build_instance(vertex_t n_fixed, vertex_t n_free, std::vector<Edge> edges);

Ordering identity_ordering(vertex_t n_free);
bool is_valid_ordering(const Instance& inst, const Ordering& ord);

// True iff the bipartite graph is connected and has exactly
// n_fixed + n_free - 1 edges.
bool is_tree(const Instance& inst);

// Number of fixed vertices adjacent to both u and v (u != v).
// In a tree this is always 0 or 1.
count_t common_neighbors(const Instance& inst, vertex_t u, vertex_t v);

}  // namespace oscm

#endif
