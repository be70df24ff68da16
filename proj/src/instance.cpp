#include "oscm/instance.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace oscm {

namespace {

std::string pair_text(const Edge& e) {
    return "(" + std::to_string(e.fixed) + "," + std::to_string(e.free) + ")";
}

// Union-find over fixed positions [0,n_fixed) and free ids shifted by
// n_fixed.
class DisjointSets {
   public:
    explicit DisjointSets(vertex_t n) : parent_(n) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }
    vertex_t find(vertex_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }
    void unite(vertex_t a, vertex_t b) { parent_[find(a)] = find(b); }

   private:
    std::vector<vertex_t> parent_;
};

}  // namespace

Instance build_instance(vertex_t n_fixed, vertex_t n_free, std::vector<Edge> edges) {
    if (n_fixed < 0 || n_free < 0) {
        throw std::invalid_argument("vertex counts must be nonnegative");
    }
    for (const Edge& e : edges) {
        if (e.fixed < 0 || e.fixed >= n_fixed || e.free < 0 || e.free >= n_free) {
            throw std::invalid_argument("edge endpoint out of range: " + pair_text(e));
        }
    }
    std::sort(edges.begin(), edges.end());
    for (std::size_t i = 1; i < edges.size(); ++i) {
        if (edges[i] == edges[i - 1]) {
            throw std::invalid_argument("duplicate edge: " + pair_text(edges[i]));
        }
    }

    Instance inst;
    inst.n_fixed_ = n_fixed;
    inst.n_free_ = n_free;
    inst.edges_ = std::move(edges);
    inst.adj_.assign(n_free, {});
    for (const Edge& e : inst.edges_) inst.adj_[e.free].push_back(e.fixed);
    // edges_ is sorted by (fixed, free), so each adjacency list is sorted
    return inst;
}

void Instance::set_names(std::vector<std::string> fixed_names, std::vector<std::string> free_names) {
    if (!fixed_names.empty() && fixed_names.size() != static_cast<std::size_t>(n_fixed_)) {
        throw std::invalid_argument("fixed name table size mismatch");
    }
    if (!free_names.empty() && free_names.size() != static_cast<std::size_t>(n_free_)) {
        throw std::invalid_argument("free name table size mismatch");
    }
    fixed_names_ = std::move(fixed_names);
    free_names_ = std::move(free_names);
}

std::string Instance::fixed_label(vertex_t pos) const {
    if (!fixed_names_.empty()) return fixed_names_[pos];
    return std::to_string(pos + 1);  // external 1-based id
}

std::string Instance::free_label(vertex_t u) const {
    if (!free_names_.empty()) return free_names_[u];
    return std::to_string(n_fixed_ + 1 + u);
}

Ordering identity_ordering(vertex_t n_free) {
    Ordering ord(n_free);
    std::iota(ord.begin(), ord.end(), 0);
    return ord;
}

bool is_valid_ordering(const Instance& inst, const Ordering& ord) {
    if (ord.size() != static_cast<std::size_t>(inst.n_free())) return false;
    std::vector<bool> seen(inst.n_free(), false);
    for (vertex_t u : ord) {
        if (u < 0 || u >= inst.n_free() || seen[u]) return false;
        seen[u] = true;
    }
    return true;
}

bool is_tree(const Instance& inst) {
    const vertex_t n = inst.n_fixed() + inst.n_free();
    if (n == 0) return false;
    if (inst.n_edges() != static_cast<std::size_t>(n) - 1) return false;
    DisjointSets sets(n);
    for (const Edge& e : inst.edges()) sets.unite(e.fixed, inst.n_fixed() + e.free);
    const vertex_t root = sets.find(0);
    for (vertex_t v = 1; v < n; ++v) {
        if (sets.find(v) != root) return false;
    }
    return true;
}

count_t common_neighbors(const Instance& inst, vertex_t u, vertex_t v) {
    if (u < 0 || u >= inst.n_free() || v < 0 || v >= inst.n_free() || u == v) {
        throw std::invalid_argument("common_neighbors: invalid free ids " + std::to_string(u) +
                                    ", " + std::to_string(v));
    }
    const auto& nu = inst.neighbors(u);
    const auto& nv = inst.neighbors(v);
    count_t shared = 0;
    std::size_t i = 0, j = 0;
    while (i < nu.size() && j < nv.size()) {
        if (nu[i] == nv[j]) {
            ++shared;
            ++i;
            ++j;
        } else if (nu[i] < nv[j]) {
            ++i;
        } else {
            ++j;
        }
    }
    return shared;
}

}  // namespace oscm
