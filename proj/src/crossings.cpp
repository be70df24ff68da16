#include "oscm/crossings.hpp"

#include <algorithm>
#include <stdexcept>

namespace oscm {

namespace {

void check_ordering(const Instance& inst, const Ordering& ord) {
    if (!is_valid_ordering(inst, ord)) {
        throw std::invalid_argument("ordering is not a permutation of the free layer");
    }
}

// positions[u] = rank of u in ord
std::vector<vertex_t> inverse_permutation(const Ordering& ord) {
    std::vector<vertex_t> pos(ord.size());
    for (std::size_t i = 0; i < ord.size(); ++i) pos[ord[i]] = static_cast<vertex_t>(i);
    return pos;
}

// Merge sort counting pairs i < j with keys[i] > keys[j]. Equal keys do not
// count, which is exactly the shared-endpoint tie rule.
count_t merge_count(std::vector<vertex_t>& keys, std::vector<vertex_t>& scratch, std::size_t lo,
                    std::size_t hi) {
    if (hi - lo <= 1) return 0;
    const std::size_t mid = lo + (hi - lo) / 2;
    count_t inversions = merge_count(keys, scratch, lo, mid) + merge_count(keys, scratch, mid, hi);
    std::size_t i = lo, j = mid, k = lo;
    while (i < mid && j < hi) {
        if (keys[i] <= keys[j]) {
            scratch[k++] = keys[i++];
        } else {
            inversions += static_cast<count_t>(mid - i);
            scratch[k++] = keys[j++];
        }
    }
    while (i < mid) scratch[k++] = keys[i++];
    while (j < hi) scratch[k++] = keys[j++];
    std::copy(scratch.begin() + lo, scratch.begin() + hi, keys.begin() + lo);
    return inversions;
}

}  // namespace

count_t pairwise_crossings(const Instance& inst, vertex_t u, vertex_t v) {
    if (u < 0 || u >= inst.n_free() || v < 0 || v >= inst.n_free() || u == v) {
        throw std::invalid_argument("pairwise_crossings: invalid free ids " + std::to_string(u) +
                                    ", " + std::to_string(v));
    }
    const auto& nu = inst.neighbors(u);
    const auto& nv = inst.neighbors(v);
    // count pairs (a,b) with a in N(u), b in N(v), a > b
    count_t crossings = 0;
    std::size_t i = 0;
    for (std::size_t j = 0; j < nv.size(); ++j) {
        while (i < nu.size() && nu[i] <= nv[j]) ++i;  // now nu[i..] > nv[j]
        crossings += static_cast<count_t>(nu.size() - i);
    }
    return crossings;
}

CrossingMatrix crossing_matrix(const Instance& inst) {
    const vertex_t n = inst.n_free();
    CrossingMatrix m(n);
    for (vertex_t u = 0; u < n; ++u) {
        for (vertex_t v = 0; v < n; ++v) {
            if (u != v) m(u, v) = pairwise_crossings(inst, u, v);
        }
    }
    return m;
}

count_t count_crossings(const Instance& inst, const Ordering& ord) {
    check_ordering(inst, ord);
    if (inst.n_edges() < 2) return 0;
    const std::vector<vertex_t> pos = inverse_permutation(ord);

    std::vector<Edge> edges = inst.edges();
    std::sort(edges.begin(), edges.end(), [&pos](const Edge& a, const Edge& b) {
        if (pos[a.free] != pos[b.free]) return pos[a.free] < pos[b.free];
        return a.fixed < b.fixed;
    });
    std::vector<vertex_t> keys(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i) keys[i] = edges[i].fixed;
    std::vector<vertex_t> scratch(keys.size());
    return merge_count(keys, scratch, 0, keys.size());
}

count_t count_crossings_quadratic(const Instance& inst, const Ordering& ord) {
    check_ordering(inst, ord);
    const std::vector<vertex_t> pos = inverse_permutation(ord);
    const auto& edges = inst.edges();
    count_t total = 0;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            const Edge& e = edges[i];
            const Edge& f = edges[j];
            if (e.fixed == f.fixed || e.free == f.free) continue;  // shared endpoint
            const bool fixed_lt = e.fixed < f.fixed;
            const bool free_lt = pos[e.free] < pos[f.free];
            if (fixed_lt != free_lt) ++total;
        }
    }
    return total;
}

count_t count_crossings(const CrossingMatrix& m, const Ordering& ord) {
    const vertex_t n = m.size();
    std::vector<vertex_t> pos(n);
    for (vertex_t i = 0; i < n; ++i) pos[ord[i]] = i;
    count_t total = 0;
    for (vertex_t u = 0; u < n; ++u) {
        for (vertex_t v = u + 1; v < n; ++v) {
            total += pos[u] < pos[v] ? m(u, v) : m(v, u);
        }
    }
    return total;
}

count_t pair_min_sum(const CrossingMatrix& m) {
    count_t total = 0;
    for (vertex_t u = 0; u < m.size(); ++u) {
        for (vertex_t v = u + 1; v < m.size(); ++v) {
            total += std::min(m(u, v), m(v, u));
        }
    }
    return total;
}

}  // namespace oscm
