#include "oscm/search.hpp"

#include <algorithm>
#include <cassert>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>
#include <tuple>

#include "oscm/crossings.hpp"
#include "oscm/errors.hpp"
#include "oscm/io.hpp"
#include "oscm/penalty.hpp"

namespace oscm {

namespace {

// Decodes one Prufer sequence over labels 0..n-1 (fixed side 0..a-1, free
// side a..n-1) and keeps the tree only if every edge joins the two sides.
// Rejects as soon as one edge stays inside a side.
bool decode_bipartite_tree(const std::vector<vertex_t>& seq, vertex_t a, vertex_t n,
                           std::vector<Edge>& out) {
    out.clear();
    auto push_edge = [&](vertex_t x, vertex_t y) {
        const bool x_fixed = x < a;
        if (x_fixed == (y < a)) return false;
        if (x_fixed) {
            out.push_back({x, static_cast<vertex_t>(y - a)});
        } else {
            out.push_back({y, static_cast<vertex_t>(x - a)});
        }
        return true;
    };

    std::vector<vertex_t> degree(n, 1);
    for (vertex_t x : seq) ++degree[x];

    vertex_t ptr = 0;
    while (degree[ptr] != 1) ++ptr;
    vertex_t leaf = ptr;
    for (vertex_t x : seq) {
        if (!push_edge(leaf, x)) return false;
        if (--degree[x] == 1 && x < ptr) {
            leaf = x;
        } else {
            ++ptr;
            while (degree[ptr] != 1) ++ptr;
            leaf = ptr;
        }
    }
    return push_edge(leaf, n - 1);
}

std::uint64_t int_pow(std::uint64_t base, int exp) {
    std::uint64_t r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

// Odometer over base-n digits, least significant first.
void advance_digits(std::vector<vertex_t>& digits, vertex_t base, std::uint64_t by) {
    for (std::size_t i = 0; i < digits.size() && by != 0; ++i) {
        const std::uint64_t total = digits[i] + by;
        digits[i] = static_cast<vertex_t>(total % base);
        by = total / base;
    }
}

// Visits the trees whose Prufer sequence index is start, start+stride, ...
template <typename Visitor>
void scan_bipartite_trees(vertex_t a, vertex_t b, std::uint64_t start, std::uint64_t stride,
                          Visitor&& visit) {
    const vertex_t n = a + b;
    std::vector<Edge> edges;
    if (n <= 0) return;
    if (n == 1) {
        if (start == 0) visit(edges);  // the one-vertex tree has no edges
        return;
    }
    if (n == 2) {
        if (start == 0 && a == 1) {
            edges.push_back({0, 0});
            visit(edges);
        }
        return;
    }
    const std::uint64_t total = int_pow(n, n - 2);
    std::vector<vertex_t> digits(n - 2, 0);
    advance_digits(digits, n, start);
    for (std::uint64_t idx = start; idx < total; idx += stride) {
        if (decode_bipartite_tree(digits, a, n, edges)) visit(edges);
        advance_digits(digits, n, stride);
    }
}

std::vector<Edge> sorted_edges(std::vector<Edge> edges) {
    std::sort(edges.begin(), edges.end());
    return edges;
}

std::vector<Edge> reversed_pi1_edges(const std::vector<Edge>& edges, vertex_t n_fixed) {
    std::vector<Edge> rev;
    rev.reserve(edges.size());
    for (const Edge& e : edges) rev.push_back({n_fixed - 1 - e.fixed, e.free});
    return sorted_edges(std::move(rev));
}

// Lexicographically smallest edge set over all free-vertex relabelings.
std::vector<Edge> canonical_free_relabeling(const std::vector<Edge>& edges, vertex_t n_free) {
    std::vector<vertex_t> perm(n_free);
    for (vertex_t u = 0; u < n_free; ++u) perm[u] = u;
    std::vector<Edge> best = sorted_edges(edges);
    std::vector<Edge> candidate;
    while (std::next_permutation(perm.begin(), perm.end())) {
        candidate = edges;
        for (Edge& e : candidate) e.free = perm[e.free];
        std::sort(candidate.begin(), candidate.end());
        if (candidate < best) best = std::move(candidate);
    }
    return best;
}

struct WitnessKey {
    int n_total;
    vertex_t n_fixed;
    std::vector<Edge> edges;  // canonical under free relabeling

    friend auto operator<=>(const WitnessKey&, const WitnessKey&) = default;
};

CounterexampleWitness build_witness(const WitnessKey& key) {
    CounterexampleWitness w;
    w.n_total = key.n_total;
    w.instance =
        build_instance(key.n_fixed, static_cast<vertex_t>(key.n_total - key.n_fixed), key.edges);
    const CrossingMatrix m = crossing_matrix(w.instance);
    auto cycle = find_cycle(build_penalty_graph(m));
    assert(cycle.has_value());
    w.cycle = std::move(*cycle);
    if (w.instance.n_free() == 3) {
        w.cr_profile = {m(0, 1), m(1, 0), m(0, 2), m(2, 0), m(1, 2), m(2, 1)};
    }
    return w;
}

}  // namespace

void enumerate_bipartite_trees(vertex_t n_fixed, vertex_t n_free,
                               const std::function<void(const std::vector<Edge>&)>& visit) {
    if (n_fixed < 0 || n_free < 0 || n_fixed + n_free < 1) {
        throw std::invalid_argument("enumerate_bipartite_trees: need at least one vertex");
    }
    scan_bipartite_trees(n_fixed, n_free, 0, 1, visit);
}

std::uint64_t count_bipartite_trees(vertex_t n_fixed, vertex_t n_free) {
    std::uint64_t count = 0;
    enumerate_bipartite_trees(n_fixed, n_free, [&count](const std::vector<Edge>&) { ++count; });
    return count;
}

std::vector<CounterexampleWitness> find_cyclic_counterexamples(int max_total_vertices, int jobs) {
    if (max_total_vertices > kSearchBudget) {
        throw SizeGuardError("find_cyclic_counterexamples: vertex budget exceeded", kSearchBudget,
                             max_total_vertices);
    }
    jobs = std::max(jobs, 1);

    std::set<WitnessKey> keys;
    std::mutex keys_mutex;

    for (int total = 2; total <= max_total_vertices; ++total) {
        for (vertex_t a = 1; a < total; ++a) {
            const vertex_t b = static_cast<vertex_t>(total) - a;
            // a cycle needs >= 3 vertices: arcs are pairwise-antisymmetric
            // with no self-arcs
            if (b < 3) continue;

            auto worker = [&, a, b, total](std::uint64_t start) {
                std::vector<WitnessKey> local;
                scan_bipartite_trees(
                    a, b, start, static_cast<std::uint64_t>(jobs),
                    [&](const std::vector<Edge>& edges) {
                        // keep one representative per pi1-reversal pair
                        const std::vector<Edge> canon = sorted_edges(edges);
                        if (reversed_pi1_edges(canon, a) < canon) return;
                        const Instance inst = build_instance(a, b, canon);
                        if (is_acyclic(build_penalty_graph(crossing_matrix(inst)))) return;
                        local.push_back({total, a, canonical_free_relabeling(canon, b)});
                    });
                const std::lock_guard<std::mutex> lock(keys_mutex);
                keys.insert(local.begin(), local.end());
            };

            if (jobs == 1) {
                worker(0);
            } else {
                std::vector<std::thread> threads;
                threads.reserve(jobs);
                for (int j = 0; j < jobs; ++j) threads.emplace_back(worker, j);
                for (auto& t : threads) t.join();
            }
        }
    }

    std::vector<CounterexampleWitness> witnesses;
    witnesses.reserve(keys.size());
    for (const WitnessKey& key : keys) witnesses.push_back(build_witness(key));
    return witnesses;
}

bool match_paper_profile(const CounterexampleWitness& w) {
    if (w.instance.n_free() != 3) {
        throw std::invalid_argument("match_paper_profile: witness free layer must have 3 vertices");
    }
    static constexpr count_t target[6] = {2, 3, 3, 2, 4, 5};
    const CrossingMatrix m = crossing_matrix(w.instance);
    std::array<vertex_t, 3> relabel = {0, 1, 2};
    do {
        const auto [g, h, i] = relabel;
        if (m(g, h) == target[0] && m(h, g) == target[1] && m(g, i) == target[2] &&
            m(i, g) == target[3] && m(h, i) == target[4] && m(i, h) == target[5]) {
            return true;
        }
    } while (std::next_permutation(relabel.begin(), relabel.end()));
    return false;
}

std::string witness_to_text(const CounterexampleWitness& w) {
    std::ostringstream out;
    const vertex_t shift = w.instance.n_fixed() + 1;
    if (!w.cr_profile.empty()) {
        out << "c cr profile (u,v) pairs (0,1)(1,0)(0,2)(2,0)(1,2)(2,1):";
        for (count_t c : w.cr_profile) out << " " << c;
        out << "\n";
    }
    out << "c penalty cycle:";
    for (vertex_t u : w.cycle) out << " " << shift + u;
    out << "\n";
    out << serialize_instance(w.instance);
    return out.str();
}

}  // namespace oscm
