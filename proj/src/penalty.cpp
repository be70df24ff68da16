#include "oscm/penalty.hpp"

#include <algorithm>
#include <set>

namespace oscm {

namespace {

std::vector<std::vector<vertex_t>> successor_lists(const PenaltyGraph& pg) {
    std::vector<std::vector<vertex_t>> succ(pg.n_free);
    for (const PenaltyArc& a : pg.arcs) succ[a.from].push_back(a.to);
    for (auto& s : succ) std::sort(s.begin(), s.end());
    return succ;
}

}  // namespace

PenaltyGraph build_penalty_graph(const CrossingMatrix& m) {
    PenaltyGraph pg;
    pg.n_free = m.size();
    for (vertex_t u = 0; u < m.size(); ++u) {
        for (vertex_t v = 0; v < m.size(); ++v) {
            if (u != v && m(u, v) > m(v, u)) {
                pg.arcs.push_back({u, v, m(u, v) - m(v, u)});
            }
        }
    }
    return pg;
}

std::optional<std::vector<vertex_t>> find_cycle(const PenaltyGraph& pg) {
    const auto succ = successor_lists(pg);
    enum : char { kWhite, kOnStack, kDone };
    std::vector<char> color(pg.n_free, kWhite);
    std::vector<vertex_t> stack;

    // Iterative DFS so deep graphs cannot overflow the call stack.
    struct Frame {
        vertex_t v;
        std::size_t next;
    };
    std::vector<Frame> frames;
    for (vertex_t start = 0; start < pg.n_free; ++start) {
        if (color[start] != kWhite) continue;
        frames.push_back({start, 0});
        color[start] = kOnStack;
        stack.push_back(start);
        while (!frames.empty()) {
            Frame& f = frames.back();
            if (f.next < succ[f.v].size()) {
                const vertex_t w = succ[f.v][f.next++];
                if (color[w] == kOnStack) {
                    // cycle = stack suffix starting at w, in discovery order
                    auto it = std::find(stack.begin(), stack.end(), w);
                    return std::vector<vertex_t>(it, stack.end());
                }
                if (color[w] == kWhite) {
                    color[w] = kOnStack;
                    stack.push_back(w);
                    frames.push_back({w, 0});
                }
            } else {
                color[f.v] = kDone;
                stack.pop_back();
                frames.pop_back();
            }
        }
    }
    return std::nullopt;
}

bool is_acyclic(const PenaltyGraph& pg) { return !find_cycle(pg).has_value(); }

count_t penalized_weight(const PenaltyGraph& pg, const Ordering& ord) {
    std::vector<vertex_t> pos(pg.n_free);
    for (std::size_t i = 0; i < ord.size(); ++i) pos[ord[i]] = static_cast<vertex_t>(i);
    count_t total = 0;
    for (const PenaltyArc& a : pg.arcs) {
        if (pos[a.from] < pos[a.to]) total += a.weight;
    }
    return total;
}

std::variant<Ordering, CyclicWitness> harrigan_healy_order(const Instance& inst) {
    const PenaltyGraph pg = build_penalty_graph(crossing_matrix(inst));
    if (auto cycle = find_cycle(pg)) {
        return CyclicWitness{std::move(*cycle)};
    }

    // Arc (u,v) means u-before-v pays extra, so v must be placed first.
    // Kahn over that precedence, smallest free id among available vertices.
    std::vector<vertex_t> blockers(pg.n_free, 0);  // arcs whose target is not yet placed
    std::vector<std::vector<vertex_t>> unblocks(pg.n_free);
    for (const PenaltyArc& a : pg.arcs) {
        ++blockers[a.from];
        unblocks[a.to].push_back(a.from);
    }
    std::set<vertex_t> available;
    for (vertex_t v = 0; v < pg.n_free; ++v) {
        if (blockers[v] == 0) available.insert(v);
    }
    Ordering ord;
    ord.reserve(pg.n_free);
    while (!available.empty()) {
        const vertex_t v = *available.begin();
        available.erase(available.begin());
        ord.push_back(v);
        for (vertex_t w : unblocks[v]) {
            if (--blockers[w] == 0) available.insert(w);
        }
    }
    return ord;
}

}  // namespace oscm
