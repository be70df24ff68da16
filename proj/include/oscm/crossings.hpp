#ifndef OSCM_CROSSINGS_HPP
#define OSCM_CROSSINGS_HPP

#include <cassert>
#include <vector>

#include "oscm/instance.hpp"

namespace oscm {

// Dense matrix of pairwise crossing numbers: (u,v) holds cr(u,v), the
// crossings charged to placing u above v. Diagonal is zero. Satisfies
// cr(u,v) + cr(v,u) = deg(u)*deg(v) - common_neighbors(u,v).
class CrossingMatrix {
   public:
    CrossingMatrix() = default;
    explicit CrossingMatrix(vertex_t n) : n_(n), data_(static_cast<std::size_t>(n) * n, 0) {}
    CrossingMatrix(vertex_t n, std::vector<count_t> data) : n_(n), data_(std::move(data)) {
        assert(data_.size() == static_cast<std::size_t>(n_) * n_);
    }

    vertex_t size() const { return n_; }
    count_t operator()(vertex_t u, vertex_t v) const {
        return data_[static_cast<std::size_t>(u) * n_ + v];
    }
    count_t& operator()(vertex_t u, vertex_t v) {
        return data_[static_cast<std::size_t>(u) * n_ + v];
    }

    friend bool operator==(const CrossingMatrix&, const CrossingMatrix&) = default;

   private:
    vertex_t n_ = 0;
    std::vector<count_t> data_;
};

// cr(u,v): |{(a,b) in N(u) x N(v) : pos(a) > pos(b)}|, computed by a merge
// over the sorted neighbor lists. Throws std::invalid_argument on u == v or
// an invalid id.
count_t pairwise_crossings(const Instance& inst, vertex_t u, vertex_t v);

CrossingMatrix crossing_matrix(const Instance& inst);

// Total crossings of the drawing respecting pi1 and `ord`.
// Fast route: sort edges by (free position, fixed position) and merge-count
// strict inversions of the fixed positions; ties (shared endpoints) never
// count. O(m log m).
count_t count_crossings(const Instance& inst, const Ordering& ord);

// Reference route: test every edge pair directly. O(m^2).
count_t count_crossings_quadratic(const Instance& inst, const Ordering& ord);

// Pair-sum route over a precomputed matrix: sum of cr(u,v) over u before v.
count_t count_crossings(const CrossingMatrix& m, const Ordering& ord);

// Sum over unordered pairs of min(cr(u,v), cr(v,u)): a lower bound on the
// optimum, attained iff the penalty digraph admits an order with every arc
// target first.
count_t pair_min_sum(const CrossingMatrix& m);

}  // namespace oscm

#endif
