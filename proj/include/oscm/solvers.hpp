#ifndef OSCM_SOLVERS_HPP
#define OSCM_SOLVERS_HPP

#include <string>
#include <variant>

#include "oscm/crossings.hpp"
#include "oscm/errors.hpp"
#include "oscm/instance.hpp"
#include "oscm/penalty.hpp"

namespace oscm {

enum class Method {
    exact_dp,
    brute_force,
    barycenter,
    median,
    greedy_switch,
    harrigan_healy,
};

const char* method_name(Method m);  // "exact-dp", "brute-force", ...

// An ordering with its certified crossing count. The count is recomputed
// from the ordering at construction; a solver whose claimed value disagrees
// with the recount throws std::logic_error.
struct SolveResult {
    Ordering ordering;
    count_t crossings = 0;
    Method method = Method::exact_dp;
    bool optimal = false;
};

inline constexpr vertex_t kBruteForceLimit = 10;
inline constexpr vertex_t kExactDpLimit = 24;

// Global minimum over all n_free! orderings; ties resolve to the
// lexicographically smallest ordering. Guarded at kBruteForceLimit.
SolveResult brute_force_opt(const Instance& inst);

// Optimal ordering by subset DP over the crossing matrix,
// f(S) = min over v in S of f(S\{v}) + sum over u in S\{v} of cr(u,v),
// O(2^n n^2) time, O(2^n) space. Ties pick the smallest free id. Guarded at
// kExactDpLimit.
SolveResult solve_exact(const Instance& inst);

// Free vertices sorted by mean fixed-neighbor position; isolated vertices
// keep input id order at the front; ties by id. Position means are compared
// exactly (cross-multiplied), no floating point.
SolveResult barycenter(const Instance& inst);

// Same scheme with the lower median of the neighbor positions.
SolveResult median_order(const Instance& inst);

// Adjacent-swap descent from `start`: swap u,v whenever cr(v,u) < cr(u,v)
// until a full pass makes no swap. The total strictly decreases per swap, so
// this terminates at an adjacent-swap local optimum.
SolveResult greedy_switch(const Instance& inst, Ordering start);

// SolveResult for the refuted ordering algorithm, or the witness cycle.
std::variant<SolveResult, CyclicWitness> harrigan_healy_solve(const Instance& inst);

// Accounting identity for an optimal result:
//   crossings == pair_min_sum + weight of penalized arcs under the ordering,
// and that penalized weight equals the minimum weighted feedback arc set of
// the penalty digraph (FAS verified exhaustively for n_free <= 10).
struct FasReport {
    count_t crossings = 0;
    count_t sum_min = 0;
    count_t penalized = 0;
    bool identity_ok = false;  // crossings == sum_min + penalized
    bool fas_checked = false;  // exhaustive FAS comparison ran
    count_t min_fas = 0;       // valid when fas_checked
    bool fas_ok = false;       // penalized == min_fas

    std::string to_text() const;
};

// Throws std::invalid_argument unless res.optimal.
FasReport fas_accounting(const Instance& inst, const SolveResult& res);

}  // namespace oscm

#endif
