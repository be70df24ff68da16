#include "oscm/solvers.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace oscm {

namespace {

constexpr count_t kInf = std::numeric_limits<count_t>::max();

// Recounts and certifies; the claimed value must match the recount.
SolveResult make_result(const Instance& inst, Ordering ord, count_t claimed, Method method,
                        bool optimal) {
    const count_t recount = count_crossings(inst, ord);
    if (recount != claimed) {
        std::ostringstream msg;
        msg << method_name(method) << " claimed " << claimed << " crossings but the ordering has "
            << recount;
        throw std::logic_error(msg.str());
    }
    return SolveResult{std::move(ord), recount, method, optimal};
}

SolveResult certified(const Instance& inst, Ordering ord, Method method, bool optimal) {
    const count_t total = count_crossings(inst, ord);
    return make_result(inst, std::move(ord), total, method, optimal);
}

}  // namespace

const char* method_name(Method m) {
    switch (m) {
        case Method::exact_dp: return "exact-dp";
        case Method::brute_force: return "brute-force";
        case Method::barycenter: return "barycenter";
        case Method::median: return "median";
        case Method::greedy_switch: return "greedy-switch";
        case Method::harrigan_healy: return "harrigan-healy";
    }
    return "?";
}

SolveResult brute_force_opt(const Instance& inst) {
    const vertex_t n = inst.n_free();
    if (n > kBruteForceLimit) {
        throw SizeGuardError("brute_force_opt: free layer too large", kBruteForceLimit, n);
    }
    const CrossingMatrix m = crossing_matrix(inst);
    Ordering perm = identity_ordering(n);
    Ordering best = perm;
    count_t best_cost = count_crossings(m, perm);
    // next_permutation walks lexicographically, so the strict improvement
    // rule keeps the lexicographically smallest optimal ordering
    while (std::next_permutation(perm.begin(), perm.end())) {
        const count_t cost = count_crossings(m, perm);
        if (cost < best_cost) {
            best_cost = cost;
            best = perm;
        }
    }
    return make_result(inst, std::move(best), best_cost, Method::brute_force, true);
}

SolveResult solve_exact(const Instance& inst) {
    const vertex_t n = inst.n_free();
    if (n > kExactDpLimit) {
        throw SizeGuardError("solve_exact: free layer too large", kExactDpLimit, n);
    }
    if (n == 0) return make_result(inst, {}, 0, Method::exact_dp, true);

    const CrossingMatrix m = crossing_matrix(inst);
    const std::uint32_t full = (1u << n) - 1u;
    std::vector<count_t> dp(static_cast<std::size_t>(full) + 1, kInf);
    std::vector<std::int8_t> last(static_cast<std::size_t>(full) + 1, -1);
    dp[0] = 0;

    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        count_t best = kInf;
        std::int8_t best_v = -1;
        for (vertex_t v = 0; v < n; ++v) {
            if (!(mask & (1u << v))) continue;
            const std::uint32_t prev = mask ^ (1u << v);
            // cost of placing v after every u already in prev
            count_t cost = dp[prev];
            for (std::uint32_t rest = prev; rest != 0; rest &= rest - 1) {
                cost += m(std::countr_zero(rest), v);
            }
            if (cost < best) {  // strict: the smallest free id wins ties
                best = cost;
                best_v = static_cast<std::int8_t>(v);
            }
        }
        dp[mask] = best;
        last[mask] = best_v;
    }

    Ordering ord(n);
    std::uint32_t mask = full;
    for (vertex_t pos = n - 1; pos >= 0; --pos) {
        const vertex_t v = last[mask];
        ord[pos] = v;
        mask ^= 1u << v;
    }
    return make_result(inst, std::move(ord), dp[full], Method::exact_dp, true);
}

SolveResult barycenter(const Instance& inst) {
    const vertex_t n = inst.n_free();
    Ordering ord = identity_ordering(n);
    // mean neighbor position as an exact fraction sum/deg, compared by
    // cross-multiplication; isolated vertices sort ahead of every real mean
    std::vector<count_t> num(n), den(n);
    for (vertex_t u = 0; u < n; ++u) {
        const auto& nbors = inst.neighbors(u);
        if (nbors.empty()) {
            num[u] = -1;
            den[u] = 1;
        } else {
            num[u] = std::accumulate(nbors.begin(), nbors.end(), count_t{0});
            den[u] = static_cast<count_t>(nbors.size());
        }
    }
    std::sort(ord.begin(), ord.end(), [&](vertex_t a, vertex_t b) {
        const count_t lhs = num[a] * den[b];
        const count_t rhs = num[b] * den[a];
        if (lhs != rhs) return lhs < rhs;
        return a < b;
    });
    return certified(inst, std::move(ord), Method::barycenter, false);
}

SolveResult median_order(const Instance& inst) {
    const vertex_t n = inst.n_free();
    Ordering ord = identity_ordering(n);
    std::vector<count_t> key(n);
    for (vertex_t u = 0; u < n; ++u) {
        const auto& nbors = inst.neighbors(u);
        // lower median for even degree; isolated vertices go first
        key[u] = nbors.empty() ? -1 : nbors[(nbors.size() - 1) / 2];
    }
    std::sort(ord.begin(), ord.end(), [&](vertex_t a, vertex_t b) {
        if (key[a] != key[b]) return key[a] < key[b];
        return a < b;
    });
    return certified(inst, std::move(ord), Method::median, false);
}

SolveResult greedy_switch(const Instance& inst, Ordering start) {
    if (!is_valid_ordering(inst, start)) {
        throw std::invalid_argument("greedy_switch: start is not a permutation");
    }
    const CrossingMatrix m = crossing_matrix(inst);
    bool swapped = true;
    while (swapped) {
        swapped = false;
        for (std::size_t i = 0; i + 1 < start.size(); ++i) {
            const vertex_t u = start[i];
            const vertex_t v = start[i + 1];
            if (m(v, u) < m(u, v)) {  // swapping changes the total by cr(v,u) - cr(u,v)
                std::swap(start[i], start[i + 1]);
                swapped = true;
            }
        }
    }
    return certified(inst, std::move(start), Method::greedy_switch, false);
}

std::variant<SolveResult, CyclicWitness> harrigan_healy_solve(const Instance& inst) {
    auto outcome = harrigan_healy_order(inst);
    if (std::holds_alternative<CyclicWitness>(outcome)) {
        return std::get<CyclicWitness>(std::move(outcome));
    }
    return certified(inst, std::get<Ordering>(std::move(outcome)), Method::harrigan_healy, false);
}

FasReport fas_accounting(const Instance& inst, const SolveResult& res) {
    if (!res.optimal) {
        throw std::invalid_argument("fas_accounting requires an optimal result");
    }
    const CrossingMatrix m = crossing_matrix(inst);
    const PenaltyGraph pg = build_penalty_graph(m);

    FasReport report;
    report.crossings = res.crossings;
    report.sum_min = pair_min_sum(m);
    report.penalized = penalized_weight(pg, res.ordering);
    report.identity_ok = report.crossings == report.sum_min + report.penalized;

    if (inst.n_free() <= kBruteForceLimit) {
        // exhaustive minimum weighted feedback arc set: minimize the paid
        // weight over every vertex ordering
        Ordering perm = identity_ordering(inst.n_free());
        count_t best = penalized_weight(pg, perm);
        while (std::next_permutation(perm.begin(), perm.end())) {
            best = std::min(best, penalized_weight(pg, perm));
        }
        report.fas_checked = true;
        report.min_fas = best;
        report.fas_ok = report.penalized == best;
    }
    return report;
}

std::string FasReport::to_text() const {
    std::ostringstream out;
    out << "crossings: " << crossings << "\n"
        << "pair-min sum: " << sum_min << "\n"
        << "penalized arc weight: " << penalized << "\n"
        << "identity crossings == sum + penalized: " << (identity_ok ? "ok" : "VIOLATED") << "\n";
    if (fas_checked) {
        out << "minimum feedback arc set weight: " << min_fas << "\n"
            << "penalized weight is minimum: " << (fas_ok ? "ok" : "VIOLATED") << "\n";
    } else {
        out << "minimum feedback arc set: not checked (free layer above exhaustive limit)\n";
    }
    return out.str();
}

}  // namespace oscm
