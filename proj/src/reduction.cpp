#include "oscm/reduction.hpp"

#include <algorithm>
#include <array>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "oscm/crossings.hpp"
#include "oscm/solvers.hpp"

namespace oscm {

namespace {

// splitmix64; fixed across platforms so seeded reports replay everywhere
std::uint64_t next_random(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

std::uint64_t next_below(std::uint64_t& state, std::uint64_t bound) {
    return next_random(state) % bound;
}

StarInstanceSpec blocked_like(vertex_t star_count, bool reversed) {
    StarInstanceSpec spec;
    spec.star_count = star_count;
    for (vertex_t s = 0; s < star_count; ++s) {
        for (vertex_t l = 0; l < 4; ++l) {
            const vertex_t star = reversed ? star_count - 1 - s : s;
            spec.leaf_permutation.push_back({star, l});
        }
    }
    return spec;
}

}  // namespace

StarInstanceSpec blocked_star_spec(vertex_t star_count) { return blocked_like(star_count, false); }

StarInstanceSpec reversed_star_spec(vertex_t star_count) { return blocked_like(star_count, true); }

StarInstanceSpec interleaved_star_spec(vertex_t star_count) {
    StarInstanceSpec spec;
    spec.star_count = star_count;
    for (vertex_t l = 0; l < 4; ++l) {
        for (vertex_t s = 0; s < star_count; ++s) {
            spec.leaf_permutation.push_back({s, l});
        }
    }
    return spec;
}

StarInstanceSpec random_star_spec(vertex_t star_count, std::uint64_t& state) {
    StarInstanceSpec spec = blocked_star_spec(star_count);
    auto& perm = spec.leaf_permutation;
    for (std::size_t i = perm.size(); i > 1; --i) {  // Fisher-Yates
        const std::size_t j = next_below(state, i);
        std::swap(perm[i - 1], perm[j]);
    }
    return spec;
}

Instance build_star_instance(const StarInstanceSpec& spec) {
    const vertex_t n = spec.star_count;
    if (n < 0) throw std::invalid_argument("star count must be nonnegative");
    if (spec.leaf_permutation.size() != static_cast<std::size_t>(4) * n) {
        throw std::invalid_argument("leaf permutation must assign exactly 4*star_count positions");
    }
    std::vector<std::array<bool, 4>> seen(n, {false, false, false, false});
    std::vector<Edge> edges;
    edges.reserve(spec.leaf_permutation.size());
    for (std::size_t pos = 0; pos < spec.leaf_permutation.size(); ++pos) {
        const StarLeaf& sl = spec.leaf_permutation[pos];
        if (sl.star < 0 || sl.star >= n || sl.leaf < 0 || sl.leaf >= 4) {
            throw std::invalid_argument("leaf permutation entry out of range at position " +
                                        std::to_string(pos));
        }
        if (seen[sl.star][sl.leaf]) {
            throw std::invalid_argument("leaf assigned twice: star " + std::to_string(sl.star) +
                                        " leaf " + std::to_string(sl.leaf));
        }
        seen[sl.star][sl.leaf] = true;
        edges.push_back({static_cast<vertex_t>(pos), sl.star});
    }
    return build_instance(4 * n, n, std::move(edges));
}

Instance apex_augment(const Instance& inst) {
    std::vector<Edge> edges = inst.edges();
    const vertex_t apex = inst.n_fixed();
    for (vertex_t u = 0; u < inst.n_free(); ++u) edges.push_back({apex, u});
    return build_instance(inst.n_fixed() + 1, inst.n_free(), std::move(edges));
}

namespace {

// difference crossings(G', pi2) - crossings(G, pi2) across orderings;
// exhaustive for small free layers, a seeded sample otherwise
void check_per_ordering(const Instance& g, const Instance& g_prime, vertex_t n, bool exhaustive,
                        std::uint64_t& sample_state, OffsetRow& row) {
    const CrossingMatrix mg = crossing_matrix(g);
    const CrossingMatrix mgp = crossing_matrix(g_prime);
    bool first = true;
    bool constant = true;
    count_t value = 0;
    auto consider = [&](const Ordering& ord) {
        const count_t diff = count_crossings(mgp, ord) - count_crossings(mg, ord);
        if (first) {
            value = diff;
            first = false;
        } else if (diff != value) {
            constant = false;
        }
    };
    if (exhaustive) {
        Ordering perm = identity_ordering(n);
        do {
            consider(perm);
        } while (std::next_permutation(perm.begin(), perm.end()));
    } else {
        Ordering perm = identity_ordering(n);
        consider(perm);
        std::reverse(perm.begin(), perm.end());
        consider(perm);
        for (int s = 0; s < 512; ++s) {
            Ordering ord = identity_ordering(n);
            for (std::size_t i = ord.size(); i > 1; --i) {
                std::swap(ord[i - 1], ord[next_below(sample_state, i)]);
            }
            consider(ord);
        }
    }
    row.per_ordering_constant = constant;
    row.per_ordering_value = value;
}

}  // namespace

OffsetReport measure_offset(vertex_t star_count, int trials, std::uint64_t seed) {
    if (star_count < 0) throw std::invalid_argument("star count must be nonnegative");
    if (trials < 1) throw std::invalid_argument("at least one trial required");
    if (star_count > kExactDpLimit) {
        throw SizeGuardError("measure_offset: star count above exact-solver limit", kExactDpLimit,
                             star_count);
    }

    OffsetReport report;
    report.star_count = star_count;
    report.seed = seed;
    report.trials = trials;
    report.per_ordering_exhaustive = star_count <= 8;

    std::uint64_t shuffle_state = seed;
    std::uint64_t sample_state = seed ^ 0x5bd1e995u;

    std::vector<std::pair<std::string, StarInstanceSpec>> layouts;
    layouts.emplace_back("blocked", blocked_star_spec(star_count));
    layouts.emplace_back("reversed", reversed_star_spec(star_count));
    layouts.emplace_back("interleaved", interleaved_star_spec(star_count));
    for (int t = 1; t <= trials; ++t) {
        layouts.emplace_back(std::to_string(t), random_star_spec(star_count, shuffle_state));
    }

    for (auto& [label, spec] : layouts) {
        const Instance g = build_star_instance(spec);
        const Instance g_prime = apex_augment(g);
        OffsetRow row;
        row.label = label;
        row.opt_g = solve_exact(g).crossings;
        row.opt_g_prime = solve_exact(g_prime).crossings;
        row.diff = row.opt_g_prime - row.opt_g;
        check_per_ordering(g, g_prime, star_count, report.per_ordering_exhaustive, sample_state,
                           row);
        report.rows.push_back(std::move(row));
    }

    report.all_diffs_equal = true;
    for (const OffsetRow& row : report.rows) {
        if (row.diff != report.rows.front().diff || !row.per_ordering_constant ||
            row.per_ordering_value != row.diff) {
            report.all_diffs_equal = false;
        }
    }
    if (report.all_diffs_equal && !report.rows.empty()) {
        report.constant = report.rows.front().diff;
        const count_t n = star_count;
        report.matches_lemma_form = report.constant == n * (n - 1);
        report.matches_proof_form = report.constant == 2 * n * (n - 1);
    }
    return report;
}

std::string OffsetReport::to_text() const {
    std::ostringstream out;
    out << "offset report: stars=" << star_count << " trials=" << trials << " seed=" << seed
        << "\n";
    out << std::setw(12) << std::left << "trial" << std::right << std::setw(10) << "opt(G)"
        << std::setw(10) << "opt(G')" << std::setw(8) << "diff" << "\n";
    for (const OffsetRow& row : rows) {
        out << std::setw(12) << std::left << row.label << std::right << std::setw(10) << row.opt_g
            << std::setw(10) << row.opt_g_prime << std::setw(8) << row.diff << "\n";
    }
    const count_t n = star_count;
    out << "per-ordering difference checked "
        << (per_ordering_exhaustive ? "exhaustively over all orderings"
                                    : "on a seeded ordering sample")
        << "\n";
    if (all_diffs_equal) {
        out << "all differences equal: yes, constant " << constant << "\n";
        out << "n(n-1) = " << n * (n - 1) << ": " << (matches_lemma_form ? "match" : "NO match")
            << "\n";
        out << "2n(n-1) = " << 2 * n * (n - 1) << ": "
            << (matches_proof_form ? "match" : "NO match") << "\n";
        if (matches_lemma_form && matches_proof_form) {
            out << "matched formula: n(n-1) and 2n(n-1) coincide here\n";
        } else if (matches_proof_form) {
            out << "matched formula: 2n(n-1)\n";
        } else if (matches_lemma_form) {
            out << "matched formula: n(n-1)\n";
        } else {
            out << "matched formula: neither\n";
        }
    } else {
        out << "all differences equal: NO\n";
        out << "matched formula: neither\n";
    }
    return out.str();
}

}  // namespace oscm
