#ifndef OSCM_REDUCTION_HPP
#define OSCM_REDUCTION_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "oscm/instance.hpp"

namespace oscm {

// Which star's leaf occupies a pi1 position. `leaf` in [0,4) distinguishes
// the four leaves of one star.
struct StarLeaf {
    vertex_t star;
    vertex_t leaf;

    friend bool operator==(const StarLeaf&, const StarLeaf&) = default;
};

// A disjoint union of 4-stars: star centers form the free layer, the 4n
// leaves the fixed layer. leaf_permutation assigns each pi1 position
// (index 0..4n-1) its (star, leaf) pair, covering every pair exactly once.
struct StarInstanceSpec {
    vertex_t star_count = 0;
    std::vector<StarLeaf> leaf_permutation;
};

// Deterministic leaf layouts used alongside the random trials.
StarInstanceSpec blocked_star_spec(vertex_t star_count);      // s0 s0 s0 s0 s1 s1 ...
StarInstanceSpec reversed_star_spec(vertex_t star_count);     // blocked, reversed
StarInstanceSpec interleaved_star_spec(vertex_t star_count);  // s0 s1 ... s0 s1 ...
StarInstanceSpec random_star_spec(vertex_t star_count, std::uint64_t& state);

// Instance with n_fixed = 4n, n_free = n; each center adjacent to its four
// leaves' positions. Throws std::invalid_argument on a malformed spec.
Instance build_star_instance(const StarInstanceSpec& spec);

// G': one new fixed vertex appended to the end of pi1, adjacent to every
// free vertex. Turns a disjoint union of stars covering all fixed vertices
// into a tree.
Instance apex_augment(const Instance& inst);

struct OffsetRow {
    std::string label;  // "blocked", "reversed", "interleaved", or trial number
    count_t opt_g = 0;
    count_t opt_g_prime = 0;
    count_t diff = 0;
    bool per_ordering_constant = false;  // crossings(G',pi2)-crossings(G,pi2) same for all checked pi2
    count_t per_ordering_value = 0;
};

struct OffsetReport {
    vertex_t star_count = 0;
    std::uint64_t seed = 0;
    int trials = 0;
    bool per_ordering_exhaustive = false;  // all n! orderings checked vs. a seeded sample
    std::vector<OffsetRow> rows;

    bool all_diffs_equal = false;
    count_t constant = 0;       // the common difference, when all_diffs_equal
    bool matches_lemma_form = false;  // constant == n(n-1)
    bool matches_proof_form = false;  // constant == 2n(n-1)

    std::string to_text() const;  // table: trial, opt(G), opt(G'), diff; footer with matched formula
};

// For the deterministic layouts plus `trials` seeded random leaf
// permutations: solve G and G' = apex_augment(G) exactly, collect
// opt(G') - opt(G), and check that crossings(G',pi2) - crossings(G,pi2) is
// one constant across orderings (every ordering for star_count <= 8, a
// seeded sample above). Guarded by the exact-solver limit.
OffsetReport measure_offset(vertex_t star_count, int trials, std::uint64_t seed);

}  // namespace oscm

#endif
