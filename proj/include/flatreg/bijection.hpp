#pragma once

#include <vector>

#include "flatreg/partition.hpp"

// The weight- and type-preserving correspondence between m-flat and m-regular
// partitions, and its composition with conjugation, which carries the
// bounded-multiplicity family P onto the m-regular family Q.
//
// Forward direction: multiples of m are removed from an m-flat partition in
// two phases and banked, divided by m, in the auxiliary partition sigma;
// the surviving core pi (simultaneously m-flat and m-regular) then absorbs
// m * conjugate(sigma) entrywise. The reverse direction reconstructs every
// removal from the image alone. Removal order is fixed (largest value first,
// earliest position among equals) so traces are reproducible; the reverse
// records the same trace it unwinds.

namespace flatreg {

struct sigma_record {
    partition reduced;  // sigma: the banked multiples divided by m
    int modulus = 2;

    friend bool operator==(const sigma_record&, const sigma_record&) = default;
};

struct step1_removal {
    int value = 0;     // part removed, divisible by m
    int position = 0;  // 1-based index at removal time

    friend bool operator==(const step1_removal&, const step1_removal&) = default;
};

struct step2_removal {
    int value = 0;       // part k*m removed at 1-based position i
    int position = 0;
    int sigma_part = 0;  // k + i - 1

    friend bool operator==(const step2_removal&, const step2_removal&) = default;
};

struct bijection_trace {
    std::vector<step1_removal> step1;
    std::vector<step2_removal> step2;
    partition core;  // pi
    sigma_record sigma;

    friend bool operator==(const bijection_trace&, const bijection_trace&) = default;
};

struct step1_result {
    partition remainder;  // still m-flat; surviving multiples are distinct,
                          // not largest, and not inside descents
    std::vector<step1_removal> removals;
};

struct step2_result {
    partition core;  // m-flat and m-regular
    std::vector<step2_removal> removals;
};

struct map_result {
    partition image;
    bijection_trace trace;
};

struct split_result {
    partition core;        // pi
    partition sigma_conj;  // sigma'
};

// Removes every part divisible by m whose removal keeps the partition m-flat:
// all but the last of a run of equal multiples, a largest part divisible by m,
// and multiples sitting strictly inside a descent.
step1_result step1_extract(const partition& lambda, int m);

// Repeatedly removes the largest remaining part divisible by m, at 1-based
// position i and value k*m, subtracting m from the parts above it and banking
// the reduced sigma part k + i - 1.
step2_result step2_extract(const partition& lambda0, int m);

// The full m-flat -> m-regular map: step 1, step 2, then pi + m*sigma'.
map_result flat_to_regular(const partition& lambda, int m);

// Peels mu into an m-flat, m-regular core plus sigma': whenever some
// mu_i - mu_{i+1} >= m (the part after the smallest counts as 0), add 1 to
// the first i entries of sigma' and subtract m from the first i parts.
split_result split_flat_core(const partition& mu, int m);

// The inverse map: split off (pi, sigma'), then re-enter the parts of
// sigma = conjugate(sigma') from largest to smallest. A part that fits whole
// while preserving flatness is held for the final insertions; otherwise the
// unique unfolding position i >= 2 is found and value (s-i+1)*m is inserted
// there with m added to the parts above.
map_result regular_to_flat(const partition& mu, int m);

map_result p_to_q_traced(const partition& lambda, int m);
partition p_to_q(const partition& lambda, int m);

map_result q_to_p_traced(const partition& mu, int m);
partition q_to_p(const partition& mu, int m);

// Testing oracle: finds the unique preimage of mu under p_to_q by exhausting
// the partitions of |mu|. Weight is capped; NotFound / NotUnique signal a
// bug in the correspondence, not bad input.
partition invert_by_search(const partition& mu, int m);

}  // namespace flatreg
