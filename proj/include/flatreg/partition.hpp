#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

// Integer partitions in exact arithmetic, together with the statistics the
// m-flat / m-regular correspondence is built from: alternating sum types,
// residue profiles, flatness and regularity predicates, descents, and the
// entrywise pi + m*sigma' combination.
//
// Conventions: a stored partition is a nonincreasing sequence of positive
// integers; the empty partition is the unique partition of 0. Every partition
// is logically followed by an infinite tail of zeros, which part(i) exposes.
// Reported positions are 1-based.

namespace flatreg {

// Input outside the family an operation requires (CLI exit 2).
class family_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Malformed argument or exceeded bound (CLI exit 1).
class argument_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A structural invariant of the correspondence failed; reaching this is a bug.
class invariant_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class partition {
public:
    partition() = default;

    // Wraps a sequence that is already nonincreasing with all parts >= 1.
    static partition from_sorted(std::vector<int> parts);

    const std::vector<int>& parts() const noexcept { return parts_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    bool empty() const noexcept { return parts_.empty(); }
    long long weight() const noexcept;

    // 1-based access with the implicit zero tail: part(i) == 0 for i > length().
    int part(int i) const noexcept;

    friend auto operator<=>(const partition&, const partition&) = default;

private:
    std::vector<int> parts_;
};

// Normalizes an arbitrary sequence of nonnegative values: zeros stripped, the
// rest sorted nonincreasing. Rejects negative values.
partition make_partition(std::vector<int> values);

partition conjugate(const partition& lambda);

struct type_vector {
    int modulus = 2;
    std::vector<int> entries;  // exactly modulus - 1 of them

    bool is_zero() const noexcept;
    int support() const noexcept;  // number of nonzero coordinates; 1 = pure type

    friend auto operator<=>(const type_vector&, const type_vector&) = default;
};

// (Sigma_1, ..., Sigma_{m-1}): blockwise alternating differences over
// consecutive m-blocks of parts, after zero padding to a multiple of m.
type_vector alt_sum_type(const partition& lambda, int m);

// counts[j] = number of parts congruent to j mod m, for j = 0..m-1.
std::vector<int> residue_profile(const partition& lambda, int m);

// Entries 1..m-1 of the residue profile; equals the length type whenever
// lambda is m-regular, and extends it to arbitrary partitions otherwise.
type_vector length_type(const partition& lambda, int m);

// All consecutive differences < m and the smallest part < m.
bool is_m_flat(const partition& lambda, int m);

// No part divisible by m (the family Q).
bool is_m_regular(const partition& lambda, int m);

// Maximal part multiplicity <= m-1 (the family P).
bool is_in_p(const partition& lambda, int m);

// 1-based positions i such that lambda_i = k*m + j1 with 0 < j1 < m and the
// next strictly smaller part not divisible by m equals (k-1)*m + j2 with
// 0 < j1 < j2 < m. A part divisible by m is never itself a descent.
std::vector<int> descents(const partition& lambda, int m);

// Entrywise lambda_i + m * sigma_conj_i. sigma_conj may be shorter than pi
// (the zero tail covers the rest), never longer.
partition scale_add(const partition& pi, const partition& sigma_conj, int m);

void require_modulus(int m);

std::string to_string(const partition& lambda);   // "32 24 23 16 12", "(empty)"
std::string to_plus_string(const partition& lambda);  // "3+3+2+2+1", "(empty)"
std::string to_string(const type_vector& t);      // "(1,2,1,1)"

}  // namespace flatreg
