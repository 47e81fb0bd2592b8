#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "flatreg/enumerate.hpp"
#include "flatreg/partition.hpp"

// Theorem-level checkers. Each checker compares an enumerated family against
// an independently produced object (another family, the bijection image set,
// or the generating-function table) and reports pass/fail with the first
// counterexample. Reports are deterministic for fixed parameters.
//
// Sweeps over many parameter cells run through run_jobs, which has a serial
// reference path and an OpenMP path; both return reports in job order, so
// output is identical regardless of mode.

namespace flatreg {

struct verification_report {
    std::string claim;
    std::vector<std::pair<std::string, std::string>> params;
    bool pass = false;
    bool conjectural = false;  // the claim is evidence, not a proved identity
    long long lhs = 0;         // the two counts compared
    long long rhs = 0;
    std::string counterexample;  // empty exactly when pass

    friend bool operator==(const verification_report&, const verification_report&) = default;
};

std::string to_line(const verification_report& r);  // one-line text form

enum class exec_mode { serial, openmp };

using report_job = std::function<verification_report()>;

std::vector<verification_report> run_jobs(const std::vector<report_job>& jobs, exec_mode mode);

// Count tables agree as maps and the P -> Q map is an injection onto the
// m-regular partitions of n with matching type on every member.
verification_report verify_main_theorem(int n, int m);

// |P(n,m)| = |Q(n,m)|, refined: the distribution of the total alternating
// sum over P matches the distribution of the number of parts over Q.
verification_report verify_glaisher(int n, int m);

// variant 1: gap-2 partitions vs P(5) types (S1,0,0,S4) != 0.
// variant 2: gap-2 partitions without 1s vs P(5) types (0,S2,S3,0) != 0.
verification_report verify_rr_companion(int n, int variant);

// AG(d,i) frequency family vs P(2d+1) nonzero types with S_i = S_{2d+1-i} = 0.
verification_report verify_ag_companion(int n, int d, int i);

// Exhaustive double round trip for every n <= n_max and every m in m_set,
// with the trace ordering and bound clauses checked on every instance.
verification_report verify_roundtrip(int n_max, std::vector<int> m_set,
                                     exec_mode mode = exec_mode::serial);

// Single (n, m) cell of the round-trip sweep.
verification_report verify_roundtrip_cell(int n, int m);

// First difference between two count tables; empty when they agree.
std::string first_table_mismatch(const count_table& lhs, const count_table& rhs);

}  // namespace flatreg
