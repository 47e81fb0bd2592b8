#include "flatreg/verify.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "flatreg/bijection.hpp"

namespace flatreg {

namespace {

std::vector<int> nonmultiple_residues(const partition& p, int m) {
    std::vector<int> out;
    for (int v : p.parts())
        if (v % m != 0) out.push_back(v % m);
    return out;
}

long long table_total(const count_table& t) {
    long long s = 0;
    for (const auto& [type, c] : t.counts) s += c;
    return s;
}

std::string describe(const partition& p) { return "(" + to_plus_string(p) + ")"; }

// Trace clauses checked on every instance: sigma parts banked in step 2 are
// nondecreasing, at least as large as every step-1 removal divided by m, and
// at most the number of parts of the input not divisible by m; and the
// weights of core and sigma account for the input exactly.
std::string check_trace(const partition& lambda, const bijection_trace& tr, int m) {
    for (std::size_t t = 0; t + 1 < tr.step2.size(); ++t)
        if (tr.step2[t].sigma_part > tr.step2[t + 1].sigma_part)
            return "step-2 sigma parts regress in removal order";
    if (!tr.step1.empty() && !tr.step2.empty()) {
        int max1 = 0;
        for (const auto& r : tr.step1) max1 = std::max(max1, r.value / m);
        int min2 = tr.step2.front().sigma_part;
        for (const auto& r : tr.step2) min2 = std::min(min2, r.sigma_part);
        if (min2 < max1) return "a step-2 sigma part is below a step-1 removal";
    }
    const long long nonmult =
        static_cast<long long>(nonmultiple_residues(lambda, m).size());
    for (const auto& r : tr.step2)
        if (r.sigma_part > nonmult) return "a step-2 sigma part exceeds the nonmultiple count";
    long long sigma_weight = tr.sigma.reduced.weight();
    if (lambda.weight() != tr.core.weight() + m * sigma_weight)
        return "weights of core and sigma do not account for the input";
    return {};
}

}  // namespace

std::string to_line(const verification_report& r) {
    std::string s = r.claim;
    for (const auto& [k, v] : r.params) s += " " + k + "=" + v;
    s += r.pass ? ": PASS" : ": FAIL";
    if (r.conjectural) s += " (conjectural)";
    s += " lhs=" + std::to_string(r.lhs) + " rhs=" + std::to_string(r.rhs);
    if (!r.counterexample.empty()) s += "  counterexample: " + r.counterexample;
    return s;
}

std::vector<verification_report> run_jobs(const std::vector<report_job>& jobs, exec_mode mode) {
    std::vector<verification_report> out(jobs.size());
#ifdef _OPENMP
    if (mode == exec_mode::openmp) {
        const long long count = static_cast<long long>(jobs.size());
#pragma omp parallel for schedule(dynamic)
        for (long long idx = 0; idx < count; ++idx)
            out[static_cast<std::size_t>(idx)] = jobs[static_cast<std::size_t>(idx)]();
        return out;
    }
#else
    (void)mode;
#endif
    for (std::size_t idx = 0; idx < jobs.size(); ++idx) out[idx] = jobs[idx]();
    return out;
}

verification_report verify_main_theorem(int n, int m) {
    require_modulus(m);
    verification_report rep;
    rep.claim = "MAIN";
    rep.params = {{"n", std::to_string(n)}, {"m", std::to_string(m)}};

    const count_table pt = count_by_type(n, m, table_side::p_side);
    const count_table qt = count_by_type(n, m, table_side::q_side);
    rep.lhs = table_total(pt);
    rep.rhs = table_total(qt);

    std::string fail = first_table_mismatch(pt, qt);
    std::set<partition> images;
    long long q_count = 0;
    for_each_in_family(n, family::Q(m), [&](const std::vector<int>&) { ++q_count; });
    for_each_in_family(n, family::P(m), [&](const std::vector<int>& parts) {
        if (!fail.empty()) return;
        partition lam = partition::from_sorted(parts);
        partition mu = p_to_q(lam, m);
        if (!is_m_regular(mu, m))
            fail = "image of " + describe(lam) + " is not m-regular";
        else if (mu.weight() != lam.weight())
            fail = "image of " + describe(lam) + " changed weight";
        else if (length_type(mu, m) != alt_sum_type(lam, m))
            fail = "type not preserved at " + describe(lam);
        else if (!images.insert(mu).second)
            fail = "not injective: " + describe(mu) + " hit twice";
    });
    if (fail.empty() && static_cast<long long>(images.size()) != q_count)
        fail = "image covers " + std::to_string(images.size()) + " of " +
               std::to_string(q_count) + " m-regular partitions";
    rep.pass = fail.empty();
    rep.counterexample = std::move(fail);
    return rep;
}

verification_report verify_glaisher(int n, int m) {
    require_modulus(m);
    verification_report rep;
    rep.claim = "GLAISHER";
    rep.params = {{"n", std::to_string(n)}, {"m", std::to_string(m)}};

    std::map<long long, long long> by_alt_sum, by_parts;
    long long p_count = 0, q_count = 0;
    for_each_in_family(n, family::P(m), [&](const std::vector<int>& parts) {
        ++p_count;
        const auto t = alt_sum_type(partition::from_sorted(parts), m);
        ++by_alt_sum[std::accumulate(t.entries.begin(), t.entries.end(), 0LL)];
    });
    for_each_in_family(n, family::Q(m), [&](const std::vector<int>& parts) {
        ++q_count;
        ++by_parts[static_cast<long long>(parts.size())];
    });
    rep.lhs = p_count;
    rep.rhs = q_count;
    if (p_count != q_count) {
        rep.counterexample = "family sizes differ";
    } else if (by_alt_sum != by_parts) {
        for (const auto& [k, c] : by_alt_sum) {
            auto it = by_parts.find(k);
            const long long other = it == by_parts.end() ? 0 : it->second;
            if (c != other) {
                rep.counterexample = "total alternating sum " + std::to_string(k) + ": " +
                                     std::to_string(c) + " in P vs " + std::to_string(other) +
                                     " lengths in Q";
                break;
            }
        }
        if (rep.counterexample.empty()) rep.counterexample = "length distribution differs";
    }
    rep.pass = rep.counterexample.empty();
    return rep;
}

verification_report verify_rr_companion(int n, int variant) {
    if (variant != 1 && variant != 2)
        throw argument_error("rr variant must be 1 or 2");
    verification_report rep;
    rep.claim = variant == 1 ? "RR1" : "RR2";
    rep.params = {{"n", std::to_string(n)}};

    const family gap = variant == 1 ? family::RR1() : family::RR2();
    long long gap_count = 0;
    for_each_in_family(n, gap, [&](const std::vector<int>& parts) {
        if (!parts.empty()) ++gap_count;
    });
    long long type_count = 0;
    for_each_in_family(n, family::P(5), [&](const std::vector<int>& parts) {
        if (parts.empty()) return;  // the all-zero type is excluded
        const auto t = alt_sum_type(partition::from_sorted(parts), 5);
        const bool match = variant == 1 ? (t.entries[1] == 0 && t.entries[2] == 0)
                                        : (t.entries[0] == 0 && t.entries[3] == 0);
        if (match) ++type_count;
    });
    rep.lhs = gap_count;
    rep.rhs = type_count;
    rep.pass = gap_count == type_count;
    if (!rep.pass)
        rep.counterexample = "n=" + std::to_string(n) + ": gap side " +
                             std::to_string(gap_count) + ", type side " +
                             std::to_string(type_count);
    return rep;
}

verification_report verify_ag_companion(int n, int d, int i) {
    const family gap = family::AG(d, i);  // validates d, i
    verification_report rep;
    rep.claim = "AG";
    rep.conjectural = true;
    rep.params = {{"n", std::to_string(n)}, {"d", std::to_string(d)}, {"i", std::to_string(i)}};

    long long gap_count = 0;
    for_each_in_family(n, gap, [&](const std::vector<int>& parts) {
        if (!parts.empty()) ++gap_count;
    });
    const int m = 2 * d + 1;
    long long type_count = 0;
    for_each_in_family(n, family::P(m), [&](const std::vector<int>& parts) {
        if (parts.empty()) return;
        const auto t = alt_sum_type(partition::from_sorted(parts), m);
        if (t.entries[static_cast<std::size_t>(i - 1)] == 0 &&
            t.entries[static_cast<std::size_t>(2 * d - i)] == 0)
            ++type_count;
    });
    rep.lhs = gap_count;
    rep.rhs = type_count;
    rep.pass = gap_count == type_count;
    if (!rep.pass)
        rep.counterexample = "n=" + std::to_string(n) + ": gap side " +
                             std::to_string(gap_count) + ", type side " +
                             std::to_string(type_count);
    return rep;
}

verification_report verify_roundtrip_cell(int n, int m) {
    require_modulus(m);
    verification_report rep;
    rep.claim = "ROUNDTRIP";
    rep.params = {{"n", std::to_string(n)}, {"m", std::to_string(m)}};

    std::string fail;
    long long flats = 0, regulars = 0;
    for_each_partition(n, [&](const std::vector<int>& parts) {
        if (!fail.empty()) return;
        partition p = partition::from_sorted(parts);
        if (is_m_flat(p, m)) {
            ++flats;
            auto fwd = flat_to_regular(p, m);
            if (!is_m_regular(fwd.image, m))
                fail = "image of " + describe(p) + " not m-regular";
            else if (fwd.image.weight() != p.weight())
                fail = "weight changed at " + describe(p);
            else if (nonmultiple_residues(p, m) != nonmultiple_residues(fwd.image, m))
                fail = "residue sequence changed at " + describe(p);
            else if (std::string t = check_trace(p, fwd.trace, m); !t.empty())
                fail = t + " at " + describe(p);
            else {
                auto back = regular_to_flat(fwd.image, m);
                if (back.image != p)
                    fail = "reverse of forward is not the identity at " + describe(p);
                else if (!(back.trace == fwd.trace))
                    fail = "reverse rebuilt a different trace at " + describe(p);
            }
        }
        if (!fail.empty()) return;
        if (is_m_regular(p, m)) {
            ++regulars;
            auto rev = regular_to_flat(p, m);
            if (!is_m_flat(rev.image, m))
                fail = "preimage of " + describe(p) + " not m-flat";
            else if (flat_to_regular(rev.image, m).image != p)
                fail = "forward of reverse is not the identity at " + describe(p);
        }
    });
    rep.lhs = flats;
    rep.rhs = regulars;
    rep.pass = fail.empty();
    rep.counterexample = std::move(fail);
    return rep;
}

verification_report verify_roundtrip(int n_max, std::vector<int> m_set, exec_mode mode) {
    if (n_max < 0 || n_max > 40)
        throw argument_error("BoundExceeded: round-trip sweep is capped at n_max = 40");
    std::sort(m_set.begin(), m_set.end());
    m_set.erase(std::unique(m_set.begin(), m_set.end()), m_set.end());
    for (int m : m_set) require_modulus(m);

    std::vector<report_job> jobs;
    for (int m : m_set)
        for (int n = 0; n <= n_max; ++n)
            jobs.push_back([n, m] { return verify_roundtrip_cell(n, m); });
    const auto cells = run_jobs(jobs, mode);

    verification_report rep;
    rep.claim = "ROUNDTRIP";
    std::string ms;
    for (int m : m_set) ms += (ms.empty() ? "" : ",") + std::to_string(m);
    rep.params = {{"n_max", std::to_string(n_max)}, {"m_set", ms}};
    rep.pass = true;
    for (const auto& cell : cells) {
        rep.lhs += cell.lhs;
        rep.rhs += cell.rhs;
        if (!cell.pass && rep.pass) {
            rep.pass = false;
            rep.counterexample = to_line(cell);
        }
    }
    return rep;
}

std::string first_table_mismatch(const count_table& lhs, const count_table& rhs) {
    auto each = [](const count_table& a, const count_table& b) -> std::string {
        for (const auto& [type, c] : a.counts) {
            auto it = b.counts.find(type);
            const long long other = it == b.counts.end() ? 0 : it->second;
            if (c != other)
                return "type " + to_string(type) + ": counts " + std::to_string(c) + " vs " +
                       std::to_string(other);
        }
        return {};
    };
    if (auto s = each(lhs, rhs); !s.empty()) return s;
    return each(rhs, lhs);
}

}  // namespace flatreg
