#include "flatreg/bijection.hpp"

#include <algorithm>
#include <functional>
#include <optional>

#include "flatreg/enumerate.hpp"

namespace flatreg {

namespace {

bool nonincreasing_positive(const std::vector<int>& v) {
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] < 1) return false;
        if (i + 1 < v.size() && v[i] < v[i + 1]) return false;
    }
    return true;
}

bool flat_vec(const std::vector<int>& v, int m) {
    if (v.empty()) return true;
    for (std::size_t i = 0; i + 1 < v.size(); ++i)
        if (v[i] - v[i + 1] >= m) return false;
    return v.back() < m;
}

// Eligibility of cur[idx] (a multiple of m) for a step-1 removal.
bool step1_removable(const std::vector<int>& cur, std::size_t idx, int m) {
    const int v = cur[idx];
    if (idx + 1 < cur.size() && cur[idx + 1] == v) return true;  // not last of its run
    if (idx == 0) return true;                                   // largest part
    if (idx + 1 >= cur.size()) return false;  // a multiple cannot be smallest in a flat partition
    const int above = cur[idx - 1];
    const int below = cur[idx + 1];
    const int j1 = above % m;
    const int j2 = below % m;
    return j1 != 0 && j2 != 0 && above / m == v / m && below / m == v / m - 1 && j1 < j2;
}

// Sorted insertion index for value v, at the head of any run of equal parts.
std::size_t insert_index(const std::vector<int>& cur, int v) {
    return static_cast<std::size_t>(
        std::lower_bound(cur.begin(), cur.end(), v, std::greater<int>()) - cur.begin());
}

bool whole_insertable(const std::vector<int>& cur, int v, int m) {
    std::vector<int> trial = cur;
    trial.insert(trial.begin() + static_cast<std::ptrdiff_t>(insert_index(cur, v)), v);
    return flat_vec(trial, m);
}

struct unfolding {
    int position = 0;  // 1-based
    std::vector<int> next;
};

// The unique position i >= 2 where sigma part s re-enters as value (s-i+1)*m,
// with m added to the i-1 parts above. Validity mirrors what step 2 removes:
// the inserted part must be strictly the largest multiple of m, must keep the
// partition m-flat, and must not sit inside a descent.
unfolding step2_reverse_insert(const std::vector<int>& cur, int s, int m) {
    std::optional<unfolding> found;
    const int len = static_cast<int>(cur.size());
    for (int i = 2; i <= s && i <= len + 1; ++i) {
        const int v = (s - i + 1) * m;
        std::vector<int> trial;
        trial.reserve(cur.size() + 1);
        for (int t = 0; t < i - 1; ++t) trial.push_back(cur[t] + m);
        trial.push_back(v);
        for (int t = i - 1; t < len; ++t) trial.push_back(cur[t]);

        if (!nonincreasing_positive(trial) || !flat_vec(trial, m)) continue;
        bool ok = true;
        for (int t = 0; t < i - 1 && ok; ++t)
            if (trial[t] % m == 0) ok = false;            // v must be the largest multiple
        if (ok && i <= len && cur[i - 1] == v) ok = false;  // and distinct
        if (ok && i <= len) {
            const int above = trial[i - 2];
            const int below = trial[i];
            if (above / m == s - i + 1 && above % m != 0 && below / m == s - i &&
                below % m != 0 && above % m < below % m)
                ok = false;  // inside a descent: step 1 territory
        }
        if (!ok) continue;
        if (found)
            throw invariant_error("NoValidInsertion: sigma part " + std::to_string(s) +
                                  " admits more than one unfolding position");
        found = unfolding{i, std::move(trial)};
    }
    if (!found)
        throw invariant_error("NoValidInsertion: sigma part " + std::to_string(s) +
                              " admits no unfolding position");
    return *found;
}

std::string not_regular_message(const partition& mu, int m) {
    for (int p : mu.parts())
        if (p % m == 0)
            return "not " + std::to_string(m) + "-regular: part " + std::to_string(p) +
                   " divisible by " + std::to_string(m);
    return "not " + std::to_string(m) + "-regular";
}

}  // namespace

step1_result step1_extract(const partition& lambda, int m) {
    require_modulus(m);
    if (!is_m_flat(lambda, m))
        throw family_error("NotFlat: input is not " + std::to_string(m) + "-flat");
    std::vector<int> cur = lambda.parts();
    std::vector<step1_removal> removals;
    for (;;) {
        int pick = -1;
        for (std::size_t idx = 0; idx < cur.size(); ++idx) {
            if (cur[idx] % m != 0) continue;
            if (!step1_removable(cur, idx, m)) continue;
            if (pick < 0 || cur[idx] > cur[static_cast<std::size_t>(pick)])
                pick = static_cast<int>(idx);  // largest value; scan order keeps the earliest
        }
        if (pick < 0) break;
        removals.push_back({cur[static_cast<std::size_t>(pick)], pick + 1});
        cur.erase(cur.begin() + pick);
    }
    return {partition::from_sorted(std::move(cur)), std::move(removals)};
}

step2_result step2_extract(const partition& lambda0, int m) {
    require_modulus(m);
    std::vector<int> cur = lambda0.parts();
    std::vector<step2_removal> removals;
    for (;;) {
        int pick = -1;
        for (std::size_t idx = 0; idx < cur.size(); ++idx)
            if (cur[idx] % m == 0 && (pick < 0 || cur[idx] > cur[static_cast<std::size_t>(pick)]))
                pick = static_cast<int>(idx);
        if (pick < 0) break;
        const int k = cur[static_cast<std::size_t>(pick)] / m;
        removals.push_back({cur[static_cast<std::size_t>(pick)], pick + 1, k + pick});
        cur.erase(cur.begin() + pick);
        for (int t = 0; t < pick; ++t) cur[static_cast<std::size_t>(t)] -= m;
        if (!nonincreasing_positive(cur))
            throw invariant_error("Malformed: step-2 removal broke the partition "
                                  "(input was not a step-1 remainder)");
    }
    partition core = partition::from_sorted(std::move(cur));
    if (!is_m_flat(core, m))
        throw invariant_error("Malformed: step-2 core is not m-flat");
    for (std::size_t t = 0; t + 1 < removals.size(); ++t)
        if (removals[t].sigma_part > removals[t + 1].sigma_part)
            throw invariant_error("Malformed: step-2 sigma parts are not nondecreasing");
    return {std::move(core), std::move(removals)};
}

map_result flat_to_regular(const partition& lambda, int m) {
    auto s1 = step1_extract(lambda, m);
    auto s2 = step2_extract(s1.remainder, m);

    std::vector<int> sigma_parts;
    for (const auto& r : s1.removals) sigma_parts.push_back(r.value / m);
    for (const auto& r : s2.removals) sigma_parts.push_back(r.sigma_part);
    std::sort(sigma_parts.begin(), sigma_parts.end(), std::greater<int>());
    sigma_record sigma{partition::from_sorted(std::move(sigma_parts)), m};

    partition image = scale_add(s2.core, conjugate(sigma.reduced), m);
    if (!is_m_regular(image, m))
        throw invariant_error("Malformed: image of the flat-to-regular map is not m-regular");
    bijection_trace trace{std::move(s1.removals), std::move(s2.removals), s2.core,
                          std::move(sigma)};
    return {std::move(image), std::move(trace)};
}

split_result split_flat_core(const partition& mu, int m) {
    require_modulus(m);
    if (!is_m_regular(mu, m)) throw family_error("NotRegular: " + not_regular_message(mu, m));
    std::vector<int> cur = mu.parts();
    std::vector<int> conj_counts;
    for (;;) {
        int hit = -1;
        for (std::size_t idx = 0; idx < cur.size(); ++idx) {
            const int next = idx + 1 < cur.size() ? cur[idx + 1] : 0;
            if (cur[idx] - next >= m) {
                hit = static_cast<int>(idx);
                break;
            }
        }
        if (hit < 0) break;
        if (static_cast<int>(conj_counts.size()) < hit + 1) conj_counts.resize(hit + 1, 0);
        for (int t = 0; t <= hit; ++t) {
            ++conj_counts[static_cast<std::size_t>(t)];
            cur[static_cast<std::size_t>(t)] -= m;
        }
    }
    split_result out{partition::from_sorted(std::move(cur)),
                     partition::from_sorted(std::move(conj_counts))};
    if (scale_add(out.core, out.sigma_conj, m) != mu)
        throw invariant_error("Malformed: core + m*sigma' does not rebuild the input");
    return out;
}

map_result regular_to_flat(const partition& mu, int m) {
    auto split = split_flat_core(mu, m);
    partition sigma = conjugate(split.sigma_conj);

    std::vector<int> cur = split.core.parts();
    std::vector<step2_removal> step2_rev;  // recorded while unwinding, flipped at the end
    std::vector<int> held;                 // reduced parts that re-enter whole
    for (int s : sigma.parts()) {
        if (whole_insertable(cur, s * m, m)) {
            held.push_back(s);
            continue;
        }
        auto un = step2_reverse_insert(cur, s, m);
        step2_rev.push_back({(s - un.position + 1) * m, un.position, s});
        cur = std::move(un.next);
    }
    std::vector<step1_removal> step1_rev;
    for (auto it = held.rbegin(); it != held.rend(); ++it) {  // smallest value first
        const int v = *it * m;
        const std::size_t at = insert_index(cur, v);
        cur.insert(cur.begin() + static_cast<std::ptrdiff_t>(at), v);
        if (!flat_vec(cur, m))
            throw invariant_error("NoValidInsertion: whole re-entry of " + std::to_string(v) +
                                  " broke flatness");
        step1_rev.push_back({v, static_cast<int>(at) + 1});
    }
    std::reverse(step1_rev.begin(), step1_rev.end());
    std::reverse(step2_rev.begin(), step2_rev.end());

    partition lambda = partition::from_sorted(std::move(cur));
    bijection_trace trace{std::move(step1_rev), std::move(step2_rev), std::move(split.core),
                          {std::move(sigma), m}};
    return {std::move(lambda), std::move(trace)};
}

map_result p_to_q_traced(const partition& lambda, int m) {
    require_modulus(m);
    const auto& p = lambda.parts();
    for (std::size_t i = 0; i + static_cast<std::size_t>(m) - 1 < p.size(); ++i)
        if (p[i] == p[i + m - 1])
            throw family_error("not in P: part " + std::to_string(p[i]) + " repeated " +
                               std::to_string(std::count(p.begin(), p.end(), p[i])) + " times");
    return flat_to_regular(conjugate(lambda), m);
}

partition p_to_q(const partition& lambda, int m) { return p_to_q_traced(lambda, m).image; }

map_result q_to_p_traced(const partition& mu, int m) {
    auto rev = regular_to_flat(mu, m);
    return {conjugate(rev.image), std::move(rev.trace)};
}

partition q_to_p(const partition& mu, int m) { return q_to_p_traced(mu, m).image; }

partition invert_by_search(const partition& mu, int m) {
    require_modulus(m);
    if (!is_m_regular(mu, m)) throw family_error("NotRegular: " + not_regular_message(mu, m));
    if (mu.weight() > 40)
        throw argument_error("BoundExceeded: invert_by_search is capped at weight 40");
    std::optional<partition> found;
    for_each_partition(static_cast<int>(mu.weight()), [&](const std::vector<int>& parts) {
        partition cand = partition::from_sorted(parts);
        if (!is_in_p(cand, m)) return;
        if (p_to_q(cand, m) != mu) return;
        if (found)
            throw invariant_error("NotUnique: two preimages of " + to_string(mu) +
                                  " under the P -> Q map");
        found = std::move(cand);
    });
    if (!found)
        throw invariant_error("NotFound: no preimage of " + to_string(mu) +
                              " under the P -> Q map");
    return *found;
}

}  // namespace flatreg
