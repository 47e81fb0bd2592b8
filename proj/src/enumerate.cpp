#include "flatreg/enumerate.hpp"

#include <algorithm>
#include <atomic>

namespace flatreg {

namespace {
std::atomic<long long> guard{default_weight_guard};
}

long long weight_guard() noexcept { return guard.load(); }

void set_weight_guard(long long n) { guard.store(n); }

partition_stream::partition_stream(int n) : n_(n) {
    if (n < 0) throw argument_error("partition weight must be nonnegative");
    if (n > weight_guard())
        throw argument_error("BoundExceeded: weight " + std::to_string(n) +
                             " is over the guard " + std::to_string(weight_guard()));
}

const std::vector<int>* partition_stream::next() {
    if (done_) return nullptr;
    if (!started_) {
        started_ = true;
        if (n_ > 0) cur_.assign(1, n_);
        return &cur_;  // (n), or the empty partition for n = 0
    }
    // decrement the rightmost part above 1 and refill greedily after it
    int j = static_cast<int>(cur_.size()) - 1;
    while (j >= 0 && cur_[static_cast<std::size_t>(j)] == 1) --j;
    if (j < 0) {
        done_ = true;
        return nullptr;
    }
    const int x = cur_[static_cast<std::size_t>(j)] - 1;
    int rest = static_cast<int>(cur_.size()) - j - 1 + cur_[static_cast<std::size_t>(j)];
    cur_.resize(static_cast<std::size_t>(j));
    while (rest >= x) {
        cur_.push_back(x);
        rest -= x;
    }
    if (rest > 0) cur_.push_back(rest);
    return &cur_;
}

family family::P(int m) {
    if (m < 2) throw argument_error("BadFamilyParams: P needs modulus >= 2");
    family f;
    f.which = kind::p_class;
    f.m = m;
    return f;
}

family family::Q(int m) {
    if (m < 2) throw argument_error("BadFamilyParams: Q needs modulus >= 2");
    family f;
    f.which = kind::q_class;
    f.m = m;
    return f;
}

family family::RR1() {
    family f;
    f.which = kind::rr1;
    return f;
}

family family::RR2() {
    family f;
    f.which = kind::rr2;
    return f;
}

family family::AG(int d, int i) {
    if (d < 1 || i < 1 || i > 2 * d)
        throw argument_error("BadFamilyParams: AG needs d >= 1 and 1 <= i <= 2d");
    family f;
    f.which = kind::ag;
    f.d = d;
    f.i = i;
    return f;
}

bool family::contains(const std::vector<int>& parts) const {
    switch (which) {
        case kind::p_class:
            for (std::size_t t = 0; t + static_cast<std::size_t>(m) - 1 < parts.size(); ++t)
                if (parts[t] == parts[t + m - 1]) return false;
            return true;
        case kind::q_class:
            for (int p : parts)
                if (p % m == 0) return false;
            return true;
        case kind::rr1:
            for (std::size_t t = 0; t + 1 < parts.size(); ++t)
                if (parts[t] - parts[t + 1] < 2) return false;
            return true;
        case kind::rr2:
            if (!parts.empty() && parts.back() == 1) return false;
            for (std::size_t t = 0; t + 1 < parts.size(); ++t)
                if (parts[t] - parts[t + 1] < 2) return false;
            return true;
        case kind::ag: {
            // run-length scan over the sorted parts
            std::size_t t = 0;
            int prev_value = 0, prev_count = 0;
            while (t < parts.size()) {
                std::size_t u = t;
                while (u < parts.size() && parts[u] == parts[t]) ++u;
                const int value = parts[t];
                const int count = static_cast<int>(u - t);
                if (count > d - 1) return false;                      // f_v alone
                if (prev_value == value + 1 && prev_count + count > d - 1) return false;
                if (value == 1 && count > i - 1) return false;
                prev_value = value;
                prev_count = count;
                t = u;
            }
            return true;
        }
    }
    return false;
}

std::string family::name() const {
    switch (which) {
        case kind::p_class: return "P(" + std::to_string(m) + ")";
        case kind::q_class: return "Q(" + std::to_string(m) + ")";
        case kind::rr1: return "rr1";
        case kind::rr2: return "rr2";
        case kind::ag: return "ag(d=" + std::to_string(d) + ",i=" + std::to_string(i) + ")";
    }
    return "?";
}

std::vector<partition> family_members(int n, const family& f) {
    std::vector<partition> out;
    for_each_in_family(n, f, [&](const std::vector<int>& parts) {
        out.push_back(partition::from_sorted(parts));
    });
    return out;
}

count_table count_by_type(int n, int m, table_side side) {
    require_modulus(m);
    count_table table{n, m, {}};
    const family f = side == table_side::p_side ? family::P(m) : family::Q(m);
    for_each_in_family(n, f, [&](const std::vector<int>& parts) {
        partition p = partition::from_sorted(parts);
        const type_vector t =
            side == table_side::p_side ? alt_sum_type(p, m) : length_type(p, m);
        ++table.counts[t];
    });
    return table;
}

std::vector<std::map<type_vector, long long>> product_side_coefficients(int max_weight, int m) {
    require_modulus(m);
    if (max_weight < 0) throw argument_error("max_weight must be nonnegative");
    if (max_weight > 200)
        throw argument_error("BoundExceeded: product expansion is capped at weight 200");
    std::vector<std::map<type_vector, long long>> coef(static_cast<std::size_t>(max_weight) + 1);
    coef[0][type_vector{m, std::vector<int>(static_cast<std::size_t>(m - 1), 0)}] = 1;
    for (int j = 1; j <= max_weight; ++j) {
        if (j % m == 0) continue;
        // ascending n makes each part size j available any number of times
        for (int n = j; n <= max_weight; ++n) {
            for (const auto& [type, c] : coef[static_cast<std::size_t>(n - j)]) {
                type_vector bumped = type;
                ++bumped.entries[static_cast<std::size_t>(j % m - 1)];
                coef[static_cast<std::size_t>(n)][bumped] += c;
            }
        }
    }
    return coef;
}

}  // namespace flatreg
