#include "flatreg/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace flatreg {

void require_modulus(int m) {
    if (m < 2) throw argument_error("modulus must be >= 2, got " + std::to_string(m));
}

partition partition::from_sorted(std::vector<int> parts) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 1)
            throw argument_error("NotAPartition: part " + std::to_string(parts[i]) + " is not positive");
        if (i + 1 < parts.size() && parts[i] < parts[i + 1])
            throw argument_error("NotAPartition: parts are not nonincreasing");
    }
    partition out;
    out.parts_ = std::move(parts);
    return out;
}

long long partition::weight() const noexcept {
    return std::accumulate(parts_.begin(), parts_.end(), 0LL);
}

int partition::part(int i) const noexcept {
    return (i >= 1 && i <= length()) ? parts_[i - 1] : 0;
}

partition make_partition(std::vector<int> values) {
    for (int v : values)
        if (v < 0) throw argument_error("NegativePart: " + std::to_string(v));
    std::erase(values, 0);
    std::sort(values.begin(), values.end(), std::greater<int>());
    return partition::from_sorted(std::move(values));
}

partition conjugate(const partition& lambda) {
    if (lambda.empty()) return {};
    // column c of the Young diagram has one cell per part >= c
    std::vector<int> cols(static_cast<std::size_t>(lambda.parts().front()), 0);
    for (int p : lambda.parts())
        for (int c = 0; c < p; ++c) ++cols[c];
    return partition::from_sorted(std::move(cols));
}

bool type_vector::is_zero() const noexcept {
    return std::all_of(entries.begin(), entries.end(), [](int e) { return e == 0; });
}

int type_vector::support() const noexcept {
    return static_cast<int>(std::count_if(entries.begin(), entries.end(), [](int e) { return e != 0; }));
}

type_vector alt_sum_type(const partition& lambda, int m) {
    require_modulus(m);
    type_vector t{m, std::vector<int>(static_cast<std::size_t>(m - 1), 0)};
    const int r = lambda.length();
    const int blocks = (r + m - 1) / m;  // zero padding to length blocks*m
    for (int b = 0; b < blocks; ++b)
        for (int j = 0; j < m - 1; ++j)
            t.entries[j] += lambda.part(b * m + j + 1) - lambda.part(b * m + j + 2);
    return t;
}

std::vector<int> residue_profile(const partition& lambda, int m) {
    require_modulus(m);
    std::vector<int> counts(static_cast<std::size_t>(m), 0);
    for (int p : lambda.parts()) ++counts[p % m];
    return counts;
}

type_vector length_type(const partition& lambda, int m) {
    auto counts = residue_profile(lambda, m);
    return {m, std::vector<int>(counts.begin() + 1, counts.end())};
}

bool is_m_flat(const partition& lambda, int m) {
    require_modulus(m);
    const auto& p = lambda.parts();
    if (p.empty()) return true;
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
        if (p[i] - p[i + 1] >= m) return false;
    return p.back() < m;
}

bool is_m_regular(const partition& lambda, int m) {
    require_modulus(m);
    for (int p : lambda.parts())
        if (p % m == 0) return false;
    return true;
}

bool is_in_p(const partition& lambda, int m) {
    require_modulus(m);
    const auto& p = lambda.parts();
    for (std::size_t i = 0; i + static_cast<std::size_t>(m) - 1 < p.size(); ++i)
        if (p[i] == p[i + m - 1]) return false;  // some value occurs m times
    return true;
}

std::vector<int> descents(const partition& lambda, int m) {
    require_modulus(m);
    const auto& p = lambda.parts();
    std::vector<int> out;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] % m == 0) continue;
        const int k = p[i] / m;
        if (k == 0) continue;  // no room for a part (k-1)*m + j2 below
        std::size_t t = i + 1;
        while (t < p.size() && (p[t] % m == 0 || p[t] == p[i])) ++t;
        if (t == p.size()) continue;
        if (p[t] / m == k - 1 && p[t] % m > p[i] % m) out.push_back(static_cast<int>(i) + 1);
    }
    return out;
}

partition scale_add(const partition& pi, const partition& sigma_conj, int m) {
    require_modulus(m);
    if (sigma_conj.length() > pi.length())
        throw argument_error("LengthMismatch: sigma' has " + std::to_string(sigma_conj.length()) +
                             " parts but pi only " + std::to_string(pi.length()));
    std::vector<int> out = pi.parts();
    for (int i = 0; i < sigma_conj.length(); ++i) out[i] += m * sigma_conj.parts()[i];
    for (std::size_t i = 0; i + 1 < out.size(); ++i)
        if (out[i] < out[i + 1]) throw argument_error("NotAPartition: entrywise sum is not nonincreasing");
    return partition::from_sorted(std::move(out));
}

std::string to_string(const partition& lambda) {
    if (lambda.empty()) return "(empty)";
    std::string s;
    for (int p : lambda.parts()) {
        if (!s.empty()) s += ' ';
        s += std::to_string(p);
    }
    return s;
}

std::string to_plus_string(const partition& lambda) {
    if (lambda.empty()) return "(empty)";
    std::string s;
    for (int p : lambda.parts()) {
        if (!s.empty()) s += '+';
        s += std::to_string(p);
    }
    return s;
}

std::string to_string(const type_vector& t) {
    std::string s = "(";
    for (std::size_t i = 0; i < t.entries.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(t.entries[i]);
    }
    s += ')';
    return s;
}

}  // namespace flatreg
