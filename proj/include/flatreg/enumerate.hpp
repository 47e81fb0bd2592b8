#pragma once

#include <map>
#include <string>
#include <vector>

#include "flatreg/partition.hpp"

// Exhaustive generation of the partitions of n in decreasing lexicographic
// order, the restricted families the identities quantify over, tabulation of
// counts by type vector, and the truncated product expansion that serves as
// an independent oracle for the Q-side tables.

namespace flatreg {

inline constexpr long long default_weight_guard = 1'000'000;

// Global weight guard for the generators; the CLI maps PARTITION_MAX_N here.
long long weight_guard() noexcept;
void set_weight_guard(long long n);

// Streams the partitions of n in decreasing lexicographic order:
// 4 -> (4), (3,1), (2,2), (2,1,1), (1,1,1,1). n = 0 yields only the empty
// partition. The pointer returned by next() is reused between calls.
class partition_stream {
public:
    explicit partition_stream(int n);
    const std::vector<int>* next();

private:
    std::vector<int> cur_;
    int n_ = 0;
    bool started_ = false;
    bool done_ = false;
};

template <typename Visit>
void for_each_partition(int n, Visit&& visit) {
    partition_stream stream(n);
    while (const auto* parts = stream.next()) visit(*parts);
}

struct family {
    enum class kind { p_class, q_class, rr1, rr2, ag };

    kind which = kind::p_class;
    int m = 0;          // p_class, q_class
    int d = 0, i = 0;   // ag

    static family P(int m);
    static family Q(int m);
    static family RR1();  // all consecutive differences at least 2
    static family RR2();  // RR1 and 1 is not a part
    // frequency conditions f_1 <= i-1 and f_j + f_{j+1} <= d-1 for all j
    static family AG(int d, int i);

    bool contains(const std::vector<int>& parts) const;
    std::string name() const;
};

template <typename Visit>
void for_each_in_family(int n, const family& f, Visit&& visit) {
    for_each_partition(n, [&](const std::vector<int>& parts) {
        if (f.contains(parts)) visit(parts);
    });
}

std::vector<partition> family_members(int n, const family& f);

enum class table_side { p_side, q_side };

struct count_table {
    int n = 0;
    int modulus = 2;
    std::map<type_vector, long long> counts;  // absent key means 0

    friend bool operator==(const count_table&, const count_table&) = default;
};

// P side: alternating sum types over the partitions of n with multiplicities
// below m. Q side: length types over the m-regular partitions of n.
count_table count_by_type(int n, int m, table_side side);

// result[n][type] = coefficient of q^n z^type in the product over part sizes
// j not divisible by m of the geometric series in z_{j mod m} q^j, for all
// n <= max_weight. Exact integer counts; capped at max_weight <= 200.
std::vector<std::map<type_vector, long long>> product_side_coefficients(int max_weight, int m);

}  // namespace flatreg
