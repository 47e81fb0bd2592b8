#pragma once

#include <string>
#include <vector>

#include "flatreg/partition.hpp"

// m-modular diagrams: one row per part, a leading residue cell when the part
// is not divisible by m, then one cell labeled m per multiple contained.

namespace flatreg {

struct rendered_diagram {
    struct row {
        int residue = 0;  // 0 means no leading cell
        int m_cells = 0;

        friend bool operator==(const row&, const row&) = default;
    };

    int modulus = 2;
    std::vector<row> rows;

    friend bool operator==(const rendered_diagram&, const rendered_diagram&) = default;
};

rendered_diagram render_modular_diagram(const partition& lambda, int m);

// "2 5 5 5 5\n4 5 5 5\n..." with one line per part; "(empty)" for no parts.
std::string to_text(const rendered_diagram& d);

}  // namespace flatreg
