#include "flatreg/render.hpp"

namespace flatreg {

rendered_diagram render_modular_diagram(const partition& lambda, int m) {
    require_modulus(m);
    rendered_diagram d;
    d.modulus = m;
    d.rows.reserve(lambda.parts().size());
    for (int p : lambda.parts()) d.rows.push_back({p % m, p / m});
    return d;
}

std::string to_text(const rendered_diagram& d) {
    if (d.rows.empty()) return "(empty)";
    std::string out;
    for (std::size_t i = 0; i < d.rows.size(); ++i) {
        if (i) out += '\n';
        std::string line;
        if (d.rows[i].residue != 0) line += std::to_string(d.rows[i].residue);
        for (int c = 0; c < d.rows[i].m_cells; ++c) {
            if (!line.empty()) line += ' ';
            line += std::to_string(d.modulus);
        }
        out += line;
    }
    return out;
}

}  // namespace flatreg
