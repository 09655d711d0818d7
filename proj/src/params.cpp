#include "lmc/params.hpp"

#include <stdexcept>

namespace lmc {

CodeParams CodeParams::make(int ell, int ell_r, int ell_s) {
    if (ell < 1 || ell > 16) {
        throw std::invalid_argument("ell must be in [1, 16], got " +
                                    std::to_string(ell));
    }
    if (ell_r < 0 || ell_r >= ell) {
        throw std::invalid_argument(
            "ell_r must satisfy 0 <= ell_r < ell (so that t = q/r >= 2), got "
            "ell_r=" + std::to_string(ell_r) + " with ell=" +
            std::to_string(ell));
    }
    if (ell_s < 0 || ell_s > ell) {
        throw std::invalid_argument(
            "ell_s must satisfy 0 <= ell_s <= ell, got ell_s=" +
            std::to_string(ell_s));
    }
    CodeParams p;
    p.ell = ell;
    p.ell_r = ell_r;
    p.ell_s = ell_s;
    p.q = 1 << ell;
    p.r = 1 << ell_r;
    p.s = 1 << ell_s;
    p.d = p.r * p.q - p.s;
    p.t = p.q / p.r;
    p.symbol_width = p.r * (p.r + 1) / 2;
    p.length = p.q * p.q;
    return p;
}

std::string CodeParams::describe() const {
    return "q=" + std::to_string(q) + " r=" + std::to_string(r) +
           " s=" + std::to_string(s) + " d=" + std::to_string(d) +
           " t=" + std::to_string(t) + " N=" + std::to_string(length);
}

}  // namespace lmc
