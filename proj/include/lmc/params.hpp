#pragma once

#include <string>

namespace lmc {

/// Code parameters derived from the three exponents (ell, ell_r, ell_s):
/// q = 2^ell, multiplicity order r = 2^ell_r, degree shortfall s = 2^ell_s,
/// degree bound d = rq - s, repair group count t = q/r, code length q^2.
///
/// ell_r = 0 (r = 1, plain lifted codes without derivative data) and
/// ell_s = 0 (s = 1) are accepted; the headline parameter regime has
/// ell_r, ell_s >= 1.
struct CodeParams {
    int ell = 0;
    int ell_r = 0;
    int ell_s = 0;

    int q = 0;
    int r = 0;
    int s = 0;
    int d = 0;
    int t = 0;
    int symbol_width = 0;  // C(r+1, 2) field elements per symbol
    int length = 0;        // q^2 symbols per codeword

    /// Validates 1 <= ell <= 16, 0 <= ell_r < ell (so t >= 2),
    /// 0 <= ell_s <= ell, and derives the remaining fields.
    static CodeParams make(int ell, int ell_r, int ell_s);

    std::string describe() const;

    friend bool operator==(const CodeParams&, const CodeParams&) = default;
};

}  // namespace lmc
