#pragma once

#include <vector>

#include "lmc/gf.hpp"
#include "lmc/poly.hpp"

namespace lmc {

/// The 0/1 indicator vector of a line's point set over F_q^2, row-major;
/// exactly q entries are 1 (one per x-coordinate).
struct DualCodeword {
    std::vector<FieldElem> vec;

    friend bool operator==(const DualCodeword&, const DualCodeword&) = default;
};

DualCodeword dual_codeword(const FieldContext& F, Line line);

/// The product prod_{beta' != beta} (alpha X + beta' + Y): evaluates to 1
/// on the line and 0 off it.
BiPoly line_indicator_poly(const FieldContext& F, Line line);

/// Rank over F_q of the q^2 line indicators. Limited to q <= 64.
int dual_span_dim(const FieldContext& F);

}  // namespace lmc
