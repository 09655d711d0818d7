#include "lmc/dualcheck.hpp"

#include <stdexcept>
#include <string>

#include "lmc/linalg.hpp"

namespace lmc {

DualCodeword dual_codeword(const FieldContext& F, Line line) {
    const std::uint32_t q = F.order();
    DualCodeword out;
    out.vec.assign(static_cast<std::size_t>(q) * q, FieldElem{0});
    for (std::uint32_t xv = 0; xv < q; ++xv) {
        const FieldElem x{static_cast<std::uint16_t>(xv)};
        const FieldElem y = F.add(F.mul(line.alpha, x), line.beta);
        out.vec[static_cast<std::size_t>(xv) * q + y.value] = F.one();
    }
    return out;
}

BiPoly line_indicator_poly(const FieldContext& F, Line line) {
    BiPoly acc = BiPoly::monomial(0, 0, F.one());
    for (std::uint32_t bv = 0; bv < F.order(); ++bv) {
        if (bv == line.beta.value) continue;
        const FieldElem bp{static_cast<std::uint16_t>(bv)};
        // multiply by (alpha X + bp + Y); minus is plus in characteristic 2
        BiPoly next;
        for (const auto& [e, c] : acc.terms()) {
            next.add_term(e.first + 1, e.second, F.mul(c, line.alpha));
            next.add_term(e.first, e.second + 1, c);
            next.add_term(e.first, e.second, F.mul(c, bp));
        }
        acc = std::move(next);
    }
    return acc;
}

int dual_span_dim(const FieldContext& F) {
    const std::uint32_t q = F.order();
    if (q > 64) {
        throw std::invalid_argument(
            "dual span rank is limited to q <= 64, got q=" + std::to_string(q));
    }
    Matrix m(static_cast<std::size_t>(q) * q, static_cast<std::size_t>(q) * q);
    std::size_t row = 0;
    for (std::uint32_t av = 0; av < q; ++av) {
        for (std::uint32_t bv = 0; bv < q; ++bv) {
            const DualCodeword dc =
                dual_codeword(F, Line{FieldElem{static_cast<std::uint16_t>(av)},
                                      FieldElem{static_cast<std::uint16_t>(bv)}});
            for (std::size_t c = 0; c < dc.vec.size(); ++c) {
                m.at(row, c) = dc.vec[c];
            }
            ++row;
        }
    }
    return static_cast<int>(rank(F, m));
}

}  // namespace lmc
