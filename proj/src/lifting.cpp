#include "lmc/lifting.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "lmc/detail/parallel.hpp"

namespace lmc {

Monomial Monomial::make(int a, int b, const CodeParams& p) {
    if (a < 0 || b < 0) throw std::invalid_argument("negative exponent");
    Monomial m;
    m.a = a;
    m.b = b;
    m.a0 = a / p.q;
    m.a1 = a % p.q;
    m.b0 = b / p.q;
    m.b1 = b % p.q;
    return m;
}

bool is_type_r(const Monomial& m, const CodeParams& p) {
    return m.a0 + m.b0 <= p.r - 1;
}

namespace {

void require_type_r(const Monomial& m, const CodeParams& p) {
    if (!is_type_r(m, p)) {
        throw std::invalid_argument("monomial X^" + std::to_string(m.a) + "Y^" +
                                    std::to_string(m.b) + " is not type-r for " +
                                    p.describe());
    }
}

}  // namespace

bool is_good_oracle(const FieldContext& F, const Monomial& m,
                    const CodeParams& p) {
    require_type_r(m, p);
    const BiPoly mono = BiPoly::monomial(m.a, m.b, F.one());
    for (std::uint32_t av = 0; av < F.order(); ++av) {
        for (std::uint32_t bv = 0; bv < F.order(); ++bv) {
            const Line line{FieldElem{static_cast<std::uint16_t>(av)},
                            FieldElem{static_cast<std::uint16_t>(bv)}};
            const UniPoly red =
                reduce_canonical(restrict_to_line(F, mono, line), p.q, p.r);
            if (red.degree() >= p.d) return false;
        }
    }
    return true;
}

FastVerdict is_good_fast(const Monomial& m, const CodeParams& p) {
    require_type_r(m, p);
    // The certificate reasons about raw restriction coefficients in the
    // degree window [rq-s, rq-1]; those equal the canonical coefficients
    // only when the maximum restriction degree (r+1)q - 2 stays below the
    // window after folding, i.e. q + r - 2 < rq - s.
    if (!(p.q + p.r - 2 < p.r * p.q - p.s)) return FastVerdict::Unknown;

    if (m.a0 + m.b0 < p.r - 1) {
        if (m.a0 + m.b0 == p.r - 2 && m.a1 + m.b1 >= 2 * p.q - p.s) {
            return FastVerdict::Unknown;
        }
        return FastVerdict::CertifiedGood;
    }
    // a0 + b0 == r - 1: bad only if some s' in [1, s] has
    // q - s' - a1 <=_2^ell b1.
    for (int sp = 1; sp <= p.s; ++sp) {
        if (leq2(p.q - sp - m.a1, m.b1, p.ell)) return FastVerdict::Unknown;
    }
    return FastVerdict::CertifiedGood;
}

std::vector<Monomial> type_r_monomials(const CodeParams& p) {
    std::vector<Monomial> out;
    const int rq = p.r * p.q;
    for (int a = 0; a < rq; ++a) {
        for (int b = 0; b < rq; ++b) {
            Monomial m = Monomial::make(a, b, p);
            if (is_type_r(m, p)) out.push_back(m);
        }
    }
    std::sort(out.begin(), out.end(), [](const Monomial& x, const Monomial& y) {
        if (x.a + x.b != y.a + y.b) return x.a + x.b < y.a + y.b;
        return x.a < y.a;
    });
    return out;
}

GoodSet enumerate_good(const FieldContext& F, const CodeParams& p,
                       ClassifyMode mode) {
    const std::vector<Monomial> candidates = type_r_monomials(p);
    std::vector<char> good(candidates.size(), 0);
    detail::parallel_for(candidates.size(), [&](std::size_t i) {
        if (mode == ClassifyMode::Oracle) {
            good[i] = is_good_oracle(F, candidates[i], p) ? 1 : 0;
        } else {
            good[i] =
                is_good_fast(candidates[i], p) == FastVerdict::CertifiedGood;
        }
    });
    GoodSet gs;
    gs.mode = mode;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        if (good[i]) gs.monomials.push_back(candidates[i]);
    }
    return gs;
}

double good_count_lower_bound(const CodeParams& p) {
    const double width = static_cast<double>(p.symbol_width);
    return width * std::pow(4.0, p.ell) -
           3.0 * p.r * std::pow(4.0 / 3.0, p.ell_s) * std::pow(3.0, p.ell);
}

double rate_lower_bound(const CodeParams& p) {
    return 1.0 - 6.0 / p.r * std::pow(4.0 / 3.0, p.ell_s) *
                     std::pow(3.0 / 4.0, p.ell);
}

double redundancy_upper_bound(const CodeParams& p) {
    if (p.s != p.r) {
        throw std::invalid_argument(
            "redundancy bound is stated for s = r; got " + p.describe());
    }
    // r^(log2 8/3) = (8/3)^ell_r and q^(log2 3) = 3^ell.
    return 3.0 * std::pow(8.0 / 3.0, p.ell_r) * std::pow(3.0, p.ell) /
           p.symbol_width;
}

std::pair<long long, double> count_leq2_pairs(int ell, int ell_s) {
    if (ell < 1 || ell > 16 || ell_s < 0 || ell_s > ell) {
        throw std::invalid_argument("need 0 <= ell_s <= ell <= 16");
    }
    const int q = 1 << ell;
    const int s = 1 << ell_s;
    long long count = 0;
    for (int a1 = 0; a1 < q; ++a1) {
        for (int b1 = 0; b1 < q; ++b1) {
            for (int sp = 1; sp <= s; ++sp) {
                if (leq2(q - sp - a1, b1, ell)) {
                    ++count;
                    break;
                }
            }
        }
    }
    const double bound =
        2.0 * std::pow(3.0, ell) * std::pow(4.0 / 3.0, ell_s);
    return {count, bound};
}

Matrix code_constraint_matrix(const FieldContext& F, const CodeParams& p) {
    const std::vector<Monomial> mons = type_r_monomials(p);
    const std::size_t nrows =
        static_cast<std::size_t>(p.length) * static_cast<std::size_t>(p.s);
    Matrix m(nrows, mons.size());
    detail::parallel_for(mons.size(), [&](std::size_t col) {
        const BiPoly mono = BiPoly::monomial(mons[col].a, mons[col].b, F.one());
        std::size_t row = 0;
        for (std::uint32_t av = 0; av < F.order(); ++av) {
            for (std::uint32_t bv = 0; bv < F.order(); ++bv) {
                const Line line{FieldElem{static_cast<std::uint16_t>(av)},
                                FieldElem{static_cast<std::uint16_t>(bv)}};
                const UniPoly red =
                    reduce_canonical(restrict_to_line(F, mono, line), p.q, p.r);
                for (int c = p.d; c < p.r * p.q; ++c) {
                    m.at(row++, col) = red.coeff(c);
                }
            }
        }
    });
    return m;
}

int code_dimension_exact(const FieldContext& F, const CodeParams& p) {
    if (p.q > 16) {
        throw std::invalid_argument(
            "exact dimension is limited to q <= 16, got q=" +
            std::to_string(p.q));
    }
    const Matrix constraints = code_constraint_matrix(F, p);
    const std::size_t ncols = constraints.cols();
    return static_cast<int>(ncols - rank(F, constraints));
}

bool is_in_code(const FieldContext& F, const BiPoly& P, const CodeParams& p) {
    for (const auto& [e, c] : P.terms()) {
        require_type_r(Monomial::make(e.first, e.second, p), p);
    }
    for (std::uint32_t av = 0; av < F.order(); ++av) {
        for (std::uint32_t bv = 0; bv < F.order(); ++bv) {
            const Line line{FieldElem{static_cast<std::uint16_t>(av)},
                            FieldElem{static_cast<std::uint16_t>(bv)}};
            const UniPoly red =
                reduce_canonical(restrict_to_line(F, P, line), p.q, p.r);
            if (red.degree() >= p.d) return false;
        }
    }
    return true;
}

}  // namespace lmc
