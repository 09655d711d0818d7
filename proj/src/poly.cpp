#include "lmc/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace lmc {

namespace {

void trim(std::vector<FieldElem>& c) {
    while (!c.empty() && c.back().value == 0) c.pop_back();
}

}  // namespace

std::vector<MultiIndex> deriv_order(int r) {
    std::vector<MultiIndex> out;
    out.reserve(static_cast<std::size_t>(symbol_width(r)));
    for (int w = 0; w < r; ++w) {
        for (int j = 0; j <= w; ++j) {
            out.push_back(MultiIndex{w - j, j});
        }
    }
    return out;
}

int deriv_index(MultiIndex idx, int r) {
    if (idx.i < 0 || idx.j < 0 || idx.wt() >= r) {
        throw std::invalid_argument("derivative index out of range");
    }
    const int w = idx.wt();
    return w * (w + 1) / 2 + idx.j;
}

UniPoly::UniPoly(std::vector<FieldElem> coeffs) : coeffs_(std::move(coeffs)) {
    trim(coeffs_);
}

UniPoly UniPoly::monomial(int deg, FieldElem c) {
    if (c.value == 0) return zero();
    std::vector<FieldElem> v(static_cast<std::size_t>(deg) + 1, FieldElem{0});
    v.back() = c;
    return UniPoly(std::move(v));
}

BiPoly BiPoly::monomial(int a, int b, FieldElem c) {
    BiPoly p;
    p.add_term(a, b, c);
    return p;
}

FieldElem BiPoly::coeff(int a, int b) const {
    auto it = terms_.find({a, b});
    return it == terms_.end() ? FieldElem{0} : it->second;
}

void BiPoly::add_term(int a, int b, FieldElem c) {
    if (c.value == 0) return;
    if (a < 0 || b < 0) throw std::invalid_argument("negative exponent");
    auto [it, inserted] = terms_.try_emplace({a, b}, c);
    if (!inserted) {
        it->second.value ^= c.value;
        if (it->second.value == 0) terms_.erase(it);
    }
}

UniPoly uni_add(const UniPoly& a, const UniPoly& b) {
    std::vector<FieldElem> out(
        std::max(a.coeffs().size(), b.coeffs().size()), FieldElem{0});
    for (std::size_t k = 0; k < out.size(); ++k) {
        out[k].value = static_cast<std::uint16_t>(
            a.coeff(static_cast<int>(k)).value ^
            b.coeff(static_cast<int>(k)).value);
    }
    return UniPoly(std::move(out));
}

UniPoly uni_mul(const FieldContext& F, const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly::zero();
    std::vector<FieldElem> out(
        static_cast<std::size_t>(a.degree() + b.degree()) + 1, FieldElem{0});
    for (int i = 0; i <= a.degree(); ++i) {
        if (a.coeff(i).value == 0) continue;
        for (int j = 0; j <= b.degree(); ++j) {
            out[static_cast<std::size_t>(i + j)].value ^=
                F.mul(a.coeff(i), b.coeff(j)).value;
        }
    }
    return UniPoly(std::move(out));
}

UniPoly uni_scale(const FieldContext& F, const UniPoly& a, FieldElem c) {
    if (c.value == 0) return UniPoly::zero();
    std::vector<FieldElem> out = a.coeffs();
    for (auto& v : out) v = F.mul(v, c);
    return UniPoly(std::move(out));
}

FieldElem eval_uni(const FieldContext& F, const UniPoly& p, FieldElem x) {
    FieldElem acc{0};
    for (int k = p.degree(); k >= 0; --k) {
        acc = F.add(F.mul(acc, x), p.coeff(k));
    }
    return acc;
}

BiPoly bi_add(const BiPoly& a, const BiPoly& b) {
    BiPoly out = a;
    for (const auto& [e, c] : b.terms()) out.add_term(e.first, e.second, c);
    return out;
}

UniPoly hasse_uni(const UniPoly& p, int i) {
    if (i < 0) throw std::invalid_argument("negative derivative order");
    if (i == 0) return p;
    if (p.degree() < i) return UniPoly::zero();
    std::vector<FieldElem> out(static_cast<std::size_t>(p.degree() - i) + 1,
                               FieldElem{0});
    for (int k = 0; k + i <= p.degree(); ++k) {
        if (binom_mod2(static_cast<std::uint64_t>(k + i),
                       static_cast<std::uint64_t>(i))) {
            out[static_cast<std::size_t>(k)] = p.coeff(k + i);
        }
    }
    return UniPoly(std::move(out));
}

BiPoly hasse_bi(const BiPoly& p, MultiIndex idx) {
    if (idx.i < 0 || idx.j < 0) {
        throw std::invalid_argument("negative derivative order");
    }
    BiPoly out;
    for (const auto& [e, c] : p.terms()) {
        const int a = e.first, b = e.second;
        if (a < idx.i || b < idx.j) continue;
        if (binom_mod2(static_cast<std::uint64_t>(a),
                       static_cast<std::uint64_t>(idx.i)) &&
            binom_mod2(static_cast<std::uint64_t>(b),
                       static_cast<std::uint64_t>(idx.j))) {
            out.add_term(a - idx.i, b - idx.j, c);
        }
    }
    return out;
}

FieldElem eval_bi(const FieldContext& F, const BiPoly& p, FieldElem x,
                  FieldElem y) {
    // Power tables up to the largest exponent present.
    int amax = 0, bmax = 0;
    for (const auto& [e, c] : p.terms()) {
        amax = std::max(amax, e.first);
        bmax = std::max(bmax, e.second);
    }
    std::vector<FieldElem> px(static_cast<std::size_t>(amax) + 1),
        py(static_cast<std::size_t>(bmax) + 1);
    px[0] = F.one();
    for (int k = 1; k <= amax; ++k) px[static_cast<std::size_t>(k)] =
        F.mul(px[static_cast<std::size_t>(k - 1)], x);
    py[0] = F.one();
    for (int k = 1; k <= bmax; ++k) py[static_cast<std::size_t>(k)] =
        F.mul(py[static_cast<std::size_t>(k - 1)], y);

    FieldElem acc{0};
    for (const auto& [e, c] : p.terms()) {
        acc = F.add(acc, F.mul(c, F.mul(px[static_cast<std::size_t>(e.first)],
                                        py[static_cast<std::size_t>(e.second)])));
    }
    return acc;
}

Symbol eval_derivs(const FieldContext& F, const BiPoly& p, FieldElem x,
                   FieldElem y, int r) {
    if (r < 1) throw std::invalid_argument("derivative order bound must be >= 1");
    int amax = 0, bmax = 0;
    for (const auto& [e, c] : p.terms()) {
        amax = std::max(amax, e.first);
        bmax = std::max(bmax, e.second);
    }
    std::vector<FieldElem> px(static_cast<std::size_t>(amax) + 1),
        py(static_cast<std::size_t>(bmax) + 1);
    px[0] = F.one();
    for (int k = 1; k <= amax; ++k) px[static_cast<std::size_t>(k)] =
        F.mul(px[static_cast<std::size_t>(k - 1)], x);
    py[0] = F.one();
    for (int k = 1; k <= bmax; ++k) py[static_cast<std::size_t>(k)] =
        F.mul(py[static_cast<std::size_t>(k - 1)], y);

    Symbol sym;
    sym.derivs.assign(static_cast<std::size_t>(symbol_width(r)), FieldElem{0});
    for (const auto& [e, c] : p.terms()) {
        const int a = e.first, b = e.second;
        for (int w = 0; w < r; ++w) {
            for (int j = 0; j <= w; ++j) {
                const int i = w - j;
                if (a < i || b < j) continue;
                if (!binom_mod2(static_cast<std::uint64_t>(a),
                                static_cast<std::uint64_t>(i)) ||
                    !binom_mod2(static_cast<std::uint64_t>(b),
                                static_cast<std::uint64_t>(j))) {
                    continue;
                }
                const int pos = w * (w + 1) / 2 + j;
                sym.derivs[static_cast<std::size_t>(pos)].value ^=
                    F.mul(c, F.mul(px[static_cast<std::size_t>(a - i)],
                                   py[static_cast<std::size_t>(b - j)]))
                        .value;
            }
        }
    }
    return sym;
}

UniPoly restrict_to_line(const FieldContext& F, const BiPoly& p, Line line) {
    int dmax = 0;
    for (const auto& [e, c] : p.terms()) dmax = std::max(dmax, e.first + e.second);
    std::vector<FieldElem> out(static_cast<std::size_t>(dmax) + 1, FieldElem{0});

    int bmax = 0;
    for (const auto& [e, c] : p.terms()) bmax = std::max(bmax, e.second);
    std::vector<FieldElem> pa(static_cast<std::size_t>(bmax) + 1),
        pb(static_cast<std::size_t>(bmax) + 1);
    pa[0] = F.one();
    pb[0] = F.one();
    for (int k = 1; k <= bmax; ++k) {
        pa[static_cast<std::size_t>(k)] =
            F.mul(pa[static_cast<std::size_t>(k - 1)], line.alpha);
        pb[static_cast<std::size_t>(k)] =
            F.mul(pb[static_cast<std::size_t>(k - 1)], line.beta);
    }

    // T^a (alpha T + beta)^b expanded with mod-2 binomial coefficients.
    for (const auto& [e, c] : p.terms()) {
        const int a = e.first, b = e.second;
        for (int i = 0; i <= b; ++i) {
            if (!binom_mod2(static_cast<std::uint64_t>(b),
                            static_cast<std::uint64_t>(i))) {
                continue;
            }
            out[static_cast<std::size_t>(a + i)].value ^=
                F.mul(c, F.mul(pa[static_cast<std::size_t>(i)],
                               pb[static_cast<std::size_t>(b - i)]))
                    .value;
        }
    }
    return UniPoly(std::move(out));
}

UniPoly reduce_canonical(const UniPoly& a, int q, int r) {
    if (q < 2 || r < 1 || (r & (r - 1)) != 0) {
        throw std::invalid_argument("reduce_canonical needs q >= 2 and r a power of 2");
    }
    const int qr = q * r;
    if (a.degree() < qr) return a;
    std::vector<FieldElem> c = a.coeffs();
    // X^(qr+k) == X^(r+k) mod X^(qr) + X^r; a single descending pass
    // handles cascaded folds since targets are strictly lower.
    for (int k = a.degree(); k >= qr; --k) {
        auto& v = c[static_cast<std::size_t>(k)];
        if (v.value == 0) continue;
        c[static_cast<std::size_t>(k - qr + r)].value ^= v.value;
        v.value = 0;
    }
    return UniPoly(std::move(c));
}

bool equiv_up_to_order(const UniPoly& a, const UniPoly& b, int q, int r) {
    return reduce_canonical(uni_add(a, b), q, r).is_zero();
}

}  // namespace lmc
