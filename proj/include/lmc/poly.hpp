#pragma once

#include <map>
#include <utility>
#include <vector>

#include "lmc/gf.hpp"

namespace lmc {

/// A Hasse-derivative index (i, j); weight is i + j.
struct MultiIndex {
    int i = 0;
    int j = 0;

    int wt() const { return i + j; }
    friend bool operator==(MultiIndex, MultiIndex) = default;
};

/// Fixed layout of the derivative indices of weight < r: weights ascending,
/// and within weight w the indices (w,0), (w-1,1), ..., (0,w). This order is
/// part of the codeword format and matches the row order of the directional
/// derivative systems used in repair.
std::vector<MultiIndex> deriv_order(int r);

/// Position of idx in deriv_order(r).
int deriv_index(MultiIndex idx, int r);

/// Number of derivative indices of weight < r, i.e. C(r+1, 2).
inline int symbol_width(int r) { return r * (r + 1) / 2; }

/// The order-r derivative vector of a bivariate polynomial at one point:
/// symbol_width(r) field elements in deriv_order(r) layout.
struct Symbol {
    std::vector<FieldElem> derivs;

    friend bool operator==(const Symbol&, const Symbol&) = default;
};

/// A line L(T) = (T, alpha*T + beta). Vertical lines are not representable
/// and are excluded from all constructions.
struct Line {
    FieldElem alpha;
    FieldElem beta;

    friend bool operator==(Line, Line) = default;
};

/// Dense univariate polynomial; coeffs[k] is the coefficient of X^k.
/// The highest stored coefficient is nonzero; the zero polynomial is empty.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<FieldElem> coeffs);

    static UniPoly zero() { return UniPoly{}; }
    static UniPoly monomial(int deg, FieldElem c);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    FieldElem coeff(int k) const {
        if (k < 0 || k >= static_cast<int>(coeffs_.size())) return FieldElem{0};
        return coeffs_[static_cast<std::size_t>(k)];
    }
    const std::vector<FieldElem>& coeffs() const { return coeffs_; }

    friend bool operator==(const UniPoly&, const UniPoly&) = default;

private:
    std::vector<FieldElem> coeffs_;
};

/// Sparse bivariate polynomial: exponent pair (a, b) -> nonzero coefficient.
class BiPoly {
public:
    using TermMap = std::map<std::pair<int, int>, FieldElem>;

    BiPoly() = default;

    static BiPoly zero() { return BiPoly{}; }
    static BiPoly monomial(int a, int b, FieldElem c);

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    FieldElem coeff(int a, int b) const;
    const TermMap& terms() const { return terms_; }

    /// XORs c into the coefficient of X^a Y^b, dropping it if it cancels.
    void add_term(int a, int b, FieldElem c);

    friend bool operator==(const BiPoly&, const BiPoly&) = default;

private:
    TermMap terms_;
};

// Characteristic 2: subtraction equals addition throughout.
UniPoly uni_add(const UniPoly& a, const UniPoly& b);
UniPoly uni_mul(const FieldContext& F, const UniPoly& a, const UniPoly& b);
UniPoly uni_scale(const FieldContext& F, const UniPoly& a, FieldElem c);
FieldElem eval_uni(const FieldContext& F, const UniPoly& p, FieldElem x);

BiPoly bi_add(const BiPoly& a, const BiPoly& b);

/// The i-th Hasse derivative of p: coefficient k of the result is
/// C(k+i, i) mod 2 times coefficient k+i of p.
UniPoly hasse_uni(const UniPoly& p, int i);

/// The (i, j)-th Hasse derivative of a bivariate polynomial.
BiPoly hasse_bi(const BiPoly& p, MultiIndex idx);

FieldElem eval_bi(const FieldContext& F, const BiPoly& p, FieldElem x,
                  FieldElem y);

/// All Hasse derivatives of weight < r evaluated at (x, y), in
/// deriv_order(r) layout.
Symbol eval_derivs(const FieldContext& F, const BiPoly& p, FieldElem x,
                   FieldElem y, int r);

/// The univariate restriction P(T, alpha*T + beta).
UniPoly restrict_to_line(const FieldContext& F, const BiPoly& p, Line line);

/// Remainder of a modulo X^(qr) + X^r (which equals (X^q - X)^r when r is a
/// power of 2): the unique equivalent-up-to-order-r polynomial of degree
/// less than rq.
UniPoly reduce_canonical(const UniPoly& a, int q, int r);

/// True iff a and b agree in all Hasse derivatives of order < r at every
/// point of the field, i.e. (X^q - X)^r divides a - b.
bool equiv_up_to_order(const UniPoly& a, const UniPoly& b, int q, int r);

}  // namespace lmc
