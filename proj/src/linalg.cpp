#include "lmc/linalg.hpp"

#include <stdexcept>

namespace lmc {

namespace {

// xors mul(f, src) into dst
void add_scaled_row(const FieldContext& F, std::span<FieldElem> dst,
                    std::span<const FieldElem> src, FieldElem f) {
    if (f.value == 0) return;
    for (std::size_t c = 0; c < dst.size(); ++c) {
        dst[c].value ^= F.mul(f, src[c]).value;
    }
}

void scale_row(const FieldContext& F, std::span<FieldElem> row, FieldElem f) {
    for (auto& v : row) v = F.mul(v, f);
}

}  // namespace

std::size_t rank(const FieldContext& F, Matrix m) {
    std::size_t r = 0;
    for (std::size_t col = 0; col < m.cols() && r < m.rows(); ++col) {
        std::size_t piv = r;
        while (piv < m.rows() && m.at(piv, col).value == 0) ++piv;
        if (piv == m.rows()) continue;
        if (piv != r) {
            for (std::size_t c = 0; c < m.cols(); ++c) {
                std::swap(m.at(r, c), m.at(piv, c));
            }
        }
        const FieldElem inv = F.inv(m.at(r, col));
        scale_row(F, m.row(r), inv);
        for (std::size_t rr = r + 1; rr < m.rows(); ++rr) {
            add_scaled_row(F, m.row(rr), m.row(r), m.at(rr, col));
        }
        ++r;
    }
    return r;
}

std::optional<std::vector<FieldElem>> solve(const FieldContext& F, Matrix a,
                                            std::vector<FieldElem> b) {
    if (b.size() != a.rows()) throw std::invalid_argument("rhs size mismatch");
    std::vector<std::size_t> pivot_cols;
    std::size_t r = 0;
    for (std::size_t col = 0; col < a.cols() && r < a.rows(); ++col) {
        std::size_t piv = r;
        while (piv < a.rows() && a.at(piv, col).value == 0) ++piv;
        if (piv == a.rows()) continue;
        if (piv != r) {
            for (std::size_t c = 0; c < a.cols(); ++c) {
                std::swap(a.at(r, c), a.at(piv, c));
            }
            std::swap(b[r], b[piv]);
        }
        const FieldElem inv = F.inv(a.at(r, col));
        scale_row(F, a.row(r), inv);
        b[r] = F.mul(b[r], inv);
        for (std::size_t rr = 0; rr < a.rows(); ++rr) {
            if (rr == r) continue;
            const FieldElem f = a.at(rr, col);
            if (f.value == 0) continue;
            add_scaled_row(F, a.row(rr), a.row(r), f);
            b[rr] = F.add(b[rr], F.mul(f, b[r]));
        }
        pivot_cols.push_back(col);
        ++r;
    }
    for (std::size_t rr = r; rr < a.rows(); ++rr) {
        if (b[rr].value != 0) return std::nullopt;
    }
    std::vector<FieldElem> x(a.cols(), FieldElem{0});
    for (std::size_t k = 0; k < pivot_cols.size(); ++k) {
        x[pivot_cols[k]] = b[k];
    }
    return x;
}

Factorization::Factorization(const FieldContext& F, const Matrix& a)
    : F_(F), rref_(a), transform_(a.rows(), a.rows()) {
    for (std::size_t i = 0; i < a.rows(); ++i) {
        transform_.at(i, i) = F.one();
    }
    std::size_t r = 0;
    for (std::size_t col = 0; col < rref_.cols() && r < rref_.rows(); ++col) {
        std::size_t piv = r;
        while (piv < rref_.rows() && rref_.at(piv, col).value == 0) ++piv;
        if (piv == rref_.rows()) continue;
        if (piv != r) {
            for (std::size_t c = 0; c < rref_.cols(); ++c) {
                std::swap(rref_.at(r, c), rref_.at(piv, c));
            }
            for (std::size_t c = 0; c < transform_.cols(); ++c) {
                std::swap(transform_.at(r, c), transform_.at(piv, c));
            }
        }
        const FieldElem inv = F.inv(rref_.at(r, col));
        scale_row(F, rref_.row(r), inv);
        scale_row(F, transform_.row(r), inv);
        for (std::size_t rr = 0; rr < rref_.rows(); ++rr) {
            if (rr == r) continue;
            const FieldElem f = rref_.at(rr, col);
            if (f.value == 0) continue;
            add_scaled_row(F, rref_.row(rr), rref_.row(r), f);
            add_scaled_row(F, transform_.row(rr), transform_.row(r), f);
        }
        pivot_cols_.push_back(col);
        ++r;
    }
}

std::optional<std::vector<FieldElem>> Factorization::solve(
    std::span<const FieldElem> b) const {
    if (b.size() != transform_.rows()) {
        throw std::invalid_argument("rhs size mismatch");
    }
    // y = E b, then R x = y.
    std::vector<FieldElem> y(transform_.rows(), FieldElem{0});
    for (std::size_t r = 0; r < transform_.rows(); ++r) {
        FieldElem acc{0};
        for (std::size_t c = 0; c < transform_.cols(); ++c) {
            acc = F_.add(acc, F_.mul(transform_.at(r, c), b[c]));
        }
        y[r] = acc;
    }
    for (std::size_t r = pivot_cols_.size(); r < y.size(); ++r) {
        if (y[r].value != 0) return std::nullopt;
    }
    std::vector<FieldElem> x(rref_.cols(), FieldElem{0});
    for (std::size_t k = 0; k < pivot_cols_.size(); ++k) {
        x[pivot_cols_[k]] = y[k];
    }
    return x;
}

}  // namespace lmc
