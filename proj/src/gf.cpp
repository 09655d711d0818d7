#include "lmc/gf.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace lmc {

namespace {

// Lexicographically least irreducible polynomial of each degree 1..16,
// bitmask with the leading term included.
constexpr std::array<std::uint32_t, 17> kModuli = {
    0,       0x2,    0x7,    0xb,    0x13,   0x25,    0x43,   0x83,  0x11b,
    0x203,   0x409,  0x805,  0x1009, 0x201b, 0x4021,  0x8003, 0x1002b,
};

int poly_degree(std::uint32_t p) {
    int d = -1;
    while (p) {
        ++d;
        p >>= 1;
    }
    return d;
}

// Carry-less product of two GF(2) polynomials.
std::uint32_t poly_mul_gf2(std::uint32_t a, std::uint32_t b) {
    std::uint32_t r = 0;
    while (b) {
        if (b & 1) r ^= a;
        a <<= 1;
        b >>= 1;
    }
    return r;
}

std::uint32_t poly_mod_gf2(std::uint32_t a, std::uint32_t m) {
    const int dm = poly_degree(m);
    for (int da = poly_degree(a); da >= dm; da = poly_degree(a)) {
        a ^= m << (da - dm);
    }
    return a;
}

bool is_irreducible(std::uint32_t m) {
    const int d = poly_degree(m);
    for (std::uint32_t f = 2u; poly_degree(f) <= d / 2; ++f) {
        if (poly_degree(f) >= 1 && poly_mod_gf2(m, f) == 0) return false;
    }
    return true;
}

}  // namespace

std::uint32_t FieldContext::irreducible_modulus(int ell) {
    if (ell < 1 || ell > 16) {
        throw std::invalid_argument("field degree must be in [1, 16], got " +
                                    std::to_string(ell));
    }
    return kModuli[static_cast<std::size_t>(ell)];
}

std::uint16_t FieldContext::mul_slow(std::uint16_t a, std::uint16_t b) const {
    return static_cast<std::uint16_t>(
        poly_mod_gf2(poly_mul_gf2(a, b), modulus_));
}

FieldContext::FieldContext(int ell)
    : ell_(ell), q_(0), modulus_(irreducible_modulus(ell)) {
    q_ = 1u << ell_;
    if (!is_irreducible(modulus_)) {
        throw std::logic_error("tabulated modulus is not irreducible");
    }

    log_.assign(q_, 0);
    antilog_.assign(q_, 0);

    // Find a generator of the multiplicative group and fill both tables.
    // The least irreducible modulus is not always primitive (e.g. ell = 8),
    // so x cannot be assumed to generate.
    const std::uint32_t group = q_ - 1;
    for (std::uint32_t g = 1; g < q_; ++g) {
        std::uint16_t v = 1;
        std::uint32_t k = 0;
        bool ok = true;
        do {
            antilog_[k] = v;
            log_[v] = static_cast<std::uint16_t>(k);
            v = mul_slow(v, static_cast<std::uint16_t>(g));
            ++k;
            if (v == 1 && k < group) {
                ok = false;  // order of g divides k < q-1
                break;
            }
        } while (k < group);
        if (ok && v == 1) return;
    }
    throw std::logic_error("no multiplicative generator found");
}

FieldElem FieldContext::elem(std::uint32_t v) const {
    if (v >= q_) {
        throw std::invalid_argument("field element value " + std::to_string(v) +
                                    " out of range for GF(2^" +
                                    std::to_string(ell_) + ")");
    }
    return FieldElem{static_cast<std::uint16_t>(v)};
}

FieldElem FieldContext::inv(FieldElem x) const {
    if (x.value == 0) throw std::domain_error("inverse of zero");
    std::uint32_t e = (q_ - 1 - log_[x.value]) % (q_ - 1);
    return FieldElem{antilog_[e]};
}

FieldElem FieldContext::pow(FieldElem x, std::uint64_t k) const {
    FieldElem r = one();
    FieldElem base = x;
    while (k) {
        if (k & 1) r = mul(r, base);
        base = mul(base, base);
        k >>= 1;
    }
    return r;
}

bool leq2(std::int64_t a, std::int64_t b, int ell) {
    const std::int64_t q = std::int64_t{1} << ell;
    std::uint64_t ra = static_cast<std::uint64_t>(((a % q) + q) % q);
    std::uint64_t rb = static_cast<std::uint64_t>(((b % q) + q) % q);
    return (ra & ~rb) == 0;
}

int binom_mod2(std::uint64_t a, std::uint64_t b) {
    if (b > a) return 0;
    return (b & ~a) == 0 ? 1 : 0;
}

}  // namespace lmc
