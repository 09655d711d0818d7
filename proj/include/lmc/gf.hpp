#pragma once

#include <cstdint>
#include <vector>

namespace lmc {

/// An element of GF(2^ell), stored as the coefficient bitmask of its
/// polynomial representative over GF(2).
struct FieldElem {
    std::uint16_t value = 0;

    friend bool operator==(FieldElem, FieldElem) = default;
    friend bool operator<(FieldElem a, FieldElem b) { return a.value < b.value; }
};

/// Arithmetic context for GF(2^ell), 1 <= ell <= 16.
///
/// The modulus is the lexicographically least irreducible polynomial of
/// degree ell (fixed table, re-validated by trial division at construction),
/// so encodings are reproducible across runs. Multiplication and inversion
/// go through log/antilog tables built from a generator of the
/// multiplicative group. Immutable after construction; all operations are
/// pure and safe for concurrent readers.
class FieldContext {
public:
    explicit FieldContext(int ell);

    int ell() const { return ell_; }
    std::uint32_t order() const { return q_; }       // q = 2^ell
    std::uint32_t modulus() const { return modulus_; }
    int elem_bytes() const { return (ell_ + 7) / 8; }

    /// Fixed irreducible modulus for each degree, as a bitmask including
    /// the leading term.
    static std::uint32_t irreducible_modulus(int ell);

    FieldElem zero() const { return FieldElem{0}; }
    FieldElem one() const { return FieldElem{1}; }

    /// Wraps a raw value, checking it lies in [0, q).
    FieldElem elem(std::uint32_t v) const;

    FieldElem add(FieldElem x, FieldElem y) const {
        return FieldElem{static_cast<std::uint16_t>(x.value ^ y.value)};
    }

    FieldElem mul(FieldElem x, FieldElem y) const {
        if (x.value == 0 || y.value == 0) return zero();
        std::uint32_t e = log_[x.value] + log_[y.value];
        if (e >= q_ - 1) e -= q_ - 1;
        return FieldElem{antilog_[e]};
    }

    /// Multiplicative inverse; inv(0) is a domain error.
    FieldElem inv(FieldElem x) const;

    /// x^k with 0^0 = 1.
    FieldElem pow(FieldElem x, std::uint64_t k) const;

private:
    int ell_;
    std::uint32_t q_;
    std::uint32_t modulus_;
    std::vector<std::uint16_t> log_;      // log_[x] for x != 0
    std::vector<std::uint16_t> antilog_;  // antilog_[k] = g^k, k in [0, q-1)

    std::uint16_t mul_slow(std::uint16_t a, std::uint16_t b) const;
};

/// Digitwise binary dominance after reduction mod 2^ell:
/// true iff every binary digit of (a mod 2^ell) is <= that of (b mod 2^ell).
bool leq2(std::int64_t a, std::int64_t b, int ell);

/// C(a, b) mod 2. Equals 1 iff the binary digits of b are dominated by
/// those of a.
int binom_mod2(std::uint64_t a, std::uint64_t b);

}  // namespace lmc
