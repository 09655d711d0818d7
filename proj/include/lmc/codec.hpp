#pragma once

#include <cstdint>
#include <filesystem>
#include <memory>
#include <vector>

#include "lmc/gf.hpp"
#include "lmc/lifting.hpp"
#include "lmc/linalg.hpp"
#include "lmc/params.hpp"
#include "lmc/poly.hpp"

namespace lmc {

/// q^2 symbols indexed by evaluation point (x, y) in row-major order:
/// index = x*q + y over the integer values of the coordinates.
struct Codeword {
    std::vector<Symbol> symbols;

    friend bool operator==(const Codeword&, const Codeword&) = default;
};

inline std::size_t point_index(FieldElem x, FieldElem y, const CodeParams& p) {
    return static_cast<std::size_t>(x.value) * static_cast<std::size_t>(p.q) +
           y.value;
}

/// Coefficient vector on the good-monomial basis, in GoodSet order.
struct Message {
    std::vector<FieldElem> coeffs;

    friend bool operator==(const Message&, const Message&) = default;
};

/// Order-r evaluation map: the derivative vector of P at every point of
/// F_q^2. Rejects polynomials with non-type-r terms, since those can
/// collide with type-r ones under the map.
Codeword eval_map(const FieldContext& F, const BiPoly& P, const CodeParams& p);

/// The evaluation-map matrix restricted to the given monomial columns:
/// q^2 * C(r+1,2) rows (points in row-major order, derivatives in
/// deriv_order layout within each point), one column per monomial.
Matrix eval_matrix(const FieldContext& F, const std::vector<Monomial>& mons,
                   const CodeParams& p);

/// Encodes a message over the good-monomial basis. Linear; length must
/// equal the good-set size.
Codeword encode(const FieldContext& F, const Message& msg, const GoodSet& gs,
                const CodeParams& p);

/// Inverse of encode on its image; solves the evaluation-map system with a
/// factorization computed once per (params, good set) pair and cached.
/// Throws NotInImage when the codeword is not an encoding of any message.
Message recover_message(const FieldContext& F, const Codeword& cw,
                        const GoodSet& gs, const CodeParams& p);

/// Every symbol flattened to bits: each of the C(r+1,2) field elements in
/// derivative order, ell bits each, least significant bit first. One byte
/// per bit, values 0/1; total length q^2 * C(r+1,2) * ell.
std::vector<std::uint8_t> binary_expand(const FieldContext& F,
                                        const Codeword& cw,
                                        const CodeParams& p);

/// Codeword container format "LMC1": 4-byte magic, one byte each of ell,
/// ell_r, ell_s, one reserved zero byte, then q^2 symbols in row-major
/// point order, each symbol C(r+1,2) elements of ceil(ell/8) bytes,
/// little-endian. Written atomically (temp file + rename).
void write_codeword(const std::filesystem::path& path, const CodeParams& p,
                    const Codeword& cw);

struct CodewordFile {
    CodeParams params;
    Codeword codeword;
};

CodewordFile read_codeword(const std::filesystem::path& path);

/// Message files are bare sequences of ceil(ell/8)-byte little-endian
/// field elements, one per good monomial.
void write_message(const std::filesystem::path& path, const FieldContext& F,
                   const Message& msg);
Message read_message(const std::filesystem::path& path, const FieldContext& F);

}  // namespace lmc
