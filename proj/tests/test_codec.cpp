#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "lmc/codec.hpp"
#include "lmc/errors.hpp"
#include "lmc/gf.hpp"
#include "lmc/lifting.hpp"
#include "lmc/linalg.hpp"

using namespace lmc;

namespace {

Message random_message(const FieldContext& F, std::size_t n,
                       std::mt19937_64& rng) {
    Message msg;
    msg.coeffs.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        msg.coeffs.push_back(
            FieldElem{static_cast<std::uint16_t>(rng() % F.order())});
    }
    return msg;
}

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() /
               ("lmc_test_" + std::to_string(std::random_device{}()));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
};

}  // namespace

TEST_CASE("evaluation map basics") {
    FieldContext F(2);
    const CodeParams p = CodeParams::make(2, 1, 1);

    const Codeword zero = eval_map(F, BiPoly::zero(), p);
    REQUIRE(zero.symbols.size() == 16);
    for (const auto& sym : zero.symbols) {
        CHECK(sym.derivs == std::vector<FieldElem>(3, FieldElem{0}));
    }

    const Codeword constant = eval_map(F, BiPoly::monomial(0, 0, F.elem(2)), p);
    for (const auto& sym : constant.symbols) {
        CHECK(sym.derivs == std::vector<FieldElem>{F.elem(2), F.zero(), F.zero()});
    }

    CHECK_THROWS_AS(eval_map(F, BiPoly::monomial(7, 4, F.one()), p),
                    std::invalid_argument);
}

TEST_CASE("unit message encodes monomial derivative values") {
    FieldContext F(3);
    const CodeParams p = CodeParams::make(3, 1, 1);
    const GoodSet gs = enumerate_good(F, p, ClassifyMode::Oracle);
    const std::size_t pick = 17;
    Message unit;
    unit.coeffs.assign(gs.size(), FieldElem{0});
    unit.coeffs[pick] = F.one();
    const Codeword cw = encode(F, unit, gs, p);
    const Monomial& m = gs.monomials[pick];

    // independent route: C(a,i) C(b,j) x^(a-i) y^(b-j) via binomial parity
    for (std::uint32_t xv = 0; xv < 8; ++xv) {
        for (std::uint32_t yv = 0; yv < 8; ++yv) {
            const FieldElem x = F.elem(xv), y = F.elem(yv);
            const Symbol& sym = cw.symbols[point_index(x, y, p)];
            for (const MultiIndex idx : deriv_order(p.r)) {
                FieldElem expect{0};
                if (m.a >= idx.i && m.b >= idx.j &&
                    binom_mod2(static_cast<std::uint64_t>(m.a),
                               static_cast<std::uint64_t>(idx.i)) &&
                    binom_mod2(static_cast<std::uint64_t>(m.b),
                               static_cast<std::uint64_t>(idx.j))) {
                    expect = F.mul(
                        F.pow(x, static_cast<std::uint64_t>(m.a - idx.i)),
                        F.pow(y, static_cast<std::uint64_t>(m.b - idx.j)));
                }
                CHECK(sym.derivs[static_cast<std::size_t>(
                          deriv_index(idx, p.r))] == expect);
            }
        }
    }
}

TEST_CASE("encode is linear and injective") {
    FieldContext F(2);
    const CodeParams p = CodeParams::make(2, 1, 1);
    const GoodSet gs = enumerate_good(F, p, ClassifyMode::Oracle);
    std::mt19937_64 rng(21);

    const Message zero{std::vector<FieldElem>(gs.size(), FieldElem{0})};
    Codeword zero_cw = encode(F, zero, gs, p);
    for (const auto& sym : zero_cw.symbols) {
        for (const auto& v : sym.derivs) CHECK(v == F.zero());
    }

    for (int trial = 0; trial < 10; ++trial) {
        const Message m1 = random_message(F, gs.size(), rng);
        const Message m2 = random_message(F, gs.size(), rng);
        Message m12;
        for (std::size_t k = 0; k < gs.size(); ++k) {
            m12.coeffs.push_back(F.add(m1.coeffs[k], m2.coeffs[k]));
        }
        const Codeword c1 = encode(F, m1, gs, p);
        const Codeword c2 = encode(F, m2, gs, p);
        const Codeword c12 = encode(F, m12, gs, p);
        for (std::size_t i = 0; i < c12.symbols.size(); ++i) {
            for (std::size_t k = 0; k < c12.symbols[i].derivs.size(); ++k) {
                CHECK(c12.symbols[i].derivs[k] ==
                      F.add(c1.symbols[i].derivs[k], c2.symbols[i].derivs[k]));
            }
        }
        if (!(m1 == m2)) CHECK(!(c1 == c2));
    }

    Message wrong_len{std::vector<FieldElem>(gs.size() + 1, FieldElem{0})};
    CHECK_THROWS_AS(encode(F, wrong_len, gs, p), std::invalid_argument);
}

TEST_CASE("evaluation map has full rank on type-r monomials") {
    // the q=4 instance; larger instances run in the acceptance suite
    FieldContext F(2);
    const CodeParams p = CodeParams::make(2, 1, 1);
    const auto mons = type_r_monomials(p);
    REQUIRE(mons.size() == 48);
    CHECK(rank(F, eval_matrix(F, mons, p)) == 48);
}

TEST_CASE("distinct type-r polynomials evaluate to distinct codewords") {
    FieldContext F(2);
    const CodeParams p = CodeParams::make(2, 1, 1);
    const auto mons = type_r_monomials(p);
    std::mt19937_64 rng(22);
    for (int trial = 0; trial < 10; ++trial) {
        BiPoly P, Q;
        for (const auto& m : mons) {
            P.add_term(m.a, m.b,
                       FieldElem{static_cast<std::uint16_t>(rng() % 4)});
            Q.add_term(m.a, m.b,
                       FieldElem{static_cast<std::uint16_t>(rng() % 4)});
        }
        if (P == Q) continue;
        CHECK(!(eval_map(F, P, p) == eval_map(F, Q, p)));
    }
}

TEST_CASE("message recovery") {
    FieldContext F(2);
    const CodeParams p = CodeParams::make(2, 1, 1);
    const GoodSet gs = enumerate_good(F, p, ClassifyMode::Oracle);
    std::mt19937_64 rng(23);

    const Message zero{std::vector<FieldElem>(gs.size(), FieldElem{0})};
    CHECK(recover_message(F, encode(F, zero, gs, p), gs, p) == zero);

    for (int trial = 0; trial < 20; ++trial) {
        const Message msg = random_message(F, gs.size(), rng);
        CHECK(recover_message(F, encode(F, msg, gs, p), gs, p) == msg);
    }

    // a single corrupted element never lands back in the image: the
    // difference would be a codeword with exactly one nonzero symbol, which
    // the disjoint-repair-group property rules out
    for (int trial = 0; trial < 20; ++trial) {
        const Message msg = random_message(F, gs.size(), rng);
        Codeword cw = encode(F, msg, gs, p);
        auto& sym = cw.symbols[rng() % cw.symbols.size()];
        auto& entry = sym.derivs[rng() % sym.derivs.size()];
        entry.value ^= static_cast<std::uint16_t>(1 + rng() % 3);
        CHECK_THROWS_AS(recover_message(F, cw, gs, p), NotInImage);
    }
}

TEST_CASE("binary expansion") {
    FieldContext F(2);
    const CodeParams p = CodeParams::make(2, 1, 1);
    const GoodSet gs = enumerate_good(F, p, ClassifyMode::Oracle);

    const Message zero{std::vector<FieldElem>(gs.size(), FieldElem{0})};
    const auto bits = binary_expand(F, encode(F, zero, gs, p), p);
    CHECK(bits.size() == 16u * 3u * 2u);  // q^2 * C(r+1,2) * ell = 96
    for (auto b : bits) CHECK(b == 0);

    std::mt19937_64 rng(24);
    for (int trial = 0; trial < 10; ++trial) {
        const Message m1 = random_message(F, gs.size(), rng);
        const Message m2 = random_message(F, gs.size(), rng);
        if (m1 == m2) continue;
        CHECK(binary_expand(F, encode(F, m1, gs, p), p) !=
              binary_expand(F, encode(F, m2, gs, p), p));
    }
}

TEST_CASE("codeword file round trip") {
    TempDir dir;
    FieldContext F(3);
    const CodeParams p = CodeParams::make(3, 1, 1);
    const GoodSet gs = enumerate_good(F, p, ClassifyMode::Oracle);
    std::mt19937_64 rng(25);
    const Message msg = random_message(F, gs.size(), rng);
    const Codeword cw = encode(F, msg, gs, p);

    const auto path = dir.path / "cw.lmc";
    write_codeword(path, p, cw);

    const CodewordFile file = read_codeword(path);
    CHECK(file.params == p);
    CHECK(file.codeword == cw);

    // deterministic bytes: a second write is identical
    const auto path2 = dir.path / "cw2.lmc";
    write_codeword(path2, p, cw);
    std::ifstream f1(path, std::ios::binary), f2(path2, std::ios::binary);
    const std::string b1((std::istreambuf_iterator<char>(f1)),
                         std::istreambuf_iterator<char>());
    const std::string b2((std::istreambuf_iterator<char>(f2)),
                         std::istreambuf_iterator<char>());
    CHECK(b1 == b2);
    CHECK(b1.size() == 8u + 64u * 3u * 1u);

    // message files
    const auto mpath = dir.path / "msg.bin";
    write_message(mpath, F, msg);
    CHECK(read_message(mpath, F) == msg);
}

TEST_CASE("codeword file validation") {
    TempDir dir;
    const auto path = dir.path / "bad.lmc";
    {
        std::ofstream out(path, std::ios::binary);
        out << "NOPE then some trailing bytes";
    }
    CHECK_THROWS(read_codeword(path));

    // valid header but truncated body
    {
        std::ofstream out(path, std::ios::binary | std::ios::trunc);
        out << "LMC1";
        out.put(2).put(1).put(1).put(0);
        out << "xy";
    }
    CHECK_THROWS(read_codeword(path));
}
