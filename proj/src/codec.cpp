#include "lmc/codec.hpp"

#include <fstream>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

#include "lmc/detail/parallel.hpp"
#include "lmc/errors.hpp"

namespace lmc {

namespace {

void require_type_r_terms(const BiPoly& P, const CodeParams& p) {
    for (const auto& [e, c] : P.terms()) {
        const Monomial m = Monomial::make(e.first, e.second, p);
        if (!is_type_r(m, p)) {
            throw std::invalid_argument(
                "polynomial has non-type-r term X^" + std::to_string(e.first) +
                "Y^" + std::to_string(e.second));
        }
    }
}

}  // namespace

Codeword eval_map(const FieldContext& F, const BiPoly& P, const CodeParams& p) {
    require_type_r_terms(P, p);
    Codeword cw;
    cw.symbols.assign(static_cast<std::size_t>(p.length), Symbol{});
    detail::parallel_for(static_cast<std::size_t>(p.length), [&](std::size_t i) {
        const FieldElem x{static_cast<std::uint16_t>(i / p.q)};
        const FieldElem y{static_cast<std::uint16_t>(i % p.q)};
        cw.symbols[i] = eval_derivs(F, P, x, y, p.r);
    });
    return cw;
}

Matrix eval_matrix(const FieldContext& F, const std::vector<Monomial>& mons,
                   const CodeParams& p) {
    const std::size_t width = static_cast<std::size_t>(p.symbol_width);
    Matrix m(static_cast<std::size_t>(p.length) * width, mons.size());
    detail::parallel_for(mons.size(), [&](std::size_t col) {
        const BiPoly mono = BiPoly::monomial(mons[col].a, mons[col].b, F.one());
        for (std::size_t i = 0; i < static_cast<std::size_t>(p.length); ++i) {
            const FieldElem x{static_cast<std::uint16_t>(i / p.q)};
            const FieldElem y{static_cast<std::uint16_t>(i % p.q)};
            const Symbol sym = eval_derivs(F, mono, x, y, p.r);
            for (std::size_t k = 0; k < width; ++k) {
                m.at(i * width + k, col) = sym.derivs[k];
            }
        }
    });
    return m;
}

Codeword encode(const FieldContext& F, const Message& msg, const GoodSet& gs,
                const CodeParams& p) {
    if (msg.coeffs.size() != gs.size()) {
        throw std::invalid_argument(
            "message length " + std::to_string(msg.coeffs.size()) +
            " does not match good-set size " + std::to_string(gs.size()));
    }
    BiPoly P;
    for (std::size_t k = 0; k < gs.size(); ++k) {
        P.add_term(gs.monomials[k].a, gs.monomials[k].b, msg.coeffs[k]);
    }
    return eval_map(F, P, p);
}

namespace {

// Factorizations keyed by parameters plus a fingerprint of the good set.
struct RecoveryKey {
    int ell, ell_r, ell_s;
    std::uint64_t set_hash;
    std::size_t set_size;

    friend bool operator<(const RecoveryKey& a, const RecoveryKey& b) {
        return std::tie(a.ell, a.ell_r, a.ell_s, a.set_hash, a.set_size) <
               std::tie(b.ell, b.ell_r, b.ell_s, b.set_hash, b.set_size);
    }
};

std::uint64_t hash_good_set(const GoodSet& gs) {
    std::uint64_t h = 1469598103934665603ull;
    for (const auto& m : gs.monomials) {
        h = (h ^ static_cast<std::uint64_t>(m.a)) * 1099511628211ull;
        h = (h ^ static_cast<std::uint64_t>(m.b)) * 1099511628211ull;
    }
    return h;
}

const Factorization& recovery_factorization(const FieldContext& F,
                                            const GoodSet& gs,
                                            const CodeParams& p) {
    static std::mutex mu;
    static std::map<RecoveryKey, std::unique_ptr<Factorization>> cache;
    const RecoveryKey key{p.ell, p.ell_r, p.ell_s, hash_good_set(gs),
                          gs.size()};
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it == cache.end()) {
        it = cache.emplace(key, std::make_unique<Factorization>(
                                    F, eval_matrix(F, gs.monomials, p)))
                 .first;
    }
    return *it->second;
}

}  // namespace

Message recover_message(const FieldContext& F, const Codeword& cw,
                        const GoodSet& gs, const CodeParams& p) {
    if (cw.symbols.size() != static_cast<std::size_t>(p.length)) {
        throw std::invalid_argument("codeword length mismatch");
    }
    const std::size_t width = static_cast<std::size_t>(p.symbol_width);
    std::vector<FieldElem> rhs;
    rhs.reserve(cw.symbols.size() * width);
    for (const auto& sym : cw.symbols) {
        if (sym.derivs.size() != width) {
            throw std::invalid_argument("malformed symbol");
        }
        rhs.insert(rhs.end(), sym.derivs.begin(), sym.derivs.end());
    }
    const Factorization& fact = recovery_factorization(F, gs, p);
    auto x = fact.solve(rhs);
    if (!x) {
        throw NotInImage("codeword is not an encoding of any message");
    }
    return Message{std::move(*x)};
}

std::vector<std::uint8_t> binary_expand(const FieldContext& F,
                                        const Codeword& cw,
                                        const CodeParams& p) {
    std::vector<std::uint8_t> bits;
    bits.reserve(cw.symbols.size() * static_cast<std::size_t>(p.symbol_width) *
                 static_cast<std::size_t>(F.ell()));
    for (const auto& sym : cw.symbols) {
        for (const auto& e : sym.derivs) {
            for (int k = 0; k < F.ell(); ++k) {
                bits.push_back(static_cast<std::uint8_t>((e.value >> k) & 1));
            }
        }
    }
    return bits;
}

namespace {

constexpr char kMagic[4] = {'L', 'M', 'C', '1'};

void put_elem(std::string& out, FieldElem e, int nbytes) {
    for (int k = 0; k < nbytes; ++k) {
        out.push_back(static_cast<char>((e.value >> (8 * k)) & 0xff));
    }
}

void atomic_write(const std::filesystem::path& path, const std::string& data) {
    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open " + tmp.string());
        out.write(data.data(), static_cast<std::streamsize>(data.size()));
        if (!out) throw std::runtime_error("short write to " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

}  // namespace

void write_codeword(const std::filesystem::path& path, const CodeParams& p,
                    const Codeword& cw) {
    if (cw.symbols.size() != static_cast<std::size_t>(p.length)) {
        throw std::invalid_argument("codeword length mismatch");
    }
    const int nbytes = (p.ell + 7) / 8;
    std::string data;
    data.reserve(8 + cw.symbols.size() *
                         static_cast<std::size_t>(p.symbol_width * nbytes));
    data.append(kMagic, 4);
    data.push_back(static_cast<char>(p.ell));
    data.push_back(static_cast<char>(p.ell_r));
    data.push_back(static_cast<char>(p.ell_s));
    data.push_back(0);
    for (const auto& sym : cw.symbols) {
        if (sym.derivs.size() != static_cast<std::size_t>(p.symbol_width)) {
            throw std::invalid_argument("malformed symbol");
        }
        for (const auto& e : sym.derivs) put_elem(data, e, nbytes);
    }
    atomic_write(path, data);
}

CodewordFile read_codeword(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::string data((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
    if (data.size() < 8 || data.compare(0, 4, kMagic, 4) != 0) {
        throw std::runtime_error(path.string() + ": not an LMC1 codeword file");
    }
    const int ell = static_cast<unsigned char>(data[4]);
    const int ell_r = static_cast<unsigned char>(data[5]);
    const int ell_s = static_cast<unsigned char>(data[6]);
    if (data[7] != 0) {
        throw std::runtime_error(path.string() + ": nonzero reserved byte");
    }
    CodewordFile out;
    out.params = CodeParams::make(ell, ell_r, ell_s);
    const CodeParams& p = out.params;
    const int nbytes = (p.ell + 7) / 8;
    const std::size_t expect =
        8 + static_cast<std::size_t>(p.length) *
                static_cast<std::size_t>(p.symbol_width * nbytes);
    if (data.size() != expect) {
        throw std::runtime_error(path.string() + ": truncated codeword file");
    }
    std::size_t pos = 8;
    out.codeword.symbols.assign(static_cast<std::size_t>(p.length), Symbol{});
    for (auto& sym : out.codeword.symbols) {
        sym.derivs.assign(static_cast<std::size_t>(p.symbol_width),
                          FieldElem{0});
        for (auto& e : sym.derivs) {
            std::uint32_t v = 0;
            for (int k = 0; k < nbytes; ++k) {
                v |= static_cast<std::uint32_t>(
                         static_cast<unsigned char>(data[pos++]))
                     << (8 * k);
            }
            if (v >= (1u << p.ell)) {
                throw std::runtime_error(path.string() +
                                         ": field element out of range");
            }
            e.value = static_cast<std::uint16_t>(v);
        }
    }
    return out;
}

void write_message(const std::filesystem::path& path, const FieldContext& F,
                   const Message& msg) {
    std::string data;
    data.reserve(msg.coeffs.size() * static_cast<std::size_t>(F.elem_bytes()));
    for (const auto& e : msg.coeffs) put_elem(data, e, F.elem_bytes());
    atomic_write(path, data);
}

Message read_message(const std::filesystem::path& path, const FieldContext& F) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::string data((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
    const int nbytes = F.elem_bytes();
    if (data.size() % static_cast<std::size_t>(nbytes) != 0) {
        throw std::runtime_error(path.string() +
                                 ": size is not a multiple of the element width");
    }
    Message msg;
    msg.coeffs.reserve(data.size() / static_cast<std::size_t>(nbytes));
    for (std::size_t pos = 0; pos < data.size(); pos += nbytes) {
        std::uint32_t v = 0;
        for (int k = 0; k < nbytes; ++k) {
            v |= static_cast<std::uint32_t>(
                     static_cast<unsigned char>(data[pos + k]))
                 << (8 * k);
        }
        if (v >= F.order()) {
            throw std::runtime_error(path.string() +
                                     ": field element out of range");
        }
        msg.coeffs.push_back(FieldElem{static_cast<std::uint16_t>(v)});
    }
    return msg;
}

}  // namespace lmc
