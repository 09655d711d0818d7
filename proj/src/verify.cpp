#include "lmc/verify.hpp"

#include <gmp.h>

#include <chrono>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>

#include "lmc/codec.hpp"
#include "lmc/dualcheck.hpp"
#include "lmc/gf.hpp"
#include "lmc/lifting.hpp"
#include "lmc/linalg.hpp"
#include "lmc/params.hpp"
#include "lmc/poly.hpp"
#include "lmc/repair.hpp"

namespace lmc {

namespace {

class SuiteRunner {
public:
    explicit SuiteRunner(std::string suite) : suite_(std::move(suite)) {}

    void check(const std::string& name,
               const std::function<bool(std::string&)>& body) {
        CheckResult res;
        res.suite = suite_;
        res.name = name;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            res.pass = body(res.detail);
        } catch (const std::exception& ex) {
            res.pass = false;
            res.detail = std::string("exception: ") + ex.what();
        }
        res.seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                .count();
        results_.push_back(std::move(res));
    }

    std::vector<CheckResult> take() { return std::move(results_); }

private:
    std::string suite_;
    std::vector<CheckResult> results_;
};

FieldElem random_elem(const FieldContext& F, std::mt19937_64& rng) {
    return FieldElem{static_cast<std::uint16_t>(rng() % F.order())};
}

UniPoly random_uni(const FieldContext& F, std::mt19937_64& rng, int max_deg) {
    std::vector<FieldElem> c(static_cast<std::size_t>(max_deg) + 1);
    for (auto& v : c) v = random_elem(F, rng);
    return UniPoly(std::move(c));
}

// (X^q - X)^r expanded by repeated multiplication; reference object for the
// derivative battery.
UniPoly xq_minus_x_pow(const FieldContext& F, int q, int r) {
    UniPoly base = uni_add(UniPoly::monomial(q, F.one()),
                           UniPoly::monomial(1, F.one()));
    UniPoly acc = UniPoly::monomial(0, F.one());
    for (int k = 0; k < r; ++k) acc = uni_mul(F, acc, base);
    return acc;
}

int exact_binom_mod2(unsigned long a, unsigned long b) {
    mpz_t v;
    mpz_init(v);
    mpz_bin_uiui(v, a, b);
    const int odd = mpz_odd_p(v) ? 1 : 0;
    mpz_clear(v);
    return odd;
}

std::vector<CheckResult> run_field() {
    SuiteRunner s("field");

    s.check("modulus-tables-valid", [](std::string& detail) {
        for (int ell = 1; ell <= 16; ++ell) {
            FieldContext F(ell);  // construction validates irreducibility
            if (F.order() != (1u << ell)) return false;
        }
        detail = "constructed GF(2^ell) for ell=1..16";
        return true;
    });

    s.check("log-antilog-roundtrip", [](std::string& detail) {
        for (int ell = 1; ell <= 8; ++ell) {
            FieldContext F(ell);
            for (std::uint32_t x = 1; x < F.order(); ++x) {
                FieldElem e{static_cast<std::uint16_t>(x)};
                if (!(F.mul(e, F.one()) == e)) return false;
                if (!(F.pow(e, F.order() - 1) == F.one())) return false;
            }
        }
        detail = "x^(q-1) = 1 and unit law, exhaustive for ell <= 8";
        return true;
    });

    s.check("distributivity", [](std::string& detail) {
        for (int ell = 1; ell <= 4; ++ell) {
            FieldContext F(ell);
            for (std::uint32_t x = 0; x < F.order(); ++x) {
                for (std::uint32_t y = 0; y < F.order(); ++y) {
                    for (std::uint32_t z = 0; z < F.order(); ++z) {
                        FieldElem ex{static_cast<std::uint16_t>(x)};
                        FieldElem ey{static_cast<std::uint16_t>(y)};
                        FieldElem ez{static_cast<std::uint16_t>(z)};
                        if (!(F.mul(ex, F.add(ey, ez)) ==
                              F.add(F.mul(ex, ey), F.mul(ex, ez)))) {
                            return false;
                        }
                    }
                }
            }
        }
        std::mt19937_64 rng(2024);
        for (int ell : {5, 8, 12, 16}) {
            FieldContext F(ell);
            for (int trial = 0; trial < 2000; ++trial) {
                FieldElem x = random_elem(F, rng), y = random_elem(F, rng),
                          z = random_elem(F, rng);
                if (!(F.mul(x, F.add(y, z)) ==
                      F.add(F.mul(x, y), F.mul(x, z)))) {
                    return false;
                }
            }
        }
        detail = "exhaustive ell <= 4, randomized ell in {5,8,12,16}";
        return true;
    });

    s.check("binom-mod2-vs-bigint", [](std::string& detail) {
        for (unsigned long a = 0; a <= 255; ++a) {
            for (unsigned long b = 0; b <= 255; ++b) {
                if (binom_mod2(a, b) != exact_binom_mod2(a, b)) {
                    detail = "mismatch at a=" + std::to_string(a) +
                             " b=" + std::to_string(b);
                    return false;
                }
            }
        }
        detail = "all a, b <= 255 against exact big-integer binomials";
        return true;
    });

    s.check("inverse-law", [](std::string& detail) {
        for (int ell = 1; ell <= 8; ++ell) {
            FieldContext F(ell);
            for (std::uint32_t x = 1; x < F.order(); ++x) {
                FieldElem e{static_cast<std::uint16_t>(x)};
                if (!(F.mul(e, F.inv(e)) == F.one())) return false;
            }
        }
        detail = "mul(x, inv(x)) = 1, exhaustive for ell <= 8";
        return true;
    });

    return s.take();
}

std::vector<CheckResult> run_poly() {
    SuiteRunner s("poly");

    s.check("derivative-sum-and-product-rule", [](std::string& detail) {
        FieldContext F(3);
        std::mt19937_64 rng(11);
        for (int trial = 0; trial < 200; ++trial) {
            const UniPoly P = random_uni(F, rng, 20);
            const UniPoly Q = random_uni(F, rng, 20);
            const int i = static_cast<int>(rng() % 8);
            if (!(uni_add(hasse_uni(P, i), hasse_uni(Q, i)) ==
                  hasse_uni(uni_add(P, Q), i))) {
                return false;
            }
            UniPoly conv = UniPoly::zero();
            for (int e = 0; e <= i; ++e) {
                conv = uni_add(conv, uni_mul(F, hasse_uni(P, e),
                                             hasse_uni(Q, i - e)));
            }
            if (!(conv == hasse_uni(uni_mul(F, P, Q), i))) return false;
        }
        detail = "200 randomized trials over GF(8), degrees <= 20";
        return true;
    });

    s.check("derivatives-of-xq-minus-x-pow-r", [](std::string& detail) {
        for (int q : {4, 8}) {
            FieldContext F(q == 4 ? 2 : 3);
            for (int r : {1, 2, 4}) {
                const UniPoly P = xq_minus_x_pow(F, q, r);
                for (int i = 0; i <= r; ++i) {
                    const UniPoly expect =
                        binom_mod2(static_cast<std::uint64_t>(r),
                                   static_cast<std::uint64_t>(i))
                            ? xq_minus_x_pow(F, q, r - i)
                            : UniPoly::zero();
                    if (!(hasse_uni(P, i) == expect)) return false;
                }
                for (int i = r + 1; i < q; ++i) {
                    if (!hasse_uni(P, i).is_zero()) return false;
                }
            }
        }
        detail = "q in {4,8}, r in {1,2,4}, all orders i < q";
        return true;
    });

    s.check("canonical-reduction-preserves-derivatives", [](std::string& detail) {
        FieldContext F(2);
        const int q = 4, r = 2;
        std::mt19937_64 rng(12);
        for (int trial = 0; trial < 50; ++trial) {
            const UniPoly A = random_uni(F, rng, 17);
            const UniPoly B = reduce_canonical(A, q, r);
            if (B.degree() >= q * r) return false;
            for (std::uint32_t g = 0; g < F.order(); ++g) {
                for (int i = 0; i < r; ++i) {
                    const FieldElem x{static_cast<std::uint16_t>(g)};
                    if (!(eval_uni(F, hasse_uni(A, i), x) ==
                          eval_uni(F, hasse_uni(B, i), x))) {
                        return false;
                    }
                }
            }
            if (!equiv_up_to_order(A, B, q, r)) return false;
        }
        detail = "50 random polynomials, exhaustive points/orders at q=4, r=2";
        return true;
    });

    s.check("coefficient-window-stability", [](std::string& detail) {
        std::mt19937_64 rng(13);
        for (auto [ell, r] : {std::pair{2, 2}, std::pair{3, 2}}) {
            FieldContext F(ell);
            const int q = static_cast<int>(F.order());
            for (int trial = 0; trial < 50; ++trial) {
                const UniPoly A = random_uni(F, rng, 2 * q * r - r - 1);
                const UniPoly B = reduce_canonical(A, q, r);
                for (int a = A.degree() - (q * r - r) + 1; a < q * r; ++a) {
                    if (a < 0) continue;
                    if (!(A.coeff(a) == B.coeff(a))) return false;
                }
            }
        }
        detail = "coefficients above deg(A) - (qr-r) unchanged by reduction";
        return true;
    });

    return s.take();
}

std::vector<CheckResult> run_lifting() {
    SuiteRunner s("lifting");

    s.check("fast-certifier-soundness", [](std::string& detail) {
        long long certified = 0;
        for (int ell : {2, 3}) {
            FieldContext F(ell);
            for (int ell_r = 0; ell_r < ell; ++ell_r) {
                for (int ell_s = 0; ell_s <= ell; ++ell_s) {
                    const CodeParams p = CodeParams::make(ell, ell_r, ell_s);
                    for (const auto& m : type_r_monomials(p)) {
                        if (is_good_fast(m, p) == FastVerdict::CertifiedGood) {
                            ++certified;
                            if (!is_good_oracle(F, m, p)) {
                                detail = "unsound certificate at " +
                                         p.describe() + " a=" +
                                         std::to_string(m.a) + " b=" +
                                         std::to_string(m.b);
                                return false;
                            }
                        }
                    }
                }
            }
        }
        detail = "exhaustive at q in {4,8}; " + std::to_string(certified) +
                 " certificates all confirmed by the oracle";
        return true;
    });

    s.check("good-count-lower-bound", [](std::string& detail) {
        FieldContext F(4);
        const CodeParams p = CodeParams::make(4, 1, 1);
        const GoodSet oracle = enumerate_good(F, p, ClassifyMode::Oracle);
        const GoodSet fast = enumerate_good(F, p, ClassifyMode::Fast);
        const double bound = good_count_lower_bound(p);
        std::ostringstream os;
        os << "oracle=" << oracle.size() << " fast=" << fast.size()
           << " bound=" << bound;
        detail = os.str();
        return static_cast<double>(oracle.size()) >= bound &&
               fast.size() <= oracle.size();
    });

    s.check("good-span-inside-kernel", [](std::string& detail) {
        for (auto [ell, ell_s] : {std::pair{2, 1}, std::pair{3, 1}}) {
            FieldContext F(ell);
            const CodeParams p = CodeParams::make(ell, 1, ell_s);
            const Matrix constraints = code_constraint_matrix(F, p);
            const std::vector<Monomial> mons = type_r_monomials(p);
            const GoodSet gs = enumerate_good(F, p, ClassifyMode::Oracle);
            std::size_t gi = 0;
            for (std::size_t col = 0; col < mons.size(); ++col) {
                const bool good = gi < gs.size() &&
                                  gs.monomials[gi].a == mons[col].a &&
                                  gs.monomials[gi].b == mons[col].b;
                if (good) {
                    ++gi;
                    for (std::size_t row = 0; row < constraints.rows(); ++row) {
                        if (constraints.at(row, col).value != 0) return false;
                    }
                }
            }
            if (gi != gs.size()) return false;
            const int dim = code_dimension_exact(F, p);
            if (dim < static_cast<int>(gs.size())) return false;
        }
        detail = "good columns vanish in the constraint matrix; dim >= count";
        return true;
    });

    s.check("pair-count-bound", [](std::string& detail) {
        for (int ell = 1; ell <= 6; ++ell) {
            for (int ell_s = 1; ell_s <= ell; ++ell_s) {
                const auto [count, bound] = count_leq2_pairs(ell, ell_s);
                if (static_cast<double>(count) > bound) {
                    detail = "count " + std::to_string(count) + " > bound at ell=" +
                             std::to_string(ell) + " ell_s=" +
                             std::to_string(ell_s);
                    return false;
                }
            }
        }
        detail = "brute-force count <= 2*3^ell*(4/3)^ell_s for all ell <= 6";
        return true;
    });

    s.check("sum-of-bad-monomials-regression", [](std::string& detail) {
        // q=8, r=2, d=15: X^14 Y and X^7 Y^8 are individually rejected but
        // their sum lies in the code, so the code exceeds the good span.
        FieldContext F(3);
        const CodeParams p = CodeParams::make(3, 1, 0);
        const Monomial m1 = Monomial::make(14, 1, p);
        const Monomial m2 = Monomial::make(7, 8, p);
        if (is_good_oracle(F, m1, p) || is_good_oracle(F, m2, p)) return false;
        BiPoly sum = bi_add(BiPoly::monomial(14, 1, F.one()),
                            BiPoly::monomial(7, 8, F.one()));
        if (!is_in_code(F, sum, p)) return false;
        const GoodSet gs = enumerate_good(F, p, ClassifyMode::Oracle);
        const int dim = code_dimension_exact(F, p);
        std::ostringstream os;
        os << "good=" << gs.size() << " dim=" << dim;
        detail = os.str();
        return dim > static_cast<int>(gs.size());
    });

    s.check("order-one-spans-exactly", [](std::string& detail) {
        // With r = 1 the code coincides with its good-monomial span.
        for (int ell : {2, 3}) {
            FieldContext F(ell);
            const CodeParams p = CodeParams::make(ell, 0, 0);
            const GoodSet gs = enumerate_good(F, p, ClassifyMode::Oracle);
            if (code_dimension_exact(F, p) != static_cast<int>(gs.size())) {
                return false;
            }
        }
        detail = "dimension equals good count at r=1, q in {4,8}";
        return true;
    });

    return s.take();
}

std::vector<CheckResult> run_codec() {
    SuiteRunner s("codec");

    s.check("evaluation-map-bijective", [](std::string& detail) {
        std::ostringstream os;
        for (auto [ell, ell_r] : {std::pair{2, 1}, std::pair{3, 1}}) {
            FieldContext F(ell);
            const CodeParams p = CodeParams::make(ell, ell_r, ell_r);
            const std::vector<Monomial> mons = type_r_monomials(p);
            const std::size_t rk = rank(F, eval_matrix(F, mons, p));
            os << "q=" << p.q << ",r=" << p.r << ": rank " << rk << "/"
               << mons.size() << "  ";
            if (rk != mons.size()) {
                detail = os.str();
                return false;
            }
        }
        detail = os.str();
        return true;
    });

    s.check("measured-rate-vs-bound", [](std::string& detail) {
        std::ostringstream os;
        for (auto [ell, ell_r] : {std::pair{4, 1}, std::pair{4, 2}}) {
            FieldContext F(ell);
            const CodeParams p = CodeParams::make(ell, ell_r, ell_r);
            const double bound = rate_lower_bound(p);
            const GoodSet gs = enumerate_good(F, p, ClassifyMode::Oracle);
            const double measured =
                static_cast<double>(gs.size()) /
                (static_cast<double>(p.symbol_width) * p.length);
            os << "q=" << p.q << ",r=" << p.r << ": measured " << measured
               << " bound " << bound << (bound < 0 ? " (vacuous)" : "") << "  ";
            if (bound >= 0 && measured < bound) {
                detail = os.str();
                return false;
            }
        }
        detail = os.str();
        return true;
    });

    s.check("encode-recover-roundtrip", [](std::string& detail) {
        FieldContext F(2);
        const CodeParams p = CodeParams::make(2, 1, 1);
        const GoodSet gs = enumerate_good(F, p, ClassifyMode::Oracle);
        std::mt19937_64 rng(77);
        for (int trial = 0; trial < 20; ++trial) {
            Message msg;
            msg.coeffs.reserve(gs.size());
            for (std::size_t k = 0; k < gs.size(); ++k) {
                msg.coeffs.push_back(random_elem(F, rng));
            }
            const Codeword cw = encode(F, msg, gs, p);
            if (!(recover_message(F, cw, gs, p) == msg)) return false;
        }
        detail = "20 random messages at q=4, r=2";
        return true;
    });

    s.check("binary-expansion-shape", [](std::string& detail) {
        FieldContext F(2);
        const CodeParams p = CodeParams::make(2, 1, 1);
        const GoodSet gs = enumerate_good(F, p, ClassifyMode::Oracle);
        std::mt19937_64 rng(78);
        Message m1, m2;
        for (std::size_t k = 0; k < gs.size(); ++k) {
            m1.coeffs.push_back(random_elem(F, rng));
            m2.coeffs.push_back(random_elem(F, rng));
        }
        if (m1 == m2) m2.coeffs[0].value ^= 1;
        const auto b1 = binary_expand(F, encode(F, m1, gs, p), p);
        const auto b2 = binary_expand(F, encode(F, m2, gs, p), p);
        const std::size_t expect = static_cast<std::size_t>(p.length) *
                                   static_cast<std::size_t>(p.symbol_width) *
                                   static_cast<std::size_t>(p.ell);
        detail = "length " + std::to_string(b1.size());
        return b1.size() == expect && b2.size() == expect && b1 != b2;
    });

    return s.take();
}

std::vector<CheckResult> run_repair() {
    SuiteRunner s("repair");

    s.check("drgp-groups-disjoint-and-sufficient", [](std::string& detail) {
        for (auto [ell, trials] : {std::pair{2, 4}, std::pair{3, 2}}) {
            FieldContext F(ell);
            const CodeParams p = CodeParams::make(ell, 1, 1);
            const GoodSet gs = enumerate_good(F, p, ClassifyMode::Oracle);
            std::mt19937_64 rng(91);
            for (int trial = 0; trial < trials; ++trial) {
                Message msg;
                for (std::size_t k = 0; k < gs.size(); ++k) {
                    msg.coeffs.push_back(random_elem(F, rng));
                }
                const Codeword cw = encode(F, msg, gs, p);
                for (std::uint32_t xv = 0; xv < F.order(); ++xv) {
                    for (std::uint32_t yv = 0; yv < F.order(); ++yv) {
                        const Point pt{FieldElem{static_cast<std::uint16_t>(xv)},
                                       FieldElem{static_cast<std::uint16_t>(yv)}};
                        const RepairPlan plan = make_repair_plan(F, pt, p);
                        // groups partition the q lines and touch disjoint
                        // coordinate sets away from the target
                        std::set<std::uint16_t> alphas;
                        std::set<std::size_t> seen;
                        for (const auto& grp : plan.groups) {
                            for (const auto& line : grp.lines) {
                                alphas.insert(line.alpha.value);
                                for (std::uint32_t t = 0; t < F.order(); ++t) {
                                    const FieldElem tx{
                                        static_cast<std::uint16_t>(t)};
                                    const FieldElem ty = F.add(
                                        F.mul(line.alpha, tx), line.beta);
                                    if (tx == pt.x && ty == pt.y) continue;
                                    const std::size_t idx =
                                        point_index(tx, ty, p);
                                    if (!seen.insert(idx).second) return false;
                                }
                            }
                        }
                        if (alphas.size() != static_cast<std::size_t>(p.q)) {
                            return false;
                        }
                        const Symbol& truth =
                            cw.symbols[point_index(pt.x, pt.y, p)];
                        for (const auto& grp : plan.groups) {
                            const Symbol rec = recover_symbol(
                                F, cw, PointSet{pt}, pt, grp, p);
                            if (!(rec == truth)) return false;
                        }
                    }
                }
            }
        }
        detail = "every point, every group, exhaustive at q in {4,8} (r=2)";
        return true;
    });

    s.check("drgp-randomized-q16", [](std::string& detail) {
        FieldContext F(4);
        const CodeParams p = CodeParams::make(4, 1, 1);
        const GoodSet gs = enumerate_good(F, p, ClassifyMode::Fast);
        std::mt19937_64 rng(92);
        Message msg;
        for (std::size_t k = 0; k < gs.size(); ++k) {
            msg.coeffs.push_back(random_elem(F, rng));
        }
        const Codeword cw = encode(F, msg, gs, p);
        for (int trial = 0; trial < 8; ++trial) {
            const Point pt{random_elem(F, rng), random_elem(F, rng)};
            const RepairPlan plan = make_repair_plan(F, pt, p);
            const Symbol& truth = cw.symbols[point_index(pt.x, pt.y, p)];
            for (const auto& grp : plan.groups) {
                if (!(recover_symbol(F, cw, PointSet{pt}, pt, grp, p) ==
                      truth)) {
                    return false;
                }
            }
        }
        detail = "8 sampled points, all 8 groups each, q=16 r=2";
        return true;
    });

    s.check("repair-idempotent", [](std::string& detail) {
        FieldContext F(3);
        const CodeParams p = CodeParams::make(3, 1, 1);
        const GoodSet gs = enumerate_good(F, p, ClassifyMode::Oracle);
        std::mt19937_64 rng(93);
        Message msg;
        for (std::size_t k = 0; k < gs.size(); ++k) {
            msg.coeffs.push_back(random_elem(F, rng));
        }
        const Codeword cw = encode(F, msg, gs, p);
        detail = "empty erasure set leaves the codeword unchanged";
        return repair_erasures(F, cw, PointSet{}, p) == cw;
    });

    return s.take();
}

std::vector<CheckResult> run_dual() {
    SuiteRunner s("dual");

    s.check("indicator-matches-dual-codeword", [](std::string& detail) {
        for (int ell : {1, 2, 3}) {
            FieldContext F(ell);
            for (std::uint32_t av = 0; av < F.order(); ++av) {
                for (std::uint32_t bv = 0; bv < F.order(); ++bv) {
                    const Line line{FieldElem{static_cast<std::uint16_t>(av)},
                                    FieldElem{static_cast<std::uint16_t>(bv)}};
                    const DualCodeword dc = dual_codeword(F, line);
                    const BiPoly ind = line_indicator_poly(F, line);
                    std::size_t weight = 0;
                    for (std::uint32_t xv = 0; xv < F.order(); ++xv) {
                        for (std::uint32_t yv = 0; yv < F.order(); ++yv) {
                            const FieldElem x{static_cast<std::uint16_t>(xv)};
                            const FieldElem y{static_cast<std::uint16_t>(yv)};
                            const FieldElem v = eval_bi(F, ind, x, y);
                            const FieldElem ref =
                                dc.vec[static_cast<std::size_t>(xv) *
                                           F.order() +
                                       yv];
                            if (!(v == ref)) return false;
                            if (ref == F.one()) ++weight;
                        }
                    }
                    if (weight != F.order()) return false;
                }
            }
        }
        detail = "pointwise equality and weight q, exhaustive for q in {2,4,8}";
        return true;
    });

    s.check("dual-span-dimension-bound", [](std::string& detail) {
        std::ostringstream os;
        for (int ell = 1; ell <= 4; ++ell) {
            FieldContext F(ell);
            const int dim = dual_span_dim(F);
            long long bound = 1;
            for (int k = 0; k < ell; ++k) bound *= 3;
            os << "ell=" << ell << ": " << dim << " <= " << bound << "  ";
            if (dim > bound) {
                detail = os.str();
                return false;
            }
        }
        detail = os.str();
        return true;
    });

    s.check("indicator-support-in-lucas-set", [](std::string& detail) {
        for (int ell : {1, 2, 3, 4}) {
            FieldContext F(ell);
            const int q = static_cast<int>(F.order());
            for (std::uint32_t av = 0; av < F.order(); ++av) {
                for (std::uint32_t bv = 0; bv < F.order(); ++bv) {
                    const BiPoly ind = line_indicator_poly(
                        F, Line{FieldElem{static_cast<std::uint16_t>(av)},
                                FieldElem{static_cast<std::uint16_t>(bv)}});
                    for (const auto& [e, c] : ind.terms()) {
                        const int a = e.first, b = e.second;
                        if (a + b > q - 1) return false;
                        if (!binom_mod2(static_cast<std::uint64_t>(a + b),
                                        static_cast<std::uint64_t>(a))) {
                            return false;
                        }
                    }
                }
            }
        }
        detail = "support within {(a,b): a+b <= q-1, C(a+b,a) odd}, q <= 16";
        return true;
    });

    return s.take();
}

}  // namespace

const std::vector<std::string>& verify_suites() {
    static const std::vector<std::string> suites = {
        "field", "poly", "lifting", "codec", "repair", "dual"};
    return suites;
}

std::vector<CheckResult> run_suite(const std::string& suite) {
    if (suite == "field") return run_field();
    if (suite == "poly") return run_poly();
    if (suite == "lifting") return run_lifting();
    if (suite == "codec") return run_codec();
    if (suite == "repair") return run_repair();
    if (suite == "dual") return run_dual();
    throw std::invalid_argument("unknown verify suite: " + suite);
}

std::vector<CheckResult> run_all_suites() {
    std::vector<CheckResult> all;
    for (const auto& suite : verify_suites()) {
        auto batch = run_suite(suite);
        all.insert(all.end(), batch.begin(), batch.end());
    }
    return all;
}

}  // namespace lmc
