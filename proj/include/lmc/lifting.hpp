#pragma once

#include <utility>
#include <vector>

#include "lmc/gf.hpp"
#include "lmc/linalg.hpp"
#include "lmc/params.hpp"
#include "lmc/poly.hpp"

namespace lmc {

/// A candidate monomial X^a Y^b with its base-q digit split
/// a = a0*q + a1, b = b0*q + b1.
struct Monomial {
    int a = 0;
    int b = 0;
    int a0 = 0, a1 = 0, b0 = 0, b1 = 0;

    static Monomial make(int a, int b, const CodeParams& p);

    friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Type-r condition: floor(a/q) + floor(b/q) <= r - 1. Only type-r
/// monomials index distinct codewords under the order-r evaluation map.
bool is_type_r(const Monomial& m, const CodeParams& p);

/// Exhaustive classifier: X^a Y^b is good iff its restriction to every
/// line (T, alpha*T + beta) reduces canonically to degree < d. Exact but
/// costs q^2 line checks per monomial.
bool is_good_oracle(const FieldContext& F, const Monomial& m,
                    const CodeParams& p);

enum class FastVerdict {
    CertifiedGood,  // the sufficient conditions for goodness hold
    Unknown,        // no certificate; the monomial may still be good
};

/// Certifying classifier from the binary-carry analysis: never returns
/// CertifiedGood for a monomial the oracle rejects. Returns Unknown
/// wholesale when q + r - 2 < rq - s fails, the regime where the
/// raw-coefficient window argument does not apply.
FastVerdict is_good_fast(const Monomial& m, const CodeParams& p);

enum class ClassifyMode { Oracle, Fast };

/// Good monomials in graded lexicographic order (by a+b, then a).
struct GoodSet {
    std::vector<Monomial> monomials;
    ClassifyMode mode = ClassifyMode::Oracle;

    std::size_t size() const { return monomials.size(); }
};

/// All type-r monomials, graded-lex sorted, for the column layout shared by
/// the dimension computation and the evaluation-map matrix.
std::vector<Monomial> type_r_monomials(const CodeParams& p);

/// Enumerates good monomials with the chosen classifier. Fast mode yields
/// a subset of Oracle mode. Classification fans out over monomials but the
/// result order is deterministic.
GoodSet enumerate_good(const FieldContext& F, const CodeParams& p,
                       ClassifyMode mode);

/// C(r+1,2) * 4^ell - 3 r s^(log2 4/3) * 3^ell; may be negative (vacuous).
double good_count_lower_bound(const CodeParams& p);

/// 1 - 6 r^-1 s^(log2 4/3) q^(log2 3/4); may be negative (vacuous).
double rate_lower_bound(const CodeParams& p);

/// 3 r^(log2 8/3) q^(log2 3) / C(r+1,2), the s = r specialization;
/// rejects s != r.
double redundancy_upper_bound(const CodeParams& p);

/// Brute-force count of pairs (a1, b1) in [0,q)^2 with
/// q - s' - a1 <=_2^ell b1 for some s' in [1, s], together with the
/// closed-form bound 2 * 3^ell * (4/3)^ell_s.
std::pair<long long, double> count_leq2_pairs(int ell, int ell_s);

/// Constraint matrix of the full code: one row per (line, degree c in
/// [d, rq-1]) pair, one column per type-r monomial in graded-lex order;
/// the entry is the degree-c canonical coefficient of the monomial's
/// restriction to the line.
Matrix code_constraint_matrix(const FieldContext& F, const CodeParams& p);

/// Dimension over F_q of the full lifted code (not just the good-monomial
/// span): nullity of the line-constraint system. Refuses q > 16.
int code_dimension_exact(const FieldContext& F, const CodeParams& p);

/// Membership test straight from the definition: every line restriction of
/// P reduces to degree < d. P must be spanned by type-r monomials.
bool is_in_code(const FieldContext& F, const BiPoly& P, const CodeParams& p);

}  // namespace lmc
