#include "lmc/repair.hpp"

#include <stdexcept>

#include "lmc/errors.hpp"
#include "lmc/linalg.hpp"

namespace lmc {

std::vector<Line> lines_through(const FieldContext& F, Point pt,
                                const CodeParams& p) {
    std::vector<Line> out;
    out.reserve(static_cast<std::size_t>(p.q));
    for (std::uint32_t av = 0; av < F.order(); ++av) {
        const FieldElem alpha{static_cast<std::uint16_t>(av)};
        // beta = delta - alpha*gamma (characteristic 2: minus is plus)
        const FieldElem beta = F.add(pt.y, F.mul(alpha, pt.x));
        out.push_back(Line{alpha, beta});
    }
    return out;
}

RepairPlan make_repair_plan(const FieldContext& F, Point pt,
                            const CodeParams& p) {
    RepairPlan plan;
    plan.target = pt;
    const std::vector<Line> lines = lines_through(F, pt, p);
    plan.groups.reserve(static_cast<std::size_t>(p.t));
    for (int g = 0; g < p.t; ++g) {
        RepairGroup grp;
        grp.lines.assign(lines.begin() + static_cast<std::ptrdiff_t>(g) * p.r,
                         lines.begin() +
                             static_cast<std::ptrdiff_t>(g + 1) * p.r);
        plan.groups.push_back(std::move(grp));
    }
    return plan;
}

FieldElem line_deriv_at(const FieldContext& F, const Symbol& sym,
                        FieldElem alpha, int i, int r) {
    if (i < 0 || i >= r) {
        throw std::invalid_argument("line derivative order out of range");
    }
    FieldElem acc{0};
    FieldElem apow = F.one();
    for (int i2 = 0; i2 <= i; ++i2) {
        const int pos = deriv_index(MultiIndex{i - i2, i2}, r);
        acc = F.add(acc, F.mul(sym.derivs[static_cast<std::size_t>(pos)], apow));
        apow = F.mul(apow, alpha);
    }
    return acc;
}

UniPoly hermite_interpolate(const FieldContext& F,
                            const std::vector<FieldElem>& nodes,
                            const std::vector<std::vector<FieldElem>>& derivs) {
    if (nodes.size() != derivs.size() || nodes.empty()) {
        throw std::invalid_argument("nodes/derivative values mismatch");
    }
    const std::size_t r = derivs[0].size();
    if (r == 0) throw std::invalid_argument("empty derivative set");
    for (const auto& d : derivs) {
        if (d.size() != r) {
            throw std::invalid_argument("ragged derivative values");
        }
    }
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        for (std::size_t j = i + 1; j < nodes.size(); ++j) {
            if (nodes[i] == nodes[j]) {
                throw SingularSystem("repeated interpolation node");
            }
        }
    }

    // Newton scheme with multiplicity-r nodes. basis holds
    // prod_{j<m} (X + x_j)^r * (X + x_m)^i at step (m, i); adding
    // c * basis leaves every earlier constraint untouched, and its i-th
    // derivative at x_m is c * prod_{j<m} (x_m + x_j)^r.
    UniPoly result = UniPoly::zero();
    UniPoly basis = UniPoly::monomial(0, F.one());
    for (std::size_t m = 0; m < nodes.size(); ++m) {
        FieldElem denom = F.one();
        for (std::size_t j = 0; j < m; ++j) {
            const FieldElem diff = F.add(nodes[m], nodes[j]);
            for (std::size_t k = 0; k < r; ++k) denom = F.mul(denom, diff);
        }
        const FieldElem denom_inv = F.inv(denom);
        const UniPoly factor(
            std::vector<FieldElem>{nodes[m], F.one()});  // X + x_m
        for (std::size_t i = 0; i < r; ++i) {
            const FieldElem have =
                eval_uni(F, hasse_uni(result, static_cast<int>(i)), nodes[m]);
            const FieldElem need = F.add(derivs[m][i], have);
            const FieldElem c = F.mul(need, denom_inv);
            result = uni_add(result, uni_scale(F, basis, c));
            basis = uni_mul(F, basis, factor);
        }
    }
    return result;
}

Symbol recover_symbol(const FieldContext& F, const Codeword& cw,
                      const PointSet& erased, Point target,
                      const RepairGroup& group, const CodeParams& p) {
    if (p.s < p.r) {
        throw std::invalid_argument(
            "repair requires d <= rq - r (s >= r); got " + p.describe());
    }
    const std::size_t nlines = group.lines.size();
    if (nlines != static_cast<std::size_t>(p.r)) {
        throw std::invalid_argument("repair group must hold r lines");
    }

    // Interpolation nodes: every x-coordinate except the target's.
    std::vector<FieldElem> nodes;
    nodes.reserve(static_cast<std::size_t>(p.q) - 1);
    for (std::uint32_t xv = 0; xv < F.order(); ++xv) {
        if (xv == target.x.value) continue;
        nodes.push_back(FieldElem{static_cast<std::uint16_t>(xv)});
    }

    // Per line: gather restricted derivatives from the on-line symbols,
    // interpolate the restriction (degree <= rq - r - 1), and take its
    // derivatives at the target's x.
    std::vector<std::vector<FieldElem>> derivs_at_target(nlines);
    for (std::size_t k = 0; k < nlines; ++k) {
        const Line line = group.lines[k];
        std::vector<std::vector<FieldElem>> values(nodes.size());
        for (std::size_t n = 0; n < nodes.size(); ++n) {
            const Point pt{nodes[n],
                           F.add(F.mul(line.alpha, nodes[n]), line.beta)};
            if (erased.contains(pt)) {
                throw MissingData("repair group needs erased symbol (" +
                                  std::to_string(pt.x.value) + ", " +
                                  std::to_string(pt.y.value) + ")");
            }
            const Symbol& sym = cw.symbols[point_index(pt.x, pt.y, p)];
            values[n].reserve(static_cast<std::size_t>(p.r));
            for (int i = 0; i < p.r; ++i) {
                values[n].push_back(line_deriv_at(F, sym, line.alpha, i, p.r));
            }
        }
        const UniPoly restriction = hermite_interpolate(F, nodes, values);
        derivs_at_target[k].reserve(static_cast<std::size_t>(p.r));
        for (int i = 0; i < p.r; ++i) {
            derivs_at_target[k].push_back(
                eval_uni(F, hasse_uni(restriction, i), target.x));
        }
    }

    // Weight-i derivatives at the target solve the Vandermonde system over
    // the first i+1 slopes of the group.
    Symbol out;
    out.derivs.assign(static_cast<std::size_t>(p.symbol_width), FieldElem{0});
    for (int i = 0; i < p.r; ++i) {
        const std::size_t n = static_cast<std::size_t>(i) + 1;
        Matrix vand(n, n);
        std::vector<FieldElem> rhs(n);
        for (std::size_t k = 0; k < n; ++k) {
            FieldElem apow = F.one();
            for (std::size_t j = 0; j < n; ++j) {
                vand.at(k, j) = apow;
                apow = F.mul(apow, group.lines[k].alpha);
            }
            rhs[k] = derivs_at_target[k][static_cast<std::size_t>(i)];
        }
        auto sol = solve(F, vand, rhs);
        if (!sol) throw SingularSystem("directional derivative system");
        for (std::size_t j = 0; j < n; ++j) {
            const int pos =
                deriv_index(MultiIndex{i - static_cast<int>(j),
                                       static_cast<int>(j)},
                            p.r);
            out.derivs[static_cast<std::size_t>(pos)] = (*sol)[j];
        }
    }
    return out;
}

Codeword repair_erasures(const FieldContext& F, Codeword cw,
                         const PointSet& erased, const CodeParams& p) {
    if (cw.symbols.size() != static_cast<std::size_t>(p.length)) {
        throw std::invalid_argument("codeword length mismatch");
    }
    if (static_cast<int>(erased.size()) > p.t - 1) {
        throw TooManyErasures("got " + std::to_string(erased.size()) +
                              " erasures; the disjoint-group guarantee covers "
                              "at most t-1 = " +
                              std::to_string(p.t - 1));
    }
    PointSet remaining = erased;
    while (!remaining.empty()) {
        const Point pt = *remaining.begin();
        const RepairPlan plan = make_repair_plan(F, pt, p);
        const RepairGroup* clean = nullptr;
        for (const auto& grp : plan.groups) {
            bool blocked = false;
            for (const auto& line : grp.lines) {
                for (const auto& other : remaining) {
                    if (other == pt) continue;
                    if (other.y == F.add(F.mul(line.alpha, other.x),
                                         line.beta)) {
                        blocked = true;
                        break;
                    }
                }
                if (blocked) break;
            }
            if (!blocked) {
                clean = &grp;
                break;
            }
        }
        if (clean == nullptr) {
            // Unreachable when |erased| <= t-1: each other erasure blocks at
            // most one of the t groups.
            throw NoCleanGroup("no repair group avoids the other erasures");
        }
        PointSet others = remaining;
        others.erase(pt);
        cw.symbols[point_index(pt.x, pt.y, p)] =
            recover_symbol(F, cw, others, pt, *clean, p);
        remaining.erase(pt);
    }
    return cw;
}

}  // namespace lmc
