#pragma once

#include <set>
#include <vector>

#include "lmc/codec.hpp"
#include "lmc/gf.hpp"
#include "lmc/params.hpp"
#include "lmc/poly.hpp"

namespace lmc {

struct Point {
    FieldElem x;
    FieldElem y;

    friend bool operator==(Point, Point) = default;
    friend bool operator<(Point a, Point b) {
        if (a.x.value != b.x.value) return a.x.value < b.x.value;
        return a.y.value < b.y.value;
    }
};

using PointSet = std::set<Point>;

/// r lines through one target point with pairwise-distinct slopes, so the
/// directional-derivative systems are invertible Vandermonde systems.
struct RepairGroup {
    std::vector<Line> lines;
};

/// All q lines through the target, partitioned into q/r groups of r.
struct RepairPlan {
    Point target;
    std::vector<RepairGroup> groups;
};

/// The q lines (alpha, delta - alpha*gamma) through (gamma, delta), one per
/// slope, in ascending slope order.
std::vector<Line> lines_through(const FieldContext& F, Point pt,
                                const CodeParams& p);

/// Deterministic plan: lines sorted by slope value, chunked into
/// consecutive groups of r.
RepairPlan make_repair_plan(const FieldContext& F, Point pt,
                            const CodeParams& p);

/// i-th derivative of the line restriction at a point on the line, from
/// that point's symbol: sum over i1+i2 = i of sym[(i1,i2)] * alpha^i2
/// (direction vector (1, alpha)). Requires i < r.
FieldElem line_deriv_at(const FieldContext& F, const Symbol& sym,
                        FieldElem alpha, int i, int r);

/// Interpolates the unique polynomial of degree <= r*nodes - 1 matching the
/// given Hasse derivative values: derivs[k][i] is the i-th derivative at
/// nodes[k], with the same count r of derivatives at every node.
/// Throws SingularSystem on repeated nodes.
UniPoly hermite_interpolate(const FieldContext& F,
                            const std::vector<FieldElem>& nodes,
                            const std::vector<std::vector<FieldElem>>& derivs);

/// Recovers the derivative vector at `target` from one repair group: the
/// q-1 symbols on each of the group's r lines are combined into line
/// restrictions by Hermite interpolation, and the target's derivatives are
/// read off through the Vandermonde systems over the group's slopes.
/// Throws MissingData when a needed symbol is in `erased`.
Symbol recover_symbol(const FieldContext& F, const Codeword& cw,
                      const PointSet& erased, Point target,
                      const RepairGroup& group, const CodeParams& p);

/// Repairs every erased point, requiring |erased| <= t-1. Each point is
/// repaired from the first group in plan order that contains no other
/// still-erased point; repaired symbols become available to later points.
Codeword repair_erasures(const FieldContext& F, Codeword cw,
                         const PointSet& erased, const CodeParams& p);

}  // namespace lmc
