#pragma once

#include "kfano/polynomial.hpp"
#include "kfano/rational.hpp"

#include <array>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace kfano {

/// Point of R^3 with exact rational coordinates.
using Vertex3 = std::array<Rational, 3>;

/// Half-space {u : normal . u >= rhs}.
struct Halfspace {
    std::array<Rational, 3> normal;
    Rational rhs;
};

/// Slab {u in R^3_{>=0} : m <= u_0+u_1+u_2 <= d} carrying the linear
/// functional ell(u) = sum ell_i * u_i (the valuation weights).
struct SlabPolytope {
    Rational d;  // outer simplex scale
    Rational m;  // inner simplex scale
    std::array<Rational, 3> ell;

    SlabPolytope(Rational d_in, Rational m_in, std::array<Rational, 3> ell_in);
};

/// Defining half-spaces of the slab, plus the slice {ell >= t} when given.
std::vector<Halfspace> slab_halfspaces(const SlabPolytope& p,
                                       const std::optional<Rational>& slice_t);

/// All feasible intersection points of plane triples, deduplicated. These are
/// exactly the vertices of the (possibly empty) intersection polytope.
std::vector<Vertex3> enumerate_vertices(std::span<const Halfspace> hs);

/// Exact volume of the intersection polytope: vertex enumeration, facets
/// grouped per defining plane, fan triangulation against the vertex centroid.
Rational body_volume(std::span<const Halfspace> hs);

/// Exact integral of a linear functional over the intersection polytope,
/// using the same tetrahedral decomposition and the vertex-mean simplex rule.
Rational body_integral_linear(std::span<const Halfspace> hs, const std::array<Rational, 3>& ell);

/// Euclidean volume of P intersected with {ell >= t}; zero when empty.
Rational slice_volume(const SlabPolytope& p, const Rational& t);

/// Volume of the full slab, (d^3 - m^3)/6, computed by the same engine.
Rational slab_volume(const SlabPolytope& p);

/// Integral of ell over the slab. Equals the layer-cake integral
/// of slice_volume over [0, inf).
Rational integral_linear_over_slab(const SlabPolytope& p);

/// t -> slice_volume(p, t) as an exact piecewise polynomial (degree <= 3) on
/// [0, max ell]. Breakpoints are the distinct values of ell at the slab
/// vertices; each piece is recovered by exact interpolation and re-verified
/// at a fifth sample. Requires a nonzero functional and a full slab domain.
PiecewisePoly slice_profile(const SlabPolytope& p);

/// Pair (slice_volume(P_{d,m}, t), d^3 * slice_volume(Q, t/d) - m^3 * slice_volume(Q, t/m))
/// with Q the unit slab of the same functional; the two components agree.
std::pair<Rational, Rational> scaling_check(const Rational& d, const Rational& m,
                                            const Rational& t,
                                            const std::array<Rational, 3>& ell);

}  // namespace kfano
