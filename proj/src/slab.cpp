#include "kfano/slab.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace kfano {

namespace {

Rational dot(const std::array<Rational, 3>& a, const Vertex3& v) {
    return a[0] * v[0] + a[1] * v[1] + a[2] * v[2];
}

Rational det3(const std::array<Vertex3, 3>& rows) {
    return rows[0][0] * (rows[1][1] * rows[2][2] - rows[1][2] * rows[2][1]) -
           rows[0][1] * (rows[1][0] * rows[2][2] - rows[1][2] * rows[2][0]) +
           rows[0][2] * (rows[1][0] * rows[2][1] - rows[1][1] * rows[2][0]);
}

// Solves the 3x3 system rows[i] . u = rhs[i] by Cramer; nullopt when singular.
std::optional<Vertex3> solve3(const std::array<Vertex3, 3>& rows,
                              const std::array<Rational, 3>& rhs) {
    Rational d = det3(rows);
    if (d.is_zero())
        return std::nullopt;
    Vertex3 u;
    for (int col = 0; col < 3; ++col) {
        std::array<Vertex3, 3> replaced = rows;
        for (int i = 0; i < 3; ++i)
            replaced[i][col] = rhs[i];
        u[col] = det3(replaced) / d;
    }
    return u;
}

bool feasible(const Vertex3& v, std::span<const Halfspace> hs) {
    for (const auto& h : hs)
        if (dot(h.normal, v) < h.rhs)
            return false;
    return true;
}

// Unoriented canonical plane key: (n, b) scaled so that the first nonzero
// normal entry is 1. Coincident planes from different half-spaces collapse
// to one facet.
using PlaneKey = std::array<Rational, 4>;

std::optional<PlaneKey> plane_key(const Halfspace& h) {
    for (int i = 0; i < 3; ++i) {
        if (!h.normal[i].is_zero()) {
            Rational s = h.normal[i].inverse();
            return PlaneKey{h.normal[0] * s, h.normal[1] * s, h.normal[2] * s, h.rhs * s};
        }
    }
    return std::nullopt;  // degenerate constraint 0 >= b
}

// Tetrahedra (o, a, b, c) forming the polytope: one fan triangle per facet
// polygon joined to the vertex centroid o.
std::vector<std::array<Vertex3, 4>> triangulate(std::span<const Halfspace> hs) {
    std::vector<Vertex3> verts = enumerate_vertices(hs);
    std::vector<std::array<Vertex3, 4>> tets;
    if (verts.size() < 4)
        return tets;

    Vertex3 centroid{0, 0, 0};
    for (const auto& v : verts)
        for (int i = 0; i < 3; ++i)
            centroid[i] += v[i];
    Rational inv_count = Rational(1, static_cast<long long>(verts.size()));
    for (int i = 0; i < 3; ++i)
        centroid[i] *= inv_count;

    std::map<PlaneKey, const Halfspace*> planes;
    for (const auto& h : hs)
        if (auto key = plane_key(h))
            planes.emplace(*key, &h);

    for (const auto& [key, h] : planes) {
        (void)key;
        std::vector<Vertex3> facet;
        for (const auto& v : verts)
            if (dot(h->normal, v) == h->rhs)
                facet.push_back(v);
        if (facet.size() < 3)
            continue;

        // Project out the largest normal component, then order the polygon
        // vertices around their 2D centroid with exact predicates.
        int drop = 0;
        for (int i = 1; i < 3; ++i)
            if (h->normal[i].abs() > h->normal[drop].abs())
                drop = i;
        int ax = (drop == 0) ? 1 : 0;
        int ay = (drop == 2) ? 1 : 2;

        std::array<Rational, 2> fc{0, 0};
        for (const auto& v : facet) {
            fc[0] += v[ax];
            fc[1] += v[ay];
        }
        Rational inv_f = Rational(1, static_cast<long long>(facet.size()));
        fc[0] *= inv_f;
        fc[1] *= inv_f;

        auto upper = [&](const Vertex3& v) {
            Rational dy = v[ay] - fc[1];
            if (!dy.is_zero())
                return dy.sign() > 0;
            return (v[ax] - fc[0]).sign() > 0;
        };
        std::sort(facet.begin(), facet.end(), [&](const Vertex3& a, const Vertex3& b) {
            bool ua = upper(a), ub = upper(b);
            if (ua != ub)
                return ua;
            Rational cross = (a[ax] - fc[0]) * (b[ay] - fc[1]) - (a[ay] - fc[1]) * (b[ax] - fc[0]);
            return cross.sign() > 0;
        });

        for (size_t i = 1; i + 1 < facet.size(); ++i)
            tets.push_back({centroid, facet[0], facet[i], facet[i + 1]});
    }
    return tets;
}

Rational tet_volume(const std::array<Vertex3, 4>& t) {
    std::array<Vertex3, 3> edges;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            edges[i][j] = t[i + 1][j] - t[0][j];
    return det3(edges).abs() / Rational(6);
}

}  // namespace

SlabPolytope::SlabPolytope(Rational d_in, Rational m_in, std::array<Rational, 3> ell_in)
    : d(std::move(d_in)), m(std::move(m_in)), ell(std::move(ell_in)) {
    if (m.sign() < 0 || m > d)
        throw std::invalid_argument("SlabPolytope: need 0 <= m <= d");
}

std::vector<Halfspace> slab_halfspaces(const SlabPolytope& p,
                                       const std::optional<Rational>& slice_t) {
    std::vector<Halfspace> hs = {
        {{1, 0, 0}, 0},
        {{0, 1, 0}, 0},
        {{0, 0, 1}, 0},
        {{1, 1, 1}, p.m},
        {{-1, -1, -1}, -p.d},
    };
    if (slice_t)
        hs.push_back({p.ell, *slice_t});
    return hs;
}

std::vector<Vertex3> enumerate_vertices(std::span<const Halfspace> hs) {
    std::set<Vertex3> found;
    size_t n = hs.size();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            for (size_t k = j + 1; k < n; ++k) {
                std::array<Vertex3, 3> rows{hs[i].normal, hs[j].normal, hs[k].normal};
                std::array<Rational, 3> rhs{hs[i].rhs, hs[j].rhs, hs[k].rhs};
                auto u = solve3(rows, rhs);
                if (u && feasible(*u, hs))
                    found.insert(*u);
            }
    return {found.begin(), found.end()};
}

Rational body_volume(std::span<const Halfspace> hs) {
    Rational vol = 0;
    for (const auto& t : triangulate(hs))
        vol += tet_volume(t);
    return vol;
}

Rational body_integral_linear(std::span<const Halfspace> hs, const std::array<Rational, 3>& ell) {
    Rational total = 0;
    const Rational quarter(1, 4);
    for (const auto& t : triangulate(hs)) {
        Rational mean = (dot(ell, t[0]) + dot(ell, t[1]) + dot(ell, t[2]) + dot(ell, t[3])) * quarter;
        total += tet_volume(t) * mean;
    }
    return total;
}

Rational slice_volume(const SlabPolytope& p, const Rational& t) {
    auto hs = slab_halfspaces(p, t);
    return body_volume(hs);
}

Rational slab_volume(const SlabPolytope& p) {
    auto hs = slab_halfspaces(p, std::nullopt);
    return body_volume(hs);
}

Rational integral_linear_over_slab(const SlabPolytope& p) {
    auto hs = slab_halfspaces(p, std::nullopt);
    Rational direct = body_integral_linear(hs, p.ell);
    bool nonneg = true, all_zero = true;
    for (const auto& c : p.ell) {
        if (c.sign() < 0)
            nonneg = false;
        if (!c.is_zero())
            all_zero = false;
    }
    if (nonneg && !all_zero) {
        // Layer-cake identity: the integral of ell equals the integral of the
        // superlevel-set volumes. Computed by an independent route and kept as
        // a permanent consistency assertion.
        PiecewisePoly profile = slice_profile(p);
        Rational layer = profile.integrate_all();
        if (!(layer == direct))
            throw std::logic_error("integral_linear_over_slab: layer-cake identity violated");
    }
    return direct;
}

PiecewisePoly slice_profile(const SlabPolytope& p) {
    if (p.ell[0].is_zero() && p.ell[1].is_zero() && p.ell[2].is_zero())
        throw std::invalid_argument("slice_profile: zero functional");
    auto hs = slab_halfspaces(p, std::nullopt);
    std::set<Rational> values{Rational(0)};
    for (const auto& v : enumerate_vertices(hs))
        values.insert(dot(p.ell, v));
    std::vector<Rational> breaks(values.begin(), values.end());
    if (breaks.size() < 2)
        throw std::domain_error("slice_profile: degenerate slab");

    std::vector<UniPoly> pieces;
    const Rational five(5);
    for (size_t i = 0; i + 1 < breaks.size(); ++i) {
        const Rational& a = breaks[i];
        Rational step = (breaks[i + 1] - a) / five;
        std::vector<std::pair<Rational, Rational>> samples;
        for (int k = 1; k <= 4; ++k) {
            Rational tk = a + step * Rational(k);
            samples.emplace_back(tk, slice_volume(p, tk));
        }
        UniPoly piece = UniPoly::interpolate(samples);
        // The slice volume is cubic between consecutive vertex heights; a
        // mismatch at a fifth sample would mean the breakpoints are wrong.
        Rational t5 = a + step * Rational(9, 2);
        if (!(piece.eval(t5) == slice_volume(p, t5)))
            throw std::logic_error("slice_profile: piece is not a cubic polynomial");
        pieces.push_back(std::move(piece));
    }
    PiecewisePoly profile(std::move(breaks), std::move(pieces));
    if (!profile.is_continuous())
        throw std::logic_error("slice_profile: discontinuous volume profile");
    return profile;
}

std::pair<Rational, Rational> scaling_check(const Rational& d, const Rational& m,
                                            const Rational& t,
                                            const std::array<Rational, 3>& ell) {
    if (d.sign() <= 0 || m.sign() <= 0)
        throw std::invalid_argument("scaling_check: need d > 0 and m > 0");
    SlabPolytope p(d, m, ell);
    SlabPolytope q(1, 0, ell);
    Rational direct = slice_volume(p, t);
    Rational scaled = d.pow(3) * slice_volume(q, t / d) - m.pow(3) * slice_volume(q, t / m);
    return {direct, scaled};
}

}  // namespace kfano
