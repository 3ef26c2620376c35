#include "weyltile/tiles.hpp"

#include <algorithm>

namespace weyltile {

std::vector<Vec> Tile::vertex_set() const {
    std::vector<Vec> vs = vertices;
    std::sort(vs.begin(), vs.end(), [](const Vec& a, const Vec& b) { return vec_cmp(a, b) < 0; });
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return vs;
}

std::vector<Vec> normals(const RootSystem& rs, const AffineWeylElement& w) {
    Mat winv = mat_inverse(w.matrix);
    Mat m = mat_sub(mat_identity(rs.rank), winv);
    if (det(m) == 0) throw SingularError("normals are defined for regular elements only");
    Mat minv = mat_inverse(m);
    std::vector<Vec> ns;
    ns.reserve(rs.rank + 1);
    for (int i = 0; i <= rs.rank; ++i) ns.push_back(mat_vec(minv, rs.wall_normal(i)));
    return ns;
}

Tile tile_of(const RootSystem& rs, const AffineWeylElement& w) {
    Tile t;
    t.element = w;
    Mat diff = mat_sub(mat_identity(rs.rank), w.matrix);
    t.kernel_basis = kernel(diff);
    t.dim = rs.rank - static_cast<int>(t.kernel_basis.size());

    Vec lam = rs.coroot_to_root(w.translation);
    for (const auto& v : rs.alcove_vertices)
        t.vertices.push_back(vec_sub(mat_vec(diff, v), lam));  // (id - w)(v) = (id - w~)v - lambda

    if (t.regular()) {
        t.normals = normals(rs, w);
        for (int i = 0; i <= rs.rank; ++i)
            t.offsets.push_back(rs.inner(t.normals[i], lam) + rs.wall_offset(i));
    }
    return t;
}

namespace {

// Feasibility of "solutions of (id - w~)x = xi + lambda meet the alcove",
// strict or closed walls.
bool preimage_meets_alcove(const RootSystem& rs, const AffineWeylElement& w, const Vec& xi,
                           bool closed) {
    Mat diff = mat_sub(mat_identity(rs.rank), w.matrix);
    Vec lam = rs.coroot_to_root(w.translation);
    StrictSystem sys;
    sys.dim = rs.rank;
    for (int i = 0; i <= rs.rank; ++i) {
        auto row = std::make_pair(rs.wall_row(i), rs.wall_offset(i));
        if (closed)
            sys.weak.push_back(std::move(row));
        else
            sys.strict.push_back(std::move(row));
    }
    for (int i = 0; i < rs.rank; ++i) sys.equalities.push_back({diff[i], -(xi[i] + lam[i])});
    return strictly_feasible(sys).has_value();
}

}  // namespace

bool contains(const RootSystem& rs, const Tile& t, const Vec& xi) {
    if (t.regular()) {
        for (int i = 0; i <= rs.rank; ++i)
            if (sign(rs.inner(t.normals[i], xi) + t.offsets[i]) <= 0) return false;
        return true;
    }
    return preimage_meets_alcove(rs, t.element, xi, /*closed=*/false);
}

bool contains_parametric(const RootSystem& rs, const AffineWeylElement& w, const Vec& xi) {
    return preimage_meets_alcove(rs, w, xi, /*closed=*/false);
}

bool closure_contains(const RootSystem& rs, const Tile& t, const Vec& xi) {
    if (t.regular()) {
        for (int i = 0; i <= rs.rank; ++i)
            if (sign(rs.inner(t.normals[i], xi) + t.offsets[i]) < 0) return false;
        return true;
    }
    return preimage_meets_alcove(rs, t.element, xi, /*closed=*/true);
}

Rat volume(const RootSystem& rs, const Tile& t) {
    if (!t.regular()) throw SingularError("volume multiple is defined for regular tiles only");
    return det(mat_sub(mat_identity(rs.rank), t.element.matrix));
}

FundamentalRegion fundamental_region(const RootSystem& rs, const std::vector<WeylElement>& group) {
    FundamentalRegion fr;
    for (const auto& w : group) {
        AffineWeylElement e;
        e.label = rs.label;
        e.translation.assign(rs.rank, Int(0));
        e.matrix = w.matrix;
        e.word = w.word;
        Tile t = tile_of(rs, e);
        if (t.regular()) fr.regular_indices.push_back(static_cast<int>(fr.tiles.size()));
        fr.tiles.push_back(std::move(t));
    }
    return fr;
}

Cone waldspurger_cone(const RootSystem& rs, const WeylElement& w) {
    Cone c;
    c.element.label = rs.label;
    c.element.translation.assign(rs.rank, Int(0));
    c.element.matrix = w.matrix;
    c.element.word = w.word;
    return c;
}

bool cone_contains(const RootSystem& rs, const Cone& c, const Vec& xi) {
    // xi in (id - w)(C): the solution set of (id - w)x = xi meets the open
    // chamber <alpha_i, x> > 0, i = 1..l.
    Mat diff = mat_sub(mat_identity(rs.rank), c.element.matrix);
    StrictSystem sys;
    sys.dim = rs.rank;
    for (int i = 1; i <= rs.rank; ++i) sys.strict.push_back({rs.wall_row(i), Rat(0)});
    for (int i = 0; i < rs.rank; ++i) sys.equalities.push_back({diff[i], -xi[i]});
    return strictly_feasible(sys).has_value();
}

}  // namespace weyltile
