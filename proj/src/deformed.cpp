#include "weyltile/deformed.hpp"

#include <algorithm>
#include <sstream>

namespace weyltile {

Rat frobenius_norm_sq(const RootSystem& rs, const Mat& S) {
    // tr(gram^{-1} S^T gram S); basis-independent, reduces to sum of squares
    // in any orthonormal basis.
    Mat adj = mat_mul(rs.gram_inv, mat_mul(mat_transpose(S), rs.gram));
    Mat prod = mat_mul(adj, S);
    Rat tr(0);
    for (int i = 0; i < rs.rank; ++i) tr += prod[i][i];
    return tr;
}

Deformation make_deformation(const TilingContext& ctx, const Mat& S,
                             AdmissibilityCertificate cert) {
    const RootSystem& rs = ctx.rs;
    if (S.size() != static_cast<std::size_t>(rs.rank))
        throw DimensionError("deformation matrix has wrong size");
    for (const auto& row : S)
        if (row.size() != static_cast<std::size_t>(rs.rank))
            throw DimensionError("deformation matrix has wrong size");

    for (std::size_t gi = 0; gi < ctx.group.size(); ++gi)
        if (det(mat_sub(S, ctx.group[gi].matrix)) == 0)
            throw InadmissibleError("det(S - w) = 0 for a Weyl element; S is not admissible");

    if (cert == AdmissibilityCertificate::NormBound) {
        Rat f = frobenius_norm_sq(rs, S);
        if (!(f < 1))
            throw InadmissibleError(
                "Frobenius norm bound ||S||_F^2 < 1 fails (got " + rat_to_string(f) +
                "); pass the path-asserted certificate to claim the component-of-0 condition");
    }
    return Deformation{S, cert};
}

std::vector<Vec> deformed_normals(const RootSystem& rs, const Mat& S, const Mat& w_linear) {
    Mat m = mat_sub(S, mat_inverse(w_linear));
    if (det(m) == 0) throw SingularError("S - w^{-1} is singular");
    Mat minv = mat_inverse(m);
    std::vector<Vec> ns;
    for (int i = 0; i <= rs.rank; ++i) ns.push_back(mat_vec(minv, rs.wall_normal(i)));
    return ns;
}

DeformedTile deformed_tile(const RootSystem& rs, const Mat& S, const AffineWeylElement& w) {
    DeformedTile t;
    t.element = w;
    Mat diff = mat_sub(S, w.matrix);
    Vec lam = rs.coroot_to_root(w.translation);
    for (const auto& v : rs.alcove_vertices)
        t.vertices.push_back(vec_sub(mat_vec(diff, v), lam));  // (S - w)(v) = (S - w~)v - lambda
    return t;
}

namespace {

bool deformed_membership(const RootSystem& rs, const Mat& S, const AffineWeylElement& w,
                         const Vec& xi, bool closed) {
    Mat diff = mat_sub(S, w.matrix);
    Vec rhs = vec_add(xi, rs.coroot_to_root(w.translation));
    if (det(diff) != 0) {
        Vec x = mat_vec(mat_inverse(diff), rhs);
        return closed ? rs.in_closed_alcove(x) : rs.in_open_alcove(x);
    }
    StrictSystem sys;
    sys.dim = rs.rank;
    for (int i = 0; i <= rs.rank; ++i) {
        auto row = std::make_pair(rs.wall_row(i), rs.wall_offset(i));
        if (closed)
            sys.weak.push_back(std::move(row));
        else
            sys.strict.push_back(std::move(row));
    }
    for (int i = 0; i < rs.rank; ++i) sys.equalities.push_back({diff[i], -rhs[i]});
    return strictly_feasible(sys).has_value();
}

}  // namespace

bool deformed_contains(const RootSystem& rs, const Mat& S, const AffineWeylElement& w,
                       const Vec& xi) {
    return deformed_membership(rs, S, w, xi, /*closed=*/false);
}

bool deformed_closure_contains(const RootSystem& rs, const Mat& S, const AffineWeylElement& w,
                               const Vec& xi) {
    return deformed_membership(rs, S, w, xi, /*closed=*/true);
}

DeformedLocation deformed_locate(const TilingContext& ctx, const Deformation& d, const Vec& xi) {
    const RootSystem& rs = ctx.rs;
    if (static_cast<int>(xi.size()) != rs.rank) throw DimensionError("point has wrong dimension");

    // Same lattice reduction as the undeformed locate: (S - t_mu w)(A) =
    // (S - w)(A) - mu.
    Vec xi0;
    VecI shift;
    lattice_reduce(rs, xi, xi0, shift);

    DeformedLocation loc;
    VecI lo(rs.rank), hi(rs.rank), m;
    for (std::size_t gi = 0; gi < ctx.group.size(); ++gi) {
        Mat diff = mat_sub(d.S, ctx.group[gi].matrix);
        Mat dinv = mat_inverse(diff);  // admissible: always nonsingular

        // bbox of (S - w~)(cl A) shifted by -xi0, in coroot coordinates
        std::vector<Vec> imgs;
        for (const auto& v : rs.alcove_vertices) imgs.push_back(mat_vec(diff, v));
        bool empty = false;
        for (int i = 0; i < rs.rank && !empty; ++i) {
            Rat a = imgs[0][i], b = imgs[0][i];
            for (const auto& img : imgs) {
                if (img[i] < a) a = img[i];
                if (img[i] > b) b = img[i];
            }
            lo[i] = rat_ceil((a - xi0[i]) / Rat(rs.coroot_scale[i]));
            hi[i] = rat_floor((b - xi0[i]) / Rat(rs.coroot_scale[i]));
            if (lo[i] > hi[i]) empty = true;
        }
        if (empty) continue;

        LatticeBox box(lo, hi);
        while (box.next(m)) {
            Vec x = mat_vec(dinv, vec_add(xi0, rs.coroot_to_root(m)));
            if (!rs.in_closed_alcove(x)) continue;
            VecI full = m;
            for (int i = 0; i < rs.rank; ++i) full[i] -= shift[i];
            AffineWeylElement e = ctx.element(static_cast<int>(gi), full);
            if (rs.in_open_alcove(x)) {
                if (loc.open_tile)
                    throw InvariantViolationError(
                        "two open deformed tiles contain one point; falsifies disjointness");
                loc.open_tile = e;
            }
            loc.closed_tiles.push_back(std::move(e));
        }
    }
    if (loc.closed_tiles.empty())
        throw InvariantViolationError("no closed deformed tile contains the point; falsifies covering");
    std::sort(loc.closed_tiles.begin(), loc.closed_tiles.end(),
              [](const AffineWeylElement& a, const AffineWeylElement& b) {
                  return element_cmp(a, b) < 0;
              });
    return loc;
}

AbsDetReport abs_det_identity(const TilingContext& ctx, const Mat& S) {
    AbsDetReport rep;
    rep.group_order = Int(ctx.group.size());
    rep.sum = 0;
    rep.all_positive = true;
    for (const auto& w : ctx.group) {
        Rat d1 = det(mat_sub(S, w.matrix));
        Rat d2 = det(mat_sub(mat_identity(ctx.rs.rank), mat_mul(S, mat_inverse(w.matrix))));
        rep.sum += d1 < 0 ? -d1 : d1;
        if (!(d2 > 0)) rep.all_positive = false;
        rep.det_s_minus_w.push_back(std::move(d1));
        rep.det_id_minus_swinv.push_back(std::move(d2));
    }
    rep.identity_holds = (rep.sum == Rat(rep.group_order));
    return rep;
}

Mat parse_deformation_matrix(const std::string& text, int rank) {
    Mat S;
    std::stringstream rows(text);
    std::string row;
    while (std::getline(rows, row, ';')) {
        Vec r;
        std::stringstream cells(row);
        std::string cell;
        while (std::getline(cells, cell, ',')) r.push_back(rat_from_string(cell));
        S.push_back(std::move(r));
    }
    if (S.size() != static_cast<std::size_t>(rank))
        throw ParseError("deformation matrix needs " + std::to_string(rank) + " rows");
    for (const auto& r : S)
        if (r.size() != static_cast<std::size_t>(rank))
            throw ParseError("deformation matrix rows need " + std::to_string(rank) + " entries");
    return S;
}

}  // namespace weyltile
