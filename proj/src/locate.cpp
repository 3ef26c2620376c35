#include "weyltile/locate.hpp"

#include <algorithm>

namespace weyltile {

TilingContext TilingContext::build(const RootSystem& rs, const EnumerateOptions& opts) {
    TilingContext ctx;
    ctx.rs = rs;
    ctx.group = enumerate_weyl(rs, opts);
    const int l = rs.rank;

    for (std::size_t gi = 0; gi < ctx.group.size(); ++gi) {
        LinearCache c;
        c.diff = mat_sub(mat_identity(l), ctx.group[gi].matrix);
        c.vol = det(c.diff);
        c.regular = (c.vol != 0);
        for (const auto& v : rs.alcove_vertices) c.vertex_images.push_back(mat_vec(c.diff, v));
        c.box_lo = c.vertex_images[0];
        c.box_hi = c.vertex_images[0];
        for (const auto& img : c.vertex_images)
            for (int i = 0; i < l; ++i) {
                if (img[i] < c.box_lo[i]) c.box_lo[i] = img[i];
                if (img[i] > c.box_hi[i]) c.box_hi[i] = img[i];
            }
        if (c.regular) {
            c.diff_inv = mat_inverse(c.diff);
            AffineWeylElement e;
            e.label = rs.label;
            e.translation.assign(l, Int(0));
            e.matrix = ctx.group[gi].matrix;
            c.norms = normals(rs, e);
            ctx.regular.push_back(static_cast<int>(gi));
        } else {
            c.coker = kernel(mat_transpose(c.diff));
        }
        ctx.cache.push_back(std::move(c));
    }

    if (l <= 4) {
        // Prebuild every proper parabolic; locate hits them on strata points.
        std::vector<int> I;
        const int full = (1 << (l + 1)) - 1;
        for (int mask = 0; mask < full; ++mask) {
            I.clear();
            for (int i = 0; i <= l; ++i)
                if (mask & (1 << i)) I.push_back(i);
            ctx.parabolics.emplace(I, parabolic(rs, I));
        }
    }
    return ctx;
}

AffineWeylElement TilingContext::element(int group_index, const VecI& translation) const {
    AffineWeylElement e;
    e.label = rs.label;
    e.translation = translation;
    e.matrix = group[group_index].matrix;
    e.word = group[group_index].word;
    return e;
}

ParabolicSubgroup parabolic_for(const TilingContext& ctx, const std::vector<int>& I) {
    std::vector<int> key = I;
    std::sort(key.begin(), key.end());
    key.erase(std::unique(key.begin(), key.end()), key.end());
    auto it = ctx.parabolics.find(key);
    if (it != ctx.parabolics.end()) return it->second;
    return parabolic(ctx.rs, key);
}

bool candidate_box(const TilingContext& ctx, int group_index, const Vec& xi, VecI& lo, VecI& hi) {
    const RootSystem& rs = ctx.rs;
    const auto& c = ctx.cache[group_index];
    lo.resize(rs.rank);
    hi.resize(rs.rank);
    for (int i = 0; i < rs.rank; ++i) {
        // lambda root coordinate ranges over [box_lo - xi, box_hi - xi];
        // coroot coordinate m = v / coroot_scale.
        Rat a = (c.box_lo[i] - xi[i]) / Rat(rs.coroot_scale[i]);
        Rat b = (c.box_hi[i] - xi[i]) / Rat(rs.coroot_scale[i]);
        lo[i] = rat_ceil(a);
        hi[i] = rat_floor(b);
        if (lo[i] > hi[i]) return false;
    }
    return true;
}

namespace {

// Closure test against cached normals: <n_i, xi + lambda> + delta_{i,0} >= 0.
bool closure_holds(const TilingContext& ctx, int gi, const Vec& shifted, bool strict_all) {
    const RootSystem& rs = ctx.rs;
    const auto& c = ctx.cache[gi];
    for (int i = 0; i <= rs.rank; ++i) {
        int s = sign(rs.inner(c.norms[i], shifted) + rs.wall_offset(i));
        if (strict_all ? s <= 0 : s < 0) return false;
    }
    return true;
}

}  // namespace

std::vector<Candidate> candidate_window(const TilingContext& ctx, const Vec& xi) {
    std::vector<Candidate> out;
    VecI lo, hi, m;
    for (int gi : ctx.regular) {
        if (!candidate_box(ctx, gi, xi, lo, hi)) continue;
        LatticeBox box(lo, hi);
        while (box.next(m)) {
            Vec shifted = vec_add(xi, ctx.rs.coroot_to_root(m));
            if (closure_holds(ctx, gi, shifted, /*strict_all=*/false))
                out.push_back(Candidate{gi, m});
        }
    }
    return out;  // group index ascending, lambda lex within: LatticeBox order
}

AffineWeylElement waldspurger_q(const TilingContext& ctx, const AffineWeylElement& w,
                                const std::vector<int>& index_set) {
    const RootSystem& rs = ctx.rs;
    ParabolicSubgroup sub = parabolic_for(ctx, index_set);

    std::vector<const AffineWeylElement*> passing;
    for (const auto& q : sub.elements) {
        Mat m = mat_sub(mat_identity(rs.rank), mat_mul(w.matrix, q.matrix));
        StrictSystem sys;
        sys.dim = rs.rank;
        for (int i = 0; i < rs.rank; ++i) sys.equalities.push_back({m[i], Rat(0)});
        for (int i : sub.index_set) sys.strict.push_back({rs.wall_row(i), Rat(0)});
        if (strictly_feasible(sys)) passing.push_back(&q);
    }
    if (passing.size() != 1)
        throw InvariantViolationError("Waldspurger selection found " +
                                      std::to_string(passing.size()) +
                                      " elements instead of one for type " + rs.label.str());
    return *passing[0];
}

void lattice_reduce(const RootSystem& rs, const Vec& xi, Vec& remainder, VecI& lattice) {
    lattice.resize(rs.rank);
    for (int i = 0; i < rs.rank; ++i) lattice[i] = rat_round(xi[i] / Rat(rs.coroot_scale[i]));
    remainder = vec_sub(xi, rs.coroot_to_root(lattice));
}

LocateResult locate(const TilingContext& ctx, const Vec& xi) {
    const RootSystem& rs = ctx.rs;
    if (static_cast<int>(xi.size()) != rs.rank) throw DimensionError("point has wrong dimension");

    // Work with a lattice-reduced point; xi in V_(m, w) iff xi0 in V_(m - shift, w).
    Vec xi0;
    VecI shift;
    lattice_reduce(rs, xi, xi0, shift);

    std::vector<Candidate> cands = candidate_window(ctx, xi0);
    if (cands.empty())
        throw InvariantViolationError("no closed regular tile contains the point; falsifies the covering theorem");
    const Candidate& cand = cands.front();

    Vec lam = rs.coroot_to_root(cand.translation);
    Vec x = mat_vec(ctx.cache[cand.group_index].diff_inv, vec_add(xi0, lam));

    std::vector<int> tight;
    for (int i = 0; i <= rs.rank; ++i) {
        int s = sign(rs.inner(rs.wall_normal(i), x) + rs.wall_offset(i));
        if (s < 0) throw InvariantViolationError("candidate preimage left the closed alcove");
        if (s == 0) tight.push_back(i);
    }

    AffineWeylElement w = ctx.element(cand.group_index, cand.translation);
    AffineWeylElement result = tight.empty() ? w : compose(rs, w, waldspurger_q(ctx, w, tight));

    // Undo the reduction: V_(lambda - mu, w~) = V_(lambda, w~) + mu.
    for (int i = 0; i < rs.rank; ++i) result.translation[i] -= shift[i];

    LocateResult res;
    res.element = std::move(result);
    res.stabilizer = std::move(tight);

    Tile t = tile_of(rs, res.element);
    res.tile_dim = t.dim;
    if (!contains(rs, t, xi))
        throw InvariantViolationError("located tile does not contain the point; falsifies the tiling theorem");
    return res;
}

}  // namespace weyltile
