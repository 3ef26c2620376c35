// Tiles V_w = (id - w)(A) of the affine Weyl tiling: half-space data for
// regular elements, vertex images, exact membership, volumes, and the
// finite Waldspurger cones D_w = (id - w)(C).
#pragma once

#include "weyltile/rootsys.hpp"
#include "weyltile/weyl.hpp"

#include <optional>
#include <vector>

namespace weyltile {

struct Tile {
    AffineWeylElement element;
    int dim = 0;                        // rank of (id - w~)
    std::vector<Vec> vertices;          // images of the l+1 closed-alcove vertices
    std::vector<Vec> normals;           // n_{w,i}, i = 0..l; regular only
    std::vector<Rat> offsets;           // <n_{w,i}, lambda_w> + delta_{i,0}; regular only
    std::vector<Vec> kernel_basis;      // basis of ker(id - w~); empty iff regular
    bool regular() const { return kernel_basis.empty(); }

    // Deduplicated sorted vertex set, for exact set comparisons.
    std::vector<Vec> vertex_set() const;
};

// n_{w,i} = (id - w~^{-1})^{-1}(alpha_i) for i = 0..l. Requires regularity.
std::vector<Vec> normals(const RootSystem& rs, const AffineWeylElement& w);

Tile tile_of(const RootSystem& rs, const AffineWeylElement& w);

// Exact membership test for arbitrary rational xi. Regular tiles use the
// l+1 strict inequalities; non-regular tiles reduce parametrically to
// feasibility of the alcove system on the solution set of (id - w~)x = xi + lambda.
bool contains(const RootSystem& rs, const Tile& t, const Vec& xi);

// Same decision through the parametric route regardless of regularity;
// used to cross-check the half-space route.
bool contains_parametric(const RootSystem& rs, const AffineWeylElement& w, const Vec& xi);

// Closed-tile membership (all inequalities relaxed to >= / closed alcove).
bool closure_contains(const RootSystem& rs, const Tile& t, const Vec& xi);

// det(id - w~) as the exact multiple of vol(A). Throws on non-regular input.
Rat volume(const RootSystem& rs, const Tile& t);

struct FundamentalRegion {
    std::vector<Tile> tiles;          // one per w in W, canonical order
    std::vector<int> regular_indices; // positions of the regular tiles
};

FundamentalRegion fundamental_region(const RootSystem& rs, const std::vector<WeylElement>& group);

// Waldspurger cone D_w = (id - w)(C) for linear w.
struct Cone {
    AffineWeylElement element;  // linear (lambda = 0)
};

Cone waldspurger_cone(const RootSystem& rs, const WeylElement& w);
bool cone_contains(const RootSystem& rs, const Cone& c, const Vec& xi);

}  // namespace weyltile
