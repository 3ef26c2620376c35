// Constructive point location: the unique w in Waff with xi in V_w.
//
// Candidate enumeration is exact: for a fixed linear part w~, any lattice
// vector lambda with xi in closure(V_(lambda,w~)) satisfies
// lambda = (id - w~)x - xi for some x in the closed alcove, so lambda lies
// in the coordinate bounding box of the simplex (id - w~)(cl A) shifted by
// -xi. The box is enumerated in coroot coordinates.
#pragma once

#include "weyltile/tiles.hpp"
#include "weyltile/weyl.hpp"

#include <map>
#include <memory>
#include <vector>

namespace weyltile {

// Per-root-system caches shared by location, verification and rendering.
struct TilingContext {
    RootSystem rs;
    std::vector<WeylElement> group;      // canonical order
    std::vector<int> regular;            // indices into group with det(id-w) != 0

    struct LinearCache {
        Mat diff;                        // id - w~
        bool regular = false;
        Mat diff_inv;                    // (id - w~)^{-1}, regular only
        std::vector<Vec> norms;          // n_{w,i}, regular only
        std::vector<Vec> coker;          // basis of ker(diff^T); non-regular only
        std::vector<Vec> vertex_images;  // (id - w~)(v_j)
        Vec box_lo, box_hi;              // coordinate bbox of the vertex images
        Rat vol;                         // det(id - w~)
    };
    std::vector<LinearCache> cache;      // parallel to group

    // Parabolic subgroups of all proper index sets; prebuilt for rank <= 4.
    std::map<std::vector<int>, ParabolicSubgroup> parabolics;

    static TilingContext build(const RootSystem& rs, const EnumerateOptions& opts = {});

    AffineWeylElement element(int group_index, const VecI& translation) const;
    const LinearCache& at(int group_index) const { return cache[group_index]; }
};

// Prebuilt parabolic when available, freshly enumerated otherwise.
ParabolicSubgroup parabolic_for(const TilingContext& ctx, const std::vector<int>& I);

// All regular (lambda, w~) whose tile closure contains xi, in canonical
// order (group index, then lambda lex).
struct Candidate {
    int group_index;
    VecI translation;
};
std::vector<Candidate> candidate_window(const TilingContext& ctx, const Vec& xi);

// Lattice box of translations for one linear part; used by both the regular
// window and the brute-force scans. Returns false if the box is empty.
bool candidate_box(const TilingContext& ctx, int group_index, const Vec& xi, VecI& lo, VecI& hi);

// Unique q in the parabolic Waff_I with ker(id - w~ q~) meeting the open
// cone { <alpha_i, x> > 0 for i in I }; raises InvariantViolationError if
// zero or more than one pass (that would falsify the underlying lemma).
AffineWeylElement waldspurger_q(const TilingContext& ctx, const AffineWeylElement& w,
                                const std::vector<int>& index_set);

struct LocateResult {
    AffineWeylElement element;
    int tile_dim = 0;
    std::vector<int> stabilizer;  // tight alcove indices I at the preimage point
};

LocateResult locate(const TilingContext& ctx, const Vec& xi);

// Splits xi into a lattice part and a remainder with coroot coordinates in
// [-1/2, 1/2]: xi = remainder + lattice (in root coordinates).
void lattice_reduce(const RootSystem& rs, const Vec& xi, Vec& remainder, VecI& lattice);

}  // namespace weyltile
