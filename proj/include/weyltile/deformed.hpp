// The deformed family V_w^(S) = (S - w)(A): admissibility certificates,
// deformed normals, location, and the absolute-determinant identity.
// At S = 0 the decomposition is the Stiefel diagram.
#pragma once

#include "weyltile/locate.hpp"
#include "weyltile/tiles.hpp"

#include <optional>
#include <string>
#include <vector>

namespace weyltile {

enum class AdmissibilityCertificate {
    NormBound,     // exact sufficient bound: Frobenius norm (Gram metric) < 1
    PathAsserted,  // caller asserts S lies in the component of 0
};

struct Deformation {
    Mat S;
    AdmissibilityCertificate certificate = AdmissibilityCertificate::NormBound;
};

// Squared Frobenius norm of S as an operator, tr(S* S) with the adjoint
// taken in the Gram inner product: tr(gram^{-1} S^T gram S). Rational.
Rat frobenius_norm_sq(const RootSystem& rs, const Mat& S);

// Validates det(S - w) != 0 for every w in W (always), plus the norm bound
// when that certificate is chosen. Throws InadmissibleError otherwise.
Deformation make_deformation(const TilingContext& ctx, const Mat& S,
                             AdmissibilityCertificate cert = AdmissibilityCertificate::NormBound);

// n^(S)_{w,i} = (S - w~^{-1})^{-1} alpha_i, i = 0..l.
std::vector<Vec> deformed_normals(const RootSystem& rs, const Mat& S, const Mat& w_linear);

// Tile data of (S - w)(A); full-dimensional for admissible S.
struct DeformedTile {
    AffineWeylElement element;
    std::vector<Vec> vertices;  // (S - w)(v_j)
};

DeformedTile deformed_tile(const RootSystem& rs, const Mat& S, const AffineWeylElement& w);

// Membership of xi in the open / closed deformed tile.
bool deformed_contains(const RootSystem& rs, const Mat& S, const AffineWeylElement& w,
                       const Vec& xi);
bool deformed_closure_contains(const RootSystem& rs, const Mat& S, const AffineWeylElement& w,
                               const Vec& xi);

// Theorem-3 location: the open tiles are disjoint but only the closures
// cover, so a point is in at most one open tile and at least one closed one.
struct DeformedLocation {
    std::optional<AffineWeylElement> open_tile;
    std::vector<AffineWeylElement> closed_tiles;  // canonical order
};

DeformedLocation deformed_locate(const TilingContext& ctx, const Deformation& d, const Vec& xi);

// Per-element table for sum_w |det(S - w)| = |W| and det(id - S w^{-1}) > 0.
// Reports rather than throws: a false outcome is a finding. Accepts any S,
// including inadmissible ones, so the documented failure cases can run.
struct AbsDetReport {
    bool identity_holds = false;   // sum of |det(S - w)| equals |W|
    bool all_positive = false;     // every det(id - S w^{-1}) > 0
    Rat sum;                       // sum of |det(S - w)|
    Int group_order;
    std::vector<Rat> det_s_minus_w;       // per element, canonical order
    std::vector<Rat> det_id_minus_swinv;  // per element
};

AbsDetReport abs_det_identity(const TilingContext& ctx, const Mat& S);

// Parses "--S" syntax: semicolon-separated rows of comma-separated rationals.
Mat parse_deformation_matrix(const std::string& text, int rank);

}  // namespace weyltile
