// SVG rendering of rank-2 tilings. Geometry is computed exactly: drawing
// coordinates live in Q(sqrt(a), sqrt(aD)) with a = <a1,a1> and D = det(gram),
// and window clipping decisions are exact sign tests in that field. The two
// square roots are evaluated in floating point only when serializing.
#pragma once

#include "weyltile/deformed.hpp"
#include "weyltile/locate.hpp"

#include <optional>
#include <string>
#include <vector>

namespace weyltile {

enum class RenderMode { Tiling, X, Stiefel, Deformed };

RenderMode parse_render_mode(const std::string& s);

struct RenderOptions {
    RenderMode mode = RenderMode::Tiling;
    Rat window_lo = Rat(-3);
    Rat window_hi = Rat(3);
    std::optional<Mat> S;  // Deformed mode only
};

struct RenderPolygon {
    VecI cell;             // lattice translation of the element, coroot coords
    int group_index = 0;
    int dim = 0;           // 2 = filled polygon, 1 = segment, 0 = point
    Rat shade_class;       // det(id - w~) of the linear part
    std::vector<Vec> vertices;  // deduplicated, root coordinates
};

struct RenderResult {
    std::vector<RenderPolygon> polygons;
    std::vector<Rat> shade_values;  // distinct classes, ascending
};

// Exact tile selection: a tile is included iff its closure intersects the
// closed window square in drawing coordinates.
RenderResult render_structure(const TilingContext& ctx, const RenderOptions& opts);

std::string render_svg(const TilingContext& ctx, const RenderOptions& opts);

// sign of t + p sqrt(a) + q sqrt(ad); a, ad > 0. Exact.
int sign_radical(const Rat& t, const Rat& p, const Rat& q, const Rat& a, const Rat& ad);

}  // namespace weyltile
