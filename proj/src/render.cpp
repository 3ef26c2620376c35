#include "weyltile/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

namespace weyltile {

RenderMode parse_render_mode(const std::string& s) {
    if (s == "tiling") return RenderMode::Tiling;
    if (s == "X" || s == "x") return RenderMode::X;
    if (s == "stiefel") return RenderMode::Stiefel;
    if (s == "deformed") return RenderMode::Deformed;
    throw ParseError("unknown render mode '" + s + "' (tiling, X, stiefel, deformed)");
}

namespace {

// sign of A + B sqrt(D), D > 0
int sign_quad(const Rat& A, const Rat& B, const Rat& D) {
    if (B == 0) return sign(A);
    if (A == 0) return sign(B);
    if (sign(A) == sign(B)) return sign(A);
    Rat lhs = A * A, rhs = B * B * D;
    if (lhs == rhs) return 0;
    return (lhs > rhs) ? sign(A) : sign(B);
}

}  // namespace

int sign_radical(const Rat& t, const Rat& p, const Rat& q, const Rat& a, const Rat& ad) {
    // u = p sqrt(a) + q sqrt(ad) = sqrt(a) (p + q sqrt(D)), D = ad / a
    Rat D = ad / a;
    int su = sign_quad(p, q, D);
    if (su == 0) return sign(t);
    if (t == 0) return su;
    if (sign(t) == su) return su;
    // compare t^2 with u^2 = a (p^2 + q^2 D) + 2 a p q sqrt(D)
    Rat A = t * t - a * (p * p + q * q * D);
    Rat B = Rat(-2) * a * p * q;
    int c = sign_quad(A, B, D);
    if (c == 0) return 0;
    return (c > 0) ? sign(t) : su;
}

namespace {

struct DrawCtx {
    Rat a;   // gram[0][0]
    Rat b;   // gram[0][1]
    Rat D;   // det(gram)
    Rat ad;  // a * D

    // Drawing coordinates of a root-coordinate vector are
    //   x = px sqrt(a),  y = py sqrt(ad)
    // with rational px, py.
    Rat px(const Vec& v) const { return (a * v[0] + b * v[1]) / a; }
    Rat py(const Vec& v) const { return v[1] / a; }
};

// Window corner (x, y) in drawing coordinates, pulled back to root
// coordinates as coefficient pairs over {sqrt(a), sqrt(ad)}.
struct RadicalVec2 {
    Rat v1_a, v1_ad;  // v1 = v1_a sqrt(a) + v1_ad sqrt(ad)
    Rat v2_a, v2_ad;
};

RadicalVec2 corner_root_coords(const DrawCtx& d, const Rat& x, const Rat& y) {
    RadicalVec2 c;
    c.v2_a = 0;
    c.v2_ad = y / d.D;
    c.v1_a = x / d.a;
    c.v1_ad = -d.b * y / d.ad;
    return c;
}

// Exact closed-polygon / closed-window intersection by separating axes.
// Vertices are deduplicated root-coordinate points.
bool window_intersects(const DrawCtx& d, const std::vector<Vec>& verts, const Rat& lo,
                       const Rat& hi) {
    if (verts.empty()) return false;

    // Window axes. x-coordinate: a v1 + b v2 compared against bound sqrt(a);
    // y-coordinate: v2 sqrt(ad) against bound * a.
    Rat gmin, gmax, v2min, v2max;
    bool first = true;
    for (const auto& v : verts) {
        Rat g = d.a * v[0] + d.b * v[1];
        if (first) {
            gmin = gmax = g;
            v2min = v2max = v[1];
            first = false;
        } else {
            if (g < gmin) gmin = g;
            if (g > gmax) gmax = g;
            if (v[1] < v2min) v2min = v[1];
            if (v[1] > v2max) v2max = v[1];
        }
    }
    if (sign_radical(gmax, -lo, Rat(0), d.a, d.ad) < 0) return false;   // right of polygon
    if (sign_radical(gmin, -hi, Rat(0), d.a, d.ad) > 0) return false;   // left of polygon
    if (sign_radical(-lo * d.a, Rat(0), v2max, d.a, d.ad) < 0) return false;
    if (sign_radical(-hi * d.a, Rat(0), v2min, d.a, d.ad) > 0) return false;

    if (verts.size() == 1) return true;  // point inside all four slabs

    // Polygon edge axes: window strictly outside a supporting line of P.
    const Rat bounds[2] = {lo, hi};
    auto corners_strictly_outside = [&](const Vec& n, const Rat& c, int side) {
        // side = +1 tests L(corner) < 0 given P in {L >= 0}; side = -1 mirrored
        for (const Rat& x : bounds)
            for (const Rat& y : bounds) {
                RadicalVec2 cc = corner_root_coords(d, x, y);
                Rat p = n[0] * cc.v1_a + n[1] * cc.v2_a;
                Rat q = n[0] * cc.v1_ad + n[1] * cc.v2_ad;
                int s = sign_radical(c, p, q, d.a, d.ad);
                if (side > 0 ? s >= 0 : s <= 0) return false;
            }
        return true;
    };

    const std::size_t n = verts.size();
    for (std::size_t e = 0; e < n; ++e) {
        const Vec& u = verts[e];
        const Vec& v = verts[(e + 1) % n];
        if (n == 2 && e == 1) break;
        // L(w) = cross(v - u, w - u): normal and offset are rational
        Vec dir = vec_sub(v, u);
        Vec normal{-dir[1], dir[0]};
        if (vec_is_zero(normal)) continue;
        Rat c = -dot(normal, u);
        // orientation: which closed side holds all of P?
        bool nonneg = true, nonpos = true;
        for (const auto& w : verts) {
            int s = sign(dot(normal, w) + c);
            if (s < 0) nonneg = false;
            if (s > 0) nonpos = false;
        }
        if (nonneg && corners_strictly_outside(normal, c, +1)) return false;
        if (nonpos && corners_strictly_outside(normal, c, -1)) return false;
    }
    return true;
}

std::vector<Vec> dedup_vertices(const std::vector<Vec>& vs) {
    std::vector<Vec> out;
    for (const auto& v : vs) {
        bool dup = false;
        for (const auto& u : out)
            if (vec_cmp(u, v) == 0) {
                dup = true;
                break;
            }
        if (!dup) out.push_back(v);
    }
    return out;
}

// Coarse rational bound: u >= sqrt(x) for x >= 0.
Rat sqrt_upper(const Rat& x) {
    Int prod = rat_num(x) * rat_den(x);
    Int r = boost::multiprecision::sqrt(prod);
    return Rat(r + 1, rat_den(x));
}

}  // namespace

RenderResult render_structure(const TilingContext& ctx, const RenderOptions& opts) {
    const RootSystem& rs = ctx.rs;
    if (rs.rank != 2) throw DimensionError("rendering is implemented for rank 2 only");
    if (!(opts.window_lo < opts.window_hi)) throw ParseError("empty render window");

    DrawCtx d;
    d.a = rs.gram[0][0];
    d.b = rs.gram[0][1];
    d.D = det(rs.gram);
    d.ad = d.a * d.D;

    const bool deformed = (opts.mode == RenderMode::Stiefel || opts.mode == RenderMode::Deformed);
    Mat S;
    if (opts.mode == RenderMode::Stiefel) S = mat_zero(2, 2);
    if (opts.mode == RenderMode::Deformed) {
        if (!opts.S) throw ParseError("deformed mode needs a deformation matrix");
        S = *opts.S;
    }

    // Root-coordinate bounding box of the window, for translation
    // enumeration. Over-approximate; the per-tile test below is exact.
    Rat H = opts.window_hi > -opts.window_lo ? opts.window_hi : -opts.window_lo;
    Rat v2_bound = H * d.a * sqrt_upper(Rat(1) / d.ad);
    Rat v1_bound = (H * sqrt_upper(d.a) + (d.b < 0 ? -d.b : d.b) * v2_bound) / d.a;
    Vec win_lo{-v1_bound, -v2_bound}, win_hi{v1_bound, v2_bound};

    RenderResult res;
    std::map<Rat, bool> classes;

    VecI lo(2), hi(2), m;
    bool single_cell = (opts.mode == RenderMode::X);
    for (std::size_t gi = 0; gi < ctx.group.size(); ++gi) {
        Mat diff = deformed ? mat_sub(S, ctx.group[gi].matrix) : ctx.cache[gi].diff;
        std::vector<Vec> imgs;
        for (const auto& v : rs.alcove_vertices) imgs.push_back(mat_vec(diff, v));

        if (single_cell) {
            lo.assign(2, Int(0));
            hi.assign(2, Int(0));
        } else {
            // tile bbox = imgs bbox - lambda; overlap with the window bbox
            bool empty = false;
            for (int i = 0; i < 2; ++i) {
                Rat a = imgs[0][i], b = imgs[0][i];
                for (const auto& img : imgs) {
                    if (img[i] < a) a = img[i];
                    if (img[i] > b) b = img[i];
                }
                lo[i] = rat_ceil((a - win_hi[i]) / Rat(rs.coroot_scale[i]));
                hi[i] = rat_floor((b - win_lo[i]) / Rat(rs.coroot_scale[i]));
                if (lo[i] > hi[i]) empty = true;
            }
            if (empty) continue;
        }

        LatticeBox box(lo, hi);
        while (box.next(m)) {
            Vec lam = rs.coroot_to_root(m);
            std::vector<Vec> verts;
            for (const auto& img : imgs) verts.push_back(vec_sub(img, lam));
            std::vector<Vec> dedup = dedup_vertices(verts);
            if (!window_intersects(d, dedup, opts.window_lo, opts.window_hi)) continue;

            RenderPolygon poly;
            poly.cell = m;
            poly.group_index = static_cast<int>(gi);
            poly.dim = deformed ? 2 : ctx.cache[gi].regular ? 2 : (dedup.size() >= 2 ? 1 : 0);
            poly.shade_class = ctx.cache[gi].vol;
            if (poly.dim <= 1)  // lex order is monotone along a segment
                std::sort(dedup.begin(), dedup.end(),
                          [](const Vec& x, const Vec& y) { return vec_cmp(x, y) < 0; });
            poly.vertices = std::move(dedup);
            classes[poly.shade_class] = true;
            res.polygons.push_back(std::move(poly));
        }
    }

    // Deterministic emission order: cell lex, then group index.
    std::sort(res.polygons.begin(), res.polygons.end(),
              [](const RenderPolygon& x, const RenderPolygon& y) {
                  if (x.cell != y.cell) return x.cell < y.cell;
                  return x.group_index < y.group_index;
              });
    for (const auto& [val, _] : classes) res.shade_values.push_back(val);
    return res;
}

namespace {

std::string fmt12(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return std::string(buf);
}

}  // namespace

std::string render_svg(const TilingContext& ctx, const RenderOptions& opts) {
    const RootSystem& rs = ctx.rs;
    RenderResult structure = render_structure(ctx, opts);

    DrawCtx d;
    d.a = rs.gram[0][0];
    d.b = rs.gram[0][1];
    d.D = det(rs.gram);
    d.ad = d.a * d.D;
    const double sqrt_a = std::sqrt(static_cast<double>(d.a));
    const double sqrt_ad = std::sqrt(static_cast<double>(d.ad));

    auto draw_xy = [&](const Vec& v) {
        double x = static_cast<double>(d.px(v)) * sqrt_a;
        double y = static_cast<double>(d.py(v)) * sqrt_ad;
        return std::make_pair(x, -y);  // SVG y grows downward
    };

    const double lo = static_cast<double>(opts.window_lo);
    const double hi = static_cast<double>(opts.window_hi);
    const double span = hi - lo;

    // Shade palette: distinct det(id-w) classes, ascending, light to dark.
    std::map<Rat, int> class_index;
    for (std::size_t i = 0; i < structure.shade_values.size(); ++i)
        class_index[structure.shade_values[i]] = static_cast<int>(i);
    auto fill_for = [&](const Rat& cls) {
        const int n = std::max<std::size_t>(structure.shade_values.size(), 1);
        int idx = class_index[cls];
        // grey ramp from 0xe8 down to 0x60
        int level = 0xe8 - (n == 1 ? 0 : (0x88 * idx) / (n - 1));
        char buf[16];
        std::snprintf(buf, sizeof(buf), "#%02x%02x%02x", level, level, level);
        return std::string(buf);
    };

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << fmt12(lo) << " " << fmt12(-hi)
        << " " << fmt12(span) << " " << fmt12(span) << "\">\n";
    svg << "<!-- type " << rs.label.str() << ", mode ";
    switch (opts.mode) {
        case RenderMode::Tiling: svg << "tiling"; break;
        case RenderMode::X: svg << "X"; break;
        case RenderMode::Stiefel: svg << "stiefel"; break;
        case RenderMode::Deformed: svg << "deformed"; break;
    }
    svg << " -->\n";

    const std::string stroke_w = fmt12(span / 400.0);
    const bool line_style = (opts.mode == RenderMode::Stiefel);

    for (const auto& poly : structure.polygons) {
        if (poly.dim == 2) {
            svg << "<polygon class=\"det-" << rat_to_string(poly.shade_class) << "\" points=\"";
            for (std::size_t i = 0; i < poly.vertices.size(); ++i) {
                auto [x, y] = draw_xy(poly.vertices[i]);
                if (i) svg << " ";
                svg << fmt12(x) << "," << fmt12(y);
            }
            svg << "\" fill=\"" << (line_style ? "none" : fill_for(poly.shade_class))
                << "\" stroke=\"#303030\" stroke-width=\"" << stroke_w << "\"/>\n";
        } else if (poly.dim == 1) {
            auto [x1, y1] = draw_xy(poly.vertices.front());
            auto [x2, y2] = draw_xy(poly.vertices.back());
            svg << "<line x1=\"" << fmt12(x1) << "\" y1=\"" << fmt12(y1) << "\" x2=\"" << fmt12(x2)
                << "\" y2=\"" << fmt12(y2) << "\" stroke=\"#000000\" stroke-width=\""
                << fmt12(span / 250.0) << "\"/>\n";
        } else {
            auto [x, y] = draw_xy(poly.vertices.front());
            svg << "<circle cx=\"" << fmt12(x) << "\" cy=\"" << fmt12(y) << "\" r=\""
                << fmt12(span / 200.0) << "\" fill=\"#000000\"/>\n";
        }
    }
    // origin marker
    svg << "<circle cx=\"0\" cy=\"0\" r=\"" << fmt12(span / 120.0)
        << "\" fill=\"none\" stroke=\"#c02020\" stroke-width=\"" << stroke_w << "\"/>\n";
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace weyltile
