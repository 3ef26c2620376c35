// weyltile: exact affine Weyl tilings from the command line.
//
// Subcommands: info, enumerate, locate, verify, deform, render.
// Exit codes: 0 success / all checks pass, 1 invariant violation found,
// 2 usage or configuration error.

#include "weyltile/json_io.hpp"
#include "weyltile/render.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace wt = weyltile;

namespace {

wt::Vec parse_point(const std::string& text, int rank) {
    wt::Vec v;
    std::stringstream ss(text);
    std::string cell;
    while (std::getline(ss, cell, ',')) v.push_back(wt::rat_from_string(cell));
    if (static_cast<int>(v.size()) != rank)
        throw wt::ParseError("point needs " + std::to_string(rank) + " comma-separated rationals");
    return v;
}

void parse_window(const std::string& text, wt::Rat& lo, wt::Rat& hi) {
    auto colon = text.find(':');
    if (colon == std::string::npos) throw wt::ParseError("window must be lo:hi");
    lo = wt::rat_from_string(text.substr(0, colon));
    hi = wt::rat_from_string(text.substr(colon + 1));
    if (!(lo < hi)) throw wt::ParseError("window must have lo < hi");
}

struct Options {
    std::string type;
    std::string point;
    std::string S;
    std::string suite = "all";
    std::string window = "-3:3";
    std::string mode = "tiling";
    std::string out;
    long samples = 1000;
    long radius = 3;
    std::uint64_t seed = 12345;
    long win_elems = 1;
    bool allow_large = false;
    bool assert_path = false;
    bool as_json = false;
};

wt::TilingContext context_for(const Options& o) {
    wt::EnumerateOptions eo;
    eo.allow_large = o.allow_large;
    return wt::TilingContext::build(wt::build_root_system(o.type), eo);
}

int run_info(const Options& o) {
    wt::RootSystem rs = wt::build_root_system(o.type);
    wt::Int order = wt::weyl_order(rs.label);

    long n_reg = -1;
    wt::EnumerateOptions eo;
    eo.allow_large = o.allow_large;
    if (order <= eo.cap || o.allow_large) {
        auto group = wt::enumerate_weyl(rs, eo);
        n_reg = static_cast<long>(wt::regular_elements(group).size());
    }

    if (o.as_json) {
        wt::Json j = wt::json_root_system(rs);
        j["weyl_order"] = order.str();
        if (n_reg >= 0) j["regular_count"] = n_reg;
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "type        " << rs.label.str() << "\n";
    std::cout << "rank        " << rs.rank << "\n";
    std::cout << "|W|         = " << order << "\n";
    if (n_reg >= 0)
        std::cout << "|W_reg|     = " << n_reg << "\n";
    else
        std::cout << "|W_reg|     (enumeration gated; pass --allow-large)\n";
    std::cout << "marks       ";
    for (const auto& c : rs.marks) std::cout << c << " ";
    std::cout << "\nh_vee       = " << rs.dual_coxeter << "\n";
    std::cout << "positive    " << rs.positive_roots.size() << " roots\n";
    std::cout << "alcove vertices:\n";
    for (const auto& v : rs.alcove_vertices) {
        std::cout << "  (";
        for (std::size_t i = 0; i < v.size(); ++i)
            std::cout << (i ? "," : "") << wt::rat_to_string(v[i]);
        std::cout << ")\n";
    }
    return 0;
}

int run_enumerate(const Options& o) {
    wt::TilingContext ctx = context_for(o);
    wt::Json arr = wt::Json::array();
    for (std::size_t gi = 0; gi < ctx.group.size(); ++gi) {
        wt::AffineWeylElement e = ctx.element(static_cast<int>(gi), wt::VecI(ctx.rs.rank, wt::Int(0)));
        wt::Json je = wt::json_element(ctx.rs, e);
        je["regular"] = ctx.cache[gi].regular;
        je["det_id_minus_w"] = wt::rat_to_string(ctx.cache[gi].vol);
        arr.push_back(je);
    }
    if (!o.out.empty()) {
        std::ofstream f(o.out);
        if (!f) throw wt::ParseError("cannot write " + o.out);
        f << arr.dump(2) << "\n";
    } else {
        std::cout << arr.dump(2) << "\n";
    }
    return 0;
}

int run_locate(const Options& o) {
    wt::TilingContext ctx = context_for(o);
    wt::Vec xi = parse_point(o.point, ctx.rs.rank);
    if (!o.S.empty()) {
        wt::Mat S = wt::parse_deformation_matrix(o.S, ctx.rs.rank);
        wt::Deformation d = wt::make_deformation(
            ctx, S,
            o.assert_path ? wt::AdmissibilityCertificate::PathAsserted
                          : wt::AdmissibilityCertificate::NormBound);
        wt::DeformedLocation loc = wt::deformed_locate(ctx, d, xi);
        std::cout << wt::json_deformed_location(ctx.rs, loc).dump(2) << "\n";
        return 0;
    }
    wt::LocateResult r = wt::locate(ctx, xi);
    std::cout << wt::json_locate(ctx.rs, r).dump(2) << "\n";
    return 0;
}

int run_verify(const Options& o) {
    wt::TilingContext ctx = context_for(o);
    std::vector<wt::VerificationReport> reps;
    auto want = [&](const std::string& s) { return o.suite == "all" || o.suite == s; };

    if (want("det-identity")) reps.push_back(wt::suite_det_identity(ctx));
    if (want("partition")) reps.push_back(wt::suite_partition(ctx, o.samples, o.radius, o.seed));
    if (want("waldspurger")) reps.push_back(wt::suite_waldspurger_finite(ctx, o.samples, o.seed));
    if (want("symmetries")) reps.push_back(wt::suite_symmetries(ctx, o.win_elems));
    if (want("segments")) reps.push_back(wt::suite_segments(ctx));
    if (want("faces") && ctx.rs.rank == 2) reps.push_back(wt::suite_face_classification(ctx));
    if (reps.empty()) throw wt::ParseError("unknown suite '" + o.suite + "'");

    bool all = true;
    wt::Json out = wt::Json::array();
    for (const auto& r : reps) {
        out.push_back(wt::json_report(r));
        all = all && r.all_passed();
    }
    if (!o.out.empty()) {
        std::ofstream f(o.out);
        if (!f) throw wt::ParseError("cannot write " + o.out);
        f << out.dump(2) << "\n";
    } else {
        std::cout << out.dump(2) << "\n";
    }
    return all ? 0 : 1;
}

int run_deform(const Options& o) {
    wt::TilingContext ctx = context_for(o);
    if (o.S.empty()) throw wt::ParseError("deform needs --S");
    wt::Mat S = wt::parse_deformation_matrix(o.S, ctx.rs.rank);

    wt::Json j;
    j["type"] = ctx.rs.label.str();
    j["frobenius_norm_sq"] = wt::rat_to_string(wt::frobenius_norm_sq(ctx.rs, S));
    std::string admissible = "no";
    try {
        wt::make_deformation(ctx, S,
                             o.assert_path ? wt::AdmissibilityCertificate::PathAsserted
                                           : wt::AdmissibilityCertificate::NormBound);
        admissible = o.assert_path ? "asserted" : "norm-bound";
    } catch (const wt::InadmissibleError& e) {
        j["admissibility_error"] = e.what();
    }
    j["admissible"] = admissible;
    j["abs_det"] = wt::json_abs_det(wt::abs_det_identity(ctx, S));
    std::cout << j.dump(2) << "\n";
    return j["abs_det"]["identity_holds"].get<bool>() ? 0 : 1;
}

int run_render(const Options& o) {
    wt::TilingContext ctx = context_for(o);
    if (ctx.rs.rank != 2) throw wt::ParseError("render needs a rank-2 type");
    wt::RenderOptions ro;
    ro.mode = wt::parse_render_mode(o.mode);
    parse_window(o.window, ro.window_lo, ro.window_hi);
    if (ro.mode == wt::RenderMode::Deformed) {
        if (o.S.empty()) throw wt::ParseError("deformed mode needs --S");
        ro.S = wt::parse_deformation_matrix(o.S, 2);
    }
    std::string svg = wt::render_svg(ctx, ro);
    if (o.out.empty()) {
        std::cout << svg;
    } else {
        std::ofstream f(o.out);
        if (!f) throw wt::ParseError("cannot write " + o.out);
        f << svg;
        if (!f.good()) throw wt::ParseError("write failed for " + o.out);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact tilings from affine Weyl groups"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--type", o.type, "root system label, e.g. A2, B2, G2, F4")->required();
        cmd->add_flag("--allow-large", o.allow_large, "permit |W| beyond the default cap");
    };

    CLI::App* info = app.add_subcommand("info", "root system summary");
    add_common(info);
    info->add_flag("--json", o.as_json, "JSON output");

    CLI::App* enumerate = app.add_subcommand("enumerate", "dump all Weyl elements as JSON");
    add_common(enumerate);
    enumerate->add_option("--out", o.out, "output path (default stdout)");

    CLI::App* locate = app.add_subcommand("locate", "find the tile containing a point");
    add_common(locate);
    locate->add_option("--point", o.point, "comma-separated rationals, e.g. 5,7/3")->required();
    locate->add_option("--S", o.S, "deformation matrix rows 'a,b;c,d' (deformed location)");
    locate->add_flag("--assert-path", o.assert_path, "assert the component-of-0 condition for S");

    CLI::App* verify = app.add_subcommand("verify", "run invariant suites");
    add_common(verify);
    verify->add_option("--suite", o.suite,
                       "det-identity | partition | waldspurger | symmetries | segments | faces | all");
    verify->add_option("--samples", o.samples, "sample count");
    verify->add_option("--radius", o.radius, "sampling radius (simple-root coordinates)");
    verify->add_option("--seed", o.seed, "sampler seed");
    verify->add_option("--window", o.win_elems, "affine window radius for symmetry checks");
    verify->add_option("--out", o.out, "write the report JSON to a file instead of stdout");

    CLI::App* deform = app.add_subcommand("deform", "admissibility and determinant identity for S");
    add_common(deform);
    deform->add_option("--S", o.S, "matrix rows 'a,b;c,d'")->required();
    deform->add_flag("--assert-path", o.assert_path, "assert the component-of-0 condition");

    CLI::App* render = app.add_subcommand("render", "SVG of a rank-2 tiling");
    add_common(render);
    render->add_option("--mode", o.mode, "tiling | X | stiefel | deformed");
    render->add_option("--window", o.window, "drawing-coordinate window lo:hi");
    render->add_option("--S", o.S, "deformation matrix for deformed mode");
    render->add_option("--out", o.out, "output SVG path (default stdout)")
        ->expected(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(info)) return run_info(o);
        if (app.got_subcommand(enumerate)) return run_enumerate(o);
        if (app.got_subcommand(locate)) return run_locate(o);
        if (app.got_subcommand(verify)) return run_verify(o);
        if (app.got_subcommand(deform)) return run_deform(o);
        if (app.got_subcommand(render)) return run_render(o);
    } catch (const wt::InvariantViolationError& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return 1;
    } catch (const wt::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
