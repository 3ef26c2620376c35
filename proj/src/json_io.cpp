#include "weyltile/json_io.hpp"

namespace weyltile {

Json json_rat(const Rat& r) { return rat_to_string(r); }

Json json_vec(const Vec& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(json_rat(x));
    return a;
}

Json json_mat(const Mat& m) {
    Json a = Json::array();
    for (const auto& row : m) a.push_back(json_vec(row));
    return a;
}

Json json_veci(const VecI& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(static_cast<std::int64_t>(x));
    return a;
}

Json json_root_system(const RootSystem& rs) {
    Json j;
    j["type"] = rs.label.str();
    j["rank"] = rs.rank;
    j["node_order"] = "bourbaki";  // affine node is index 0
    j["cartan"] = json_mat(rs.cartan);
    j["gram"] = json_mat(rs.gram);
    Json roots = Json::array();
    for (const auto& r : rs.positive_roots) {
        Json jr;
        jr["coeffs"] = json_veci(r.coeffs);
        jr["long"] = r.is_long;
        roots.push_back(jr);
    }
    j["positive_roots"] = roots;
    j["highest_root"] = json_veci(rs.highest_root.coeffs);
    j["marks"] = json_veci(rs.marks);
    Json cw = Json::array();
    for (const auto& w : rs.coweights) cw.push_back(json_vec(w));
    j["coweights"] = cw;
    j["rho"] = json_vec(rs.rho);
    j["dual_coxeter"] = static_cast<std::int64_t>(rs.dual_coxeter);
    Json av = Json::array();
    for (const auto& v : rs.alcove_vertices) av.push_back(json_vec(v));
    j["alcove_vertices"] = av;
    return j;
}

Json json_element(const RootSystem& rs, const AffineWeylElement& e) {
    Json j;
    j["translation"] = json_vec(rs.coroot_to_root(e.translation));  // root coordinates
    j["matrix"] = json_mat(e.matrix);
    Json w = Json::array();
    for (int g : e.word) w.push_back(g);
    j["word"] = w;
    return j;
}

Json json_tile(const RootSystem& rs, const Tile& t) {
    Json j;
    j["element"] = json_element(rs, t.element);
    j["dim"] = t.dim;
    Json vs = Json::array();
    for (const auto& v : t.vertices) vs.push_back(json_vec(v));
    j["vertices"] = vs;
    if (t.regular()) {
        Json ns = Json::array();
        for (const auto& n : t.normals) ns.push_back(json_vec(n));
        j["normals"] = ns;
        j["volume_multiple"] = json_rat(volume(rs, t));
    }
    return j;
}

Json json_locate(const RootSystem& rs, const LocateResult& r) {
    Json j;
    j["element"] = json_element(rs, r.element);
    j["tile_dim"] = r.tile_dim;
    Json is = Json::array();
    for (int i : r.stabilizer) is.push_back(i);
    j["stabilizer_I"] = is;
    return j;
}

Json json_deformed_location(const RootSystem& rs, const DeformedLocation& loc) {
    Json j;
    if (loc.open_tile)
        j["open_tile"] = json_element(rs, *loc.open_tile);
    else
        j["open_tile"] = nullptr;
    Json cs = Json::array();
    for (const auto& e : loc.closed_tiles) cs.push_back(json_element(rs, e));
    j["closed_tiles"] = cs;
    return j;
}

Json json_report(const VerificationReport& rep) {
    Json j;
    j["suite"] = rep.suite;
    j["type"] = rep.type_label;
    Json params = Json::object();
    for (const auto& [k, v] : rep.parameters) params[k] = v;
    j["parameters"] = params;
    Json checks = Json::array();
    bool all = true;
    for (const auto& c : rep.checks) {
        Json jc;
        jc["name"] = c.name;
        jc["pass"] = c.pass;
        if (!c.pass) jc["witness"] = c.witness;
        all = all && c.pass;
        checks.push_back(jc);
    }
    j["checks"] = checks;
    j["all_passed"] = all;
    return j;
}

Json json_abs_det(const AbsDetReport& rep) {
    Json j;
    j["identity_holds"] = rep.identity_holds;
    j["all_positive"] = rep.all_positive;
    j["sum_abs_det"] = json_rat(rep.sum);
    j["group_order"] = static_cast<std::int64_t>(rep.group_order);
    Json t = Json::array();
    for (std::size_t i = 0; i < rep.det_s_minus_w.size(); ++i) {
        Json row;
        row["det_S_minus_w"] = json_rat(rep.det_s_minus_w[i]);
        row["det_id_minus_Swinv"] = json_rat(rep.det_id_minus_swinv[i]);
        t.push_back(row);
    }
    j["per_element"] = t;
    return j;
}

}  // namespace weyltile
