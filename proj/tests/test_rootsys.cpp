#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "weyltile/json_io.hpp"
#include "weyltile/rootsys.hpp"

using namespace weyltile;

namespace {

const char* kAllTypes[] = {"A1", "A2", "A3", "A4", "B2", "B3", "B4",
                           "C3", "C4", "D4", "G2", "F4", "E6"};

void check_invariants(const RootSystem& rs) {
    INFO("type ", rs.label.str());
    const int l = rs.rank;

    // gram symmetric positive definite with the normalized diagonal
    for (int i = 0; i < l; ++i) {
        CHECK((rs.gram[i][i] == 2 || rs.gram[i][i] == 1 || rs.gram[i][i] == Rat(2, 3)));
        for (int j = 0; j < l; ++j) CHECK(rs.gram[i][j] == rs.gram[j][i]);
    }
    for (int k = 1; k <= l; ++k) {  // leading principal minors positive
        Mat sub(k, Vec(k));
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) sub[i][j] = rs.gram[i][j];
        CHECK(det(sub) > 0);
    }

    // coweight duality
    for (int i = 1; i <= l; ++i)
        for (int j = 1; j <= l; ++j)
            CHECK(rs.inner(rs.simple_root(i), rs.coweights[j - 1]) == Rat(i == j ? 1 : 0));

    // highest root decomposition and coefficient bounds
    for (int i = 0; i < l; ++i) CHECK(rs.highest_root.coeffs[i] == rs.marks[i]);
    CHECK(rs.highest_root.is_long);
    for (const auto& r : rs.positive_roots)
        for (int i = 0; i < l; ++i) {
            CHECK(r.coeffs[i] >= 0);
            CHECK(r.coeffs[i] <= rs.marks[i]);
        }

    // squared lengths and integral coroots
    for (const auto& r : rs.positive_roots) {
        Vec v = rs.root_vec(r);
        Rat len = rs.inner(v, v);
        CHECK((len == 2 || len == 1 || len == Rat(2, 3)));
        CHECK(r.is_long == (len == 2));
        Vec cv = rs.coroot_vec(r);
        VecI m = rs.root_to_coroot(cv);  // throws unless integral
        CHECK(rs.coroot_to_root(m) == cv);
    }

    // positive roots closed under the root strings generated from simple
    // reflections: s_i(beta) is a root for every positive beta
    for (const auto& r : rs.positive_roots) {
        for (int i = 1; i <= l; ++i) {
            Vec v = rs.root_vec(r);
            Rat pairing(0);
            for (int j = 0; j < l; ++j) pairing += rs.cartan[i - 1][j] * v[j];
            v[i - 1] -= pairing;
            bool nonneg = true, nonpos = true;
            for (const auto& x : v) {
                if (x > 0) nonpos = false;
                if (x < 0) nonneg = false;
            }
            CHECK((nonneg || nonpos));
            bool found = false;
            for (const auto& r2 : rs.positive_roots) {
                Vec u = rs.root_vec(r2);
                if (u == v || vec_neg(u) == v) found = true;
            }
            CHECK(found);
        }
    }

    // alcove vertices: <alpha_max, varpi_i/c_i> = 1 and <alpha_j, v> = delta/c
    Vec amax = rs.root_vec(rs.highest_root);
    for (int i = 1; i <= l; ++i) {
        const Vec& v = rs.alcove_vertices[i];
        CHECK(rs.inner(amax, v) == 1);
        for (int j = 1; j <= l; ++j)
            CHECK(rs.inner(rs.simple_root(j), v) == (i == j ? Rat(1) / Rat(rs.marks[i - 1]) : Rat(0)));
    }

    // rho/h_vee strictly inside the alcove
    CHECK(rs.in_open_alcove(rs.base_point()));

    // |W|^2 vol(A)^2 equals the squared covolume of the coroot lattice
    Mat coroot_gram(l, Vec(l));
    for (int i = 1; i <= l; ++i)
        for (int j = 1; j <= l; ++j)
            coroot_gram[i - 1][j - 1] = rs.inner(rs.simple_coroot(i), rs.simple_coroot(j));
    Rat order(weyl_order(rs.label));
    CHECK(order * order * rs.alcove_volume_sq() == det(coroot_gram));
}

}  // namespace

TEST_CASE("label parsing accepts the classification and nothing else") {
    CHECK(parse_label("A1").str() == "A1");
    CHECK(parse_label("g2").str() == "G2");
    CHECK(parse_label("E8").rank == 8);
    for (const char* bad : {"A0", "B1", "C2", "D3", "E5", "E9", "F3", "G3", "H2", "X", "", "Aq"})
        CHECK_THROWS_AS(parse_label(bad), InvalidTypeError);
}

TEST_CASE("A1 data is forced") {
    RootSystem rs = build_root_system("A1");
    CHECK(rs.positive_roots.size() == 1);
    CHECK(rs.marks == std::vector<Int>{Int(1)});
    CHECK(rs.dual_coxeter == 2);
    CHECK(rs.highest_root.coeffs == VecI{Int(1)});
}

TEST_CASE("positive root counts match the published tables") {
    CHECK(build_root_system("A2").positive_roots.size() == 3);
    CHECK(build_root_system("B2").positive_roots.size() == 4);
    CHECK(build_root_system("G2").positive_roots.size() == 6);
    CHECK(build_root_system("F4").positive_roots.size() == 24);
    CHECK(build_root_system("E6").positive_roots.size() == 36);
    CHECK(build_root_system("D4").positive_roots.size() == 12);
}

TEST_CASE("marks and dual Coxeter numbers") {
    RootSystem g2 = build_root_system("G2");
    CHECK(g2.marks == std::vector<Int>{Int(3), Int(2)});
    CHECK(g2.dual_coxeter == 4);

    RootSystem b2 = build_root_system("B2");
    CHECK(b2.marks == std::vector<Int>{Int(1), Int(2)});
    CHECK(b2.highest_root.is_long);

    for (int l = 1; l <= 4; ++l)
        CHECK(build_root_system("A" + std::to_string(l)).dual_coxeter == l + 1);
    CHECK(build_root_system("F4").dual_coxeter == 9);
    CHECK(build_root_system("E6").dual_coxeter == 12);
}

TEST_CASE("full invariant sweep over the implemented types") {
    for (const char* t : kAllTypes) check_invariants(build_root_system(t));
}

TEST_CASE("alcove halfspaces describe exactly the alcove") {
    RootSystem a1 = build_root_system("A1");
    auto hs = alcove_halfspaces(a1);
    REQUIRE(hs.size() == 2);
    CHECK(hs[1].first == Vec{Rat(1)});   // alpha_1, offset 0
    CHECK(hs[1].second == 0);
    CHECK(hs[0].first == Vec{Rat(-1)});  // alpha_0 = -alpha_max, offset 1
    CHECK(hs[0].second == 1);

    // x = alpha_1/4: <alpha_1, x> = 1/2 inside (0,1)
    CHECK(a1.in_open_alcove(Vec{Rat(1, 4)}));
    CHECK(!a1.in_open_alcove(Vec{Rat(1, 2)}));  // <alpha,x> = 1: on the far wall

    RootSystem g2 = build_root_system("G2");
    CHECK(!g2.in_open_alcove(vec_zero(2)));  // 0 on the boundary
    CHECK(g2.in_closed_alcove(vec_zero(2)));
    CHECK(g2.base_point() == vec_scale(Rat(1, 4), g2.rho));  // h_vee = 4
    CHECK(g2.in_open_alcove(g2.base_point()));
}

TEST_CASE("coroot lattice coordinate conversions") {
    RootSystem g2 = build_root_system("G2");
    // alpha_1 is short: alpha_1^vee = 3 alpha_1
    CHECK(g2.simple_coroot(1) == Vec{Rat(3), Rat(0)});
    CHECK(g2.simple_coroot(2) == Vec{Rat(0), Rat(1)});
    CHECK(g2.in_coroot_lattice(Vec{Rat(3), Rat(5)}));
    CHECK(!g2.in_coroot_lattice(Vec{Rat(1), Rat(0)}));
    CHECK(g2.root_to_coroot(Vec{Rat(6), Rat(2)}) == VecI{Int(2), Int(2)});
}

TEST_CASE("weyl_order matches the classification") {
    CHECK(weyl_order(parse_label("A4")) == 120);
    CHECK(weyl_order(parse_label("B4")) == 384);
    CHECK(weyl_order(parse_label("D4")) == 192);
    CHECK(weyl_order(parse_label("G2")) == 12);
    CHECK(weyl_order(parse_label("F4")) == 1152);
    CHECK(weyl_order(parse_label("E7")) == 2903040);
}

TEST_CASE("JSON dump has the canonical rational encoding") {
    RootSystem g2 = build_root_system("G2");
    Json j = json_root_system(g2);
    CHECK(j["type"] == "G2");
    CHECK(j["marks"][0] == 3);
    CHECK(j["gram"][0][0] == "2/3");
    CHECK(j["dual_coxeter"] == 4);
    // rationals always reduced with positive denominator
    CHECK(rat_to_string(Rat(-4, 8)) == "-1/2");
    CHECK(rat_to_string(Rat(3)) == "3/1");
}
