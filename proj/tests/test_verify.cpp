#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "weyltile/json_io.hpp"
#include "weyltile/verify.hpp"

using namespace weyltile;

TEST_CASE("sampler determinism and exactness") {
    RationalSampler a(42, 3), b(42, 3);
    for (int i = 0; i < 50; ++i) {
        Rat x = a.scalar(), y = b.scalar();
        CHECK(x == y);
        CHECK(x >= -3);
        CHECK(x <= 3);
        CHECK(rat_den(x) <= 997);
    }
    RationalSampler c(43, 3);
    bool differs = false;
    for (int i = 0; i < 50; ++i)
        if (c.scalar() != a.scalar()) differs = true;
    CHECK(differs);
}

TEST_CASE("det identity suite") {
    for (const char* ty : {"A1", "A2", "G2", "F4"}) {
        TilingContext ctx = TilingContext::build(build_root_system(ty));
        VerificationReport r = suite_det_identity(ctx);
        CHECK(r.all_passed());
    }
}

TEST_CASE("partition suite on a small sample") {
    for (const char* ty : {"A2", "B2", "G2"}) {
        TilingContext ctx = TilingContext::build(build_root_system(ty));
        VerificationReport r = suite_partition(ctx, 150, 3, 7);
        INFO(json_report(r).dump(2));
        CHECK(r.all_passed());
    }
}

TEST_CASE("partition suite: origin sits in the identity tile only") {
    TilingContext ctx = TilingContext::build(build_root_system("B2"));
    LocateResult r = locate(ctx, vec_zero(2));
    CHECK(mat_eq(r.element.matrix, mat_identity(2)));
    CHECK(r.element.is_linear());
}

TEST_CASE("A1 partition exhaustively at small denominators") {
    // Every p/q with q <= 20 in [-3,3] lies in exactly one of: the lattice
    // points -lambda, or an open interval (m, m+1) alpha.
    TilingContext ctx = TilingContext::build(build_root_system("A1"));
    const RootSystem& rs = ctx.rs;
    for (long q = 1; q <= 20; ++q)
        for (long p = -3 * q; p <= 3 * q; ++p) {
            Vec xi{Rat(p, q)};
            LocateResult r = locate(ctx, xi);
            Tile t = tile_of(rs, r.element);
            CHECK(contains(rs, t, xi));
            if (is_integer(xi[0])) {
                CHECK(r.tile_dim == 0);  // a lattice point
            } else {
                CHECK(r.tile_dim == 1);  // strictly inside a unit interval
            }
        }
}

TEST_CASE("waldspurger finite suite") {
    for (const char* ty : {"A2", "B2", "G2"}) {
        TilingContext ctx = TilingContext::build(build_root_system(ty));
        VerificationReport r = suite_waldspurger_finite(ctx, 100, 11);
        INFO(json_report(r).dump(2));
        CHECK(r.all_passed());
    }
}

TEST_CASE("symmetry suite") {
    for (const char* ty : {"A1", "A2", "B2", "G2"}) {
        TilingContext ctx = TilingContext::build(build_root_system(ty));
        VerificationReport r = suite_symmetries(ctx, 1);
        INFO(json_report(r).dump(2));
        CHECK(r.all_passed());
    }
}

TEST_CASE("segment suite covers A2, B2, G2, F4") {
    for (const char* ty : {"A2", "B2", "G2", "F4"}) {
        TilingContext ctx = TilingContext::build(build_root_system(ty));
        VerificationReport r = suite_segments(ctx);
        INFO(json_report(r).dump(2));
        CHECK(r.all_passed());
    }
}

TEST_CASE("face classification suite at rank 2") {
    for (const char* ty : {"A2", "B2", "G2"}) {
        TilingContext ctx = TilingContext::build(build_root_system(ty));
        VerificationReport r = suite_face_classification(ctx);
        INFO(json_report(r).dump(2));
        CHECK(r.all_passed());
    }
    TilingContext a3 = TilingContext::build(build_root_system("A3"));
    CHECK(!suite_face_classification(a3).all_passed());  // explicitly rank-2 only
}

TEST_CASE("reports are deterministic and serialize stably") {
    TilingContext ctx = TilingContext::build(build_root_system("B2"));
    Json a = json_report(suite_partition(ctx, 40, 3, 99));
    Json b = json_report(suite_partition(ctx, 40, 3, 99));
    CHECK(a.dump() == b.dump());
    CHECK(a["suite"] == "partition");
    CHECK(a["all_passed"] == true);
}
