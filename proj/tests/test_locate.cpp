#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "weyltile/locate.hpp"
#include "weyltile/verify.hpp"

#include <algorithm>

using namespace weyltile;

namespace {

AffineWeylElement linear_elem(const RootSystem& rs, const Mat& m) {
    AffineWeylElement e;
    e.label = rs.label;
    e.translation.assign(rs.rank, Int(0));
    e.matrix = m;
    return e;
}

}  // namespace

TEST_CASE("candidate window is complete at the origin") {
    TilingContext ctx = TilingContext::build(build_root_system("A1"));
    auto cands = candidate_window(ctx, vec_zero(1));
    // closure of (0, alpha) contains 0: the candidate (lambda=0, w=-id) shows up
    bool found = false;
    for (const auto& c : cands) {
        AffineWeylElement e = ctx.element(c.group_index, c.translation);
        if (mat_eq(e.matrix, Mat{{Rat(-1)}}) && e.is_linear()) found = true;
        CHECK(closure_contains(ctx.rs, tile_of(ctx.rs, e), vec_zero(1)));
    }
    CHECK(found);
}

TEST_CASE("candidate window members all contain the query point in closure") {
    TilingContext ctx = TilingContext::build(build_root_system("G2"));
    Vec amax{Rat(3), Rat(2)};
    Vec xi = vec_scale(Rat(1, 2), amax);
    auto cands = candidate_window(ctx, xi);
    CHECK(!cands.empty());
    for (const auto& c : cands) {
        Tile t = tile_of(ctx.rs, ctx.element(c.group_index, c.translation));
        CHECK(closure_contains(ctx.rs, t, xi));
    }
}

TEST_CASE("candidate window is exhaustive against a brute-force box scan") {
    TilingContext ctx = TilingContext::build(build_root_system("B2"));
    RationalSampler s(4242, 3);
    for (int trial = 0; trial < 40; ++trial) {
        Vec xi = s.point(2);
        auto cands = candidate_window(ctx, xi);
        std::vector<std::pair<int, VecI>> got;
        for (const auto& c : cands) got.push_back({c.group_index, c.translation});
        std::sort(got.begin(), got.end());

        // independent scan over a generous fixed box
        std::vector<std::pair<int, VecI>> expect;
        for (int gi : ctx.regular) {
            for (const auto& m : lattice_points_in_box(VecI{Int(-12), Int(-12)},
                                                       VecI{Int(12), Int(12)})) {
                AffineWeylElement e = ctx.element(gi, m);
                if (closure_contains(ctx.rs, tile_of(ctx.rs, e), xi)) expect.push_back({gi, m});
            }
        }
        std::sort(expect.begin(), expect.end());
        CHECK(got == expect);
    }
}

TEST_CASE("candidates far from the origin carry nonzero translations") {
    TilingContext ctx = TilingContext::build(build_root_system("A1"));
    Vec xi{Rat(10)};  // 10 alpha_1
    auto cands = candidate_window(ctx, xi);
    CHECK(!cands.empty());
    for (const auto& c : cands) CHECK(c.translation != VecI{Int(0)});
}

TEST_CASE("waldspurger selection: A1 half-turn with I = {1}") {
    TilingContext ctx = TilingContext::build(build_root_system("A1"));
    AffineWeylElement w = linear_elem(ctx.rs, Mat{{Rat(-1)}});
    AffineWeylElement q = waldspurger_q(ctx, w, {1});
    // ker(id - w s_1) = ker(0) = V meets the half-line; q = id gives ker {0}
    CHECK(mat_eq(q.matrix, Mat{{Rat(-1)}}));  // q = s_1

    AffineWeylElement q_empty = waldspurger_q(ctx, w, {});
    CHECK(mat_eq(q_empty.matrix, mat_identity(1)));
    CHECK(q_empty.is_linear());
}

TEST_CASE("waldspurger selection: G2 rotation by 120 with I = {2}") {
    TilingContext ctx = TilingContext::build(build_root_system("G2"));
    const WeylElement* rot = nullptr;
    for (const auto& w : ctx.group) {
        if (det(w.matrix) == 1 && w.matrix[0][0] + w.matrix[1][1] == -1) {
            rot = &w;
            break;
        }
    }
    REQUIRE(rot != nullptr);
    AffineWeylElement w = linear_elem(ctx.rs, rot->matrix);
    AffineWeylElement q = waldspurger_q(ctx, w, {2});
    // unique q among {id, s_2}
    auto sub = parabolic_for(ctx, {2});
    CHECK(sub.elements.size() == 2);
    bool is_member = false;
    for (const auto& e : sub.elements)
        if (mat_eq(e.matrix, q.matrix) && e.translation == q.translation) is_member = true;
    CHECK(is_member);
}

TEST_CASE("waldspurger uniqueness is exhaustive over (w, I) pairs") {
    for (const char* ty : {"A2", "B2", "G2"}) {
        TilingContext ctx = TilingContext::build(build_root_system(ty));
        const int l = ctx.rs.rank;
        for (const auto& w : ctx.group) {
            AffineWeylElement e = linear_elem(ctx.rs, w.matrix);
            for (int mask = 0; mask < (1 << (l + 1)) - 1; ++mask) {
                std::vector<int> I;
                for (int i = 0; i <= l; ++i)
                    if (mask & (1 << i)) I.push_back(i);
                CHECK_NOTHROW(waldspurger_q(ctx, e, I));  // throws unless exactly one
            }
        }
    }
}

TEST_CASE("locate at the origin and on the highest-root segment") {
    TilingContext ctx = TilingContext::build(build_root_system("G2"));
    LocateResult at0 = locate(ctx, vec_zero(2));
    CHECK(mat_eq(at0.element.matrix, mat_identity(2)));
    CHECK(at0.element.is_linear());
    CHECK(at0.tile_dim == 0);

    Vec amax{Rat(3), Rat(2)};
    LocateResult seg = locate(ctx, vec_scale(Rat(1, 2), amax));
    CHECK(seg.tile_dim == 1);
    // the reflection in alpha_max fixes amax up to sign
    CHECK(mat_vec(seg.element.matrix, amax) == vec_neg(amax));
    CHECK(seg.element.is_linear());
}

TEST_CASE("locate returns the base-point tile for elements of an affine window") {
    for (const char* ty : {"A2", "B2", "G2"}) {
        TilingContext ctx = TilingContext::build(build_root_system(ty));
        const RootSystem& rs = ctx.rs;
        Vec bp = rs.base_point();
        int checked = 0;
        for (const auto& m : lattice_points_in_box(VecI{Int(-1), Int(-1)}, VecI{Int(1), Int(1)})) {
            for (std::size_t gi = 0; gi < ctx.group.size(); ++gi) {
                AffineWeylElement w = ctx.element(static_cast<int>(gi), m);
                Vec xi = vec_sub(bp, apply(rs, w, bp));
                LocateResult r = locate(ctx, xi);
                CHECK(r.element == w);
                ++checked;
            }
        }
        CHECK(checked >= 54);
    }
}

TEST_CASE("locate soundness on random points") {
    for (const char* ty : {"A2", "B2", "G2"}) {
        TilingContext ctx = TilingContext::build(build_root_system(ty));
        RationalSampler s(31337, 3);
        for (int trial = 0; trial < 200; ++trial) {
            Vec xi = s.point(2);
            LocateResult r = locate(ctx, xi);  // internal containment check
            CHECK(contains(ctx.rs, tile_of(ctx.rs, r.element), xi));
        }
    }
}

TEST_CASE("locate result is independent of the starting regular candidate") {
    TilingContext ctx = TilingContext::build(build_root_system("B2"));
    const RootSystem& rs = ctx.rs;
    // a wall point: xi on the segment tile between chambers
    Vec amax = rs.root_vec(rs.highest_root);
    Vec xi = vec_scale(Rat(1, 3), amax);
    auto cands = candidate_window(ctx, xi);
    CHECK(cands.size() > 1);
    LocateResult expected = locate(ctx, xi);
    for (const auto& c : cands) {
        // run the tail of the algorithm by hand from each candidate
        AffineWeylElement w = ctx.element(c.group_index, c.translation);
        Vec x = mat_vec(ctx.at(c.group_index).diff_inv,
                        vec_add(xi, rs.coroot_to_root(c.translation)));
        std::vector<int> tight;
        for (int i = 0; i <= rs.rank; ++i)
            if (rs.inner(rs.wall_normal(i), x) + rs.wall_offset(i) == 0) tight.push_back(i);
        AffineWeylElement res =
            tight.empty() ? w : compose(rs, w, waldspurger_q(ctx, w, tight));
        CHECK(res == expected.element);
    }
}

TEST_CASE("small step along the highest root enters the interior of X") {
    // For xi in X, some s in (0, eps) has xi + s alpha_max in int(cl X):
    // member of a closed regular tile at lambda = 0 and of none at lambda != 0.
    for (const char* ty : {"B2", "G2"}) {
        TilingContext ctx = TilingContext::build(build_root_system(ty));
        const RootSystem& rs = ctx.rs;
        Vec amax = rs.root_vec(rs.highest_root);
        RationalSampler smp(5150, 1);

        auto in_interior_of_X = [&](const Vec& p) {
            bool in_zero = false, in_other = false;
            VecI lo, hi, m;
            for (int gi : ctx.regular) {
                if (!candidate_box(ctx, gi, p, lo, hi)) continue;
                LatticeBox box(lo, hi);
                while (box.next(m)) {
                    Vec x = mat_vec(ctx.at(gi).diff_inv, vec_add(p, rs.coroot_to_root(m)));
                    if (!rs.in_closed_alcove(x)) continue;
                    bool zero = std::all_of(m.begin(), m.end(), [](const Int& v) { return v == 0; });
                    (zero ? in_zero : in_other) = true;
                }
            }
            return in_zero && !in_other;
        };

        for (int trial = 0; trial < 25; ++trial) {
            // xi in X: image of an alcove point under (id - w), any w in W
            Vec a = rs.base_point();
            Vec jitter = smp.point(rs.rank);
            Vec x = vec_add(a, vec_scale(Rat(1, 50), jitter));
            if (!rs.in_open_alcove(x)) continue;
            std::size_t gi = smp.raw() % ctx.group.size();
            Vec xi = mat_vec(ctx.at(static_cast<int>(gi)).diff, x);

            bool entered = false;
            Rat s(1, 2);
            for (int k = 0; k < 40 && !entered; ++k, s /= 2)
                entered = in_interior_of_X(vec_add(xi, vec_scale(s, amax)));
            CHECK(entered);
        }
    }
}
