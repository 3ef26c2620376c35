#include "weyltile/verify.hpp"

#include <algorithm>
#include <sstream>

namespace weyltile {

namespace {

std::string vec_str(const Vec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += rat_to_string(v[i]);
    }
    return s + ")";
}

std::string elem_str(const AffineWeylElement& e) {
    std::string s = "lambda=[";
    for (std::size_t i = 0; i < e.translation.size(); ++i) {
        if (i) s += ",";
        s += e.translation[i].str();
    }
    s += "] matrix=[";
    for (std::size_t i = 0; i < e.matrix.size(); ++i) {
        if (i) s += ";";
        for (std::size_t j = 0; j < e.matrix[i].size(); ++j) {
            if (j) s += ",";
            s += rat_to_string(e.matrix[i][j]);
        }
    }
    return s + "]";
}

}  // namespace

// xorshift-style splitmix; fixed across platforms, unlike std distributions.
RationalSampler::RationalSampler(std::uint64_t seed, long radius)
    : state_(seed ^ 0x9e3779b97f4a7c15ull), radius_(radius) {
    // primes up to 997
    for (long n = 2; n < 998; ++n) {
        bool p = true;
        for (long d = 2; d * d <= n; ++d)
            if (n % d == 0) {
                p = false;
                break;
            }
        if (p) primes_.push_back(n);
    }
}

std::uint64_t RationalSampler::raw() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

Rat RationalSampler::scalar() {
    long p = primes_[raw() % primes_.size()];
    long span = 2 * radius_ * p + 1;
    long n = static_cast<long>(raw() % static_cast<std::uint64_t>(span)) - radius_ * p;
    return Rat(n, p);
}

Vec RationalSampler::point(int dim) {
    Vec v(dim);
    for (int i = 0; i < dim; ++i) v[i] = scalar();
    return v;
}

VerificationReport suite_det_identity(const TilingContext& ctx) {
    VerificationReport rep;
    rep.suite = "det-identity";
    rep.type_label = ctx.rs.label.str();

    Rat sum(0);
    bool nonneg = true, regular_match = true;
    std::string witness;
    for (std::size_t gi = 0; gi < ctx.group.size(); ++gi) {
        const Rat& d = ctx.cache[gi].vol;
        sum += d;
        if (d < 0) {
            nonneg = false;
            witness = "det(id-w) = " + rat_to_string(d) + " at group index " + std::to_string(gi);
        }
        if ((d == 0) == ctx.cache[gi].regular) regular_match = false;
    }
    rep.checks.push_back({"sum det(id-w) equals |W|", sum == Rat(Int(ctx.group.size())),
                          sum == Rat(Int(ctx.group.size())) ? "" : "sum = " + rat_to_string(sum)});
    rep.checks.push_back({"det(id-w) nonnegative", nonneg, witness});
    rep.checks.push_back({"vanishing exactly off the regular set", regular_match, ""});
    return rep;
}

VerificationReport suite_partition(const TilingContext& ctx, long samples, long radius,
                                   std::uint64_t seed) {
    const RootSystem& rs = ctx.rs;
    VerificationReport rep;
    rep.suite = "partition";
    rep.type_label = rs.label.str();
    rep.parameters = {{"samples", std::to_string(samples)},
                      {"radius", std::to_string(radius)},
                      {"seed", std::to_string(seed)}};

    RationalSampler sampler(seed, radius);
    long bad_count = 0, bad_locate = 0;
    std::string witness_count, witness_locate;

    VecI lo, hi, m;
    for (long s = 0; s < samples; ++s) {
        Vec xi = sampler.point(rs.rank);
        Vec xi0;
        VecI shift;
        lattice_reduce(rs, xi, xi0, shift);

        // Exhaustive membership over every linear part and every lattice
        // translation in the sound box.
        long members = 0;
        AffineWeylElement found;
        for (std::size_t gi = 0; gi < ctx.group.size(); ++gi) {
            if (!candidate_box(ctx, static_cast<int>(gi), xi0, lo, hi)) continue;
            const auto& c = ctx.cache[gi];
            LatticeBox box(lo, hi);
            while (box.next(m)) {
                Vec rhs = vec_add(xi0, rs.coroot_to_root(m));
                bool in = false;
                if (c.regular) {
                    in = rs.in_open_alcove(mat_vec(c.diff_inv, rhs));
                } else {
                    bool consistent = true;
                    for (const auto& u : c.coker)
                        if (dot(u, rhs) != 0) {
                            consistent = false;
                            break;
                        }
                    if (consistent) {
                        VecI full = m;
                        AffineWeylElement e = ctx.element(static_cast<int>(gi), full);
                        in = contains_parametric(rs, e, xi0);
                    }
                }
                if (in) {
                    ++members;
                    VecI full = m;
                    for (int i = 0; i < rs.rank; ++i) full[i] -= shift[i];
                    found = ctx.element(static_cast<int>(gi), full);
                }
            }
        }

        LocateResult loc = locate(ctx, xi);
        if (members != 1) {
            if (bad_count++ == 0)
                witness_count = "xi = " + vec_str(xi) + " lies in " + std::to_string(members) +
                                " open tiles";
        } else if (!(loc.element == found)) {
            if (bad_locate++ == 0)
                witness_locate = "xi = " + vec_str(xi) + ": locate gave " + elem_str(loc.element) +
                                 ", exhaustive scan gave " + elem_str(found);
        }
    }
    rep.checks.push_back({"each point lies in exactly one tile", bad_count == 0, witness_count});
    rep.checks.push_back({"locate agrees with the exhaustive scan", bad_locate == 0, witness_locate});
    return rep;
}

VerificationReport suite_waldspurger_finite(const TilingContext& ctx, long samples,
                                            std::uint64_t seed) {
    const RootSystem& rs = ctx.rs;
    VerificationReport rep;
    rep.suite = "waldspurger";
    rep.type_label = rs.label.str();
    rep.parameters = {{"samples", std::to_string(samples)}, {"seed", std::to_string(seed)}};

    RationalSampler sampler(seed, 3);
    std::vector<Cone> cones;
    for (const auto& w : ctx.group) cones.push_back(waldspurger_cone(rs, w));

    long bad_inside = 0, bad_outside = 0;
    std::string wit_in, wit_out;
    long outside_samples = std::max(1L, samples / 10);

    for (long s = 0; s < samples; ++s) {
        // nonnegative simple-root coordinates = the closed positive cone
        Vec xi(rs.rank);
        for (int i = 0; i < rs.rank; ++i) {
            Rat r = sampler.scalar();
            xi[i] = r < 0 ? -r : r;
        }
        long members = 0;
        for (const auto& c : cones)
            if (cone_contains(rs, c, xi)) ++members;
        if (members != 1 && bad_inside++ == 0)
            wit_in = "xi = " + vec_str(xi) + " lies in " + std::to_string(members) + " cones";
    }
    for (long s = 0; s < outside_samples; ++s) {
        Vec xi = sampler.point(rs.rank);
        int flip = static_cast<int>(sampler.raw() % rs.rank);
        if (xi[flip] >= 0) xi[flip] = -xi[flip] - 1;  // force a negative coordinate
        long members = 0;
        for (const auto& c : cones)
            if (cone_contains(rs, c, xi)) ++members;
        if (members != 0 && bad_outside++ == 0)
            wit_out = "xi = " + vec_str(xi) + " lies in " + std::to_string(members) + " cones";
    }
    rep.checks.push_back({"cone points lie in exactly one D_w", bad_inside == 0, wit_in});
    rep.checks.push_back({"points outside the closed cone lie in none", bad_outside == 0, wit_out});
    return rep;
}

VerificationReport suite_symmetries(const TilingContext& ctx, long window_radius) {
    const RootSystem& rs = ctx.rs;
    VerificationReport rep;
    rep.suite = "symmetries";
    rep.type_label = rs.label.str();
    rep.parameters = {{"window", std::to_string(window_radius)}};

    std::vector<DiagramAutomorphism> autos = diagram_automorphisms(rs);

    long bad_neg = 0, bad_auto = 0;
    std::string wit_neg, wit_auto;

    VecI lo(rs.rank, Int(-window_radius)), hi(rs.rank, Int(window_radius)), m;
    LatticeBox box(lo, hi);
    while (box.next(m)) {
        for (std::size_t gi = 0; gi < ctx.group.size(); ++gi) {
            AffineWeylElement w = ctx.element(static_cast<int>(gi), m);
            Tile tw = tile_of(rs, w);
            std::vector<Vec> vw = tw.vertex_set();

            // -w~ maps V_{w^{-1}} onto V_w
            AffineWeylElement winv = inverse(rs, w);
            Tile tinv = tile_of(rs, winv);
            std::vector<Vec> mapped;
            for (const auto& v : tinv.vertices) mapped.push_back(vec_neg(mat_vec(w.matrix, v)));
            std::sort(mapped.begin(), mapped.end(),
                      [](const Vec& a, const Vec& b) { return vec_cmp(a, b) < 0; });
            mapped.erase(std::unique(mapped.begin(), mapped.end()), mapped.end());
            if (mapped != vw && bad_neg++ == 0)
                wit_neg = "element " + elem_str(w);

            for (const auto& g : autos) {
                AffineWeylElement tau_w = automorphism_conjugate(rs, g, w);
                Tile ttau = tile_of(rs, tau_w);
                std::vector<Vec> img;
                for (const auto& v : tw.vertices) img.push_back(mat_vec(g.linear, v));
                std::sort(img.begin(), img.end(),
                          [](const Vec& a, const Vec& b) { return vec_cmp(a, b) < 0; });
                img.erase(std::unique(img.begin(), img.end()), img.end());
                if (img != ttau.vertex_set() && bad_auto++ == 0)
                    wit_auto = "element " + elem_str(w);
            }
        }
    }
    rep.checks.push_back({"-w(V_{w^-1}) = V_w over the window", bad_neg == 0, wit_neg});
    rep.checks.push_back({"g(V_w) = V_{tau(w)} for all diagram automorphisms", bad_auto == 0, wit_auto});
    rep.parameters.push_back({"automorphisms", std::to_string(autos.size())});
    return rep;
}

VerificationReport suite_segments(const TilingContext& ctx) {
    const RootSystem& rs = ctx.rs;
    VerificationReport rep;
    rep.suite = "segments";
    rep.type_label = rs.label.str();

    long bad = 0;
    std::string wit;
    for (const auto& root : rs.positive_roots) {
        AffineWeylElement s = root_reflection(rs, root);
        Tile t = tile_of(rs, s);
        Vec alpha = rs.root_vec(root);
        Vec avee = rs.coroot_vec(root);

        // lambda* = max_i a_i / c_i
        Rat lam_star(0);
        for (int i = 0; i < rs.rank; ++i) {
            Rat q = Rat(root.coeffs[i]) / Rat(rs.marks[i]);
            if (q > lam_star) lam_star = q;
        }

        bool ok = (t.dim == 1);
        Rat max_val(0);
        for (int j = 0; j <= rs.rank; ++j) {
            // (id - s_alpha)(v) = <alpha, v> alpha^vee
            Rat val = rs.inner(alpha, rs.alcove_vertices[j]);
            if (t.vertices[j] != vec_scale(val, avee)) ok = false;
            if (val > max_val) max_val = val;
            if (val < 0) ok = false;
        }
        if (max_val != lam_star) ok = false;
        if (!ok && bad++ == 0) {
            std::string coeffs;
            for (const auto& c : root.coeffs) coeffs += (coeffs.empty() ? "" : ",") + c.str();
            wit = "root [" + coeffs + "]: endpoint multiple " + rat_to_string(max_val) +
                  " vs expected " + rat_to_string(lam_star);
        }
    }
    rep.checks.push_back({"closure(V_{s_alpha}) = [0, (max a_i/c_i) alpha^vee]", bad == 0, wit});
    return rep;
}

FaceNeighbor neighbor_across_face(const RootSystem& rs, const AffineWeylElement& w, int i) {
    Tile tw = tile_of(rs, w);
    if (!tw.regular()) throw SingularError("face neighbors need a regular element");
    AffineWeylElement sigma = compose(rs, w, simple_reflection(rs, i));
    Mat diff = mat_sub(mat_identity(rs.rank), sigma.matrix);
    std::vector<Vec> ker = kernel(diff);
    if (ker.size() != 1)
        throw InvariantViolationError("w s_i of a regular w is not an affine reflection");
    const Vec& n = ker[0];
    Vec lam = rs.coroot_to_root(sigma.translation);

    // face i of the tile = image of the alcove facet opposite vertices j != i
    std::vector<int> others;
    for (int j = 0; j <= rs.rank; ++j)
        if (j != i) others.push_back(j);

    const Rat t_pool[] = {Rat(1, 2), Rat(1, 3), Rat(2, 5), Rat(3, 7), Rat(5, 11), Rat(7, 13)};
    for (const Rat& t : t_pool) {
        // A point of the open face V_{w,i}: combine the face's vertices.
        Vec xi = vec_zero(rs.rank);
        Rat rest = Rat(1) - t * Rat(static_cast<int>(others.size()) - 1);
        for (std::size_t k = 0; k < others.size(); ++k) {
            Rat coef = (k == 0) ? rest : t;
            xi = vec_add(xi, vec_scale(coef, tw.vertices[others[k]]));
        }
        // Preimage line under (id - sigma): p + s n.
        LinearSolution sol = solve_linear(diff, vec_add(xi, lam));
        if (sol.kind == LinearSolution::Kind::Inconsistent)
            throw InvariantViolationError("face point has no preimage under id - sigma");
        const Vec& p = sol.particular;

        bool bounded_lo = false, bounded_hi = false, degenerate = false;
        Rat s_lo, s_hi;
        for (int j = 0; j <= rs.rank && !degenerate; ++j) {
            Rat a = rs.inner(rs.wall_normal(j), n);
            Rat b = rs.inner(rs.wall_normal(j), p) + rs.wall_offset(j);
            if (a == 0) {
                if (b < 0) degenerate = true;  // line misses the closed alcove
                continue;
            }
            Rat bound = -b / a;
            if (a > 0) {
                if (!bounded_lo || bound > s_lo) s_lo = bound;
                bounded_lo = true;
            } else {
                if (!bounded_hi || bound < s_hi) s_hi = bound;
                bounded_hi = true;
            }
        }
        if (degenerate || !bounded_lo || !bounded_hi || !(s_lo < s_hi)) continue;

        std::vector<int> tight_lo, tight_hi;
        for (int j = 0; j <= rs.rank; ++j) {
            Rat a = rs.inner(rs.wall_normal(j), n);
            if (a == 0) continue;
            Rat b = rs.inner(rs.wall_normal(j), p) + rs.wall_offset(j);
            if (a > 0 && -b / a == s_lo) tight_lo.push_back(j);
            if (a < 0 && -b / a == s_hi) tight_hi.push_back(j);
        }
        if (tight_lo.size() != 1 || tight_hi.size() != 1) continue;  // corner; retry

        int a0 = tight_lo[0], a1 = tight_hi[0];
        int ip = (a0 == i) ? a1 : a0;
        if (a0 != i && a1 != i) continue;  // sample missed the face; retry
        FaceNeighbor fn;
        fn.i_prime = ip;
        fn.w_prime = compose(rs, sigma, simple_reflection(rs, ip));
        return fn;
    }
    throw InvariantViolationError("no generic point found on the face");
}

VerificationReport suite_face_classification(const TilingContext& ctx) {
    const RootSystem& rs = ctx.rs;
    VerificationReport rep;
    rep.suite = "faces";
    rep.type_label = rs.label.str();
    if (rs.rank != 2) {
        rep.checks.push_back({"rank is 2", false, "face classification is implemented at rank 2"});
        return rep;
    }

    long boundary_faces = 0, bad = 0;
    std::string wit;
    for (int gi : ctx.regular) {
        AffineWeylElement w = ctx.element(gi, VecI(rs.rank, Int(0)));
        for (int i = 0; i <= rs.rank; ++i) {
            FaceNeighbor fn = neighbor_across_face(rs, w, i);
            bool neighbor_in_W = fn.w_prime.is_linear();
            if (neighbor_in_W) continue;  // interior face of cl(X)
            ++boundary_faces;
            Rat pairing = rs.inner(ctx.cache[gi].norms[i], rs.root_vec(rs.highest_root));
            bool ok = (i == 0) ? pairing < 0 : pairing > 0;
            if (pairing == 0) ok = false;
            if (!ok && bad++ == 0)
                wit = "face " + std::to_string(i) + " of " + elem_str(w) + ": <n,alpha_max> = " +
                      rat_to_string(pairing);
        }
    }
    rep.parameters.push_back({"boundary_faces", std::to_string(boundary_faces)});
    rep.checks.push_back({"boundary faces classified with nonzero alpha_max pairing", bad == 0, wit});
    rep.checks.push_back({"boundary faces exist", boundary_faces > 0, ""});
    return rep;
}

}  // namespace weyltile
