#include "weyltile/weyl.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace weyltile {

int element_cmp(const AffineWeylElement& a, const AffineWeylElement& b) {
    if (a.translation != b.translation) return a.translation < b.translation ? -1 : 1;
    return mat_cmp(a.matrix, b.matrix);
}

AffineWeylElement identity_element(const RootSystem& rs) {
    AffineWeylElement e;
    e.label = rs.label;
    e.translation.assign(rs.rank, Int(0));
    e.matrix = mat_identity(rs.rank);
    return e;
}

namespace {

// Reflection matrix for a root vector a: x |-> x - <a,x> a^vee.
Mat reflection_matrix(const RootSystem& rs, const Vec& a) {
    Rat len = rs.inner(a, a);
    Vec avee = vec_scale(Rat(2) / len, a);
    Vec ba = mat_vec(rs.gram, a);  // <a, e_j> per column
    Mat m = mat_identity(rs.rank);
    for (int i = 0; i < rs.rank; ++i)
        for (int j = 0; j < rs.rank; ++j) m[i][j] -= avee[i] * ba[j];
    return m;
}

void check_label(const RootSystem& rs, const AffineWeylElement& a) {
    if (!(a.label == rs.label))
        throw MismatchError("element of type " + a.label.str() + " used with root system " +
                            rs.label.str());
}

}  // namespace

AffineWeylElement simple_reflection(const RootSystem& rs, int i) {
    if (i < 0 || i > rs.rank) throw DimensionError("reflection index out of range");
    AffineWeylElement e;
    e.label = rs.label;
    e.word = {i};
    if (i >= 1) {
        e.translation.assign(rs.rank, Int(0));
        e.matrix = reflection_matrix(rs, rs.simple_root(i));
        return e;
    }
    // s_0: x - (<alpha_0,x> + 1) alpha_0^vee; linear part reflects in
    // alpha_max, translation is alpha_max^vee.
    Vec amax = rs.root_vec(rs.highest_root);
    e.matrix = reflection_matrix(rs, amax);
    Rat len = rs.inner(amax, amax);
    Vec avee = vec_scale(Rat(2) / len, amax);
    e.translation = rs.root_to_coroot(avee);
    return e;
}

AffineWeylElement root_reflection(const RootSystem& rs, const Root& r) {
    AffineWeylElement e;
    e.label = rs.label;
    e.translation.assign(rs.rank, Int(0));
    e.matrix = reflection_matrix(rs, rs.root_vec(r));
    return e;
}

std::vector<WeylElement> enumerate_weyl(const RootSystem& rs, const EnumerateOptions& opts) {
    Int order = weyl_order(rs.label);
    if (order > opts.cap && !opts.allow_large)
        throw CapExceededError("|W(" + rs.label.str() + ")| = " + order.str() +
                               " exceeds the enumeration cap; pass allow_large / --allow-large");

    std::vector<Mat> gens;
    for (int i = 1; i <= rs.rank; ++i) gens.push_back(simple_reflection(rs, i).matrix);

    std::map<Mat, int> seen;  // matrix -> index into out
    std::vector<WeylElement> out;
    out.push_back(WeylElement{mat_identity(rs.rank), {}});
    seen[out[0].matrix] = 0;

    std::vector<int> frontier{0};
    while (!frontier.empty()) {
        std::vector<WeylElement> level;
        for (int idx : frontier) {
            for (int g = 1; g <= rs.rank; ++g) {
                Mat m = mat_mul(out[idx].matrix, gens[g - 1]);
                if (seen.count(m)) continue;
                seen[m] = -1;  // placeholder until sorted in
                WeylElement w;
                w.word = out[idx].word;
                w.word.push_back(g);
                w.matrix = std::move(m);
                level.push_back(std::move(w));
            }
        }
        std::sort(level.begin(), level.end(),
                  [](const WeylElement& a, const WeylElement& b) { return mat_cmp(a.matrix, b.matrix) < 0; });
        frontier.clear();
        for (auto& w : level) {
            seen[w.matrix] = static_cast<int>(out.size());
            frontier.push_back(static_cast<int>(out.size()));
            out.push_back(std::move(w));
        }
        if (Int(out.size()) > order) throw InvariantViolationError("Weyl enumeration overshot |W|");
    }
    if (Int(out.size()) != order)
        throw InvariantViolationError("Weyl enumeration found " + std::to_string(out.size()) +
                                      " elements, expected " + order.str());
    return out;
}

std::vector<WeylElement> regular_elements(const std::vector<WeylElement>& group) {
    std::vector<WeylElement> reg;
    for (const auto& w : group) {
        Mat d = mat_sub(mat_identity(w.matrix.size()), w.matrix);
        if (det(d) != 0) reg.push_back(w);
    }
    return reg;
}

AffineWeylElement compose(const RootSystem& rs, const AffineWeylElement& a,
                          const AffineWeylElement& b) {
    check_label(rs, a);
    check_label(rs, b);
    // (l1, u)(l2, v) = (l1 + u l2, u v)
    AffineWeylElement c;
    c.label = rs.label;
    c.matrix = mat_mul(a.matrix, b.matrix);
    Vec moved = mat_vec(a.matrix, rs.coroot_to_root(b.translation));
    Vec lam = vec_add(rs.coroot_to_root(a.translation), moved);
    c.translation = rs.root_to_coroot(lam);
    c.word = a.word;
    c.word.insert(c.word.end(), b.word.begin(), b.word.end());
    return c;
}

AffineWeylElement inverse(const RootSystem& rs, const AffineWeylElement& a) {
    check_label(rs, a);
    AffineWeylElement r;
    r.label = rs.label;
    r.matrix = mat_inverse(a.matrix);
    Vec lam = vec_neg(mat_vec(r.matrix, rs.coroot_to_root(a.translation)));
    r.translation = rs.root_to_coroot(lam);
    r.word.assign(a.word.rbegin(), a.word.rend());
    return r;
}

Vec apply(const RootSystem& rs, const AffineWeylElement& a, const Vec& x) {
    check_label(rs, a);
    return vec_add(mat_vec(a.matrix, x), rs.coroot_to_root(a.translation));
}

AffineWeylElement linear_part(const RootSystem& rs, const AffineWeylElement& a) {
    AffineWeylElement r;
    r.label = rs.label;
    r.translation.assign(rs.rank, Int(0));
    r.matrix = a.matrix;
    return r;
}

ParabolicSubgroup parabolic(const RootSystem& rs, const std::vector<int>& index_set) {
    std::vector<int> idx = index_set;
    std::sort(idx.begin(), idx.end());
    idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
    for (int i : idx)
        if (i < 0 || i > rs.rank) throw DimensionError("parabolic index out of range");
    if (static_cast<int>(idx.size()) == rs.rank + 1)
        throw DimensionError("parabolic index set must be proper (the full set generates an infinite group)");

    constexpr std::size_t kCap = 1152;  // largest W_I at the implemented scale
    ParabolicSubgroup sub;
    sub.index_set = idx;

    std::vector<AffineWeylElement> gens;
    for (int i : idx) gens.push_back(simple_reflection(rs, i));

    auto key_less = [](const AffineWeylElement& a, const AffineWeylElement& b) {
        return element_cmp(a, b) < 0;
    };
    std::vector<AffineWeylElement> elems{identity_element(rs)};
    std::vector<AffineWeylElement> frontier = elems;
    std::map<AffineWeylElement, bool, decltype(key_less)> seen(key_less);
    seen[elems[0]] = true;
    while (!frontier.empty()) {
        std::vector<AffineWeylElement> next;
        for (const auto& e : frontier)
            for (const auto& g : gens) {
                AffineWeylElement f = compose(rs, e, g);
                if (seen.emplace(f, true).second) {
                    next.push_back(f);
                    elems.push_back(f);
                    if (elems.size() > kCap)
                        throw InvariantViolationError("parabolic closure exceeded cap of 1152");
                }
            }
        frontier = std::move(next);
    }
    std::sort(elems.begin(), elems.end(), key_less);
    sub.elements = std::move(elems);
    return sub;
}

Vec automorphism_apply(const DiagramAutomorphism& g, const Vec& x) {
    return vec_add(mat_vec(g.linear, x), g.translation);
}

AffineWeylElement automorphism_conjugate(const RootSystem& rs, const DiagramAutomorphism& g,
                                         const AffineWeylElement& w) {
    // g w g^{-1}: linear G M G^{-1}, translation G lambda + t - G M G^{-1} t
    Mat ginv = mat_inverse(g.linear);
    Mat m = mat_mul(g.linear, mat_mul(w.matrix, ginv));
    Vec lam = rs.coroot_to_root(w.translation);
    Vec tr = vec_add(mat_vec(g.linear, lam), g.translation);
    tr = vec_sub(tr, mat_vec(m, g.translation));
    AffineWeylElement r;
    r.label = rs.label;
    r.matrix = std::move(m);
    r.translation = rs.root_to_coroot(tr);
    return r;
}

std::vector<DiagramAutomorphism> diagram_automorphisms(const RootSystem& rs) {
    const int n = rs.rank + 1;  // nodes 0..l

    // Extended Cartan matrix over nodes 0..l.
    std::vector<Vec> roots(n);
    roots[0] = rs.lowest_root_vec();
    for (int i = 1; i <= rs.rank; ++i) roots[i] = rs.simple_root(i);
    Mat ext(n, vec_zero(n));
    for (int i = 0; i < n; ++i) {
        Rat len = rs.inner(roots[i], roots[i]);
        for (int j = 0; j < n; ++j) ext[i][j] = Rat(2) * rs.inner(roots[i], roots[j]) / len;
    }

    // Alcove vertex opposite wall i (vertex 0 is the origin, opposite wall 0).
    const std::vector<Vec>& verts = rs.alcove_vertices;

    std::vector<DiagramAutomorphism> autos;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool cartan_ok = true;
        for (int i = 0; i < n && cartan_ok; ++i)
            for (int j = 0; j < n; ++j)
                if (ext[perm[i]][perm[j]] != ext[i][j]) {
                    cartan_ok = false;
                    break;
                }
        if (!cartan_ok) continue;

        // g maps vertex u_i to u_{tau(i)}; u_0 = 0 gives the translation.
        DiagramAutomorphism g;
        g.node_permutation = perm;
        g.translation = verts[perm[0]];
        Mat vm(rs.rank, vec_zero(rs.rank)), im(rs.rank, vec_zero(rs.rank));
        for (int j = 1; j <= rs.rank; ++j) {
            Vec target = vec_sub(verts[perm[j]], g.translation);
            for (int i = 0; i < rs.rank; ++i) {
                vm[i][j - 1] = verts[j][i];
                im[i][j - 1] = target[i];
            }
        }
        g.linear = mat_mul(im, mat_inverse(vm));

        // Verify the defining property g s_i g^{-1} = s_{tau(i)} exactly.
        bool conj_ok = true;
        try {
            for (int i = 0; i <= rs.rank && conj_ok; ++i) {
                AffineWeylElement lhs = automorphism_conjugate(rs, g, simple_reflection(rs, i));
                AffineWeylElement rhs = simple_reflection(rs, perm[i]);
                conj_ok = lhs.translation == rhs.translation && mat_eq(lhs.matrix, rhs.matrix);
            }
        } catch (const InvariantViolationError&) {
            conj_ok = false;  // conjugate left the affine Weyl group
        }
        if (conj_ok) autos.push_back(std::move(g));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return autos;
}

}  // namespace weyltile
