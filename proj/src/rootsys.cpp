#include "weyltile/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

namespace weyltile {

TypeLabel parse_label(const std::string& s) {
    auto fail = [&] { throw InvalidTypeError("invalid root system label: '" + s + "'"); };
    if (s.size() < 2) fail();
    char series = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
    for (std::size_t i = 1; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) fail();
    int rank = 0;
    try {
        rank = std::stoi(s.substr(1));
    } catch (const std::exception&) {
        fail();
    }
    bool ok = false;
    switch (series) {
        case 'A': ok = rank >= 1; break;
        case 'B': ok = rank >= 2; break;
        case 'C': ok = rank >= 3; break;
        case 'D': ok = rank >= 4; break;
        case 'E': ok = rank >= 6 && rank <= 8; break;
        case 'F': ok = rank == 4; break;
        case 'G': ok = rank == 2; break;
        default: break;
    }
    if (!ok) fail();
    return TypeLabel{static_cast<Series>(series), rank};
}

namespace {

// Bonds of the Dynkin diagram plus the short-root set determine both the
// Cartan matrix and the Gram matrix under the long = 2 normalization.
struct Diagram {
    int rank;
    std::vector<std::pair<int, int>> single;   // <a_i, a_j> = -d (geometric), both directions -1
    std::vector<std::pair<int, int>> dbl;      // (long, short): -1 / -2
    std::vector<std::pair<int, int>> triple;   // (long, short): -1 / -3 (G2)
    std::vector<int> short_roots;              // 1-based indices of short simple roots
};

Diagram diagram_for(const TypeLabel& t) {
    Diagram d;
    d.rank = t.rank;
    const int l = t.rank;
    switch (t.series) {
        case Series::A:
            for (int i = 1; i < l; ++i) d.single.push_back({i, i + 1});
            break;
        case Series::B:
            for (int i = 1; i < l - 1; ++i) d.single.push_back({i, i + 1});
            d.dbl.push_back({l - 1, l});
            d.short_roots.push_back(l);
            break;
        case Series::C:
            for (int i = 1; i < l - 1; ++i) d.single.push_back({i, i + 1});
            d.dbl.push_back({l, l - 1});
            for (int i = 1; i < l; ++i) d.short_roots.push_back(i);
            break;
        case Series::D:
            for (int i = 1; i <= l - 3; ++i) d.single.push_back({i, i + 1});
            d.single.push_back({l - 2, l - 1});
            d.single.push_back({l - 2, l});
            break;
        case Series::E:
            d.single.push_back({1, 3});
            d.single.push_back({2, 4});
            for (int i = 3; i < l; ++i) d.single.push_back({i, i + 1});
            break;
        case Series::F:
            d.single.push_back({1, 2});
            d.dbl.push_back({2, 3});
            d.single.push_back({3, 4});
            d.short_roots = {3, 4};
            break;
        case Series::G:
            d.triple.push_back({2, 1});
            d.short_roots = {1};
            break;
    }
    return d;
}

}  // namespace

Rat RootSystem::inner(const Vec& x, const Vec& y) const { return dot(x, mat_vec(gram, y)); }

Vec RootSystem::root_vec(const Root& r) const {
    Vec v(rank);
    for (int i = 0; i < rank; ++i) v[i] = Rat(r.coeffs[i]);
    return v;
}

Vec RootSystem::coroot_vec(const Root& r) const {
    Vec a = root_vec(r);
    Rat len = inner(a, a);
    return vec_scale(Rat(2) / len, a);
}

Vec RootSystem::simple_root(int i) const {
    Vec v = vec_zero(rank);
    v[i - 1] = 1;
    return v;
}

Vec RootSystem::simple_coroot(int i) const {
    Vec v = vec_zero(rank);
    v[i - 1] = Rat(coroot_scale[i - 1]);
    return v;
}

Vec RootSystem::lowest_root_vec() const { return vec_neg(root_vec(highest_root)); }

Vec RootSystem::wall_normal(int i) const {
    if (i < 0 || i > rank) throw DimensionError("wall index out of range");
    return i == 0 ? lowest_root_vec() : simple_root(i);
}

Rat RootSystem::wall_offset(int i) const { return Rat(i == 0 ? 1 : 0); }

Vec RootSystem::wall_row(int i) const { return mat_vec(gram, wall_normal(i)); }

Vec RootSystem::coroot_to_root(const VecI& m) const {
    if (static_cast<int>(m.size()) != rank) throw DimensionError("coroot vector size mismatch");
    Vec v(rank);
    for (int i = 0; i < rank; ++i) v[i] = Rat(m[i] * coroot_scale[i]);
    return v;
}

bool RootSystem::in_coroot_lattice(const Vec& v) const {
    if (static_cast<int>(v.size()) != rank) return false;
    for (int i = 0; i < rank; ++i)
        if (!is_integer(v[i] / Rat(coroot_scale[i]))) return false;
    return true;
}

VecI RootSystem::root_to_coroot(const Vec& v) const {
    VecI m(rank);
    for (int i = 0; i < rank; ++i) {
        Rat mi = v[i] / Rat(coroot_scale[i]);
        if (!is_integer(mi)) throw InvariantViolationError("vector is not in the coroot lattice");
        m[i] = rat_num(mi);
    }
    return m;
}

Rat RootSystem::alcove_volume_sq() const {
    // vol(A)^2 = det(gram) * det(vertex matrix)^2 / (l!)^2
    Mat vm(rank, vec_zero(rank));
    for (int j = 1; j <= rank; ++j)
        for (int i = 0; i < rank; ++i) vm[i][j - 1] = alcove_vertices[j][i];
    Rat dv = det(vm);
    Rat fact(1);
    for (int k = 2; k <= rank; ++k) fact *= k;
    return det(gram) * dv * dv / (fact * fact);
}

std::vector<int> RootSystem::alcove_signs(const Vec& x) const {
    std::vector<int> s(rank + 1);
    for (int i = 0; i <= rank; ++i) s[i] = sign(inner(wall_normal(i), x) + wall_offset(i));
    return s;
}

bool RootSystem::in_open_alcove(const Vec& x) const {
    for (int i = 0; i <= rank; ++i)
        if (sign(inner(wall_normal(i), x) + wall_offset(i)) <= 0) return false;
    return true;
}

bool RootSystem::in_closed_alcove(const Vec& x) const {
    for (int i = 0; i <= rank; ++i)
        if (sign(inner(wall_normal(i), x) + wall_offset(i)) < 0) return false;
    return true;
}

Vec RootSystem::base_point() const { return vec_scale(Rat(1) / Rat(dual_coxeter), rho); }

RootSystem build_root_system(const TypeLabel& label) {
    RootSystem rs;
    rs.label = label;
    rs.rank = label.rank;
    const int l = label.rank;

    Diagram dia = diagram_for(label);
    std::vector<bool> is_short(l + 1, false);
    for (int i : dia.short_roots) is_short[i] = true;

    // d_i = half squared length; 1 for long, 1/2 for double-bond short,
    // 1/3 for the G2 short root.
    rs.half_lengths = Vec(l, Rat(1));
    for (int i = 1; i <= l; ++i)
        if (is_short[i]) rs.half_lengths[i - 1] = (label.series == Series::G) ? Rat(1, 3) : Rat(1, 2);
    rs.coroot_scale.resize(l);
    for (int i = 0; i < l; ++i) rs.coroot_scale[i] = rat_num(Rat(1) / rs.half_lengths[i]);

    // cartan[i][j] = <alpha_i^vee, alpha_j> = gram[i][j] / d_i
    rs.gram = mat_zero(l, l);
    for (int i = 0; i < l; ++i) rs.gram[i][i] = 2 * rs.half_lengths[i];
    for (auto [i, j] : dia.single) {
        // single bond between roots of equal length: <a_i,a_j> = -d_i
        rs.gram[i - 1][j - 1] = rs.gram[j - 1][i - 1] = -rs.half_lengths[i - 1];
    }
    for (auto [i, j] : dia.dbl) rs.gram[i - 1][j - 1] = rs.gram[j - 1][i - 1] = Rat(-1);
    for (auto [i, j] : dia.triple) rs.gram[i - 1][j - 1] = rs.gram[j - 1][i - 1] = Rat(-1);

    rs.cartan = mat_zero(l, l);
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) rs.cartan[i][j] = rs.gram[i][j] / rs.half_lengths[i];

    rs.gram_inv = mat_inverse(rs.gram);

    // Positive roots: closure of the simple roots under simple reflections,
    // keeping the nonnegative orbit half.
    std::set<VecI> seen;
    std::vector<VecI> queue;
    for (int i = 0; i < l; ++i) {
        VecI e(l, Int(0));
        e[i] = 1;
        seen.insert(e);
        queue.push_back(e);
    }
    while (!queue.empty()) {
        VecI b = queue.back();
        queue.pop_back();
        for (int i = 0; i < l; ++i) {
            // s_i(b) = b - <alpha_i^vee, beta> e_i
            Rat pairing(0);
            for (int j = 0; j < l; ++j) pairing += rs.cartan[i][j] * Rat(b[j]);
            VecI nb = b;
            nb[i] -= rat_num(pairing);  // cartan pairings of roots are integers
            if (seen.insert(nb).second) queue.push_back(nb);
        }
    }
    for (const auto& c : seen) {
        bool nonneg = true, pos = false;
        for (const auto& x : c) {
            if (x < 0) nonneg = false;
            if (x > 0) pos = true;
        }
        if (!nonneg || !pos) continue;
        Root r;
        r.coeffs = c;
        Vec v(l);
        for (int i = 0; i < l; ++i) v[i] = Rat(c[i]);
        r.is_long = (dot(v, mat_vec(rs.gram, v)) == 2);
        rs.positive_roots.push_back(std::move(r));
    }
    std::sort(rs.positive_roots.begin(), rs.positive_roots.end(),
              [](const Root& a, const Root& b) {
                  Int ha(0), hb(0);
                  for (const auto& x : a.coeffs) ha += x;
                  for (const auto& x : b.coeffs) hb += x;
                  if (ha != hb) return ha < hb;
                  return a.coeffs < b.coeffs;
              });

    // Highest root: maximal height; dominance over every positive root is a
    // tested invariant.
    rs.highest_root = rs.positive_roots.back();
    rs.marks.assign(rs.highest_root.coeffs.begin(), rs.highest_root.coeffs.end());

    for (int j = 0; j < l; ++j) {
        Vec w(l);
        for (int i = 0; i < l; ++i) w[i] = rs.gram_inv[i][j];
        rs.coweights.push_back(std::move(w));
    }

    rs.rho = vec_zero(l);
    for (const auto& r : rs.positive_roots) rs.rho = vec_add(rs.rho, rs.root_vec(r));
    rs.rho = vec_scale(Rat(1, 2), rs.rho);

    Rat hv = Rat(1) + rs.inner(rs.root_vec(rs.highest_root), rs.rho);
    if (!is_integer(hv)) throw InvariantViolationError("dual Coxeter number is not an integer");
    rs.dual_coxeter = rat_num(hv);

    rs.alcove_vertices.push_back(vec_zero(l));
    for (int i = 0; i < l; ++i)
        rs.alcove_vertices.push_back(vec_scale(Rat(1) / Rat(rs.marks[i]), rs.coweights[i]));

    return rs;
}

std::vector<std::pair<Vec, Rat>> alcove_halfspaces(const RootSystem& rs) {
    std::vector<std::pair<Vec, Rat>> hs;
    for (int i = 0; i <= rs.rank; ++i) hs.push_back({rs.wall_normal(i), rs.wall_offset(i)});
    return hs;
}

Int weyl_order(const TypeLabel& label) {
    const int l = label.rank;
    auto fact = [](int n) {
        Int f(1);
        for (int k = 2; k <= n; ++k) f *= k;
        return f;
    };
    switch (label.series) {
        case Series::A: return fact(l + 1);
        case Series::B:
        case Series::C: return fact(l) << l;
        case Series::D: return fact(l) << (l - 1);
        case Series::E:
            if (l == 6) return Int(51840);
            if (l == 7) return Int(2903040);
            return Int(696729600);
        case Series::F: return Int(1152);
        case Series::G: return Int(12);
    }
    throw InvalidTypeError("unhandled series");
}

}  // namespace weyltile
