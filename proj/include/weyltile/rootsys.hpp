// Irreducible root-system data over the rationals, in simple-root
// coordinates with the Gram-matrix pairing. Long roots are normalized to
// squared length 2, so every implemented type (including G2 and F4) stays
// rational with ambient dimension equal to the rank. Node numbering is
// Bourbaki; index 0 is the affine node.
#pragma once

#include "weyltile/exactgeo.hpp"
#include "weyltile/rational.hpp"

#include <string>
#include <vector>

namespace weyltile {

enum class Series : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct TypeLabel {
    Series series = Series::A;
    int rank = 1;
    std::string str() const { return std::string(1, static_cast<char>(series)) + std::to_string(rank); }
    bool operator==(const TypeLabel&) const = default;
};

// Parses labels like "A3", "g2", "F4". Throws InvalidTypeError for anything
// outside A_l (l>=1), B_l (l>=2), C_l (l>=3), D_l (l>=4), E6-E8, F4, G2.
TypeLabel parse_label(const std::string& s);

struct Root {
    VecI coeffs;   // integer coefficients in the simple-root basis
    bool is_long = true;
};

class RootSystem {
  public:
    TypeLabel label;
    int rank = 0;

    Mat cartan;            // cartan[i][j] = <alpha_i^vee, alpha_j>, integer entries
    Mat gram;              // gram[i][j] = <alpha_i, alpha_j>
    Mat gram_inv;
    Vec half_lengths;      // d_i = <alpha_i,alpha_i>/2, in {1, 1/2, 1/3}
    std::vector<Int> coroot_scale;  // 1/d_i in {1,2,3}; alpha_i^vee = (1/d_i) alpha_i

    std::vector<Root> positive_roots;
    Root highest_root;
    std::vector<Int> marks;         // c_i, highest root coefficients
    std::vector<Vec> coweights;     // varpi_i^vee columns of gram_inv
    Vec rho;                        // half sum of positive roots
    Int dual_coxeter = 0;           // 1 + <alpha_max, rho>
    std::vector<Vec> alcove_vertices;  // index 0 is the origin, i>0 is varpi_i/c_i

    // <x,y> through the Gram matrix; both in simple-root coordinates.
    Rat inner(const Vec& x, const Vec& y) const;

    Vec root_vec(const Root& r) const;       // rational coordinates of a root
    Vec coroot_vec(const Root& r) const;     // 2a/<a,a>, still integer coords
    Vec simple_root(int i) const;            // i in 1..rank
    Vec simple_coroot(int i) const;
    Vec lowest_root_vec() const;             // alpha_0 = -alpha_max

    // Affine wall data: pair i -> (alpha_i, delta_{i,0}) for i = 0..rank.
    Vec wall_normal(int i) const;
    Rat wall_offset(int i) const;
    // <alpha_i, x> as a plain coordinate functional: gram * alpha_i.
    Vec wall_row(int i) const;

    // Coordinate changes between simple-root and simple-coroot bases.
    Vec coroot_to_root(const VecI& m) const;
    // Exact; throws InvariantViolationError if the input is not in the lattice.
    VecI root_to_coroot(const Vec& v) const;
    bool in_coroot_lattice(const Vec& v) const;

    // Squared Riemannian volume of the open alcove.
    Rat alcove_volume_sq() const;

    // Signs of the l+1 alcove inequalities at x: -1, 0, +1 per wall.
    std::vector<int> alcove_signs(const Vec& x) const;
    bool in_open_alcove(const Vec& x) const;
    bool in_closed_alcove(const Vec& x) const;

    Vec base_point() const;  // rho / dual_coxeter, interior to the alcove
};

RootSystem build_root_system(const TypeLabel& label);
inline RootSystem build_root_system(const std::string& label) {
    return build_root_system(parse_label(label));
}

// The l+1 pairs (alpha_i, delta_{i,0}) cutting out the open alcove.
std::vector<std::pair<Vec, Rat>> alcove_halfspaces(const RootSystem& rs);

// |W| from the classification; exact, no enumeration.
Int weyl_order(const TypeLabel& label);

}  // namespace weyltile
