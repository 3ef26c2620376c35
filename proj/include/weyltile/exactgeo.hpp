// Exact rational linear algebra and polyhedral feasibility primitives.
//
// Everything here is exact: Gaussian elimination over the rationals,
// fraction-free (Bareiss) determinants, and strict-inequality feasibility
// by Fourier-Motzkin elimination. No floating point anywhere.
#pragma once

#include "weyltile/rational.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace weyltile {

using Vec = std::vector<Rat>;
using VecI = std::vector<Int>;
using Mat = std::vector<Vec>;  // row-major, rectangular

// ---- vector/matrix helpers -------------------------------------------------

Vec vec_zero(std::size_t n);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_neg(const Vec& a);
Vec vec_scale(const Rat& c, const Vec& a);
Rat dot(const Vec& a, const Vec& b);  // plain coordinate dot product
bool vec_is_zero(const Vec& a);

Mat mat_identity(std::size_t n);
Mat mat_zero(std::size_t r, std::size_t c);
Mat mat_add(const Mat& a, const Mat& b);
Mat mat_sub(const Mat& a, const Mat& b);
Mat mat_scale(const Rat& c, const Mat& a);
Mat mat_mul(const Mat& a, const Mat& b);
Vec mat_vec(const Mat& m, const Vec& v);
Mat mat_transpose(const Mat& m);
bool mat_eq(const Mat& a, const Mat& b);

// Lexicographic comparison of flattened entries; total order used for
// canonical element ordering and map keys.
int vec_cmp(const Vec& a, const Vec& b);
int mat_cmp(const Mat& a, const Mat& b);

// ---- elimination -----------------------------------------------------------

// Exact determinant via Bareiss fraction-free elimination on the
// denominator-cleared matrix. det of the empty matrix is 1.
Rat det(const Mat& m);

// Basis of the null space of m (possibly empty). Vectors are exact and
// linearly independent.
std::vector<Vec> kernel(const Mat& m);

struct LinearSolution {
    enum class Kind { Unique, Parametric, Inconsistent };
    Kind kind = Kind::Inconsistent;
    Vec particular;               // valid unless Inconsistent
    std::vector<Vec> kernel;      // nonempty iff Parametric
};

// Solves M x = b exactly. Parametric solutions carry a particular solution
// plus a kernel basis.
LinearSolution solve_linear(const Mat& m, const Vec& b);

// Inverse of a square nonsingular matrix; throws SingularError otherwise.
Mat mat_inverse(const Mat& m);

std::size_t mat_rank(const Mat& m);

// ---- strict feasibility ----------------------------------------------------

// A conjunction of strict inequalities <n,x> + c > 0, weak inequalities
// <n,x> + c >= 0, and equalities <n,x> + c = 0, over the plain coordinate
// pairing.
struct StrictSystem {
    std::size_t dim = 0;
    std::vector<std::pair<Vec, Rat>> strict;
    std::vector<std::pair<Vec, Rat>> weak;
    std::vector<std::pair<Vec, Rat>> equalities;
};

// Exact decision by equality pre-elimination followed by Fourier-Motzkin.
// Feasible systems come with an exact rational witness satisfying every
// constraint. Guarded at dim <= 8.
std::optional<Vec> strictly_feasible(const StrictSystem& sys);

// ---- lattice box enumeration ----------------------------------------------

// Integer points of [lo, hi], componentwise, in odometer (lexicographic)
// order. Empty if lo > hi in any coordinate.
class LatticeBox {
  public:
    LatticeBox(VecI lo, VecI hi);
    // Writes the next point into out; returns false when exhausted.
    bool next(VecI& out);
    void reset();

  private:
    VecI lo_, hi_, cur_;
    bool done_;
};

std::vector<VecI> lattice_points_in_box(const VecI& lo, const VecI& hi);

}  // namespace weyltile
