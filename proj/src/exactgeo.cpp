#include "weyltile/exactgeo.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace weyltile {

Vec vec_zero(std::size_t n) { return Vec(n, Rat(0)); }

static void check_same_size(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw DimensionError("vector size mismatch");
}

Vec vec_add(const Vec& a, const Vec& b) {
    check_same_size(a, b);
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
    check_same_size(a, b);
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Vec vec_neg(const Vec& a) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

Vec vec_scale(const Rat& c, const Vec& a) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

Rat dot(const Vec& a, const Vec& b) {
    check_same_size(a, b);
    Rat s(0);
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

bool vec_is_zero(const Vec& a) {
    for (const auto& x : a)
        if (x != 0) return false;
    return true;
}

Mat mat_identity(std::size_t n) {
    Mat m(n, vec_zero(n));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

Mat mat_zero(std::size_t r, std::size_t c) { return Mat(r, vec_zero(c)); }

Mat mat_add(const Mat& a, const Mat& b) {
    if (a.size() != b.size()) throw DimensionError("matrix size mismatch");
    Mat r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = vec_add(a[i], b[i]);
    return r;
}

Mat mat_sub(const Mat& a, const Mat& b) {
    if (a.size() != b.size()) throw DimensionError("matrix size mismatch");
    Mat r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = vec_sub(a[i], b[i]);
    return r;
}

Mat mat_scale(const Rat& c, const Mat& a) {
    Mat r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = vec_scale(c, a[i]);
    return r;
}

Mat mat_mul(const Mat& a, const Mat& b) {
    if (a.empty() || b.empty()) return {};
    if (a[0].size() != b.size()) throw DimensionError("matrix product shape mismatch");
    Mat r(a.size(), vec_zero(b[0].size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < b.size(); ++k) {
            if (a[i][k] == 0) continue;
            for (std::size_t j = 0; j < b[0].size(); ++j) r[i][j] += a[i][k] * b[k][j];
        }
    return r;
}

Vec mat_vec(const Mat& m, const Vec& v) {
    Vec r(m.size(), Rat(0));
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i].size() != v.size()) throw DimensionError("matvec shape mismatch");
        for (std::size_t j = 0; j < v.size(); ++j)
            if (m[i][j] != 0) r[i] += m[i][j] * v[j];
    }
    return r;
}

Mat mat_transpose(const Mat& m) {
    if (m.empty()) return {};
    Mat r(m[0].size(), vec_zero(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m[0].size(); ++j) r[j][i] = m[i][j];
    return r;
}

bool mat_eq(const Mat& a, const Mat& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return false;
    return true;
}

int vec_cmp(const Vec& a, const Vec& b) {
    for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
        if (a[i] < b[i]) return -1;
        if (a[i] > b[i]) return 1;
    }
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    return 0;
}

int mat_cmp(const Mat& a, const Mat& b) {
    for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
        int c = vec_cmp(a[i], b[i]);
        if (c != 0) return c;
    }
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    return 0;
}

// ---- determinant -----------------------------------------------------------

Rat det(const Mat& m) {
    const std::size_t n = m.size();
    if (n == 0) return Rat(1);
    for (const auto& row : m)
        if (row.size() != n) throw DimensionError("det of non-square matrix");

    // Clear denominators row by row; track the scale factor.
    std::vector<std::vector<Int>> a(n, std::vector<Int>(n));
    Rat scale(1);
    for (std::size_t i = 0; i < n; ++i) {
        Int l(1);
        for (std::size_t j = 0; j < n; ++j) l = boost::multiprecision::lcm(l, rat_den(m[i][j]));
        scale /= Rat(l);
        for (std::size_t j = 0; j < n; ++j) {
            Rat v = m[i][j] * Rat(l);
            a[i][j] = rat_num(v);
        }
    }

    // Bareiss fraction-free elimination.
    Int prev(1);
    int sgn = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && a[p][k] == 0) ++p;
            if (p == n) return Rat(0);
            std::swap(a[k], a[p]);
            sgn = -sgn;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return scale * Rat(sgn * a[n - 1][n - 1]);
}

// ---- RREF-based solve / kernel ---------------------------------------------

namespace {

// Reduced row echelon form in place; returns pivot column per row.
std::vector<std::size_t> rref(Mat& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[r], m[p]);
        Rat inv = Rat(1) / m[r][c];
        for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rat f = m[i][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

std::vector<Vec> kernel(const Mat& m) {
    if (m.empty()) return {};
    const std::size_t cols = m[0].size();
    Mat a = m;
    std::vector<std::size_t> pivots = rref(a);
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) is_pivot[c] = true;

    std::vector<Vec> basis;
    for (std::size_t free_c = 0; free_c < cols; ++free_c) {
        if (is_pivot[free_c]) continue;
        Vec v = vec_zero(cols);
        v[free_c] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][free_c];
        basis.push_back(std::move(v));
    }
    return basis;
}

LinearSolution solve_linear(const Mat& m, const Vec& b) {
    if (m.size() != b.size()) throw DimensionError("solve_linear shape mismatch");
    LinearSolution out;
    const std::size_t cols = m.empty() ? 0 : m[0].size();

    Mat aug(m.size(), vec_zero(cols + 1));
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i].size() != cols) throw DimensionError("ragged matrix");
        for (std::size_t j = 0; j < cols; ++j) aug[i][j] = m[i][j];
        aug[i][cols] = b[i];
    }
    std::vector<std::size_t> pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == cols) {
        out.kind = LinearSolution::Kind::Inconsistent;
        return out;
    }
    out.particular = vec_zero(cols);
    for (std::size_t r = 0; r < pivots.size(); ++r) out.particular[pivots[r]] = aug[r][cols];

    Mat coeff(aug.size(), vec_zero(cols));
    for (std::size_t i = 0; i < aug.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j) coeff[i][j] = aug[i][j];
    out.kernel = kernel(coeff);
    out.kind = out.kernel.empty() ? LinearSolution::Kind::Unique : LinearSolution::Kind::Parametric;
    return out;
}

Mat mat_inverse(const Mat& m) {
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw DimensionError("inverse of non-square matrix");
    Mat aug(n, vec_zero(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
        aug[i][n + i] = 1;
    }
    std::vector<std::size_t> pivots = rref(aug);
    if (pivots.size() != n || (n > 0 && pivots.back() >= n))
        throw SingularError("matrix is singular");
    Mat inv(n, vec_zero(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
    return inv;
}

std::size_t mat_rank(const Mat& m) {
    Mat a = m;
    return rref(a).size();
}

// ---- Fourier-Motzkin -------------------------------------------------------

namespace {

// Row (a, c) encodes <a,y> + c > 0 (strict) or >= 0 (weak). Canonical form:
// integer entries, content 1.
struct FMRow {
    std::vector<Int> a;
    Int c;
    bool strict = true;
    bool operator<(const FMRow& o) const {
        if (a != o.a) return a < o.a;
        if (c != o.c) return c < o.c;
        return strict < o.strict;
    }
};

// Divide out the content so duplicate constraints collapse.
FMRow reduce_row(FMRow row) {
    Int g(0);
    for (const auto& v : row.a) g = boost::multiprecision::gcd(g, v);
    g = boost::multiprecision::gcd(g, row.c);
    if (g > 1) {
        for (auto& v : row.a) v /= g;
        row.c /= g;
    }
    return row;
}

FMRow canonicalize(const Vec& a, const Rat& c, bool strict) {
    Int l(1);
    for (const auto& x : a) l = boost::multiprecision::lcm(l, rat_den(x));
    l = boost::multiprecision::lcm(l, rat_den(c));
    FMRow row;
    row.strict = strict;
    row.a.reserve(a.size());
    for (const auto& x : a) row.a.push_back(rat_num(x * Rat(l)));
    row.c = rat_num(c * Rat(l));
    return reduce_row(std::move(row));
}

}  // namespace

std::optional<Vec> strictly_feasible(const StrictSystem& sys) {
    if (sys.dim > 8) throw DimensionError("strict feasibility guarded at dimension 8");
    for (const auto& [n, c] : sys.strict)
        if (n.size() != sys.dim) throw DimensionError("inequality dimension mismatch");
    for (const auto& [n, c] : sys.weak)
        if (n.size() != sys.dim) throw DimensionError("inequality dimension mismatch");
    for (const auto& [n, c] : sys.equalities)
        if (n.size() != sys.dim) throw DimensionError("equality dimension mismatch");

    // Eliminate equalities first: x = p + sum_j y_j * kbasis[j].
    Vec p = vec_zero(sys.dim);
    std::vector<Vec> kbasis;
    if (!sys.equalities.empty()) {
        Mat em;
        Vec eb;
        for (const auto& [n, c] : sys.equalities) {
            em.push_back(n);
            eb.push_back(-c);
        }
        LinearSolution sol = solve_linear(em, eb);
        if (sol.kind == LinearSolution::Kind::Inconsistent) return std::nullopt;
        p = sol.particular;
        kbasis = sol.kernel;
    } else {
        for (std::size_t i = 0; i < sys.dim; ++i) {
            Vec e = vec_zero(sys.dim);
            e[i] = 1;
            kbasis.push_back(e);
        }
    }
    const std::size_t nvar = kbasis.size();

    // Substitute into the inequality part: <n, p + K y> + c > 0 (or >= 0).
    std::set<FMRow> rows;
    auto substitute = [&](const std::pair<Vec, Rat>& ineq, bool strict) {
        Vec a(nvar);
        for (std::size_t j = 0; j < nvar; ++j) a[j] = dot(ineq.first, kbasis[j]);
        rows.insert(canonicalize(a, dot(ineq.first, p) + ineq.second, strict));
    };
    for (const auto& ineq : sys.strict) substitute(ineq, true);
    for (const auto& ineq : sys.weak) substitute(ineq, false);

    // Eliminate variables from the last down, keeping each level for the
    // witness back-substitution.
    std::vector<std::vector<FMRow>> levels;  // levels[k] = rows over y_0..y_k
    levels.resize(nvar + 1);
    levels[nvar].assign(rows.begin(), rows.end());

    for (std::size_t k = nvar; k-- > 0;) {
        std::set<FMRow> next;
        std::vector<const FMRow*> lower, upper;
        for (const auto& r : levels[k + 1]) {
            int s = r.a[k].sign();
            if (s == 0) {
                FMRow kept = r;
                kept.a.resize(k);
                next.insert(reduce_row(std::move(kept)));
            } else if (s > 0) {
                lower.push_back(&r);
            } else {
                upper.push_back(&r);
            }
        }
        for (const auto* lo : lower)
            for (const auto* up : upper) {
                // positive combination cancelling y_k; strict if either parent is
                FMRow comb;
                comb.strict = lo->strict || up->strict;
                comb.a.resize(k);
                Int cl = lo->a[k], cu = -up->a[k];
                for (std::size_t j = 0; j < k; ++j) comb.a[j] = cu * lo->a[j] + cl * up->a[j];
                comb.c = cu * lo->c + cl * up->c;
                next.insert(reduce_row(std::move(comb)));
            }
        levels[k].assign(next.begin(), next.end());
    }

    // Constant level decides feasibility.
    for (const auto& r : levels[0])
        if (r.strict ? r.c <= 0 : r.c < 0) return std::nullopt;

    // Back-substitute a witness y. With any strict bound the interval is
    // open on that side; a closed degenerate interval can only be all-weak.
    Vec y = vec_zero(nvar);
    for (std::size_t k = 0; k < nvar; ++k) {
        bool has_lo = false, has_up = false, lo_strict = false, up_strict = false;
        Rat lo, up;
        for (const auto& r : levels[k + 1]) {
            int s = r.a[k].sign();
            if (s == 0) continue;
            Rat rest(r.c);
            for (std::size_t j = 0; j < k; ++j) rest += Rat(r.a[j]) * y[j];
            Rat bound = -rest / Rat(r.a[k]);
            if (s > 0) {
                if (!has_lo || bound > lo || (bound == lo && r.strict)) {
                    if (!has_lo || bound > lo) lo_strict = r.strict;
                    else lo_strict = lo_strict || r.strict;
                    lo = bound;
                }
                has_lo = true;
            } else {
                if (!has_up || bound < up || (bound == up && r.strict)) {
                    if (!has_up || bound < up) up_strict = r.strict;
                    else up_strict = up_strict || r.strict;
                    up = bound;
                }
                has_up = true;
            }
        }
        if (has_lo && has_up) {
            if (lo == up) {
                if (lo_strict || up_strict)
                    throw InvariantViolationError("empty witness interval in feasible system");
                y[k] = lo;
            } else {
                y[k] = (lo + up) / 2;
            }
        } else if (has_lo) {
            y[k] = lo + 1;
        } else if (has_up) {
            y[k] = up - 1;
        }
        // else unconstrained: 0
    }

    Vec x = p;
    for (std::size_t j = 0; j < nvar; ++j) x = vec_add(x, vec_scale(y[j], kbasis[j]));

    // The witness must satisfy the original system exactly.
    for (const auto& [n, c] : sys.equalities)
        if (dot(n, x) + c != 0) throw InvariantViolationError("feasibility witness misses an equality");
    for (const auto& [n, c] : sys.strict)
        if (dot(n, x) + c <= 0) throw InvariantViolationError("feasibility witness misses a strict inequality");
    for (const auto& [n, c] : sys.weak)
        if (dot(n, x) + c < 0) throw InvariantViolationError("feasibility witness misses a weak inequality");
    return x;
}

// ---- lattice box -----------------------------------------------------------

LatticeBox::LatticeBox(VecI lo, VecI hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
    if (lo_.size() != hi_.size()) throw DimensionError("box bounds size mismatch");
    done_ = false;
    for (std::size_t i = 0; i < lo_.size(); ++i)
        if (lo_[i] > hi_[i]) done_ = true;
    cur_ = lo_;
}

void LatticeBox::reset() {
    done_ = false;
    for (std::size_t i = 0; i < lo_.size(); ++i)
        if (lo_[i] > hi_[i]) done_ = true;
    cur_ = lo_;
}

bool LatticeBox::next(VecI& out) {
    if (done_) return false;
    out = cur_;
    // odometer increment, last coordinate fastest
    std::size_t i = cur_.size();
    while (i-- > 0) {
        if (cur_[i] < hi_[i]) {
            ++cur_[i];
            for (std::size_t j = i + 1; j < cur_.size(); ++j) cur_[j] = lo_[j];
            return true;
        }
    }
    done_ = true;
    return true;
}

std::vector<VecI> lattice_points_in_box(const VecI& lo, const VecI& hi) {
    LatticeBox box(lo, hi);
    std::vector<VecI> pts;
    VecI p;
    while (box.next(p)) pts.push_back(p);
    return pts;
}

}  // namespace weyltile
