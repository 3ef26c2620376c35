// Invariant suites: each theorem, lemma, and remark as a pass/fail report
// with exact rational witnesses. Suites are deterministic given (type, seed,
// parameters) and use no floating point anywhere, including sampling.
#pragma once

#include "weyltile/deformed.hpp"
#include "weyltile/locate.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace weyltile {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string witness;  // exact counterexample data on failure, else empty
};

struct VerificationReport {
    std::string suite;
    std::string type_label;
    std::vector<std::pair<std::string, std::string>> parameters;
    std::vector<CheckResult> checks;

    bool all_passed() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

// Seeded exact-rational sampler: coordinates n/p with p from a fixed pool of
// primes below 998 and n uniform in [-radius p, radius p].
class RationalSampler {
  public:
    RationalSampler(std::uint64_t seed, long radius);
    Vec point(int dim);
    Rat scalar();
    std::uint64_t raw();  // deterministic stream for index choices

  private:
    std::uint64_t state_;
    long radius_;
    std::vector<long> primes_;
};

// sum_{w in W} det(id - w) = |W|, det(id - w) >= 0 with equality exactly off
// the regular set.
VerificationReport suite_det_identity(const TilingContext& ctx);

// Every sampled point lies in exactly one tile, and locate() returns it.
VerificationReport suite_partition(const TilingContext& ctx, long samples, long radius,
                                   std::uint64_t seed);

// Finite Waldspurger decomposition of the closed positive-root cone.
VerificationReport suite_waldspurger_finite(const TilingContext& ctx, long samples,
                                            std::uint64_t seed);

// -w(V_{w^{-1}}) = V_w and diagram-automorphism equivariance over an affine
// window of translations with coroot coordinates bounded by window_radius.
VerificationReport suite_symmetries(const TilingContext& ctx, long window_radius);

// closure(V_{s_alpha}) = [0, (max_i a_i/c_i) alpha^vee] for every positive root.
VerificationReport suite_segments(const TilingContext& ctx);

// Horizontal/vertical classification of the boundary facets of cl(X), rank 2.
VerificationReport suite_face_classification(const TilingContext& ctx);

// Constructive form of the codimension-1 gluing: the neighbor tile across
// face i of a regular tile, with the shared face's other wall index.
struct FaceNeighbor {
    int i_prime = -1;
    AffineWeylElement w_prime;  // w s_i s_{i'}
};
FaceNeighbor neighbor_across_face(const RootSystem& rs, const AffineWeylElement& w, int i);

}  // namespace weyltile
