// JSON encodings. Rationals are canonical "p/q" strings with q > 0 and
// gcd(|p|,q) = 1; integer-typed fields are bare JSON numbers. Field order
// is fixed (insertion order) so output is deterministic and diffable.
#pragma once

#include "weyltile/deformed.hpp"
#include "weyltile/locate.hpp"
#include "weyltile/tiles.hpp"
#include "weyltile/verify.hpp"

#include <json.hpp>

namespace weyltile {

using Json = nlohmann::ordered_json;

Json json_rat(const Rat& r);
Json json_vec(const Vec& v);
Json json_mat(const Mat& m);
Json json_veci(const VecI& v);

Json json_root_system(const RootSystem& rs);
Json json_element(const RootSystem& rs, const AffineWeylElement& e);
Json json_tile(const RootSystem& rs, const Tile& t);
Json json_locate(const RootSystem& rs, const LocateResult& r);
Json json_deformed_location(const RootSystem& rs, const DeformedLocation& loc);
Json json_report(const VerificationReport& rep);
Json json_abs_det(const AbsDetReport& rep);

}  // namespace weyltile
