#pragma once

// JSON encodings. Rationals are strings "p/q"; decoders throw DecodeError on
// malformed or inconsistent input.

#include "dahakit/convolution.hpp"
#include "dahakit/daha.hpp"

#include <json.hpp>

#include <stdexcept>

namespace dahakit {

using Json = nlohmann::json;

struct DecodeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json to_json(const FinWeight& x);
Json to_json(const FinCoweight& y);
FinWeight fin_weight_from_json(const RootDatum& d, const Json& j);
FinCoweight fin_coweight_from_json(const RootDatum& d, const Json& j);

Json to_json(const AffWeight& xi);
Json to_json(const AffCoweight& eta);
AffWeight aff_weight_from_json(const RootDatum& d, const Json& j);
AffCoweight aff_coweight_from_json(const RootDatum& d, const Json& j);

Json to_json(const ExtWeylElt& a);
/// Accepts {"lambda", "w_perm"}, a bare {"lambda"} (translation) or a word
/// {"word": [...], "omega": id}.
ExtWeylElt ext_weyl_from_json(const AffineWeylGroup& g, const Json& j);

Json to_json(const CoxOmegaWord& w);

/// [{"mono": {"<variable>": exp, ..., "u": exp}, "coeff": "p/q"}]. Variable
/// "0" is Lambda_can, "1".."n" the simple roots, "n+1" is delta.
Json to_json(const AffPoly& p);
AffPoly aff_poly_from_json(const RootDatum& d, const Json& j);

/// [{"group": ExtWeylElt, "poly": AffPoly}].
Json to_json(const DahaElt& a);
DahaElt daha_from_json(const AffineWeylGroup& g, const Json& j);
/// [{"poly": AffPoly, "group": ExtWeylElt}], polynomial written first.
Json to_json(const LeftNormalForm& a);

Json to_json(const ParahoricType& p);
ParahoricType parahoric_from_json(const AffineWeylGroup& g, const Json& j);

/// {"P": [...], "Q": [...], "support": [{"rep": ExtWeylElt, "coeff": "p/q"}]}.
Json to_json(const DCosetFn& f);
DCosetFn dcoset_from_json(const ConvolutionAlgebra& conv, const Json& j);

}  // namespace dahakit
