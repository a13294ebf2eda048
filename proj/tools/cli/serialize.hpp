#pragma once

#include <json.hpp>

#include "hermquad/motives.hpp"
#include "hermquad/poly.hpp"
#include "hermquad/quadforms.hpp"
#include "hermquad/rost.hpp"

// Machine-readable encodings of the library types. Key order is fixed
// (ordered_json) so that output is byte-stable.
namespace hermquad::cli {

using Json = nlohmann::ordered_json;

Json to_json(const BigInt& x);
/// Coefficient array, lowest degree first: [1,2,1] for 1 + 2t + t².
Json to_json(const IntPolynomial& p);
/// Sorted array of {base, params, shift}.
Json to_json(const MotiveExpression& e);
Json to_json(const VerificationReport& r);
Json to_json(const VishikReport& r);
Json to_json(const RostReport& r);
Json to_json(const Place& v);
Json to_json(const DiagonalQuadraticForm& q);
Json to_json(const Witness& w);
Json to_json(const MHReport& r);

}  // namespace hermquad::cli
