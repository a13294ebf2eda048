#include "serialize.hpp"

#include <limits>

namespace hermquad::cli {

Json to_json(const BigInt& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(x);
  return x.str();
}

Json to_json(const IntPolynomial& p) {
  Json arr = Json::array();
  for (const auto& c : p.coefficients()) arr.push_back(to_json(c));
  return arr;
}

Json to_json(const MotiveExpression& e) {
  Json arr = Json::array();
  for (const auto& s : e.summands()) {
    Json rec;
    rec["base"] = base_name(s.base);
    rec["params"] = base_params(s.base);
    rec["shift"] = s.shift;
    arr.push_back(std::move(rec));
  }
  return arr;
}

Json to_json(const VerificationReport& r) {
  Json j;
  j["n"] = r.n;
  j["holds"] = r.holds;
  j["lhs"] = to_json(r.lhs);
  j["rhs"] = to_json(r.rhs);
  return j;
}

Json to_json(const VishikReport& r) {
  Json j;
  j["m"] = r.m;
  j["k"] = r.k;
  j["dim_q"] = r.dim_q;
  j["degenerate"] = r.degenerate;
  j["holds"] = r.holds ? Json(*r.holds) : Json(nullptr);
  j["exact_division"] = r.exact_division;
  j["nonnegative"] = r.nonnegative;
  j["p_n"] = r.exact_division ? to_json(r.p_n) : Json(nullptr);
  j["matches_nh"] = r.matches_nh ? Json(*r.matches_nh) : Json(nullptr);
  return j;
}

Json to_json(const RostReport& r) {
  Json j;
  j["n"] = r.n;
  j["dim_vh"] = r.dim_vh;
  j["eta2_parity"] = r.eta2_parity;
  j["is_power_case"] = r.is_power_case;
  j["point_gcd"] = r.point_gcd;
  j["verdict"] = to_string(r.verdict);
  return j;
}

Json to_json(const Place& v) { return to_string(v); }

Json to_json(const DiagonalQuadraticForm& q) {
  Json arr = Json::array();
  for (const auto& e : q.entries()) arr.push_back(e.value());
  return arr;
}

Json to_json(const Witness& w) {
  Json j;
  j["place"] = w.place ? to_json(*w.place) : Json("global");
  j["clause"] = w.clause;
  j["reason"] = w.reason;
  return j;
}

Json to_json(const MHReport& r) {
  Json j;
  j["dim_ok"] = r.dim_ok;
  j["hyperbolic_over_L"] = r.hyperbolic_over_L;
  j["det_ok"] = r.det_ok;
  j["passes"] = r.passes;
  Json ws = Json::array();
  for (const auto& w : r.witnesses) ws.push_back(to_json(w));
  j["witnesses"] = std::move(ws);
  return j;
}

}  // namespace hermquad::cli
