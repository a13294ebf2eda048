#include "command.hpp"

#include <charconv>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "hermquad/error.hpp"
#include "hermquad/motives.hpp"
#include "hermquad/poly.hpp"
#include "hermquad/rost.hpp"

namespace hermquad::cli {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// --- value parsing ----------------------------------------------------------

std::int64_t parse_int(const std::string& text, const std::string& flag) {
  std::int64_t v = 0;
  const char* first = text.data();
  const char* last = first + text.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last || first == last)
    throw UsageError(flag + ": '" + text + "' is not an integer");
  return v;
}

Rational parse_rational(const std::string& text, const std::string& flag) {
  const auto slash = text.find('/');
  const std::int64_t num = parse_int(text.substr(0, slash), flag);
  std::int64_t den = 1;
  if (slash != std::string::npos) den = parse_int(text.substr(slash + 1), flag);
  if (den == 0) throw UsageError(flag + ": zero denominator in '" + text + "'");
  if (num == 0) throw UsageError(flag + ": entries must be nonzero, got '" + text + "'");
  return Rational(num, den);
}

std::vector<Rational> parse_rational_list(const std::string& text, const std::string& flag) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw UsageError(flag + ": empty entry in '" + text + "'");
    out.push_back(parse_rational(item, flag));
  }
  if (out.empty()) throw UsageError(flag + ": at least one entry required");
  return out;
}

Range parse_range(const std::string& text, std::int64_t min, const std::string& flag) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw UsageError(flag + ": expected A..B, got '" + text + "'");
  Range r{parse_int(text.substr(0, dots), flag), parse_int(text.substr(dots + 2), flag)};
  if (r.from < min) throw UsageError(flag + ": lower bound must be >= " + std::to_string(min));
  if (r.from > r.to) throw UsageError(flag + ": empty range '" + text + "'");
  return r;
}

std::int64_t parse_place(const std::string& text) {
  if (text == "inf" || text == "real" || text == "oo") return 0;
  const std::int64_t p = parse_int(text, "--place");
  try {
    Place::prime(p);
  } catch (const Error&) {
    throw UsageError("--place: " + text + " is neither 'inf' nor a prime");
  }
  return p;
}

Place to_place(std::int64_t p) { return p == 0 ? Place::real() : Place::prime(p); }

Variety parse_variety(const std::string& text) {
  if (text == "quadric") return Variety::Quadric;
  if (text == "hermitian") return Variety::Hermitian;
  if (text == "projective") return Variety::Projective;
  throw UsageError("--variety: expected quadric, hermitian or projective, got '" + text + "'");
}

const char* variety_name(Variety v) {
  switch (v) {
    case Variety::Quadric: return "quadric";
    case Variety::Hermitian: return "hermitian";
    case Variety::Projective: return "projective";
  }
  return "";
}

void require_min(std::int64_t value, std::int64_t min, const std::string& flag) {
  if (value < min)
    throw UsageError(flag + ": must be >= " + std::to_string(min) + ", got " + std::to_string(value));
}

// Options shared by the "--n N | --range A..B" commands.
struct TargetOptions {
  std::string n;
  std::string range;

  void attach(CLI::App* sub, const std::string& n_flag = "--n") {
    sub->add_option(n_flag, n, "single rank");
    sub->add_option("--range", range, "inclusive sweep A..B");
  }

  Target resolve(std::int64_t min, const std::string& n_flag = "--n") const {
    if (n.empty() == range.empty())
      throw UsageError("exactly one of " + n_flag + " and --range is required");
    Target t;
    if (!n.empty()) {
      t.n = parse_int(n, n_flag);
      require_min(*t.n, min, n_flag);
    } else {
      t.range = parse_range(range, min, "--range");
    }
    return t;
  }
};

// --- output helpers ---------------------------------------------------------

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string residues_text(const std::vector<int>& rs) {
  std::string s = "{";
  for (std::size_t i = 0; i < rs.size(); ++i) s += (i ? "," : "") + std::to_string(rs[i]);
  return s + "}";
}

std::string rational_text(const Rational& r) {
  return r.denominator() == 1 ? std::to_string(r.numerator())
                              : std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Json rational_list(const std::vector<Rational>& xs) {
  Json arr = Json::array();
  for (const auto& x : xs) arr.push_back(rational_text(x));
  return arr;
}

struct SweepResult {
  Json payload;
  bool holds = true;
  std::string text;
};

// Runs check(n) for every n in the range; the first failing n (or the first
// library error) is reported as the counterexample.
template <class Check>
SweepResult sweep(const Range& r, Check&& check) {
  SweepResult out;
  std::optional<std::int64_t> counterexample;
  std::string failure;
  std::int64_t checked = 0;
  for (std::int64_t n = r.from; n <= r.to; ++n) {
    ++checked;
    try {
      if (!check(n)) {
        counterexample = n;
        failure = "identity fails";
      }
    } catch (const Error& e) {
      counterexample = n;
      failure = std::string(e.name());
    }
    if (counterexample) break;
  }
  out.holds = !counterexample.has_value();
  out.payload["from"] = r.from;
  out.payload["to"] = r.to;
  out.payload["checked"] = checked;
  out.payload["holds"] = out.holds;
  out.payload["first_counterexample"] = counterexample ? Json(*counterexample) : Json(nullptr);
  if (counterexample) out.payload["failure"] = failure;
  std::ostringstream os;
  os << "range " << r.from << ".." << r.to << ": "
     << (out.holds ? "holds for every value" : "FAILS at " + std::to_string(*counterexample) + " (" + failure + ")");
  out.text = os.str();
  return out;
}

OutputEnvelope from_sweep(OutputEnvelope env, SweepResult s) {
  env.status = s.holds ? Status::Ok : Status::Violated;
  env.payload = std::move(s.payload);
  env.text = std::move(s.text);
  return env;
}

// --- per-command execution --------------------------------------------------

OutputEnvelope run_poincare(const cmd::Poincare& c, OutputEnvelope env) {
  IntPolynomial p;
  switch (c.variety) {
    case Variety::Quadric: p = poincare_split_quadric(c.n); break;
    case Variety::Hermitian: p = poincare_split_hermitian(c.n); break;
    case Variety::Projective: p = poincare_projective(c.n, c.point_factor); break;
  }
  env.payload["variety"] = variety_name(c.variety);
  env.payload[c.variety == Variety::Projective ? "m" : "n"] = c.n;
  if (c.variety == Variety::Projective) env.payload["point_factor"] = c.point_factor;
  env.payload["coefficients"] = to_json(p);
  env.payload["degree"] = p.degree();
  env.payload["palindromic"] = p.is_palindromic();
  std::string text = "P(t) = " + to_string(p);
  if (c.at) {
    const BigInt value = evaluate(p, BigInt(*c.at));
    env.payload["at"] = *c.at;
    env.payload["value"] = to_json(value);
    text += "\nP(" + std::to_string(*c.at) + ") = " + value.str();
  }
  env.text = text;
  return env;
}

OutputEnvelope run_decompose(const cmd::MotiveDecompose& c, OutputEnvelope env) {
  MotiveExpression e;
  IntPolynomial closed;
  switch (c.variety) {
    case Variety::Quadric:
      e = decompose_quadric(c.n);
      closed = poincare_split_quadric(c.n);
      break;
    case Variety::Hermitian:
      e = decompose_hermitian(c.n);
      closed = poincare_split_hermitian(c.n);
      break;
    case Variety::Projective:
      e = expand_projective_bundle(c.n);
      closed = poincare_projective(c.n, 2);
      break;
  }
  const IntPolynomial realized = realize_split(e);
  const bool matches = realized == closed;
  env.status = matches ? Status::Ok : Status::Violated;
  env.payload["variety"] = variety_name(c.variety);
  env.payload[c.variety == Variety::Projective ? "m" : "n"] = c.n;
  env.payload["expression"] = to_json(e);
  env.payload["realization"] = to_json(realized);
  env.payload["closed_form"] = to_json(closed);
  env.payload["matches"] = matches;
  env.text = "M = " + to_string(e) + "\nP_L(t) = " + to_string(realized) +
             "\nmatches closed form: " + yes_no(matches);
  return env;
}

OutputEnvelope run_nh(const cmd::MotiveNh& c, OutputEnvelope env) {
  if (c.target.range) return from_sweep(std::move(env), sweep(*c.target.range, [](std::int64_t n) {
                                          const IntPolynomial p = solve_nh(n);
                                          return p.is_palindromic() && p.degree() == std::size_t(2 * n - 3);
                                        }));
  const std::int64_t n = *c.target.n;
  const IntPolynomial p = solve_nh(n);
  env.payload["n"] = n;
  env.payload["coefficients"] = to_json(p);
  env.payload["palindromic"] = p.is_palindromic();
  env.payload["nonnegative"] = p.has_nonnegative_coefficients();
  env.payload["value_at_1"] = to_json(evaluate(p, 1));
  env.text = "P_{N_h}(t) = " + to_string(p);
  return env;
}

OutputEnvelope run_krashen(const cmd::MotiveVerifyKrashen& c, OutputEnvelope env) {
  if (c.target.range)
    return from_sweep(std::move(env), sweep(*c.target.range, [](std::int64_t n) { return verify_krashen(n).holds; }));
  const VerificationReport r = verify_krashen(*c.target.n);
  env.status = r.holds ? Status::Ok : Status::Violated;
  env.payload = to_json(r);
  env.text = "LHS = " + to_string(r.lhs) + "\nRHS = " + to_string(r.rhs) + "\nholds: " + yes_no(r.holds);
  return env;
}

OutputEnvelope run_vishik(const cmd::MotiveVishik& c, OutputEnvelope env) {
  if (c.k.range) {
    SweepResult s = sweep(*c.k.range, [&](std::int64_t k) {
      const VishikReport r = vishik_solve(c.m, k);
      return r.degenerate || (r.holds.value_or(false) && r.matches_nh.value_or(true));
    });
    s.payload["m"] = c.m;
    return from_sweep(std::move(env), std::move(s));
  }
  const VishikReport r = vishik_solve(c.m, *c.k.n);
  const bool ok = r.degenerate || (r.holds.value_or(false) && r.matches_nh.value_or(true));
  env.status = ok ? Status::Ok : Status::Violated;
  env.payload = to_json(r);
  std::ostringstream os;
  os << "dim q = " << r.dim_q << "\n";
  os << "P_N(t) = " << (r.exact_division ? to_string(r.p_n) : std::string("(no exact quotient)")) << "\n";
  if (r.degenerate) {
    os << "degenerate case k = 1 (P_N = 0); not asserted";
  } else {
    os << "holds: " << yes_no(*r.holds);
  }
  if (r.matches_nh) os << "\nmatches N_h(" << r.k << "): " << yes_no(*r.matches_nh);
  env.text = os.str();
  return env;
}

OutputEnvelope run_eta2(const cmd::RostEta2& c, OutputEnvelope env) {
  if (c.target.range)
    return from_sweep(std::move(env), sweep(*c.target.range, [](std::int64_t n) { return congrel_equivalence(n); }));
  const std::int64_t n = *c.target.n;
  const bool congrel = congrel_equivalence(n);
  env.status = congrel ? Status::Ok : Status::Violated;
  env.payload["n"] = n;
  env.payload["eta2_parity"] = eta2_parity(n);
  env.payload["central_binom_valuation"] = central_binom_valuation(static_cast<std::uint64_t>(n - 1));
  env.payload["dim_vh"] = 2 * n - 3;
  env.payload["is_power_case"] = is_mersenne_dimension(2 * n - 3);
  env.payload["congrel_holds"] = congrel;
  env.text = "eta_2 = " + std::to_string(eta2_parity(n)) + " mod 2\ndim V(h) = " + std::to_string(2 * n - 3) +
             (is_mersenne_dimension(2 * n - 3) ? " (of the form 2^r - 1)" : "") +
             "\ncongruence criterion holds: " + yes_no(congrel);
  return env;
}

OutputEnvelope run_incompressible(const cmd::RostIncompressible& c, OutputEnvelope env) {
  std::int64_t n = c.n;
  bool anisotropic = c.anisotropic;
  if (c.space) {
    const HermitianSpace h(SquareClass::of(c.space->a), c.space->b);
    n = h.rank();
    if (n < 2) throw Error(Errc::InvalidRank, "a Hermitian quadric needs rank n >= 2");
    anisotropic = is_anisotropic_hermitian(h);
  }
  const RostReport r = incompressibility_verdict(n, anisotropic);
  env.payload = to_json(r);
  env.payload["anisotropic"] = anisotropic;
  env.text = "dim V(h) = " + std::to_string(r.dim_vh) + ", eta_2 = " + std::to_string(r.eta2_parity) +
             ", anisotropic: " + yes_no(anisotropic) + "\nverdict: " + to_string(r.verdict);
  return env;
}

OutputEnvelope run_degree_filter(const cmd::RostDegreeFilter& c, OutputEnvelope env) {
  if (c.target.range)
    return from_sweep(std::move(env), sweep(*c.target.range, [](std::int64_t n) {
                        const bool forced = degree_formula_filter(n) == std::vector<int>{1};
                        return forced == (eta2_parity(n) == 1);
                      }));
  const std::int64_t n = *c.target.n;
  const auto residues = degree_formula_filter(n);
  env.payload["n"] = n;
  env.payload["eta2_parity"] = eta2_parity(n);
  env.payload["point_gcd"] = 2;
  env.payload["residues"] = residues;
  env.text = "deg f mod 2 in " + residues_text(residues) +
             (residues == std::vector<int>{1} ? " (every rational self-map is dominant)" : "");
  return env;
}

OutputEnvelope run_trace(const cmd::FormTrace& c, OutputEnvelope env) {
  const HermitianSpace h(SquareClass::of(c.space.a), c.space.b);
  const DiagonalQuadraticForm q = trace_form(h);
  env.payload["a"] = h.a().value();
  env.payload["b"] = rational_list(h.entries());
  env.payload["q"] = to_json(q);
  env.text = "q = " + to_string(q);
  return env;
}

OutputEnvelope run_det(const cmd::FormDet& c, OutputEnvelope env) {
  const auto q = DiagonalQuadraticForm::from_rationals(c.q);
  const SquareClass d = determinant_class(q);
  env.payload["q"] = to_json(q);
  env.payload["det"] = d.value();
  env.text = "det " + to_string(q) + " = " + std::to_string(d.value()) + " mod squares";
  return env;
}

OutputEnvelope run_hilbert(const cmd::FormHilbert& c, OutputEnvelope env) {
  const SquareClass x = SquareClass::of(c.x);
  const SquareClass y = SquareClass::of(c.y);
  env.payload["x"] = x.value();
  env.payload["y"] = y.value();
  if (c.place) {
    const Place v = to_place(*c.place);
    const int s = hilbert_symbol(x, y, v);
    env.payload["place"] = to_json(v);
    env.payload["symbol"] = s;
    env.text = "(" + std::to_string(x.value()) + ", " + std::to_string(y.value()) + ")_" + to_string(v) + " = " +
               std::to_string(s);
    return env;
  }
  Json symbols = Json::array();
  int product = 1;
  std::ostringstream os;
  for (const auto& v : relevant_places(DiagonalQuadraticForm({x, y}))) {
    const int s = hilbert_symbol(x, y, v);
    product *= s;
    symbols.push_back(Json{{"place", to_json(v)}, {"symbol", s}});
    os << "(" << x.value() << ", " << y.value() << ")_" << to_string(v) << " = " << s << "\n";
  }
  env.payload["symbols"] = std::move(symbols);
  env.payload["product"] = product;
  os << "product over places = " << product;
  env.text = os.str();
  return env;
}

OutputEnvelope run_hasse(const cmd::FormHasse& c, OutputEnvelope env) {
  const auto q = DiagonalQuadraticForm::from_rationals(c.q);
  env.payload["q"] = to_json(q);
  if (c.place) {
    const Place v = to_place(*c.place);
    const int s = hasse_invariant(q, v);
    env.payload["place"] = to_json(v);
    env.payload["hasse"] = s;
    env.text = "s_" + to_string(v) + "(" + to_string(q) + ") = " + std::to_string(s);
    return env;
  }
  Json locals = Json::array();
  std::ostringstream os;
  for (const auto& v : relevant_places(q)) {
    const int s = hasse_invariant(q, v);
    locals.push_back(Json{{"place", to_json(v)}, {"hasse", s}});
    os << "s_" << to_string(v) << " = " << s << "\n";
  }
  env.payload["local"] = std::move(locals);
  env.text = os.str();
  if (!env.text.empty()) env.text.pop_back();
  return env;
}

OutputEnvelope run_witt(const cmd::FormWittIndex& c, OutputEnvelope env) {
  const auto q = DiagonalQuadraticForm::from_rationals(c.q);
  env.payload["q"] = to_json(q);
  if (c.place) {
    const Place v = to_place(*c.place);
    const LocalWittData d = local_witt_decomposition(q, v);
    env.payload["place"] = to_json(v);
    env.payload["witt_index"] = d.witt_index;
    env.payload["anisotropic_dim"] = d.anisotropic_dim;
    env.text = "Witt index over Q_" + to_string(v) + ": " + std::to_string(d.witt_index) +
               " (anisotropic part of dimension " + std::to_string(d.anisotropic_dim) + ")";
    return env;
  }
  Json locals = Json::array();
  std::ostringstream os;
  for (const auto& v : relevant_places(q)) {
    const std::int64_t i = local_witt_index(q, v);
    locals.push_back(Json{{"place", to_json(v)}, {"witt_index", i}});
    os << "local index at " << to_string(v) << ": " << i << "\n";
  }
  const std::int64_t global = global_witt_index(q);
  env.payload["local"] = std::move(locals);
  env.payload["witt_index"] = global;
  env.payload["isotropic"] = global >= 1;
  os << "global Witt index: " << global;
  env.text = os.str();
  return env;
}

OutputEnvelope run_isotropic(const cmd::FormIsotropic& c, OutputEnvelope env) {
  if (c.space) {
    const HermitianSpace h(SquareClass::of(c.space->a), c.space->b);
    const bool aniso = is_anisotropic_hermitian(h);
    env.payload["a"] = h.a().value();
    env.payload["b"] = rational_list(h.entries());
    env.payload["trace_form"] = to_json(trace_form(h));
    env.payload["anisotropic"] = aniso;
    env.text = std::string("h is ") + (aniso ? "anisotropic" : "isotropic");
    return env;
  }
  const auto q = DiagonalQuadraticForm::from_rationals(*c.q);
  const bool iso = is_isotropic_global(q);
  env.payload["q"] = to_json(q);
  env.payload["isotropic"] = iso;
  env.text = to_string(q) + " is " + (iso ? "isotropic" : "anisotropic") + " over Q";
  return env;
}

Json witness_list(const std::vector<Witness>& ws) {
  Json arr = Json::array();
  for (const auto& w : ws) arr.push_back(to_json(w));
  return arr;
}

std::string witness_text(const std::vector<Witness>& ws) {
  std::string s;
  for (const auto& w : ws)
    s += "\n  [" + (w.place ? to_string(*w.place) : std::string("global")) + "] " + w.clause + ": " + w.reason;
  return s;
}

OutputEnvelope run_hyperbolic(const cmd::FormHyperbolicOver& c, OutputEnvelope env) {
  const auto q = DiagonalQuadraticForm::from_rationals(c.q);
  const SquareClass a = SquareClass::of(c.a);
  const HyperbolicityReport r = hyperbolicity_over_extension(q, a);
  env.payload["q"] = to_json(q);
  env.payload["a"] = a.value();
  env.payload["hyperbolic"] = r.hyperbolic;
  env.payload["witnesses"] = witness_list(r.witnesses);
  env.text = to_string(q) + (r.hyperbolic ? " is" : " is not") + " hyperbolic over Q(sqrt " +
             std::to_string(a.value()) + ")" + witness_text(r.witnesses);
  return env;
}

OutputEnvelope run_check_mh(const cmd::FormCheckMh& c, OutputEnvelope env) {
  const auto q = DiagonalQuadraticForm::from_rationals(c.q);
  const MHReport r = milnor_husemoller_check(q, SquareClass::of(c.a));
  env.status = r.passes ? Status::Ok : Status::Violated;
  env.payload = to_json(r);
  env.text = "dim even: " + yes_no(r.dim_ok) + "\nhyperbolic over L: " + yes_no(r.hyperbolic_over_L) +
             "\ndet = (-a)^n: " + yes_no(r.det_ok) + "\npasses: " + yes_no(r.passes) + witness_text(r.witnesses);
  return env;
}

OutputEnvelope run_essdim(const cmd::EssDim& c, OutputEnvelope env) {
  const std::int64_t i1 = c.i1 ? *c.i1 : first_witt_index_special(2 * c.n);
  const std::int64_t d = essential_dimension(c.n, i1);
  env.payload["n"] = c.n;
  env.payload["i1"] = i1;
  env.payload["dim_vh"] = 2 * c.n - 3;
  env.payload["essential_dimension"] = d;
  env.payload["equals_dim_vh"] = d == 2 * c.n - 3;
  env.text = "dim_es(h) = " + std::to_string(d) + " (dim V(h) = " + std::to_string(2 * c.n - 3) + ")";
  return env;
}

OutputEnvelope run_first_witt(const cmd::FirstWittSpecial& c, OutputEnvelope env) {
  const std::int64_t i1 = first_witt_index_special(c.dim_q);
  env.payload["dim_q"] = c.dim_q;
  env.payload["first_witt_index"] = i1;
  env.text = "i_1 = " + std::to_string(i1);
  return env;
}

}  // namespace

std::string command_name(const Command& c) {
  return std::visit(overloaded{
                        [](const cmd::Poincare&) { return "poincare"; },
                        [](const cmd::MotiveDecompose&) { return "motive decompose"; },
                        [](const cmd::MotiveNh&) { return "motive nh"; },
                        [](const cmd::MotiveVerifyKrashen&) { return "motive verify-krashen"; },
                        [](const cmd::MotiveVishik&) { return "motive vishik"; },
                        [](const cmd::RostEta2&) { return "rost eta2"; },
                        [](const cmd::RostIncompressible&) { return "rost incompressible"; },
                        [](const cmd::RostDegreeFilter&) { return "rost degree-filter"; },
                        [](const cmd::FormTrace&) { return "form trace"; },
                        [](const cmd::FormDet&) { return "form det"; },
                        [](const cmd::FormHilbert&) { return "form hilbert"; },
                        [](const cmd::FormHasse&) { return "form hasse"; },
                        [](const cmd::FormWittIndex&) { return "form witt-index"; },
                        [](const cmd::FormIsotropic&) { return "form isotropic"; },
                        [](const cmd::FormHyperbolicOver&) { return "form hyperbolic-over"; },
                        [](const cmd::FormCheckMh&) { return "form check-mh"; },
                        [](const cmd::EssDim&) { return "essdim"; },
                        [](const cmd::FirstWittSpecial&) { return "first-witt-special"; },
                    },
                    c);
}

Invocation parse_command(const std::vector<std::string>& argv) {
  CLI::App app{"Invariants of Hermitian quadrics over Q", "hermquad"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "machine-readable output")->configurable(false);
  // Accept --json after the subcommand as well.
  app.fallthrough();

  // poincare
  auto* poincare = app.add_subcommand("poincare", "split Poincaré polynomial");
  std::string p_variety, p_n, p_m, p_at;
  int p_point_factor = 2;
  poincare->add_option("--variety", p_variety, "quadric | hermitian | projective")->required();
  poincare->add_option("--n", p_n, "rank of the Hermitian space (>= 2)");
  poincare->add_option("--m", p_m, "dimension of the projective space (>= 0)");
  poincare->add_option("--point-factor", p_point_factor, "1 (rational point) or 2 (Spec L)")
      ->check(CLI::IsMember({1, 2}));
  poincare->add_option("--at", p_at, "also evaluate at this integer");

  // motive
  auto* motive = app.add_subcommand("motive", "motivic decompositions");
  motive->require_subcommand(1);
  auto* m_decompose = motive->add_subcommand("decompose", "decomposition of M(V(q)), M(V(h)) or M(P_L^m)");
  std::string md_variety, md_n, md_m;
  m_decompose->add_option("--variety", md_variety, "quadric | hermitian | projective")->required();
  m_decompose->add_option("--n", md_n, "rank (>= 2)");
  m_decompose->add_option("--m", md_m, "projective dimension (>= 0)");
  auto* m_nh = motive->add_subcommand("nh", "Poincaré polynomial of N_h");
  TargetOptions nh_target;
  nh_target.attach(m_nh);
  auto* m_krashen = motive->add_subcommand("verify-krashen", "check the relation between M(V(q)) and M(V(h))");
  TargetOptions kr_target;
  kr_target.attach(m_krashen);
  auto* m_vishik = motive->add_subcommand("vishik", "summand N for a form divisible by an m-fold Pfister form");
  std::string vi_m;
  TargetOptions vi_target;
  m_vishik->add_option("--m", vi_m, "Pfister fold (>= 1)")->required();
  vi_target.attach(m_vishik, "--k");

  // rost
  auto* rost = app.add_subcommand("rost", "Rost number and incompressibility");
  rost->require_subcommand(1);
  auto* r_eta2 = rost->add_subcommand("eta2", "parity of the Rost number");
  TargetOptions eta_target;
  eta_target.attach(r_eta2);
  auto* r_inc = rost->add_subcommand("incompressible", "incompressibility verdict");
  std::string ri_n, ri_a, ri_b;
  bool ri_aniso = false, ri_iso = false;
  r_inc->add_option("--n", ri_n, "rank (>= 2)");
  r_inc->add_flag("--anisotropic", ri_aniso, "assume h anisotropic");
  r_inc->add_flag("--isotropic", ri_iso, "assume h isotropic");
  r_inc->add_option("--a", ri_a, "decide anisotropy from the space: L = Q(sqrt a)");
  r_inc->add_option("--bdiag", ri_b, "diagonal Hermitian entries b_1,...,b_n");
  auto* r_deg = rost->add_subcommand("degree-filter", "degrees of rational self-maps allowed by the degree formula");
  TargetOptions deg_target;
  deg_target.attach(r_deg);

  // form
  auto* form = app.add_subcommand("form", "quadratic forms over Q");
  form->require_subcommand(1);
  auto* f_trace = form->add_subcommand("trace", "trace form of a Hermitian space");
  std::string ft_a, ft_b;
  f_trace->add_option("--a", ft_a, "L = Q(sqrt a)")->required();
  f_trace->add_option("--bdiag", ft_b, "b_1,...,b_n")->required();
  auto* f_det = form->add_subcommand("det", "determinant square class");
  std::string fd_q;
  f_det->add_option("--qdiag", fd_q, "a_1,...,a_d")->required();
  auto* f_hilbert = form->add_subcommand("hilbert", "Hilbert symbol");
  std::string fh_x, fh_y, fh_place;
  f_hilbert->add_option("--x", fh_x)->required();
  f_hilbert->add_option("--y", fh_y)->required();
  f_hilbert->add_option("--place", fh_place, "inf or a prime; all relevant places if omitted");
  auto* f_hasse = form->add_subcommand("hasse", "Hasse invariant prod_{i<j} (a_i,a_j)_v");
  std::string fs_q, fs_place;
  f_hasse->add_option("--qdiag", fs_q)->required();
  f_hasse->add_option("--place", fs_place, "inf or a prime; all relevant places if omitted");
  auto* f_witt = form->add_subcommand("witt-index", "local or global Witt index");
  std::string fw_q, fw_place;
  f_witt->add_option("--qdiag", fw_q)->required();
  f_witt->add_option("--place", fw_place, "inf or a prime; global index if omitted");
  auto* f_iso = form->add_subcommand("isotropic", "isotropy of a form, or of a Hermitian space");
  std::string fi_q, fi_a, fi_b;
  f_iso->add_option("--qdiag", fi_q);
  f_iso->add_option("--a", fi_a);
  f_iso->add_option("--bdiag", fi_b);
  auto* f_hyp = form->add_subcommand("hyperbolic-over", "hyperbolicity over Q(sqrt a)");
  std::string fy_q, fy_a;
  f_hyp->add_option("--qdiag", fy_q)->required();
  f_hyp->add_option("--a", fy_a)->required();
  auto* f_mh = form->add_subcommand("check-mh", "Milnor-Husemoller criterion");
  std::string fm_q, fm_a, fm_b;
  f_mh->add_option("--qdiag", fm_q);
  f_mh->add_option("--bdiag", fm_b, "use the trace form of <b_1,...,b_n> instead of --qdiag");
  f_mh->add_option("--a", fm_a)->required();

  auto* essdim = app.add_subcommand("essdim", "essential dimension of a Hermitian space");
  std::string ed_n, ed_i1;
  essdim->add_option("--n", ed_n, "rank (>= 2)")->required();
  essdim->add_option("--i1", ed_i1, "first Witt index of the trace form; derived for dim q = 2^r + 2 if omitted");

  auto* fws = app.add_subcommand("first-witt-special", "first Witt index for dim q = 2^r + 2");
  std::string fw_dim;
  fws->add_option("--dim", fw_dim, "dimension of the trace form")->required();

  for (auto* sub : {poincare, m_decompose, m_nh, m_krashen, m_vishik, r_eta2, r_inc, r_deg, f_trace, f_det,
                    f_hilbert, f_hasse, f_witt, f_iso, f_hyp, f_mh, essdim, fws}) {
    sub->add_flag("--json", json, "machine-readable output");
  }

  std::vector<std::string> reversed(argv.rbegin(), argv.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested(app.help());
  } catch (const CLI::CallForAllHelp&) {
    throw HelpRequested(app.help("", CLI::AppFormatMode::All));
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  Invocation inv;
  inv.json = json;

  auto rank = [](const std::string& s, const std::string& flag, std::int64_t min) {
    if (s.empty()) throw UsageError(flag + " is required");
    const std::int64_t v = parse_int(s, flag);
    require_min(v, min, flag);
    return v;
  };
  auto hermitian = [](const std::string& a, const std::string& b) {
    HermitianInput h{parse_rational(a, "--a"), parse_rational_list(b, "--bdiag")};
    if (SquareClass::of(h.a).is_trivial()) throw UsageError("--a: " + a + " is a square; Q(sqrt a) is not a field");
    return h;
  };
  auto extension = [](const std::string& a) {
    const Rational r = parse_rational(a, "--a");
    if (SquareClass::of(r).is_trivial()) throw UsageError("--a: " + a + " is a square; Q(sqrt a) is not a field");
    return r;
  };
  auto place = [](const std::string& s) {
    return s.empty() ? std::optional<std::int64_t>{} : std::optional<std::int64_t>{parse_place(s)};
  };

  if (poincare->parsed()) {
    cmd::Poincare c;
    c.variety = parse_variety(p_variety);
    if (c.variety == Variety::Projective) {
      if (!p_n.empty()) throw UsageError("--n: use --m for projective space");
      c.n = rank(p_m, "--m", 0);
      c.point_factor = p_point_factor;
    } else {
      if (!p_m.empty()) throw UsageError("--m: only valid with --variety projective");
      c.n = rank(p_n, "--n", 2);
    }
    if (!p_at.empty()) c.at = parse_int(p_at, "--at");
    inv.command = c;
  } else if (m_decompose->parsed()) {
    cmd::MotiveDecompose c;
    c.variety = parse_variety(md_variety);
    c.n = c.variety == Variety::Projective ? rank(md_m, "--m", 0) : rank(md_n, "--n", 2);
    inv.command = c;
  } else if (m_nh->parsed()) {
    inv.command = cmd::MotiveNh{nh_target.resolve(2)};
  } else if (m_krashen->parsed()) {
    inv.command = cmd::MotiveVerifyKrashen{kr_target.resolve(2)};
  } else if (m_vishik->parsed()) {
    inv.command = cmd::MotiveVishik{rank(vi_m, "--m", 1), vi_target.resolve(1, "--k")};
  } else if (r_eta2->parsed()) {
    inv.command = cmd::RostEta2{eta_target.resolve(2)};
  } else if (r_inc->parsed()) {
    cmd::RostIncompressible c;
    const bool from_space = !ri_a.empty() || !ri_b.empty();
    if (from_space) {
      if (ri_a.empty() || ri_b.empty()) throw UsageError("--a and --bdiag must be given together");
      if (!ri_n.empty() || ri_aniso || ri_iso)
        throw UsageError("--a/--bdiag cannot be combined with --n, --anisotropic or --isotropic");
      c.space = hermitian(ri_a, ri_b);
      if (c.space->b.size() < 2) throw UsageError("--bdiag: rank n must be >= 2");
    } else {
      if (ri_aniso == ri_iso) throw UsageError("exactly one of --anisotropic and --isotropic is required");
      c.n = rank(ri_n, "--n", 2);
      c.anisotropic = ri_aniso;
    }
    inv.command = c;
  } else if (r_deg->parsed()) {
    inv.command = cmd::RostDegreeFilter{deg_target.resolve(2)};
  } else if (f_trace->parsed()) {
    inv.command = cmd::FormTrace{hermitian(ft_a, ft_b)};
  } else if (f_det->parsed()) {
    inv.command = cmd::FormDet{parse_rational_list(fd_q, "--qdiag")};
  } else if (f_hilbert->parsed()) {
    inv.command = cmd::FormHilbert{parse_rational(fh_x, "--x"), parse_rational(fh_y, "--y"), place(fh_place)};
  } else if (f_hasse->parsed()) {
    inv.command = cmd::FormHasse{parse_rational_list(fs_q, "--qdiag"), place(fs_place)};
  } else if (f_witt->parsed()) {
    inv.command = cmd::FormWittIndex{parse_rational_list(fw_q, "--qdiag"), place(fw_place)};
  } else if (f_iso->parsed()) {
    cmd::FormIsotropic c;
    if (!fi_q.empty()) {
      if (!fi_a.empty() || !fi_b.empty()) throw UsageError("--qdiag cannot be combined with --a/--bdiag");
      c.q = parse_rational_list(fi_q, "--qdiag");
    } else {
      if (fi_a.empty() || fi_b.empty()) throw UsageError("either --qdiag or both --a and --bdiag are required");
      c.space = hermitian(fi_a, fi_b);
    }
    inv.command = c;
  } else if (f_hyp->parsed()) {
    inv.command = cmd::FormHyperbolicOver{parse_rational_list(fy_q, "--qdiag"), extension(fy_a)};
  } else if (f_mh->parsed()) {
    cmd::FormCheckMh c;
    c.a = extension(fm_a);
    if (fm_q.empty() == fm_b.empty()) throw UsageError("exactly one of --qdiag and --bdiag is required");
    if (!fm_q.empty()) {
      c.q = parse_rational_list(fm_q, "--qdiag");
    } else {
      const auto tf = trace_form(HermitianSpace(SquareClass::of(c.a), parse_rational_list(fm_b, "--bdiag")));
      for (const auto& e : tf.entries()) c.q.emplace_back(e.value());
    }
    inv.command = c;
  } else if (essdim->parsed()) {
    cmd::EssDim c;
    c.n = rank(ed_n, "--n", 2);
    if (!ed_i1.empty()) c.i1 = rank(ed_i1, "--i1", 1);
    inv.command = c;
  } else if (fws->parsed()) {
    const std::int64_t dim = rank(fw_dim, "--dim", 4);
    if (dim % 2 != 0) throw UsageError("--dim: must be even, got " + fw_dim);
    inv.command = cmd::FirstWittSpecial{dim};
  } else {
    throw UsageError("a subcommand is required");
  }
  return inv;
}

const char* to_string(Status s) noexcept {
  switch (s) {
    case Status::Ok: return "ok";
    case Status::Violated: return "violated";
    case Status::Error: return "error";
  }
  return "error";
}

int exit_code(Status s) noexcept {
  switch (s) {
    case Status::Ok: return 0;
    case Status::Violated: return 1;
    case Status::Error: return 2;
  }
  return 2;
}

Json to_json(const OutputEnvelope& e) {
  Json j;
  j["command"] = e.command;
  j["status"] = to_string(e.status);
  j["payload"] = e.payload;
  j["version"] = e.version;
  return j;
}

OutputEnvelope execute(const Command& c) {
  OutputEnvelope env;
  env.command = command_name(c);
  env.payload = Json::object();
  try {
    return std::visit(overloaded{
                          [&](const cmd::Poincare& x) { return run_poincare(x, env); },
                          [&](const cmd::MotiveDecompose& x) { return run_decompose(x, env); },
                          [&](const cmd::MotiveNh& x) { return run_nh(x, env); },
                          [&](const cmd::MotiveVerifyKrashen& x) { return run_krashen(x, env); },
                          [&](const cmd::MotiveVishik& x) { return run_vishik(x, env); },
                          [&](const cmd::RostEta2& x) { return run_eta2(x, env); },
                          [&](const cmd::RostIncompressible& x) { return run_incompressible(x, env); },
                          [&](const cmd::RostDegreeFilter& x) { return run_degree_filter(x, env); },
                          [&](const cmd::FormTrace& x) { return run_trace(x, env); },
                          [&](const cmd::FormDet& x) { return run_det(x, env); },
                          [&](const cmd::FormHilbert& x) { return run_hilbert(x, env); },
                          [&](const cmd::FormHasse& x) { return run_hasse(x, env); },
                          [&](const cmd::FormWittIndex& x) { return run_witt(x, env); },
                          [&](const cmd::FormIsotropic& x) { return run_isotropic(x, env); },
                          [&](const cmd::FormHyperbolicOver& x) { return run_hyperbolic(x, env); },
                          [&](const cmd::FormCheckMh& x) { return run_check_mh(x, env); },
                          [&](const cmd::EssDim& x) { return run_essdim(x, env); },
                          [&](const cmd::FirstWittSpecial& x) { return run_first_witt(x, env); },
                      },
                      c);
  } catch (const Error& e) {
    env.status = Status::Error;
    env.payload = Json{{"error", std::string(e.name())}, {"message", e.what()}};
    env.text = std::string("error: ") + e.what();
    return env;
  }
}

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  Invocation inv;
  try {
    inv = parse_command(argv);
  } catch (const HelpRequested& h) {
    out << h.what();
    return 0;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  const OutputEnvelope env = execute(inv.command);
  if (inv.json) {
    out << to_json(env).dump() << "\n";
    if (env.status == Status::Error) err << env.text << "\n";
  } else if (env.status == Status::Error) {
    err << env.text << "\n";
  } else {
    out << env.text << "\n";
    if (env.status == Status::Violated) out << "status: violated\n";
  }
  return exit_code(env.status);
}

}  // namespace hermquad::cli
