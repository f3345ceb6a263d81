#include <bbscheme.h>

#include <algorithm>
#include <cctype>
#include <optional>
#include <string>

#include <json.hpp>

#include "borderscheme/border_scheme.hpp"
#include "gbengine/ideal.hpp"
#include "gbscheme/gb_scheme.hpp"
#include "orderideal/order_ideal.hpp"
#include "polycore/division.hpp"
#include "polycore/errors.hpp"
#include "polycore/polyio.hpp"

using Json = nlohmann::ordered_json;

namespace {

using namespace bbs;
using gbengine::Ideal;
using orderideal::OrderIdealData;
using polycore::Polynomial;
using polycore::TermOrdering;
using polycore::UniversePtr;
using polycore::VariableUniverse;

}  // namespace

struct bbs_session {
  std::optional<OrderIdealData> O;
  TermOrdering::Kind kind = TermOrdering::Kind::DegRevLex;
  bbs_format format = BBS_FORMAT_TEXT;
  gbengine::GbOptions gb;
  std::string error;
};

struct bbs_result {
  std::string text;
};

namespace {

// Raised for API misuse; maps to BBS_INVALID_ARGUMENT.
struct InvalidArgument : Error {
  using Error::Error;
};

std::string require_text(const char* s, const char* what) {
  if (!s) throw InvalidArgument(std::string(what) + " is required");
  return s;
}

const OrderIdealData& require_O(const bbs_session* s) {
  if (!s->O) throw InvalidArgument("no order ideal set");
  return *s->O;
}

TermOrdering sigma_of(const bbs_session* s, const UniversePtr& u) { return TermOrdering::of_kind(s->kind, u); }

// Number of x-variables named in `text`: x, y, z or x1..xn.
size_t infer_nvars(const std::string& text) {
  size_t n = 0;
  bool indexed = false;
  for (const std::string& name : polycore::scan_variables(text)) {
    if (name == "x" || name == "y" || name == "z") {
      n = std::max(n, std::string("xyz").find(name) + 1);
    } else if (name.size() > 1 && name[0] == 'x' &&
               std::all_of(name.begin() + 1, name.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      n = std::max(n, static_cast<size_t>(std::stoul(name.substr(1))));
      indexed = true;
    } else {
      throw ParseError("unknown variable '" + name + "' (expected x, y, z or x1..xn)");
    }
  }
  if (indexed && n <= 3) throw ParseError("names x1..xn are for n > 3 variables; use x, y, z");
  return std::max<size_t>(n, 1);
}

UniversePtr x_universe(const std::string& text, unsigned nvars) {
  size_t n = nvars ? nvars : infer_nvars(text);
  return VariableUniverse::make(VariableUniverse::default_x_names(n));
}

Json strings(const std::vector<Polynomial>& ps) {
  Json a = Json::array();
  for (const auto& p : ps) a.push_back(polycore::format_polynomial(p));
  return a;
}

Json terms_json(const std::vector<polycore::Term>& ts, const VariableUniverse& u) {
  Json a = Json::array();
  for (const auto& t : ts) a.push_back(polycore::format_term(t, u));
  return a;
}

Json names_json(const std::vector<polycore::CIndex>& ks) {
  Json a = Json::array();
  for (auto k : ks) a.push_back(polycore::c_name(k));
  return a;
}

Json weight_map(const std::map<polycore::CIndex, std::int64_t>& w) {
  Json o = Json::object();
  for (auto [k, v] : w) o[polycore::c_name(k)] = v;
  return o;
}

Json point_doc(const borderscheme::SchemePoint& p) {
  Json o = Json::object();
  nlohmann::json j = borderscheme::point_to_json(p);
  for (auto& [k, v] : j["c"].items()) o[k] = v;
  return Json{{"c", o}};
}

borderscheme::SchemePoint parse_point(const char* text, const OrderIdealData& O) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(require_text(text, "point"));
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("point JSON: ") + e.what());
  }
  return borderscheme::point_from_json(j, O.mu(), O.nu());
}

Json describe_O(const OrderIdealData& O) {
  const auto& u = *O.universe();
  return Json{{"order_ideal", terms_json(O.terms(), u)},
              {"mu", O.mu()},
              {"nu", O.nu()},
              {"eta", O.eta()},
              {"border", terms_json(O.border(), u)},
              {"corners", terms_json(O.corners(), u)}};
}

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
  if (v.is_null()) return "none";
  return v.dump();
}

bool all_scalars(const Json& a) {
  return std::all_of(a.begin(), a.end(), [](const Json& v) { return !v.is_structured(); });
}

// Scalars on one line; long lists and objects one entry per line.
void render_text(const Json& doc, std::string& out, const std::string& indent = "") {
  for (auto& [key, v] : doc.items()) {
    if (v.is_array() && all_scalars(v)) {
      std::string line;
      for (size_t k = 0; k < v.size(); ++k) line += (k ? ", " : "") + scalar_text(v[k]);
      if (v.empty()) {
        out += indent + key + ": (none)\n";
      } else if (line.size() <= 72 || v.size() == 1) {
        out += indent + key + ": " + line + "\n";
      } else {
        out += indent + key + ":\n";
        for (const auto& e : v) out += indent + "  " + scalar_text(e) + "\n";
      }
    } else if (v.is_array()) {
      out += indent + key + ":\n";
      for (const auto& e : v) {
        if (e.is_object()) {
          std::string sub;
          render_text(e, sub, indent + "    ");
          sub.replace(indent.size() + 2, 2, "- ");
          out += sub;
        } else {
          out += indent + "  " + scalar_text(e) + "\n";
        }
      }
    } else if (v.is_object()) {
      out += indent + key + ":\n";
      render_text(v, out, indent + "  ");
    } else {
      out += indent + key + ": " + scalar_text(v) + "\n";
    }
  }
}

bbs_result* make_result(const bbs_session* s, const Json& doc) {
  auto* r = new bbs_result;
  if (s->format == BBS_FORMAT_JSON) {
    r->text = doc.dump(2) + "\n";
  } else {
    render_text(doc, r->text);
  }
  return r;
}

template <class F>
bbs_status guarded(bbs_session* s, F&& body) {
  if (!s) return BBS_INVALID_ARGUMENT;
  s->error.clear();
  try {
    return body();
  } catch (const InvalidArgument& e) {
    s->error = e.what();
    return BBS_INVALID_ARGUMENT;
  } catch (const PreconditionError& e) {
    s->error = e.what();
    return BBS_PRECONDITION;
  } catch (const OrderingDomainError& e) {
    s->error = e.what();
    return BBS_PRECONDITION;
  } catch (const ResourceLimit& e) {
    s->error = e.what();
    return BBS_RESOURCE_LIMIT;
  } catch (const ParseError& e) {
    s->error = e.what();
    return BBS_PARSE_ERROR;
  } catch (const UniverseMismatch& e) {
    s->error = e.what();
    return BBS_PARSE_ERROR;
  } catch (const std::exception& e) {
    s->error = std::string("internal error: ") + e.what();
    return BBS_INTERNAL;
  }
}

// Runs a command that fills `doc` and reports whether its checks held.
template <class F>
bbs_status command(bbs_session* s, bbs_result** out, F&& body) {
  if (out) *out = nullptr;
  return guarded(s, [&] {
    if (!out) throw InvalidArgument("result pointer is required");
    Json doc = Json::object();
    bool ok = body(doc);
    *out = make_result(s, doc);
    return ok ? BBS_OK : BBS_CHECK_FAILED;
  });
}

// Reduced basis of a W-homogeneous ideal over gb_scheme_universe.
Ideal reduced(const Ideal& I, const gbscheme::WeightSystem& ws, const gbengine::GbOptions& opts) {
  auto ord = gbscheme::w_graded_ordering(I.universe(), gbscheme::w_vector(I.universe(), ws));
  return Ideal(I.universe(), gbengine::groebner_basis(I, ord, opts).polys);
}

polycore::DivisorSelection parse_reducer(const char* name) {
  std::string r = name ? name : "first";
  if (r == "first") return polycore::DivisorSelection::First;
  if (r == "last") return polycore::DivisorSelection::Last;
  throw InvalidArgument("unknown reducer '" + r + "' (expected first or last)");
}

}  // namespace

extern "C" {

const char* bbs_status_name(bbs_status status) {
  switch (status) {
    case BBS_OK: return "ok";
    case BBS_CHECK_FAILED: return "check failed";
    case BBS_PRECONDITION: return "precondition violated";
    case BBS_RESOURCE_LIMIT: return "resource limit";
    case BBS_PARSE_ERROR: return "parse error";
    case BBS_INTERNAL: return "internal error";
    case BBS_INVALID_ARGUMENT: return "invalid argument";
  }
  return "unknown status";
}

const char* bbs_version(void) { return "1.0.0"; }

bbs_status bbs_session_new(bbs_session** out) {
  if (!out) return BBS_INVALID_ARGUMENT;
  *out = new (std::nothrow) bbs_session;
  return *out ? BBS_OK : BBS_INTERNAL;
}

void bbs_session_free(bbs_session* session) { delete session; }

const char* bbs_session_error(const bbs_session* session) { return session ? session->error.c_str() : "null session"; }

bbs_status bbs_session_set_order_ideal(bbs_session* session, const char* terms, unsigned nvars) {
  return guarded(session, [&] {
    std::string text = require_text(terms, "order ideal");
    auto u = x_universe(text, nvars);
    session->O = orderideal::validate_order_ideal(u, orderideal::parse_order_ideal(text, u));
    return BBS_OK;
  });
}

bbs_status bbs_session_set_ordering(bbs_session* session, const char* name) {
  return guarded(session, [&] {
    session->kind = polycore::parse_ordering_kind(require_text(name, "ordering"));
    return BBS_OK;
  });
}

bbs_status bbs_session_set_format(bbs_session* session, bbs_format format) {
  return guarded(session, [&] {
    if (format != BBS_FORMAT_TEXT && format != BBS_FORMAT_JSON) throw InvalidArgument("unknown output format");
    session->format = format;
    return BBS_OK;
  });
}

bbs_status bbs_session_set_cutoffs(bbs_session* session, size_t max_basis_size, unsigned max_degree,
                                   size_t max_reductions) {
  return guarded(session, [&] {
    if (max_basis_size) session->gb.max_basis_size = max_basis_size;
    if (max_degree) session->gb.max_degree = max_degree;
    if (max_reductions) session->gb.max_reductions = max_reductions;
    return BBS_OK;
  });
}

bbs_status bbs_validate(bbs_session* session, bbs_result** out) {
  return command(session, out, [&](Json& doc) {
    doc = describe_O(require_O(session));
    return true;
  });
}

bbs_status bbs_border_scheme(bbs_session* session, bbs_result** out) {
  return command(session, out, [&](Json& doc) {
    const auto& O = require_O(session);
    doc = describe_O(O);
    auto B = borderscheme::border_scheme_ideal(O);
    doc["prebasis"] = strings(borderscheme::generic_prebasis(O));
    doc["variables"] = O.mu() * O.nu();
    doc["generator_count"] = B.generators().size();
    doc["generators"] = strings(B.generators());
    return true;
  });
}

bbs_status bbs_gb_scheme(bbs_session* session, const char* route, const char* cross_check, const char* reducer,
                         bbs_result** out) {
  return command(session, out, [&](Json& doc) {
    const auto& O = require_O(session);
    auto sigma = sigma_of(session, O.universe());
    gbscheme::SchemeOptions opts{parse_reducer(reducer), session->gb};
    auto r1 = gbscheme::parse_route(route ? route : "substitution");
    auto sv = gbscheme::split_variables(O, sigma);
    auto ws = gbscheme::find_weights(O, sigma);
    auto I = reduced(gbscheme::gb_scheme_ideal(O, sigma, r1, opts), ws, session->gb);

    doc = describe_O(O);
    doc["ordering"] = sigma.kind_name();
    doc["L"] = names_json(sv.L_cO);
    doc["free_count"] = sv.s();
    doc["prebasis"] = strings(gbscheme::generic_gb_prebasis(O, sigma));
    doc["route"] = gbscheme::route_name(r1);
    doc["generators"] = strings(I.generators());
    if (!cross_check) return true;
    auto r2 = gbscheme::parse_route(cross_check);
    auto J = reduced(gbscheme::gb_scheme_ideal(O, sigma, r2, opts), ws, session->gb);
    bool equal = I.generators() == J.generators();
    doc["cross_check"] = gbscheme::route_name(r2);
    doc["result"] = equal ? "IDEALS EQUAL" : "IDEALS DIFFER";
    if (!equal) doc["other_generators"] = strings(J.generators());
    return equal;
  });
}

bbs_status bbs_weights(bbs_session* session, bbs_result** out) {
  return command(session, out, [&](Json& doc) {
    const auto& O = require_O(session);
    auto sigma = sigma_of(session, O.universe());
    auto ws = gbscheme::find_weights(O, sigma);
    auto report = gbscheme::verify_homogeneity(O, sigma, ws, session->gb);
    doc = describe_O(O);
    doc["ordering"] = sigma.kind_name();
    doc["V"] = ws.V;
    doc["W"] = weight_map(ws.W);
    doc["Wbar"] = weight_map(ws.Wbar);
    Json claims = Json::array();
    for (const auto& c : report.claims) {
      Json e{{"claim", c.claim}, {"description", c.description}, {"pass", c.pass}};
      if (c.witness) e["witness"] = polycore::format_polynomial(*c.witness);
      claims.push_back(e);
    }
    doc["claims"] = claims;
    return report.all_pass();
  });
}

bbs_status bbs_check_point(bbs_session* session, const char* point_json, bbs_result** out) {
  return command(session, out, [&](Json& doc) {
    const auto& O = require_O(session);
    auto p = parse_point(point_json, O);
    auto check = borderscheme::check_border_basis_point(O, p);
    doc["point"] = point_doc(p);
    doc["on_border_scheme"] = check.on_scheme;
    if (check.witness) {
      doc["violated"] = Json{{"axes", {check.k + 1, check.l + 1}},
                             {"entry", {check.row + 1, check.col + 1}},
                             {"commutator_entry", polycore::format_polynomial(*check.witness)}};
    }
    if (check.on_scheme) doc["border_basis"] = strings(borderscheme::specialize_prebasis(O, p));
    return check.on_scheme;
  });
}

bbs_status bbs_round_trip(bbs_session* session, const char* ideal, bbs_result** out) {
  return command(session, out, [&](Json& doc) {
    std::string text = require_text(ideal, "ideal");
    auto u = x_universe(text, session->O ? static_cast<unsigned>(session->O->n()) : 0);
    Ideal I(u, polycore::parse_polynomial_list(text, u));
    auto sigma = sigma_of(session, u);
    auto pf = gbscheme::point_from_ideal(I, sigma, session->gb);
    auto gb = gbengine::groebner_basis(I, sigma, session->gb).polys;
    auto back = gbscheme::ideal_from_point(pf.O, sigma, pf.point);
    auto again = gbscheme::point_from_ideal(Ideal(u, back), sigma, session->gb);
    bool ideal_exact = back == gb;
    bool point_exact = again.point == pf.point;

    doc = describe_O(pf.O);
    doc["ordering"] = sigma.kind_name();
    doc["point"] = point_doc(pf.point);
    doc["groebner_basis"] = strings(gb);
    doc["from_point"] = strings(back);
    doc["ideal_point_ideal"] = ideal_exact;
    doc["point_ideal_point"] = point_exact;
    doc["result"] = ideal_exact && point_exact ? "ROUND TRIP EXACT" : "ROUND TRIP MISMATCH";
    return ideal_exact && point_exact;
  });
}

bbs_status bbs_deform(bbs_session* session, const char* point_json, const char* t0, bbs_result** out) {
  return command(session, out, [&](Json& doc) {
    const auto& O = require_O(session);
    auto sigma = sigma_of(session, O.universe());
    auto p = parse_point(point_json, O);
    auto ws = gbscheme::find_weights(O, sigma);
    auto fam = gbscheme::deform(O, sigma, ws, p);
    doc = describe_O(O);
    doc["ordering"] = sigma.kind_name();
    doc["V"] = ws.V;
    doc["family"] = strings(fam.generators);
    if (!t0) return true;
    Rational at = parse_rational(t0);
    auto F = gbscheme::fiber(fam, O, at);
    auto gb = gbengine::groebner_basis(F, sigma, session->gb).polys;
    auto fc = gbscheme::check_fiber(F, O, sigma, session->gb);
    std::vector<Polynomial> corners;
    auto order_corners = O.corners();
    std::sort(order_corners.begin(), order_corners.end(),
              [&](const polycore::Term& a, const polycore::Term& b) { return sigma.greater(a, b); });
    for (const auto& c : order_corners) corners.push_back(Polynomial::monomial(O.universe(), c));
    std::vector<Polynomial> lts;
    for (const auto& g : gb) lts.push_back(Polynomial::monomial(O.universe(), polycore::leading_term(g, sigma)));
    bool lt_ok = lts == corners;
    doc["t"] = to_string(at);
    doc["fiber"] = strings(gb);
    doc["leading_terms"] = strings(lts);
    doc["leading_terms_are_corners"] = lt_ok;
    doc["quotient_dimension"] = fc.dimension;
    doc["basis_is_O"] = fc.basis_is_O;
    return lt_ok && fc.basis_is_O;
  });
}

bbs_status bbs_affine_cell(bbs_session* session, bbs_result** out) {
  return command(session, out, [&](Json& doc) {
    const auto& O = require_O(session);
    auto sigma = sigma_of(session, O.universe());
    gbscheme::SchemeOptions opts{polycore::DivisorSelection::First, session->gb};
    auto J = gbscheme::gb_scheme_ideal(O, sigma, gbscheme::Route::Substitution, opts);
    auto ws = gbscheme::find_weights(O, sigma);
    auto cell = gbscheme::affine_cell_detect(J, gbscheme::w_vector(J.universe(), ws), session->gb);
    doc = describe_O(O);
    doc["ordering"] = sigma.kind_name();
    doc["variables"] = J.universe()->size();
    doc["affine_space"] = cell.affine;
    doc["free_count"] = cell.free_variables.size();
    doc["free"] = cell.free_variables;
    doc["eliminated"] = cell.eliminated;
    if (!cell.affine) doc["residual"] = strings(cell.residual.generators());
    return true;
  });
}

bbs_status bbs_dimension(bbs_session* session, const char* which, int preprocess_linear, bbs_result** out) {
  return command(session, out, [&](Json& doc) {
    std::string w = require_text(which, "ideal");
    std::optional<Ideal> I;
    if (w == "border-scheme") {
      I = borderscheme::border_scheme_ideal(require_O(session));
    } else if (w == "gb-scheme") {
      const auto& O = require_O(session);
      gbscheme::SchemeOptions opts{polycore::DivisorSelection::First, session->gb};
      I = gbscheme::gb_scheme_ideal(O, sigma_of(session, O.universe()), gbscheme::Route::Substitution, opts);
    } else {
      auto u = x_universe(w, session->O ? static_cast<unsigned>(session->O->n()) : 0);
      I = Ideal(u, polycore::parse_polynomial_list(w, u));
    }
    doc["ideal"] = w;
    doc["variables"] = I->universe()->size();
    doc["generator_count"] = I->generators().size();
    if (preprocess_linear) {
      auto red = gbengine::linear_preprocess(*I);
      doc["preprocessed_variables"] = red.ideal.universe()->size();
      doc["preprocessed_generators"] = red.ideal.generators().size();
      doc["eliminated"] = red.eliminated;
      I = red.ideal;
    }
    doc["dimension"] = gbengine::krull_dimension(*I, session->gb);
    return true;
  });
}

const char* bbs_result_text(const bbs_result* result) { return result ? result->text.c_str() : ""; }

void bbs_result_free(bbs_result* result) { delete result; }

}  // extern "C"
