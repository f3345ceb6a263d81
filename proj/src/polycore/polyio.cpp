#include "polycore/polyio.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "polycore/errors.hpp"

namespace bbs::polycore {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const UniversePtr& u) : s_(text), u_(u) {}

  Polynomial parse_all() {
    Polynomial p = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("cannot parse polynomial '" + std::string(s_) + "' at offset " + std::to_string(pos_) + ": " +
                     what);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char ch) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }
  std::string integer() {
    skip_ws();
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return std::string(s_.substr(start, pos_ - start));
  }

  Polynomial expr() {
    Polynomial acc = term();
    while (true) {
      if (accept('+'))
        acc += term();
      else if (accept('-'))
        acc -= term();
      else
        return acc;
    }
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (accept('*')) acc *= factor();
    return acc;
  }

  Polynomial factor() {
    if (accept('-')) return -factor();
    if (accept('+')) return factor();
    Polynomial base = atom();
    if (accept('^')) {
      std::string e = integer();
      if (e.size() > 5) fail("exponent too large");
      base = base.pow(static_cast<unsigned>(std::stoul(e)));
    }
    return base;
  }

  Polynomial atom() {
    skip_ws();
    if (pos_ == s_.size()) fail("unexpected end of input");
    char ch = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::string num = integer();
      size_t save = pos_;
      if (accept('/')) {
        skip_ws();
        if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
          return Polynomial::constant(u_, parse_rational(num + "/" + integer()));
        pos_ = save;
        fail("expected a denominator");
      }
      return Polynomial::constant(u_, parse_rational(num));
    }
    if (accept('(')) {
      Polynomial inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::string name = identifier();
      auto v = u_->find(name);
      if (!v) fail("unknown variable '" + name + "'");
      return Polynomial::variable(u_, *v);
    }
    fail("unexpected '" + std::string(1, ch) + "'");
  }

  std::string identifier() {
    size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    std::string name(s_.substr(start, pos_ - start));
    size_t save = pos_;
    if (accept('[')) {
      std::string i = integer();
      if (!accept(',')) fail("expected ',' in c[i,j]");
      std::string j = integer();
      if (!accept(']')) fail("expected ']' in c[i,j]");
      return name + "[" + std::to_string(std::stoi(i)) + "," + std::to_string(std::stoi(j)) + "]";
    }
    pos_ = save;
    return name;
  }

  std::string_view s_;
  size_t pos_ = 0;
  const UniversePtr& u_;
};

std::vector<std::string_view> split_top_level(std::string_view text) {
  std::vector<std::string_view> parts;
  int depth = 0;
  size_t start = 0;
  for (size_t i = 0; i < text.size(); ++i) {
    char ch = text[i];
    if (ch == '(' || ch == '[') ++depth;
    if (ch == ')' || ch == ']') --depth;
    if (ch == ',' && depth == 0) {
      parts.push_back(text.substr(start, i - start));
      start = i + 1;
    }
  }
  parts.push_back(text.substr(start));
  return parts;
}

bool blank(std::string_view s) {
  return std::all_of(s.begin(), s.end(), [](char ch) { return std::isspace(static_cast<unsigned char>(ch)); });
}

// Key used for display: larger key prints first.
struct DisplayKey {
  unsigned xdeg = 0;
  std::vector<Exponent> x;
  unsigned cdeg = 0;
  std::vector<Exponent> c;
  unsigned tdeg = 0;
  auto operator<=>(const DisplayKey&) const = default;
};

DisplayKey display_key(const Term& t, const VariableUniverse& u) {
  DisplayKey k;
  for (size_t v = 0; v < t.size(); ++v) {
    switch (u.block(v)) {
      case VariableUniverse::Block::X:
        k.xdeg += t[v];
        k.x.push_back(t[v]);
        break;
      case VariableUniverse::Block::C:
        k.cdeg += t[v];
        k.c.push_back(t[v]);
        break;
      case VariableUniverse::Block::T:
        k.tdeg += t[v];
        break;
    }
  }
  return k;
}

}  // namespace

Polynomial parse_polynomial(std::string_view text, const UniversePtr& u) { return Parser(text, u).parse_all(); }

std::vector<Polynomial> parse_polynomial_list(std::string_view text, const UniversePtr& u) {
  std::vector<Polynomial> out;
  if (blank(text)) return out;
  for (std::string_view part : split_top_level(text)) {
    if (blank(part)) throw ParseError("empty entry in polynomial list '" + std::string(text) + "'");
    out.push_back(parse_polynomial(part, u));
  }
  return out;
}

std::vector<std::string> scan_variables(std::string_view text) {
  std::vector<std::string> names;
  std::set<std::string> seen;
  size_t i = 0;
  while (i < text.size()) {
    char ch = text[i];
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      size_t start = i;
      while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) ++i;
      std::string name(text.substr(start, i - start));
      if (i < text.size() && text[i] == '[') {
        size_t close = text.find(']', i);
        if (close == std::string_view::npos) throw ParseError("unterminated '[' in '" + std::string(text) + "'");
        std::string inner;
        for (char c : text.substr(i + 1, close - i - 1))
          if (!std::isspace(static_cast<unsigned char>(c))) inner.push_back(c);
        name += "[" + inner + "]";
        i = close + 1;
      }
      if (seen.insert(name).second) names.push_back(name);
    } else if (std::isdigit(static_cast<unsigned char>(ch))) {
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    } else {
      ++i;
    }
  }
  return names;
}

std::vector<Polynomial::Entry> display_terms(const Polynomial& p) {
  const VariableUniverse& u = *p.universe();
  std::vector<std::pair<DisplayKey, size_t>> keys;
  for (size_t k = 0; k < p.size(); ++k) keys.emplace_back(display_key(p.terms()[k].first, u), k);
  std::sort(keys.begin(), keys.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
  std::vector<Polynomial::Entry> out;
  for (const auto& [key, k] : keys) out.push_back(p.terms()[k]);
  return out;
}

std::string format_term(const Term& t, const VariableUniverse& u) {
  // Factors print as c-part, then x-part, then t, e.g. c[2,2]*x*t^2.
  std::vector<size_t> order;
  for (size_t v = 0; v < t.size(); ++v)
    if (u.block(v) == VariableUniverse::Block::C) order.push_back(v);
  for (size_t v = 0; v < t.size(); ++v)
    if (u.block(v) == VariableUniverse::Block::X) order.push_back(v);
  for (size_t v = 0; v < t.size(); ++v)
    if (u.block(v) == VariableUniverse::Block::T) order.push_back(v);
  std::string s;
  for (size_t v : order) {
    if (!t[v]) continue;
    if (!s.empty()) s += "*";
    s += u.name(v);
    if (t[v] > 1) s += "^" + std::to_string(t[v]);
  }
  return s.empty() ? "1" : s;
}

std::string format_polynomial(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [t, c] : display_terms(p)) {
    bool negative = c < 0;
    Rational mag = negative ? Rational(-c) : c;
    if (first)
      s += negative ? "-" : "";
    else
      s += negative ? " - " : " + ";
    first = false;
    if (t.is_one()) {
      s += to_string(mag);
    } else {
      if (mag != 1) s += to_string(mag) + "*";
      s += format_term(t, *p.universe());
    }
  }
  return s;
}

std::string format_polynomial_list(const std::vector<Polynomial>& ps) {
  std::string s;
  for (size_t k = 0; k < ps.size(); ++k) {
    if (k) s += ", ";
    s += format_polynomial(ps[k]);
  }
  return s;
}

nlohmann::json polynomial_to_json(const Polynomial& p) {
  nlohmann::json arr = nlohmann::json::array();
  const VariableUniverse& u = *p.universe();
  for (const auto& [t, c] : display_terms(p)) {
    nlohmann::json exps = nlohmann::json::object();
    for (size_t v = 0; v < t.size(); ++v)
      if (t[v]) exps[u.name(v)] = t[v];
    arr.push_back({{"exponents", exps}, {"coeff", to_string(c)}});
  }
  return arr;
}

Polynomial polynomial_from_json(const nlohmann::json& j, const UniversePtr& u) {
  if (!j.is_array()) throw ParseError("polynomial JSON must be an array of terms");
  std::vector<Polynomial::Entry> entries;
  for (const auto& item : j) {
    if (!item.is_object() || !item.contains("exponents") || !item.contains("coeff"))
      throw ParseError("polynomial JSON term needs 'exponents' and 'coeff'");
    Term t(u->size());
    for (const auto& [name, e] : item.at("exponents").items()) {
      if (!e.is_number_integer() || e.get<long long>() < 0 || e.get<long long>() > 65535)
        throw ParseError("exponent of '" + name + "' must be a small non-negative integer");
      auto v = u->find(name);
      if (!v) throw ParseError("unknown variable '" + name + "' in polynomial JSON");
      t.set(*v, static_cast<Exponent>(e.get<long long>()));
    }
    const auto& c = item.at("coeff");
    Rational coeff = c.is_string() ? parse_rational(c.get<std::string>())
                     : c.is_number_integer() ? Rational(std::to_string(c.get<long long>()))
                                             : throw ParseError("coeff must be a string \"p/q\" or an integer");
    entries.emplace_back(std::move(t), std::move(coeff));
  }
  return Polynomial::from_entries(u, std::move(entries));
}

nlohmann::json ordering_to_json(const TermOrdering& ord) {
  const VariableUniverse& u = *ord.universe();
  auto names = [&u](const std::vector<size_t>& vs) {
    nlohmann::json a = nlohmann::json::array();
    for (size_t v : vs) a.push_back(u.name(v));
    return a;
  };
  nlohmann::json j{{"kind", ord.kind_name()}};
  switch (ord.kind()) {
    case TermOrdering::Kind::Lex:
    case TermOrdering::Kind::DegLex:
    case TermOrdering::Kind::DegRevLex:
      j["precedence"] = names(ord.precedence());
      break;
    case TermOrdering::Kind::Weighted:
    case TermOrdering::Kind::SigmaBar: {
      nlohmann::json w = nlohmann::json::object();
      for (size_t v = 0; v < u.size(); ++v)
        if (ord.weights()[v] > 0) w[u.name(v)] = ord.weights()[v];
      j["weights"] = w;
      j["tiebreak"] = ordering_to_json(ord.parts().front());
      break;
    }
    case TermOrdering::Kind::Elimination:
      j["block"] = names(ord.block());
      j["parts"] = nlohmann::json::array();
      for (const auto& p : ord.parts()) j["parts"].push_back(ordering_to_json(p));
      break;
    case TermOrdering::Kind::Matrix: {
      nlohmann::json rows = nlohmann::json::array();
      for (const auto& r : ord.rows()) {
        nlohmann::json row = nlohmann::json::object();
        for (auto [v, w] : r.entries) row[u.name(v)] = w;
        rows.push_back(row);
      }
      j["rows"] = rows;
      j["covered"] = names(ord.covered());
      break;
    }
  }
  return j;
}

}  // namespace bbs::polycore
