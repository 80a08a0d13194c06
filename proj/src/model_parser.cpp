#include <cctype>

#include "crsym/crmodel.hpp"

namespace crsym {

namespace {

struct Token {
  enum Kind { Ident, Int, Sym, End } kind = End;
  std::string text;
  int line = 1, col = 1;
};

class Lexer {
 public:
  explicit Lexer(const std::string& s) : s_(s) { advance(); }
  const Token& peek() const { return tok_; }
  Token next() {
    Token t = tok_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < s_.size()) {
      char c = s_[pos_];
      if (c == '\n') {
        ++line_;
        col_ = 1;
        ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++col_;
        ++pos_;
      } else if (c == '#') {
        while (pos_ < s_.size() && s_[pos_] != '\n') ++pos_;
      } else if (c == '/' && pos_ + 1 < s_.size() && s_[pos_ + 1] == '/') {
        while (pos_ < s_.size() && s_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
    tok_ = Token{};
    tok_.line = line_;
    tok_.col = col_;
    if (pos_ >= s_.size()) {
      tok_.kind = Token::End;
      return;
    }
    char c = s_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      tok_.kind = Token::Ident;
      tok_.text = s_.substr(start, pos_ - start);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      tok_.kind = Token::Int;
      tok_.text = s_.substr(start, pos_ - start);
    } else {
      tok_.kind = Token::Sym;
      tok_.text = std::string(1, c);
      ++pos_;
    }
    col_ += static_cast<int>(tok_.text.size());
  }

  const std::string& s_;
  size_t pos_ = 0;
  int line_ = 1, col_ = 1;
  Token tok_;
};

[[noreturn]] void fail(const Token& t, const std::string& msg) {
  throw ParseError("parse error at " + std::to_string(t.line) + ":" +
                   std::to_string(t.col) + ": " + msg);
}

struct FieldTerm {
  MPoly coeff;
  int axis = -1;  // coordinate of d(...)
};

class Parser {
 public:
  explicit Parser(const std::string& text) : lx_(text) {}

  CRModel run() {
    // first pass happens inline: declarations must precede their use, so the
    // ring is built lazily once the first equation or field appears
    while (lx_.peek().kind != Token::End) {
      Token t = lx_.peek();
      if (t.kind == Token::Ident && t.text == "coord") {
        parse_coord();
      } else if (t.kind == Token::Ident && t.text == "param") {
        parse_param();
      } else if (t.kind == Token::Ident && t.text == "Im") {
        parse_equation();
      } else if (t.kind == Token::Ident && t.text == "field") {
        parse_field();
      } else {
        fail(t, "expected coord, param, Im(...) = ..., or field");
      }
    }
    finalize();
    return std::move(model_);
  }

 private:
  void ensure_ring() {
    if (model_.ring) return;
    if (model_.coords.empty()) fail(lx_.peek(), "no coordinates declared");
    std::vector<std::string> vars = model_.coords;
    for (const auto& c : model_.coords) vars.push_back(c + "_bar");
    for (const auto& p : model_.params) vars.push_back(p);
    model_.ring = make_ring(vars);
    size_t n = model_.coords.size();
    model_.conj_perm.resize(vars.size());
    for (size_t i = 0; i < n; ++i) {
      model_.conj_perm[i] = n + i;
      model_.conj_perm[n + i] = i;
    }
    for (size_t i = 2 * n; i < vars.size(); ++i) model_.conj_perm[i] = i;
  }

  void expect_sym(const std::string& s) {
    Token t = lx_.next();
    if (t.kind != Token::Sym || t.text != s) fail(t, "expected '" + s + "'");
  }

  std::string expect_ident() {
    Token t = lx_.next();
    if (t.kind != Token::Ident) fail(t, "expected identifier");
    return t.text;
  }

  void parse_coord() {
    lx_.next();  // coord
    Token name = lx_.next();
    if (name.kind != Token::Ident) fail(name, "expected coordinate name");
    if (model_.ring) fail(name, "declarations must precede equations and fields");
    expect_sym(":");
    std::string kw = expect_ident();
    if (kw != "weight") fail(name, "expected 'weight'");
    Token w = lx_.next();
    if (w.kind != Token::Int) fail(w, "expected integer weight");
    expect_sym(";");
    if (name.text.size() > 4 && name.text.substr(name.text.size() - 4) == "_bar")
      fail(name, "coordinate names may not end in _bar");
    model_.coords.push_back(name.text);
    model_.weights.push_back(std::stoi(w.text));
  }

  void parse_param() {
    lx_.next();
    Token name = lx_.next();
    if (name.kind != Token::Ident) fail(name, "expected parameter name");
    if (model_.ring) fail(name, "declarations must precede equations and fields");
    expect_sym(";");
    model_.params.push_back(name.text);
  }

  // expression grammar over the model ring
  MPoly parse_expr() {
    MPoly lhs = parse_term();
    while (lx_.peek().kind == Token::Sym &&
           (lx_.peek().text == "+" || lx_.peek().text == "-")) {
      std::string op = lx_.next().text;
      MPoly rhs = parse_term();
      lhs = (op == "+") ? lhs + rhs : lhs - rhs;
    }
    return lhs;
  }

  MPoly parse_term() {
    MPoly p = parse_factor();
    while (lx_.peek().kind == Token::Sym && lx_.peek().text == "*") {
      lx_.next();
      p *= parse_factor();
    }
    return p;
  }

  MPoly parse_factor() {
    MPoly p = parse_primary();
    while (lx_.peek().kind == Token::Sym &&
           (lx_.peek().text == "^" || lx_.peek().text == "/")) {
      std::string op = lx_.next().text;
      Token e = lx_.next();
      if (e.kind != Token::Int) fail(e, op == "^" ? "expected integer exponent"
                                                  : "expected integer divisor");
      if (op == "^")
        p = p.pow(static_cast<unsigned>(std::stoul(e.text)));
      else
        p = p * GaussRat(Rat(BigInt(1), BigInt::from_string(e.text)));
    }
    return p;
  }

  MPoly parse_primary() {
    Token t = lx_.peek();
    ensure_ring();
    if (t.kind == Token::Sym && t.text == "-") {
      lx_.next();
      return -parse_primary_with_pow();
    }
    return parse_primary_with_pow();
  }

  MPoly parse_primary_with_pow() {
    MPoly p = parse_atom();
    while (lx_.peek().kind == Token::Sym &&
           (lx_.peek().text == "^" || lx_.peek().text == "/")) {
      std::string op = lx_.next().text;
      Token e = lx_.next();
      if (e.kind != Token::Int) fail(e, "expected integer");
      if (op == "^")
        p = p.pow(static_cast<unsigned>(std::stoul(e.text)));
      else
        p = p * GaussRat(Rat(BigInt(1), BigInt::from_string(e.text)));
    }
    return p;
  }

  MPoly parse_atom() {
    Token t = lx_.next();
    if (t.kind == Token::Int) {
      Rat num(BigInt::from_string(t.text));
      if (lx_.peek().kind == Token::Sym && lx_.peek().text == "/") {
        lx_.next();
        Token d = lx_.next();
        if (d.kind != Token::Int) fail(d, "expected denominator");
        num = num / Rat(BigInt::from_string(d.text));
      }
      return MPoly::constant(model_.ring, GaussRat(num));
    }
    if (t.kind == Token::Sym && t.text == "(") {
      MPoly p = parse_expr();
      expect_sym(")");
      return p;
    }
    if (t.kind == Token::Sym && t.text == "|") {
      MPoly p = parse_expr();
      expect_sym("|");
      expect_sym("^");
      Token two = lx_.next();
      if (two.kind != Token::Int || two.text != "2") fail(two, "expected |.|^2");
      return p * model_.conj(p);
    }
    if (t.kind == Token::Ident) {
      if (t.text == "i") return MPoly::constant(model_.ring, GaussRat::i());
      if (t.text == "conj" || t.text == "Re" || t.text == "Im") {
        expect_sym("(");
        MPoly p = parse_expr();
        expect_sym(")");
        if (t.text == "conj") return model_.conj(p);
        MPoly pc = model_.conj(p);
        GaussRat half(Rat(1, 2));
        if (t.text == "Re") return (p + pc) * half;
        // Im: (p - conj p) / (2i)
        return (p - pc) * (GaussRat(Rat(0), Rat(-1)) * half);
      }
      auto idx = model_.ring->index_of(t.text);
      if (!idx) fail(t, "unknown name '" + t.text + "'");
      return MPoly::variable(model_.ring, *idx);
    }
    fail(t, "unexpected token '" + t.text + "'");
  }

  void parse_equation() {
    lx_.next();  // Im
    expect_sym("(");
    Token name = lx_.next();
    if (name.kind != Token::Ident) fail(name, "expected coordinate");
    expect_sym(")");
    expect_sym("=");
    ensure_ring();
    Token rhs_pos = lx_.peek();
    MPoly rhs = parse_expr();
    expect_sym(";");
    int ci = model_.coord_index(name.text);
    if (ci < 0) fail(name, "unknown coordinate '" + name.text + "'");
    if (ci == 0) fail(name, "the weight-1 coordinate carries no equation");
    for (const auto& [c, p] : model_.equations)
      if (c == name.text) fail(name, "duplicate equation for " + name.text);
    // reality: conj(P) == P
    MPoly diff = model_.conj(rhs) - rhs;
    if (!diff.is_zero())
      fail(rhs_pos, "equation for " + name.text + " is not real-valued: monomial " +
                        MPoly::monomial_string(*model_.ring, diff.terms().begin()->first));
    // weight homogeneity
    std::vector<int> wts(model_.ring->nvars(), 0);
    for (size_t i = 0; i < model_.coords.size(); ++i) {
      wts[i] = model_.weights[i];
      wts[model_.coords.size() + i] = model_.weights[i];
    }
    auto bad = rhs.find_non_homogeneous(wts, model_.weights[ci]);
    if (bad)
      fail(rhs_pos, "equation for " + name.text + " is not weight-homogeneous: monomial " +
                        MPoly::monomial_string(*model_.ring, *bad));
    // dependence only on strictly lower weights
    for (size_t v = 0; v < model_.ring->nvars(); ++v) {
      if (!rhs.depends_on(v)) continue;
      size_t base = v < model_.coords.size()
                        ? v
                        : (v < 2 * model_.coords.size() ? v - model_.coords.size()
                                                        : std::string::npos);
      if (base == std::string::npos) continue;  // parameter
      if (model_.weights[base] >= model_.weights[ci])
        fail(rhs_pos, "equation for " + name.text + " depends on " +
                          model_.coords[base] + " of weight >= its own");
    }
    model_.equations.emplace_back(name.text, rhs);
  }

  void parse_field() {
    lx_.next();  // field
    Token name = lx_.next();
    if (name.kind != Token::Ident) fail(name, "expected field name");
    expect_sym("=");
    ensure_ring();
    PolyVectorField f = PolyVectorField::zero(model_.ring,
                                              static_cast<int>(model_.coords.size()),
                                              name.text);
    parse_field_sum(f);
    expect_sym(";");
    // components must be holomorphic
    for (int i = 0; i < f.n_coords; ++i)
      for (size_t v = model_.coords.size(); v < 2 * model_.coords.size(); ++v)
        if (f.comps[i].depends_on(v))
          fail(name, "field " + name.text + " has an antiholomorphic component");
    model_.fields.push_back(std::move(f));
  }

  void parse_field_sum(PolyVectorField& f) {
    bool neg = false;
    if (lx_.peek().kind == Token::Sym && (lx_.peek().text == "-" || lx_.peek().text == "+")) {
      neg = lx_.next().text == "-";
    }
    parse_field_term(f, neg);
    while (lx_.peek().kind == Token::Sym &&
           (lx_.peek().text == "+" || lx_.peek().text == "-")) {
      bool n = lx_.next().text == "-";
      parse_field_term(f, n);
    }
  }

  void parse_field_term(PolyVectorField& f, bool neg) {
    MPoly coeff = MPoly::constant(model_.ring, GaussRat(1));
    int axis = -1;
    while (true) {
      Token t = lx_.peek();
      if (t.kind == Token::Ident && t.text == "d") {
        lx_.next();
        expect_sym("(");
        Token c = lx_.next();
        if (c.kind != Token::Ident) fail(c, "expected coordinate in d(...)");
        int ci = model_.coord_index(c.text);
        if (ci < 0) fail(c, "unknown coordinate in d(...)");
        if (axis >= 0) fail(c, "repeated d(...) in one term");
        expect_sym(")");
        axis = ci;
      } else {
        coeff *= parse_factor_nod();
      }
      if (lx_.peek().kind == Token::Sym && lx_.peek().text == "*") {
        lx_.next();
        continue;
      }
      break;
    }
    if (axis < 0) fail(lx_.peek(), "field term lacks d(coordinate)");
    if (neg) coeff = -coeff;
    f.comps[axis] += coeff;
  }

  MPoly parse_factor_nod() { return parse_primary_with_pow(); }

  void finalize() {
    ensure_ring();
    if (model_.weights.empty() || model_.weights[0] != 1)
      throw ParseError("the first coordinate must have weight 1");
    for (size_t i = 1; i < model_.weights.size(); ++i)
      if (model_.weights[i] < model_.weights[i - 1])
        throw ParseError("coordinates must be declared in non-decreasing weight order");
    for (size_t i = 1; i < model_.coords.size(); ++i) {
      bool has = false;
      for (const auto& [c, p] : model_.equations)
        if (c == model_.coords[i]) has = true;
      if (!has) throw ParseError("missing equation for coordinate " + model_.coords[i]);
    }
  }

  Lexer lx_;
  CRModel model_;
};

}  // namespace

int CRModel::coord_index(const std::string& name) const {
  for (size_t i = 0; i < coords.size(); ++i)
    if (coords[i] == name) return static_cast<int>(i);
  return -1;
}

const PolyVectorField* CRModel::field(const std::string& name) const {
  for (const auto& f : fields)
    if (f.name == name) return &f;
  return nullptr;
}

nlohmann::json CRModel::to_json() const {
  nlohmann::json j;
  j["coords"] = nlohmann::json::array();
  for (size_t i = 0; i < coords.size(); ++i)
    j["coords"].push_back({{"name", coords[i]}, {"weight", weights[i]}});
  j["params"] = params;
  j["equations"] = nlohmann::json::array();
  for (const auto& [c, p] : equations)
    j["equations"].push_back({{"coord", c}, {"P", p.to_string()}});
  j["fields"] = nlohmann::json::array();
  for (const auto& f : fields) j["fields"].push_back(f.to_json());
  return j;
}

CRModel parse_model(const std::string& text) { return Parser(text).run(); }

}  // namespace crsym
