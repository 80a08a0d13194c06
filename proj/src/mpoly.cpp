#include "crsym/mpoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace crsym {

PolyRing::PolyRing(std::vector<std::string> vars) : vars_(std::move(vars)) {
  for (size_t i = 0; i < vars_.size(); ++i)
    for (size_t j = i + 1; j < vars_.size(); ++j)
      if (vars_[i] == vars_[j])
        throw std::invalid_argument("PolyRing: duplicate variable " + vars_[i]);
}

std::optional<size_t> PolyRing::index_of(const std::string& name) const {
  for (size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == name) return i;
  return std::nullopt;
}

RingPtr make_ring(std::vector<std::string> vars) {
  return std::make_shared<const PolyRing>(std::move(vars));
}

MPoly MPoly::constant(RingPtr ring, GaussRat c) {
  MPoly p(std::move(ring));
  if (!c.is_zero()) p.terms_[Exp(p.ring_->nvars(), 0)] = std::move(c);
  return p;
}

MPoly MPoly::variable(RingPtr ring, size_t idx, unsigned power) {
  MPoly p(std::move(ring));
  if (idx >= p.ring_->nvars()) throw std::out_of_range("MPoly: variable index");
  if (power == 0) return constant(p.ring_, GaussRat(1));
  Exp e(p.ring_->nvars(), 0);
  e[idx] = static_cast<uint16_t>(power);
  p.terms_[e] = GaussRat(1);
  return p;
}

MPoly MPoly::variable(RingPtr ring, const std::string& name, unsigned power) {
  auto idx = ring->index_of(name);
  if (!idx) throw std::invalid_argument("MPoly: unknown variable " + name);
  return variable(std::move(ring), *idx, power);
}

bool MPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const Exp& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](uint16_t x) { return x == 0; });
}

GaussRat MPoly::constant_value() const {
  if (terms_.empty()) return GaussRat(0);
  if (!is_constant()) throw std::logic_error("MPoly: not constant");
  return terms_.begin()->second;
}

void MPoly::add_term(const Exp& e, const GaussRat& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_[e] = c;
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MPoly MPoly::operator-() const {
  MPoly r(ring_);
  for (const auto& [e, c] : terms_) r.terms_[e] = -c;
  return r;
}

MPoly MPoly::operator+(const MPoly& o) const {
  MPoly r = *this;
  if (!r.ring_) r.ring_ = o.ring_;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

MPoly MPoly::operator-(const MPoly& o) const {
  MPoly r = *this;
  if (!r.ring_) r.ring_ = o.ring_;
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

MPoly MPoly::operator*(const MPoly& o) const {
  MPoly r(ring_ ? ring_ : o.ring_);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) {
      Exp e = ea;
      for (size_t i = 0; i < e.size(); ++i) e[i] = static_cast<uint16_t>(e[i] + eb[i]);
      r.add_term(e, ca * cb);
    }
  return r;
}

MPoly MPoly::operator*(const GaussRat& c) const {
  MPoly r(ring_);
  if (c.is_zero()) return r;
  for (const auto& [e, v] : terms_) r.terms_[e] = v * c;
  return r;
}

MPoly MPoly::pow(unsigned e) const {
  MPoly r = constant(ring_, GaussRat(1));
  MPoly b = *this;
  while (e) {
    if (e & 1) r *= b;
    if (e >>= 1) b *= b;
  }
  return r;
}

MPoly MPoly::derivative(size_t var) const {
  MPoly r(ring_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exp d = e;
    d[var] -= 1;
    r.add_term(d, c * GaussRat(Rat(e[var])));
  }
  return r;
}

MPoly MPoly::substitute(const RingPtr& target_ring, const std::vector<MPoly>& images) const {
  if (images.size() != ring_->nvars())
    throw std::invalid_argument("MPoly::substitute: image count mismatch");
  MPoly r(target_ring);
  for (const auto& [e, c] : terms_) {
    MPoly t = MPoly::constant(target_ring, c);
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i]) t *= images[i].pow(e[i]);
    r += t;
  }
  return r;
}

MPoly MPoly::conj_permuted(const std::vector<size_t>& perm) const {
  if (perm.size() != ring_->nvars())
    throw std::invalid_argument("MPoly::conj_permuted: perm size mismatch");
  MPoly r(ring_);
  for (const auto& [e, c] : terms_) {
    Exp d(e.size(), 0);
    for (size_t i = 0; i < e.size(); ++i) d[perm[i]] = static_cast<uint16_t>(d[perm[i]] + e[i]);
    r.add_term(d, c.conj());
  }
  return r;
}

MPoly MPoly::eval_partial(const std::map<size_t, GaussRat>& vals) const {
  MPoly r(ring_);
  for (const auto& [e, c] : terms_) {
    GaussRat coeff = c;
    Exp d = e;
    for (const auto& [var, val] : vals) {
      for (uint16_t k = 0; k < e[var]; ++k) coeff *= val;
      d[var] = 0;
    }
    r.add_term(d, coeff);
  }
  return r;
}

int MPoly::total_degree() const {
  int deg = 0;
  for (const auto& [e, c] : terms_) {
    int d = 0;
    for (auto x : e) d += x;
    deg = std::max(deg, d);
  }
  return deg;
}

std::optional<MPoly::Exp> MPoly::find_non_homogeneous(const std::vector<int>& weights,
                                                      int w) const {
  for (const auto& [e, c] : terms_) {
    int d = 0;
    for (size_t i = 0; i < e.size(); ++i) d += e[i] * weights[i];
    if (d != w) return e;
  }
  return std::nullopt;
}

bool MPoly::depends_on(size_t var) const {
  for (const auto& [e, c] : terms_)
    if (e[var]) return true;
  return false;
}

std::string MPoly::monomial_string(const PolyRing& ring, const Exp& e) {
  std::string s;
  for (size_t i = 0; i < e.size(); ++i) {
    if (!e[i]) continue;
    if (!s.empty()) s += "*";
    s += ring.var_name(i);
    if (e[i] > 1) s += "^" + std::to_string(e[i]);
  }
  return s.empty() ? "1" : s;
}

std::string MPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [e, c] : terms_) {
    std::string mono = monomial_string(*ring_, e);
    std::string coeff = c.to_string();
    if (!s.empty()) s += " + ";
    if (mono == "1")
      s += "(" + coeff + ")";
    else if (coeff == "1")
      s += mono;
    else
      s += "(" + coeff + ")*" + mono;
  }
  return s;
}

}  // namespace crsym
