#include "crsym/cxstruct.hpp"

#include <sstream>

#include "crsym/prolong.hpp"

namespace crsym {

QMat ComplexStructure::matrix() const {
  if (a.is_zero()) throw std::invalid_argument("ComplexStructure: a = 0");
  QMat j(2, 2);
  j(0, 0) = b;
  j(1, 0) = a;
  j(0, 1) = -(Rat(1) + b * b) / a;
  j(1, 1) = -b;
  return j;
}

bool validate_J(const QMat& j) {
  if (j.rows() != 2 || j.cols() != 2) return false;
  QMat sq = j * j;
  return sq(0, 0) == Rat(-1) && sq(1, 1) == Rat(-1) && sq(0, 1).is_zero() &&
         sq(1, 0).is_zero();
}

std::optional<ComplexStructure> ComplexStructure::from_matrix(const QMat& j) {
  if (!validate_J(j)) return std::nullopt;
  if (j(1, 0).is_zero()) return std::nullopt;  // impossible over Q, guarded anyway
  return ComplexStructure{j(1, 0), j(0, 0)};
}

nlohmann::json ComplexStructure::to_json() const {
  return {{"a", a.to_string()}, {"b", b.to_string()}};
}

ComplexStructure ComplexStructure::from_json(const nlohmann::json& j) {
  return {Rat::parse(j.at("a").get<std::string>()),
          Rat::parse(j.at("b").get<std::string>())};
}

nlohmann::json InvariantJ::to_json() const {
  nlohmann::json j;
  j["exists"] = exists;
  if (witness) {
    j["traceless_class"] = {{(*witness)(0, 0).to_string(), (*witness)(0, 1).to_string()},
                            {(*witness)(1, 0).to_string(), (*witness)(1, 1).to_string()}};
  }
  return j;
}

namespace {

std::string format_der0_g1(const std::vector<Derivation0>& basis) {
  std::ostringstream os;
  os << "der0|g_{-1} = span{";
  for (size_t i = 0; i < basis.size(); ++i) {
    const QMat& b = basis[i].blocks[0];
    if (i) os << ", ";
    os << "[[" << b(0, 0).to_string() << "," << b(0, 1).to_string() << "],["
       << b(1, 0).to_string() << "," << b(1, 1).to_string() << "]]";
  }
  os << "}";
  return os.str();
}

}  // namespace

NormalizeResult normalize_J(const GNLA& m, const ComplexStructure& j) {
  if (m.grade_dim(1) != 2) throw std::invalid_argument("normalize_J: rank 2 expected");
  auto basis = der0(m);
  bool lower = true, upper = true;
  for (const auto& d : basis) {
    if (!d.blocks[0](0, 1).is_zero()) lower = false;
    if (!d.blocks[0](1, 0).is_zero()) upper = false;
  }
  int dim = 0;
  {
    Mat<Rat> f(0, 4);
    for (const auto& d : basis)
      f.append_row({d.blocks[0](0, 0), d.blocks[0](0, 1), d.blocks[0](1, 0),
                    d.blocks[0](1, 1)});
    dim = f.rank();
  }
  const Rat &a = j.a, &b = j.b;
  if (a.is_zero()) throw std::invalid_argument("normalize_J: a = 0");
  QMat g(2, 2);
  ComplexStructure target;
  std::string fact;
  if (dim == 4 || (dim == 3 && lower)) {
    // g: e1' -> -e1' + b e1'',  e1'' -> -((1+b^2)/a) e1''
    g(0, 0) = Rat(-1);
    g(1, 0) = b;
    g(1, 1) = -(Rat(1) + b * b) / a;
    target = {Rat(1), Rat(0)};
    fact = "diag(-1," + g(1, 1).to_string() + ") * lower_shear(" + (b / g(1, 1)).to_string() + ")";
  } else if (dim == 3 && upper) {
    // mirrored Borel: e1' -> a e1', e1'' -> -b e1' + e1''
    g(0, 0) = a;
    g(0, 1) = -b;
    g(1, 1) = Rat(1);
    target = {Rat(1), Rat(0)};
    fact = "diag(" + a.to_string() + ",1) * upper_shear(" + (-b / a).to_string() + ")";
  } else if (dim == 2 && lower && upper) {
    // diagonal Cartan: only rescalings are available; b is the invariant
    Mat<Rat> diag(0, 2);
    for (const auto& d : basis) diag.append_row({d.blocks[0](0, 0), d.blocks[0](1, 1)});
    if (diag.rank() != 2)
      throw std::invalid_argument("normalize_J: unsupported der0 shape: " +
                                  format_der0_g1(basis));
    g(0, 0) = a;
    g(1, 1) = Rat(1);
    target = {Rat(1), b};
    fact = "diag(" + a.to_string() + ",1)";
  } else {
    throw std::invalid_argument("normalize_J: unsupported der0 shape: " +
                                format_der0_g1(basis));
  }
  auto lift = automorphism_from_g1(m, g);
  if (!lift)
    throw InternalConsistencyError("normalize_J: group element does not lift");
  // conjugate and read off the normal form
  QMat gi(2, 2);
  {
    Rat det = g(0, 0) * g(1, 1) - g(0, 1) * g(1, 0);
    gi(0, 0) = g(1, 1) / det;
    gi(1, 1) = g(0, 0) / det;
    gi(0, 1) = -g(0, 1) / det;
    gi(1, 0) = -g(1, 0) / det;
  }
  QMat jn = g * j.matrix() * gi;
  auto cs = ComplexStructure::from_matrix(jn);
  if (!cs || !(cs->a == target.a) || !(cs->b == target.b))
    throw InternalConsistencyError("normalize_J: conjugation missed the normal form");
  NormalizeResult out;
  out.normal = *cs;
  out.element = g;
  out.automorphism = *lift;
  out.factorization = fact;
  return out;
}

InvariantJ invariant_J_exists(const GNLA& m) {
  if (m.grade_dim(1) != 2) throw std::invalid_argument("invariant_J_exists: rank 2");
  auto basis = der0(m);
  // traceless parts, as independent span vectors (p, q, r) for [[p,q],[r,-p]]
  std::vector<QVec> v;
  {
    Mat<Rat> f(0, 3);
    for (const auto& d : basis) {
      const QMat& bm = d.blocks[0];
      Rat tr2 = (bm(0, 0) + bm(1, 1)) / Rat(2);
      f.append_row({bm(0, 0) - tr2, bm(0, 1), bm(1, 0)});
    }
    auto piv = f.rref();
    for (size_t r = 0; r < piv.size(); ++r)
      v.push_back({f(static_cast<int>(r), 0), f(static_cast<int>(r), 1),
                   f(static_cast<int>(r), 2)});
  }
  // quadratic form q(p,q,r) = p^2 + qr = -det; a J direction has q < 0
  auto qform = [](const QVec& x) { return x[0] * x[0] + x[1] * x[2]; };
  auto bform = [](const QVec& x, const QVec& y) {
    return x[0] * y[0] + (x[1] * y[2] + y[1] * x[2]) / Rat(2);
  };
  std::optional<QVec> witness;
  std::vector<QVec> w = v;
  while (!w.empty() && !witness) {
    int neg = -1, pos = -1;
    for (size_t i = 0; i < w.size(); ++i) {
      int s = qform(w[i]).sgn();
      if (s < 0) neg = static_cast<int>(i);
      if (s > 0 && pos < 0) pos = static_cast<int>(i);
    }
    if (neg >= 0) {
      witness = w[neg];
      break;
    }
    if (pos >= 0) {
      // split off the positive direction and continue on its B-complement
      std::vector<QVec> rest;
      Rat qp = qform(w[pos]);
      for (size_t i = 0; i < w.size(); ++i) {
        if (static_cast<int>(i) == pos) continue;
        Rat c = bform(w[i], w[pos]) / qp;
        QVec r = w[i];
        for (int t = 0; t < 3; ++t) r[t] -= c * w[pos][t];
        rest.push_back(r);
      }
      w = rest;
      continue;
    }
    // all isotropic: nonzero cross term gives a hyperbolic pair
    bool found = false;
    for (size_t i = 0; i < w.size() && !found; ++i)
      for (size_t jx = i + 1; jx < w.size() && !found; ++jx) {
        Rat c = bform(w[i], w[jx]);
        if (c.is_zero()) continue;
        QVec r = w[i];
        int s = c.sgn();
        for (int t = 0; t < 3; ++t) r[t] -= Rat(s) * w[jx][t];
        witness = r;  // q(r) = -2|c| < 0
        found = true;
      }
    if (!found) break;  // the form vanishes identically on the span
  }
  InvariantJ out;
  if (witness) {
    QMat wmat(2, 2);
    wmat(0, 0) = (*witness)[0];
    wmat(0, 1) = (*witness)[1];
    wmat(1, 0) = (*witness)[2];
    wmat(1, 1) = -(*witness)[0];
    // deterministic sign: make the e1'-to-e1'' component nonnegative
    if (wmat(1, 0).sgn() < 0 || (wmat(1, 0).is_zero() && wmat(0, 0).sgn() < 0))
      wmat = wmat * Rat(-1);
    out.exists = true;
    out.witness = wmat;
  }
  return out;
}

}  // namespace crsym
