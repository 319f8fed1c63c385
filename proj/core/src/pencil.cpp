#include "disep/pencil.hpp"

#include <algorithm>

#include "disep/errors.hpp"
#include "disep/linalg.hpp"
#include "disep/separability.hpp"

namespace disep {

namespace {

const char* kCoefficientNames[] = {"a0", "a1", "a2", "a3", "a4", "a5"};

std::vector<std::string> with_prefix(std::vector<std::string> head, const Ring& params) {
  for (const auto& n : params.names()) head.push_back(n);
  return head;
}

MultiPoly lifted(const MultiPoly& p, const Ring& target) { return change_ring(p, target); }

PrintedDiff diff_exact(const std::string& name, const MultiPoly& printed, const MultiPoly& computed) {
  const MultiPoly d = computed - printed;
  return PrintedDiff{name, printed.to_string(), computed.to_string(), d.to_string(), d.is_zero()};
}

// Computed form rescaled to the printed leading coefficient before differencing.
PrintedDiff diff_up_to_scalar(const std::string& name, const MultiPoly& printed, const MultiPoly& computed) {
  PrintedDiff out{name, printed.to_string(), computed.to_string(), "", false};
  if (printed.is_zero() || computed.is_zero()) {
    out.matches = printed.is_zero() && computed.is_zero();
    out.difference = out.matches ? "0" : "one side vanishes";
    return out;
  }
  const MultiPoly scaled = computed.scaled(printed.leading_coefficient() / computed.leading_coefficient());
  const MultiPoly d = scaled - printed;
  out.difference = d.to_string();
  out.matches = d.is_zero();
  return out;
}

bool proportional(const MultiPoly& a, const MultiPoly& b) { return proportionality(a, b).has_value(); }

// Factor ring {head, parameters...} sharing the parameter names of `ring` after its first three slots.
Ring factor_ring(const Ring& ring, const std::string& head) {
  std::vector<std::string> names{head};
  for (std::size_t i = 3; i < ring.arity(); ++i) names.push_back(ring.names()[i]);
  return Ring(names, ring.ext());
}

MultiPoly move_to_factor_ring(const MultiPoly& p, VarId from, const Ring& target) {
  std::map<VarId, MultiPoly> b{{from, MultiPoly::variable(target, VarId{0})}};
  return substitute_into(p, target, b);
}

MultiPoly move_from_factor_ring(const MultiPoly& p, const Ring& ring, VarId to) {
  std::map<VarId, MultiPoly> b{{VarId{0}, MultiPoly::variable(ring, to)}};
  return substitute_into(p, ring, b);
}

// Darboux ring x1, x2, s + parameters.
Ring darboux_ring(const Ring& params) { return Ring(with_prefix({"x1", "x2", "s"}, params), params.ext()); }

PencilModel build_model(const TangentialConic& c, const std::string& provenance) {
  const Ring& params = c.parameter_ring();
  const Ring zr(with_prefix({"z1", "z2", "z3", "s"}, params), params.ext());
  std::array<MultiPoly, 6> a;
  for (std::size_t i = 0; i < 6; ++i) a[i] = lifted(c.a[i], zr);
  const MultiPoly z1 = MultiPoly::variable(zr, "z1");
  const MultiPoly z2 = MultiPoly::variable(zr, "z2");
  const MultiPoly z3 = MultiPoly::variable(zr, "z3");
  const MultiPoly s = MultiPoly::variable(zr, "s");
  const MultiPoly zero(zr);
  const MultiPoly two_s = s.scaled(Rational(2));
  const std::vector<std::vector<MultiPoly>> mat{
      {zero, z1, z2, z3},
      {z1, a[0], a[1], a[5] - two_s},
      {z2, a[1], a[2] + s, a[3]},
      {z3, a[5] - two_s, a[3], a[4]},
  };
  const MultiPoly det = poly_determinant(mat);

  PencilModel m{provenance, darboux_ring(params), {}, {}, {}, {}, {}, {}, {}, {}, {}};
  const Ring& r = m.ring;
  for (std::size_t i = 0; i < 6; ++i) m.conic.a[i] = lifted(c.a[i], r);
  const MultiPoly x1 = MultiPoly::variable(r, "x1");
  const MultiPoly x2 = MultiPoly::variable(r, "x2");
  const std::map<VarId, MultiPoly> darboux{
      {zr.var("z1"), x1 * x2},
      {zr.var("z2"), (x1 + x2).scaled(Rational(1, 2))},
      {zr.var("z3"), MultiPoly::constant(r, Rational(1))},
  };
  m.F = substitute_into(det, r, darboux);
  auto lkh = coeffs_in_variable(m.F, m.s());
  lkh.resize(3, MultiPoly(r));
  m.H = lkh[0];
  m.K = lkh[1];
  m.L = lkh[2];
  const MultiPoly expect_l = (x1 - x2) * (x1 - x2);
  m.report.add("L = (x1 - x2)^2", m.L == expect_l, m.L.to_string());
  return m;
}

std::optional<Rational> positive_square_root(const FieldElement& v) {
  if (!v.is_rational() || v.to_rational().sign() <= 0) return std::nullopt;
  return rational_sqrt_exact(v.to_rational());
}

}  // namespace

TangentialConic TangentialConic::numeric(const std::array<Rational, 6>& values) {
  const Ring r{std::vector<std::string>{}};
  TangentialConic c;
  for (std::size_t i = 0; i < 6; ++i) c.a[i] = MultiPoly::constant(r, values[i]);
  return c;
}

TangentialConic TangentialConic::symbolic() {
  const Ring r(std::vector<std::string>(std::begin(kCoefficientNames), std::end(kCoefficientNames)));
  TangentialConic c;
  for (std::size_t i = 0; i < 6; ++i) c.a[i] = MultiPoly::variable(r, VarId{i});
  return c;
}

MultiPoly TangentialConic::at_line(const std::array<MultiPoly, 3>& w) const {
  const auto& [w1, w2, w3] = w;
  return a[0] * w1 * w1 + a[2] * w2 * w2 + a[4] * w3 * w3 +
         (a[3] * w2 * w3 + a[5] * w1 * w3 + a[1] * w1 * w2).scaled(Rational(2));
}

std::string to_string(PencilKind k) {
  switch (k) {
    case PencilKind::general: return "general";
    case PencilKind::B: return "B";
    case PencilKind::D: return "D";
    case PencilKind::C22: return "C22";
  }
  return "general";
}

PencilKind pencil_kind_from_string(const std::string& s) {
  if (s == "general") return PencilKind::general;
  if (s == "B") return PencilKind::B;
  if (s == "D") return PencilKind::D;
  if (s == "C22") return PencilKind::C22;
  throw ParseError("unknown pencil kind '" + s + "'");
}

MultiPoly poly_determinant(const std::vector<std::vector<MultiPoly>>& m) {
  const std::size_t n = m.size();
  if (n == 0) throw DomainError("determinant of an empty matrix");
  if (n == 1) return m[0][0];
  MultiPoly det(m[0][0].ring());
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::vector<MultiPoly>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<MultiPoly> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != j) row.push_back(m[i][k]);
      }
      minor.push_back(std::move(row));
    }
    const MultiPoly term = m[0][j] * poly_determinant(minor);
    if (j % 2 == 0) {
      det += term;
    } else {
      det -= term;
    }
  }
  return det;
}

void extract_P_J(PencilModel& m) {
  const Ring& r = m.ring;
  const MultiPoly ds = discriminant_in_variable(m.F, m.s());
  auto fs = rank1_bivariate_factorization(ds, m.x1(), m.x2());
  if (!fs) throw DegenerateInput("D_s of the pencil equation is not a product P(x1) P(x2)");
  const MultiPoly p_hat_x1 = fs->p;
  const MultiPoly p_hat_x2 = permute_variables(p_hat_x1, [&] {
    std::vector<std::size_t> perm(r.arity());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    std::swap(perm[0], perm[1]);
    return perm;
  }());
  const FieldElement c_s = fs->q.leading_coefficient();
  m.report.add("D_s symmetric split", fs->q.monic() == p_hat_x2, "c_s = " + c_s.to_string());

  const MultiPoly d1 = formal_discriminant(m.F, m.x1());
  const MultiPoly d2 = formal_discriminant(m.F, m.x2());
  auto f1 = rank1_bivariate_factorization(d1, m.s(), m.x2());
  auto f2 = rank1_bivariate_factorization(d2, m.s(), m.x1());
  if (!f1 || !f2) throw DegenerateInput("D_x of the pencil equation is not a product J(s) P(x)");
  const MultiPoly j_hat = f1->p;
  const FieldElement c_1 = f1->q.leading_coefficient();
  const FieldElement c_2 = f2->q.leading_coefficient();
  m.report.add("D_x1 factor in x2 is P", f1->q.monic() == p_hat_x2);
  m.report.add("D_x2 factor in x1 is P", f2->q.monic() == p_hat_x1);
  m.report.add("D_x1 and D_x2 give the same J", f2->p == j_hat);

  // Scale P so that D_s = P(x1) P(x2) whenever c_s is a rational square.
  MultiPoly p = p_hat_x1;
  MultiPoly j = j_hat;
  FieldElement ps = c_s;
  if (auto root = positive_square_root(c_s)) {
    p = p.scaled(*root);
    j = j.scaled(c_1 / FieldElement(*root));
    ps = FieldElement(1);
  }
  m.scalars["c_s"] = c_s;
  m.scalars["c_x1"] = c_1;
  m.scalars["c_x2"] = c_2;
  m.scalars["P_scale"] = ps;
  m.P = move_to_factor_ring(p, m.x1(), factor_ring(r, "x"));
  m.J = move_to_factor_ring(j, m.s(), factor_ring(r, "s"));
  m.report.add("deg P <= 4", m.P.degree_in(VarId{0}) <= 4, "deg " + std::to_string(m.P.degree_in(VarId{0})));
  m.report.add("deg J <= 3", m.J.degree_in(VarId{0}) <= 3, "deg " + std::to_string(m.J.degree_in(VarId{0})));

  if (ps.is_one()) {
    const MultiPoly px1 = move_from_factor_ring(m.P, r, m.x1());
    const MultiPoly px2 = move_from_factor_ring(m.P, r, m.x2());
    const MultiPoly js = move_from_factor_ring(m.J, r, m.s());
    m.report.add("D_s = P(x1) P(x2)", ds == px1 * px2);
    m.report.add("D_x1 = J(s) P(x2)", d1 == js * px2);
    m.report.add("D_x2 = (c_x2/c_x1) J(s) P(x1)", d2 == (js * px1).scaled(c_2 / c_1));
  }
}

PrintedGeneral printed_general_forms(const PencilModel& m) {
  const Ring& r = m.ring;
  const auto& a = m.conic.a;
  const MultiPoly x1 = MultiPoly::variable(r, "x1");
  const MultiPoly x2 = MultiPoly::variable(r, "x2");
  const MultiPoly one = MultiPoly::constant(r, Rational(1));
  auto q = [&](long n, long d = 1) { return MultiPoly::constant(r, Rational(n, d)); };
  const MultiPoly sum = x1 + x2;
  const MultiPoly prod = x1 * x2;
  const MultiPoly sq = x1 * x1 + x2 * x2;

  PrintedGeneral g;
  g.L = (x1 - x2) * (x1 - x2);
  g.K = -a[4] * prod * prod + q(2) * a[3] * prod * sum - a[5] * sq - q(4) * a[2] * prod + q(2) * a[1] * sum - a[0];
  const MultiPoly w = a[5] * a[5] - a[0] * a[4];
  g.H = (a[3] * a[3] - a[2] * a[4]) * prod * prod + ((a[1] * a[4] - a[3] * a[5]) * prod + a[0] * a[3] - a[5] * a[1]) * sum +
        w * sq * q(1, 2) + (w * q(1, 2) + q(2) * a[5] * a[2] - q(2) * a[1] * a[3]) * prod + a[1] * a[1] - a[0] * a[2];
  auto p_of = [&](const MultiPoly& x) {
    return a[4] * x.pow(4) - q(4) * a[3] * x.pow(3) + (q(4) * a[2] + q(2) * a[5]) * x * x - q(4) * a[1] * x + a[0];
  };
  g.P_x1 = p_of(x1);
  g.P_x2 = p_of(x2);
  const MultiPoly s = MultiPoly::variable(r, "s");
  g.J = q(4) * s.pow(3) + q(4) * (a[2] - a[5]) + (w + q(4) * (a[1] * a[3] - a[2] * a[5])) * s + a[0] * a[3] * a[3] +
        a[2] * a[5] * a[5] + a[4] * a[1] * a[1] - a[0] * a[2] * a[4] - q(2) * a[1] * a[3] * a[5];
  (void)one;
  return g;
}

PencilModel tangential_pencil_equation(const TangentialConic& c) {
  PencilModel m = build_model(c, "general");
  const auto g = printed_general_forms(m);
  m.report.printed_diffs.push_back(diff_exact("L", g.L, m.L));
  m.report.printed_diffs.push_back(diff_exact("K", g.K, m.K));
  m.report.printed_diffs.push_back(diff_exact("H", g.H, m.H));
  extract_P_J(m);
  const MultiPoly p_x1 = move_from_factor_ring(m.P, m.ring, m.x1());
  const MultiPoly j_s = move_from_factor_ring(m.J, m.ring, m.s());
  m.report.add("P matches the printed quartic up to scalar", proportional(p_x1, g.P_x1), m.P.to_string());
  m.report.printed_diffs.push_back(diff_up_to_scalar("P", move_to_factor_ring(g.P_x1, m.x1(), m.P.ring()), m.P));
  m.report.printed_diffs.push_back(diff_up_to_scalar("J", move_to_factor_ring(g.J, m.s(), m.J.ring()), m.J));
  (void)j_s;
  return m;
}

std::array<Rational, 6> degenerate_conic_coefficients(PencilKind kind, const std::map<std::string, Rational>& params) {
  auto get = [&](const char* n) {
    auto it = params.find(n);
    if (it == params.end()) throw ParameterError(std::string("missing parameter '") + n + "'");
    return it->second;
  };
  const Rational a = get("a");
  switch (kind) {
    case PencilKind::B: {
      const Rational a0 = get("a0");
      const Rational a1 = get("a1");
      if (a.is_zero() || a0.is_zero()) throw ParameterError("case B needs a != 0 and a0 != 0");
      const Rational a2 = a1 * a1 / a0;
      const Rational a3 = (a * a1 + 2 * a1 - 2 * a0) / a;
      const Rational a4 = (a * a0 + 4 * a1 - 4 * a0) / a;
      const Rational a5 = -(a * a0 * a0 - 4 * a * a0 * a1 + 2 * a * a1 * a1 - 2 * a0 * a1 + 2 * a0 * a0) / (a * a0);
      return {a0, a1, a2, a3, a4, a5};
    }
    case PencilKind::D: {
      const Rational a3 = get("a3");
      const Rational a4 = get("a4");
      const Rational den = 3 * a4 - 4 * a3 + a * a4;
      if (den.is_zero()) throw ParameterError("case D needs 3 a4 - 4 a3 + a a4 != 0");
      const Rational a0 = -3 * a4 + 4 * a3;
      const Rational a1 = -2 * a4 + 3 * a3;
      const Rational a2 = (12 * a3 * a4 + a * a3 * a3 - 4 * a4 * a4 - 9 * a3 * a3) / den;
      const Rational a5 = (6 * a3 * a4 * (1 + a) - a4 * a4 - 6 * a3 * a3 - 3 * a * a4 * a4 - 2 * a * a3 * a3) / den;
      return {a0, a1, a2, a3, a4, a5};
    }
    case PencilKind::C22: {
      const Rational a4 = get("a4");
      const Rational a5 = get("a5");
      const Rational a0 = a * a * a4;
      const Rational a1 = a * a4 * (a + 1) / 2;
      const Rational a2 = (a * a * a4 + 4 * a * a4 - 2 * a5 + a4) / 4;
      const Rational a3 = (a + 1) * a4 / 2;
      return {a0, a1, a2, a3, a4, a5};
    }
    case PencilKind::general: break;
  }
  throw ParameterError("the general pencil has no degenerate coefficient formulas");
}

namespace {

void require_generic(PencilKind kind, const std::map<std::string, Rational>& p) {
  const Rational& a = p.at("a");
  switch (kind) {
    case PencilKind::B: {
      const Rational& a0 = p.at("a0");
      const Rational& a1 = p.at("a1");
      if (a.is_zero() || a.is_one()) throw ParameterError("case B needs a not in {0, 1}");
      if (a0.is_zero()) throw ParameterError("case B needs a0 != 0");
      if (a1 == a0) throw ParameterError("case B needs a1 != a0");
      if (a * a1 == a0) throw ParameterError("case B needs a a1 != a0");
      break;
    }
    case PencilKind::D:
      if (a.is_one()) throw ParameterError("case D needs a != 1");
      if (p.at("a3") == p.at("a4")) throw ParameterError("case D needs a3 != a4");
      break;
    case PencilKind::C22:
      if (a.is_one()) throw ParameterError("case C22 needs a != 1");
      if (p.at("a4").is_zero()) throw ParameterError("case C22 needs a4 != 0");
      break;
    case PencilKind::general: break;
  }
}

struct DegenerateForms {
  MultiPoly K, H;   // contributions to F as printed, already scaled
  MultiPoly P, J;   // printed factorizations, in the model's factor rings
  RootStructure p_code;
  RootStructure j_code3;
  RootStructure j_code4;
};

}  // namespace

PencilModel degenerate_pencil(PencilKind kind, const std::map<std::string, Rational>& params) {
  if (kind == PencilKind::general) throw ParameterError("use tangential_pencil_equation for the general pencil");
  const auto coeffs = degenerate_conic_coefficients(kind, params);
  require_generic(kind, params);
  PencilModel m = build_model(TangentialConic::numeric(coeffs), to_string(kind));
  extract_P_J(m);

  const Ring& r = m.ring;
  const MultiPoly x1 = MultiPoly::variable(r, "x1");
  const MultiPoly x2 = MultiPoly::variable(r, "x2");
  const MultiPoly s = MultiPoly::variable(r, "s");
  const MultiPoly sum = x1 + x2;
  const MultiPoly prod = x1 * x2;
  const MultiPoly sq = x1 * x1 + x2 * x2;
  auto k = [&](const Rational& v) { return MultiPoly::constant(r, v); };
  const Rational a = params.at("a");

  const Ring& xr = m.P.ring();
  const Ring& sr = m.J.ring();
  const MultiPoly x = MultiPoly::variable(xr, VarId{0});
  const MultiPoly sv = MultiPoly::variable(sr, VarId{0});
  auto kx = [&](const Rational& v) { return MultiPoly::constant(xr, v); };
  auto ks = [&](const Rational& v) { return MultiPoly::constant(sr, v); };
  const MultiPoly xm1 = x - kx(1);

  MultiPoly k_printed(r), h_printed(r), p_printed(xr), j_printed(sr);
  RootStructure p_code, j3, j4;
  std::string p_literal;
  switch (kind) {
    case PencilKind::B: {
      const Rational a0 = params.at("a0");
      const Rational a1 = params.at("a1");
      const MultiPoly kb = k(a0 * (a * a0 + 4 * a1 - 4 * a0)) * prod * prod -
                           k(2 * a0 * (a * a1 + 2 * a1 - 2 * a0)) * prod * sum +
                           k(2 * a1 * a0 * (1 + 2 * a) - a * a0 * a0 - 2 * a * a1 * a1 - 2 * a0 * a0) * sq +
                           k(4 * a * a1 * a1) * prod - k(2 * a * a0 * a1) * sum + k(a * a0 * a0);
      const MultiPoly hb = k(4 * a0) * prod * prod - k(2 * a0 * (a + 2)) * prod * sum +
                           k(a0 + 2 * a * a0 - a * a1) * sq + k(2 * (a0 + 2 * a * a0 + a * a1)) * prod -
                           k(2 * a * a0) * sum;
      k_printed = kb.scaled(-(a * a0).inverse());
      h_printed = hb.scaled((a0 - a * a1) * (a1 - a0) * (a1 - a0) / (a0 * a0 * a * a));
      p_printed = xm1 * xm1 * (kx(4 * (a0 - a1) - a * a0) * x * x + kx(2 * a * (2 * a1 - a0)) * x - kx(a * a0));
      const MultiPoly dbl = sv * ks(a * a0) + ks((a * a1 - a0) * (a1 - a0));
      j_printed = (sv * ks(a0) + ks((a0 - a1) * (a0 - a1))) * dbl * dbl;
      p_code = RootStructure{{1, 1, 2}, 0};
      j3 = RootStructure{{1, 2}, 0};
      j4 = RootStructure{{1, 1, 2}, 1};
      break;
    }
    case PencilKind::D: {
      const Rational a3 = params.at("a3");
      const Rational a4 = params.at("a4");
      const Rational den = 3 * a4 - 4 * a3 + a * a4;
      const MultiPoly kd = k(a * a4 * a4 - 4 * a3 * a4 + 3 * a4 * a4) * prod * prod - k(2 * a3 * den) * prod * sum +
                           k(6 * a3 * a4 * (1 + a) - 2 * a * a3 * a3 - 3 * a * a4 * a4 - a4 * a4 - 6 * a3 * a3) * sq +
                           k(48 * a3 * a4 + 4 * a * a3 * a3 - 36 * a3 * a3 - 16 * a4 * a4) * prod +
                           k(2 * (2 * a4 - 3 * a3) * den) * sum - k((3 * a4 - 4 * a3) * den);
      const MultiPoly hd =
          k(4 * (a * a4 + 3 * a4 - 4 * a3)) * prod * prod - k(2 * (a + 3) * den) * prod * sum +
          k(3 * a4 * a * a + 6 * a * a4 + 7 * a4 - a * a * a3 - 6 * a * a3 - 9 * a3) * sq +
          k(22 * a4 - 36 * a * a3 + 6 * a4 * a * a - 30 * a3 + 2 * a * a * a3 + 36 * a * a4) * prod -
          k(2 * (1 + 3 * a) * den) * sum + k(4 * a * den);
      k_printed = kd.scaled(-den.inverse());
      h_printed = hd.scaled((a4 - a3).pow(3) / (den * den));
      // printed factor reads "a4 x_2"; the univariate reading a4 x is used for the comparison
      p_printed = xm1 * xm1 * xm1 * (kx(a4) * x + kx(3 * a4 - 4 * a3));
      p_literal = "(x - 1)^3*(a4*x_2 + 3*a4 - 4*a3)";
      const MultiPoly lin = sv * ks(den) + ks((a - 1) * (a3 - a4) * (a3 - a4));
      j_printed = lin * lin * lin;
      p_code = RootStructure{{1, 3}, 0};
      j3 = RootStructure{{3}, 0};
      j4 = RootStructure{{1, 3}, 1};
      break;
    }
    case PencilKind::C22: {
      const Rational a4 = params.at("a4");
      const Rational a5 = params.at("a5");
      k_printed = -k(a4) * prod * prod + k(a4 * (a + 1)) * prod * sum - k(a5) * sq +
                  k(2 * a5 - a4 - 4 * a * a4 - a * a * a4) * prod + k(a * a4 * (a + 1)) * sum - k(a * a * a4);
      const MultiPoly hc = -k(2 * a4) * prod * prod + k(2 * a4 * (a + 1)) * prod * sum - k(a * a4 + a5) * sq +
                           k(2 * a5 - 2 * a4 - 2 * a * a * a4 - 6 * a * a4) * prod + k(2 * a * a4 * (a + 1)) * sum -
                           k(2 * a * a * a4);
      h_printed = hc.scaled((a * a4 - a5) / 4);
      const MultiPoly xma = x - kx(a);
      p_printed = xm1 * xm1 * xma * xma;
      const MultiPoly dbl = sv * ks(2) + ks(a * a4 - a5);
      j_printed = dbl * dbl * (sv * ks(4) - ks(2 * a5) + ks(a4 * (1 + a * a)));
      p_code = RootStructure{{2, 2}, 0};
      j3 = RootStructure{{1, 2}, 0};
      j4 = RootStructure{{1, 1, 2}, 1};

      const MultiPoly lin = (s.scaled(Rational(2)) - k(a5) + k(a * a4)).scaled(Rational(1, 4));
      const MultiPoly rest = (x1 - x2) * (x1 - x2) * s.scaled(Rational(2)) - k(2 * a4) * prod * prod +
                             k(2 * a4 * (a + 1)) * prod * sum + k(2 * a5 - 2 * a4 - 2 * a * a * a4 - 6 * a * a4) * prod -
                             k(a * a4 + a5) * sq + k(2 * a * a4 * (a + 1)) * sum - k(2 * a * a * a4);
      m.report.add("F factors with (2s - a5 + a a4)/4", m.F == lin * rest);
      break;
    }
    case PencilKind::general: break;
  }

  m.report.add("K printed", m.K == k_printed);
  m.report.add("H printed", m.H == h_printed);
  m.report.printed_diffs.push_back(diff_exact("K", k_printed, m.K));
  m.report.printed_diffs.push_back(diff_exact("H", h_printed, m.H));
  m.report.add("P matches the printed factorization up to scalar", proportional(m.P, p_printed), m.P.to_string());
  m.report.add("J matches the printed factorization up to scalar", proportional(m.J, j_printed), m.J.to_string());
  PrintedDiff pd = diff_up_to_scalar("P", p_printed, m.P);
  if (!p_literal.empty()) {
    pd.printed = p_literal;
    pd.matches = false;
    pd.difference = "printed factor contains x_2; reading it as a4*x gives difference " + pd.difference;
  }
  m.report.printed_diffs.push_back(std::move(pd));
  m.report.printed_diffs.push_back(diff_up_to_scalar("J", j_printed, m.J));

  const RootStructure pc = root_structure(m.P, 4);
  const RootStructure jc3 = root_structure(m.J, 3);
  const RootStructure jc4 = root_structure(m.J, 4);
  m.report.add("root structure of P", pc.partition == p_code.partition, pc.to_string() + " expected " + p_code.to_string());
  m.report.add("root structure of J (degree 3)", jc3.partition == j3.partition,
               jc3.to_string() + " expected " + j3.to_string());
  m.report.add("root structure of J (degree 4, s = oo simple)", jc4.partition == j4.partition && jc4.at_infinity == 1,
               jc4.to_string() + " expected " + j4.to_string());
  return m;
}

std::map<std::string, Rational> random_degenerate_params(PencilKind kind, Rng& rng) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::map<std::string, Rational> p;
    p["a"] = rng.rational();
    switch (kind) {
      case PencilKind::B:
        p["a0"] = rng.rational();
        p["a1"] = rng.rational();
        break;
      case PencilKind::D:
        p["a3"] = rng.rational();
        p["a4"] = rng.rational();
        break;
      case PencilKind::C22:
        p["a4"] = rng.rational();
        p["a5"] = rng.rational();
        break;
      case PencilKind::general: throw ParameterError("no degenerate parameters for the general pencil");
    }
    try {
      degenerate_conic_coefficients(kind, p);
      require_generic(kind, p);
      return p;
    } catch (const ParameterError&) {
    }
  }
  throw ParameterError("could not sample generic parameters");
}

namespace {

MultiPoly pencil_at(const PencilModel& m, const Rational& s0) {
  return substitute(m.F, {{m.s(), MultiPoly::constant(m.ring, s0)}});
}

// Multiplicity of s0 as a root of J.
unsigned root_multiplicity(const MultiPoly& j, const Rational& s0) {
  unsigned mult = 0;
  MultiPoly d = j;
  while (!d.is_zero() && d.evaluate({FieldElement(s0)}).is_zero()) {
    ++mult;
    d = partial_derivative(d, VarId{0});
  }
  return mult;
}

}  // namespace

Report remark_identity_checks(PencilKind kind, const std::map<std::string, Rational>& params) {
  Report rep;
  if (kind == PencilKind::general) {
    const PencilModel m = tangential_pencil_equation(TangentialConic::symbolic());
    rep.add("J has exact degree 3 (simple zero at s = oo)", m.J.degree_in(VarId{0}) == 3, m.J.to_string());
    // point conic of C2: adjugate of its tangential matrix
    const Ring zr({"z1", "z2", "z3"});
    auto q = [&](long v) { return MultiPoly::constant(zr, Rational(v)); };
    const std::vector<std::vector<MultiPoly>> t{{q(0), q(0), q(-2)}, {q(0), q(1), q(0)}, {q(-2), q(0), q(0)}};
    MultiPoly form(zr);
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) {
        std::vector<std::vector<MultiPoly>> minor;
        for (std::size_t r = 0; r < 3; ++r) {
          if (r == j) continue;
          std::vector<MultiPoly> row;
          for (std::size_t c = 0; c < 3; ++c) {
            if (c != i) row.push_back(t[r][c]);
          }
          minor.push_back(row);
        }
        MultiPoly cof = poly_determinant(minor);
        if ((i + j) % 2) cof = -cof;
        form += cof * MultiPoly::variable(zr, VarId{i}) * MultiPoly::variable(zr, VarId{j});
      }
    }
    const MultiPoly x1 = MultiPoly::variable(m.ring, "x1");
    const MultiPoly x2 = MultiPoly::variable(m.ring, "x2");
    const MultiPoly image = substitute_into(form, m.ring,
                                            {{VarId{0}, x1 * x2},
                                             {VarId{1}, (x1 + x2).scaled(Rational(1, 2))},
                                             {VarId{2}, MultiPoly::constant(m.ring, Rational(1))}});
    rep.add("s^2 coefficient L is the Darboux image of C2", proportional(m.L, image), image.to_string());
    return rep;
  }

  const PencilModel m = degenerate_pencil(kind, params);
  const Ring& r = m.ring;
  const MultiPoly x1 = MultiPoly::variable(r, "x1");
  const MultiPoly x2 = MultiPoly::variable(r, "x2");
  auto k = [&](const Rational& v) { return MultiPoly::constant(r, v); };
  const MultiPoly tangent_r = (x1 - k(1)) * (x1 - k(1)) * (x2 - k(1)) * (x2 - k(1));
  const Rational a = params.at("a");
  auto check_root = [&](const std::string& name, const Rational& s0, unsigned mult, const MultiPoly& conic) {
    const unsigned got = root_multiplicity(m.J, s0);
    rep.add(name + ": root of J with multiplicity " + std::to_string(mult), got == mult,
            "s = " + s0.to_string() + ", multiplicity " + std::to_string(got));
    const MultiPoly f0 = pencil_at(m, s0);
    if (conic.is_zero()) {
      rep.add(name + ": F vanishes identically", f0.is_zero(), f0.to_string());
    } else {
      auto sc = proportionality(f0, conic);
      rep.add(name + ": degenerate conic", sc.has_value(), sc ? "scalar " + sc->to_string() : f0.to_string());
    }
  };
  switch (kind) {
    case PencilKind::B: {
      const Rational a0 = params.at("a0");
      const Rational a1 = params.at("a1");
      check_root("double root", (a0 - a1) * (a * a1 - a0) / (a * a0), 2, tangent_r);
      const MultiPoly line = x1 + x2 + k(a - 2) * x1 * x2 - k(a);
      check_root("simple root", -(a1 - a0) * (a1 - a0) / a0, 1, line * line);
      break;
    }
    case PencilKind::D: {
      const Rational a3 = params.at("a3");
      const Rational a4 = params.at("a4");
      const Rational den = 3 * a4 - 4 * a3 + a * a4;
      check_root("triple root", (1 - a) * (a3 - a4) * (a3 - a4) / den, 3, tangent_r);
      break;
    }
    case PencilKind::C22: {
      const Rational a4 = params.at("a4");
      const Rational a5 = params.at("a5");
      const MultiPoly line = (x1 + x2) * k(1 + a) - k(2) * x1 * x2 - k(2 * a);
      check_root("simple root", (2 * a5 - a4 * (1 + a * a)) / 4, 1, line * line);
      check_root("double root", (a5 - a * a4) / 2, 2, MultiPoly(r));
      break;
    }
    case PencilKind::general: break;
  }
  return rep;
}

namespace {

KowalevskiModel kowalevski_in(const Ring& r, const MultiPoly& l1, const MultiPoly& l, const MultiPoly& c,
                              const MultiPoly& k) {
  KowalevskiModel km{r, MultiPoly(r), {}, {}, {}};
  const MultiPoly s = MultiPoly::variable(r, "s");
  const MultiPoly x1 = MultiPoly::variable(r, "x1");
  const MultiPoly x2 = MultiPoly::variable(r, "x2");
  auto q = [&](long n, long d = 1) { return MultiPoly::constant(r, Rational(n, d)); };
  const MultiPoly ck = c * c - k * k;
  const MultiPoly sum = x1 + x2;
  const MultiPoly prod = x1 * x2;
  const MultiPoly big_r = -prod * prod + q(6) * l1 * prod + q(2) * l * c * sum + ck;
  const MultiPoly big_r1 = -q(6) * l1 * prod * prod - ck * sum * sum - q(4) * l * c * prod * sum + q(6) * l1 * ck -
                           q(4) * c * c * l * l;
  const MultiPoly shifted = s - l1 * q(1, 2);
  km.Q = (x1 - x2) * (x1 - x2) * shifted * shifted - big_r * shifted - big_r1 * q(1, 4);

  auto p_of = [&](const MultiPoly& x) { return -x.pow(4) + q(6) * l1 * x * x + q(4) * l * c * x + ck; };
  const MultiPoly j_printed =
      q(4) * s.pow(3) + (ck - q(3) * l1 * l1) * s - l * l * c * c + l1.pow(3) - l1 * k * k + l1 * c * c;
  const MultiPoly p1 = p_of(x1);
  const MultiPoly p2 = p_of(x2);

  const MultiPoly ds = discriminant_in_variable(km.Q, r.var("s"));
  km.report.add("D_s(Q) = P(x1) P(x2)", ds == p1 * p2);
  const MultiPoly d1 = formal_discriminant(km.Q, r.var("x1"));
  const MultiPoly d2 = formal_discriminant(km.Q, r.var("x2"));
  const auto j1 = p2.is_zero() ? std::nullopt : divide_exact(d1, p2);
  const auto j2 = p1.is_zero() ? std::nullopt : divide_exact(d2, p1);
  km.report.add("D_x1(Q) = J(s) P(x2)", j1.has_value() && j1->degree_in(r.var("x1")) == 0 &&
                                             j1->degree_in(r.var("x2")) == 0);
  km.report.add("D_x2(Q) = J(s) P(x1) with the same J", j1 && j2 && *j1 == *j2);

  std::vector<std::string> fnames{"x"};
  std::vector<std::string> snames{"s"};
  for (std::size_t i = 3; i < r.arity(); ++i) {
    fnames.push_back(r.names()[i]);
    snames.push_back(r.names()[i]);
  }
  const Ring xr(fnames, r.ext());
  const Ring sr(snames, r.ext());
  km.P = substitute_into(p1, xr, {{r.var("x1"), MultiPoly::variable(xr, VarId{0})}});
  if (j1) {
    km.J = change_ring(*j1, sr);
    km.report.printed_diffs.push_back(diff_exact("J", change_ring(j_printed, sr), km.J));
  } else {
    km.J = MultiPoly(sr);
  }
  const auto cert = analyze_separability(km.Q, {r.var("s"), r.var("x1"), r.var("x2")}, DegreePolicy::formal);
  const bool sym = cert.kind == SeparabilityKind::symmetric && cert.distinguished == std::size_t{0};
  km.report.add("symmetric separability with s distinguished", sym || cert.kind == SeparabilityKind::strong,
                "kind " + to_string(cert.kind));
  return km;
}

}  // namespace

KowalevskiModel build_kowalevski(const FieldElement& l1, const FieldElement& l, const FieldElement& c,
                                 const FieldElement& k) {
  ExtensionDescriptor ext;
  for (const auto* v : {&l1, &l, &c, &k}) ext = ExtensionDescriptor::join(ext, v->descriptor());
  const Ring r({"s", "x1", "x2"}, ext);
  auto cst = [&](const FieldElement& v) { return MultiPoly::constant(r, FieldElement::lift(v, ext)); };
  return kowalevski_in(r, cst(l1), cst(l), cst(c), cst(k));
}

KowalevskiModel build_kowalevski_symbolic() {
  const Ring r({"s", "x1", "x2", "l1", "l", "c", "k"});
  return kowalevski_in(r, MultiPoly::variable(r, "l1"), MultiPoly::variable(r, "l"), MultiPoly::variable(r, "c"),
                       MultiPoly::variable(r, "k"));
}

std::pair<Rational, Rational> quartic_invariants(const std::array<Rational, 5>& q) {
  const auto& [a, b, c, d, e] = q;
  const Rational i = 12 * a * e - 3 * b * d + c * c;
  const Rational j = 72 * a * c * e + 9 * b * c * d - 27 * a * d * d - 27 * e * b * b - 2 * c * c * c;
  return {i, j};
}

Rational quartic_j_invariant(const MultiPoly& p) {
  if (p.ring().arity() != 1) throw DomainError("j-invariant needs a univariate polynomial");
  const unsigned deg = p.degree_in(VarId{0});
  if (deg != 3 && deg != 4) throw DomainError("j-invariant needs degree 3 or 4, got " + std::to_string(deg));
  const RootStructure rs = root_structure(p, 4);
  if (rs.partition.size() != 4) throw SingularCurve("curve y^2 = P is singular: root structure " + rs.to_string());
  std::array<Rational, 5> q;
  for (unsigned i = 0; i <= 4; ++i) q[i] = p.coefficient(Exponents{4 - i}).to_rational();
  const auto [i, j] = quartic_invariants(q);
  const Rational den = 4 * i.pow(3) - j * j;
  if (den.is_zero()) throw SingularCurve("vanishing discriminant");
  return 6912 * i.pow(3) / den;
}

TangentialConic conic_through_contacts(const std::array<Rational, 4>& contacts, const Rational& mix) {
  const TangentialConic sym = TangentialConic::symbolic();
  const Ring& r = sym.parameter_ring();
  std::vector<std::vector<FieldElement>> rows;
  for (const auto& c : contacts) {
    // tangent to C2 at parameter c: z1 - 2 c z2 + c^2 z3 = 0
    const MultiPoly form = sym.at_line({MultiPoly::constant(r, Rational(1)), MultiPoly::constant(r, -2 * c),
                                        MultiPoly::constant(r, c * c)});
    std::vector<FieldElement> row;
    for (std::size_t i = 0; i < 6; ++i) {
      Exponents e(6, 0);
      e[i] = 1;
      row.push_back(form.coefficient(e));
    }
    rows.push_back(std::move(row));
  }
  const auto basis = nullspace(ExactMatrix::from_rows(rows));
  if (basis.size() != 2) throw DegenerateInput("contact points do not cut out a two-dimensional family");
  std::array<Rational, 6> a;
  for (std::size_t i = 0; i < 6; ++i) a[i] = basis[0][i].to_rational() + mix * basis[1][i].to_rational();
  return TangentialConic::numeric(a);
}

}  // namespace disep
