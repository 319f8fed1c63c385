#include "disep/quad.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <thread>

#include "disep/errors.hpp"
#include "disep/linalg.hpp"
#include "disep/random.hpp"
#include "disep/separability.hpp"

namespace disep {

Ring quad_ring(const ExtensionDescriptor& ext) { return Ring({"x1", "x2", "x3", "x4"}, ext); }

namespace {

MultiPoly rename_pair(const MultiPoly& p, VarId from_u, VarId from_v, VarId to_u, VarId to_v) {
  const Ring& r = p.ring();
  std::map<VarId, MultiPoly> b;
  for (std::size_t i = 0; i < r.arity(); ++i) b.emplace(VarId{i}, MultiPoly::variable(r, VarId{i}));
  b[from_u] = MultiPoly::variable(r, to_u);
  b[from_v] = MultiPoly::variable(r, to_v);
  return substitute_into(p, r, b);
}

bool is_multiaffine(const MultiPoly& q) {
  for (std::size_t i = 0; i < q.ring().arity(); ++i) {
    if (q.degree_in(VarId{i}) > 1) return false;
  }
  return true;
}

FieldElement evaluate_at_rational(const MultiPoly& p, const FieldElement& x) { return p.evaluate({x}); }

}  // namespace

BiquadraticEdge BiquadraticEdge::on(VarId to_u, VarId to_v) const {
  BiquadraticEdge e = *this;
  e.h = rename_pair(h, u, v, to_u, to_v);
  e.u = to_u;
  e.v = to_v;
  return e;
}

BiquadraticEdge BiquadraticEdge::negated() const {
  BiquadraticEdge e = *this;
  e.h = -h;
  return e;
}

MultiPoly delta_pair(const MultiPoly& q, VarId x, VarId y) {
  if (!is_multiaffine(q)) throw DegreeError("delta_pair needs a multiaffine polynomial: " + q.to_string());
  if (x == y) throw DomainError("delta_pair needs two distinct variables");
  const MultiPoly qx = partial_derivative(q, x);
  const MultiPoly qy = partial_derivative(q, y);
  return qx * qy - q * partial_derivative(qx, y);
}

MultiPoly delta_single(const MultiPoly& h, VarId x) {
  if (h.degree_in(x) > 2) throw DegreeError("delta_single needs degree <= 2 in the variable: " + h.to_string());
  const MultiPoly hx = partial_derivative(h, x);
  return hx * hx - (h * partial_derivative(hx, x)).scaled(Rational(2));
}

BiquadraticEdge h_hat(const CanonicalCase& c, const FieldElement& alpha) {
  const FamilyPolys fam = canonical_family(c);
  const FieldElement pa = evaluate_at_rational(fam.P, FieldElement::lift(alpha, c.ext()));
  if (pa.is_zero()) throw ParameterError("P(" + alpha.to_string() + ") = 0");
  if (!pa.is_rational()) throw DomainError("P(alpha) = " + pa.to_string() + " is irrational");
  const Rational value = pa.to_rational();
  const auto [d, m] = squarefree_decompose(value);
  ExtensionDescriptor ext = c.ext();
  if (d != 1) {
    if (!d.fits_slong_p()) throw DomainError("radicand of P(alpha) too large");
    ext = ExtensionDescriptor::join(ext, ExtensionDescriptor{d.get_si()});
  }
  const FieldElement root = *FieldElement::sqrt_of_rational(value, ext);

  const Ring qr = quad_ring(ext);
  const MultiPoly f = change_ring(fam.F, trivariate_ring(ext));
  const std::map<VarId, MultiPoly> b{
      {VarId{0}, MultiPoly::variable(qr, VarId{0})},
      {VarId{1}, MultiPoly::variable(qr, VarId{1})},
      {VarId{2}, MultiPoly::constant(qr, FieldElement::lift(alpha, ext))},
  };
  BiquadraticEdge e;
  e.h = substitute_into(f, qr, b).scaled(root.inverse());
  e.u = VarId{0};
  e.v = VarId{1};
  e.parameter = alpha;
  e.normalization = root;
  const MultiPoly p = change_ring(fam.P, Ring({"x"}, ext));
  const MultiPoly d1 = delta_single(e.h, e.u);
  const MultiPoly d2 = delta_single(e.h, e.v);
  const MultiPoly p2 = univariate_in(p, qr, e.v);
  const MultiPoly p1 = univariate_in(p, qr, e.u);
  e.report.add("delta_x1(h) = P(x2)", d1 == p2, d1.to_string());
  e.report.add("delta_x2(h) = P(x1)", d2 == p1, d2.to_string());
  return e;
}

std::string to_string(EdgeSignConvention c) {
  return c == EdgeSignConvention::alternating ? "alternating" : "uniform";
}

EdgeSignConvention edge_sign_convention_from_string(const std::string& s) {
  if (s == "alternating") return EdgeSignConvention::alternating;
  if (s == "uniform") return EdgeSignConvention::uniform;
  throw ParseError("unknown edge sign convention '" + s + "'");
}

std::string to_string(QuadType t) { return t == QuadType::Q ? "Q" : "H"; }

MultiaffineQ synthesize_quad_equation(const BiquadraticEdge& e12, const BiquadraticEdge& e23,
                                      const BiquadraticEdge& e34, const BiquadraticEdge& e14) {
  ExtensionDescriptor ext;
  for (const auto* e : {&e12, &e23, &e34, &e14}) ext = ExtensionDescriptor::join(ext, e->h.ring().ext());
  const Ring r = quad_ring(ext);
  const MultiPoly h12 = change_ring(e12.h, r);
  const MultiPoly h23 = change_ring(e23.h, r);
  const MultiPoly h34 = change_ring(e34.h, r);
  const MultiPoly h14 = change_ring(e14.h, r);
  const VarId x1{0};
  const VarId x3{2};

  const MultiPoly den = h12 * h34 - h14 * h23;
  if (den.is_zero()) throw DegenerateInput("h12 h34 - h14 h23 vanishes identically");
  const MultiPoly num = partial_derivative(h12, x1) * h34 - partial_derivative(h14, x1) * h23 +
                        h23 * partial_derivative(h34, x3) - partial_derivative(h23, x3) * h34;

  // unknowns ordered grlex-descending so the normalized solution has leading coefficient 1
  std::vector<Exponents> monos;
  for (unsigned m = 0; m < 16; ++m) monos.push_back({m & 1u, (m >> 1) & 1u, (m >> 2) & 1u, (m >> 3) & 1u});
  std::sort(monos.begin(), monos.end(), [](const Exponents& a, const Exponents& b) { return GrlexLess{}(b, a); });

  std::vector<MultiPoly> columns;
  std::set<Exponents, GrlexLess> rows;
  for (const auto& e : monos) {
    const MultiPoly m = MultiPoly::monomial(r, e, FieldElement::one(ext));
    columns.push_back((partial_derivative(m, x1) * den).scaled(Rational(2)) - m * num);
    for (const auto& [t, c] : columns.back().terms()) rows.insert(t);
  }
  ExactMatrix mat(rows.size(), columns.size(), ext);
  std::size_t i = 0;
  for (const auto& t : rows) {
    for (std::size_t j = 0; j < columns.size(); ++j) mat.set(i, j, columns[j].coefficient(t));
    ++i;
  }
  const auto basis = nullspace(mat);
  if (basis.empty()) throw SynthesisError("edge data admit no multiaffine Q", 0);
  if (basis.size() > 1) {
    std::string msg = "edge data admit a " + std::to_string(basis.size()) + "-dimensional family of Q:";
    for (const auto& v : basis) {
      MultiPoly q(r);
      for (std::size_t j = 0; j < monos.size(); ++j) q.add_term(monos[j], v[j]);
      msg += " [" + q.to_string() + "]";
    }
    throw SynthesisError(msg, basis.size());
  }

  MultiaffineQ out;
  out.Q = MultiPoly(r);
  for (std::size_t j = 0; j < monos.size(); ++j) out.Q.add_term(monos[j], basis[0][j]);
  out.Q = out.Q.monic();
  out.alpha = e12.parameter;
  out.beta = e23.parameter;
  out.nullspace_dimension = 1;
  out.report.add("multiaffine", is_multiaffine(out.Q), out.Q.to_string());
  auto post = [&](const std::string& name, VarId a, VarId b, const MultiPoly& h) {
    const MultiPoly d = delta_pair(out.Q, a, b);
    const auto s = proportionality(d, h);
    out.report.add(name, s.has_value() && !s->is_zero(), s ? "scalar " + s->to_string() : d.to_string());
  };
  post("delta_x3x4(Q) ~ h12", VarId{2}, VarId{3}, h12);
  post("delta_x1x2(Q) ~ h34", VarId{0}, VarId{1}, h34);
  post("delta_x2x3(Q) ~ h14", VarId{1}, VarId{2}, h14);
  post("delta_x1x4(Q) ~ h23", VarId{0}, VarId{3}, h23);
  return out;
}

MultiaffineQ quad_for_case(const CanonicalCase& c, const FieldElement& alpha, const FieldElement& beta,
                           EdgeSignConvention convention) {
  const BiquadraticEdge ha = h_hat(c, alpha);
  BiquadraticEdge hb = h_hat(c, beta);
  if (convention == EdgeSignConvention::alternating) hb = hb.negated();
  const VarId x1{0}, x2{1}, x3{2}, x4{3};
  MultiaffineQ q = synthesize_quad_equation(ha, hb.on(x2, x3), ha.on(x3, x4), hb.on(x1, x4));
  Report edges;
  edges.merge(ha.report, "alpha edge: ");
  edges.merge(hb.report, "beta edge: ");
  edges.merge(q.report);
  q.report = std::move(edges);
  return q;
}

std::vector<Rational> find_square_parameters(const CanonicalCase& c, unsigned bound) {
  const MultiPoly p = canonical_P(c);
  std::set<Rational> found;
  const long hb = static_cast<long>(bound);
  for (long q = 1; q <= hb; ++q) {
    for (long n = -hb; n <= hb; ++n) {
      if (std::gcd(n, q) != 1) continue;
      const Rational x(n, q);
      const FieldElement v = p.evaluate({FieldElement::lift(FieldElement(x), p.ring().ext())});
      if (!v.is_rational() || v.to_rational().sign() <= 0) continue;
      if (rational_sqrt_exact(v.to_rational())) found.insert(x);
    }
  }
  return {found.begin(), found.end()};
}

bool biquadratic_nondegenerate(const MultiPoly& h, VarId x, VarId y) {
  if (h.is_zero()) return false;
  for (const auto& [a, b] : {std::pair{x, y}, std::pair{y, x}}) {
    auto cs = coeffs_in_variable(h, a);
    cs.resize(3, MultiPoly(h.ring()));
    // common root at y = oo: no coefficient reaches degree 2 in y
    if (std::all_of(cs.begin(), cs.end(), [&](const MultiPoly& c) { return c.degree_in(b) < 2; })) return false;
    MultiPoly g(h.ring());
    for (const auto& c : cs) g = gcd(g, c);
    if (!g.is_constant()) return false;
  }
  return true;
}

QuadClassification classify_type_QH(const MultiPoly& q) {
  if (q.is_zero()) throw DomainError("classify_type_QH needs a nonzero polynomial");
  const VarId x1{0}, x2{1}, x3{2}, x4{3};
  QuadClassification out;
  out.accompanying = {delta_pair(q, x3, x4), delta_pair(q, x1, x4), delta_pair(q, x1, x2), delta_pair(q, x2, x3)};
  const std::array<std::pair<VarId, VarId>, 4> pairs{{{x1, x2}, {x2, x3}, {x3, x4}, {x1, x4}}};
  bool all = true;
  for (std::size_t i = 0; i < 4; ++i) {
    out.nondegenerate[i] = biquadratic_nondegenerate(out.accompanying[i], pairs[i].first, pairs[i].second);
    all = all && out.nondegenerate[i];
  }
  out.type = all ? QuadType::Q : QuadType::H;
  return out;
}

void ConsistencyReport::merge(const ConsistencyReport& other) {
  trials += other.trials;
  agreements += other.agreements;
  failures += other.failures;
  singular_resamples += other.singular_resamples;
  witnesses.insert(witnesses.end(), other.witnesses.begin(), other.witnesses.end());
}

namespace {

struct FaceSolve {
  std::optional<FieldElement> value;
  bool singular = false;
};

// Solves Q(a, b, t, c) = 0 for t and flags a solution singular in any slot.
FaceSolve solve_face(const MultiPoly& q, const FieldElement& a, const FieldElement& b, const FieldElement& c) {
  const Ring& r = q.ring();
  const std::map<VarId, MultiPoly> bind{
      {VarId{0}, MultiPoly::constant(r, a)},
      {VarId{1}, MultiPoly::constant(r, b)},
      {VarId{3}, MultiPoly::constant(r, c)},
  };
  const MultiPoly lin = substitute(q, bind);
  auto cs = coeffs_in_variable(lin, VarId{2});
  cs.resize(2, MultiPoly(r));
  const FieldElement k1 = cs[1].constant_value();
  const FieldElement k0 = cs[0].constant_value();
  FaceSolve out;
  if (k1.is_zero()) {
    out.singular = true;
    return out;
  }
  const FieldElement t = -k0 / k1;
  const std::vector<FieldElement> point{a, b, t, c};
  for (std::size_t i = 0; i < 4; ++i) {
    if (partial_derivative(q, VarId{i}).evaluate(point).is_zero()) out.singular = true;
  }
  out.value = t;
  return out;
}

ConsistencyReport run_trials(const MultiPoly& q12, const MultiPoly& q13, const MultiPoly& q23, std::size_t from,
                             std::size_t to, std::uint64_t seed) {
  constexpr int kBudget = 100;
  const ExtensionDescriptor& ext = q12.ring().ext();
  ConsistencyReport rep;
  for (std::size_t trial = from; trial < to; ++trial) {
    Rng rng(derive_seed(seed, trial));
    bool done = false;
    for (int attempt = 0; attempt < kBudget && !done; ++attempt) {
      const FieldElement x = FieldElement(rng.rational(), ext);
      const FieldElement xa = FieldElement(rng.rational(), ext);
      const FieldElement xb = FieldElement(rng.rational(), ext);
      const FieldElement xc = FieldElement(rng.rational(), ext);
      const FaceSolve s12 = solve_face(q12, x, xa, xb);
      const FaceSolve s13 = solve_face(q13, x, xa, xc);
      const FaceSolve s23 = solve_face(q23, x, xb, xc);
      if (s12.singular || s13.singular || s23.singular) {
        ++rep.singular_resamples;
        continue;
      }
      const FaceSolve t1 = solve_face(q23, xa, *s12.value, *s13.value);
      const FaceSolve t2 = solve_face(q13, xb, *s12.value, *s23.value);
      const FaceSolve t3 = solve_face(q12, xc, *s13.value, *s23.value);
      if (t1.singular || t2.singular || t3.singular) {
        ++rep.singular_resamples;
        continue;
      }
      done = true;
      ++rep.trials;
      if (*t1.value == *t2.value && *t2.value == *t3.value) {
        ++rep.agreements;
      } else {
        ++rep.failures;
        if (rep.witnesses.size() < 5) {
          rep.witnesses.push_back("x=" + x.to_string() + " x1=" + xa.to_string() + " x2=" + xb.to_string() +
                                  " x3=" + xc.to_string() + " -> " + t1.value->to_string() + ", " +
                                  t2.value->to_string() + ", " + t3.value->to_string());
        }
      }
    }
    if (!done) throw Error("resample budget exhausted in trial " + std::to_string(trial));
  }
  return rep;
}

}  // namespace

ConsistencyReport check_cube_consistency(const MultiPoly& q12, const MultiPoly& q13, const MultiPoly& q23,
                                         std::size_t trials, std::uint64_t seed, unsigned threads) {
  ExtensionDescriptor ext;
  for (const auto* q : {&q12, &q13, &q23}) {
    if (q->ring().arity() != 4 || !is_multiaffine(*q)) throw DegreeError("cube faces need multiaffine Q in x1..x4");
    ext = ExtensionDescriptor::join(ext, q->ring().ext());
  }
  const Ring r = quad_ring(ext);
  const MultiPoly a = change_ring(q12, r);
  const MultiPoly b = change_ring(q13, r);
  const MultiPoly c = change_ring(q23, r);

  const unsigned n = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(trials, 1))));
  std::vector<ConsistencyReport> parts(n);
  std::vector<std::exception_ptr> errors(n);
  const std::size_t chunk = (trials + n - 1) / n;
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < n; ++t) {
      const std::size_t from = std::min(trials, t * chunk);
      const std::size_t to = std::min(trials, from + chunk);
      pool.emplace_back([&, t, from, to] {
        try {
          parts[t] = run_trials(a, b, c, from, to, seed);
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  ConsistencyReport rep;
  rep.seed = seed;
  for (const auto& p : parts) rep.merge(p);
  const QuadClassification cls = classify_type_QH(a);
  rep.type = cls.type;
  rep.edges_nondegenerate = cls.nondegenerate;
  return rep;
}

ConsistencyReport check_3d_consistency(const CanonicalCase& c, const FieldElement& a1, const FieldElement& a2,
                                       const FieldElement& a3, std::size_t trials, std::uint64_t seed,
                                       EdgeSignConvention convention, unsigned threads) {
  const MultiaffineQ q12 = quad_for_case(c, a1, a2, convention);
  const MultiaffineQ q13 = quad_for_case(c, a1, a3, convention);
  const MultiaffineQ q23 = quad_for_case(c, a2, a3, convention);
  ConsistencyReport rep = check_cube_consistency(q12.Q, q13.Q, q23.Q, trials, seed, threads);
  rep.convention = to_string(convention);
  return rep;
}

}  // namespace disep
