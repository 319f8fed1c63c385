#include "disep/separability.hpp"

#include <algorithm>

#include "disep/errors.hpp"
#include "disep/linalg.hpp"

namespace disep {

std::string to_string(SeparabilityKind k) {
  switch (k) {
    case SeparabilityKind::strong: return "strong";
    case SeparabilityKind::symmetric: return "symmetric";
    case SeparabilityKind::weak: return "weak";
    case SeparabilityKind::none: return "none";
  }
  return "none";
}

SeparabilityKind separability_kind_from_string(const std::string& s) {
  if (s == "strong") return SeparabilityKind::strong;
  if (s == "symmetric") return SeparabilityKind::symmetric;
  if (s == "weak") return SeparabilityKind::weak;
  if (s == "none") return SeparabilityKind::none;
  throw ParseError("unknown separability kind '" + s + "'");
}

namespace {

using Grid = std::vector<std::vector<MultiPoly>>;

Grid coefficient_grid(const MultiPoly& d, VarId u, VarId v) {
  Grid g;
  for (const auto& row : coeffs_in_variable(d, u)) g.push_back(coeffs_in_variable(row, v));
  std::size_t width = 0;
  for (const auto& r : g) width = std::max(width, r.size());
  for (auto& r : g) r.resize(width, MultiPoly(d.ring()));
  return g;
}

bool grid_rank_at_most_one(const Grid& g) {
  const bool constant = std::all_of(g.begin(), g.end(), [](const auto& row) {
    return std::all_of(row.begin(), row.end(), [](const MultiPoly& e) { return e.is_constant(); });
  });
  if (constant) {
    std::vector<std::vector<FieldElement>> rows;
    for (const auto& r : g) {
      std::vector<FieldElement> row;
      for (const auto& e : r) row.push_back(e.constant_value());
      rows.push_back(std::move(row));
    }
    return rank(ExactMatrix::from_rows(rows)) <= 1;
  }
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t k = i + 1; k < g.size(); ++k) {
      for (std::size_t j = 0; j < g[i].size(); ++j) {
        for (std::size_t l = j + 1; l < g[i].size(); ++l) {
          if (!(g[i][j] * g[k][l] == g[i][l] * g[k][j])) return false;
        }
      }
    }
  }
  return true;
}

}  // namespace

std::optional<Rank1Factorization> rank1_bivariate_factorization(const MultiPoly& d, VarId u, VarId v) {
  if (d.is_zero()) return std::nullopt;
  const Grid g = coefficient_grid(d, u, v);
  if (!grid_rank_at_most_one(g)) return std::nullopt;

  // The sparsest nonzero column keeps the content computation small.
  std::size_t j0 = SIZE_MAX;
  std::size_t best = SIZE_MAX;
  for (std::size_t j = 0; j < g.front().size(); ++j) {
    std::size_t size = 0;
    bool nonzero = false;
    for (const auto& row : g) {
      size += row[j].term_count();
      nonzero = nonzero || !row[j].is_zero();
    }
    if (nonzero && size < best) {
      best = size;
      j0 = j;
    }
  }
  MultiPoly content(d.ring());
  for (const auto& row : g) content = gcd(content, row[j0]);

  const Ring& ring = d.ring();
  MultiPoly p(ring);
  std::size_t i0 = SIZE_MAX;
  Exponents e(ring.arity(), 0);
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i][j0].is_zero()) continue;
    if (i0 == SIZE_MAX) i0 = i;
    e[u.index] = static_cast<unsigned>(i);
    p += *divide_exact(g[i][j0], content) * MultiPoly::monomial(ring, e, FieldElement(1));
  }
  p = p.monic();
  const MultiPoly pi0 = coeffs_in_variable(p, u)[i0];

  MultiPoly q(ring);
  e.assign(ring.arity(), 0);
  for (std::size_t j = 0; j < g[i0].size(); ++j) {
    if (g[i0][j].is_zero()) continue;
    auto qj = divide_exact(g[i0][j], pi0);
    if (!qj) return std::nullopt;
    e[v.index] = static_cast<unsigned>(j);
    q += *qj * MultiPoly::monomial(ring, e, FieldElement(1));
  }
  if (!(p * q == d)) return std::nullopt;
  return Rank1Factorization{std::move(p), std::move(q)};
}

Ring univariate_ring(const ExtensionDescriptor& ext, const std::string& name) {
  return Ring(std::vector<std::string>{name}, ext);
}

MultiPoly to_univariate(const MultiPoly& p, VarId v, const std::string& name) {
  const Ring target = univariate_ring(p.ring().ext(), name);
  MultiPoly out(target);
  for (const auto& [e, c] : p.terms()) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (i != v.index && e[i] != 0)
        throw DomainError("polynomial " + p.to_string() + " is not univariate in " + p.ring().name(v));
    }
    out.add_term(Exponents{e[v.index]}, c);
  }
  return out;
}

namespace {

// Univariate image with the parameter variables kept: the factor variable
// is renamed to a shared slot so factors in different variables compare.
MultiPoly rename_to(const MultiPoly& p, VarId from, VarId to) {
  if (from == to) return p;
  std::vector<std::size_t> perm(p.ring().arity());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  std::swap(perm[from.index], perm[to.index]);
  return permute_variables(p, perm);
}

DiscriminantSplit split_discriminant(const MultiPoly& f, VarId x, VarId y, VarId z, DegreePolicy policy) {
  DiscriminantSplit s{x, y, z, MultiPoly(f.ring()), std::nullopt, std::nullopt, std::nullopt};
  if (policy == DegreePolicy::strict) {
    if (f.degree_in(x) != 2)
      throw DegenerateInput("degree of F in " + f.ring().name(x) + " is " + std::to_string(f.degree_in(x)) +
                            ", not 2");
    s.discriminant = discriminant_in_variable(f, x);
  } else {
    s.discriminant = formal_discriminant(f, x);
  }
  auto fac = rank1_bivariate_factorization(s.discriminant, y, z);
  if (!fac) return s;
  const MultiPoly qm = fac->q.monic();
  s.scalar = fac->q.leading_coefficient();
  s.first_factor = fac->p;
  s.second_factor = qm;
  return s;
}

}  // namespace

bool SeparabilityCertificate::remultiplication_exact() const {
  for (const auto& s : splits) {
    if (!s.factored()) continue;
    if (!((*s.first_factor * *s.second_factor).scaled(*s.scalar) == s.discriminant)) return false;
  }
  return true;
}

SeparabilityCertificate analyze_separability(const MultiPoly& f, const std::array<VarId, 3>& vars,
                                             DegreePolicy policy) {
  SeparabilityCertificate cert;
  cert.vars = vars;
  for (std::size_t i = 0; i < 3; ++i) {
    const VarId x = vars[i];
    const VarId y = vars[(i + 1) % 3];
    const VarId z = vars[(i + 2) % 3];
    // keep the two remaining variables in ring order
    cert.splits[i] = y < z ? split_discriminant(f, x, y, z, policy) : split_discriminant(f, x, z, y, policy);
  }
  if (!std::all_of(cert.splits.begin(), cert.splits.end(), [](const auto& s) { return s.factored(); })) {
    cert.kind = SeparabilityKind::none;
    return cert;
  }

  // factor_of[i][k]: monic factor in vars[k] read off from D_{vars[i]}, moved to slot vars[0].
  const VarId slot = vars[0];
  auto factor_in = [&](std::size_t i, std::size_t k) {
    const auto& s = cert.splits[i];
    const VarId target = vars[k];
    const MultiPoly& src = s.first == target ? *s.first_factor : *s.second_factor;
    return rename_to(src, target, slot);
  };
  std::array<std::optional<MultiPoly>, 3> f_of;
  bool consistent = true;
  for (std::size_t k = 0; k < 3; ++k) {
    const MultiPoly a = factor_in((k + 1) % 3, k);
    const MultiPoly b = factor_in((k + 2) % 3, k);
    if (!(a == b)) consistent = false;
    f_of[k] = a;
  }
  const auto& c = cert.splits;
  if (consistent && *f_of[0] == *f_of[1] && *f_of[1] == *f_of[2] && *c[0].scalar == *c[1].scalar &&
      *c[1].scalar == *c[2].scalar) {
    cert.kind = SeparabilityKind::strong;
    const FieldElement scale = *c[0].scalar;
    MultiPoly p = *f_of[0];
    bool has_params = false;
    for (std::size_t i = 0; i < p.ring().arity(); ++i) {
      if (VarId{i} != slot && p.degree_in(VarId{i}) > 0) has_params = true;
    }
    std::optional<Rational> root;
    if (scale.is_rational() && scale.to_rational().sign() > 0) root = rational_sqrt_exact(scale.to_rational());
    if (root) {
      p = p.scaled(*root);
      cert.P_scale = FieldElement::one(f.ring().ext());
    } else {
      cert.P_scale = scale;
    }
    if (!has_params) cert.P = to_univariate(p, slot);
    return cert;
  }
  if (consistent) {
    for (std::size_t i = 0; i < 3; ++i) {
      const std::size_t j = (i + 1) % 3;
      const std::size_t k = (i + 2) % 3;
      if (*f_of[j] == *f_of[k] && *c[j].scalar == *c[k].scalar) {
        cert.kind = SeparabilityKind::symmetric;
        cert.distinguished = i;
        return cert;
      }
    }
  }
  cert.kind = SeparabilityKind::weak;
  return cert;
}

namespace {

std::array<VarId, 3> standard_vars(const Ring& ring) {
  auto a = ring.find("x1");
  auto b = ring.find("x2");
  auto c = ring.find("x3");
  if (a && b && c) return {*a, *b, *c};
  if (ring.arity() < 3) throw DomainError("need three variables");
  return {VarId{0}, VarId{1}, VarId{2}};
}

}  // namespace

SeparabilityCertificate check_strong_separability(const MultiPoly& f, DegreePolicy policy) {
  return analyze_separability(f, standard_vars(f.ring()), policy);
}

SeparabilityKind classify_separability_kind(const MultiPoly& f, const std::array<VarId, 3>& vars,
                                            DegreePolicy policy) {
  return analyze_separability(f, vars, policy).kind;
}

namespace {

std::string coefficient_name(std::size_t idx) {
  return "a" + std::to_string(idx / 9) + std::to_string((idx / 3) % 3) + std::to_string(idx % 3);
}

SeparabilitySystem build_system(const std::array<FieldElement, 5>* numeric) {
  const ExtensionDescriptor ext = numeric ? (*numeric)[0].descriptor() : ExtensionDescriptor{};
  std::vector<std::string> names{"x1", "x2", "x3"};
  for (std::size_t i = 0; i < 27; ++i) names.push_back(coefficient_name(i));
  const char* p_names[] = {"A", "B", "C", "D", "E"};
  if (!numeric) {
    for (const char* n : p_names) names.emplace_back(n);
  }
  const Ring big(names, ext);

  MultiPoly f(big);
  for (std::size_t idx = 0; idx < 27; ++idx) {
    Exponents e(big.arity(), 0);
    e[0] = static_cast<unsigned>(idx / 9);
    e[1] = static_cast<unsigned>((idx / 3) % 3);
    e[2] = static_cast<unsigned>(idx % 3);
    e[3 + idx] = 1;
    f.add_term(e, FieldElement(1));
  }
  auto p_of = [&](VarId x) {
    MultiPoly p(big);
    for (unsigned d = 0; d <= 4; ++d) {
      Exponents e(big.arity(), 0);
      e[x.index] = 4 - d;
      if (numeric) {
        p.add_term(e, (*numeric)[d]);
      } else {
        e[30 + d] = 1;
        p.add_term(e, FieldElement(1));
      }
    }
    return p;
  };

  std::vector<std::string> unknown_names(names.begin() + 3, names.end());
  SeparabilitySystem sys{Ring(unknown_names, ext), {}, {}};
  for (std::size_t i = 0; i < 3; ++i) {
    const VarId x{(i + 2) % 3};  // x3, x1, x2 in turn
    const VarId y{(i + 3) % 3};
    const VarId z{(i + 4) % 3};
    const VarId lo = std::min(y, z);
    const VarId hi = std::max(y, z);
    const MultiPoly r = formal_discriminant(f, x) - p_of(lo) * p_of(hi);
    std::map<std::pair<unsigned, unsigned>, MultiPoly> buckets;
    for (const auto& [e, c] : r.terms()) {
      Exponents rest(e.begin() + 3, e.end());
      auto [it, _] = buckets.try_emplace({e[lo.index], e[hi.index]}, MultiPoly(sys.unknowns));
      it->second.add_term(rest, c);
    }
    for (unsigned m = 0; m <= 4; ++m) {
      for (unsigned n = 0; n <= 4; ++n) {
        auto it = buckets.find({m, n});
        sys.equations.push_back(it == buckets.end() ? MultiPoly(sys.unknowns) : it->second);
        sys.labels.push_back("D_" + big.name(x) + "[" + big.name(lo) + "^" + std::to_string(m) + " " +
                             big.name(hi) + "^" + std::to_string(n) + "]");
      }
    }
  }
  return sys;
}

}  // namespace

SeparabilitySystem generate_separability_system(const std::array<FieldElement, 5>& p_coeffs) {
  for (const auto& c : p_coeffs) {
    if (!(c.descriptor() == p_coeffs[0].descriptor())) throw DescriptorMismatch("P coefficients over different fields");
  }
  return build_system(&p_coeffs);
}

SeparabilitySystem generate_separability_system_symbolic() { return build_system(nullptr); }

std::vector<FieldElement> coefficient_vector(const MultiPoly& f) {
  const Ring& ring = f.ring();
  const auto vars = standard_vars(ring);
  std::vector<FieldElement> out(27, FieldElement::zero(ring.ext()));
  for (const auto& [e, c] : f.terms()) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] != 0 && i != vars[0].index && i != vars[1].index && i != vars[2].index)
        throw DomainError("F involves variables other than x1, x2, x3");
    }
    const unsigned i = e[vars[0].index];
    const unsigned j = e[vars[1].index];
    const unsigned k = e[vars[2].index];
    if (i > 2 || j > 2 || k > 2) throw DegreeError("F has degree above 2 in some variable");
    out[9 * i + 3 * j + k] = c;
  }
  return out;
}

std::vector<FieldElement> system_residuals(const SeparabilitySystem& sys, const std::vector<FieldElement>& values) {
  if (values.size() != sys.unknowns.arity()) throw DomainError("value count does not match the unknowns");
  std::vector<FieldElement> out;
  out.reserve(sys.equations.size());
  for (const auto& eq : sys.equations) out.push_back(eq.evaluate(values));
  return out;
}

}  // namespace disep
