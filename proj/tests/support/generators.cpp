#include "generators.hpp"

#include <cstdlib>

namespace disep::testing {

std::uint64_t Gen::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

long Gen::range(long lo, long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(next() % span);
}

Rational Gen::rational(long bound) { return Rational(range(-bound, bound), range(1, bound)); }

Rational Gen::nonzero_rational(long bound) {
  for (;;) {
    Rational r = rational(bound);
    if (!r.is_zero()) return r;
  }
}

FieldElement Gen::element(const ExtensionDescriptor& ext, long bound) {
  std::vector<Rational> c;
  for (std::size_t i = 0; i < ext.degree(); ++i) c.push_back(rational(bound));
  return FieldElement(std::move(c), ext);
}

FieldElement Gen::nonzero_element(const ExtensionDescriptor& ext, long bound) {
  for (;;) {
    FieldElement x = element(ext, bound);
    if (!x.is_zero()) return x;
  }
}

MultiPoly Gen::poly(const Ring& ring, unsigned max_exp, unsigned terms) {
  MultiPoly p(ring);
  const unsigned n = static_cast<unsigned>(range(0, terms));
  for (unsigned t = 0; t < n; ++t) {
    Exponents e(ring.arity());
    for (auto& x : e) x = static_cast<unsigned>(range(0, max_exp));
    p.add_term(e, element(ring.ext()));
  }
  return p;
}

MultiPoly Gen::univariate(const Ring& ring, VarId v, unsigned degree, bool exact_degree) {
  MultiPoly p(ring);
  for (unsigned i = 0; i <= degree; ++i) {
    Exponents e(ring.arity(), 0);
    e[v.index] = i;
    p.add_term(e, (i == degree && exact_degree) ? nonzero_element(ring.ext()) : element(ring.ext()));
  }
  return p;
}

ExactMatrix Gen::matrix(std::size_t rows, std::size_t cols, std::size_t rank_bound, const ExtensionDescriptor& ext) {
  // product of rows x r and r x cols factors, so rank <= r
  ExactMatrix a(rows, rank_bound, ext), b(rank_bound, cols, ext), out(rows, cols, ext);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < rank_bound; ++k) a.set(i, k, element(ext, 4));
  for (std::size_t k = 0; k < rank_bound; ++k)
    for (std::size_t j = 0; j < cols; ++j) b.set(k, j, element(ext, 4));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      FieldElement s = FieldElement::zero(ext);
      for (std::size_t k = 0; k < rank_bound; ++k) s += a(i, k) * b(k, j);
      out.set(i, j, s);
    }
  return out;
}

MobiusMap Gen::mobius(long bound) {
  for (;;) {
    const Rational a = rational(bound), b = rational(bound), c = rational(bound), d = rational(bound);
    if (!(a * d - b * c).is_zero()) return MobiusMap(a, b, c, d);
  }
}

std::uint64_t suite_seed(std::uint64_t fallback) {
  if (const char* s = std::getenv("DISEP_TEST_SEED")) return std::strtoull(s, nullptr, 10);
  return fallback;
}

}  // namespace disep::testing
