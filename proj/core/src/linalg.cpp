#include "disep/linalg.hpp"

#include "disep/errors.hpp"

namespace disep {

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols, const ExtensionDescriptor& ext)
    : rows_(rows), cols_(cols), ext_(ext), data_(rows * cols, FieldElement::zero(ext)) {}

ExactMatrix ExactMatrix::from_rows(const std::vector<std::vector<FieldElement>>& rows) {
  if (rows.empty()) return ExactMatrix(0, 0);
  const std::size_t cols = rows.front().size();
  ExtensionDescriptor ext = cols > 0 ? rows.front().front().descriptor() : ExtensionDescriptor{};
  ExactMatrix m(rows.size(), cols, ext);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw DomainError("ragged matrix rows");
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

ExactMatrix ExactMatrix::identity(std::size_t n, const ExtensionDescriptor& ext) {
  ExactMatrix m(n, n, ext);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, FieldElement::one(ext));
  return m;
}

void ExactMatrix::set(std::size_t i, std::size_t j, const FieldElement& v) {
  if (!(v.descriptor() == ext_)) throw DescriptorMismatch("matrix entry over " + v.descriptor().to_string());
  data_.at(i * cols_ + j) = v;
}

std::vector<FieldElement> ExactMatrix::apply(const std::vector<FieldElement>& v) const {
  if (v.size() != cols_) throw DomainError("vector length does not match matrix columns");
  std::vector<FieldElement> out(rows_, FieldElement::zero(ext_));
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (!(*this)(i, j).is_zero() && !v[j].is_zero()) out[i] += (*this)(i, j) * v[j];
    }
  }
  return out;
}

namespace {

struct Echelon {
  std::vector<std::vector<FieldElement>> rows;
  std::vector<std::size_t> pivots;
};

// Fraction-free (Bareiss) forward elimination.
Echelon bareiss(const ExactMatrix& m) {
  Echelon out;
  out.rows.assign(m.rows(), std::vector<FieldElement>(m.cols(), FieldElement::zero(m.ext())));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out.rows[i][j] = m(i, j);
  }
  auto& a = out.rows;
  FieldElement prev = FieldElement::one(m.ext());
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && a[p][c].is_zero()) ++p;
    if (p == m.rows()) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      const FieldElement lead = a[i][c];
      for (std::size_t j = c + 1; j < m.cols(); ++j) {
        FieldElement v = a[r][c] * a[i][j];
        if (!lead.is_zero()) v -= lead * a[r][j];
        a[i][j] = v / prev;
      }
      a[i][c] = FieldElement::zero(m.ext());
    }
    prev = a[r][c];
    out.pivots.push_back(c);
    ++r;
  }
  a.resize(r);
  return out;
}

}  // namespace

std::size_t rank(const ExactMatrix& m) { return bareiss(m).pivots.size(); }

std::vector<std::vector<FieldElement>> nullspace(const ExactMatrix& m) {
  const Echelon e = bareiss(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : e.pivots) is_pivot[c] = true;
  std::vector<std::vector<FieldElement>> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<FieldElement> v(m.cols(), FieldElement::zero(m.ext()));
    v[f] = FieldElement::one(m.ext());
    for (std::size_t r = e.pivots.size(); r-- > 0;) {
      const std::size_t pc = e.pivots[r];
      FieldElement acc = FieldElement::zero(m.ext());
      for (std::size_t j = pc + 1; j < m.cols(); ++j) {
        if (!e.rows[r][j].is_zero() && !v[j].is_zero()) acc += e.rows[r][j] * v[j];
      }
      v[pc] = -acc / e.rows[r][pc];
    }
    std::size_t first = 0;
    while (v[first].is_zero()) ++first;
    const FieldElement inv = v[first].inverse();
    for (auto& x : v) x *= inv;
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace disep
