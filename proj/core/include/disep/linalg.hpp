#pragma once

#include <cstddef>
#include <vector>

#include "disep/numfield.hpp"

namespace disep {

/// Dense row-major matrix over one coefficient field.
class ExactMatrix {
 public:
  ExactMatrix(std::size_t rows, std::size_t cols, const ExtensionDescriptor& ext = {});
  /// Rows must be rectangular and share one descriptor; an empty list gives 0x0.
  static ExactMatrix from_rows(const std::vector<std::vector<FieldElement>>& rows);
  static ExactMatrix identity(std::size_t n, const ExtensionDescriptor& ext = {});

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const ExtensionDescriptor& ext() const { return ext_; }

  const FieldElement& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, const FieldElement& v);

  std::vector<FieldElement> apply(const std::vector<FieldElement>& v) const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  ExtensionDescriptor ext_;
  std::vector<FieldElement> data_;
};

std::size_t rank(const ExactMatrix& m);

/// Right nullspace basis; each vector has its first nonzero entry equal to 1.
std::vector<std::vector<FieldElement>> nullspace(const ExactMatrix& m);

}  // namespace disep
