#include "gkws/linalg.hpp"

#include <utility>

#include "gkws/error.hpp"

namespace gkws::linalg {

using gf::Fe;

void Matrix::append_row(std::span<const Fe> values) {
  if (rows_ == 0 && cols_ == 0) cols_ = values.size();
  if (values.size() != cols_) throw Error(Errc::InvalidArgument, "row length mismatch");
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

std::vector<std::size_t> row_reduce(const gf::Field& F, Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < m.cols() && lead < m.rows(); ++col) {
    std::size_t sel = lead;
    while (sel < m.rows() && m.at(sel, col) == F.zero()) ++sel;
    if (sel == m.rows()) continue;
    if (sel != lead) {
      auto a = m.row(sel), b = m.row(lead);
      for (std::size_t c = col; c < m.cols(); ++c) std::swap(a[c], b[c]);
    }
    auto prow = m.row(lead);
    const Fe scale = F.inv(prow[col]);
    for (std::size_t c = col; c < m.cols(); ++c) prow[c] = F.mul(prow[c], scale);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead) continue;
      auto row = m.row(r);
      const Fe factor = row[col];
      if (factor == F.zero()) continue;
      const Fe nf = F.neg(factor);
      for (std::size_t c = col; c < m.cols(); ++c)
        if (prow[c] != F.zero()) row[c] = F.add(row[c], F.mul(nf, prow[c]));
    }
    pivots.push_back(col);
    ++lead;
  }
  return pivots;
}

std::size_t rank(const gf::Field& F, Matrix m) { return row_reduce(F, m).size(); }

Matrix nullspace(const gf::Field& F, Matrix m) {
  const std::size_t cols = m.cols();
  const auto pivots = row_reduce(F, m);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;

  Matrix out(0, cols);
  std::vector<Fe> v(cols);
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::fill(v.begin(), v.end(), F.zero());
    v[free] = F.one();
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = F.neg(m.at(r, free));
    out.append_row(v);
  }
  return out;
}

Fe dot(const gf::Field& F, std::span<const Fe> a, std::span<const Fe> b) {
  if (a.size() != b.size()) throw Error(Errc::InvalidArgument, "dot product length mismatch");
  Fe acc = F.zero();
  for (std::size_t i = 0; i < a.size(); ++i) acc = F.add(acc, F.mul(a[i], b[i]));
  return acc;
}

}  // namespace gkws::linalg
