#include "monodyn/matrix.hpp"

#include <stdexcept>
#include <string>

namespace monodyn {

namespace {

void require_compatible(const FieldSize& fa, std::uint32_t na,
                        const FieldSize& fb, std::uint32_t nb) {
  if (fa != fb)
    throw std::invalid_argument(
        "matrix arithmetic across different field sizes: q=" +
        std::to_string(fa.value()) + " vs q=" + std::to_string(fb.value()));
  if (na != nb)
    throw std::invalid_argument("matrix dimensions do not match: " +
                                std::to_string(na) + " vs " +
                                std::to_string(nb));
}

void require_dim(std::uint32_t n) {
  if (n == 0) throw std::invalid_argument("matrix dimension must be positive");
}

}  // namespace

ExponentMatrix::ExponentMatrix(const FieldSize& field, std::uint32_t n)
    : field_(field), n_(n), cells_(static_cast<std::size_t>(n) * n, 0) {
  require_dim(n);
}

ExponentMatrix ExponentMatrix::identity(const FieldSize& field,
                                        std::uint32_t n) {
  ExponentMatrix m(field, n);
  for (std::uint32_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

ExponentMatrix ExponentMatrix::from_rows(
    const FieldSize& field,
    const std::vector<std::vector<std::uint32_t>>& rows) {
  const auto n = static_cast<std::uint32_t>(rows.size());
  ExponentMatrix m(field, n);
  for (std::uint32_t i = 0; i < n; ++i) {
    if (rows[i].size() != n)
      throw std::invalid_argument("row " + std::to_string(i) + " has " +
                                  std::to_string(rows[i].size()) +
                                  " entries, expected " + std::to_string(n));
    for (std::uint32_t j = 0; j < n; ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

void ExponentMatrix::set(std::uint32_t i, std::uint32_t j,
                         std::uint32_t value) {
  if (value >= field_.value())
    throw std::invalid_argument("exponent " + std::to_string(value) +
                                " out of range [0, " +
                                std::to_string(field_.value() - 1) + "]");
  cells_[static_cast<std::size_t>(i) * n_ + j] = value;
}

bool ExponentMatrix::is_zero() const noexcept {
  for (auto v : cells_)
    if (v != 0) return false;
  return true;
}

std::vector<std::vector<std::uint32_t>> ExponentMatrix::rows() const {
  std::vector<std::vector<std::uint32_t>> out(n_);
  for (std::uint32_t i = 0; i < n_; ++i) {
    out[i].resize(n_);
    for (std::uint32_t j = 0; j < n_; ++j) out[i][j] = at(i, j);
  }
  return out;
}

ExponentMatrix multiply(const ExponentMatrix& a, const ExponentMatrix& b,
                        OpCounter* ops) {
  require_compatible(a.field_, a.n_, b.field_, b.n_);
  const std::uint32_t n = a.n_;
  const FieldSize& f = a.field_;
  ExponentMatrix out(f, n);
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = 0; j < n; ++j) {
      std::uint64_t acc = reduce_exponent(
          static_cast<std::uint64_t>(a.at(i, 0)) * b.at(0, j), f);
      for (std::uint32_t l = 1; l < n; ++l) {
        const std::uint64_t term = reduce_exponent(
            static_cast<std::uint64_t>(a.at(i, l)) * b.at(l, j), f);
        acc = reduce_exponent(acc + term, f);
      }
      out.set(i, j, static_cast<std::uint32_t>(acc));
    }
  }
  if (ops) {
    // n multiplications and n-1 additions per entry.
    ops->multiplications += static_cast<std::uint64_t>(n) * n * n;
    ops->additions += static_cast<std::uint64_t>(n) * n * (n - 1);
  }
  return out;
}

ExponentMatrix ExponentMatrix::power(std::uint64_t m, OpCounter* ops) const {
  ExponentMatrix result = identity(field_, n_);
  ExponentMatrix base = *this;
  while (m != 0) {
    if (m & 1) result = multiply(result, base, ops);
    m >>= 1;
    if (m != 0) base = multiply(base, base, ops);
  }
  return result;
}

ExtExponentMatrix::ExtExponentMatrix(const FieldSize& field, std::uint32_t n)
    : field_(field), n_(n),
      cells_(static_cast<std::size_t>(n) * n, Cell(0u)) {
  require_dim(n);
}

ExtExponentMatrix ExtExponentMatrix::from_rows(
    const FieldSize& field, const std::vector<std::vector<Cell>>& rows) {
  const auto n = static_cast<std::uint32_t>(rows.size());
  ExtExponentMatrix m(field, n);
  for (std::uint32_t i = 0; i < n; ++i) {
    if (rows[i].size() != n)
      throw std::invalid_argument("row " + std::to_string(i) + " has " +
                                  std::to_string(rows[i].size()) +
                                  " entries, expected " + std::to_string(n));
    for (std::uint32_t j = 0; j < n; ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

ExtExponentMatrix ExtExponentMatrix::lift(const ExponentMatrix& m) {
  ExtExponentMatrix out(m.field(), m.dim());
  for (std::uint32_t i = 0; i < m.dim(); ++i)
    for (std::uint32_t j = 0; j < m.dim(); ++j) out.set(i, j, m.at(i, j));
  return out;
}

void ExtExponentMatrix::set(std::uint32_t i, std::uint32_t j, Cell value) {
  if (value && *value >= field_.value())
    throw std::invalid_argument("exponent " + std::to_string(*value) +
                                " out of range [0, " +
                                std::to_string(field_.value() - 1) + "]");
  cells_[static_cast<std::size_t>(i) * n_ + j] = value;
}

bool ExtExponentMatrix::row_is_bottom(std::uint32_t i) const {
  for (std::uint32_t j = 0; j < n_; ++j)
    if (at(i, j)) return false;
  return true;
}

bool ExtExponentMatrix::row_has_bottom(std::uint32_t i) const {
  for (std::uint32_t j = 0; j < n_; ++j)
    if (!at(i, j)) return true;
  return false;
}

namespace {

using Cell = ExtExponentMatrix::Cell;

Cell ext_mul_cell(const Cell& a, const Cell& b, const FieldSize& f) {
  if ((a && *a == 0) || (b && *b == 0)) return Cell(0u);
  if (!a || !b) return std::nullopt;
  return Cell(reduce_exponent(static_cast<std::uint64_t>(*a) * *b, f));
}

Cell ext_add_cell(const Cell& a, const Cell& b, const FieldSize& f) {
  if (!a || !b) return std::nullopt;
  return Cell(reduce_exponent(static_cast<std::uint64_t>(*a) + *b, f));
}

}  // namespace

ExtExponentMatrix ext_multiply(const ExtExponentMatrix& a,
                               const ExtExponentMatrix& b,
                               std::uint64_t* semiring_ops,
                               bool skip_bottom_rows) {
  require_compatible(a.field(), a.dim(), b.field(), b.dim());
  const std::uint32_t n = a.dim();
  const FieldSize& f = a.field();
  ExtExponentMatrix out(f, n);
  for (std::uint32_t i = 0; i < n; ++i) {
    if (skip_bottom_rows && a.row_is_bottom(i)) {
      for (std::uint32_t j = 0; j < n; ++j) out.set(i, j, std::nullopt);
      continue;
    }
    for (std::uint32_t j = 0; j < n; ++j) {
      Cell acc = ext_mul_cell(a.at(i, 0), b.at(0, j), f);
      for (std::uint32_t l = 1; l < n; ++l) {
        const Cell term = ext_mul_cell(a.at(i, l), b.at(l, j), f);
        acc = ext_add_cell(acc, term, f);
      }
      out.set(i, j, acc);
      if (semiring_ops) *semiring_ops += 2 * static_cast<std::uint64_t>(n) - 1;
    }
  }
  return out;
}

CountMatrix::CountMatrix(std::uint32_t n)
    : n_(n), cells_(static_cast<std::size_t>(n) * n) {
  require_dim(n);
}

CountMatrix CountMatrix::identity(std::uint32_t n) {
  CountMatrix m(n);
  for (std::uint32_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

CountMatrix CountMatrix::from(const ExponentMatrix& m) {
  CountMatrix out(m.dim());
  for (std::uint32_t i = 0; i < m.dim(); ++i)
    for (std::uint32_t j = 0; j < m.dim(); ++j) out.set(i, j, m.at(i, j));
  return out;
}

CountMatrix CountMatrix::from_rows(
    const std::vector<std::vector<BigInt>>& rows) {
  const auto n = static_cast<std::uint32_t>(rows.size());
  CountMatrix m(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    if (rows[i].size() != n)
      throw std::invalid_argument("row " + std::to_string(i) + " has " +
                                  std::to_string(rows[i].size()) +
                                  " entries, expected " + std::to_string(n));
    for (std::uint32_t j = 0; j < n; ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

void CountMatrix::set(std::uint32_t i, std::uint32_t j, BigInt value) {
  if (value < 0)
    throw std::invalid_argument("count entries must be nonnegative");
  cells_[static_cast<std::size_t>(i) * n_ + j] = std::move(value);
}

bool CountMatrix::is_zero() const noexcept {
  for (const auto& v : cells_)
    if (v != 0) return false;
  return true;
}

CountMatrix multiply(const CountMatrix& a, const CountMatrix& b) {
  if (a.n_ != b.n_)
    throw std::invalid_argument("matrix dimensions do not match: " +
                                std::to_string(a.n_) + " vs " +
                                std::to_string(b.n_));
  const std::uint32_t n = a.n_;
  CountMatrix out(n);
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j) {
      BigInt acc = 0;
      for (std::uint32_t l = 0; l < n; ++l) acc += a.at(i, l) * b.at(l, j);
      out.set(i, j, std::move(acc));
    }
  return out;
}

CountMatrix CountMatrix::power(std::uint64_t m) const {
  CountMatrix result = identity(n_);
  CountMatrix base = *this;
  while (m != 0) {
    if (m & 1) result = multiply(result, base);
    m >>= 1;
    if (m != 0) base = multiply(base, base);
  }
  return result;
}

std::uint32_t reduce_exponent_big(const BigInt& c, const FieldSize& field) {
  if (c < 0) throw std::invalid_argument("exponent must be nonnegative");
  if (c == 0) return 0;
  const BigInt r = (c - 1) % field.unit_order();
  return r.convert_to<std::uint32_t>() + 1;
}

ExponentMatrix reduce_matrix(const CountMatrix& m, const FieldSize& field) {
  ExponentMatrix out(field, m.dim());
  for (std::uint32_t i = 0; i < m.dim(); ++i)
    for (std::uint32_t j = 0; j < m.dim(); ++j)
      out.set(i, j, reduce_exponent_big(m.at(i, j), field));
  return out;
}

}  // namespace monodyn
