#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "monodyn/field.hpp"

namespace monodyn {

using BigInt = boost::multiprecision::cpp_int;

// Tally of reduced-semiring operations performed by a matrix routine.
struct OpCounter {
  std::uint64_t additions = 0;
  std::uint64_t multiplications = 0;
  std::uint64_t total() const noexcept { return additions + multiplications; }
};

// Square matrix with entries in [0, q-1], combined with the reduced exponent
// arithmetic.  Multiplication of these matrices mirrors composition of the
// monomial maps they encode.
class ExponentMatrix {
 public:
  ExponentMatrix(const FieldSize& field, std::uint32_t n);
  static ExponentMatrix identity(const FieldSize& field, std::uint32_t n);
  static ExponentMatrix from_rows(
      const FieldSize& field,
      const std::vector<std::vector<std::uint32_t>>& rows);

  const FieldSize& field() const noexcept { return field_; }
  std::uint32_t dim() const noexcept { return n_; }

  std::uint32_t at(std::uint32_t i, std::uint32_t j) const {
    return cells_[static_cast<std::size_t>(i) * n_ + j];
  }
  void set(std::uint32_t i, std::uint32_t j, std::uint32_t value);

  bool is_zero() const noexcept;
  std::vector<std::vector<std::uint32_t>> rows() const;

  // Entrywise power of the encoded map: reduced matrix product.  Entry (i,j)
  // of the product is the single reduction of the integer dot product, which
  // coincides with folding the reduced operations pairwise.
  friend ExponentMatrix multiply(const ExponentMatrix& a,
                                 const ExponentMatrix& b, OpCounter* ops);
  // Binary exponentiation; power(0) is the identity matrix.
  ExponentMatrix power(std::uint64_t m, OpCounter* ops = nullptr) const;

  friend bool operator==(const ExponentMatrix& a, const ExponentMatrix& b) {
    return a.field_ == b.field_ && a.n_ == b.n_ && a.cells_ == b.cells_;
  }
  friend bool operator!=(const ExponentMatrix& a, const ExponentMatrix& b) {
    return !(a == b);
  }

 private:
  FieldSize field_;
  std::uint32_t n_;
  std::vector<std::uint32_t> cells_;
};

ExponentMatrix multiply(const ExponentMatrix& a, const ExponentMatrix& b,
                        OpCounter* ops = nullptr);

// Matrix over the exponent semiring extended with bottom.  A bottom entry in
// row i marks the i-th component as the constant zero function; such rows are
// entirely bottom in any well formed system.
class ExtExponentMatrix {
 public:
  // Cell value: std::nullopt encodes bottom.
  using Cell = std::optional<std::uint32_t>;

  ExtExponentMatrix(const FieldSize& field, std::uint32_t n);
  static ExtExponentMatrix from_rows(const FieldSize& field,
                                     const std::vector<std::vector<Cell>>& rows);
  // Lift a plain matrix (no bottom entries).
  static ExtExponentMatrix lift(const ExponentMatrix& m);

  const FieldSize& field() const noexcept { return field_; }
  std::uint32_t dim() const noexcept { return n_; }

  Cell at(std::uint32_t i, std::uint32_t j) const {
    return cells_[static_cast<std::size_t>(i) * n_ + j];
  }
  void set(std::uint32_t i, std::uint32_t j, Cell value);

  bool row_is_bottom(std::uint32_t i) const;
  bool row_has_bottom(std::uint32_t i) const;

  friend bool operator==(const ExtExponentMatrix& a,
                         const ExtExponentMatrix& b) {
    return a.field_ == b.field_ && a.n_ == b.n_ && a.cells_ == b.cells_;
  }
  friend bool operator!=(const ExtExponentMatrix& a,
                         const ExtExponentMatrix& b) {
    return !(a == b);
  }

 private:
  FieldSize field_;
  std::uint32_t n_;
  std::vector<Cell> cells_;
};

// Product over the extended semiring, applying the element rules literally:
// bottom absorbs addition, the exponent 0 beats bottom in multiplication.
// With skip_bottom_rows set, rows of `a` that are entirely bottom are copied
// through without evaluating their dot products; for squaring a well formed
// matrix this produces the identical result.
ExtExponentMatrix ext_multiply(const ExtExponentMatrix& a,
                               const ExtExponentMatrix& b,
                               std::uint64_t* semiring_ops = nullptr,
                               bool skip_bottom_rows = false);

// Square matrix of exact nonnegative integers, used to count walks in a
// dependency graph without overflow.
class CountMatrix {
 public:
  CountMatrix(std::uint32_t n);
  static CountMatrix identity(std::uint32_t n);
  static CountMatrix from(const ExponentMatrix& m);
  static CountMatrix from_rows(const std::vector<std::vector<BigInt>>& rows);

  std::uint32_t dim() const noexcept { return n_; }
  const BigInt& at(std::uint32_t i, std::uint32_t j) const {
    return cells_[static_cast<std::size_t>(i) * n_ + j];
  }
  void set(std::uint32_t i, std::uint32_t j, BigInt value);

  bool is_zero() const noexcept;

  friend CountMatrix multiply(const CountMatrix& a, const CountMatrix& b);
  CountMatrix power(std::uint64_t m) const;

  friend bool operator==(const CountMatrix& a, const CountMatrix& b) {
    return a.n_ == b.n_ && a.cells_ == b.cells_;
  }
  friend bool operator!=(const CountMatrix& a, const CountMatrix& b) {
    return !(a == b);
  }

 private:
  std::uint32_t n_;
  std::vector<BigInt> cells_;
};

CountMatrix multiply(const CountMatrix& a, const CountMatrix& b);

// Entrywise exponent reduction of an integer matrix.  This is a monoid
// homomorphism onto the reduced matrices: reducing a product of integer
// matrices equals the reduced product of the entrywise reductions.
ExponentMatrix reduce_matrix(const CountMatrix& m, const FieldSize& field);

// Exponent reduction for arbitrary-precision values.
std::uint32_t reduce_exponent_big(const BigInt& c, const FieldSize& field);

}  // namespace monodyn
