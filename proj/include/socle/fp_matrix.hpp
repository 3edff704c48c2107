#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace socle {

class PrimeMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using FpVector = std::vector<std::uint8_t>;

// Dense matrix over F_p, p a prime <= 13. Rows are padded to a multiple of
// 32 bytes so the row kernels can run without tail handling; padding is zero.
class FpMatrix {
 public:
  FpMatrix() = default;
  FpMatrix(int p, std::size_t rows, std::size_t cols);

  static FpMatrix identity(int p, std::size_t n);
  static FpMatrix from_rows(int p, std::size_t cols, const std::vector<FpVector>& rows);

  int prime() const { return p_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t stride() const { return stride_; }

  std::uint8_t operator()(std::size_t i, std::size_t j) const { return data_[i * stride_ + j]; }
  // Stores value mod p; negative values allowed.
  void set(std::size_t i, std::size_t j, long long value);

  std::uint8_t* row(std::size_t i) { return data_.data() + i * stride_; }
  const std::uint8_t* row(std::size_t i) const { return data_.data() + i * stride_; }
  FpVector row_vector(std::size_t i) const;
  void append_row(const FpVector& v);
  void append_rows(const FpMatrix& other);

  // row(dst) += coef * row(src)
  void add_row(std::size_t dst, std::size_t src, std::uint8_t coef);
  void scale_row(std::size_t i, std::uint8_t coef);
  void swap_rows(std::size_t a, std::size_t b);

  // In-place reduced row echelon form; zero rows end up at the bottom and are
  // dropped. Returns the pivot columns.
  std::vector<std::size_t> rref();

  FpMatrix transpose() const;
  bool is_zero() const;

  friend bool operator==(const FpMatrix&, const FpMatrix&) = default;

 private:
  int p_ = 2;
  std::size_t rows_ = 0, cols_ = 0, stride_ = 0;
  std::vector<std::uint8_t> data_;
};

std::uint8_t inverse_mod(std::uint8_t a, int p);
bool supported_prime(int p);

FpMatrix operator*(const FpMatrix& a, const FpMatrix& b);
FpMatrix operator+(const FpMatrix& a, const FpMatrix& b);
FpMatrix operator-(const FpMatrix& a);
// Matrix times column vector.
FpVector apply(const FpMatrix& m, const FpVector& v);

std::size_t rank(FpMatrix m);
// Rows form a basis of { x : m x = 0 }, in reduced echelon form.
FpMatrix nullspace(const FpMatrix& m);
// Row space in reduced echelon form without zero rows.
FpMatrix row_basis(FpMatrix m);

}  // namespace socle
