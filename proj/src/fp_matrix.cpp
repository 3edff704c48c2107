#include "socle/fp_matrix.hpp"

#include <algorithm>
#include <string>

#include "socle/simd_kernels.hpp"

namespace socle {

namespace {

std::size_t padded(std::size_t cols) { return std::max<std::size_t>(32, (cols + 31) / 32 * 32); }

void require_same_prime(const FpMatrix& a, const FpMatrix& b) {
  if (a.prime() != b.prime()) throw PrimeMismatch("matrices over different primes");
}

}  // namespace

bool supported_prime(int p) {
  switch (p) {
    case 2: case 3: case 5: case 7: case 11: case 13: return true;
    default: return false;
  }
}

std::uint8_t inverse_mod(std::uint8_t a, int p) {
  for (int x = 1; x < p; ++x)
    if ((a * x) % p == 1) return static_cast<std::uint8_t>(x);
  throw std::domain_error("zero has no inverse");
}

FpMatrix::FpMatrix(int p, std::size_t rows, std::size_t cols)
    : p_(p), rows_(rows), cols_(cols), stride_(padded(cols)), data_(rows * stride_, 0) {
  if (!supported_prime(p)) throw std::invalid_argument("unsupported prime " + std::to_string(p));
}

FpMatrix FpMatrix::identity(int p, std::size_t n) {
  FpMatrix m(p, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

FpMatrix FpMatrix::from_rows(int p, std::size_t cols, const std::vector<FpVector>& rows) {
  FpMatrix m(p, 0, cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

void FpMatrix::set(std::size_t i, std::size_t j, long long value) {
  long long v = value % p_;
  if (v < 0) v += p_;
  data_[i * stride_ + j] = static_cast<std::uint8_t>(v);
}

FpVector FpMatrix::row_vector(std::size_t i) const { return FpVector(row(i), row(i) + cols_); }

void FpMatrix::append_row(const FpVector& v) {
  if (v.size() != cols_) throw std::invalid_argument("row length mismatch");
  data_.resize((rows_ + 1) * stride_, 0);
  for (std::size_t j = 0; j < cols_; ++j) set(rows_, j, v[j]);
  ++rows_;
}

void FpMatrix::append_rows(const FpMatrix& other) {
  require_same_prime(*this, other);
  if (other.cols_ != cols_) throw std::invalid_argument("column count mismatch");
  data_.insert(data_.end(), other.data_.begin(), other.data_.end());
  rows_ += other.rows_;
}

void FpMatrix::add_row(std::size_t dst, std::size_t src, std::uint8_t coef) {
  if (coef == 0) return;
  simd::active().axpy(row(dst), row(src), coef, static_cast<std::uint8_t>(p_), stride_);
}

void FpMatrix::scale_row(std::size_t i, std::uint8_t coef) {
  simd::active().scale(row(i), coef, static_cast<std::uint8_t>(p_), stride_);
}

void FpMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  std::swap_ranges(row(a), row(a) + stride_, row(b));
}

std::vector<std::size_t> FpMatrix::rref() {
  const auto& k = simd::active();
  const auto p = static_cast<std::uint8_t>(p_);
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
    std::size_t piv = r;
    while (piv < rows_ && (*this)(piv, c) == 0) ++piv;
    if (piv == rows_) continue;
    swap_rows(r, piv);
    const std::uint8_t lead = (*this)(r, c);
    if (lead != 1) k.scale(row(r), inverse_mod(lead, p_), p, stride_);
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r) continue;
      const std::uint8_t x = (*this)(i, c);
      if (x) k.axpy(row(i), row(r), static_cast<std::uint8_t>(p_ - x), p, stride_);
    }
    pivots.push_back(c);
    ++r;
  }
  rows_ = r;
  data_.resize(rows_ * stride_);
  return pivots;
}

FpMatrix FpMatrix::transpose() const {
  FpMatrix t(p_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.data_[j * t.stride_ + i] = (*this)(i, j);
  return t;
}

bool FpMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](std::uint8_t x) { return x == 0; });
}

FpMatrix operator*(const FpMatrix& a, const FpMatrix& b) {
  require_same_prime(a, b);
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix shapes do not compose");
  FpMatrix out(a.prime(), a.rows(), b.cols());
  const auto& k = simd::active();
  const auto p = static_cast<std::uint8_t>(a.prime());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (const std::uint8_t x = a(i, j)) k.axpy(out.row(i), b.row(j), x, p, out.stride());
  return out;
}

FpMatrix operator+(const FpMatrix& a, const FpMatrix& b) {
  require_same_prime(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix shapes differ");
  FpMatrix out = a;
  const auto& k = simd::active();
  for (std::size_t i = 0; i < a.rows(); ++i)
    k.axpy(out.row(i), b.row(i), 1, static_cast<std::uint8_t>(a.prime()), out.stride());
  return out;
}

FpMatrix operator-(const FpMatrix& a) {
  FpMatrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i) out.scale_row(i, static_cast<std::uint8_t>(a.prime() - 1));
  return out;
}

FpVector apply(const FpMatrix& m, const FpVector& v) {
  if (v.size() != m.cols()) throw std::invalid_argument("vector length mismatch");
  FpVector out(m.rows(), 0);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    unsigned acc = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) acc += m(i, j) * v[j];
    out[i] = static_cast<std::uint8_t>(acc % static_cast<unsigned>(m.prime()));
  }
  return out;
}

std::size_t rank(FpMatrix m) { return m.rref().size(); }

FpMatrix row_basis(FpMatrix m) {
  m.rref();
  return m;
}

FpMatrix nullspace(const FpMatrix& m) {
  FpMatrix r = m;
  const auto pivots = r.rref();
  const int p = m.prime();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  FpMatrix out(p, 0, m.cols());
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    FpVector v(m.cols(), 0);
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = static_cast<std::uint8_t>((p - r(i, f)) % p);
    out.append_row(v);
  }
  return row_basis(out);
}

}  // namespace socle
