#include "socle/dvrmod.hpp"

namespace socle {

FpModule::FpModule(FpMatrix op, std::optional<Partition> standard)
    : op_(std::move(op)), standard_(std::move(standard)) {
  if (op_.rows() != op_.cols()) throw std::invalid_argument("operator must be square");
  op_t_ = op_.transpose();
  FpMatrix pw = op_;
  for (std::size_t i = 0; i < dim() && !pw.is_zero(); ++i) pw = pw * op_;
  if (!pw.is_zero()) throw std::invalid_argument("operator is not nilpotent");
}

FpMatrix FpModule::power(int r) const {
  FpMatrix out = FpMatrix::identity(prime(), dim());
  for (int i = 0; i < r; ++i) {
    out = out * op_;
    if (out.is_zero()) break;
  }
  return out;
}

Subspace::Subspace(int p, std::size_t ambient_dim) : basis_(p, 0, ambient_dim) {}

Subspace::Subspace(FpMatrix rows) : basis_(row_basis(std::move(rows))) {}

Subspace Subspace::whole(int p, std::size_t n) { return Subspace(FpMatrix::identity(p, n)); }

bool Subspace::contains(const FpVector& v) const {
  FpMatrix m = basis_;
  m.append_row(v);
  return rank(std::move(m)) == dim();
}

bool Subspace::contains(const Subspace& other) const { return (*this + other).dim() == dim(); }

Subspace operator+(const Subspace& a, const Subspace& b) {
  FpMatrix m = a.basis();
  m.append_rows(b.basis());
  return Subspace(std::move(m));
}

Subspace annihilator(const Subspace& s) { return Subspace(nullspace(s.basis())); }

Subspace intersect(const Subspace& a, const Subspace& b) {
  FpMatrix eq = annihilator(a).basis();
  eq.append_rows(annihilator(b).basis());
  return Subspace(nullspace(eq));
}

Subspace image(const FpMatrix& m, const Subspace& s) { return Subspace(s.basis() * m.transpose()); }

Subspace kernel(const FpMatrix& m) { return Subspace(nullspace(m)); }

std::size_t basis_index(const Partition& lambda, std::size_t summand, int power) {
  std::size_t offset = 0;
  for (std::size_t j = 1; j < summand; ++j) offset += static_cast<std::size_t>(lambda[j]);
  return offset + static_cast<std::size_t>(power);
}

FpModule standard_module(int p, const Partition& lambda) {
  const auto n = static_cast<std::size_t>(lambda.weight());
  FpMatrix op(p, n, n);
  std::size_t offset = 0;
  for (int len : lambda.parts()) {
    for (int i = 0; i + 1 < len; ++i) op.set(offset + static_cast<std::size_t>(i) + 1, offset + static_cast<std::size_t>(i), 1);
    offset += static_cast<std::size_t>(len);
  }
  return FpModule(std::move(op), lambda);
}

bool is_submodule(const FpModule& m, const Subspace& s) { return s.contains(image(m.op(), s)); }

Subspace preimage(const FpModule& m, const Subspace& s, int r) {
  const FpMatrix eq = annihilator(s).basis() * m.power(r);
  return Subspace(nullspace(eq));
}

Partition quotient_type(const FpModule& m, const Subspace& s) {
  if (!is_submodule(m, s)) throw NotInvariant("subspace is not T-invariant");
  const std::size_t total = m.dim() - s.dim();
  std::vector<int> rows;
  std::size_t prev = 0;
  for (int r = 1; prev < total; ++r) {
    const std::size_t d = preimage(m, s, r).dim() - s.dim();
    if (d == prev) throw std::logic_error("operator does not act nilpotently on the quotient");
    rows.push_back(static_cast<int>(d - prev));
    prev = d;
  }
  return transpose(Partition(rows));
}

Partition module_type(const FpModule& m) { return quotient_type(m, Subspace(m.prime(), m.dim())); }

Subspace submodule_span(const FpModule& m, const std::vector<FpVector>& generators) {
  Subspace s(FpMatrix::from_rows(m.prime(), m.dim(), generators));
  while (true) {
    Subspace next = s + image(m.op(), s);
    if (next.dim() == s.dim()) return s;
    s = std::move(next);
  }
}

Subspace soc_layer(const FpModule& m, const Subspace& s, int l) {
  return intersect(s, kernel(m.power(l)));
}

Subspace rad_layer(const FpModule& m, const Subspace& s, int k) { return image(m.power(k), s); }

FpModule dual_module(const FpModule& m) { return FpModule(m.op_t()); }

}  // namespace socle
