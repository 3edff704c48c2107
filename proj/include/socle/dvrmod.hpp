#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "socle/fp_matrix.hpp"
#include "socle/partition.hpp"

namespace socle {

class NotInvariant : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A finite-dimensional F_p vector space with a nilpotent operator T, i.e. a
// module over F_p[T]/(T^N). The operator acts on column vectors.
class FpModule {
 public:
  FpModule() = default;
  FpModule(FpMatrix op, std::optional<Partition> standard = std::nullopt);

  int prime() const { return op_.prime(); }
  std::size_t dim() const { return op_.rows(); }
  const FpMatrix& op() const { return op_; }
  // Transposed operator: row vector v maps to v * op_t() = (T v)^t.
  const FpMatrix& op_t() const { return op_t_; }
  // T^r as a matrix.
  FpMatrix power(int r) const;
  FpVector act(const FpVector& v) const { return apply(op_, v); }

  // Set when the basis is the standard one of N_lambda (see standard_module).
  const std::optional<Partition>& standard_type() const { return standard_; }

 private:
  FpMatrix op_;
  FpMatrix op_t_;
  std::optional<Partition> standard_;
};

// A subspace stored by its reduced row echelon basis (rows).
class Subspace {
 public:
  Subspace() = default;
  Subspace(int p, std::size_t ambient_dim);  // zero subspace
  // Row span of the given matrix.
  explicit Subspace(FpMatrix rows);

  static Subspace whole(int p, std::size_t n);

  int prime() const { return basis_.prime(); }
  std::size_t ambient_dim() const { return basis_.cols(); }
  std::size_t dim() const { return basis_.rows(); }
  const FpMatrix& basis() const { return basis_; }
  bool contains(const FpVector& v) const;
  bool contains(const Subspace& other) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  FpMatrix basis_;
};

Subspace operator+(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);
// Rows span { f : f(v) = 0 for v in S } in the dual coordinates.
Subspace annihilator(const Subspace& s);
// Image of S under the matrix m (m acts on column vectors).
Subspace image(const FpMatrix& m, const Subspace& s);
Subspace kernel(const FpMatrix& m);

// N_lambda: basis vector (summand j, power i) represents p^i b_j and has
// index basis_index(lambda, j, i); T sends p^i b_j to p^{i+1} b_j.
FpModule standard_module(int p, const Partition& lambda);
std::size_t basis_index(const Partition& lambda, std::size_t summand, int power);

bool is_submodule(const FpModule& m, const Subspace& s);
Partition module_type(const FpModule& m);
// Type of M/S. Throws NotInvariant.
Partition quotient_type(const FpModule& m, const Subspace& s);

// Smallest T-invariant subspace containing the generators.
Subspace submodule_span(const FpModule& m, const std::vector<FpVector>& generators);

// { a in S : T^l a = 0 }
Subspace soc_layer(const FpModule& m, const Subspace& s, int l);
// T^k (S)
Subspace rad_layer(const FpModule& m, const Subspace& s, int k);
// { b in M : T^r b in S }
Subspace preimage(const FpModule& m, const Subspace& s, int r);

// Linear dual with the transposed operator.
FpModule dual_module(const FpModule& m);

}  // namespace socle
