#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "socle/dvrmod.hpp"
#include "socle/tableau.hpp"

namespace socle {

class BadIndex : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// A submodule A of an ambient module B.
class Embedding {
 public:
  Embedding() = default;
  // Throws NotInvariant when sub is not a submodule of ambient.
  Embedding(FpModule ambient, Subspace sub);

  int prime() const { return ambient_.prime(); }
  const FpModule& ambient() const { return ambient_; }
  const Subspace& sub() const { return sub_; }

  // (type A, type B, type B/A)
  ShapeTriple shape() const;

 private:
  FpModule ambient_;
  Subspace sub_;
};

// Generators in the file layout: generator -> summand j -> coefficients of
// b_j, p b_j, ..., p^{beta_j - 1} b_j. Coefficients may be negative.
using GeneratorData = std::vector<std::vector<std::vector<int>>>;

Embedding from_generators(int p, const Partition& beta, const GeneratorData& gens);
FpVector generator_vector(int p, const Partition& beta, const std::vector<std::vector<int>>& coeffs);

// P_l^m: a single block of size m with its submodule of length l.
Embedding picket(int p, int l, int m);
Embedding zero_embedding(int p);

SkewTableau socle_tableau(const Embedding& x);
SkewTableau lr_tableau(const Embedding& x);
// Ambient dual_module(B), submodule the annihilator of A. A standard ambient
// stays standard: each block of the dual basis is listed in reverse order.
Embedding dual_embedding(const Embedding& x);
Embedding direct_sum(const Embedding& x, const Embedding& y);

// Dimension of the space of T-linear maps B_X -> B_Y carrying A_X into A_Y,
// by solving the defining linear system. Throws PrimeMismatch.
std::size_t hom_dim(const Embedding& x, const Embedding& y);
// Basis of that space; each entry is a dim(B_Y) x dim(B_X) matrix.
std::vector<FpMatrix> hom_basis(const Embedding& x, const Embedding& y);

// Elements b with T^m b = 0 and T^{m-l} b in A; evaluation at the generator
// identifies this with Hom(P_l^m, X).
Subspace picket_hom_space(const Embedding& x, int l, int m);

class HomMatrix {
 public:
  HomMatrix() = default;
  // All entries 0 <= l <= m <= M.
  explicit HomMatrix(int M);
  HomMatrix(int L, int M);

  int L() const { return L_; }
  int M() const { return M_; }
  // 0 for negative indices; columns beyond M read column M.
  int at(int l, int m) const;
  void set(int l, int m, int value);
  bool in_bounds(int l, int m) const { return l >= 0 && l <= L_ && m >= l && m <= M_; }

  friend bool operator==(const HomMatrix&, const HomMatrix&) = default;

 private:
  int L_ = 0, M_ = 0;
  std::vector<std::vector<int>> h_;
};

// Full triangle with bound alpha_1 + beta_1 + 1 in both indices.
int hom_bound(const ShapeTriple& shape);

enum class HomMethod { picket_elements, linear_system };
HomMatrix hom_matrix(const Embedding& x, HomMethod method = HomMethod::picket_elements);

// dim (soc^l A  cap rad^{r-1} B) / (soc^{l-1} A  cap rad^{r-1} B)
int entries_below(const Embedding& x, int l, int r);

struct CorpusOptions {
  int max_weight = 10;
  std::size_t count = 200;
  int max_generators = 3;
  std::uint64_t seed = 1;
};

struct SymbolicEmbedding {
  Partition beta;
  GeneratorData generators;
};

// Generators with entries in {-1, 0, 1}: each one a single power p^a b_i or a
// difference p^a b_i - p^c b_j. The data does not depend on p, so the same
// corpus can be realized over several primes and compared.
std::vector<SymbolicEmbedding> symbolic_corpus(const CorpusOptions& opt);
// Generators as uniform random vectors over F_p, invariant span taken,
// duplicates (same beta and same submodule) dropped.
std::vector<Embedding> random_corpus(int p, const CorpusOptions& opt);

}  // namespace socle
