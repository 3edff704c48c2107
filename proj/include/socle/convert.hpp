#pragma once

#include <map>
#include <stdexcept>
#include <utility>

#include "socle/embedding.hpp"
#include "socle/tableau.hpp"

namespace socle {

class InconsistentMatrix : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// mu(entry, row) = number of boxes in the row holding the entry.
class EntryMultiplicity {
 public:
  EntryMultiplicity() = default;
  explicit EntryMultiplicity(const SkewTableau& t);

  int operator()(int entry, int row) const;
  void set(int entry, int row, int count);
  // Sum over rows j >= row.
  int from_row(int entry, int row) const;
  const std::map<std::pair<int, int>, int>& cells() const { return mu_; }

 private:
  std::map<std::pair<int, int>, int> mu_;
};

// Fills rows of beta: the first inner'_r boxes of row r stay empty, the
// entries follow, decreasing for the socle kind and increasing for LR. The
// inner shape is read off from the row totals. No validation.
SkewTableau tableau_from_multiplicity(const Partition& beta, const EntryMultiplicity& mu, TableauKind kind);

HomMatrix socle_to_hom(const SkewTableau& sigma);
// Throws InconsistentMatrix.
SkewTableau hom_to_socle(const HomMatrix& h);

// The dual LR-tableau of X has inner shape alpha and content gamma.
HomMatrix duallr_to_hom(const SkewTableau& gamma_star);
SkewTableau hom_to_duallr(const HomMatrix& h);

SkewTableau socle_to_duallr(const SkewTableau& sigma);
SkewTableau duallr_to_socle(const SkewTableau& gamma_star);

// h[l][m-1] - h[l][m] - h[l-1][m-2] + h[l-1][m-1]
int four_term(const HomMatrix& h, int l, int m);

enum class DefectMethod { picket_elements, linear_system };

// Cokernel length of Hom(f_l^m, X) for the picket map
// f_l^m : P_l^{m-1} -> P_l^m + P_{l-1}^{m-2}. At m = l the middle term and the
// map are absent and the value is 0. Throws BadIndex unless 1 <= l <= m.
int defect(const Embedding& x, int l, int m, DefectMethod method = DefectMethod::picket_elements);

// Matrix of f_l^m in the standard bases, with the consistency checks on the
// map (module map, carries A into A, injective, cokernel of the right size).
FpMatrix picket_map(int p, int l, int m);

}  // namespace socle
