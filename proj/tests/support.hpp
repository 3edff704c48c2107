#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "socle/embedding.hpp"
#include "socle/io.hpp"
#include "socle/tableau.hpp"

namespace testsupport {

std::string data_path(const std::string& name);
socle::Embedding load_fixture(const std::string& name, int prime = 2);

socle::SkewTableau sigma2();
socle::SkewTableau gamma2_dual();
// Column of height m whose rows 2..m read m-1, ..., 1 (socle) or 1, ..., m-1 (lr).
socle::SkewTableau picket_socle(int l, int m);
socle::SkewTableau picket_lr(int l, int m);

// Classical Littlewood-Richardson number computed with parts read as ROW
// lengths: semistandard fillings of beta/gamma with content alpha whose
// right-to-left, top-to-bottom reading word is a lattice word. Equal to the
// column-convention count since the coefficient is invariant under
// transposing all three partitions.
std::size_t classical_lr(const socle::Partition& alpha, const socle::Partition& beta, const socle::Partition& gamma);

// Every filling of beta \ gamma with entries in 1..max_entry whose rows weakly
// decrease left to right and whose columns strictly decrease downwards.
void for_each_st12_filling(const socle::Partition& beta, const socle::Partition& gamma, int max_entry,
                           const std::function<void(const socle::SkewTableau&)>& visit);

// Line condition of a socle tableau, counted straight from the grid.
bool column_lines_ok(const socle::SkewTableau& t);

// Socle tableaux of the shape found by filtering all ST-1/ST-2 fillings.
std::size_t brute_socle_count(const socle::ShapeTriple& shape);

// Elements of a subspace over F_2 listed by brute force, as bit masks.
std::vector<std::uint32_t> elements_f2(const socle::Subspace& s);
std::uint32_t apply_f2(const socle::FpMatrix& m, std::uint32_t v);
// Type of the submodule by counting elements killed by powers of T.
socle::Partition type_by_counting_f2(const socle::FpModule& m, const socle::Subspace& s);
// log2 of the number of T-linear maps B_X -> B_Y carrying A_X into A_Y,
// counted one map at a time. Both ambients must be standard, p = 2.
std::size_t brute_hom_dim_f2(const socle::Embedding& x, const socle::Embedding& y);

// Dense rows helper for SkewTableau construction from a grid.
socle::SkewTableau from_grid(const socle::Partition& beta, const std::vector<std::vector<int>>& grid);

}  // namespace testsupport
