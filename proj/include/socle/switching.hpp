#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "socle/tableau.hpp"

namespace socle {

class NonTerminating : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ShapeMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Owner : char { none = 0, S = 'S', T = 'T' };

struct SwitchCell {
  Owner owner = Owner::none;
  int value = 0;
  friend bool operator==(const SwitchCell&, const SwitchCell&) = default;
};

struct SwapRecord {
  Box s_box;  // position of the S-entry before the swap
  Box t_box;  // position of the T-entry before the swap
  int s_value = 0;
  int t_value = 0;
  friend bool operator==(const SwapRecord&, const SwapRecord&) = default;
};

// S and T laid out together on the diagram of beta, rows top-down.
struct SwitchState {
  Partition beta;
  std::vector<std::vector<SwitchCell>> grid;
  std::vector<SwapRecord> history;

  SwitchCell at(Box b) const { return grid[static_cast<std::size_t>(b.row - 1)][static_cast<std::size_t>(b.col - 1)]; }
  friend bool operator==(const SwitchState&, const SwitchState&) = default;
};

// S: row i of gamma filled with i. T: the socle entries relabeled i -> s+1-i
// with s the largest entry. Throws InvalidTableau.
SwitchState init_switch(const SkewTableau& sigma);

// Each owner's entries are weakly increasing along rows and strictly
// increasing down columns (cells of the other owner are skipped).
bool semistandard(const SwitchState& st, Owner who);

std::vector<SwapRecord> admissible_swaps(const SwitchState& st);
void apply_swap(SwitchState& st, const SwapRecord& swap);
bool is_terminal(const SwitchState& st);

struct SwitchOrder {
  // nullopt: always the largest S-entry first, ties broken by the rightmost
  // then the lowest box. A seed: uniform choice among admissible swaps.
  std::optional<std::uint64_t> seed;
};

// Throws NonTerminating beyond |beta|^2 * s swaps.
SwitchState run_switch(SwitchState st, const SwitchOrder& order = {});

// Region of T-cells as a partition; nullopt if it is not a Young diagram.
std::optional<Partition> t_region(const SwitchState& st);
// S-entries of a terminal state over the T-region as inner shape.
SkewTableau s_part(const SwitchState& st);

// Throws ShapeMismatch when the terminal T-region differs from alpha.
SkewTableau switch_to_duallr(const SkewTableau& sigma, const SwitchOrder& order = {});

// Grids after each swap of the history, starting with the initial state.
std::vector<SwitchState> replay(const SwitchState& initial, const std::vector<SwapRecord>& history);

struct ConjectureCase {
  ShapeTriple shape;
  SkewTableau sigma;
  SkewTableau expected;        // socle_to_duallr(sigma)
  std::optional<SkewTableau> got;  // nullopt when switching itself failed
  std::string order;           // "deterministic" or "seed N"
  std::string error;
  std::vector<SwapRecord> trace;
};

struct ConjectureReport {
  int max_beta_weight = 0;
  int seeds = 0;
  std::size_t shapes = 0;
  std::size_t cases = 0;
  std::size_t runs = 0;
  // switching disagrees with the conversion formula
  std::vector<ConjectureCase> mismatches;
  // a random order reached a different terminal state than the deterministic one
  std::vector<ConjectureCase> order_dependent;
  bool ok() const { return mismatches.empty() && order_dependent.empty(); }
};

ConjectureReport check_conjecture(int max_beta_weight, int seeds, std::uint64_t base_seed = 1);

// Every shape triple with 1 <= |beta| <= n, gamma inside beta.
std::vector<ShapeTriple> shapes_up_to(int n);

}  // namespace socle
