#include "socle/switching.hpp"

#include <algorithm>
#include <random>
#include <tuple>

#include "socle/convert.hpp"

namespace socle {

SwitchState init_switch(const SkewTableau& sigma) {
  if (!check_socle(sigma)) throw InvalidTableau("not a socle tableau");
  const int s = sigma.max_entry();
  SwitchState st;
  st.beta = sigma.beta();
  for (const auto& row : sigma.rows()) {
    std::vector<SwitchCell> cells;
    const int r = static_cast<int>(st.grid.size()) + 1;
    for (int v : row) cells.push_back(v == 0 ? SwitchCell{Owner::S, r} : SwitchCell{Owner::T, s + 1 - v});
    st.grid.push_back(std::move(cells));
  }
  return st;
}

namespace {

bool row_ok(const SwitchState& st, std::size_t r, Owner who) {
  int last = 0;
  for (const auto& c : st.grid[r])
    if (c.owner == who) {
      if (c.value < last) return false;
      last = c.value;
    }
  return true;
}

bool col_ok(const SwitchState& st, std::size_t c, Owner who) {
  int last = 0;
  for (const auto& row : st.grid)
    if (c < row.size() && row[c].owner == who) {
      if (row[c].value <= last) return false;
      last = row[c].value;
    }
  return true;
}

bool locally_ok(const SwitchState& st, Box a, Box b) {
  for (Owner who : {Owner::S, Owner::T}) {
    for (int r : {a.row, b.row})
      if (!row_ok(st, static_cast<std::size_t>(r - 1), who)) return false;
    for (int c : {a.col, b.col})
      if (!col_ok(st, static_cast<std::size_t>(c - 1), who)) return false;
  }
  return true;
}

void exchange(SwitchState& st, Box a, Box b) {
  std::swap(st.grid[static_cast<std::size_t>(a.row - 1)][static_cast<std::size_t>(a.col - 1)],
            st.grid[static_cast<std::size_t>(b.row - 1)][static_cast<std::size_t>(b.col - 1)]);
}

}  // namespace

bool semistandard(const SwitchState& st, Owner who) {
  for (std::size_t r = 0; r < st.grid.size(); ++r)
    if (!row_ok(st, r, who)) return false;
  for (std::size_t c = 0; c < st.beta.length(); ++c)
    if (!col_ok(st, c, who)) return false;
  return true;
}

std::vector<SwapRecord> admissible_swaps(const SwitchState& st) {
  std::vector<SwapRecord> out;
  SwitchState work = st;
  for (std::size_t r = 0; r < st.grid.size(); ++r)
    for (std::size_t c = 0; c < st.grid[r].size(); ++c) {
      if (st.grid[r][c].owner != Owner::S) continue;
      const Box a{static_cast<int>(r + 1), static_cast<int>(c + 1)};
      for (Box b : {Box{a.row, a.col + 1}, Box{a.row + 1, a.col}}) {
        if (!in_diagram(st.beta, b) || st.at(b).owner != Owner::T) continue;
        exchange(work, a, b);
        if (locally_ok(work, a, b)) out.push_back(SwapRecord{a, b, st.at(a).value, st.at(b).value});
        exchange(work, a, b);
      }
    }
  return out;
}

void apply_swap(SwitchState& st, const SwapRecord& swap) {
  if (st.at(swap.s_box) != SwitchCell{Owner::S, swap.s_value} ||
      st.at(swap.t_box) != SwitchCell{Owner::T, swap.t_value})
    throw std::logic_error("swap does not match the state");
  exchange(st, swap.s_box, swap.t_box);
  st.history.push_back(swap);
}

bool is_terminal(const SwitchState& st) { return admissible_swaps(st).empty(); }

SwitchState run_switch(SwitchState st, const SwitchOrder& order) {
  int s = 0;
  for (const auto& row : st.grid)
    for (const auto& c : row)
      if (c.owner == Owner::T) s = std::max(s, c.value);
  const long long guard = static_cast<long long>(st.beta.weight()) * st.beta.weight() * std::max(s, 1);
  std::mt19937_64 rng(order.seed.value_or(0));
  for (long long step = 0;; ++step) {
    auto swaps = admissible_swaps(st);
    if (swaps.empty()) return st;
    if (step >= guard) throw NonTerminating("switching exceeded " + std::to_string(guard) + " swaps");
    std::size_t pick = 0;
    if (order.seed) {
      pick = std::uniform_int_distribution<std::size_t>(0, swaps.size() - 1)(rng);
    } else {
      for (std::size_t i = 1; i < swaps.size(); ++i) {
        const auto& a = swaps[i];
        const auto& b = swaps[pick];
        if (std::tie(a.s_value, a.s_box.col, a.s_box.row) > std::tie(b.s_value, b.s_box.col, b.s_box.row)) pick = i;
      }
    }
    apply_swap(st, swaps[pick]);
  }
}

std::optional<Partition> t_region(const SwitchState& st) {
  std::vector<int> cols(st.beta.length(), 0);
  for (std::size_t c = 0; c < cols.size(); ++c) {
    bool gap = false;
    for (const auto& row : st.grid) {
      if (c >= row.size()) break;
      if (row[c].owner == Owner::T) {
        if (gap) return std::nullopt;
        ++cols[c];
      } else {
        gap = true;
      }
    }
  }
  try {
    return Partition(cols);
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

SkewTableau s_part(const SwitchState& st) {
  auto inner = t_region(st);
  if (!inner) throw ShapeMismatch("T-cells do not form a Young diagram");
  std::vector<std::vector<int>> rows;
  for (const auto& row : st.grid) {
    std::vector<int> r;
    for (const auto& c : row) r.push_back(c.owner == Owner::S ? c.value : 0);
    rows.push_back(std::move(r));
  }
  return SkewTableau(st.beta, *inner, std::move(rows));
}

SkewTableau switch_to_duallr(const SkewTableau& sigma, const SwitchOrder& order) {
  const ShapeTriple shape = sigma.shape();
  const SwitchState end = run_switch(init_switch(sigma), order);
  const auto region = t_region(end);
  if (!region || !(*region == shape.alpha))
    throw ShapeMismatch("terminal T-region is " + (region ? region->to_string() : std::string("not a diagram")) +
                        ", expected " + shape.alpha.to_string());
  return s_part(end);
}

std::vector<SwitchState> replay(const SwitchState& initial, const std::vector<SwapRecord>& history) {
  std::vector<SwitchState> out;
  SwitchState st = initial;
  st.history.clear();
  out.push_back(st);
  for (const auto& swap : history) {
    apply_swap(st, swap);
    out.push_back(st);
  }
  return out;
}

std::vector<ShapeTriple> shapes_up_to(int n) {
  std::vector<ShapeTriple> out;
  for (int w = 1; w <= n; ++w)
    for (const auto& beta : partitions_of(w))
      for (const auto& gamma : subpartitions(beta))
        for (const auto& alpha : partitions_of(w - gamma.weight())) out.push_back(ShapeTriple{alpha, beta, gamma});
  return out;
}

ConjectureReport check_conjecture(int max_beta_weight, int seeds, std::uint64_t base_seed) {
  ConjectureReport rep;
  rep.max_beta_weight = max_beta_weight;
  rep.seeds = seeds;
  std::uint64_t case_index = 0;
  for (const auto& shape : shapes_up_to(max_beta_weight)) {
    const auto tableaux = enumerate(shape, TableauKind::socle);
    if (tableaux.empty()) continue;
    ++rep.shapes;
    for (const auto& sigma : tableaux) {
      ++rep.cases;
      ++case_index;
      const SkewTableau expected = socle_to_duallr(sigma);
      const SwitchState start = init_switch(sigma);
      std::optional<SwitchState> reference;
      for (int k = -1; k < seeds; ++k) {
        SwitchOrder order;
        std::string label = "deterministic";
        if (k >= 0) {
          order.seed = base_seed + case_index * 1000003ULL + static_cast<std::uint64_t>(k);
          label = "seed " + std::to_string(*order.seed);
        }
        ++rep.runs;
        ConjectureCase c{shape, sigma, expected, std::nullopt, label, {}, {}};
        try {
          const SwitchState end = run_switch(start, order);
          c.trace = end.history;
          const auto region = t_region(end);
          if (!region || !(*region == shape.alpha)) {
            c.error = "terminal T-region is not alpha";
          } else {
            c.got = s_part(end);
          }
          if (!c.got || !(*c.got == expected)) rep.mismatches.push_back(c);
          if (!reference) {
            reference = end;
          } else if (!(end.grid == reference->grid)) {
            rep.order_dependent.push_back(c);
          }
        } catch (const std::exception& e) {
          c.error = e.what();
          rep.mismatches.push_back(c);
        }
      }
    }
  }
  return rep;
}

}  // namespace socle
