#include "support.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#ifndef SOCLE_DATA_DIR
#define SOCLE_DATA_DIR "data"
#endif

namespace testsupport {

using namespace socle;

std::string data_path(const std::string& name) { return std::string(SOCLE_DATA_DIR) + "/" + name; }

Embedding load_fixture(const std::string& name, int prime) {
  Json j = read_json_file(data_path(name));
  j["prime"] = prime;
  return embedding_from_json(j);
}

SkewTableau from_grid(const Partition& beta, const std::vector<std::vector<int>>& grid) {
  std::vector<int> inner;
  const Partition rows = transpose(beta);
  for (std::size_t r = 0; r < grid.size(); ++r) {
    if (static_cast<int>(grid[r].size()) != rows[r + 1]) throw std::invalid_argument("grid row length");
    int zeros = 0;
    for (int v : grid[r]) zeros += v == 0;
    inner.push_back(zeros);
  }
  return SkewTableau(beta, transpose(Partition::from_unsorted(inner)), grid);
}

SkewTableau sigma2() { return from_grid({5, 3, 2}, {{0, 0, 4}, {0, 3, 2}, {0, 1}, {2}, {1}}); }
SkewTableau gamma2_dual() { return from_grid({5, 3, 2}, {{0, 0, 1}, {0, 0, 2}, {0, 1}, {0}, {3}}); }

SkewTableau picket_socle(int l, int m) {
  std::vector<std::vector<int>> g;
  for (int r = 1; r <= m; ++r) g.push_back({r <= m - l ? 0 : m + 1 - r});
  return from_grid(Partition{m}, g);
}

SkewTableau picket_lr(int l, int m) {
  std::vector<std::vector<int>> g;
  for (int r = 1; r <= m; ++r) g.push_back({r <= m - l ? 0 : r - (m - l)});
  return from_grid(Partition{m}, g);
}

namespace {

struct LrSearch {
  std::vector<int> row_len, inner;
  std::vector<std::pair<int, int>> cells;  // (row, col), 0-based
  std::vector<int> content;                // remaining copies of each entry
  std::map<std::pair<int, int>, int> fill;
  std::size_t count = 0;

  bool lattice() const {
    // reading word: rows top to bottom, each row right to left
    std::vector<int> seen(content.size() + 2, 0);
    for (std::size_t r = 0; r < row_len.size(); ++r)
      for (int c = row_len[r] - 1; c >= inner[r]; --c) {
        const int v = fill.at({static_cast<int>(r), c});
        ++seen[v];
        if (v > 1 && seen[v] > seen[v - 1]) return false;
      }
    return true;
  }

  void run(std::size_t k) {
    if (k == cells.size()) {
      if (lattice()) ++count;
      return;
    }
    const auto [r, c] = cells[k];
    for (int v = 1; v < static_cast<int>(content.size()); ++v) {
      if (content[v] == 0) continue;
      auto left = fill.find({r, c - 1});
      if (c > inner[r] && left->second > v) continue;
      auto up = fill.find({r - 1, c});
      if (up != fill.end() && up->second >= v) continue;
      fill[{r, c}] = v;
      --content[v];
      run(k + 1);
      ++content[v];
      fill.erase({r, c});
    }
  }
};

}  // namespace

std::size_t classical_lr(const Partition& alpha, const Partition& beta, const Partition& gamma) {
  if (!contains(beta, gamma) || alpha.weight() + gamma.weight() != beta.weight()) return 0;
  LrSearch s;
  for (std::size_t r = 1; r <= beta.length(); ++r) {
    s.row_len.push_back(beta[r]);
    s.inner.push_back(gamma[r]);
    for (int c = gamma[r]; c < beta[r]; ++c) s.cells.emplace_back(static_cast<int>(r - 1), c);
  }
  s.content.assign(alpha.length() + 1, 0);
  for (std::size_t i = 1; i <= alpha.length(); ++i) s.content[i] = alpha[i];
  s.run(0);
  return s.count;
}

void for_each_st12_filling(const Partition& beta, const Partition& gamma, int max_entry,
                           const std::function<void(const SkewTableau&)>& visit) {
  const Partition rows = transpose(beta);
  const Partition inner = transpose(gamma);
  std::vector<std::vector<int>> grid;
  for (std::size_t r = 1; r <= rows.length(); ++r) grid.emplace_back(static_cast<std::size_t>(rows[r]), 0);
  const auto boxes = skew_boxes(beta, gamma);
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == boxes.size()) {
      visit(SkewTableau(beta, gamma, grid));
      return;
    }
    const int r = boxes[k].row - 1, c = boxes[k].col - 1;
    for (int v = 1; v <= max_entry; ++v) {
      if (c > inner[static_cast<std::size_t>(r + 1)] && grid[r][c - 1] < v) continue;
      if (r > 0 && c < rows[static_cast<std::size_t>(r)] && grid[r - 1][c] != 0 && grid[r - 1][c] <= v) continue;
      grid[r][c] = v;
      rec(k + 1);
      grid[r][c] = 0;
    }
  };
  rec(0);
}

bool column_lines_ok(const SkewTableau& t) {
  const auto& g = t.rows();
  int top = 0, width = 0;
  for (const auto& row : g) {
    width = std::max(width, static_cast<int>(row.size()));
    for (int v : row) top = std::max(top, v);
  }
  for (int l = 1; l < top; ++l) {
    int upper = 0, lower = 0;
    for (int c = 0; c < width; ++c) {
      for (const auto& row : g)
        if (c < static_cast<int>(row.size())) {
          upper += row[c] == l + 1;
          lower += row[c] == l;
        }
      if (upper > lower) return false;
    }
  }
  return true;
}

std::size_t brute_socle_count(const ShapeTriple& shape) {
  std::size_t n = 0;
  const Partition want = transpose(shape.alpha);
  for_each_st12_filling(shape.beta, shape.gamma, shape.alpha.first(), [&](const SkewTableau& t) {
    std::vector<int> content(static_cast<std::size_t>(shape.alpha.first()), 0);
    for (const auto& row : t.rows())
      for (int v : row)
        if (v) ++content[v - 1];
    if (content == want.parts() && column_lines_ok(t)) ++n;
  });
  return n;
}

std::uint32_t apply_f2(const FpMatrix& m, std::uint32_t v) {
  std::uint32_t out = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    int bit = 0;
    for (std::size_t j = 0; j < m.cols(); ++j)
      if ((v >> j) & 1u) bit ^= m(i, j);
    if (bit) out |= 1u << i;
  }
  return out;
}

std::vector<std::uint32_t> elements_f2(const Subspace& s) {
  std::vector<std::uint32_t> gens;
  for (std::size_t i = 0; i < s.dim(); ++i) {
    std::uint32_t g = 0;
    for (std::size_t j = 0; j < s.ambient_dim(); ++j)
      if (s.basis()(i, j)) g |= 1u << j;
    gens.push_back(g);
  }
  std::vector<std::uint32_t> out;
  for (std::uint32_t mask = 0; mask < (1u << gens.size()); ++mask) {
    std::uint32_t v = 0;
    for (std::size_t i = 0; i < gens.size(); ++i)
      if ((mask >> i) & 1u) v ^= gens[i];
    out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Partition type_by_counting_f2(const FpModule& m, const Subspace& s) {
  const auto elems = elements_f2(s);
  std::vector<int> killed_log;  // log2 |{a : T^k a = 0}|
  for (std::size_t k = 0;; ++k) {
    std::size_t n = 0;
    for (auto v : elems) {
      std::uint32_t w = v;
      for (std::size_t i = 0; i < k; ++i) w = apply_f2(m.op(), w);
      n += w == 0;
    }
    int lg = 0;
    while ((std::size_t{1} << lg) < n) ++lg;
    killed_log.push_back(lg);
    if (n == elems.size()) break;
  }
  std::vector<int> row_lengths;
  for (std::size_t k = 1; k < killed_log.size(); ++k) row_lengths.push_back(killed_log[k] - killed_log[k - 1]);
  return transpose(Partition(row_lengths));
}

std::size_t brute_hom_dim_f2(const Embedding& x, const Embedding& y) {
  const Partition bx = *x.ambient().standard_type();
  const auto ay = elements_f2(y.sub());
  const std::set<std::uint32_t> ay_set(ay.begin(), ay.end());
  const auto ax = elements_f2(x.sub());
  const std::size_t dy = y.ambient().dim();
  // candidate images of each generator b_j: elements of B_Y killed by T^{beta_j}
  std::vector<std::vector<std::uint32_t>> candidates;
  for (std::size_t j = 1; j <= bx.length(); ++j) {
    std::vector<std::uint32_t> c;
    for (std::uint32_t v = 0; v < (1u << dy); ++v) {
      std::uint32_t w = v;
      for (int i = 0; i < bx[j]; ++i) w = apply_f2(y.ambient().op(), w);
      if (w == 0) c.push_back(v);
    }
    candidates.push_back(c);
  }
  std::vector<std::size_t> pick(candidates.size(), 0);
  std::size_t good = 0;
  for (;;) {
    // image of basis vector p^i b_j is T^i (image of b_j)
    std::vector<std::uint32_t> col(x.ambient().dim());
    for (std::size_t j = 1; j <= bx.length(); ++j) {
      std::uint32_t w = candidates[j - 1][pick[j - 1]];
      for (int i = 0; i < bx[j]; ++i) {
        col[basis_index(bx, j, i)] = w;
        w = apply_f2(y.ambient().op(), w);
      }
    }
    bool ok = true;
    for (auto a : ax) {
      std::uint32_t img = 0;
      for (std::size_t k = 0; k < col.size(); ++k)
        if ((a >> k) & 1u) img ^= col[k];
      if (!ay_set.count(img)) {
        ok = false;
        break;
      }
    }
    good += ok;
    std::size_t k = 0;
    while (k < pick.size() && ++pick[k] == candidates[k].size()) pick[k++] = 0;
    if (k == pick.size()) break;
  }
  std::size_t lg = 0;
  while ((std::size_t{1} << lg) < good) ++lg;
  if ((std::size_t{1} << lg) != good) throw std::logic_error("hom count is not a power of two");
  return lg;
}

}  // namespace testsupport
