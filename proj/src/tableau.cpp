#include "socle/tableau.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <string>

namespace socle {

SkewTableau::SkewTableau(Partition beta, Partition gamma, std::vector<std::vector<int>> rows)
    : beta_(std::move(beta)), gamma_(std::move(gamma)), rows_(std::move(rows)) {
  if (!contains(beta_, gamma_))
    throw InvalidTableau("inner shape " + gamma_.to_string() + " not inside " + beta_.to_string());
  const Partition rb = transpose(beta_);
  const Partition rg = transpose(gamma_);
  if (rows_.size() != rb.length()) throw InvalidTableau("grid must have one row per row of beta");
  for (std::size_t r = 1; r <= rb.length(); ++r) {
    const auto& row = rows_[r - 1];
    if (row.size() != static_cast<std::size_t>(rb[r]))
      throw InvalidTableau("grid row " + std::to_string(r) + " has the wrong length");
    for (int c = 1; c <= rb[r]; ++c) {
      const int v = row[static_cast<std::size_t>(c - 1)];
      if (c <= rg[r] && v != 0) throw InvalidTableau("inner box holds an entry");
      if (c > rg[r] && v <= 0) throw InvalidTableau("skew box holds no positive entry");
    }
  }
}

SkewTableau SkewTableau::empty(const Partition& beta) {
  const Partition rb = transpose(beta);
  std::vector<std::vector<int>> rows;
  for (int len : rb.parts()) rows.emplace_back(static_cast<std::size_t>(len), 0);
  return SkewTableau(beta, beta, std::move(rows));
}

int SkewTableau::at(Box b) const {
  if (!in_diagram(beta_, b)) throw std::out_of_range("box outside beta");
  return rows_[static_cast<std::size_t>(b.row - 1)][static_cast<std::size_t>(b.col - 1)];
}

void SkewTableau::set(Box b, int entry) {
  if (!in_skew(beta_, gamma_, b)) throw std::out_of_range("box outside the skew diagram");
  if (entry <= 0) throw InvalidTableau("entries must be positive");
  rows_[static_cast<std::size_t>(b.row - 1)][static_cast<std::size_t>(b.col - 1)] = entry;
}

std::vector<int> SkewTableau::content() const {
  std::vector<int> counts;
  for (const auto& row : rows_)
    for (int v : row) {
      if (v <= 0) continue;
      if (counts.size() < static_cast<std::size_t>(v)) counts.resize(static_cast<std::size_t>(v), 0);
      ++counts[static_cast<std::size_t>(v - 1)];
    }
  return counts;
}

int SkewTableau::max_entry() const { return static_cast<int>(content().size()); }

std::optional<Partition> SkewTableau::alpha() const {
  const auto c = content();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) return std::nullopt;
    if (i > 0 && c[i] > c[i - 1]) return std::nullopt;
  }
  return transpose(Partition(c));
}

ShapeTriple SkewTableau::shape() const {
  auto a = alpha();
  if (!a) throw InvalidTableau("content is not the row-length vector of a partition");
  return ShapeTriple{*a, beta_, gamma_};
}

std::vector<int> SkewTableau::reading_word() const {
  std::vector<int> w;
  for (const auto& row : rows_)
    for (int v : row)
      if (v > 0) w.push_back(v);
  return w;
}

namespace {

// counts[c-1][l-1]: number of entries l in column c.
std::vector<std::vector<int>> column_counts(const SkewTableau& t, int max_entry) {
  std::vector<std::vector<int>> counts(t.beta().length(), std::vector<int>(static_cast<std::size_t>(max_entry), 0));
  const auto& rows = t.rows();
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c)
      if (rows[r][c] > 0) ++counts[c][static_cast<std::size_t>(rows[r][c] - 1)];
  return counts;
}

bool rows_and_columns(const SkewTableau& t, bool increasing) {
  const auto& rows = t.rows();
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      const int v = rows[r][c];
      if (v == 0) continue;
      if (c > 0 && rows[r][c - 1] > 0) {
        const int left = rows[r][c - 1];
        if (increasing ? left > v : left < v) return false;
      }
      if (r > 0 && c < rows[r - 1].size() && rows[r - 1][c] > 0) {
        const int up = rows[r - 1][c];
        if (increasing ? up >= v : up <= v) return false;
      }
    }
  }
  return true;
}

}  // namespace

bool check_st12(const SkewTableau& t) { return rows_and_columns(t, false); }

bool check_st3(const SkewTableau& t) {
  const int s = t.max_entry();
  const auto counts = column_counts(t, s);
  std::vector<int> cum(static_cast<std::size_t>(s), 0);
  for (const auto& col : counts) {
    for (int l = 0; l < s; ++l) cum[static_cast<std::size_t>(l)] += col[static_cast<std::size_t>(l)];
    for (int l = 1; l < s; ++l)
      if (cum[static_cast<std::size_t>(l)] > cum[static_cast<std::size_t>(l - 1)]) return false;
  }
  return true;
}

bool check_socle(const SkewTableau& t) { return check_st12(t) && check_st3(t); }

bool check_lr(const SkewTableau& t) {
  if (!rows_and_columns(t, true)) return false;
  const int s = t.max_entry();
  const auto counts = column_counts(t, s);
  std::vector<int> cum(static_cast<std::size_t>(s), 0);
  for (auto it = counts.rbegin(); it != counts.rend(); ++it) {
    for (int l = 0; l < s; ++l) cum[static_cast<std::size_t>(l)] += (*it)[static_cast<std::size_t>(l)];
    for (int l = 1; l < s; ++l)
      if (cum[static_cast<std::size_t>(l)] > cum[static_cast<std::size_t>(l - 1)]) return false;
  }
  return true;
}

bool check_st3_prime(const SkewTableau& t) {
  const int s = t.max_entry();
  const auto& rows = t.rows();
  const std::size_t nrows = rows.size();
  // below[r][l]: entries l+1 in rows > r (0-based r).
  std::vector<std::vector<int>> at_or_below(nrows + 1, std::vector<int>(static_cast<std::size_t>(s) + 1, 0));
  for (std::size_t r = nrows; r-- > 0;) {
    at_or_below[r] = at_or_below[r + 1];
    for (int v : rows[r])
      if (v > 0) ++at_or_below[r][static_cast<std::size_t>(v - 1)];
  }
  for (std::size_t r = 0; r < nrows; ++r)
    for (int l = 1; l < s; ++l)
      if (at_or_below[r][static_cast<std::size_t>(l)] > at_or_below[r + 1][static_cast<std::size_t>(l - 1)])
        return false;
  return true;
}

EntryMatching build_matching(const SkewTableau& t, int level) {
  EntryMatching m;
  m.level = level;
  std::vector<Box> hi, lo;
  const auto& rows = t.rows();
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      const Box b{static_cast<int>(r + 1), static_cast<int>(c + 1)};
      if (rows[r][c] == level + 1) hi.push_back(b);
      if (rows[r][c] == level) lo.push_back(b);
    }
  std::sort(hi.begin(), hi.end(), [](Box a, Box b) { return a.col > b.col || (a.col == b.col && a.row < b.row); });
  std::vector<bool> used(lo.size(), false);
  std::vector<bool> matched(hi.size(), false);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < hi.size(); ++i) {
    for (std::size_t j = 0; j < lo.size(); ++j) {
      if (!used[j] && lo[j].col == hi[i].col) {
        used[j] = matched[i] = true;
        pairs.emplace_back(i, j);
        break;
      }
    }
  }
  for (std::size_t i = 0; i < hi.size(); ++i) {
    if (matched[i]) continue;
    bool column_has_level = std::any_of(lo.begin(), lo.end(), [&](Box b) { return b.col == hi[i].col; });
    if (column_has_level)
      throw MatchingFailed("column " + std::to_string(hi[i].col) + " has an unmatched entry " +
                           std::to_string(level + 1));
    std::size_t best = lo.size();
    for (std::size_t j = 0; j < lo.size(); ++j)
      if (!used[j] && lo[j].col < hi[i].col && (best == lo.size() || lo[j].col > lo[best].col)) best = j;
    if (best == lo.size())
      throw MatchingFailed("no entry " + std::to_string(level) + " left of column " + std::to_string(hi[i].col));
    used[best] = matched[i] = true;
    pairs.emplace_back(i, best);
  }
  std::sort(pairs.begin(), pairs.end());
  for (auto [i, j] : pairs) m.pairs.emplace_back(hi[i], lo[j]);
  return m;
}

PartitionChain to_chain(const SkewTableau& t, TableauKind kind) {
  const int s = t.max_entry();
  PartitionChain out{kind, {}};
  const std::size_t ncols = t.beta().length();
  for (int i = 0; i <= s; ++i) {
    std::vector<int> cols(ncols, 0);
    for (std::size_t c = 1; c <= ncols; ++c) {
      int len = t.gamma()[c];
      for (int r = t.gamma()[c] + 1; r <= t.beta()[c]; ++r) {
        const int v = t.at(Box{r, static_cast<int>(c)});
        if (kind == TableauKind::socle ? v > i : v <= i) ++len;
      }
      cols[c - 1] = len;
    }
    try {
      out.chain.emplace_back(std::move(cols));
    } catch (const std::invalid_argument&) {
      throw InvalidTableau("filling does not define a partition chain");
    }
  }
  return out;
}

SkewTableau from_chain(const PartitionChain& c) {
  if (c.chain.empty()) throw ChainNotNested("empty chain");
  const bool socle_view = c.kind == TableauKind::socle;
  const Partition& beta = socle_view ? c.chain.front() : c.chain.back();
  const Partition& gamma = socle_view ? c.chain.back() : c.chain.front();
  SkewTableau t = SkewTableau::empty(beta);
  std::vector<std::vector<int>> rows = t.rows();
  for (std::size_t l = 1; l < c.chain.size(); ++l) {
    const Partition& outer = socle_view ? c.chain[l - 1] : c.chain[l];
    const Partition& inner = socle_view ? c.chain[l] : c.chain[l - 1];
    if (!contains(outer, inner)) throw ChainNotNested("chain is not nested at step " + std::to_string(l));
    if (!is_horizontal_strip(outer, inner))
      throw NotHorizontalStrip("step " + std::to_string(l) + " is not a horizontal strip");
    for (Box b : skew_boxes(outer, inner))
      rows[static_cast<std::size_t>(b.row - 1)][static_cast<std::size_t>(b.col - 1)] = static_cast<int>(l);
  }
  if (!contains(beta, gamma)) throw ChainNotNested("chain ends outside its start");
  return SkewTableau(beta, gamma, std::move(rows));
}

namespace {

// Strip-by-strip chain search. Each level chooses the columns that change by
// one box; the lattice condition only couples consecutive levels.
class ChainSearch {
 public:
  ChainSearch(const ShapeTriple& shape, TableauKind kind,
              std::function<void(const std::vector<std::vector<int>>&)> visit)
      : kind_(kind), visit_(std::move(visit)) {
    ncols_ = std::max(shape.beta.length(), shape.gamma.length());
    beta_.assign(ncols_, 0);
    gamma_.assign(ncols_, 0);
    for (std::size_t c = 0; c < ncols_; ++c) {
      beta_[c] = shape.beta[c + 1];
      gamma_[c] = shape.gamma[c + 1];
    }
    const Partition a = transpose(shape.alpha);
    sizes_ = a.parts();
    ok_ = shape.valid() && contains(shape.beta, shape.gamma);
  }

  void run() {
    if (!ok_) return;
    std::vector<int> start = kind_ == TableauKind::socle ? beta_ : gamma_;
    chain_.assign(1, start);
    diffs_.clear();
    level(1);
  }

 private:
  int levels() const { return static_cast<int>(sizes_.size()); }

  void level(int l) {
    if (l > levels()) {
      visit_(chain_);
      return;
    }
    std::vector<int> d(ncols_, 0);
    std::vector<int> next = chain_.back();
    choose(l, 0, 0, 0, d, next);
  }

  // prefix = entries l chosen in columns < c; prev_prefix = entries l-1 there.
  void choose(int l, std::size_t c, int chosen, int prev_prefix, std::vector<int>& d, std::vector<int>& next) {
    const int need = sizes_[static_cast<std::size_t>(l - 1)];
    const int remaining_levels = levels() - l;
    if (c == ncols_) {
      if (chosen != need) return;
      if (kind_ == TableauKind::lr && !lr_suffix_ok(l, d)) return;
      diffs_.push_back(d);
      chain_.push_back(next);
      level(l + 1);
      chain_.pop_back();
      diffs_.pop_back();
      return;
    }
    if (kind_ == TableauKind::socle && l > 1) prev_prefix += diffs_.back()[c];
    const std::size_t left_cols = ncols_ - c;
    if (chosen + static_cast<int>(left_cols) < need) return;
    const int cur = chain_.back()[c];
    for (int take = 0; take <= 1; ++take) {
      if (take && chosen == need) break;
      int value = cur;
      if (kind_ == TableauKind::socle) {
        if (take && cur <= gamma_[c]) continue;
        value = cur - take;
        if (value - gamma_[c] > remaining_levels) continue;
        if (l > 1 && chosen + take > prev_prefix) continue;
      } else {
        if (take && cur >= beta_[c]) continue;
        value = cur + take;
        if (beta_[c] - value > remaining_levels) continue;
      }
      if (c > 0 && value > next[c - 1]) continue;
      next[c] = value;
      d[c] = take;
      choose(l, c + 1, chosen + take, prev_prefix, d, next);
      d[c] = 0;
      next[c] = cur;
    }
  }

  bool lr_suffix_ok(int l, const std::vector<int>& d) const {
    if (l == 1) return true;
    const auto& prev = diffs_.back();
    int a = 0, b = 0;
    for (std::size_t c = ncols_; c-- > 0;) {
      a += d[c];
      b += prev[c];
      if (a > b) return false;
    }
    return true;
  }

  TableauKind kind_;
  std::function<void(const std::vector<std::vector<int>>&)> visit_;
  std::size_t ncols_ = 0;
  std::vector<int> beta_, gamma_, sizes_;
  bool ok_ = false;
  std::vector<std::vector<int>> chain_;
  std::vector<std::vector<int>> diffs_;
};

}  // namespace

std::vector<SkewTableau> enumerate(const ShapeTriple& shape, TableauKind kind) {
  std::vector<SkewTableau> out;
  ChainSearch search(shape, kind, [&](const std::vector<std::vector<int>>& chain) {
    PartitionChain pc{kind, {}};
    for (const auto& cols : chain) pc.chain.emplace_back(cols);
    out.push_back(from_chain(pc));
  });
  search.run();
  std::sort(out.begin(), out.end(),
            [](const SkewTableau& a, const SkewTableau& b) { return a.reading_word() < b.reading_word(); });
  return out;
}

std::size_t count_tableaux(const ShapeTriple& shape, TableauKind kind) {
  std::size_t n = 0;
  ChainSearch search(shape, kind, [&](const std::vector<std::vector<int>>&) { ++n; });
  search.run();
  return n;
}

std::size_t lr_coefficient(const ShapeTriple& shape) {
  if (!shape.valid()) return 0;
  return count_tableaux(shape, TableauKind::lr);
}

}  // namespace socle
