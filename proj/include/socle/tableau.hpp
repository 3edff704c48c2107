#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "socle/partition.hpp"

namespace socle {

class InvalidTableau : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class MatchingFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ChainNotNested : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotHorizontalStrip : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class TableauKind { socle, lr };

// A filling of the skew diagram beta \ gamma. Cells are stored row by row;
// row r has transpose(beta)_r cells, cells inside gamma hold 0.
class SkewTableau {
 public:
  SkewTableau() = default;
  SkewTableau(Partition beta, Partition gamma, std::vector<std::vector<int>> rows);

  // Empty filling of beta \ beta.
  static SkewTableau empty(const Partition& beta);

  const Partition& beta() const { return beta_; }
  const Partition& gamma() const { return gamma_; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }

  // 0 for a gamma box. Throws std::out_of_range outside beta.
  int at(Box b) const;
  void set(Box b, int entry);

  // content()[l-1] = number of boxes holding l.
  std::vector<int> content() const;
  int max_entry() const;

  // transpose(content) when content is a partition's row-length vector.
  std::optional<Partition> alpha() const;
  // Throws InvalidTableau when the content is not of partition type.
  ShapeTriple shape() const;

  // Entries of beta \ gamma in row-major order.
  std::vector<int> reading_word() const;

  friend bool operator==(const SkewTableau&, const SkewTableau&) = default;

 private:
  Partition beta_;
  Partition gamma_;
  std::vector<std::vector<int>> rows_;
};

struct EntryMatching {
  int level = 0;
  // (box with entry level+1, box with entry level)
  std::vector<std::pair<Box, Box>> pairs;
};

struct PartitionChain {
  TableauKind kind = TableauKind::socle;
  std::vector<Partition> chain;
  friend bool operator==(const PartitionChain&, const PartitionChain&) = default;
};

bool check_lr(const SkewTableau& t);
bool check_socle(const SkewTableau& t);

// Rows weakly decreasing, columns strictly decreasing.
bool check_st12(const SkewTableau& t);
// Column-line form of the lattice condition alone.
bool check_st3(const SkewTableau& t);
// Row form: for every row r, #(l+1 in rows >= r) <= #(l in rows > r).
bool check_st3_prime(const SkewTableau& t);

// Injective map from entries level+1 to entries level: same column when that
// column holds an entry level, otherwise a column further left. Same-column
// pairs are fixed first, then the remaining boxes are matched from the
// rightmost column leftwards to the nearest unused entry. Throws MatchingFailed.
EntryMatching build_matching(const SkewTableau& t, int level);

// Socle view: chain[i] = empty boxes plus boxes with entries > i.
// LR view:    chain[i] = empty boxes plus boxes with entries <= i.
PartitionChain to_chain(const SkewTableau& t, TableauKind kind);
SkewTableau from_chain(const PartitionChain& c);

// Every valid tableau of the kind with the given shape, sorted by reading word.
std::vector<SkewTableau> enumerate(const ShapeTriple& shape, TableauKind kind);
std::size_t count_tableaux(const ShapeTriple& shape, TableauKind kind);

// Number of LR-tableaux; 0 for shapes violating containment or weight.
std::size_t lr_coefficient(const ShapeTriple& shape);

}  // namespace socle
