#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace socle {

class NotContained : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A partition drawn with its parts as COLUMN lengths: part c is the number of
// boxes in column c of the Young diagram. Row lengths come from transpose().
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  explicit Partition(std::vector<int> parts);

  // Sorts descending and drops zeros instead of rejecting.
  static Partition from_unsorted(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  int weight() const;

  // Part c (1-based); 0 beyond the last part.
  int operator[](std::size_t c) const { return c >= 1 && c <= parts_.size() ? parts_[c - 1] : 0; }
  int first() const { return parts_.empty() ? 0 : parts_.front(); }

  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

// A box of a diagram; row 1 is the top row, column 1 the leftmost column.
struct Box {
  int row = 0;
  int col = 0;
  friend bool operator==(const Box&, const Box&) = default;
  friend auto operator<=>(const Box& a, const Box& b) {
    if (auto c = a.row <=> b.row; c != 0) return c;
    return a.col <=> b.col;
  }
};

struct ShapeTriple {
  Partition alpha;
  Partition beta;
  Partition gamma;

  // gamma inside beta and |alpha| + |gamma| = |beta|.
  bool valid() const;
  std::string to_string() const;  // "alpha/beta/gamma"
  friend bool operator==(const ShapeTriple&, const ShapeTriple&) = default;
  friend auto operator<=>(const ShapeTriple&, const ShapeTriple&) = default;
};

Partition transpose(const Partition& lambda);

// lambda inside mu, i.e. lambda_i <= mu_i for all i.
bool contains(const Partition& mu, const Partition& lambda);

bool in_diagram(const Partition& lambda, Box b);
bool in_skew(const Partition& beta, const Partition& gamma, Box b);

// Boxes of beta \ gamma in row-major order. Throws NotContained.
std::vector<Box> skew_boxes(const Partition& beta, const Partition& gamma);

// At most one box of beta \ gamma per column. Throws NotContained.
bool is_horizontal_strip(const Partition& beta, const Partition& gamma);

// All partitions of n, in reverse lexicographic order ((n) first).
std::vector<Partition> partitions_of(int n);

// All partitions mu with mu inside lambda.
std::vector<Partition> subpartitions(const Partition& lambda);

// Accepts "5,3,2", "532" (every part a single digit), "()" or "" for the
// empty partition. Throws ParseError.
Partition parse_partition(std::string_view text);

// Parses "alpha/beta/gamma". Does not check validity.
ShapeTriple parse_shape(std::string_view text);

}  // namespace socle
