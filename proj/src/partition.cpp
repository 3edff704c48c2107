#include "socle/partition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>

namespace socle {

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
}

Partition Partition::from_unsorted(std::vector<int> parts) {
  std::erase_if(parts, [](int x) { return x == 0; });
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::string Partition::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s;
}

bool ShapeTriple::valid() const {
  return contains(beta, gamma) && alpha.weight() + gamma.weight() == beta.weight();
}

std::string ShapeTriple::to_string() const {
  return alpha.to_string() + "/" + beta.to_string() + "/" + gamma.to_string();
}

Partition transpose(const Partition& lambda) {
  std::vector<int> rows(static_cast<std::size_t>(lambda.first()), 0);
  for (int part : lambda.parts())
    for (int r = 0; r < part; ++r) ++rows[static_cast<std::size_t>(r)];
  return Partition(std::move(rows));
}

bool contains(const Partition& mu, const Partition& lambda) {
  if (lambda.length() > mu.length()) return false;
  for (std::size_t c = 1; c <= lambda.length(); ++c)
    if (lambda[c] > mu[c]) return false;
  return true;
}

bool in_diagram(const Partition& lambda, Box b) {
  return b.row >= 1 && b.col >= 1 && b.row <= lambda[static_cast<std::size_t>(b.col)];
}

bool in_skew(const Partition& beta, const Partition& gamma, Box b) {
  return in_diagram(beta, b) && !in_diagram(gamma, b);
}

std::vector<Box> skew_boxes(const Partition& beta, const Partition& gamma) {
  if (!contains(beta, gamma))
    throw NotContained(gamma.to_string() + " is not contained in " + beta.to_string());
  const Partition rows_beta = transpose(beta);
  const Partition rows_gamma = transpose(gamma);
  std::vector<Box> out;
  out.reserve(static_cast<std::size_t>(beta.weight() - gamma.weight()));
  for (std::size_t r = 1; r <= rows_beta.length(); ++r)
    for (int c = rows_gamma[r] + 1; c <= rows_beta[r]; ++c)
      out.push_back(Box{static_cast<int>(r), c});
  return out;
}

bool is_horizontal_strip(const Partition& beta, const Partition& gamma) {
  if (!contains(beta, gamma))
    throw NotContained(gamma.to_string() + " is not contained in " + beta.to_string());
  for (std::size_t c = 1; c <= beta.length(); ++c)
    if (beta[c] - gamma[c] > 1) return false;
  return true;
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    cur.push_back(part);
    partitions_rec(remaining - part, part, cur, out);
    cur.pop_back();
  }
}

void subpartitions_rec(const Partition& lambda, std::size_t c, int cap, std::vector<int>& cur,
                       std::vector<Partition>& out) {
  if (c > lambda.length()) {
    out.emplace_back(cur);
    return;
  }
  for (int part = std::min(cap, lambda[c]); part >= 0; --part) {
    cur.push_back(part);
    if (part == 0) {
      out.emplace_back(cur);
    } else {
      subpartitions_rec(lambda, c + 1, part, cur, out);
    }
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> cur;
  partitions_rec(n, n, cur, out);
  return out;
}

std::vector<Partition> subpartitions(const Partition& lambda) {
  std::vector<Partition> out;
  std::vector<int> cur;
  subpartitions_rec(lambda, 1, lambda.first(), cur, out);
  return out;
}

Partition parse_partition(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '(' || s.front() == '[')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == ')' || s.back() == ']')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  std::vector<int> parts;
  if (text.empty()) return Partition();
  if (text.find(',') == std::string_view::npos) {
    for (char ch : text) {
      if (ch < '0' || ch > '9') throw ParseError("bad partition: " + std::string(text));
      parts.push_back(ch - '0');
    }
  } else {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t next = text.find(',', pos);
      if (next == std::string_view::npos) next = text.size();
      std::string_view token = text.substr(pos, next - pos);
      while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
      while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
      int value = 0;
      auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
      if (token.empty() || ec != std::errc() || ptr != token.data() + token.size())
        throw ParseError("bad partition: " + std::string(text));
      parts.push_back(value);
      pos = next + 1;
    }
  }
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  try {
    return Partition(std::move(parts));
  } catch (const std::invalid_argument& e) {
    throw ParseError("bad partition '" + std::string(text) + "': " + e.what());
  }
}

ShapeTriple parse_shape(std::string_view text) {
  const std::size_t a = text.find('/');
  const std::size_t b = a == std::string_view::npos ? a : text.find('/', a + 1);
  if (a == std::string_view::npos || b == std::string_view::npos || text.find('/', b + 1) != std::string_view::npos)
    throw ParseError("shape must look like alpha/beta/gamma: " + std::string(text));
  return ShapeTriple{parse_partition(text.substr(0, a)), parse_partition(text.substr(a + 1, b - a - 1)),
                     parse_partition(text.substr(b + 1))};
}

}  // namespace socle
