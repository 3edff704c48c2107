#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "socle/embedding.hpp"
#include "socle/tableau.hpp"

namespace socle {

class ConditionStarViolated : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Surjections f_1, ..., f_s with f_l : stages[l-1] -> stages[l]; maps[l-1]
// holds f_l as a dim(stages[l]) x dim(stages[l-1]) matrix.
struct EpiChain {
  std::vector<FpModule> stages;
  std::vector<FpMatrix> maps;
};

struct ChainReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

struct ChainOptions {
  // Off: every h^(l) is the identity, leaving only the canonical surjections.
  bool correct_pairs = true;
  // Off: skip the internal verification (used to inspect broken chains).
  bool verify = true;
};

// Throws InvalidTableau unless check_socle(t); ConditionStarViolated when the
// built chain fails verification.
EpiChain build_chain(const SkewTableau& t, int p, const ChainOptions& opt = {});

// B = stages[0], A = Ker(f_s ... f_1).
Embedding chain_embedding(const EpiChain& c);

Embedding realize_socle(const SkewTableau& t, int p);
// Throws InvalidTableau unless check_lr(t).
Embedding realize_lr(const SkewTableau& t, int p);

ChainReport verify_epi_chain(const EpiChain& c);

}  // namespace socle
