#include "socle/realize.hpp"

#include <string>

#include "socle/convert.hpp"

namespace socle {

namespace {

// Canonical surjection N_from -> N_to column by column: p^i b_c |-> p^i b_c
// for i below the target column length, 0 otherwise.
FpMatrix canonical_surjection(int p, const Partition& from, const Partition& to) {
  FpMatrix g(p, static_cast<std::size_t>(to.weight()), static_cast<std::size_t>(from.weight()));
  for (std::size_t c = 1; c <= to.length(); ++c)
    for (int i = 0; i < to[c]; ++i) g.set(basis_index(to, c, i), basis_index(from, c, i), 1);
  return g;
}

FpMatrix pair_correction(int p, const SkewTableau& t, int l, const Partition& sigma) {
  FpMatrix h = FpMatrix::identity(p, static_cast<std::size_t>(sigma.weight()));
  std::vector<bool> used(t.beta().length() + 1, false);
  for (const auto& [hi, lo] : build_matching(t, l).pairs) {
    const auto j = static_cast<std::size_t>(hi.col);
    const auto i = static_cast<std::size_t>(lo.col);
    if (i == j) continue;
    if (used[i] || used[j]) throw std::logic_error("column used by two pairs at level " + std::to_string(l));
    used[i] = used[j] = true;
    const int u = sigma[i], v = sigma[j];
    if (u < v) throw std::logic_error("paired columns out of order at level " + std::to_string(l));
    for (int k = 0; k < v; ++k) h.set(basis_index(sigma, i, u - v + k), basis_index(sigma, j, k), 1);
  }
  return h;
}

}  // namespace

EpiChain build_chain(const SkewTableau& t, int p, const ChainOptions& opt) {
  if (!check_socle(t)) throw InvalidTableau("not a socle tableau");
  const auto chain = to_chain(t, TableauKind::socle).chain;
  const int s = static_cast<int>(chain.size()) - 1;
  EpiChain out;
  for (const auto& sigma : chain) out.stages.push_back(standard_module(p, sigma));
  for (int l = 1; l <= s; ++l) {
    const auto& from = chain[static_cast<std::size_t>(l - 1)];
    const auto& to = chain[static_cast<std::size_t>(l)];
    FpMatrix f = canonical_surjection(p, from, to);
    if (l < s && opt.correct_pairs) f = pair_correction(p, t, l, to) * f;
    out.maps.push_back(std::move(f));
  }
  if (opt.verify) {
    const auto report = verify_epi_chain(out);
    if (!report.ok()) throw ConditionStarViolated(report.violations.front());
  }
  return out;
}

Embedding chain_embedding(const EpiChain& c) {
  const FpModule& b = c.stages.front();
  FpMatrix composite = FpMatrix::identity(b.prime(), b.dim());
  for (const auto& f : c.maps) composite = f * composite;
  return Embedding(b, kernel(composite));
}

Embedding realize_socle(const SkewTableau& t, int p) { return chain_embedding(build_chain(t, p)); }

Embedding realize_lr(const SkewTableau& t, int p) {
  if (!check_lr(t)) throw InvalidTableau("not an LR-tableau");
  return dual_embedding(realize_socle(duallr_to_socle(t), p));
}

ChainReport verify_epi_chain(const EpiChain& c) {
  ChainReport report;
  auto fail = [&](int l, const std::string& what) {
    report.violations.push_back("f_" + std::to_string(l) + ": " + what);
  };
  if (c.stages.size() != c.maps.size() + 1) {
    report.violations.push_back("chain needs one more stage than maps");
    return report;
  }
  for (std::size_t k = 0; k < c.maps.size(); ++k) {
    const int l = static_cast<int>(k + 1);
    const FpMatrix& f = c.maps[k];
    const FpModule& from = c.stages[k];
    const FpModule& to = c.stages[k + 1];
    if (f.rows() != to.dim() || f.cols() != from.dim()) {
      fail(l, "wrong matrix size");
      continue;
    }
    if (!(f * from.op() == to.op() * f)) fail(l, "not a module homomorphism");
    if (rank(f) != to.dim()) fail(l, "not surjective");
    if (image(from.op(), kernel(f)).dim() != 0) fail(l, "kernel is not semisimple");
  }
  if (!report.ok()) return report;
  for (std::size_t k = 0; k + 1 < c.maps.size(); ++k) {
    const FpModule& from = c.stages[k];
    const Subspace two = kernel(c.maps[k + 1] * c.maps[k]);
    if (!(intersect(two, kernel(from.op())) == kernel(c.maps[k])))
      fail(static_cast<int>(k + 1), "condition (*) fails: soc Ker f_{l+1} f_l differs from Ker f_l");
  }
  const Embedding x = chain_embedding(c);
  for (std::size_t l = 0; l < c.stages.size(); ++l) {
    const Partition q = quotient_type(x.ambient(), soc_layer(x.ambient(), x.sub(), static_cast<int>(l)));
    if (!(q == module_type(c.stages[l])))
      report.violations.push_back("B/soc^" + std::to_string(l) + " A has type " + q.to_string() + ", stage has " +
                                  module_type(c.stages[l]).to_string());
  }
  return report;
}

}  // namespace socle
