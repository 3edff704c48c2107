#include "socle/convert.hpp"

#include <string>

namespace socle {

EntryMultiplicity::EntryMultiplicity(const SkewTableau& t) {
  const auto& rows = t.rows();
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (int v : rows[r])
      if (v > 0) ++mu_[{v, static_cast<int>(r + 1)}];
}

int EntryMultiplicity::operator()(int entry, int row) const {
  auto it = mu_.find({entry, row});
  return it == mu_.end() ? 0 : it->second;
}

void EntryMultiplicity::set(int entry, int row, int count) {
  if (count == 0)
    mu_.erase({entry, row});
  else
    mu_[{entry, row}] = count;
}

int EntryMultiplicity::from_row(int entry, int row) const {
  int total = 0;
  for (const auto& [key, n] : mu_)
    if (key.first == entry && key.second >= row) total += n;
  return total;
}

SkewTableau tableau_from_multiplicity(const Partition& beta, const EntryMultiplicity& mu, TableauKind kind) {
  const Partition rb = transpose(beta);
  std::vector<std::vector<int>> entries(rb.length());
  for (const auto& [key, n] : mu.cells()) {
    const auto [entry, row] = key;
    if (n < 0) throw InvalidTableau("negative multiplicity");
    if (entry < 1 || row < 1 || row > static_cast<int>(rb.length()))
      throw InvalidTableau("entry " + std::to_string(entry) + " placed in row " + std::to_string(row) +
                           " outside beta");
    entries[static_cast<std::size_t>(row - 1)].insert(entries[static_cast<std::size_t>(row - 1)].end(),
                                                      static_cast<std::size_t>(n), entry);
  }
  std::vector<int> inner;
  std::vector<std::vector<int>> rows;
  for (std::size_t r = 0; r < rb.length(); ++r) {
    auto& e = entries[r];
    const int len = rb[r + 1];
    if (static_cast<int>(e.size()) > len) throw InvalidTableau("row " + std::to_string(r + 1) + " overfull");
    if (kind == TableauKind::socle)
      std::sort(e.begin(), e.end(), std::greater<>());
    else
      std::sort(e.begin(), e.end());
    std::vector<int> row(static_cast<std::size_t>(len - static_cast<int>(e.size())), 0);
    inner.push_back(static_cast<int>(row.size()));
    row.insert(row.end(), e.begin(), e.end());
    rows.push_back(std::move(row));
  }
  Partition gamma;
  try {
    gamma = transpose(Partition(inner));
  } catch (const std::invalid_argument&) {
    throw InvalidTableau("empty boxes do not form a partition");
  }
  return SkewTableau(beta, gamma, std::move(rows));
}

namespace {

// Row lengths of the k-th partition of a chain; the chain saturates at its end.
int chain_row(const std::vector<Partition>& chain, int k, int row) {
  const std::size_t idx = std::min<std::size_t>(static_cast<std::size_t>(std::max(k, 0)), chain.size() - 1);
  return transpose(chain[idx])[static_cast<std::size_t>(row)];
}

int chain_rows_sum(const std::vector<Partition>& chain, int k, int rows) {
  const std::size_t idx = std::min<std::size_t>(static_cast<std::size_t>(std::max(k, 0)), chain.size() - 1);
  const Partition t = transpose(chain[idx]);
  int total = 0;
  for (int j = 1; j <= rows; ++j) total += t[static_cast<std::size_t>(j)];
  return total;
}

Partition beta_from(const HomMatrix& h) {
  std::vector<int> rows;
  for (int m = 1; m <= h.M(); ++m) rows.push_back(h.at(0, m) - h.at(0, m - 1));
  try {
    return transpose(Partition(rows));
  } catch (const std::invalid_argument&) {
    throw InconsistentMatrix("first row of H does not come from a partition");
  }
}

Partition alpha_from(const HomMatrix& h) {
  std::vector<int> rows;
  for (int l = 1; l <= h.L(); ++l) rows.push_back(h.at(l, l) - h.at(l - 1, l - 1));
  try {
    return transpose(Partition(rows));
  } catch (const std::invalid_argument&) {
    throw InconsistentMatrix("diagonal of H does not come from a partition");
  }
}

// Same values on a triangle of any size; the formulas saturate.
HomMatrix socle_hom_sized(const SkewTableau& sigma, int L, int M) {
  const ShapeTriple shape = sigma.shape();
  const auto chain = to_chain(sigma, TableauKind::socle).chain;
  const Partition ra = transpose(shape.alpha);
  HomMatrix h(L, M);
  for (int l = 0; l <= L; ++l) {
    int soc = 0;
    for (int i = 1; i <= l; ++i) soc += ra[static_cast<std::size_t>(i)];
    for (int m = l; m <= M; ++m) h.set(l, m, soc + chain_rows_sum(chain, l, m - l));
  }
  return h;
}

HomMatrix duallr_hom_sized(const SkewTableau& gamma_star, int L, int M) {
  const auto chain = to_chain(gamma_star, TableauKind::lr).chain;
  HomMatrix h(L, M);
  for (int r = 0; r <= L; ++r)
    for (int m = r; m <= M; ++m) h.set(r, m, chain_rows_sum(chain, m - r, m));
  return h;
}

}  // namespace

HomMatrix socle_to_hom(const SkewTableau& sigma) {
  if (!check_socle(sigma)) throw InvalidTableau("not a socle tableau");
  const int M = hom_bound(sigma.shape());
  return socle_hom_sized(sigma, M, M);
}

SkewTableau hom_to_socle(const HomMatrix& h) {
  try {
    const Partition beta = beta_from(h);
    const Partition alpha = alpha_from(h);
    const int s = alpha.first();
    EntryMultiplicity mu;
    for (int l = 1; l <= s; ++l)
      for (int r = 1; r <= beta.first(); ++r) {
        const int v = four_term(h, l, l + r);
        if (v < 0) throw InconsistentMatrix("negative multiplicity of " + std::to_string(l) + " in row " +
                                            std::to_string(r));
        mu.set(l, r, v);
      }
    SkewTableau t = tableau_from_multiplicity(beta, mu, TableauKind::socle);
    if (!check_socle(t)) throw InconsistentMatrix("reconstructed filling is not a socle tableau");
    if (!(socle_hom_sized(t, h.L(), h.M()) == h)) throw InconsistentMatrix("H is not the Hom-matrix of its reconstruction");
    return t;
  } catch (const InvalidTableau& e) {
    throw InconsistentMatrix(e.what());
  } catch (const BadIndex& e) {
    throw InconsistentMatrix(e.what());
  }
}

HomMatrix duallr_to_hom(const SkewTableau& gamma_star) {
  if (!check_lr(gamma_star)) throw InvalidTableau("not an LR-tableau");
  const ShapeTriple dual = gamma_star.shape();
  const int M = hom_bound({dual.gamma, dual.beta, dual.alpha});
  return duallr_hom_sized(gamma_star, M, M);
}

SkewTableau hom_to_duallr(const HomMatrix& h) {
  try {
    const Partition beta = beta_from(h);
    const Partition alpha = alpha_from(h);
    const int rows = beta.first();
    EntryMultiplicity mu;
    for (int m = 1; m <= rows; ++m)
      for (int l = 1; l <= m; ++l) {
        const int r = m - l;
        const int v = l < m ? h.at(r, m) - h.at(r + 1, m) - h.at(r - 1, m - 1) + h.at(r, m - 1)
                            : h.at(0, m) - h.at(1, m);
        if (v < 0) throw InconsistentMatrix("negative multiplicity of " + std::to_string(l) + " in row " +
                                            std::to_string(m));
        mu.set(l, m, v);
      }
    SkewTableau t = tableau_from_multiplicity(beta, mu, TableauKind::lr);
    if (!check_lr(t)) throw InconsistentMatrix("reconstructed filling is not an LR-tableau");
    if (!(t.gamma() == alpha)) throw InconsistentMatrix("inner shape disagrees with the diagonal of H");
    if (!(duallr_hom_sized(t, h.L(), h.M()) == h)) throw InconsistentMatrix("H is not the Hom-matrix of its reconstruction");
    return t;
  } catch (const InvalidTableau& e) {
    throw InconsistentMatrix(e.what());
  } catch (const BadIndex& e) {
    throw InconsistentMatrix(e.what());
  }
}

SkewTableau socle_to_duallr(const SkewTableau& sigma) {
  if (!check_socle(sigma)) throw InvalidTableau("not a socle tableau");
  const Partition rb = transpose(sigma.beta());
  const EntryMultiplicity mu_s(sigma);
  const int rows = static_cast<int>(rb.length());
  // (lambda^(l))'_m: rows m <= l agree with beta.
  auto lambda_row = [&](int l, int m) {
    return m <= l ? rb[static_cast<std::size_t>(m)] : mu_s.from_row(m - l, l + 1);
  };
  EntryMultiplicity mu;
  for (int l = 1; l <= rows; ++l)
    for (int m = l; m <= rows; ++m) mu.set(l, m, lambda_row(l, m) - lambda_row(l - 1, m));
  SkewTableau t = tableau_from_multiplicity(sigma.beta(), mu, TableauKind::lr);
  if (!check_lr(t)) throw std::logic_error("converted filling is not an LR-tableau");
  return t;
}

SkewTableau duallr_to_socle(const SkewTableau& gamma_star) {
  if (!check_lr(gamma_star)) throw InvalidTableau("not an LR-tableau");
  const auto chain = to_chain(gamma_star, TableauKind::lr).chain;
  const int rows = gamma_star.beta().first();
  const int s = gamma_star.gamma().first();
  EntryMultiplicity mu;
  for (int l = 1; l <= s; ++l)
    for (int r = 1; r <= rows; ++r)
      mu.set(l, r, chain_row(chain, r - 1, l + r - 1) - chain_row(chain, r, l + r));
  SkewTableau t = tableau_from_multiplicity(gamma_star.beta(), mu, TableauKind::socle);
  if (!check_socle(t)) throw std::logic_error("converted filling is not a socle tableau");
  return t;
}

int four_term(const HomMatrix& h, int l, int m) {
  return h.at(l, m - 1) - h.at(l, m) - h.at(l - 1, m - 2) + h.at(l - 1, m - 1);
}

FpMatrix picket_map(int p, int l, int m) {
  if (l < 1 || m <= l) throw BadIndex("picket map needs 1 <= l < m");
  const auto n = static_cast<std::size_t>(m);
  FpMatrix f(p, 2 * n - 2, n - 1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    f.set(k + 1, k, 1);
    if (k + 2 < n) f.set(n + k, k, -1);
  }
  const Embedding src = picket(p, l, m - 1);
  const Embedding mid = direct_sum(picket(p, l, m), picket(p, l - 1, m - 2));
  if (!(f * src.ambient().op() == mid.ambient().op() * f)) throw std::logic_error("picket map is not T-linear");
  const Subspace fa = image(f, src.sub());
  if (!mid.sub().contains(fa)) throw std::logic_error("picket map does not respect submodules");
  if (rank(f) != n - 1) throw std::logic_error("picket map is not injective");
  const Subspace fb = image(f, Subspace::whole(p, n - 1));
  if (!(intersect(fb, mid.sub()) == fa) || mid.sub().dim() - fa.dim() != static_cast<std::size_t>(l - 1))
    throw std::logic_error("picket sequence is not exact on submodules");
  return f;
}

int defect(const Embedding& x, int l, int m, DefectMethod method) {
  if (l < 1 || l > m) throw BadIndex("defect needs 1 <= l <= m");
  if (m == l) return 0;
  const int p = x.prime();
  const FpMatrix f = picket_map(p, l, m);
  const auto n = static_cast<std::size_t>(m);
  if (method == DefectMethod::linear_system) {
    const Embedding mid = direct_sum(picket(p, l, m), picket(p, l - 1, m - 2));
    const auto basis = hom_basis(mid, x);
    const std::size_t cells = x.ambient().dim() * (n - 1);
    FpMatrix composed(p, 0, std::max<std::size_t>(cells, 1));
    for (const auto& F : basis) {
      const FpMatrix g = F * f;
      FpVector v(composed.cols(), 0);
      for (std::size_t i = 0; i < g.rows(); ++i)
        for (std::size_t j = 0; j < g.cols(); ++j) v[i * g.cols() + j] = g(i, j);
      composed.append_row(v);
    }
    return static_cast<int>(hom_dim(picket(p, l, m - 1), x) - rank(composed));
  }
  // A map out of a picket is determined by the image b of its generator; the
  // generator goes to sum_k f(k,0) p^k in the first summand and
  // sum_k f(m+k,0) p^k in the second.
  const FpModule& b = x.ambient();
  const Subspace v1 = picket_hom_space(x, l, m);
  const Subspace v2 = picket_hom_space(x, l - 1, m - 2);
  auto evaluate = [&](const Subspace& v, std::size_t offset, std::size_t len) {
    FpMatrix poly(p, b.dim(), b.dim());
    for (std::size_t k = 0; k < len; ++k)
      if (const std::uint8_t c = f(offset + k, 0)) {
        const FpMatrix pk = b.power(static_cast<int>(k));
        for (std::size_t i = 0; i < b.dim(); ++i)
          for (std::size_t j = 0; j < b.dim(); ++j) poly.set(i, j, poly(i, j) + c * pk(i, j));
      }
    return image(poly, v);
  };
  const Subspace img = evaluate(v1, 0, n) + evaluate(v2, n, n - 2);
  const Subspace target = picket_hom_space(x, l, m - 1);
  if (!target.contains(img)) throw std::logic_error("induced map leaves Hom(P_l^{m-1}, X)");
  return static_cast<int>(target.dim() - img.dim());
}

}  // namespace socle
