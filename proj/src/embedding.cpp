#include "socle/embedding.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <string>

namespace socle {

namespace {

Partition sub_type(const FpModule& b, const Subspace& a) {
  std::vector<int> rows;
  std::size_t prev = 0;
  for (int r = 1; prev < a.dim(); ++r) {
    const std::size_t d = soc_layer(b, a, r).dim();
    rows.push_back(static_cast<int>(d - prev));
    prev = d;
  }
  return transpose(Partition(rows));
}

int longest_part(const Embedding& x) { return sub_type(x.ambient(), x.sub()).first(); }

FpMatrix block_diagonal(const FpMatrix& a, const FpMatrix& b) {
  FpMatrix out(a.prime(), a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out.set(i, j, a(i, j));
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) out.set(a.rows() + i, a.cols() + j, b(i, j));
  return out;
}

}  // namespace

Embedding::Embedding(FpModule ambient, Subspace sub) : ambient_(std::move(ambient)), sub_(std::move(sub)) {
  if (ambient_.prime() != sub_.prime()) throw PrimeMismatch("submodule over a different prime");
  if (sub_.ambient_dim() != ambient_.dim()) throw std::invalid_argument("submodule lives in another space");
  if (!is_submodule(ambient_, sub_)) throw NotInvariant("subspace is not T-invariant");
}

ShapeTriple Embedding::shape() const {
  return ShapeTriple{sub_type(ambient_, sub_), module_type(ambient_), quotient_type(ambient_, sub_)};
}

FpVector generator_vector(int p, const Partition& beta, const std::vector<std::vector<int>>& coeffs) {
  if (coeffs.size() != beta.length()) throw std::invalid_argument("generator needs one coefficient list per summand");
  FpVector v(static_cast<std::size_t>(beta.weight()), 0);
  for (std::size_t j = 1; j <= beta.length(); ++j) {
    const auto& c = coeffs[j - 1];
    if (c.size() != static_cast<std::size_t>(beta[j]))
      throw std::invalid_argument("summand " + std::to_string(j) + " needs " + std::to_string(beta[j]) +
                                  " coefficients");
    for (int i = 0; i < beta[j]; ++i) {
      const int x = ((c[static_cast<std::size_t>(i)] % p) + p) % p;
      v[basis_index(beta, j, i)] = static_cast<std::uint8_t>(x);
    }
  }
  return v;
}

Embedding from_generators(int p, const Partition& beta, const GeneratorData& gens) {
  FpModule b = standard_module(p, beta);
  std::vector<FpVector> vs;
  for (const auto& g : gens) vs.push_back(generator_vector(p, beta, g));
  Subspace a = submodule_span(b, vs);
  return Embedding(std::move(b), std::move(a));
}

Embedding picket(int p, int l, int m) {
  if (l < 0 || m < 0 || l > m)
    throw BadIndex("picket needs 0 <= l <= m, got l=" + std::to_string(l) + " m=" + std::to_string(m));
  const Partition beta = m > 0 ? Partition{m} : Partition{};
  FpModule b = standard_module(p, beta);
  std::vector<FpVector> rows;
  for (int i = m - l; i < m; ++i) {
    FpVector v(static_cast<std::size_t>(m), 0);
    v[static_cast<std::size_t>(i)] = 1;
    rows.push_back(v);
  }
  Subspace a(FpMatrix::from_rows(p, static_cast<std::size_t>(m), rows));
  return Embedding(std::move(b), std::move(a));
}

Embedding zero_embedding(int p) { return picket(p, 0, 0); }

SkewTableau socle_tableau(const Embedding& x) {
  PartitionChain c{TableauKind::socle, {}};
  const int s = longest_part(x);
  for (int i = 0; i <= s; ++i) c.chain.push_back(quotient_type(x.ambient(), soc_layer(x.ambient(), x.sub(), i)));
  return from_chain(c);
}

SkewTableau lr_tableau(const Embedding& x) {
  PartitionChain c{TableauKind::lr, {}};
  const int s = longest_part(x);
  for (int i = 0; i <= s; ++i) c.chain.push_back(quotient_type(x.ambient(), rad_layer(x.ambient(), x.sub(), i)));
  return from_chain(c);
}

Embedding dual_embedding(const Embedding& x) {
  FpModule d = dual_module(x.ambient());
  Subspace ann = annihilator(x.sub());
  const auto& st = x.ambient().standard_type();
  if (!st) return Embedding(std::move(d), std::move(ann));
  // Reverse each block so the dual basis is again p^i b_j.
  const std::size_t n = x.ambient().dim();
  std::vector<std::size_t> perm(n);
  std::size_t offset = 0;
  for (int len : st->parts()) {
    for (int i = 0; i < len; ++i)
      perm[offset + static_cast<std::size_t>(i)] = offset + static_cast<std::size_t>(len - 1 - i);
    offset += static_cast<std::size_t>(len);
  }
  FpMatrix op(x.prime(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) op.set(perm[i], perm[j], d.op()(i, j));
  FpMatrix rows(x.prime(), ann.dim(), n);
  for (std::size_t i = 0; i < ann.dim(); ++i)
    for (std::size_t j = 0; j < n; ++j) rows.set(i, perm[j], ann.basis()(i, j));
  const FpModule standard = standard_module(x.prime(), *st);
  if (!(op == standard.op())) throw std::logic_error("reordered dual basis is not standard");
  return Embedding(standard, Subspace(std::move(rows)));
}

Embedding direct_sum(const Embedding& x, const Embedding& y) {
  if (x.prime() != y.prime()) throw PrimeMismatch("direct sum of embeddings over different primes");
  const int p = x.prime();
  std::optional<Partition> st;
  const auto& sx = x.ambient().standard_type();
  const auto& sy = y.ambient().standard_type();
  if (sx && sy && (sx->empty() || sy->empty() || sx->parts().back() >= sy->first())) {
    std::vector<int> parts = sx->parts();
    parts.insert(parts.end(), sy->parts().begin(), sy->parts().end());
    st = Partition(parts);
  }
  FpModule b(block_diagonal(x.ambient().op(), y.ambient().op()), st);
  const std::size_t nx = x.ambient().dim(), ny = y.ambient().dim();
  FpMatrix rows(p, x.sub().dim() + y.sub().dim(), nx + ny);
  for (std::size_t i = 0; i < x.sub().dim(); ++i)
    for (std::size_t j = 0; j < nx; ++j) rows.set(i, j, x.sub().basis()(i, j));
  for (std::size_t i = 0; i < y.sub().dim(); ++i)
    for (std::size_t j = 0; j < ny; ++j) rows.set(x.sub().dim() + i, nx + j, y.sub().basis()(i, j));
  return Embedding(std::move(b), Subspace(std::move(rows)));
}

namespace {

// Unknown F is dim(B_Y) x dim(B_X); variable F_ij sits at column i * nx + j.
FpMatrix hom_equations(const Embedding& x, const Embedding& y) {
  if (x.prime() != y.prime()) throw PrimeMismatch("hom between embeddings over different primes");
  const int p = x.prime();
  const std::size_t nx = x.ambient().dim(), ny = y.ambient().dim();
  const FpMatrix& tx = x.ambient().op();
  const FpMatrix& ty = y.ambient().op();
  const FpMatrix cy = annihilator(y.sub()).basis();
  const FpMatrix& ax = x.sub().basis();
  FpMatrix eq(p, nx * ny + cy.rows() * ax.rows(), nx * ny);
  std::size_t row = 0;
  // (F T_X - T_Y F)_{ij} = 0
  for (std::size_t i = 0; i < ny; ++i)
    for (std::size_t j = 0; j < nx; ++j, ++row) {
      for (std::size_t k = 0; k < nx; ++k)
        if (tx(k, j)) eq.set(row, i * nx + k, (eq(row, i * nx + k) + tx(k, j)) % p);
      for (std::size_t k = 0; k < ny; ++k)
        if (ty(i, k)) eq.set(row, k * nx + j, static_cast<long long>(eq(row, k * nx + j)) - ty(i, k));
    }
  // C_Y F a = 0 for each basis vector a of A_X
  for (std::size_t q = 0; q < cy.rows(); ++q)
    for (std::size_t t = 0; t < ax.rows(); ++t, ++row)
      for (std::size_t i = 0; i < ny; ++i) {
        if (!cy(q, i)) continue;
        for (std::size_t j = 0; j < nx; ++j)
          if (ax(t, j)) eq.set(row, i * nx + j, eq(row, i * nx + j) + cy(q, i) * ax(t, j));
      }
  return eq;
}

}  // namespace

std::size_t hom_dim(const Embedding& x, const Embedding& y) {
  const std::size_t unknowns = x.ambient().dim() * y.ambient().dim();
  if (unknowns == 0) {
    if (x.prime() != y.prime()) throw PrimeMismatch("hom between embeddings over different primes");
    return 0;
  }
  return unknowns - rank(hom_equations(x, y));
}

std::vector<FpMatrix> hom_basis(const Embedding& x, const Embedding& y) {
  const std::size_t nx = x.ambient().dim(), ny = y.ambient().dim();
  std::vector<FpMatrix> out;
  if (nx * ny == 0) return out;
  const FpMatrix null = nullspace(hom_equations(x, y));
  for (std::size_t b = 0; b < null.rows(); ++b) {
    FpMatrix f(x.prime(), ny, nx);
    for (std::size_t i = 0; i < ny; ++i)
      for (std::size_t j = 0; j < nx; ++j) f.set(i, j, null(b, i * nx + j));
    out.push_back(std::move(f));
  }
  return out;
}

Subspace picket_hom_space(const Embedding& x, int l, int m) {
  if (l < 0 || l > m) throw BadIndex("picket index out of range");
  const FpModule& b = x.ambient();
  return intersect(kernel(b.power(m)), preimage(b, x.sub(), m - l));
}

HomMatrix::HomMatrix(int M) : HomMatrix(M, M) {}

HomMatrix::HomMatrix(int L, int M)
    : L_(L), M_(M), h_(static_cast<std::size_t>(L + 1), std::vector<int>(static_cast<std::size_t>(M + 1), 0)) {
  if (L < 0 || M < 0 || L > M) throw BadIndex("bad Hom-matrix bounds");
}

int HomMatrix::at(int l, int m) const {
  if (l < 0 || m < 0) return 0;
  if (!in_bounds(l, m))
    throw BadIndex("h[" + std::to_string(l) + "][" + std::to_string(m) + "] outside the stored triangle");
  return h_[static_cast<std::size_t>(l)][static_cast<std::size_t>(m)];
}

void HomMatrix::set(int l, int m, int value) {
  if (!in_bounds(l, m)) throw BadIndex("Hom-matrix index outside the stored triangle");
  h_[static_cast<std::size_t>(l)][static_cast<std::size_t>(m)] = value;
}

int hom_bound(const ShapeTriple& shape) { return shape.alpha.first() + shape.beta.first() + 1; }

HomMatrix hom_matrix(const Embedding& x, HomMethod method) {
  const int M = hom_bound(x.shape());
  HomMatrix h(M);
  for (int l = 0; l <= M; ++l)
    for (int m = l; m <= M; ++m) {
      std::size_t d = 0;
      if (method == HomMethod::picket_elements)
        d = picket_hom_space(x, l, m).dim();
      else
        d = hom_dim(picket(x.prime(), l, m), x);
      h.set(l, m, static_cast<int>(d));
    }
  return h;
}

int entries_below(const Embedding& x, int l, int r) {
  if (l < 1 || r < 1) throw BadIndex("entries_below needs l, r >= 1");
  const FpModule& b = x.ambient();
  const Subspace rad = rad_layer(b, Subspace::whole(b.prime(), b.dim()), r - 1);
  const auto upper = intersect(soc_layer(b, x.sub(), l), rad).dim();
  const auto lower = intersect(soc_layer(b, x.sub(), l - 1), rad).dim();
  return static_cast<int>(upper - lower);
}

namespace {

template <class MakeGenerators>
void sample_corpus(const CorpusOptions& opt, int key_prime, MakeGenerators make,
                   std::vector<std::pair<Partition, GeneratorData>>& out) {
  std::mt19937_64 rng(opt.seed);
  std::vector<std::vector<Partition>> by_weight;
  for (int n = 0; n <= opt.max_weight; ++n) by_weight.push_back(partitions_of(n));
  std::set<std::string> seen;
  const std::size_t max_attempts = 200 * opt.count + 1000;
  for (std::size_t attempt = 0; out.size() < opt.count && attempt < max_attempts; ++attempt) {
    const int n = std::uniform_int_distribution<int>(1, opt.max_weight)(rng);
    const auto& parts = by_weight[static_cast<std::size_t>(n)];
    const Partition beta = parts[std::uniform_int_distribution<std::size_t>(0, parts.size() - 1)(rng)];
    const int g = std::uniform_int_distribution<int>(1, opt.max_generators)(rng);
    GeneratorData gens;
    for (int i = 0; i < g; ++i) gens.push_back(make(beta, rng));
    const Embedding x = from_generators(key_prime, beta, gens);
    std::string key = beta.to_string() + ":";
    for (std::size_t r = 0; r < x.sub().dim(); ++r)
      for (std::size_t c = 0; c < x.sub().ambient_dim(); ++c) key += static_cast<char>('0' + x.sub().basis()(r, c));
    if (!seen.insert(key).second) continue;
    out.emplace_back(beta, std::move(gens));
  }
}

std::vector<std::vector<int>> zero_coefficients(const Partition& beta) {
  std::vector<std::vector<int>> c;
  for (int len : beta.parts()) c.emplace_back(static_cast<std::size_t>(len), 0);
  return c;
}

}  // namespace

std::vector<SymbolicEmbedding> symbolic_corpus(const CorpusOptions& opt) {
  std::vector<std::pair<Partition, GeneratorData>> items;
  auto make = [](const Partition& beta, std::mt19937_64& rng) {
    auto c = zero_coefficients(beta);
    const std::size_t k = beta.length();
    auto pick_summand = [&] { return std::uniform_int_distribution<std::size_t>(0, k - 1)(rng); };
    auto pick_power = [&](std::size_t j) { return std::uniform_int_distribution<int>(0, beta[j + 1] - 1)(rng); };
    const std::size_t i = pick_summand();
    c[i][static_cast<std::size_t>(pick_power(i))] = 1;
    if (k > 1 && std::bernoulli_distribution(0.6)(rng)) {
      std::size_t j = pick_summand();
      while (j == i) j = pick_summand();
      c[j][static_cast<std::size_t>(pick_power(j))] = -1;
    }
    return c;
  };
  sample_corpus(opt, 3, make, items);
  std::vector<SymbolicEmbedding> out;
  for (auto& [beta, gens] : items) out.push_back(SymbolicEmbedding{beta, std::move(gens)});
  return out;
}

std::vector<Embedding> random_corpus(int p, const CorpusOptions& opt) {
  std::vector<std::pair<Partition, GeneratorData>> items;
  auto make = [p](const Partition& beta, std::mt19937_64& rng) {
    auto c = zero_coefficients(beta);
    std::uniform_int_distribution<int> coef(0, p - 1);
    for (auto& col : c)
      for (int& v : col) v = coef(rng);
    return c;
  };
  sample_corpus(opt, p, make, items);
  std::vector<Embedding> out;
  for (const auto& [beta, gens] : items) out.push_back(from_generators(p, beta, gens));
  return out;
}

}  // namespace socle
