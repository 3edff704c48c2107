#include <doctest.h>

#include <random>

#include "socle/dvrmod.hpp"
#include "socle/fp_matrix.hpp"
#include "socle/simd_kernels.hpp"
#include "support.hpp"

using namespace socle;

namespace {

const int primes[] = {2, 3, 5, 7, 11, 13};

FpMatrix random_matrix(int p, std::size_t r, std::size_t c, std::mt19937_64& rng) {
  FpMatrix m(p, r, c);
  std::uniform_int_distribution<int> d(0, p - 1);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, d(rng));
  return m;
}

}  // namespace

TEST_CASE("row kernels agree with the scalar reference") {
  std::mt19937_64 rng(7);
  const auto& ref = simd::scalar_kernels();
  for (const simd::Kernels* k : simd::available()) {
    INFO(k->name);
    for (int p : primes)
      for (std::size_t n : {32u, 64u, 96u, 256u}) {
        std::vector<std::uint8_t> a(n), b(n);
        std::uniform_int_distribution<int> d(0, p - 1);
        for (int trial = 0; trial < 20; ++trial) {
          for (auto& x : a) x = static_cast<std::uint8_t>(d(rng));
          for (auto& x : b) x = static_cast<std::uint8_t>(d(rng));
          for (int coef = 0; coef < p; ++coef) {
            auto x = a, y = a;
            ref.axpy(x.data(), b.data(), static_cast<std::uint8_t>(coef), static_cast<std::uint8_t>(p), n);
            k->axpy(y.data(), b.data(), static_cast<std::uint8_t>(coef), static_cast<std::uint8_t>(p), n);
            CHECK(x == y);
            x = a;
            y = a;
            ref.scale(x.data(), static_cast<std::uint8_t>(coef), static_cast<std::uint8_t>(p), n);
            k->scale(y.data(), static_cast<std::uint8_t>(coef), static_cast<std::uint8_t>(p), n);
            CHECK(x == y);
          }
        }
      }
  }
  // the scalar kernel itself against plain arithmetic
  std::vector<std::uint8_t> a(32), b(32);
  for (std::size_t i = 0; i < 32; ++i) {
    a[i] = static_cast<std::uint8_t>(i % 13);
    b[i] = static_cast<std::uint8_t>((5 * i) % 13);
  }
  auto x = a;
  ref.axpy(x.data(), b.data(), 7, 13, 32);
  for (std::size_t i = 0; i < 32; ++i) CHECK(x[i] == (a[i] + 7 * b[i]) % 13);
}

TEST_CASE("row reduction is the same under every kernel") {
  std::mt19937_64 rng(11);
  const std::string start = simd::active().name;
  for (int p : primes)
    for (int trial = 0; trial < 10; ++trial) {
      const FpMatrix m = random_matrix(p, 9, 40, rng);
      REQUIRE(simd::select(simd::Isa::scalar));
      FpMatrix ref = m;
      const auto piv = ref.rref();
      for (const simd::Kernels* k : simd::available()) {
        REQUIRE(simd::select(k->isa));
        FpMatrix got = m;
        CHECK(got.rref() == piv);
        CHECK(got == ref);
      }
    }
  simd::select(start);
}

TEST_CASE("matrix arithmetic over F_p") {
  CHECK(inverse_mod(3, 7) == 5);
  CHECK(inverse_mod(12, 13) == 12);
  CHECK(supported_prime(13));
  CHECK_FALSE(supported_prime(4));
  CHECK_FALSE(supported_prime(17));

  std::mt19937_64 rng(3);
  for (int p : {2, 3, 5}) {
    const FpMatrix a = random_matrix(p, 6, 8, rng);
    const FpMatrix n = nullspace(a);
    CHECK(rank(a) + n.rows() == 8);
    CHECK((a * n.transpose()).is_zero());
    CHECK(row_basis(a).rows() == rank(a));
    CHECK((a + -a).is_zero());
    CHECK(a * FpMatrix::identity(p, 8) == a);
    FpMatrix m(p, 1, 3);
    m.set(0, 0, -1);
    CHECK(m(0, 0) == p - 1);
  }
  CHECK_THROWS_AS(FpMatrix(2, 2, 2) * FpMatrix(3, 2, 2), PrimeMismatch);
}

TEST_CASE("standard modules and types") {
  for (int p : {2, 3})
    for (int n = 0; n <= 12; ++n)
      for (const auto& lambda : partitions_of(n)) CHECK(module_type(standard_module(p, lambda)) == lambda);
  const FpModule m = standard_module(2, {5, 3, 2});
  CHECK(m.dim() == 10);
  CHECK(m.power(5).is_zero());
  CHECK_FALSE(m.power(4).is_zero());
  CHECK(standard_module(2, {}).dim() == 0);
}

TEST_CASE("layers, preimages and quotients of a single block") {
  for (int p : {2, 3}) {
    const FpModule b = standard_module(p, {5});
    const Subspace all = Subspace::whole(p, 5);
    const Subspace soc2 = soc_layer(b, all, 2);
    CHECK(soc2.dim() == 2);
    CHECK(soc2 == image(b.power(3), all));
    CHECK(quotient_type(b, soc2) == Partition{3});
    CHECK(quotient_type(b, Subspace(p, 5)) == Partition{5});
    CHECK(rad_layer(b, soc2, 0) == soc2);
    CHECK(soc_layer(b, soc2, 0).dim() == 0);
    CHECK(preimage(b, Subspace(p, 5), 3) == kernel(b.power(3)));
    CHECK(module_type(dual_module(b)) == Partition{5});
    CHECK(annihilator(soc2).dim() == 3);
    CHECK(is_submodule(dual_module(b), annihilator(soc2)));
  }
}

TEST_CASE("submodule span of the M2 generators") {
  for (int p : {2, 3}) {
    const Partition beta{5, 3, 2};
    const FpModule b = standard_module(p, beta);
    const auto g1 = generator_vector(p, beta, {{0, 1, 0, 0, 0}, {0, 0, 0}, {1, 0}});
    const auto g2 = generator_vector(p, beta, {{0, 0, 0, 0, 0}, {0, 1, 0}, {0, 0}});
    const Subspace a = submodule_span(b, {g1, g2});
    CHECK(a.dim() == 6);
    CHECK(is_submodule(b, a));
    CHECK(quotient_type(b, a) == Partition{3, 1});
    CHECK(submodule_span(b, {}).dim() == 0);
    std::vector<FpVector> unit;
    for (std::size_t i = 0; i < 10; ++i) {
      FpVector v(10, 0);
      v[i] = 1;
      unit.push_back(v);
    }
    CHECK(submodule_span(b, unit) == Subspace::whole(p, 10));
  }
  const FpModule b = standard_module(2, {5, 3, 2});
  FpMatrix one(2, 1, 10);
  one.set(0, 0, 1);
  CHECK_THROWS_AS(quotient_type(b, Subspace(one)), NotInvariant);
}

TEST_CASE("module properties on random submodules") {
  CorpusOptions opt;
  opt.max_weight = 8;
  opt.count = 60;
  for (int p : {2, 3})
    for (const auto& x : random_corpus(p, opt)) {
      const FpModule& b = x.ambient();
      const Subspace& a = x.sub();
      CHECK(quotient_type(b, a).weight() + a.dim() == b.dim());
      for (int r = 0; r <= 4; ++r) {
        CHECK(a.contains(rad_layer(b, preimage(b, a, r), r)));
        CHECK(soc_layer(b, a, r) == intersect(preimage(b, Subspace(p, b.dim()), r), a));
      }
      // double annihilator, read back through the transpose pairing
      const Subspace ann = annihilator(a);
      CHECK(annihilator(ann) == a);
      CHECK(ann.dim() == b.dim() - a.dim());
      CHECK(intersect(a, Subspace::whole(p, b.dim())) == a);
      CHECK((a + Subspace(p, b.dim())) == a);
    }
}

TEST_CASE("submodule types agree with counting elements over F_2") {
  CorpusOptions opt;
  opt.max_weight = 9;
  opt.count = 80;
  for (const auto& x : random_corpus(2, opt)) {
    const Partition want = testsupport::type_by_counting_f2(x.ambient(), x.sub());
    CHECK(x.shape().alpha == want);
  }
}
