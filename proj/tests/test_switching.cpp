#include <doctest.h>

#include <random>
#include <set>

#include "socle/convert.hpp"
#include "socle/switching.hpp"
#include "support.hpp"

using namespace socle;

namespace {

std::multiset<int> values(const SwitchState& st, Owner who) {
  std::multiset<int> out;
  for (const auto& row : st.grid)
    for (const auto& c : row)
      if (c.owner == who) out.insert(c.value);
  return out;
}

}  // namespace

TEST_CASE("initial state of the socle fixture") {
  const SwitchState st = init_switch(testsupport::sigma2());
  auto s = [&](int r, int c) { return st.at({r, c}); };
  CHECK(s(1, 1) == SwitchCell{Owner::S, 1});
  CHECK(s(1, 2) == SwitchCell{Owner::S, 1});
  CHECK(s(2, 1) == SwitchCell{Owner::S, 2});
  CHECK(s(3, 1) == SwitchCell{Owner::S, 3});
  CHECK(s(1, 3) == SwitchCell{Owner::T, 1});
  CHECK(s(2, 2) == SwitchCell{Owner::T, 2});
  CHECK(s(2, 3) == SwitchCell{Owner::T, 3});
  CHECK(s(3, 2) == SwitchCell{Owner::T, 4});
  CHECK(s(4, 1) == SwitchCell{Owner::T, 3});
  CHECK(s(5, 1) == SwitchCell{Owner::T, 4});
  CHECK(semistandard(st, Owner::S));
  CHECK(semistandard(st, Owner::T));
  CHECK_FALSE(is_terminal(st));
}

TEST_CASE("deterministic switching of the fixture") {
  const SwitchState start = init_switch(testsupport::sigma2());
  const SwitchState end = run_switch(start);
  CHECK(end.history.size() == 8);
  CHECK(is_terminal(end));
  CHECK(t_region(end) == Partition{4, 2});
  CHECK(s_part(end) == testsupport::gamma2_dual());
  CHECK(switch_to_duallr(testsupport::sigma2()) == testsupport::gamma2_dual());
  const auto states = replay(start, end.history);
  REQUIRE(states.size() == 9);
  CHECK(states.front().grid == start.grid);
  CHECK(states.back().grid == end.grid);
  for (const auto& st : states) {
    CHECK(semistandard(st, Owner::S));
    CHECK(semistandard(st, Owner::T));
  }
  // a terminal state does not move
  const SwitchState again = run_switch(end);
  CHECK(again.grid == end.grid);
  CHECK(again.history.size() == end.history.size());
}

TEST_CASE("trivial switching") {
  const SkewTableau pick = testsupport::picket_socle(4, 5);
  CHECK(switch_to_duallr(pick) == testsupport::picket_lr(1, 5));
  // empty gamma: nothing to switch
  const SkewTableau full = testsupport::picket_socle(3, 3);
  CHECK(run_switch(init_switch(full)).history.empty());
  // empty alpha: already terminal
  const SwitchState none = init_switch(SkewTableau::empty({3, 1}));
  CHECK(is_terminal(none));
  CHECK(switch_to_duallr(SkewTableau::empty({3, 1})).shape() == ShapeTriple{{3, 1}, {3, 1}, {}});
  CHECK_THROWS_AS(init_switch(testsupport::gamma2_dual()), InvalidTableau);
}

TEST_CASE("random orders reach the same terminal state") {
  std::vector<SkewTableau> pool;
  for (const auto& shape : shapes_up_to(8))
    for (const auto& t : enumerate(shape, TableauKind::socle)) pool.push_back(t);
  std::mt19937_64 rng(2024);
  std::shuffle(pool.begin(), pool.end(), rng);
  pool.resize(50);
  for (const auto& t : pool) {
    const SwitchState start = init_switch(t);
    const SwitchState ref = run_switch(start);
    const auto alpha = t.alpha();
    REQUIRE(alpha);
    CHECK(t_region(ref) == *alpha);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const SwitchState st = run_switch(start, SwitchOrder{seed * 7919 + 1});
      CHECK(st.grid == ref.grid);
      CHECK(values(st, Owner::S) == values(start, Owner::S));
      CHECK(values(st, Owner::T) == values(start, Owner::T));
      const std::size_t bound = static_cast<std::size_t>(t.beta().weight() * t.beta().weight() * alpha->first());
      CHECK(st.history.size() <= bound);
    }
  }
}

TEST_CASE("conjecture sweep") {
  const ConjectureReport one = check_conjecture(1, 2);
  CHECK(one.ok());
  CHECK(one.cases == 2);
  const ConjectureReport r = check_conjecture(6, 3);
  CHECK(r.ok());
  CHECK(r.runs == r.cases * 4);
  std::size_t cases = 0;
  for (const auto& shape : shapes_up_to(6)) cases += count_tableaux(shape, TableauKind::socle);
  CHECK(r.cases == cases);
  // both tableaux of the fixture shape match the conversion
  for (const auto& t : enumerate(parse_shape("42/532/31"), TableauKind::socle))
    CHECK(switch_to_duallr(t) == socle_to_duallr(t));
}
