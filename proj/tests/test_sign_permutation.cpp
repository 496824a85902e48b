#include <doctest.h>

#include <random>
#include <sstream>

#include "oracles.hpp"
#include "realdet/error.hpp"
#include "realdet/permutation.hpp"
#include "realdet/sign.hpp"
#include "realdet/sweeps.hpp"

using namespace realdet;

TEST_CASE("sign arithmetic") {
  CHECK(Sign::plus() * Sign::minus() == Sign::minus());
  CHECK(Sign::minus() * Sign::minus() == Sign::plus());
  CHECK(-Sign::plus() == Sign::minus());
  CHECK(Sign::minus().pow(3) == Sign::minus());
  CHECK(Sign::minus().pow(4) == Sign::plus());
  CHECK(Sign::minus().pow(-3) == Sign::minus());
  CHECK(Sign::minus().pow(0) == Sign::plus());
  CHECK(Sign::from_int(-1).to_int() == -1);
  CHECK_THROWS_AS(Sign::from_int(0), Error);
  CHECK_THROWS_AS(Sign::from_int(2), Error);

  std::ostringstream os;
  os << Sign::plus() << ' ' << Sign::minus();
  CHECK(os.str() == "+1 -1");

  CHECK(parity(-3) == 1);
  CHECK(parity(-4) == 0);
  CHECK(mod_floor(-1, 4) == 3);
}

TEST_CASE("signature examples") {
  CHECK(Permutation::identity(4).signature() == Sign::plus());
  CHECK(Permutation::transposition(4, 1, 3).signature() == Sign::minus());
  CHECK(Permutation::from_images({1, 2, 0}).signature() == Sign::plus());
  CHECK(Permutation::identity(0).signature() == Sign::plus());
}

TEST_CASE("from_images rejects non-bijections") {
  CHECK_THROWS_AS(Permutation::from_images({0, 0}), Error);
  CHECK_THROWS_AS(Permutation::from_images({0, 2}), Error);
  try {
    Permutation::from_images({1, 1});
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidArgument);
  }
}

TEST_CASE("cycles come in canonical order") {
  // 0->3->0, 1 fixed, 2->4->5->2
  const auto p = Permutation::from_images({3, 1, 4, 0, 5, 2});
  const auto cycles = p.cycles();
  REQUIRE(cycles.size() == 3);
  CHECK(cycles[0] == std::vector<std::size_t>{0, 3});
  CHECK(cycles[1] == std::vector<std::size_t>{1});
  CHECK(cycles[2] == std::vector<std::size_t>{2, 4, 5});
  CHECK(p.cycle_count() == 3);
}

TEST_CASE("from_cycle_lengths builds consecutive cycles") {
  const std::vector<std::size_t> lengths{2, 1, 3};
  const auto p = Permutation::from_cycle_lengths(lengths);
  CHECK(p.images() == std::vector<std::size_t>{1, 0, 2, 4, 5, 3});
  const auto cycles = p.cycles();
  REQUIRE(cycles.size() == 3);
  CHECK(cycles[2].size() == 3);
}

TEST_CASE("signature agrees with the cycle-count oracle on all small permutations") {
  for (std::size_t n = 0; n <= 6; ++n) {
    for (const auto& images : oracle::permutations(n)) {
      CHECK(Permutation::from_images(images).signature() == oracle::cycle_count_signature(images));
    }
  }
}

TEST_CASE("signature is a homomorphism on random pairs") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 1 + rng() % 9;
    const auto a = random_permutation(n, rng);
    const auto b = random_permutation(n, rng);
    CHECK(a.after(b).signature() == a.signature() * b.signature());
    CHECK(a.after(a.inverse()) == Permutation::identity(n));
    CHECK(a.inverse().signature() == a.signature());
  }
}

TEST_CASE("composition order") {
  const auto a = Permutation::from_images({1, 2, 0});
  const auto b = Permutation::transposition(3, 0, 1);
  const auto ab = a.after(b);
  for (std::size_t x = 0; x < 3; ++x) CHECK(ab(x) == a(b(x)));
  CHECK_THROWS_AS(a.after(Permutation::identity(2)), Error);
}

TEST_CASE("restriction to a stable subset") {
  const auto p = Permutation::from_images({2, 1, 0, 4, 3});
  const std::vector<bool> stable{true, false, true, true, true};
  CHECK(p.stabilizes(stable));
  const auto r = p.restricted_to(stable);
  CHECK(r.images() == std::vector<std::size_t>{1, 0, 3, 2});
  CHECK(r.signature() == Sign::plus());

  const std::vector<bool> unstable{true, false, false, false, false};
  CHECK_FALSE(p.stabilizes(unstable));
  try {
    p.restricted_to(unstable);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::PreconditionViolated);
  }
}
