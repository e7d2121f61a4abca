#include "doctest.h"

#include "okb/errors.hpp"
#include "okb/rat.hpp"
#include "okb/util.hpp"

using namespace okb;

TEST_CASE("rational arithmetic is exact and canonical") {
  Rat a(1, 3), b(1, 6);
  CHECK(a + b == Rat(1, 2));
  CHECK(a - b == Rat(1, 6));
  CHECK(a * b == Rat(1, 18));
  CHECK(a / b == Rat(2));
  CHECK(to_string(Rat(4, 6)) == "2/3");
  CHECK(to_string(Rat(-4, 6)) == "-2/3");
  CHECK(to_string(Rat(8, 4)) == "2");
  CHECK(to_string(Rat(0)) == "0");
}

TEST_CASE("string round trip") {
  for (const char* s : {"0", "1", "-1", "2/3", "-7/9", "123456789123456789/2"}) {
    CHECK(to_string(rat_from_string(s)) == s);
  }
  CHECK(rat_from_string("+3/6") == Rat(1, 2));
}

TEST_CASE("parser rejects junk") {
  for (const char* s : {"", "1.5", "1e3", "1/0", "1/-2", "a", "1/2/3", "2 /3", "--1"}) {
    CHECK_THROWS_AS(rat_from_string(s), InputError);
  }
}

TEST_CASE("seeded round trip on random rationals") {
  SplitMix64 rng(7);
  for (int i = 0; i < 200; ++i) {
    long long p = static_cast<long long>(rng.below(2000)) - 1000;
    long long q = 1 + static_cast<long long>(rng.below(999));
    Rat r(p, q);
    CHECK(rat_from_string(to_string(r)) == r);
  }
}

TEST_CASE("splitmix64 reference values pin the stream") {
  // First outputs for seed 0 (cross-checked against the published
  // reference implementation); any change would silently reshuffle every
  // seeded test in the suite.
  SplitMix64 rng(0);
  CHECK(rng.next() == 0xe220a8397b1dcdafULL);
  CHECK(rng.next() == 0x6e789e6aa1b965f4ULL);
  CHECK(rng.next() == 0x06c45d188009454fULL);
}
