#include <doctest.h>

#include "belnap/four.hpp"

using namespace belnap;

namespace {

FourValue v(char c) { return *value_from_char(c); }

}  // namespace

// Belnap's tables, rows and columns in the order f, n, b, t.
TEST_CASE("truth-order meet and join tables") {
  const char* meet[] = {"ffff", "fnfn", "ffbb", "fnbt"};
  const char* join[] = {"fnbt", "nntt", "btbt", "tttt"};
  const char* order = "fnbt";
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k) {
      CAPTURE(order[i]);
      CAPTURE(order[k]);
      CHECK(meet_t(v(order[i]), v(order[k])) == v(meet[i][k]));
      CHECK(join_t(v(order[i]), v(order[k])) == v(join[i][k]));
    }
}

TEST_CASE("negation swaps f and t and fixes n and b") {
  CHECK(neg_t(kFalse) == kTrue);
  CHECK(neg_t(kTrue) == kFalse);
  CHECK(neg_t(kNeither) == kNeither);
  CHECK(neg_t(kBoth) == kBoth);
}

TEST_CASE("conflation fixes f and t and swaps n and b") {
  CHECK(conflate(kFalse) == kFalse);
  CHECK(conflate(kTrue) == kTrue);
  CHECK(conflate(kNeither) == kBoth);
  CHECK(conflate(kBoth) == kNeither);
}

TEST_CASE("orders") {
  CHECK(leq_t(kFalse, kNeither));
  CHECK(leq_t(kFalse, kBoth));
  CHECK(leq_t(kNeither, kTrue));
  CHECK(leq_t(kBoth, kTrue));
  CHECK_FALSE(leq_t(kNeither, kBoth));
  CHECK_FALSE(leq_t(kBoth, kNeither));
  CHECK(leq_i(kNeither, kFalse));
  CHECK(leq_i(kTrue, kBoth));
  CHECK_FALSE(leq_i(kFalse, kTrue));
  CHECK(leq_t(kTrue, kFalse, TruthOrder::inverse));
  CHECK(meet_t(kTrue, kFalse, TruthOrder::inverse) == kTrue);
  CHECK(join_t(kTrue, kFalse, TruthOrder::inverse) == kFalse);
}

TEST_CASE("information-order meet and join") {
  CHECK(meet_i(kTrue, kFalse) == kNeither);
  CHECK(join_i(kTrue, kFalse) == kBoth);
  CHECK(meet_i(kBoth, kTrue) == kTrue);
  CHECK(join_i(kNeither, kFalse) == kFalse);
}

TEST_CASE("bifilters") {
  CHECK(is_prime_bifilter(kAccepted, TruthOrder::standard));
  CHECK(is_prime_bifilter(kRejected, TruthOrder::inverse));
  CHECK_FALSE(is_prime_bifilter(kRejected, TruthOrder::standard));
  CHECK_FALSE(is_prime_bifilter(kAccepted, TruthOrder::inverse));
  // The whole carrier is not proper; {t} is not closed under meet_i.
  CHECK_FALSE(is_bifilter({kFalse, kNeither, kBoth, kTrue}, TruthOrder::standard));
  CHECK_FALSE(is_bifilter({kTrue}, TruthOrder::standard));
  CHECK_FALSE(is_bifilter({}, TruthOrder::standard));
  // n and b are in, their truth meet f is not.
  CHECK_FALSE(is_prime_bifilter({kNeither, kBoth, kTrue}, TruthOrder::standard));
}

TEST_CASE("value names") {
  CHECK(value_char(kFalse) == 'f');
  CHECK(value_char(kNeither) == 'n');
  CHECK(value_char(kBoth) == 'b');
  CHECK(value_char(kTrue) == 't');
  CHECK(value_from_char('B') == kBoth);
  CHECK_FALSE(value_from_char('x').has_value());
  for (FourValue x : kAllValues) CHECK(kAllValues[std::size_t(x.index())] == x);
}

TEST_CASE("value sets") {
  ValueSet s{kBoth, kTrue};
  CHECK(s.size() == 2);
  CHECK(s.contains(kTrue));
  CHECK_FALSE(s.contains(kFalse));
  CHECK(s == kAccepted);
  CHECK(ValueSet::from_bits(0xF).size() == 4);
}
