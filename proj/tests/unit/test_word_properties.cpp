#include "doctest.h"
#include "word_properties.hpp"

using namespace mcgpres;

TEST_CASE("word-core invariants on random words") {
  for (const auto& p : props::word_properties()) {
    CAPTURE(p.name);
    CHECK(props::count_failures(p, 2000, 7) == 0);
  }
}
