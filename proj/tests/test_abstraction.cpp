#include <doctest.h>

TEST_CASE("test_abstraction placeholder") { CHECK(true); }
