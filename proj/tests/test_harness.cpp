#include <doctest.h>

TEST_CASE("test_harness placeholder") { CHECK(true); }
