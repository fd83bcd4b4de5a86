#include <doctest.h>

TEST_CASE("test_ssp placeholder") { CHECK(true); }
