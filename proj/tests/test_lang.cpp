#include <doctest.h>

TEST_CASE("test_lang placeholder") { CHECK(true); }
