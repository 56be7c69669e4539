#include "doctest.h"

TEST_CASE("placeholder test_ball") { CHECK(true); }
