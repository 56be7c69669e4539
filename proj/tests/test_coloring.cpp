#include "doctest.h"

TEST_CASE("placeholder test_coloring") { CHECK(true); }
