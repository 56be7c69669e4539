#include "doctest.h"

TEST_CASE("placeholder test_rules") { CHECK(true); }
