#include "doctest.h"

TEST_CASE("placeholder test_lift") { CHECK(true); }
