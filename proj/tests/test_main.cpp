#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdlib>
#include <set>
#include <stdexcept>

#include "doctest.h"
