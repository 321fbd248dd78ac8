#pragma once

// Convenience header pulling in the whole library.

#include "lamup/alpha.hpp"
#include "lamup/debruijn.hpp"
#include "lamup/freevars.hpp"
#include "lamup/selftest.hpp"
#include "lamup/syntax.hpp"
#include "lamup/term.hpp"
#include "lamup/testgen.hpp"
