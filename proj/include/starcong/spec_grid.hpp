#pragma once

#include <vector>

#include "starcong/canonical.hpp"

namespace starcong {

/// Parameter grid used by the certification suite.
const std::vector<Complex>& grid_lambdas();  // {2, -2, 3, 1.5+1.5i}
const std::vector<Complex>& grid_mus();      // {1, i, -1, e^{i pi/4}, (3+4i)/5}

/// Every canonical spec (as a block multiset in a fixed enumeration order)
/// with block sizes 1..4, at most max_blocks blocks, total dimension
/// <= max_total_dim, over the lambda/mu grids above.
std::vector<CanonicalSpec> enumerate_grid_specs(int max_total_dim, int max_blocks = 3);

}  // namespace starcong
