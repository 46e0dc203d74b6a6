#pragma once

#include <ostream>
#include <set>

namespace poincare::acceptance {

// Runs the numbered acceptance criteria (all of them when `which` is empty),
// printing exactly one PASS/FAIL line per criterion. Returns the number of
// failures. All tolerances are pinned inside.
int run(std::ostream& out, const std::set<int>& which = {});

}  // namespace poincare::acceptance
