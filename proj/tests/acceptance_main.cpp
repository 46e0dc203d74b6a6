#include <cstdlib>
#include <iostream>
#include <set>

#include "poincare/acceptance.hpp"

// Runs the acceptance suite; optional arguments select criterion numbers.
int main(int argc, char** argv) {
  std::set<int> which;
  for (int i = 1; i < argc; ++i) which.insert(std::atoi(argv[i]));
  return poincare::acceptance::run(std::cout, which) == 0 ? 0 : 1;
}
