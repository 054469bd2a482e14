// Wiener index of linear phenylenes: every edge is a convex cut, and the
// pairs shared by a hexagon and a square are added back as residual.

#include <iostream>

#include "hyperwiener/hyperwiener.hpp"

int main() {
  using namespace hyperwiener;
  for (std::size_t n = 2; n <= 8; ++n) {
    const auto h = phenylene(n);
    const auto result = wiener_general(h, CutPartition::singletons(h));
    const std::size_t closed = 12 * n * n * n + 6 * n * n - 3 * n;
    std::cout << "LP_" << n << ": W = " << result.total << " (residual " << result.residual << ", closed form "
              << closed << ")\n";
  }
}
