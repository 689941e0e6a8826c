// Walk from (1/4,1/4,1/4) towards (1/3,1/3,0) and report where bounded search finds a counterexample.
#include "mlr/explorer.hpp"

#include <iostream>

int main() {
  using mlr::Rational;
  auto q = [](const char* s) { return Rational::parse(s); };
  auto rows = mlr::segment_scan({q("1/4"), q("1/4"), q("1/4")}, {q("1/3"), q("1/3"), q("0")}, 10, 10, true, 0);
  for (const auto& r : rows) {
    std::cout << "tau " << r.tau << "  (" << r.point[0] << ", " << r.point[1] << ", " << r.point[2] << ")  "
              << mlr::to_string(r.status);
    if (r.counterexample) std::cout << "  speeds " << (*r.counterexample)[0] << ' ' << (*r.counterexample)[1] << ' ' << (*r.counterexample)[2];
    std::cout << '\n';
  }
}
