// Decide a few fixed instances and print the certificate for each.
#include "mlr/decider.hpp"

#include <iostream>

int main() {
  using mlr::Rational;
  auto q = [](const char* s) { return Rational::parse(s); };
  const std::vector<mlr::MlrcInstance> instances{
      {{1, 2}, {q("1/4"), q("1/4")}},
      {{1, 2, 3}, {q("1/4"), q("1/4"), q("1/4")}},
      {{1, 3, 2}, {q("13/48"), q("13/48"), q("3/16")}},
  };
  for (const auto& inst : instances) {
    auto v = mlr::decide_mlrc(inst);
    std::cout << "speeds";
    for (auto s : inst.speeds) std::cout << ' ' << s;
    std::cout << ": " << mlr::to_string(v.outcome);
    if (v.witness_time) std::cout << " at t = " << *v.witness_time;
    std::cout << ", safe set";
    for (const auto& p : v.intersection.pieces()) std::cout << " [" << p.lo << ", " << p.hi << "]";
    std::cout << '\n';
  }
}
