#pragma once

#include <string>
#include <vector>

namespace orlicz {

struct PropertyResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

using PropertySuite = std::vector<PropertyResult>;

/// Randomized property suites over the built-in Phi families and the
/// reference configurations. Deterministic for a fixed seed.
PropertySuite verify_phi(unsigned seed);
PropertySuite verify_modular(unsigned seed);
PropertySuite verify_prox(unsigned seed);
PropertySuite verify_stepper(unsigned seed);

PropertySuite verify_all(unsigned seed);

bool all_pass(const PropertySuite& suite);

}  // namespace orlicz
