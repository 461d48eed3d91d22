#ifndef LEONARD_TESTS_INSTANCES_HPP
#define LEONARD_TESTS_INSTANCES_HPP

#include <string>
#include <utility>
#include <vector>

#include "leonard/io.hpp"
#include "leonard/system.hpp"

namespace leonard::testing {

/// Absolute path of a frozen instance file under tests/data.
std::string data_file(const std::string& name);

/// Loads, constructs, and validates a frozen instance.
std::pair<LeonardSystem, ParameterArray> load_instance(const std::string& name);

/// Frozen rational instance files for a given diameter (several shapes:
/// linear, symmetric, mixed, geometric eigenvalue sequences).
std::vector<std::string> rational_instance_files(std::size_t d);

/// The frozen GF(101) instance file for a given diameter.
std::string gf101_instance_file(std::size_t d);

/// theta = (0,1), theta* = (0,1), varphi = (1): the smallest nontrivial
/// system, built inline.
std::pair<LeonardSystem, ParameterArray> tiny_d1();

/// A small asymmetric d = 2 instance, built inline.
std::pair<LeonardSystem, ParameterArray> small_d2();

/// A d = 3 instance used for the heavier identity checks.
std::pair<LeonardSystem, ParameterArray> medium_d3();

/// Random valid rational instances: affine-image eigenvalue sequences
/// (arithmetic, or geometric with mutually inverse ratios) and a random
/// free parameter, kept only when the constructor validates them.  The
/// frozen files cover fixed shapes; these sweep a broader family.
std::vector<std::pair<LeonardSystem, ParameterArray>> random_valid_instances(std::size_t d,
                                                                             std::size_t want,
                                                                             unsigned seed);

} // namespace leonard::testing

#endif
