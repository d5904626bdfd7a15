#pragma once

#include "k3lat/matrix.hpp"
#include "k3lat/numeric.hpp"

#include <string>
#include <vector>

namespace k3lat {

// A validated run configuration: the Gram matrix with named basis classes,
// the ample class, and the polarizations to certify.  Class expressions are
// integer combinations of basis names, e.g. "5L-H" or "-2L+3H".
struct Config {
  IntMatrix gram;
  std::vector<std::string> basis_names;
  IntVec ample;
  std::string ample_name;
  std::vector<IntVec> polarizations;
  std::vector<std::string> polarization_names;
  int search_degree_max = 50;
  int orbit_count = 10;
};

// parse a class expression ("5L-H") against the named basis; throws
// ConfigError on malformed input or unknown names
IntVec parse_class_expr(const std::string& expr,
                        const std::vector<std::string>& names);

// parse and validate a JSON config document; throws ConfigError
Config parse_config(const std::string& text);

// read and parse a config file; throws ConfigError when unreadable
Config load_config(const std::string& path);

}  // namespace k3lat
