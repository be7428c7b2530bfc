#pragma once

// Named model variants used by the CLI and the test suites.

#include <optional>
#include <string>
#include <vector>

#include "sunstrip/model.hpp"

namespace sunstrip {

struct ModelInfo {
  std::string token;
  ModelSpec spec;
  std::vector<std::string> occupancyVars;  // one per story class
  std::string lengthVar;
  std::optional<double> densityConstant;   // asymptotic maximum of houses per column
};

// riviera, flory, riviera-k2, flory-k2..flory-k9, riviera-mixed,
// flory-mixed, grid2, grid3.
const std::vector<ModelInfo>& model_registry();
// Throws DomainError for unknown tokens.
const ModelInfo& model_info(const std::string& token);
const ModelInfo& model_info(const ModelSpec& spec);

}  // namespace sunstrip
