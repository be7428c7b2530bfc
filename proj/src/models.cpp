#include "sunstrip/models.hpp"

#include "sunstrip/errors.hpp"

namespace sunstrip {

const std::vector<ModelInfo>& model_registry() {
  static const std::vector<ModelInfo> all = [] {
    std::vector<ModelInfo> v;
    v.push_back({"riviera", ModelSpec::riviera(), {"x"}, "y", 2.0 / 3.0});
    v.push_back({"flory", ModelSpec::flory(), {"x"}, "y", std::nullopt});
    v.push_back({"riviera-k2", ModelSpec::riviera(2), {"x"}, "y", 0.5});
    for (int k = 2; k <= 9; ++k)
      v.push_back({"flory-k" + std::to_string(k), ModelSpec::flory(k), {"x"}, "y", std::nullopt});
    v.push_back({"riviera-mixed", ModelSpec::riviera_mixed(), {"x", "y"}, "z", std::nullopt});
    v.push_back({"flory-mixed", ModelSpec::flory_mixed(), {"x", "y"}, "z", std::nullopt});
    v.push_back({"grid2", ModelSpec::grid(2), {"x"}, "y", 5.0 / 3.0});
    v.push_back({"grid3", ModelSpec::grid(3), {"x"}, "y", 7.0 / 3.0});
    return v;
  }();
  return all;
}

const ModelInfo& model_info(const std::string& token) {
  for (const auto& m : model_registry())
    if (m.token == token) return m;
  throw DomainError("unknown model '" + token + "'");
}

const ModelInfo& model_info(const ModelSpec& spec) {
  const ModelSpec open = spec.with_boundary(Boundary::SunnyOpen);
  for (const auto& m : model_registry())
    if (m.spec == open) return m;
  throw DomainError("model is not in the registry");
}

}  // namespace sunstrip
