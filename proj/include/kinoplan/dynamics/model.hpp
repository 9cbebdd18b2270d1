#pragma once

#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "kinoplan/core/types.hpp"

namespace kinoplan {

/// Named numeric parameters of a dynamics model (mass, gravity, inertia, ...).
/// Everything a model reads lives here so scenario files can pin it.
struct ModelParams {
    std::map<std::string, Scalar> values;

    [[nodiscard]] Scalar get(const std::string& key, Scalar fallback) const {
        const auto it = values.find(key);
        return it == values.end() ? fallback : it->second;
    }
};

class DynamicsModel {
public:
    virtual ~DynamicsModel() = default;

    [[nodiscard]] const std::string& id() const noexcept { return id_; }
    [[nodiscard]] int state_dim() const noexcept { return state_dim_; }
    [[nodiscard]] int control_dim() const noexcept { return control_dim_; }

    /// Indices of the workspace-position coordinates within the state.
    [[nodiscard]] std::span<const int> position_dims() const noexcept { return position_dims_; }

    /// Indices wrapped to (-pi, pi] after every integration step.
    [[nodiscard]] std::span<const int> angle_dims() const noexcept { return angle_dims_; }

    /// Parameter values actually in effect, for serialization.
    [[nodiscard]] const ModelParams& params() const noexcept { return params_; }

    /// Evaluates dx/dt = f(x, u) into `out` (already sized to state_dim).
    virtual void derivative(const Vec& x, const Vec& u, Vec& out) const noexcept = 0;

protected:
    DynamicsModel(std::string id, int state_dim, int control_dim,
                  std::vector<int> position_dims, std::vector<int> angle_dims,
                  ModelParams params)
        : id_(std::move(id)),
          state_dim_(state_dim),
          control_dim_(control_dim),
          position_dims_(std::move(position_dims)),
          angle_dims_(std::move(angle_dims)),
          params_(std::move(params)) {}

private:
    std::string id_;
    int state_dim_;
    int control_dim_;
    std::vector<int> position_dims_;
    std::vector<int> angle_dims_;
    ModelParams params_;
};

/// Builds one of the built-in models by id: double_integrator_4d,
/// double_integrator_6d, dubins_airplane_6d, quadcopter_12d.
/// Throws SchemaError for an unknown id.
[[nodiscard]] std::shared_ptr<const DynamicsModel> make_model(const std::string& id,
                                                              const ModelParams& params = {});

}  // namespace kinoplan
