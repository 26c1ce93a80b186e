#pragma once

// Exact forward-mode differentiation of scalar fields on the jet coordinates.

#include <jetfinsler/jet_point.hpp>
#include <jetfinsler/taylor.hpp>

#include <functional>

namespace jetfinsler::diff {

/// A deterministic scalar map of (t, x, y), written once against Taylor values.
class ScalarField
{
public:
    using Function = std::function<Taylor(JetVariables const&)>;

    ScalarField() = default;
    explicit ScalarField(Function f) : f_{std::move(f)} {}

    [[nodiscard]] auto operator()(JetVariables const& v) const -> Taylor { return f_(v); }

    /// Plain value at p.
    [[nodiscard]] auto value(JetPoint const& p) const -> double;

private:
    Function f_;
};

/// Every mixed partial of `field` at p up to total order `order`, in one pass.
/// Individual entries are read back with Taylor::partial.
auto jet_eval(ScalarField const& field, JetPoint const& p, int order) -> Taylor;

/// A single mixed partial derivative of `field` at p.
auto partial(ScalarField const& field, JetPoint const& p, PartialSpec const& spec) -> double;

} // namespace jetfinsler::diff
