#include <jetfinsler/difftools.hpp>

#include <string>

namespace jetfinsler::diff {

auto ScalarField::value(JetPoint const& p) const -> double { return f_(seed(p, 0)).value(); }

auto jet_eval(ScalarField const& field, JetPoint const& p, int order) -> Taylor
{
    if (order < 0 || order > kMaxOrder)
        throw OrderTooHigh("jet_eval order " + std::to_string(order) + " exceeds " + std::to_string(kMaxOrder));
    return field(seed(p, order));
}

auto partial(ScalarField const& field, JetPoint const& p, PartialSpec const& spec) -> double
{
    return jet_eval(field, p, spec.order()).partial(spec);
}

} // namespace jetfinsler::diff
