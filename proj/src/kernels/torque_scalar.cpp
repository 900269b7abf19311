#include "typea/kernels/torque_kernel.hpp"

namespace typea::kernels {

void electrical_torque_scalar(const TorqueCoeffs& c, std::span<const double> slip, std::span<double> out) noexcept {
    for (std::size_t i = 0; i < slip.size(); ++i) out[i] = electrical_torque_ref(c, slip[i]);
}

}  // namespace typea::kernels
