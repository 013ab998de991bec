#include "kelpseg/reference_net.hpp"

#include <cmath>
#include <random>

#include "kelpseg/errors.hpp"
#include "kelpseg/rng.hpp"

namespace kelpseg {

namespace {

Tensor conv_forward(const ReferenceNet::kChannels.size() == 5 ? void() : void(), ...);

} // namespace

} // namespace kelpseg
