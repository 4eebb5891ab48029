#pragma once

#include "weylinv/random_poly.hpp"

namespace weylinv::testing {
using Gen = RandomSource;
}
