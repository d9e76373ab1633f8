#pragma once

#include "pickqubo/instance.hpp"

namespace pickqubo {

/// Four products (8, 8, 3, 3 kg), capacity 45, three robots, euclidean layout.
Instance fig5_instance();

/// Seven products (8, 8, 3, 3, 1, 2, 4 kg), capacity 45, four robots, manhattan grid layout.
Instance fig7_instance();

}  // namespace pickqubo
