#pragma once

#include "infref/model.hpp"

namespace infref {

/// Two uniform binary chance nodes C1, C2 observed by a binary decision D;
/// value 1 when D = C1 xor C2, else 0.
InfluenceDiagram exor_diagram();

/// One chance node C (prior 0.5/0.5) observed by D; value 0.2 for d0 and 0.8
/// for d1 regardless of C.
InfluenceDiagram one_chance_diagram();

}  // namespace infref
