#pragma once

#include <vector>

#include "wrnet/rational.hpp"

namespace wrnet {

/// A relatively open face of a central hyperplane arrangement.
struct ArrangementFace
{
    RatVec representative;  // nonzero point of the face
    std::vector<int> signs; // sign of normal_i . representative, per input normal
};

/// One representative per nonzero face (every dimension) of the central
/// arrangement {v : a_i . v = 0} in Q^dim. Normals must be nonzero.
/// Faces come out in a deterministic order.
std::vector<ArrangementFace> arrangement_faces(const std::vector<RatVec>& normals, std::size_t dim);

}  // namespace wrnet
