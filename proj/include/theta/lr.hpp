#pragma once

#include "theta/partition.hpp"
#include "theta/rootdata.hpp"

namespace theta {

// Littlewood-Richardson coefficient c^lam_{mu,nu} by LR skew-tableau enumeration.
Int lr_coefficient(const Partition& lam, const Partition& mu, const Partition& nu);

// Multiplicity of nu in mu (x) lam for rational GL_r representations
// (dominant integer weights, negative entries allowed); determinant shifts
// reduce to partitions. Zero when central characters mismatch.
Int tensor_multiplicity_gl(int r, const WeightVector& nu, const WeightVector& mu,
                           const WeightVector& lam);

} // namespace theta
