#pragma once

#include "twofield/fock.hpp"

namespace twofield::detail {

void require_hermitian(const JointOperator& h);
void require_same_cutoff(const JointDensity& rho, const JointOperator& h);

/// (m + m^dag)/2 wrapped as a density; absorbs round-off asymmetry.
JointDensity symmetrized(const Matrix& m, FockCutoff cutoff);

}  // namespace twofield::detail
