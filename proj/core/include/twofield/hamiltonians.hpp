#pragma once

// Interaction-picture and dispersive effective Hamiltonians on the joint
// atom (x) field space, plus the small-rotation transformation
// R = exp[eta (a^dag sigma_- - sigma_+ a)] used to derive them.

#include "twofield/fock.hpp"
#include "twofield/params.hpp"

namespace twofield {

/// delta sigma_z/2 + lambda (a^dag sigma_- + sigma_+ a) + eps sigma_+ + eps^* sigma_-.
JointOperator interaction_hamiltonian(const SystemParams& p, FockCutoff cutoff);

/// Expanded dispersive form:
///   sigma_z [ (2 lambda^2/delta)(2N + 1) + (2 lambda/delta)(eps a^dag + eps^* a)
///             + delta/2 ] + eps sigma_+ + eps^* sigma_-.
/// See dispersive_validity_warning() for the |delta| >= 5 lambda advisory.
JointOperator effective_hamiltonian(const SystemParams& p, FockCutoff cutoff);

/// Undisplaced core sigma_z [chi N + delta_tilde] + eps sigma_+ + eps^* sigma_-.
/// Block diagonal in photon number.
JointOperator effective_core(const SystemParams& p, FockCutoff cutoff);

/// D(beta) core D^dag(beta) with D acting on the field factor and beta taken
/// from derived_params().
JointOperator effective_hamiltonian_displaced(const SystemParams& p, FockCutoff cutoff);

/// Same with an explicit displacement amplitude.
JointOperator effective_hamiltonian_displaced(const SystemParams& p, FockCutoff cutoff,
                                              Complex beta);

/// I_atom (x) D(beta).
JointOperator joint_displacement(Complex beta, FockCutoff cutoff);

/// Rotation generator G = a^dag sigma_- - sigma_+ a (anti-Hermitian).
JointOperator rotation_generator(FockCutoff cutoff);

/// R A R^dag with R = exp(eta G).
JointOperator small_rotation_exact(const JointOperator& a, double eta);

/// A + eta [G, A].
JointOperator small_rotation_first_order(const JointOperator& a, double eta);

/// Max-abs difference restricted to photon numbers below `subblock` in both
/// atom sectors (a 2*subblock square region of the joint matrix).
double compare_operators(const JointOperator& a, const JointOperator& b, int subblock);

/// Spectral norm of a - b on the same photon-number sub-block.
double operator_norm_gap(const JointOperator& a, const JointOperator& b, int subblock);

}  // namespace twofield
