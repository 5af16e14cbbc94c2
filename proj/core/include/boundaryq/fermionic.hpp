#pragma once

#include "boundaryq/pauli.hpp"
#include "boundaryq/sparse.hpp"

namespace boundaryq {

/// Full boundary operator as the sum of Jordan-Wigner annihilation
/// operators a_0 + ... + a_{n-1}: a canonical 2n-term Pauli sum.
OperatorSum full_boundary_fermionic(int n);

/// Full boundary operator built bottom-up from the block recurrence
/// d(n) = Q+ (x) I^(n-1) + sigma_z (x) d(n-1), d(1) = Q+. An independent
/// third construction path; exact integer entries.
SparseOperator full_boundary_recurrence(int n);

/// The Pauli string Q_i = sigma_z^(n-(i+1)) (x) sigma_x (x) I^i
/// (= a_i + a_i^dagger).
PauliString hermitian_term(int i, int n);

/// Hermitian boundary operator B = sum_i Q_i: exactly n Pauli terms, each
/// with coefficient +1. The terms pairwise anticommute and B^2 = n I.
OperatorSum hermitian_boundary(int n);

} // namespace boundaryq
