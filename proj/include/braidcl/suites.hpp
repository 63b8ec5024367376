#pragma once

#include "braidcl/clifford.hpp"
#include "braidcl/report.hpp"

#include <vector>

namespace braidcl {

/// Braid equation, involutivity, invertibility, form compatibility and ψ-symmetry of F.
std::vector<CheckRecord> verify_inputs(const BraidOperator& psi, const QuadraticForm& form);

/// Antisymmetrizer factorizations against the n!-term sum and the shuffle decompositions,
/// closure and associativity of ∧.
std::vector<CheckRecord> verify_exterior(const ExteriorAlgebra& ext, int oracle_degree = 4);

/// Chevalley product against the λ_F-quotient product, associativity, unit and the Clifford relation.
std::vector<CheckRecord> verify_clifford(const CliffordAlgebra& cl);

}  // namespace braidcl
