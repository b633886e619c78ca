#pragma once

#include <string>

#include "qlw/bialgebra.hpp"

namespace qlw {

/// The 8-dimensional Kac-Paljutkin quantum group, realized as the group
/// algebra of the dihedral group of order 8 with its coproduct deformed by a
/// unitary twist supported on the Klein four-subgroup {e, r2, s, r2s}. The
/// result is neither commutative nor cocommutative; all structure constants
/// are exact multiples of 1/4.
FiniteBialgebra build_kac_paljutkin();

std::string bialgebra_to_json(const FiniteBialgebra& a);
FiniteBialgebra bialgebra_from_json(const std::string& text);

void save_fixture(const FiniteBialgebra& a, const std::string& path);

/// Loads and validates a fixture file. A fixture failing validation is
/// rejected; the exception message carries the residual table.
FiniteBialgebra load_fixture(const std::string& path, double tol = 1e-9);

}  // namespace qlw
