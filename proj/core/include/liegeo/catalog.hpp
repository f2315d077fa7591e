#pragma once

#include <string>
#include <vector>

#include "liegeo/filiform.hpp"

namespace liegeo {

/// Heisenberg algebra: [X_1, X_2] = X_3.
LieAlgebra heis3();
/// Basis X_1..X_4, Y_1, Y_2: [X_1,X_2] = -[X_3,X_4] = Y_1, [X_1,X_3] = [X_2,X_4] = Y_2.
LieAlgebra heis6_2center();
/// [e_1,e_2] = e_3, [e_2,e_3] = e_1, [e_3,e_1] = e_2.
LieAlgebra so3();
/// Basis H, E, F: [H,E] = 2E, [H,F] = -2F, [E,F] = H.
LieAlgebra sl2();
/// Basis X, Y, Z: [X,Y] = Z, [X,Z] = -Y.
LieAlgebra solv_rot();
/// Basis X, Y, Z: [X,Y] = Y, [X,Z] = -Z.
LieAlgebra solv_exp();
/// [X_1,X_2] = X_3, [X_1,X_3] = X_4, [X_2,X_3] = X_4 (isomorphic to L_4).
LieAlgebra dim4_twisted();
/// [X_1,X_2] = X_3 + X_4, [X_1,X_3] = X_4.
LieAlgebra dim4_beta();

/// Names accepted by `catalog_algebra`.
std::vector<std::string> catalog_names();
/// Builds a catalog entry. `params` are the numeric arguments: n for Ln,
/// abelian and cd2f; the coefficient list for LC. Throws InvalidArgument.
LieAlgebra catalog_algebra(const std::string& name, const std::vector<std::string>& params = {});

/// Filiform fixtures used by property suites: L_3..L_8, an L_C, dim6,
/// irreg6 and the two 4-dimensional variants.
std::vector<LieAlgebra> filiform_fixtures();
/// Every nilpotent fixture: the filiform ones plus heis6_2center, a direct
/// sum and an abelian algebra.
std::vector<LieAlgebra> nilpotent_fixtures();
/// Nilpotent fixtures plus so3, sl2, solv_rot and solv_exp.
std::vector<LieAlgebra> all_fixtures();

}  // namespace liegeo
