#pragma once

#include "mf/report.hpp"

namespace mf {

// Upper triangular 2x2 matrices over Z/2: the eight principal right ideals in
// display order, exactness of E12 R in E11 R, the two annihilators and the
// failure of E11 R / E12 R to be cyclically presented.
Report reproduce_triangular_example();

// 2x2 matrices over Z/9: the cover of R/xR for x = diag(1,3) is E22 R with
// kernel E22 J(R), and E22 R is not isomorphic to R_R.
Report reproduce_matrix_dvr_example();

// The quaternion-order presentation-dependence verification.
Report reproduce_quaternion_example();

}  // namespace mf
