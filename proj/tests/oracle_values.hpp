// Generated by tests/oracle/reference_values.py -- do not edit by hand.
// High-precision (50-digit mpmath) evaluations of the closed forms
// asserted in the test suites.
#pragma once

namespace oracle {

inline constexpr double LEFT_INTEGRAL_HALF_T_AT_0_25 = 0.094031597257959381;
inline constexpr double LEFT_INTEGRAL_HALF_T_AT_0_5 = 0.26596152026762179;
inline constexpr double LEFT_INTEGRAL_HALF_T_AT_0_75 = 0.48860251190291992;
inline constexpr double RIGHT_INTEGRAL_HALF_ONE_AT_0_25 = 0.97720502380583984;
inline constexpr double RIGHT_INTEGRAL_HALF_ONE_AT_0_5 = 0.79788456080286536;
inline constexpr double RIGHT_INTEGRAL_HALF_ONE_AT_0_75 = 0.56418958354775629;
inline constexpr double LEFT_DERIV_HALF_T_AT_0_25 = 0.56418958354775629;
inline constexpr double LEFT_DERIV_HALF_T_AT_0_5 = 0.79788456080286536;
inline constexpr double LEFT_DERIV_HALF_T_AT_0_75 = 0.97720502380583984;
inline constexpr double LEFT_DERIV_HALF_ONE_AT_0_25 = 1.1283791670955126;
inline constexpr double LEFT_DERIV_HALF_ONE_AT_0_5 = 0.79788456080286536;
inline constexpr double LEFT_DERIV_HALF_ONE_AT_0_75 = 0.6514700158705599;
inline constexpr double RIGHT_DERIV_HALF_ONEMT_AT_0_25 = 0.97720502380583984;
inline constexpr double RIGHT_DERIV_HALF_ONEMT_AT_0_5 = 0.79788456080286536;
inline constexpr double RIGHT_DERIV_HALF_ONEMT_AT_0_75 = 0.56418958354775629;
inline constexpr double IBP_HALF_SIDE_VALUE = 0.095524162293800006;
inline constexpr double IBP_CLASSICAL_SIDE_VALUE = 0.63661977236758134;
inline constexpr double FUNCTIONAL_FRAC_KINETIC_LINE = 0.63661977236758134;
inline constexpr double TRANSFER_LHS_AT_0_25 = 0.11669560095555475;
inline constexpr double TRANSFER_LHS_AT_0_5 = 0.33245190033452723;
inline constexpr double TRANSFER_LHS_AT_0_75 = 0.40863043000384584;
inline constexpr double PARABOLA_AT_0_5 = -0.125;

}  // namespace oracle
