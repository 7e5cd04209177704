#pragma once

// Values computed once with mpmath at 50 digits and rounded to double.
namespace polyspec::testref {

inline constexpr double kJ1At1 = 0.44005058574493352;
inline constexpr double kJ0At2 = 0.22389077914123567;
inline constexpr double kJ5At1 = 2.497577302112344e-4;
inline constexpr double kJ2At3 = 0.48609126058589108;
inline constexpr double kJ1At3 = 0.33905895852593646;

inline constexpr double kLambda01 = 2.4048255576957728;
inline constexpr double kLambda11 = 3.8317059702075123;
inline constexpr double kLambda02 = 5.5200781102863106;
inline constexpr double kLambda32 = 9.7610231299816697;
inline constexpr double kLambda51 = 8.7714838159599540;

inline constexpr double kLambda01Sq = 5.7831859629467845;
inline constexpr double kLambda11Sq = 14.681970642123893;
inline constexpr double kLambda02Sq = 30.471262343662086;

inline constexpr double kBottomUnit = 1.4457964907366961;      // lambda01^2 / 4
inline constexpr double kBottomRadiusTwo = 0.36144912268417403;  // lambda01^2 / 16
inline constexpr double kTwoDirichlet = 2.8915929814733923;    // lambda01^2 / 2
inline constexpr double kMixedPair = 5.1162891512676694;       // (lambda01^2 + lambda11^2) / 4
inline constexpr double kBottom123q2 = 0.52209317721047360;

inline constexpr double kJ0AtLambda11 = -0.40275939570255297;
inline constexpr double kJ1AtLambda01 = 0.51914749728946679;
inline constexpr double kHalfJ1AtLambda01Sq = 0.13475706197095846;
inline constexpr double kJ0AtHalfLambda01 = 0.66992973898453948;

}  // namespace polyspec::testref
