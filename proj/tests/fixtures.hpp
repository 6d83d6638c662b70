#pragma once

// Expected values frozen from the 50-digit oracle in oracle/high_precision.hpp
// (re-derived by test_oracle.cpp on every run).

namespace fixtures {

// neg_log on x = (1, 2, 4), p = (0.2, 0.3, 0.5), bounds taken from the sample
inline constexpr double kNegLogGap = 0.12852808245322934;
inline constexpr double kNegLogDg = 0.33;
inline constexpr double kNegLogCbs = 0.35464771252610667;
inline constexpr double kNegLogBox = 0.5625;

// neg_log on x = (1, 2), p = (1/2, 1/2)
inline constexpr double kNegLogTwoPointGap = 0.058891517828191727;

// x ln x at 2
inline constexpr double kTwoLogTwo = 1.3862943611198906;

// distribution (0.2, 0.3, 0.5)
inline constexpr double kEntropy = 1.0296530140645735;
inline constexpr double kLogThreeMinusEntropy = 0.068959274603536164;
inline constexpr double kT5Inner = 0.20616541467168489;
inline constexpr double kT5Outer = 0.21345374206136560;
inline constexpr double kRenyiTwo = 0.96758402626170560;
inline constexpr double kRenyiHalf = 1.0636585111251116;
inline constexpr double kOrderGapTwo = 0.062068987802867929;
inline constexpr double kOrderGapHalf = 0.017002748530269031;
inline constexpr double kT6HalfBound = 0.053398590529466383;
inline constexpr double kT7TwoLhs = 0.27150894995017249;
inline constexpr double kT8HalfLhs = 0.030007873377205716;
inline constexpr double kT8HalfBound = 0.092458621701753148;
inline constexpr double kT9HalfLhs = 0.0091285233520824609;
inline constexpr double kT9HalfBound = 0.030819540567251049;

// distribution (0.1, 0.9)
inline constexpr double kT4PairLhs = 0.36806420716849707;
// distribution (0.4, 0.6)
inline constexpr double kT5PairLhs = 0.020135513550688873;
inline constexpr double kT5PairInner = 0.040546510810816438;
inline constexpr double kT5PairOuter = 0.040824829046386302;
inline constexpr double kT7PairLhs = 0.080042707673536426;

// weighted means of (1, 2, 4) with (0.2, 0.3, 0.5)
inline constexpr double kGeometric = 2.4622888266898326;
inline constexpr double kHarmonic = 2.1052631578947368;
inline constexpr double kAgRatio = 1.1371533548987297;
inline constexpr double kGhRatio = 1.1695871926776705;
inline constexpr double kExpNineSixteenths = 1.7550546569602986;
inline constexpr double kExpEighth = 1.1331484530668263;

// self-power ratios
inline constexpr double kSelfPowerOneTwo = 1.0886621079036347;
inline constexpr double kSelfPowerOneFour = 1.6190861620062102;

// closed-form bounds
inline constexpr double kLogMeanOneFour = 2.1640425613334451;
inline constexpr double kLogSpreadInner = 0.068721804890561630;
inline constexpr double kLogSpreadOuter = 0.071151247353788535;
inline constexpr double kLogSpreadOneFour = 1.0397207708399180;
inline constexpr double kPowerGapHalf = 0.030819540567251049;

}  // namespace fixtures
