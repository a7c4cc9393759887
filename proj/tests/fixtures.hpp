#pragma once

// Generated by gen_fixtures.py - do not edit by hand.
// Regenerate from the repository root with:  python3 tests/gen_fixtures.py

namespace fixtures {

// Point values of the map and its Jacobian determinant.
inline constexpr const char* kQ_1_3 = "1786155131/4";
inline constexpr const char* kU_63_6 = "1786157163/4";
inline constexpr const char* kJac_0_0 = "11";
inline constexpr const char* kP_1_1 = "1";
inline constexpr const char* kQ_1_1 = "715/4";

// Expanded sizes (sparse term counts and total degrees).
inline constexpr int kFTerms = 13, kFDegree = 10;
inline constexpr int kGTerms = 8, kGDegree = 7;
inline constexpr int kPTerms = 12, kPDegree = 10;
inline constexpr int kQTerms = 133, kQDegree = 40;
inline constexpr int kJacTerms = 78, kJacDegree = 30;
inline constexpr int kUTerms = 8, kUDegree = 4;

// Image curve: samples of phi, the symmetry factor, the reduction
// of phi2 modulo s^2 + 2s - a, and the extra closure point.
inline constexpr const char* kPhiA_1 = "3", *kPhiB_1 = "3142";
inline constexpr const char* kPhiA_m3 = "3", *kPhiB_m3 = "8406";
inline constexpr const char* kPhiA_m2 = "0", *kPhiB_m2 = "208";
inline constexpr const char* kPhiA_m1 = "-1", *kPhiB_m1 = "0";
inline constexpr const char* kPhiA_0 = "0", *kPhiB_0 = "0";
inline constexpr const char* kSymmetryFactor = "-2";
inline constexpr const char* kLinCoeffs[3] = {"-104", "-179", "-75"};
inline constexpr const char* kCstCoeffs[5] = {"0", "52", "409/4", "69", "75/4"};
inline constexpr const char* kZariskiA = "-104/75";
inline constexpr const char* kZariskiB = "4156048/421875";

// Fiber polynomial landmarks.
inline constexpr const char* kWLeadingCoeff = "-197/4";
inline constexpr const char* kFiberDisc_3_3142 = "237148820284886963393462182944000";
inline constexpr const char* kFiberDisc_3_0 = "890561743239659349981218025848832";
inline constexpr const char* kEscapeResidual_6_3_3142 = "-189504";
inline constexpr const char* kSliceQuadDisc = "-1595";
inline constexpr int kChainLength_3_0 = 7;
inline constexpr double kW30Root0 = -2.787474798844256;
inline constexpr double kW30Root1 = 0.38735275644504175;
inline constexpr double kW3142GenuineRoot = -2.9719455484358344;

// Per-target preimage counts:
// {a, b, real, complex, zero multiplicity, escaping, boundary}.
struct FiberRow {
    const char* a;
    const char* b;
    int real, complex_total, zero_multiplicity, escaping, boundary;
};
inline constexpr FiberRow kFiberRows[9] = {
    {"3", "0", 2, 6, 0, 0, 0},
    {"3", "4000", 2, 6, 0, 0, 0},
    {"3", "3142", 1, 5, 0, 1, 0},
    {"0", "0", 0, 2, 4, 0, 0},
    {"-1", "0", 0, 2, 4, 0, 0},
    {"0", "208", 1, 5, 2, 1, 0},
    {"0", "7", 2, 6, 2, 0, 0},
    {"0", "-4", 2, 6, 2, 0, 2},
    {"-1", "-2", 2, 6, 2, 0, 2},
};

} // namespace fixtures
