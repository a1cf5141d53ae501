// Published reference values for the 10-dimensional family (r = 2). Used by
// `verify-paper` and the acceptance suite.
#pragma once

#include <array>

namespace polystab::reference {

extern const std::array<std::array<int, 10>, 500> kMomentVertices;

extern const char* kVolume;            // printed b_0
extern const char* kFirstMoments[10];  // b_1 .. b_10
extern const char* kSecondMoments[55]; // upper triangle of c_ij, row-major

// printed potential display: coefficient 8 is absent from the source
extern const char* kCoeff1;
extern const char* kCoeff2;
extern const char* kCoeff3;
extern const char* kCoeff4;
extern const char* kCoeff5;
extern const char* kCoeff6;
extern const char* kCoeff7;
extern const char* kCoeff9;
extern const char* kCoeff10;
extern const char* kConstant;

extern const char* kMabuchi;
extern const int kArgmax[10];
extern const char* kOneMinusC;

extern const char* kVolPMinus;   // exact Vol(P^-)
extern const char* kIntegral;    // published value for the squared-deficit integral
extern const char* kDifference;  // e/f with (1-c) - rhs published as -e/f
extern const int kPMinusVertexCount;

}  // namespace polystab::reference
