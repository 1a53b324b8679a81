#pragma once
#include <functional>
#include <string>

#include "dirac/coefficients.hpp"

namespace pdir::dirac {

// Holomorphic function on the open double sector, with its value on the kernel.
struct SectorFunction {
    std::string name;
    std::function<cd(cd)> f;
    cd at_zero{0.0, 0.0};
};

namespace funcs {
SectorFunction one();            // 1, b(0) = 1
SectorFunction identity();       // z, b(0) = 0
SectorFunction range_indicator(); // 1 off the kernel, b(0) = 0
SectorFunction chi_plus();       // 1 on Re z > 0
SectorFunction chi_minus();      // 1 on Re z < 0
SectorFunction sgn();            // chi_plus - chi_minus
SectorFunction exp_bracket(double lambda);    // e^{-lambda [z]}, b(0) = 1
SectorFunction exp_chi_plus(double lambda);   // e^{-lambda z} chi_plus(z), b(0) = 0
SectorFunction exp_chi_minus(double lambda);  // e^{lambda z} chi_minus(z), b(0) = 0
SectorFunction bracket_power(double s);       // [z]^s, b(0) = 0
}  // namespace funcs

// [z] = z sgn(Re z)
cd bracket(cd z);

enum class MatrixFunctionPath { eigen, schur_parlett };

struct MatrixFunctionResult {
    Mat value;
    MatrixFunctionPath path = MatrixFunctionPath::eigen;
    double eigvec_condition = 1.0;
};

// b(T) with b applied on the nonzero spectrum and b(0) on the kernel.
// Eigendecomposition first; if the eigenvector basis has condition > 1e8 the
// Schur-Parlett fallback is used. `where` names the frequency in error messages.
MatrixFunctionResult matrix_function_ex(const Mat& T, const SectorFunction& b, const std::string& where = "");
Mat matrix_function(const Mat& T, const SectorFunction& b, const std::string& where = "");
// Forces the fallback path (used by tests).
Mat schur_parlett(const Mat& T, const SectorFunction& b, const std::string& where = "");

std::string describe(const Frequency& f, int n);

}  // namespace pdir::dirac
