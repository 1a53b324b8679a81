#pragma once
#include <vector>

#include "dirac/matrix_function.hpp"
#include "dirac/symbol_family.hpp"

namespace pdir::dirac {

// Spectral projectors of pm at one frequency and the blocks of sgn(pm).
// Scalar blocks are coordinates in the basis {e_perp, e_r} of ran(p);
// the r-block concatenates (parallel_1..parallel_n, theta).
struct ModeProjectors {
    Frequency f;
    Mat chi_plus, chi_minus, pi_ran, sgn;
    Mat s_pp, s_pr, s_rp, s_rr;  // full blocks: 1x1, 1x(n+1), (n+1)x1, (n+1)x(n+1)
    cd spp{0.0}, spr{0.0}, srp{0.0}, srr{0.0};
    bool zero_mode = false;
};

ModeProjectors mode_projectors(const ModeSymbols& s, int n);

class SpectralProjectorSet {
public:
    explicit SpectralProjectorSet(const DiracSymbolFamily& fam);
    const DiracSymbolFamily& family() const { return fam_; }
    const ModeProjectors& operator[](std::size_t flat) const { return modes_[flat]; }
    std::size_t size() const { return modes_.size(); }

    // max over nonzero frequencies of the projector algebra residuals
    // (chi+ + chi- - pi, chi+^2 - chi+, chi-^2 - chi-, chi+ chi-, sgn^2 - pi), relative to |pi|
    double algebra_residual() const;
    // max over frequencies of |s_pp| and |s_rr| (full blocks)
    double diagonal_block_size() const;

private:
    DiracSymbolFamily fam_;
    std::vector<ModeProjectors> modes_;
};

// (Id + i lambda pm)^{-1}
Mat resolvent(const Mat& pm, double lambda, const std::string& where = "");

// max |arg(+-mu)| over nonzero eigenvalues mu of pm on the grid (the empirical sector angle)
double sector_angle(const DiracSymbolFamily& fam);

// sup over lambda in the set and over frequencies of |(Id + i lambda pm)^{-1}|
double resolvent_bound(const DiracSymbolFamily& fam, const std::vector<double>& lambdas);

}  // namespace pdir::dirac
