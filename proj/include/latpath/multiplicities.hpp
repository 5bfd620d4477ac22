#ifndef LATPATH_MULTIPLICITIES_HPP
#define LATPATH_MULTIPLICITIES_HPP

#include "latpath/coefficient_table.hpp"
#include "latpath/root_system.hpp"

namespace latpath {

/// m_N(lambda; nu) looked up in a precomputed table of k^N coefficients.
BigInt weightMultiplicity(const WeightDiagram& d, const CoefficientTable& table,
                          long long n, const IntVec& nu);
BigInt weightMultiplicity(const WeightDiagram& d, long long n, const IntVec& nu,
                          const CountOptions& opts = {});

/// a_N(lambda; mu) by the alternating Weyl sum over weight multiplicities.
BigInt irreducibleMultiplicity(const WeightDiagram& d, const CoefficientTable& table,
                               long long n, const IntVec& mu);
BigInt irreducibleMultiplicity(const WeightDiagram& d, long long n, const IntVec& mu,
                               const CountOptions& opts = {});

/// mu + rho - w rho, the shifted arguments of the alternating sum.
IntVec rhoShiftedWeight(const RootSystemData& r, const WeylElement& w, const IntVec& mu);

}  // namespace latpath

#endif
