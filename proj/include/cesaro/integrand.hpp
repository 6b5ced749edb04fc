#pragma once

#include <string>
#include <variant>

#include "cesaro/big_complex.hpp"

namespace cesaro {

// The five integrand families, all to be integrated over theta in [0, pi].
// CesaroReal and CesaroComplex are the same function written two ways; their
// agreement is itself one of the checked identities.
struct CesaroReal {
  long n;  // e^{e^{cos t} cos(sin t)} sin(e^{cos t} sin(sin t)) sin nt
};
struct CesaroComplex {
  long n;  // Im(e^{e^{e^{it}}}) sin nt
};
struct PowerKernel {
  long j;  // Im(e^{j e^{it}}) sin nt
  long n;
};
struct BlockKernel {
  long k;  // Im((e^{e^{it}} - 1)^k / k!) sin nt
  long n;
};
struct SineProduct {
  long m;  // sin mt sin nt
  long n;
};

using IntegrandKind =
    std::variant<CesaroReal, CesaroComplex, PowerKernel, BlockKernel,
                 SineProduct>;

// Throws std::invalid_argument unless n >= 1 for the Cesaro variants and all
// indices are nonnegative elsewhere.
void validate(const IntegrandKind& kind);

// Short stable name with parameters, e.g. "power(j=3,n=4)".
std::string describe(const IntegrandKind& kind);

// Highest angular frequency present with significant weight; node counts are
// sized proportionally to it.
long oscillation_index(const IntegrandKind& kind);

// Value at theta to within 2^(-p+16) absolute error, any real theta.
// Throws std::invalid_argument if p < 53 or the kind is invalid.
BigReal eval(const IntegrandKind& kind, const BigReal& theta, Precision p);

// Upper bound on |eval| over all theta, computed at precision p.
// Cesaro: e^e; PowerKernel(j): e^j; BlockKernel(k): (e+1)^k/k!
// (|e^{e^{it}} - 1| <= e + 1); SineProduct: 1.
BigReal magnitude_bound(const IntegrandKind& kind, Precision p);

}  // namespace cesaro
