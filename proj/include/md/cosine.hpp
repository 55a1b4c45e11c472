#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "md/polynomial.hpp"

namespace md {

// C(t) = 1 + sum_k c_k cos(2 pi k t), support positive, sorted, distinct.
struct CosinePolynomial {
    std::vector<std::int64_t> support;
    std::vector<Rat> coeffs;

    Rat c0() const;  // C(0) = 1 + sum c_k
    // exact value at rational x = cos(2 pi t) via the Chebyshev form
    Rat eval_cos(const Rat& x) const;
};

CosinePolynomial make_cosine(std::vector<std::int64_t> support, std::vector<Rat> coeffs);

// 1 + sum c_k T_k(x), the polynomial whose values on [-1,1] are C's values.
Poly chebyshev_form(const CosinePolynomial& c);

struct SturmCertificate {
    bool nonnegative;
    std::size_t sign_change_roots;  // odd-multiplicity roots found in (-1, 1)
    Rat min_sample;                 // smallest probed value of C
    std::optional<Rat> witness_x;   // x = cos(2 pi t) with C < 0, when negative
    std::string detail;
};

// Exact nonnegativity decision for C on the circle: Sturm root count of the
// odd-multiplicity part of the Chebyshev form on (-1,1) plus endpoint and
// gap-sample signs.
SturmCertificate sturm_certify(const CosinePolynomial& c);

struct FejerBound {
    Rat bound;  // 1/(n+1)
    CosinePolynomial poly;
};

// Extremal polynomial for support {1..n}: c_k = 2(1 - k/(n+1)), C(0) = n+1.
FejerBound fejer_bound(std::size_t n);

struct CosineLpResult {
    CosinePolynomial candidate;  // uncertified grid maximizer
    Rat objective;               // grid-LP optimum of C(0)
    std::size_t grid_size;
    Rat margin;
};

inline constexpr std::size_t kLpGridFactor = 512;  // default grid = 512 * max k

// max C(0) s.t. C(t_i) >= margin on t_i = i/(2 grid), exact-rational simplex
// on the dual. cos values rounded to denominator 2^40.
CosineLpResult cosine_lp(const std::vector<std::int64_t>& support, std::size_t grid_size,
                         const Rat& margin = Rat(1, 1000000));

struct DelsarteBound {
    Rat bound;  // certified 1/C(0)
    CosinePolynomial poly;
    SturmCertificate certificate;
    std::string method;
};

// Certified upper bound 1/C(0) for D = {k x : k in support}. With supplied
// coefficients, certifies exactly those; support {1..N} uses the Fejer
// polynomial; otherwise the LP candidate is rounded/shrunk until Sturm
// certifies it. Throws CertificationFailed if no attempt certifies.
DelsarteBound delsarte_upper_bound(const std::vector<std::int64_t>& support,
                                   std::size_t grid_size = 0,
                                   const std::optional<std::vector<Rat>>& coeffs = std::nullopt);

}  // namespace md
