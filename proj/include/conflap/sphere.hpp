#pragma once

#include <string>
#include <vector>

#include "conflap/flat_verify.hpp"

namespace conflap {

// x_1^2 + ... + x_{n+1}^2 - 1 in n+1 ambient variables.
Polynomial sphere_ideal_generator(int n);
// 1 + x_{n+1}, the radical base for half-integer sphere weights. Its square
// root generates the weights because 1 + x_{n+1} is not a square in the
// sphere's coordinate ring.
Polynomial sphere_radical_base(int n);

// Canonical representative mod the sphere ideal: every x_{n+1}^e with e >= 2
// is rewritten via x_{n+1}^2 -> 1 - x_1^2 - ... - x_n^2, leaving degree <= 1
// in x_{n+1}. Idempotent.
Polynomial reduce_poly_mod_sphere(int n, const Polynomial& p);
// Componentwise on num/den (and on both radical components). Throws
// DomainError when a denominator vanishes identically on the sphere.
FnElem reduce_mod_sphere(int n, const FnElem& f);

// A function on S^n \ {south pole}: an ambient rational or radical element in
// n+1 variables, stored as its canonical reduced representative. Equality is
// cross-multiplication followed by reduction to zero; in radical mode both
// components must vanish.
class SphereFunction {
public:
    SphereFunction(int n, FnElem ambient_value);

    int n() const { return n_; }
    int ambient_vars() const { return n_ + 1; }
    const FnElem& value() const { return value_; }

    bool is_zero() const;
    bool equals(const SphereFunction& o) const;

    friend SphereFunction operator+(const SphereFunction& a, const SphereFunction& b);
    friend SphereFunction operator-(const SphereFunction& a, const SphereFunction& b);
    friend SphereFunction operator*(const SphereFunction& a, const SphereFunction& b);
    friend SphereFunction operator*(const Rational& c, const SphereFunction& a);

    std::string str() const { return value_.str('x'); }

private:
    int n_;
    FnElem value_;
};

// Laplace-Beltrami via the ambient formula: for any smooth extension F,
// (Delta_S u) = (Delta F - E^2 F - (n-1) E F) reduced mod the ideal, with E
// the ambient Euler operator. Extension independence is a tested invariant.
SphereFunction sphere_laplacian(const SphereFunction& u);

// c_j = (n/2 + j - 1)(n/2 - j) for j = 1..k.
std::vector<Rational> c_constants(int n, int k);

// The factorized sphere operator prod_j (Delta_S - c_j) of order 2k.
struct SphereOpSpec {
    int n = 0;
    int k = 0;
    std::vector<Rational> constants;
    static SphereOpSpec make(int n, int k);
};
SphereFunction sphere_power_apply(const SphereOpSpec& spec, const SphereFunction& u);

// f(y) -> f(x' / (1 + x_{n+1})), the pullback along stereographic projection.
SphereFunction stereographic_pullback(int n, const RationalFunction& f);

// Multiplication by (1 + x_{n+1})^(twice_w / 2); odd twice_w routes through
// the radical extension.
SphereFunction weight_mult(int n, long twice_w, const SphereFunction& u);

// Eigenvalue of the order-2k operator on degree-l spherical harmonics:
// prod_j (-l(l+n-1) - c_j).
Rational spectrum_eigenvalue(int n, int k, int l);

// Ambient zonal-type harmonics of degree l along the x_1 and x_{n+1} axes,
// solved exactly and checked by Delta h = 0.
std::vector<Polynomial> harmonic_basis(int n, int l);

// sigma = inverse stereographic map. Checks D sigma^T D sigma =
// (2/(1+|y|^2))^2 I_n exactly, plus sigma*(1 + x_{n+1}) = 2/(1+|y|^2).
Report verify_conformality(int n, const VerifyOptions& opt = {});

// Phi*(M_w f) = (1+x_{n+1})^w Phi* f for integer w.
Report verify_intertwining_weight(int n, long w, const RationalFunction& f,
                                  const VerifyOptions& opt = {});

// Second-order intertwining (the Yamabe case), on monomials of degree <=
// max_degree: (Delta_S - c_1) M^(1-n/2) Phi* f = M^(-1-n/2) Phi* (Delta f).
Report verify_yamabe(int n, int max_degree, const VerifyOptions& opt = {});

// Order-2k intertwining on monomials of degree <= max_degree:
// prod_j(Delta_S - c_j) M^(k-n/2) Phi* f = M^(-k-n/2) Phi* (Delta^k f).
Report verify_main(int n, int k, int max_degree, const VerifyOptions& opt = {});

// Applies the factorized operator to explicit harmonics and confirms the
// closed-form eigenvalues mu_l.
Report spectrum_check(int n, int k, int l_max, const VerifyOptions& opt = {});

}  // namespace conflap
