#pragma once

#include <utility>
#include <vector>

#include "conflap/conformal_motion.hpp"
#include "conflap/diffop.hpp"
#include "conflap/numcheck.hpp"
#include "conflap/report.hpp"

namespace conflap {

// Common knobs for all verifiers. With shadow on, every exact pass gets a
// floating-point companion case sampled per shadow_cfg. inject_bug corrupts
// one expected operator on purpose (test harness hook for the failure path).
struct VerifyOptions {
    bool shadow = false;
    SampleConfig shadow_cfg{};
    bool inject_bug = false;
};

// All monomials in n variables of total degree <= max_degree, ascending.
std::vector<Polynomial> monomials_up_to(int n, int max_degree);

// Both sides of the flat factorization identity of order k:
//   LHS = [L + k(k-1)M_2] M_{-2} ... [L + 2 M_2] M_{-2} L
//   RHS = M_{1-k} L^k M_{1-k}
// where L is the Laplacian and M_w multiplies by 2^w (1+|y|^2)^(-w).
std::pair<DiffOp, DiffOp> build_rn_sides(int n, int k);

// Exact operator-level check of the factorization identity.
Report verify_rn(int n, int k, const VerifyOptions& opt = {});

// The four commutator identities, each as an exact operator identity:
//   [L, X]     = 2 L
//   [X, M_w]   = -w |y|^2 M_{w+1}                 for w in [w_min, w_max]
//   [L, M_w]   = -w M_w (2X + n - (w-1) M_1 |y|^2) M_1     (and the
//                alternative form -w M_{w+1} (2X + n - (w+1) M_1 |y|^2),
//                plus agreement of the two forms)
//   [L^k, M_{-1}] = k (2X + n + 2(k-1)) L^(k-1)   for k <= k_max
// including the coincidence of the k=1 case with the w=-1 alternative form.
Report verify_commutators(int n, int w_min, int w_max, int k_max,
                          const VerifyOptions& opt = {});

// f(C(y)) — thin wrapper over the motion's own pullback.
FnElem motion_pullback(const ConformalMotion& motion, const FnElem& f);

// Conformal covariance of L^k under one motion, checked on every monomial f
// of degree <= max_degree:
//   L^k f = (C^{-1})* ( Omega^(-n/2-k) L^k ( Omega^(n/2-k) (f o C) ) )
// Odd n with inversion-type motions routes through the radical extension.
Report verify_translaw(int n, int k, const ConformalMotion& motion, int max_degree,
                       const VerifyOptions& opt = {});
// Same check for one user-supplied polynomial.
Report verify_translaw_single(int n, int k, const ConformalMotion& motion,
                              const Polynomial& f, const VerifyOptions& opt = {});

// The generator family: translation by e1, the 3-4-5 rotation (n >= 2),
// dilation by 2, inversion; optionally all ordered length-2 compositions.
std::vector<ConformalMotion> default_motions(int n, bool include_pairs);

// verify_translaw over a motion family, one sub-report per motion.
Report verify_covariance(int n, int k, int max_degree, bool include_pairs,
                         const VerifyOptions& opt = {});

}  // namespace conflap
