#pragma once

// The named scalar families attached to the skein elements of the solid
// torus: symmetrizer expansion coefficients (x, alpha, beta, y), encircling
// eigenvalues (sigma, tau, theta) with their helpers (epsilon, eta), bracket
// evaluations and twist eigenvalues, the omega coefficients (t_i, t_bar_i,
// t_{i,p}, s_{i,p}), the two-way twist pairing T_{n,p}, and the lambda/kappa
// triangle behind the eigenvalue identity.
//
// All functions are pure and safe for concurrent callers. Families return
// QRational even where the value happens to be polynomial; callers reduce
// when they need polynomials.

#include "twistknot/laurent.hpp"

namespace twistknot::coeff {

/// x_{m,n}^i = (-1)^i [m choose i][n choose i] {i}! / {m+n-2;a}_i,
/// 0 <= i <= min(m, n).
QRational x_coeff(int m, int n, int i);

/// alpha_{m,n}^i = (-a)^{-i} q^{-i(m+n)+i(i+3)/2} {m}_i {n}_i / {i}!.
QRational alpha(int m, int n, int i);

/// alpha with (a, q) -> (a^{-1}, q^{-1}), evaluated from its own closed
/// form a^i q^{i(m+n)-i(i+3)/2} {m}_i {n}_i / {i}! (the mirror relation to
/// alpha is suite-verified, not assumed).
QRational alpha_bar(int m, int n, int i);

enum class BetaVariant { Plain, Antisym };

/// beta_{i,j:m,n}^k for 0 <= k <= i <= j <= min(m, n); the Antisym variant
/// substitutes q -> -q^{-1} throughout.
QRational beta(int i, int j, int m, int n, int k,
               BetaVariant variant = BetaVariant::Plain);

/// The beta closed form evaluated without the i <= j ordering requirement
/// (the symmetry identity pairs an in-range instance with a formally
/// evaluated one). Requires 0 <= k <= i <= min(m, n).
QRational beta_formula(int i, int j, int m, int n, int k,
                       BetaVariant variant = BetaVariant::Plain);

/// y^i_{m,n} = {m}_i {n}_i / ({i}! {m+n-i-1;a}_i).
QRational y_coeff(int m, int n, int i);

/// The exponent (-j+k)(i+n) + j(j+3)/2 - k(k+3)/2 from the sigma sum.
long long epsilon_exp(int i, int n, int j, int k);

/// eta_{n,k} = {n-k}{n+k-1;a}.
LaurentPoly2 eta(int n, int k);

/// Encircling eigenvalue of the i-th symmetrizer circle on D_{n,n}.
QRational sigma(int n, int i);

/// Encircling eigenvalue of the i-th antisymmetrizer circle on D_{n,n}:
/// tau_{n,i} = {-i+1;a}_i/{i}! + ({-i;a}_{i-1}/{i-1}!) {n}{n-1;a}
/// (second term is 0 at i = 0).
QRational tau(int n, int i);

/// The pre-simplification three-term form of tau; must reduce to tau.
QRational tau_raw(int n, int i);

/// theta_{n,i} = {n}_i {n+i-2;a}_i; vanishes exactly when i > n.
LaurentPoly2 theta(int n, int i);

QRational bracket_h(int n);  // <H_n> = {n-1;a}_n / {n}!
QRational bracket_e(int n);  // <E_n> = {-n+1;a}_n / {n}!

LaurentPoly2 twist_eigen_h(int n);          // a^n q^{n(n-1)}
LaurentPoly2 twist_eigen_e(int n);          // a^n (-q)^{-n(n-1)}
LaurentPoly2 twist_eigen_d(int m, int n);   // a^{m+n} q^{m(m-1)+n(n-1)}

/// <D_{m,n}> closed form, m >= n >= 0 (n = 0 collapses to <H_m>).
QRational bracket_d(int m, int n);

/// <D_{m,n}> as the x-coefficient sum; any m, n >= 0.
QRational bracket_d_sum(int m, int n);

QRational t_coeff(int i);  // t_i = a^i q^{i(i-1)/2} / {i}!
QRational t_bar(int i);    // (-1)^i a^{-i} q^{-i(i-1)/2} / {i}!

/// s_{i,p} = sum_k (-1)^k (a^k q^{k(k-1)})^{2p} / ({k}!{i-k}!) *
///           {2k-1;a}/{i+k-1;a}_{i+1}.
QRational s_p(int i, int p);

/// t_{i,p} = (-1)^i s_{i,p}; for p = +-1 collapses to t_i / t_bar_i.
QRational t_p(int i, int p);

/// The scalar T_{n,p} of the 2p-twisted symmetrizer pairing, computed by
/// expanding into (n-i, n-i)-symmetrizers.
QRational twist_pairing_sym(int n, int p);

/// The same scalar computed by encircling the twists with omega_n^p:
/// (-1)^n (a^n q^{n(n-1)})^{-2p} ({n}!)^2 t_{n,p}.
QRational twist_pairing_omega(int n, int p);

/// kappa_{i,j} = 2n(n-1) - n(i+j) - i(i-3)/2 + j(j+1)/2.
long long kappa_exp(int i, int j, int n);

/// lambda_{i,j} = a^{2n-i-j} q^{kappa_{i,j}} [i choose j] {n+i-j-2;a}_{i-j},
/// 0 <= j <= i <= n.
LaurentPoly2 lambda_entry(int i, int j, int n);

}  // namespace twistknot::coeff
