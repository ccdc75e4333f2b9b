#pragma once

#include "theta/diagram.hpp"
#include "theta/polynomial.hpp"
#include "theta/rootdata.hpp"

#include <utility>
#include <vector>

namespace theta {

struct NonPositiveKappa : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotStabilized : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class OrbitFamily { trivial, regular_hol };

// exact simplex integral of prod x_i^{a_i} over {x_i >= 0, sum <= 1}
Rat dirichlet_integral(const std::vector<int>& exps);

// closed form of (1/n!) Int_{Omega_n} D_n(x^2) D_n(x) prod x_i^{kappa-1} dx
Rat selberg_closed_form(long n, long kappa);
double selberg_closed_form_real(long n, double kappa);
// the same integral by monomial expansion and Dirichlet integration
Rat selberg_lhs_exact(long n, long kappa);

// the two routes for (1/n!) Int_{Omega_n} D_n(x^2)^2 prod x_i^{kappa-1} dx:
// Pochhammer-determinant closed form, and direct expansion
Rat dsquared_closed_form(long n, long kappa);
Rat dsquared_expansion(long n, long kappa);

// Gamma(a+1) * simplex integral = product-of-Gamma integral over the orthant,
// verified monomial by monomial for a homogeneous polynomial
bool laplace_identity_check(int n, const ExactPolynomial& f);

// leading homogeneous form of the graded dimension function: a product of
// <xhat, alpha> over root subsets, with the product of <rho, alpha>^{-1} kept
// as a separate prefactor
struct LeadingForm {
    int nx = 0, ny = 0; // y-variables occur only for the UU pair
    ExactPolynomial poly;
    Rat prefactor;
};

LeadingForm leading_degree_form(const DualPair& pair, OrbitFamily orbit,
                                size_t monomial_cap = 1000000);

// (deg P + #vars)! * symmetry normalization * prefactor * simplex integral
Rat degree_asymptotic(const DualPair& pair, OrbitFamily orbit,
                      size_t monomial_cap = 1000000);

// (d, e) from iterated finite differences of a graded dimension series
std::pair<int, Int> degree_hilbert_fit(const std::vector<Int>& series);

// verbatim evaluation of the displayed closed-form degree expression,
// reported side by side with the derived routes
Rat degree_paper_literal(const DualPair& pair, OrbitFamily orbit,
                         size_t monomial_cap = 1000000);

struct DegreeReport {
    int d_projective = 0;
    Rat asymptotic;
    Int hilbert_fit = 0;
    Rat literal;
    bool agree_asym_fit = false;
    bool agree_literal_asym = false;
};

DegreeReport degree_report(const DualPair& pair, OrbitFamily orbit,
                           size_t monomial_cap = 1000000);

} // namespace theta
