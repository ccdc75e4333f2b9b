#include "theta/degree.hpp"

#include "theta/repdecomp.hpp"

#include <cmath>

namespace theta {

namespace {

// Gamma(k) for a positive integer argument
Int gamma_int(long k) {
    if (k <= 0) throw NonPositiveKappa("gamma at a non-positive integer");
    return factorial(k - 1);
}

Rat det(std::vector<std::vector<Rat>> m) {
    int n = int(m.size());
    Rat d = 1;
    for (int c = 0; c < n; ++c) {
        int pivot = -1;
        for (int i = c; i < n; ++i)
            if (m[i][c] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) return 0;
        if (pivot != c) {
            std::swap(m[pivot], m[c]);
            d = -d;
        }
        d *= m[c][c];
        for (int i = c + 1; i < n; ++i) {
            if (m[i][c] == 0) continue;
            Rat f = m[i][c] / m[c][c];
            for (int j = c; j < n; ++j) m[i][j] -= f * m[c][j];
        }
    }
    return d;
}

ExactPolynomial power_weight(int nvars, int first, int count, int expo) {
    ExactPolynomial::Exponents e(nvars, 0);
    for (int i = 0; i < count; ++i) e[first + i] = expo;
    return ExactPolynomial::monomial(nvars, e, 1);
}

// D_n(x^2)^s D_n(x)^t prod x_i^(kappa-1) in n variables
ExactPolynomial radial_integrand(long n, long kappa, int s, int t) {
    if (kappa <= 0) throw NonPositiveKappa("kappa must be positive");
    ExactPolynomial f = power_weight(int(n), 0, int(n), int(kappa - 1));
    for (int k = 0; k < s; ++k) f = f * difference_product(int(n), 0, int(n), 2);
    for (int k = 0; k < t; ++k) f = f * difference_product(int(n), 0, int(n), 1);
    return f;
}

Rat dirichlet_sum(const ExactPolynomial& f) {
    Rat sum = 0;
    for (const auto& [e, c] : f.terms()) sum += c * dirichlet_integral(e);
    return sum;
}

// blockwise simplex integration over Omega_nx x Omega_ny
Rat dirichlet_sum_split(const ExactPolynomial& f, int nx, int ny) {
    Rat sum = 0;
    for (const auto& [e, c] : f.terms()) {
        std::vector<int> ex(e.begin(), e.begin() + nx), ey(e.begin() + nx, e.end());
        sum += c * dirichlet_integral(ex) * dirichlet_integral(ey);
    }
    return sum;
}

enum class Embed { first_x, first_y, block };

struct FormFactor {
    RootSystem rs;
    Embed embed;
    int count = 0; // first_x / first_y: number of leading coordinates used
};

// linear form <xhat, alpha> where xhat places the x-block on the leading
// coordinates and (for the block embedding) the negated, reversed y-block on
// the trailing coordinates
ExactPolynomial root_form(const FormFactor& f, const Root& a, int nx, int ny) {
    std::vector<Rat> c(nx + ny, 0);
    switch (f.embed) {
        case Embed::first_x:
            for (int i = 0; i < f.count; ++i) c[i] = a[i];
            break;
        case Embed::first_y:
            for (int i = 0; i < f.count; ++i) c[nx + i] = a[i];
            break;
        case Embed::block: {
            int r = f.rs.rank;
            for (int i = 0; i < nx; ++i) c[i] = a[i];
            for (int t = 0; t < ny; ++t) c[nx + (ny - 1 - t)] -= Rat(a[r - ny + t]);
            break;
        }
    }
    return ExactPolynomial::linear(c);
}

std::vector<Root> factor_subset(const FormFactor& f, int nx, int ny) {
    if (f.embed == Embed::block) return phi_plus_subset(f.rs, ny, SubsetMode::block_mn, nx);
    return phi_plus_subset(f.rs, f.count, SubsetMode::first_n);
}

RootSystem orthogonal_system(int p) {
    return RootSystem(p % 2 ? RootType::B : RootType::D, p / 2);
}

struct FactorList {
    int nx = 0, ny = 0;
    Rat norm;
    std::vector<FormFactor> factors;
};

FactorList asymptotic_factors(const DualPair& pair, OrbitFamily orbit) {
    FactorList out;
    switch (pair.kind) {
        case PairKind::OSp:
            out.nx = pair.n;
            out.norm = Rat(1) / factorial(pair.n);
            if (orbit == OrbitFamily::trivial)
                out.factors = {{orthogonal_system(pair.p), Embed::first_x, pair.n},
                               {orthogonal_system(pair.q), Embed::first_x, pair.n}};
            else
                out.factors = {{RootSystem(RootType::A, pair.p), Embed::first_x, pair.n},
                               {orthogonal_system(pair.q), Embed::first_x, pair.n}};
            break;
        case PairKind::UU:
            out.nx = pair.m;
            out.ny = pair.n;
            out.norm = Rat(1) / (factorial(pair.m) * factorial(pair.n));
            if (orbit == OrbitFamily::trivial)
                out.factors = {{RootSystem(RootType::A, pair.p), Embed::block},
                               {RootSystem(RootType::A, pair.q), Embed::block}};
            else
                out.factors = {{RootSystem(RootType::A, pair.p), Embed::first_x, pair.m},
                               {RootSystem(RootType::A, pair.p), Embed::first_y, pair.n},
                               {RootSystem(RootType::A, pair.q), Embed::block}};
            break;
        case PairKind::SpOstar:
            out.nx = pair.n;
            out.norm = Rat(1) / factorial(pair.n);
            if (orbit == OrbitFamily::trivial)
                out.factors = {{RootSystem(RootType::C, pair.p), Embed::first_x, pair.n},
                               {RootSystem(RootType::C, pair.q), Embed::first_x, pair.n}};
            else
                out.factors = {{RootSystem(RootType::A, 2 * pair.p), Embed::first_x, pair.n},
                               {RootSystem(RootType::C, pair.q), Embed::first_x, pair.n}};
            break;
    }
    if (orbit == OrbitFamily::regular_hol && pair.kind == PairKind::UU && pair.m < pair.n)
        throw std::invalid_argument("regular holomorphic orbit needs m >= n");
    return out;
}

} // namespace

Rat dirichlet_integral(const std::vector<int>& exps) {
    long total = 0;
    Int num = 1;
    for (int a : exps) {
        if (a < 0) throw std::invalid_argument("negative exponent");
        num *= factorial(a);
        total += a;
    }
    return Rat(num) / factorial(long(exps.size()) + total);
}

Rat selberg_closed_form(long n, long kappa) {
    if (kappa <= 0) throw NonPositiveKappa("kappa must be positive");
    Int num = 1;
    mpz_ui_pow_ui(num.get_mpz_t(), 2, unsigned(n * (n - 1) / 2));
    for (long i = 0; i < n; ++i) num *= factorial(i) * gamma_int(kappa + 2 * i);
    return Rat(num) / gamma_int(3 * n * (n - 1) / 2 + n * kappa + 1);
}

double selberg_closed_form_real(long n, double kappa) {
    if (kappa <= 0) throw NonPositiveKappa("kappa must be positive");
    double lg = (double(n * (n - 1)) / 2) * std::log(2.0);
    for (long i = 0; i < n; ++i)
        lg += std::lgamma(double(i + 1)) + std::lgamma(kappa + 2 * i);
    lg -= std::lgamma(double(3 * n * (n - 1)) / 2 + n * kappa + 1);
    return std::exp(lg);
}

Rat selberg_lhs_exact(long n, long kappa) {
    return dirichlet_sum(radial_integrand(n, kappa, 1, 1)) / factorial(n);
}

Rat dsquared_closed_form(long n, long kappa) {
    if (kappa <= 0) throw NonPositiveKappa("kappa must be positive");
    Int num = 1;
    for (long i = 0; i < n; ++i) num *= gamma_int(kappa + 2 * i);
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n));
    for (long i = 1; i <= n; ++i)
        for (long j = 1; j <= n; ++j)
            m[i - 1][j - 1] = Rat(pochhammer(Int(kappa + 2 * i - 2), 2 * j - 2));
    return Rat(num) / gamma_int(2 * n * (n - 1) + n * kappa + 1) * det(std::move(m));
}

Rat dsquared_expansion(long n, long kappa) {
    return dirichlet_sum(radial_integrand(n, kappa, 2, 0)) / factorial(n);
}

bool laplace_identity_check(int n, const ExactPolynomial& f) {
    if (f.nvars() != n) throw std::invalid_argument("variable count mismatch");
    int deg = f.homogeneous_degree(); // throws NotHomogeneous
    Int left_gamma = factorial(long(n) + deg);
    for (const auto& [e, c] : f.terms()) {
        Int prod = 1;
        for (int a : e) prod *= factorial(a);
        if (Rat(left_gamma) * dirichlet_integral(e) != Rat(prod)) return false;
    }
    return true;
}

LeadingForm leading_degree_form(const DualPair& pair, OrbitFamily orbit, size_t monomial_cap) {
    if (!pair.in_stable_range())
        throw std::invalid_argument("leading_degree_form requires the stable range");
    FactorList fl = asymptotic_factors(pair, orbit);
    LeadingForm out;
    out.nx = fl.nx;
    out.ny = fl.ny;
    out.poly = ExactPolynomial::constant(fl.nx + fl.ny, 1);
    out.prefactor = 1;
    for (const auto& f : fl.factors) {
        auto subset = factor_subset(f, fl.nx, fl.ny);
        out.prefactor *= rho_product_prefactor(f.rs, subset);
        for (const auto& a : subset)
            out.poly = out.poly.multiply(root_form(f, a, fl.nx, fl.ny), monomial_cap);
    }
    return out;
}

Rat degree_asymptotic(const DualPair& pair, OrbitFamily orbit, size_t monomial_cap) {
    LeadingForm lf = leading_degree_form(pair, orbit, monomial_cap);
    FactorList fl = asymptotic_factors(pair, orbit);
    int vars = lf.nx + lf.ny;
    int deg = lf.poly.homogeneous_degree();
    return Rat(factorial(vars + deg)) * fl.norm * lf.prefactor * dirichlet_sum(lf.poly);
}

std::pair<int, Int> degree_hilbert_fit(const std::vector<Int>& series) {
    std::vector<Int> cur = series;
    for (int d = 0;; ++d) {
        if (cur.size() < 3) throw NotStabilized("series too short to stabilize");
        size_t k = cur.size();
        if (cur[k - 1] == cur[k - 2] && cur[k - 2] == cur[k - 3] && cur[k - 1] != 0)
            return {d, cur[k - 1]};
        for (size_t i = 0; i + 1 < k; ++i) cur[i] = cur[i + 1] - cur[i];
        cur.pop_back();
    }
}

Rat degree_paper_literal(const DualPair& pair, OrbitFamily orbit, size_t monomial_cap) {
    if (!pair.in_stable_range())
        throw std::invalid_argument("degree_paper_literal requires the stable range");
    bool triv = orbit == OrbitFamily::trivial;
    int p = pair.p, q = pair.q, n = pair.n;
    switch (pair.kind) {
        case PairKind::OSp: {
            long kappa = triv ? p + q - 2 * n + 1 : p + q - 3 * n + 1;
            ExactPolynomial f = radial_integrand(n, kappa, triv ? 2 : 1, triv ? 0 : 1);
            Rat pref = rho_product_prefactor(
                orthogonal_system(p),
                phi_plus_subset(orthogonal_system(p), n, SubsetMode::first_n));
            if (triv) {
                pref *= rho_product_prefactor(
                    orthogonal_system(q),
                    phi_plus_subset(orthogonal_system(q), n, SubsetMode::first_n));
            } else {
                RootSystem aq(RootType::A, q);
                pref *= rho_product_prefactor(aq, phi_plus_subset(aq, n, SubsetMode::first_n));
            }
            return pref * dirichlet_sum(f) / factorial(n);
        }
        case PairKind::SpOstar: {
            long kappa = triv ? 2 * (p + q) - 4 * n + 3 : 2 * (p + q) - 3 * n + 2;
            ExactPolynomial f = radial_integrand(n, kappa, triv ? 2 : 1, triv ? 0 : 1);
            RootSystem cp(RootType::C, p), cq(RootType::C, q);
            Rat pref = rho_product_prefactor(cp, phi_plus_subset(cp, n, SubsetMode::first_n));
            if (triv) {
                pref *= rho_product_prefactor(cq, phi_plus_subset(cq, n, SubsetMode::first_n));
            } else {
                RootSystem a2q(RootType::A, 2 * q);
                pref *= rho_product_prefactor(a2q, phi_plus_subset(a2q, n, SubsetMode::first_n));
            }
            Int two_power;
            mpz_ui_pow_ui(two_power.get_mpz_t(), 2, unsigned(triv ? 2 * n : n));
            return Rat(two_power) * pref * dirichlet_sum(f) / factorial(n);
        }
        case PairKind::UU: {
            int m = pair.m;
            if (!triv && m < n)
                throw std::invalid_argument("regular holomorphic orbit needs m >= n");
            int ax = triv ? p + q - 2 * (m + n) : p + q - (2 * m + n);
            int ay = triv ? p + q - 2 * (m + n) : p + q - (m + 2 * n);
            int vars = m + n;
            ExactPolynomial::Exponents weight(vars, 0);
            for (int i = 0; i < m; ++i) weight[i] = ax;
            for (int j = 0; j < n; ++j) weight[m + j] = ay;
            ExactPolynomial f = ExactPolynomial::monomial(vars, weight, 1);
            f = f.multiply(difference_product(vars, 0, m, 1), monomial_cap);
            f = f.multiply(difference_product(vars, 0, m, 1), monomial_cap);
            f = f.multiply(difference_product(vars, m, n, 1), monomial_cap);
            f = f.multiply(difference_product(vars, m, n, 1), monomial_cap);
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < n; ++j) {
                    std::vector<Rat> c(vars, 0);
                    c[i] = 1;
                    c[m + j] = 1;
                    ExactPolynomial cross = ExactPolynomial::linear(c);
                    f = f.multiply(cross, monomial_cap);
                    if (triv) f = f.multiply(cross, monomial_cap);
                }
            RootSystem ap(RootType::A, p), aq(RootType::A, q);
            Rat pref =
                rho_product_prefactor(ap, phi_plus_subset(ap, n, SubsetMode::block_mn, m));
            if (triv) {
                pref *= rho_product_prefactor(aq,
                                              phi_plus_subset(aq, n, SubsetMode::block_mn, m));
            } else {
                pref *= rho_product_prefactor(aq, phi_plus_subset(aq, m, SubsetMode::first_n));
                pref *= rho_product_prefactor(aq, phi_plus_subset(aq, n, SubsetMode::first_n));
            }
            return pref * dirichlet_sum_split(f, m, n) / (factorial(m) * factorial(n));
        }
    }
    throw std::logic_error("unreachable");
}

DegreeReport degree_report(const DualPair& pair, OrbitFamily orbit, size_t monomial_cap) {
    DegreeReport rep;
    LeadingForm lf = leading_degree_form(pair, orbit, monomial_cap);
    rep.d_projective = lf.nx + lf.ny + lf.poly.homogeneous_degree() - 1;
    rep.asymptotic = degree_asymptotic(pair, orbit, monomial_cap);
    rep.literal = degree_paper_literal(pair, orbit, monomial_cap);

    int K = rep.d_projective + 5;
    auto series = orbit == OrbitFamily::trivial
                      ? decompose_trivial_lift(pair, K).hilbert()
                      : decompose_regular_hol_lift(pair, K).hilbert();
    auto [d, e] = degree_hilbert_fit(series);
    rep.hilbert_fit = e;
    rep.agree_asym_fit = d == rep.d_projective && Rat(e) == rep.asymptotic;
    rep.agree_literal_asym = rep.literal == rep.asymptotic;
    return rep;
}

} // namespace theta
