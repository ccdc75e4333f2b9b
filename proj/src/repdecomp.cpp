#include "theta/repdecomp.hpp"

#include <algorithm>
#include <stdexcept>

namespace theta {

std::string KPrimeLabel::to_string() const {
    if (b.empty() && a.empty()) return "()";
    if (b.empty()) return a.to_string();
    return a.to_string() + "x" + b.to_string();
}

void GradedDecomposition::add(int deg, const KPrimeLabel& t1, const KPrimeLabel& t2,
                              const Int& mult, const Int& dim_product) {
    if (mult == 0) return;
    auto& v = entries[deg];
    for (auto& e : v)
        if (e.plus_label == t1 && e.minus_label == t2) {
            e.mult += mult;
            return;
        }
    v.push_back({t1, t2, mult, dim_product});
}

void GradedDecomposition::sort_entries() {
    for (auto& [deg, v] : entries) std::sort(v.begin(), v.end());
}

std::vector<Int> GradedDecomposition::hilbert() const {
    std::vector<Int> h(truncation_degree + 1, 0);
    for (const auto& [deg, v] : entries) {
        if (deg < 0 || deg > truncation_degree) continue;
        for (const auto& e : v) h[deg] += e.mult * e.dim_product;
    }
    return h;
}

Int dim_kplus(const DualPair& pair, const KPrimeLabel& tau) {
    switch (pair.kind) {
        case PairKind::OSp: return dim_o(pair.p, tau.a);
        case PairKind::UU: return dim_gl(pair.p, odot(tau.a, tau.b, pair.p));
        case PairKind::SpOstar: return dim_sp(pair.p, tau.a);
    }
    return 0;
}

Int dim_kminus(const DualPair& pair, const KPrimeLabel& tau) {
    switch (pair.kind) {
        case PairKind::OSp: return dim_o(pair.q, tau.a);
        case PairKind::UU: return dim_gl(pair.q, odot(tau.a, tau.b, pair.q));
        case PairKind::SpOstar: return dim_sp(pair.q, tau.a);
    }
    return 0;
}

Int dim_lplus(const DualPair& pair, const KPrimeLabel& tau) {
    switch (pair.kind) {
        case PairKind::OSp: return dim_gl(pair.p, tau.a);
        case PairKind::UU: return dim_gl(pair.p, tau.a) * dim_gl(pair.p, tau.b);
        case PairKind::SpOstar: return dim_gl(2 * pair.p, tau.a);
    }
    return 0;
}

Int dim_kprime(const DualPair& pair, const KPrimeLabel& tau) {
    switch (pair.kind) {
        case PairKind::OSp:
        case PairKind::SpOstar: return dim_gl(pair.n, tau.a);
        case PairKind::UU: return dim_gl(pair.m, tau.a) * dim_gl(pair.n, tau.b);
    }
    return 0;
}

std::vector<KPrimeLabel> r_labels(const DualPair& pair, int size) {
    std::vector<KPrimeLabel> out;
    if (pair.kind == PairKind::UU) {
        for (int sa = 0; sa <= size; ++sa)
            for (const auto& a : partitions_of(sa, pair.m))
                for (const auto& b : partitions_of(size - sa, pair.n))
                    out.push_back({a, b});
    } else {
        for (const auto& a : partitions_of(size, pair.n)) out.push_back({a, {}});
    }
    std::sort(out.begin(), out.end());
    return out;
}

Int kprime_tensor_multiplicity(const DualPair& pair, const KPrimeLabel& tau1,
                               const KPrimeLabel& tau2, const KPrimeLabel& tau) {
    if (pair.kind == PairKind::UU)
        return lr_coefficient(tau1.a, tau2.a, tau.a) * lr_coefficient(tau1.b, tau2.b, tau.b);
    return lr_coefficient(tau1.a, tau2.a, tau.a);
}

GradedDecomposition harmonics_series(const DualPair& pair, Side side, int K) {
    GradedDecomposition out;
    out.truncation_degree = K;
    for (int k = 0; k <= K; ++k)
        for (const auto& tau : r_labels(pair, k)) {
            Int dk = side == Side::plus ? dim_kplus(pair, tau) : dim_kminus(pair, tau);
            out.add(k, tau, tau, 1, dk * dim_kprime(pair, tau));
        }
    out.sort_entries();
    return out;
}

std::vector<Int> complete_intersection_series(int c, int D, int K) {
    std::vector<Int> num(K + 1, 0);
    for (int j = 0; 2 * j <= K && j <= c; ++j)
        num[2 * j] = (j % 2 ? -1 : 1) * binomial(c, j);
    // divide by (1-t)^D: D-fold cumulative sums
    for (int d = 0; d < D; ++d)
        for (int k = 1; k <= K; ++k) num[k] += num[k - 1];
    return num;
}

bool nullcone_hilbert_check(const DualPair& pair, Side side, int K) {
    int c = 0, dimW = 0;
    int outer = side == Side::plus ? pair.p : pair.q;
    switch (pair.kind) {
        case PairKind::OSp:
            c = pair.n * (pair.n + 1) / 2;
            dimW = outer * pair.n;
            break;
        case PairKind::UU:
            c = pair.m * pair.n;
            dimW = outer * (pair.m + pair.n);
            break;
        case PairKind::SpOstar:
            c = pair.n * (pair.n - 1) / 2;
            dimW = 2 * outer * pair.n;
            break;
    }
    return harmonics_series(pair, side, K).hilbert() == complete_intersection_series(c, dimW, K);
}

GradedDecomposition decompose_trivial_lift(const DualPair& pair, int K) {
    GradedDecomposition out;
    out.truncation_degree = K;
    for (int k = 0; k <= K; ++k)
        for (const auto& tau : r_labels(pair, k))
            out.add(k, tau, tau, 1, dim_kplus(pair, tau) * dim_kminus(pair, tau));
    out.sort_entries();
    return out;
}

GradedDecomposition decompose_regular_hol_lift(const DualPair& pair, int K) {
    if (pair.kind == PairKind::UU && pair.m < pair.n)
        throw std::invalid_argument("regular holomorphic lift needs m >= n");
    GradedDecomposition out;
    out.truncation_degree = K;
    for (int k = 0; k <= K; ++k)
        for (const auto& tau : r_labels(pair, k))
            out.add(k, tau, tau, 1, dim_lplus(pair, tau) * dim_kminus(pair, tau));
    out.sort_entries();
    return out;
}

GradedDecomposition decompose_general_lift(const DualPair& pair,
                                           const std::vector<LiftInput>& input, int K) {
    GradedDecomposition out;
    out.truncation_degree = K;
    for (const auto& in : input) {
        if (in.mult == 0) continue;
        int tsz = in.tau.total_size();
        for (int s2 = 0; s2 + (tsz + 1) / 2 + in.degree <= 2 * K; ++s2) {
            for (const auto& tau2 : r_labels(pair, s2)) {
                std::vector<KPrimeLabel> t1s;
                if (pair.kind == PairKind::UU) {
                    for (const auto& a1 :
                         partitions_of(tau2.a.size() + in.tau.a.size(), pair.m))
                        for (const auto& b1 :
                             partitions_of(tau2.b.size() + in.tau.b.size(), pair.n))
                            t1s.push_back({a1, b1});
                } else {
                    for (const auto& a1 : partitions_of(s2 + tsz, pair.n))
                        t1s.push_back({a1, {}});
                }
                for (const auto& tau1 : t1s) {
                    Int m = kprime_tensor_multiplicity(pair, tau1, tau2, in.tau);
                    if (m == 0) continue;
                    int szsum = tau1.total_size() + tau2.total_size();
                    if (szsum % 2 != 0)
                        throw GradingParityViolation(
                            "nonzero multiplicity at half-integral degree");
                    int deg = szsum / 2 + in.degree;
                    if (deg > K) continue;
                    out.add(deg, tau1, tau2, m * in.mult,
                            dim_kplus(pair, tau1) * dim_kminus(pair, tau2));
                }
            }
        }
    }
    out.sort_entries();
    return out;
}

std::vector<LiftInput> flat_space_input(const DualPair& pair, int K) {
    std::vector<LiftInput> out;
    int dim_splus = 0;
    switch (pair.kind) {
        case PairKind::OSp: {
            dim_splus = pair.n * (pair.n + 1) / 2;
            for (int k = 0; k <= K; ++k) // partitions with all parts even
                for (const auto& mu : partitions_of(2 * k, pair.n)) {
                    bool even = true;
                    for (int part : mu.parts) even = even && part % 2 == 0;
                    if (even) out.push_back({{mu, {}}, k, 1});
                }
            break;
        }
        case PairKind::SpOstar: {
            dim_splus = pair.n * (pair.n - 1) / 2;
            for (int k = 0; k <= K; ++k) // partitions with all columns even
                for (const auto& mu : partitions_of(2 * k, pair.n)) {
                    bool colev = true;
                    for (int part : mu.conjugate().parts) colev = colev && part % 2 == 0;
                    if (colev) out.push_back({{mu, {}}, k, 1});
                }
            break;
        }
        case PairKind::UU: {
            dim_splus = pair.m * pair.n;
            for (int k = 0; k <= K; ++k)
                for (const auto& nu : partitions_of(k, std::min(pair.m, pair.n)))
                    out.push_back({{nu, nu}, k, 1});
            break;
        }
    }
    // self check: graded dimensions must match the polynomial ring on s'_+
    std::vector<Int> h(K + 1, 0);
    for (const auto& e : out) h[e.degree] += e.mult * dim_kprime(pair, e.tau);
    if (h != complete_intersection_series(0, dim_splus, K))
        throw std::logic_error("flat_space_input failed its dimension check");
    return out;
}

} // namespace theta
