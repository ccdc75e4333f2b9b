#pragma once

#include "theta/diagram.hpp"
#include "theta/lr.hpp"
#include "theta/partition.hpp"
#include "theta/rootdata.hpp"

#include <map>
#include <vector>

namespace theta {

// Label in R(K'_C): a partition of length <= n, or a partition pair
// (alpha, beta) with length(alpha) <= m, length(beta) <= n for the UU pair.
struct KPrimeLabel {
    Partition a, b;

    int total_size() const { return a.size() + b.size(); }
    auto operator<=>(const KPrimeLabel&) const = default;
    std::string to_string() const;
};

enum class Side { plus, minus };

struct GradingParityViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// one (label pair, multiplicity) term, with the product of the dimensions
// of the two factor representations cached for Hilbert-series projection
struct DecompEntry {
    KPrimeLabel plus_label, minus_label;
    Int mult;
    Int dim_product;

    bool operator==(const DecompEntry& o) const {
        return plus_label == o.plus_label && minus_label == o.minus_label &&
               mult == o.mult && dim_product == o.dim_product;
    }
    bool operator<(const DecompEntry& o) const {
        if (plus_label != o.plus_label) return plus_label < o.plus_label;
        return minus_label < o.minus_label;
    }
};

struct GradedDecomposition {
    int truncation_degree = 0;
    std::map<int, std::vector<DecompEntry>> entries; // degree -> sorted entries

    void add(int deg, const KPrimeLabel& t1, const KPrimeLabel& t2, const Int& mult,
             const Int& dim_product);
    void sort_entries();
    std::vector<Int> hilbert() const; // coefficients 0..truncation_degree
};

// dimension helpers for the representations attached to a label
Int dim_kplus(const DualPair& pair, const KPrimeLabel& tau);  // sigma^+(tau)
Int dim_kminus(const DualPair& pair, const KPrimeLabel& tau); // sigma^-(tau)
Int dim_lplus(const DualPair& pair, const KPrimeLabel& tau);  // rho^+(tau)
Int dim_kprime(const DualPair& pair, const KPrimeLabel& tau); // tau itself

// all labels in R(K'_C) of the given total size
std::vector<KPrimeLabel> r_labels(const DualPair& pair, int size);

// multiplicity of tau1 in tau2 (x) tau as K'_C representations
Int kprime_tensor_multiplicity(const DualPair& pair, const KPrimeLabel& tau1,
                               const KPrimeLabel& tau2, const KPrimeLabel& tau);

GradedDecomposition harmonics_series(const DualPair& pair, Side side, int K);

bool nullcone_hilbert_check(const DualPair& pair, Side side, int K);

GradedDecomposition decompose_trivial_lift(const DualPair& pair, int K);

GradedDecomposition decompose_regular_hol_lift(const DualPair& pair, int K);

struct LiftInput {
    KPrimeLabel tau;
    int degree = 0;
    Int mult = 1;
};

GradedDecomposition decompose_general_lift(const DualPair& pair,
                                           const std::vector<LiftInput>& input, int K);

// K'-decomposition of the polynomial ring on s'_+; entries complete for all
// internal degrees <= K, self-validated against 1/(1-t)^{dim s'_+}
std::vector<LiftInput> flat_space_input(const DualPair& pair, int K);

// coefficients 0..K of (1-t^2)^c / (1-t)^D
std::vector<Int> complete_intersection_series(int c, int D, int K);

} // namespace theta
