#pragma once

#include "theta/rational.hpp"
#include "theta/partition.hpp"

#include <stdexcept>
#include <vector>

namespace theta {

enum class RootType { A, B, C, D };

// Root in the epsilon-basis: integer coefficient vector of length = rank.
using Root = std::vector<int>;

// Weight in the epsilon-basis.
using WeightVector = std::vector<Rat>;

struct IndexOutOfRange : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NonDominantWeight : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A_{r-1} is constructed as RootSystem(A, r): rank = r coordinates.
struct RootSystem {
    RootType type;
    int rank;
    std::vector<Root> positive_roots;

    RootSystem(RootType t, int r);
};

WeightVector rho(const RootSystem& rs);

Rat inner(const WeightVector& a, const Root& b);

enum class SubsetMode { first_n, block_mn };

// first_n: roots not orthogonal to eps_1..eps_n.
// block_mn: {eps_i - eps_j : i <= m or rank - n < j} (type A only).
std::vector<Root> phi_plus_subset(const RootSystem& rs, int n, SubsetMode mode, int m = 0);

bool is_dominant(const RootSystem& rs, const WeightVector& lam);

Int weyl_dim(const RootSystem& rs, const WeightVector& lam);

Rat rho_product_prefactor(const RootSystem& rs, const std::vector<Root>& subset);

// Convenience dimension formulas used throughout the decomposition engines.
WeightVector weight_from_partition(const Partition& lam, int rank);

// Irreducible rational GL_r representation with dominant weight lam
// (length-r weakly decreasing integer vector, negative entries allowed).
Int dim_gl(int r, const WeightVector& lam);
Int dim_gl(int r, const Partition& lam);

// dim of the O(p,C) representation labelled by a partition with
// length(lam) <= [p/2] via the B/D Weyl dimension formula.
Int dim_o(int p, const Partition& lam);

// dim of the Sp(2p,C) representation labelled by a partition, type C_p.
Int dim_sp(int p, const Partition& lam);

// mixed weight (alpha_1..alpha_m, 0,...,0, -beta_n,...,-beta_1) of length r
WeightVector odot(const Partition& alpha, const Partition& beta, int r);

} // namespace theta
