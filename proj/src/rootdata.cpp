#include "theta/rootdata.hpp"

namespace theta {

RootSystem::RootSystem(RootType t, int r) : type(t), rank(r) {
    if (r < 1) throw IndexOutOfRange("rank must be positive");
    auto root = [&](int i, int ci, int j, int cj) {
        Root a(rank, 0);
        a[i] = ci;
        if (j >= 0) a[j] += cj;
        positive_roots.push_back(std::move(a));
    };
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j) {
            root(i, 1, j, -1);                         // eps_i - eps_j
            if (t != RootType::A) root(i, 1, j, 1);    // eps_i + eps_j
        }
    if (t == RootType::B)
        for (int i = 0; i < r; ++i) root(i, 1, -1, 0); // eps_i
    if (t == RootType::C)
        for (int i = 0; i < r; ++i) root(i, 2, -1, 0); // 2 eps_i
}

WeightVector rho(const RootSystem& rs) {
    WeightVector r(rs.rank, Rat(0));
    for (const auto& a : rs.positive_roots)
        for (int i = 0; i < rs.rank; ++i) r[i] += Rat(a[i]) / 2;
    return r;
}

Rat inner(const WeightVector& a, const Root& b) {
    Rat s = 0;
    for (size_t i = 0; i < b.size(); ++i)
        if (b[i] != 0) s += a[i] * b[i];
    return s;
}

std::vector<Root> phi_plus_subset(const RootSystem& rs, int n, SubsetMode mode, int m) {
    std::vector<Root> out;
    if (mode == SubsetMode::first_n) {
        if (n < 0 || n > rs.rank) throw IndexOutOfRange("first_n: n out of range");
        for (const auto& a : rs.positive_roots) {
            bool touches = false;
            for (int i = 0; i < n; ++i)
                if (a[i] != 0) touches = true;
            if (touches) out.push_back(a);
        }
    } else {
        if (rs.type != RootType::A) throw IndexOutOfRange("block_mn: type A only");
        if (m < 0 || n < 0 || m + n > rs.rank) throw IndexOutOfRange("block_mn: m+n out of range");
        for (const auto& a : rs.positive_roots) {
            int i = 0, j = 0;
            for (int k = 0; k < rs.rank; ++k) {
                if (a[k] == 1) i = k;
                if (a[k] == -1) j = k;
            }
            if (i < m || j >= rs.rank - n) out.push_back(a);
        }
    }
    return out;
}

bool is_dominant(const RootSystem& rs, const WeightVector& lam) {
    if (static_cast<int>(lam.size()) != rs.rank) return false;
    for (int i = 0; i + 1 < rs.rank; ++i)
        if (lam[i] < lam[i + 1]) return false;
    if (rs.type == RootType::B || rs.type == RootType::C) {
        if (lam.back() < 0) return false;
    } else if (rs.type == RootType::D) {
        if (rs.rank >= 2 && lam[rs.rank - 2] + lam[rs.rank - 1] < 0) return false;
    }
    return true;
}

Int weyl_dim(const RootSystem& rs, const WeightVector& lam) {
    if (!is_dominant(rs, lam)) throw NonDominantWeight("weight not dominant");
    WeightVector r = rho(rs), lr = r;
    for (int i = 0; i < rs.rank; ++i) lr[i] += lam[i];
    Rat prod = 1;
    for (const auto& a : rs.positive_roots) prod *= inner(lr, a) / inner(r, a);
    prod.canonicalize();
    if (prod.get_den() != 1 || prod <= 0)
        throw NonDominantWeight("Weyl dimension is not a positive integer");
    return prod.get_num();
}

Rat rho_product_prefactor(const RootSystem& rs, const std::vector<Root>& subset) {
    WeightVector r = rho(rs);
    Rat prod = 1;
    for (const auto& a : subset) prod /= inner(r, a);
    prod.canonicalize();
    return prod;
}

WeightVector weight_from_partition(const Partition& lam, int rank) {
    if (lam.length() > rank) throw NonDominantWeight("partition longer than rank");
    WeightVector w(rank, Rat(0));
    for (int i = 0; i < lam.length(); ++i) w[i] = lam.parts[i];
    return w;
}

Int dim_gl(int r, const WeightVector& lam) {
    return weyl_dim(RootSystem(RootType::A, r), lam);
}

Int dim_gl(int r, const Partition& lam) {
    if (lam.length() > r) return 0;
    return dim_gl(r, weight_from_partition(lam, r));
}

Int dim_o(int p, const Partition& lam) {
    int h = p / 2;
    if (lam.length() > h) throw NonDominantWeight("dim_o: partition too long");
    RootSystem rs(p % 2 ? RootType::B : RootType::D, h);
    return weyl_dim(rs, weight_from_partition(lam, h));
}

Int dim_sp(int p, const Partition& lam) {
    if (lam.length() > p) throw NonDominantWeight("dim_sp: partition too long");
    return weyl_dim(RootSystem(RootType::C, p), weight_from_partition(lam, p));
}

WeightVector odot(const Partition& alpha, const Partition& beta, int r) {
    if (alpha.length() + beta.length() > r)
        throw NonDominantWeight("odot: labels too long for rank");
    WeightVector w(r, Rat(0));
    for (int i = 0; i < alpha.length(); ++i) w[i] = alpha.parts[i];
    for (int i = 0; i < beta.length(); ++i) w[r - 1 - i] = -beta.parts[i];
    return w;
}

} // namespace theta
