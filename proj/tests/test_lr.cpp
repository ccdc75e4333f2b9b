#include "doctest.h"

#include "theta/lr.hpp"

#include <map>
#include <vector>

using namespace theta;

namespace {

using Poly = std::map<std::vector<int>, Int>; // exponent vector -> coefficient

// Schur polynomial in nvars variables via semistandard tableau monomials
Poly schur_poly(const Partition& lam, int nvars) {
    Poly out;
    if (lam.length() > nvars) return out;
    std::vector<std::vector<int>> t(lam.length());
    for (int i = 0; i < lam.length(); ++i) t[i].assign(lam.parts[i], 0);
    std::vector<int> content(nvars, 0);
    auto rec = [&](auto&& self, int i, int j) -> void {
        if (i == lam.length()) {
            out[content] += 1;
            return;
        }
        int ni = i, nj = j + 1;
        if (nj >= lam.parts[i]) {
            ni = i + 1;
            nj = 0;
        }
        int lo = 1;
        if (j > 0) lo = std::max(lo, t[i][j - 1]);
        if (i > 0) lo = std::max(lo, t[i - 1][j] + 1);
        for (int v = lo; v <= nvars; ++v) {
            t[i][j] = v;
            content[v - 1]++;
            self(self, ni, nj);
            content[v - 1]--;
        }
    };
    if (lam.length() == 0) {
        out[std::vector<int>(nvars, 0)] = 1;
        return out;
    }
    rec(rec, 0, 0);
    return out;
}

Poly multiply(const Poly& a, const Poly& b) {
    Poly out;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            std::vector<int> e(ea.size());
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out[e] += ca * cb;
        }
    return out;
}

// expand a symmetric polynomial (known nonnegative Schur combination) in the
// Schur basis by peeling the lexicographically greatest exponent
std::map<Partition, Int> schur_expand(Poly f, int nvars) {
    std::map<Partition, Int> out;
    while (true) {
        auto it = f.rbegin();
        while (it != f.rend() && it->second == 0) ++it;
        if (it == f.rend()) break;
        Partition lam(it->first);
        REQUIRE(lam.is_valid()); // leading exponent of a Schur combination
        Int c = it->second;
        REQUIRE(c > 0);
        out[lam] = c;
        for (const auto& [e, sc] : schur_poly(lam, nvars)) f[e] -= c * sc;
    }
    return out;
}

// Pieri rule: s_mu * s_(k) = sum over lam adding a horizontal strip of size k
Int pieri_coeff(const Partition& lam, const Partition& mu, int k) {
    if (lam.size() != mu.size() + k || !lam.contains(mu)) return 0;
    // horizontal strip: mu_i >= lam_{i+1}
    for (int i = 0; i + 1 < lam.length(); ++i)
        if (mu.part(i) < lam.part(i + 1)) return 0;
    return 1;
}

} // namespace

TEST_CASE("lr_coefficient basic examples") {
    CHECK(lr_coefficient(Partition{2, 1}, Partition{1}, Partition{1, 1}) == 1);
    CHECK(lr_coefficient(Partition{2, 2}, Partition{2, 1}, Partition{1}) == 1);
    CHECK(lr_coefficient(Partition{2, 1}, Partition{2, 1}, Partition{}) == 1);
    CHECK(lr_coefficient(Partition{2, 2}, Partition{2, 1}, Partition{}) == 0);
    CHECK(lr_coefficient(Partition{3, 1}, Partition{1}, Partition{1, 1}) == 0);
    // the classical multiplicity-2 example
    CHECK(lr_coefficient(Partition{4, 3, 2}, Partition{2, 1}, Partition{3, 2, 1}) == 2);
    CHECK(lr_coefficient(Partition{3, 2, 1}, Partition{2, 1}, Partition{2, 1}) == 2);
}

TEST_CASE("lr_coefficient against the Pieri rule") {
    for (int sz = 0; sz <= 5; ++sz)
        for (const auto& mu : partitions_of(sz, 4))
            for (int k = 1; k <= 3; ++k)
                for (const auto& lam : partitions_of(sz + k, 4))
                    CHECK(lr_coefficient(lam, mu, Partition{k}) == pieri_coeff(lam, mu, k));
}

TEST_CASE("lr_coefficient symmetry and against Schur multiplication") {
    const int nvars = 6; // enough variables that no Schur term is truncated
    for (int a = 0; a <= 3; ++a)
        for (int b = 0; b <= 3; ++b)
            for (const auto& mu : partitions_of(a, 3))
                for (const auto& nu : partitions_of(b, 3)) {
                    auto prod = multiply(schur_poly(mu, nvars), schur_poly(nu, nvars));
                    auto expansion = schur_expand(prod, nvars);
                    for (const auto& lam : partitions_of(a + b, nvars)) {
                        Int expect = 0;
                        if (auto it = expansion.find(lam); it != expansion.end())
                            expect = it->second;
                        CHECK(lr_coefficient(lam, mu, nu) == expect);
                        CHECK(lr_coefficient(lam, mu, nu) == lr_coefficient(lam, nu, mu));
                    }
                }
}

TEST_CASE("dimension conservation at rank 3") {
    for (int a = 0; a <= 4; ++a)
        for (int b = 0; b <= 4; ++b)
            for (const auto& mu : partitions_of(a, 3))
                for (const auto& nu : partitions_of(b, 3)) {
                    Int total = 0;
                    for (const auto& lam : partitions_of(a + b, 3))
                        total += lr_coefficient(lam, mu, nu) * dim_gl(3, lam);
                    CHECK(total == dim_gl(3, mu) * dim_gl(3, nu));
                }
}

TEST_CASE("tensor_multiplicity_gl") {
    using WV = WeightVector;
    CHECK(tensor_multiplicity_gl(2, WV{Rat(0), Rat(0)}, WV{Rat(1), Rat(0)},
                                 WV{Rat(0), Rat(-1)}) == 1);
    CHECK(tensor_multiplicity_gl(2, WV{Rat(1), Rat(1)}, WV{Rat(1), Rat(0)},
                                 WV{Rat(1), Rat(0)}) == 1);
    CHECK(tensor_multiplicity_gl(3, WV{Rat(2), Rat(1), Rat(0)}, WV{Rat(1), Rat(1), Rat(0)},
                                 WV{Rat(1), Rat(0), Rat(0)}) == 1);
    // central character mismatch
    CHECK(tensor_multiplicity_gl(2, WV{Rat(1), Rat(0)}, WV{Rat(1), Rat(0)},
                                 WV{Rat(1), Rat(0)}) == 0);
    // adjoint (x) adjoint of GL_2 contains adjoint once
    CHECK(tensor_multiplicity_gl(2, WV{Rat(1), Rat(-1)}, WV{Rat(1), Rat(-1)},
                                 WV{Rat(1), Rat(-1)}) == 1);
    CHECK_THROWS_AS(tensor_multiplicity_gl(2, WV{Rat(0), Rat(1)}, WV{Rat(0), Rat(0)},
                                           WV{Rat(0), Rat(0)}),
                    NonDominantWeight);
}
