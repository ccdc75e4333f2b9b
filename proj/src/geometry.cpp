#include "theta/geometry.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace theta {

namespace {

const GaussRat kOne(1);

void check_shape(const ExactMatrix& m, int r, int c, const char* what) {
    if (m.rows() != r || m.cols() != c) throw ShapeMismatch(std::string(what) + ": unexpected block shape");
}

ExactMatrix hstack(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.rows() != b.rows()) throw ShapeMismatch("hstack row mismatch");
    ExactMatrix m(a.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
        for (int j = 0; j < b.cols(); ++j) m(i, a.cols() + j) = b(i, j);
    }
    return m;
}

// congruence tracker: maintains M <- tE M E and T <- T E for column operations
struct Congruence {
    ExactMatrix M, T;

    explicit Congruence(const ExactMatrix& S) : M(S), T(ExactMatrix::identity(S.rows())) {}

    void add(int dst, int src, const GaussRat& f) { // col_dst += f col_src (and row)
        int n = M.rows();
        for (int i = 0; i < n; ++i) M(i, dst) += f * M(i, src);
        for (int j = 0; j < n; ++j) M(dst, j) += f * M(src, j);
        for (int i = 0; i < n; ++i) T(i, dst) += f * T(i, src);
    }
    void swap(int a, int b) {
        int n = M.rows();
        for (int i = 0; i < n; ++i) std::swap(M(i, a), M(i, b));
        for (int j = 0; j < n; ++j) std::swap(M(a, j), M(b, j));
        for (int i = 0; i < n; ++i) std::swap(T(i, a), T(i, b));
    }
    void scale(int col, const GaussRat& f) {
        int n = M.rows();
        for (int i = 0; i < n; ++i) M(i, col) *= f;
        for (int j = 0; j < n; ++j) M(col, j) *= f;
        for (int i = 0; i < n; ++i) T(i, col) *= f;
    }
};

// diagonalize a symmetric matrix by congruence: returns (D, T) with D = tT S T
Congruence diagonalize_symmetric(const ExactMatrix& S) {
    Congruence c(S);
    int n = S.rows();
    for (int k = 0; k < n; ++k) {
        if (c.M(k, k).is_zero()) {
            int j = -1;
            for (int t = k + 1; t < n; ++t)
                if (!c.M(k, t).is_zero()) {
                    j = t;
                    break;
                }
            if (j < 0) continue; // zero row, zero diagonal entry
            if (!c.M(j, j).is_zero())
                c.swap(k, j);
            else
                c.add(k, j, kOne); // makes M(k,k) = 2 M(k,j) != 0
        }
        for (int i = k + 1; i < n; ++i)
            if (!c.M(i, k).is_zero()) c.add(i, k, -(c.M(i, k) / c.M(k, k)));
    }
    return c;
}

// standardize an alternating matrix by congruence: D = tT S T consists of
// 2x2 blocks [[0,1],[-1,0]] on consecutive index pairs, plus zero rows
Congruence standardize_alternating(const ExactMatrix& S) {
    Congruence c(S);
    int n = S.rows();
    int k = 0;
    while (k < n) {
        int j = -1;
        for (int t = k + 1; t < n; ++t)
            if (!c.M(k, t).is_zero()) {
                j = t;
                break;
            }
        if (j < 0) {
            ++k;
            continue;
        }
        if (j != k + 1) c.swap(k + 1, j);
        c.scale(k + 1, kOne / c.M(k, k + 1));
        for (int i = k + 2; i < n; ++i) {
            if (!c.M(k, i).is_zero()) c.add(i, k + 1, -c.M(k, i));
            if (!c.M(k + 1, i).is_zero()) c.add(i, k, c.M(k + 1, i));
        }
        k += 2;
    }
    return c;
}

// frame A (rows x n) with tA A = S, built on disjoint 2-row pairs so that the
// rank certificate is structural; needs 2n <= rows
ExactMatrix sym_frame(const ExactMatrix& S, int rows) {
    int n = S.rows();
    if (2 * n > rows) throw DegenerateSample("not enough room for an exact symmetric frame");
    Congruence c = diagonalize_symmetric(S);
    ExactMatrix U(rows, n);
    const GaussRat half(Rat(1) / 2), minus_half_i(Rat(0), Rat(-1) / 2);
    for (int k = 0; k < n; ++k) {
        GaussRat d = c.M(k, k);
        // (u, v) with u^2 + v^2 = d and (u, v) != 0 for every d
        U(2 * k, k) = (d + kOne) * half;
        U(2 * k + 1, k) = (d - kOne) * minus_half_i;
    }
    return U * c.T.inverse();
}

// frame A (2p x n) with tA J_p A = S alternating; columns realized on fresh
// symplectic pairs (e_r, e_{p+r}); needs n <= p
ExactMatrix alt_frame(const ExactMatrix& S, int p) {
    int n = S.rows();
    if (n > p) throw DegenerateSample("not enough room for an exact alternating frame");
    Congruence c = standardize_alternating(S);
    ExactMatrix U(2 * p, n);
    int top = 0, k = 0;
    while (k < n) {
        if (k + 1 < n && c.M(k, k + 1) == kOne) {
            U(top, k) = kOne;
            U(p + top, k + 1) = kOne;
            ++top;
            k += 2;
        } else {
            U(top, k) = kOne; // isotropic direction for a zero column
            ++top;
            k += 1;
        }
    }
    return U * c.T.inverse();
}

// (dim V+, dim V-) for the space a symmetric-space element of g acts on
std::pair<int, int> block_dims(const GroupTag& g) {
    switch (g.kind) {
        case GroupKind::Sp2nR: return {g.n, g.n};
        case GroupKind::Opq: return {g.p, g.q};
        case GroupKind::Umn: return {g.p, g.q};
        case GroupKind::OstarN: return {g.n, g.n};
        case GroupKind::Sppq: return {2 * g.p, 2 * g.q};
    }
    return {0, 0};
}

// chain-length multiplicities N[L][sign of generator] from rank words
std::map<int, std::pair<int, int>> chain_counts(const ExactMatrix& X, const ExactMatrix& Y) {
    int dp = X.rows(), dm = X.cols();
    std::vector<int> rp{dp}, rm{dm}; // rp[l] = rank of x^l restricted to V+
    ExactMatrix mp = Y, mm = X;
    for (int l = 1;; ++l) {
        int a = mp.rank(), b = mm.rank();
        rp.push_back(a);
        rm.push_back(b);
        if (a == 0 && b == 0) break;
        if (l > dp + dm) throw NotNilpotent("alternating word ranks do not vanish");
        mp = (l % 2 ? X : Y) * mp;
        mm = (l % 2 ? Y : X) * mm;
    }
    auto r = [&](int l, Sign s) {
        const auto& v = s == Sign::plus ? rp : rm;
        return l < int(v.size()) ? v[l] : 0;
    };
    auto D = [&](int l, Sign s) { return r(l, s) - r(l + 1, s); };
    std::map<int, std::pair<int, int>> N;
    int maxL = int(std::max(rp.size(), rm.size()));
    for (int L = 1; L <= maxL; ++L) {
        int np = D(L - 1, Sign::plus) - D(L, Sign::minus);
        int nm = D(L - 1, Sign::minus) - D(L, Sign::plus);
        if (np < 0 || nm < 0) throw NotNilpotent("inconsistent rank word data");
        if (np || nm) N[L] = {np, nm};
    }
    return N;
}

struct Chain {
    int length;
    Sign lead;
    std::vector<int> idx; // per-position coordinate index within its space
};

} // namespace

ExactMatrix Jmat(int k) {
    ExactMatrix J(2 * k, 2 * k);
    for (int i = 0; i < k; ++i) {
        J(i, k + i) = kOne;
        J(k + i, i) = -kOne;
    }
    return J;
}

SymmetricSpaceElement moment_psi(const DualPair& pair, const WPoint& w) {
    switch (pair.kind) {
        case PairKind::OSp:
            check_shape(w.A, pair.p, pair.n, "moment_psi");
            check_shape(w.B, pair.q, pair.n, "moment_psi");
            return {w.A.transpose() * w.A, w.B.transpose() * w.B};
        case PairKind::UU:
            check_shape(w.A, pair.p, pair.m, "moment_psi");
            check_shape(w.B, pair.p, pair.n, "moment_psi");
            check_shape(w.C, pair.q, pair.m, "moment_psi");
            check_shape(w.D, pair.q, pair.n, "moment_psi");
            return {w.A.transpose() * w.B, w.D.transpose() * w.C};
        case PairKind::SpOstar:
            check_shape(w.A, 2 * pair.p, pair.n, "moment_psi");
            check_shape(w.B, 2 * pair.q, pair.n, "moment_psi");
            return {w.A.transpose() * Jmat(pair.p) * w.A,
                    w.B.transpose() * Jmat(pair.q) * w.B};
    }
    throw std::logic_error("unreachable");
}

SymmetricSpaceElement moment_phi(const DualPair& pair, const WPoint& w) {
    switch (pair.kind) {
        case PairKind::OSp: {
            check_shape(w.A, pair.p, pair.n, "moment_phi");
            check_shape(w.B, pair.q, pair.n, "moment_phi");
            ExactMatrix Z = w.A * w.B.transpose();
            return {Z, Z.transpose().scaled(-kOne)}; // partner block forced by o(p+q)
        }
        case PairKind::UU:
            check_shape(w.A, pair.p, pair.m, "moment_phi");
            check_shape(w.B, pair.p, pair.n, "moment_phi");
            check_shape(w.C, pair.q, pair.m, "moment_phi");
            check_shape(w.D, pair.q, pair.n, "moment_phi");
            return {w.A * w.C.transpose(), w.D * w.B.transpose()};
        case PairKind::SpOstar: {
            check_shape(w.A, 2 * pair.p, pair.n, "moment_phi");
            check_shape(w.B, 2 * pair.q, pair.n, "moment_phi");
            ExactMatrix Z = w.A * w.B.transpose();
            // partner block forced by sp(2(p+q)) with form diag(J_p, J_q)
            return {Z, Jmat(pair.q) * Z.transpose() * Jmat(pair.p)};
        }
    }
    throw std::logic_error("unreachable");
}

NullconeOrbit nullcone_orbit_of(const DualPair& pair, Side side, const WPoint& w) {
    long outer = side == Side::plus ? pair.p : pair.q;
    NullconeOrbit out;
    switch (pair.kind) {
        case PairKind::OSp: {
            const ExactMatrix& F = side == Side::plus ? w.A : w.B;
            check_shape(F, int(outer), pair.n, "nullcone_orbit_of");
            if (!(F.transpose() * F).is_zero())
                throw NotInNullCone("frame is not isotropic");
            long r = out.r = F.rank();
            out.dim = r * (outer + pair.n) - r * r - r * (r + 1) / 2;
            return out;
        }
        case PairKind::UU: {
            const ExactMatrix& F1 = side == Side::plus ? w.A : w.C;
            const ExactMatrix& F2 = side == Side::plus ? w.B : w.D;
            check_shape(F1, int(outer), pair.m, "nullcone_orbit_of");
            check_shape(F2, int(outer), pair.n, "nullcone_orbit_of");
            ExactMatrix prod = side == Side::plus ? w.A.transpose() * w.B
                                                  : w.D.transpose() * w.C;
            if (!prod.is_zero()) throw NotInNullCone("frames do not pair to zero");
            long r = out.r = F1.rank();
            long s = out.s = F2.rank();
            out.dim = r * (pair.m + outer) + s * (pair.n + outer) + r * s -
                      (r + s) * (r + s);
            return out;
        }
        case PairKind::SpOstar: {
            const ExactMatrix& F = side == Side::plus ? w.A : w.B;
            check_shape(F, int(2 * outer), pair.n, "nullcone_orbit_of");
            if (!(F.transpose() * Jmat(int(outer)) * F).is_zero())
                throw NotInNullCone("frame is not isotropic");
            long r = out.r = F.rank();
            out.dim = r * (2 * outer + pair.n) - r * r - r * (r - 1) / 2;
            return out;
        }
    }
    throw std::logic_error("unreachable");
}

SignedDiagram signed_jordan_type(const GroupTag& g, const SymmetricSpaceElement& x) {
    auto [dp, dm] = block_dims(g);
    check_shape(x.X, dp, dm, "signed_jordan_type");
    check_shape(x.Y, dm, dp, "signed_jordan_type");
    auto N = chain_counts(x.X, x.Y);

    SignedDiagram d;
    d.group = g;
    auto emit = [&](int L, Sign lead, int count) {
        for (int i = 0; i < count; ++i) d.rows.push_back({L, lead});
    };
    for (const auto& [L, counts] : N) {
        auto [np, nm] = counts;
        switch (g.kind) {
            case GroupKind::Sp2nR:
            case GroupKind::Opq:
            case GroupKind::Umn:
                emit(L, Sign::plus, np);
                emit(L, Sign::minus, nm);
                break;
            case GroupKind::Sppq:
                // quaternionic structure: even-length chains come in (+,-) pairs,
                // odd-length chains in same-lead pairs
                if (L % 2 == 0) {
                    if (np != nm)
                        throw std::invalid_argument("rank data incompatible with quaternionic folding");
                    emit(L, Sign::plus, np);
                } else {
                    if (np % 2 || nm % 2)
                        throw std::invalid_argument("rank data incompatible with quaternionic folding");
                    emit(L, Sign::plus, np / 2);
                    emit(L, Sign::minus, nm / 2);
                }
                break;
            case GroupKind::OstarN:
                if (L % 2 == 1) {
                    if (np != nm)
                        throw std::invalid_argument("rank data incompatible with quaternionic folding");
                    emit(L, Sign::plus, np);
                } else {
                    if (np % 2 || nm % 2)
                        throw std::invalid_argument("rank data incompatible with quaternionic folding");
                    emit(L, Sign::plus, np / 2);
                    emit(L, Sign::minus, nm / 2);
                }
                break;
        }
    }
    d.canonicalize();
    return d;
}

SymmetricSpaceElement build_representative(const GroupTag& g, const SignedDiagram& d) {
    if (g.kind == GroupKind::Opq || g.kind == GroupKind::Sppq)
        throw std::invalid_argument("representatives are built for the smaller member only");
    SignedDiagram c = d;
    c.canonicalize();
    auto v = validate_diagram(c);
    if (!v.ok) throw std::invalid_argument("build_representative: invalid diagram");

    // ambient chains and the list of form-paired chain indices
    std::vector<Chain> chains;
    std::vector<std::pair<int, int>> paired;
    if (g.kind == GroupKind::OstarN) {
        for (const auto& row : c.rows) {
            int a = int(chains.size());
            if (row.length % 2 == 1) { // lead is + for valid diagrams
                chains.push_back({row.length, Sign::plus, {}});
                chains.push_back({row.length, Sign::minus, {}});
            } else {
                chains.push_back({row.length, row.leading_sign, {}});
                chains.push_back({row.length, row.leading_sign, {}});
            }
            paired.push_back({a, a + 1});
        }
    } else {
        for (const auto& row : c.rows) chains.push_back({row.length, row.leading_sign, {}});
        if (g.kind == GroupKind::Sp2nR) {
            std::map<int, std::pair<std::vector<int>, std::vector<int>>> by_len;
            for (int i = 0; i < int(chains.size()); ++i) {
                if (chains[i].length % 2 == 0) {
                    paired.push_back({i, i});
                    continue;
                }
                auto& [ps, ms] = by_len[chains[i].length];
                (chains[i].lead == Sign::plus ? ps : ms).push_back(i);
            }
            for (auto& [L, lists] : by_len) {
                auto& [ps, ms] = lists;
                if (ps.size() != ms.size())
                    throw std::invalid_argument("odd-length rows do not pair up");
                for (size_t i = 0; i < ps.size(); ++i) paired.push_back({ps[i], ms[i]});
            }
        }
    }

    int P = 0, M = 0;
    for (auto& ch : chains) {
        ch.idx.resize(ch.length);
        for (int i = 1; i <= ch.length; ++i)
            ch.idx[i - 1] = sign_at(ch.lead, i) == Sign::plus ? P++ : M++;
    }

    ExactMatrix Xg(P, M), Yg(M, P);
    for (const auto& ch : chains)
        for (int i = 1; i < ch.length; ++i) {
            if (sign_at(ch.lead, i) == Sign::plus)
                Yg(ch.idx[i], ch.idx[i - 1]) = kOne;
            else
                Xg(ch.idx[i], ch.idx[i - 1]) = kOne;
        }

    if (g.kind == GroupKind::Umn) return {Xg, Yg};

    // invariant form on the chain basis: paired chains of length L satisfy
    // beta(u_i, v_j) = (-1)^(i-1) for i + j = L + 1, extended by the symmetry
    // epsilon of the ambient form
    if (P != M) throw std::invalid_argument("unbalanced box signature");
    GaussRat eps = g.kind == GroupKind::Sp2nR ? -kOne : kOne;
    ExactMatrix Om(P, M);
    for (auto [a, b] : paired) {
        const Chain& u = chains[a];
        const Chain& v = chains[b];
        int L = u.length;
        for (int i = 1; i <= L; ++i) {
            int j = L + 1 - i;
            GaussRat val = (i % 2 ? kOne : -kOne);
            if (sign_at(u.lead, i) == Sign::plus) {
                assert(sign_at(v.lead, j) == Sign::minus);
                Om(u.idx[i - 1], v.idx[j - 1]) = val;
            } else {
                assert(sign_at(v.lead, j) == Sign::plus);
                Om(v.idx[j - 1], u.idx[i - 1]) = eps * val;
            }
        }
    }

    ExactMatrix OmInv = Om.inverse();
    SymmetricSpaceElement out{Xg * OmInv, Om * Yg};
    bool ok = g.kind == GroupKind::Sp2nR
                  ? out.X.is_symmetric() && out.Y.is_symmetric()
                  : out.X.is_alternating() && out.Y.is_alternating();
    if (!ok || signed_jordan_type(g, out) != c)
        throw std::logic_error("build_representative failed its own certificate");
    return out;
}

WPoint section(const DualPair& pair, const SymmetricSpaceElement& xp) {
    WPoint w;
    switch (pair.kind) {
        case PairKind::OSp:
            check_shape(xp.X, pair.n, pair.n, "section");
            check_shape(xp.Y, pair.n, pair.n, "section");
            w.A = sym_frame(xp.X, pair.p);
            w.B = sym_frame(xp.Y, pair.q);
            if (w.A.rank() != pair.n || w.B.rank() != pair.n)
                throw DegenerateSample("frame rank certificate failed");
            break;
        case PairKind::UU: {
            check_shape(xp.X, pair.m, pair.n, "section");
            check_shape(xp.Y, pair.n, pair.m, "section");
            w.A = ExactMatrix(pair.p, pair.m);
            w.B = ExactMatrix(pair.p, pair.n);
            w.C = ExactMatrix(pair.q, pair.m);
            w.D = ExactMatrix(pair.q, pair.n);
            for (int i = 0; i < pair.m; ++i) w.A(i, i) = kOne;
            for (int i = 0; i < pair.m; ++i)
                for (int j = 0; j < pair.n; ++j) w.B(i, j) = xp.X(i, j);
            for (int j = 0; j < pair.n; ++j) w.B(pair.m + j, j) = kOne;
            for (int i = 0; i < pair.n; ++i) w.D(i, i) = kOne;
            for (int i = 0; i < pair.n; ++i)
                for (int j = 0; j < pair.m; ++j) w.C(i, j) = xp.Y(i, j);
            for (int j = 0; j < pair.m; ++j) w.C(pair.n + j, j) = kOne;
            if (hstack(w.A, w.B).rank() != pair.m + pair.n ||
                hstack(w.C, w.D).rank() != pair.m + pair.n)
                throw DegenerateSample("frame rank certificate failed");
            break;
        }
        case PairKind::SpOstar:
            check_shape(xp.X, pair.n, pair.n, "section");
            check_shape(xp.Y, pair.n, pair.n, "section");
            w.A = alt_frame(xp.X, pair.p);
            w.B = alt_frame(xp.Y, pair.q);
            if (w.A.rank() != pair.n || w.B.rank() != pair.n)
                throw DegenerateSample("frame rank certificate failed");
            break;
    }
    if (!(moment_psi(pair, w) == xp))
        throw std::logic_error("section failed to hit its target");
    return w;
}

bool verify_lift(const DualPair& pair, const SignedDiagram& dprime) {
    if (!pair.in_stable_range())
        throw std::invalid_argument("verify_lift requires the stable range");
    SymmetricSpaceElement xp = build_representative(pair.smaller(), dprime);
    WPoint w = section(pair, xp);
    SignedDiagram lifted = signed_jordan_type(pair.larger(), moment_phi(pair, w));
    return lifted == theta_lift_diagram(pair, dprime);
}

} // namespace theta
