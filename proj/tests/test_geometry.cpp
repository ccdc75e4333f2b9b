#include "doctest.h"

#include "theta/geometry.hpp"

#include <vector>

using namespace theta;

namespace {

ExactMatrix column(std::vector<GaussRat> v) {
    ExactMatrix m(int(v.size()), 1);
    for (int i = 0; i < int(v.size()); ++i) m(i, 0) = v[i];
    return m;
}

const GaussRat I = GaussRat::i();

// ambient rows of a diagram: quaternionic groups double each row, everything
// else is taken as-is
std::vector<SignedRow> ambient_rows(const SignedDiagram& d) {
    std::vector<SignedRow> out;
    for (const auto& r : d.rows) {
        switch (d.group.kind) {
            case GroupKind::Sppq:
                if (r.length % 2 == 0) {
                    out.push_back({r.length, Sign::plus});
                    out.push_back({r.length, Sign::minus});
                } else {
                    out.push_back(r);
                    out.push_back(r);
                }
                break;
            case GroupKind::OstarN:
                if (r.length % 2 == 1) {
                    out.push_back({r.length, Sign::plus});
                    out.push_back({r.length, Sign::minus});
                } else {
                    out.push_back(r);
                    out.push_back(r);
                }
                break;
            default: out.push_back(r);
        }
    }
    return out;
}

// survivor count: rank of x^l restricted to the sign-s subspace, read off the
// diagram combinatorially (boxes at position i survive l steps iff i+l <= L)
int oracle_rank(const SignedDiagram& d, int l, Sign s) {
    int r = 0;
    for (const auto& row : ambient_rows(d))
        for (int i = 1; i + l <= row.length; ++i)
            if (sign_at(row.leading_sign, i) == s) ++r;
    return r;
}

void check_rank_words(const SignedDiagram& d, const SymmetricSpaceElement& x) {
    ExactMatrix mp = x.Y, mm = x.X;
    int total = x.X.rows() + x.X.cols();
    CHECK(oracle_rank(d, 0, Sign::plus) == x.X.rows());
    CHECK(oracle_rank(d, 0, Sign::minus) == x.X.cols());
    for (int l = 1; l <= total; ++l) {
        CHECK(oracle_rank(d, l, Sign::plus) == mp.rank());
        CHECK(oracle_rank(d, l, Sign::minus) == mm.rank());
        mp = (l % 2 ? x.X : x.Y) * mp;
        mm = (l % 2 ? x.Y : x.X) * mm;
    }
}

// Cayley transform of an antisymmetric matrix: an exact orthogonal matrix
ExactMatrix cayley_orthogonal(const ExactMatrix& S) {
    ExactMatrix id = ExactMatrix::identity(S.rows());
    return (id - S) * (id + S).inverse();
}

} // namespace

TEST_CASE("moment maps on isotropic columns") {
    auto pair = DualPair::osp(3, 3, 1);
    WPoint w;
    w.A = column({GaussRat(1), I, GaussRat(0)});
    w.B = w.A;
    auto psi = moment_psi(pair, w);
    CHECK(psi.X.is_zero());
    CHECK(psi.Y.is_zero());
    auto phi = moment_phi(pair, w);
    CHECK(phi.X.rank() == 1);
    CHECK(phi.X == w.A * w.B.transpose());
}

TEST_CASE("signed Jordan types of hand-built elements") {
    auto opq = GroupTag::opq(3, 3);

    // zero element: all singletons
    SymmetricSpaceElement zero{ExactMatrix(3, 3), ExactMatrix(3, 3)};
    CHECK(diagram_to_text(signed_jordan_type(opq, zero)) == "[(+)(+)(+)(-)(-)(-)]");

    auto pair = DualPair::osp(3, 3, 1);
    WPoint both_iso;
    both_iso.A = column({GaussRat(1), I, GaussRat(0)});
    both_iso.B = both_iso.A;
    CHECK(diagram_to_text(signed_jordan_type(opq, moment_phi(pair, both_iso))) ==
          "[(+-)(-+)(+)(-)]");

    // isotropic p-side column against an anisotropic q-side column
    WPoint mixed;
    mixed.A = column({GaussRat(1), I, GaussRat(0)});
    mixed.B = column({GaussRat(1), GaussRat(0), GaussRat(0)});
    CHECK(diagram_to_text(signed_jordan_type(opq, moment_phi(pair, mixed))) ==
          "[(+-+)(+)(-)(-)]");

    // the mirror element generates its long chain on the other side
    WPoint mirrored;
    mirrored.A = mixed.B;
    mirrored.B = mixed.A;
    CHECK(diagram_to_text(signed_jordan_type(opq, moment_phi(pair, mirrored))) ==
          "[(-+-)(+)(+)(-)]");
}

TEST_CASE("non-nilpotent input is rejected") {
    // X = Y = I gives x^2 = identity on each block
    SymmetricSpaceElement x{ExactMatrix::identity(2), ExactMatrix::identity(2)};
    CHECK_THROWS_AS(signed_jordan_type(GroupTag::umn(2, 2), x), NotNilpotent);
}

TEST_CASE("representatives round-trip through jordan type extraction") {
    std::vector<GroupTag> groups = {GroupTag::sp2nR(1), GroupTag::sp2nR(2),
                                    GroupTag::sp2nR(3), GroupTag::umn(1, 1),
                                    GroupTag::umn(2, 1), GroupTag::umn(2, 2),
                                    GroupTag::ostar(2), GroupTag::ostar(3),
                                    GroupTag::ostar(4)};
    for (const auto& g : groups)
        for (const auto& d : enumerate_orbits(g)) {
            auto x = build_representative(g, d);
            CHECK(signed_jordan_type(g, x) == d);
            check_rank_words(d, x);
            if (g.kind == GroupKind::Sp2nR) {
                CHECK(x.X.is_symmetric());
                CHECK(x.Y.is_symmetric());
            }
            if (g.kind == GroupKind::OstarN) {
                CHECK(x.X.is_alternating());
                CHECK(x.Y.is_alternating());
            }
        }
}

TEST_CASE("sections hit their targets with full-rank frames") {
    auto pair = DualPair::osp(5, 5, 2);
    for (const auto& d : enumerate_orbits(pair.smaller())) {
        auto xp = build_representative(pair.smaller(), d);
        auto w = section(pair, xp);
        CHECK(moment_psi(pair, w) == xp);
        CHECK(w.A.rank() == 2);
        CHECK(w.B.rank() == 2);
    }
}

TEST_CASE("moment map equivariance") {
    auto pair = DualPair::osp(3, 3, 1);
    auto xp = build_representative(pair.smaller(), regular_hol_orbit_diagram(pair));
    auto w = section(pair, xp);

    // exact special orthogonal matrix acting on the p-side
    ExactMatrix S(3, 3);
    S(0, 1) = GaussRat(Rat(1) / 2);
    S(1, 0) = -S(0, 1);
    S(1, 2) = GaussRat(2);
    S(2, 1) = -S(1, 2);
    ExactMatrix Q = cayley_orthogonal(S);
    REQUIRE(Q.transpose() * Q == ExactMatrix::identity(3));

    WPoint rotated{Q * w.A, w.B, {}, {}};
    CHECK(moment_psi(pair, rotated) == xp); // psi is K-invariant
    auto g1 = signed_jordan_type(pair.larger(), moment_phi(pair, w));
    auto g2 = signed_jordan_type(pair.larger(), moment_phi(pair, rotated));
    CHECK(g1 == g2); // phi-image moves within one K-orbit

    // GL_1 = K' acting on the oscillator side: psi transforms, phi is invariant
    GaussRat t(Rat(3) / 2);
    WPoint scaled{w.A.scaled(t), w.B.scaled(GaussRat(1) / t), {}, {}};
    auto psi2 = moment_psi(pair, scaled);
    CHECK(psi2.X == xp.X.scaled(t * t));
    CHECK(psi2.Y == xp.Y.scaled((GaussRat(1) / t) * (GaussRat(1) / t)));
    CHECK(moment_phi(pair, scaled).X == moment_phi(pair, w).X);
}

TEST_CASE("null cone orbits") {
    auto pair = DualPair::osp(3, 3, 1);
    WPoint w;
    w.A = column({GaussRat(1), I, GaussRat(0)});
    w.B = ExactMatrix(3, 1);
    auto o = nullcone_orbit_of(pair, Side::plus, w);
    CHECK(o.r == 1);
    CHECK(o.dim == 2); // r(p+n) - r^2 - r(r+1)/2 at r=1; equals np - n(n+1)/2
    auto oz = nullcone_orbit_of(pair, Side::minus, w);
    CHECK(oz.r == 0);
    CHECK(oz.dim == 0);

    WPoint bad;
    bad.A = column({GaussRat(1), GaussRat(0), GaussRat(0)});
    bad.B = ExactMatrix(3, 1);
    CHECK_THROWS_AS(nullcone_orbit_of(pair, Side::plus, bad), NotInNullCone);

    // UU: both frames of the positive null cone, with ranks read separately
    auto uu = DualPair::uu(3, 3, 1, 1);
    WPoint wu;
    wu.A = column({GaussRat(1), GaussRat(0), GaussRat(0)});
    wu.B = column({GaussRat(0), GaussRat(1), GaussRat(0)});
    wu.C = ExactMatrix(3, 1);
    wu.D = ExactMatrix(3, 1);
    auto ou = nullcone_orbit_of(uu, Side::plus, wu);
    CHECK(ou.r == 1);
    CHECK(ou.s == 1);
    CHECK(ou.dim == 1 * 4 + 1 * 4 + 1 - 4);
}

TEST_CASE("verify_lift across full orbit enumerations") {
    for (auto pair : {DualPair::osp(3, 3, 1), DualPair::osp(5, 5, 2),
                      DualPair::uu(2, 2, 1, 1), DualPair::sp_ostar(2, 2, 1),
                      DualPair::sp_ostar(3, 3, 2)})
        for (const auto& d : enumerate_orbits(pair.smaller())) CHECK(verify_lift(pair, d));
}

TEST_CASE("lift of the regular holomorphic orbit matches the closed form") {
    auto pair = DualPair::osp(3, 3, 1);
    auto d = regular_hol_orbit_diagram(pair);
    auto x = moment_phi(pair, section(pair, build_representative(pair.smaller(), d)));
    CHECK(diagram_to_text(signed_jordan_type(pair.larger(), x)) == "[(+-+)(+)(-)(-)]");

    auto so = DualPair::sp_ostar(3, 3, 2);
    auto ds = regular_hol_orbit_diagram(so);
    auto xs = moment_phi(so, section(so, build_representative(so.smaller(), ds)));
    CHECK(diagram_to_text(signed_jordan_type(so.larger(), xs)) == "[(+-+)(+)(-)(-)]");
}
