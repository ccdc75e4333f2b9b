#pragma once

#include "theta/diagram.hpp"
#include "theta/matrix.hpp"
#include "theta/repdecomp.hpp"

namespace theta {

struct NotNilpotent : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotInNullCone : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DegenerateSample : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Off-diagonal blocks of a nilpotent in s or s' relative to V = V+ (+) V-:
// X maps V- into V+, Y maps V+ into V-.
struct SymmetricSpaceElement {
    ExactMatrix X, Y;

    bool operator==(const SymmetricSpaceElement& o) const { return X == o.X && Y == o.Y; }
};

// A point of W = W+ (+) W-.  OSp: A is p x n, B is q x n (C, D unused).
// UU: W+ = (A, B) with A p x m, B p x n; W- = (C, D) with C q x m, D q x n.
// SpOstar: A is 2p x n, B is 2q x n.
struct WPoint {
    ExactMatrix A, B, C, D;
};

// standard symplectic form matrix [[0, I_k], [-I_k, 0]]
ExactMatrix Jmat(int k);

// (tAA, tBB) / (tAB, tDC) / (tA J_p A, tB J_q B); exact
SymmetricSpaceElement moment_psi(const DualPair& pair, const WPoint& w);

// A tB (with its forced partner block) / (A tC, D tB); exact
SymmetricSpaceElement moment_phi(const DualPair& pair, const WPoint& w);

struct NullconeOrbit {
    int r = 0, s = 0; // s only meaningful for UU
    long dim = 0;
};

// rank data and orbit dimension of a point of the one-sided null cone;
// requires the matching component of moment_psi to vanish
NullconeOrbit nullcone_orbit_of(const DualPair& pair, Side side, const WPoint& w);

// signed Jordan type of a nilpotent element of s or s'; row lengths are read
// off rank words, the leading sign of a row is the space containing the
// generator of its chain.  For Sppq and OstarN the quaternionic/ambient
// doubling is folded back to the half-size classification diagram.
SignedDiagram signed_jordan_type(const GroupTag& g, const SymmetricSpaceElement& x);

// nilpotent representative of the orbit with the given diagram, for the
// smaller member of a dual pair (Sp2nR, Umn, OstarN); built from explicit
// graded chains compatible with the invariant form
SymmetricSpaceElement build_representative(const GroupTag& g, const SignedDiagram& d);

// exact w with moment_psi(pair, w) = x', generic in its fiber (full-rank
// certificates; throws DegenerateSample if a certificate fails)
WPoint section(const DualPair& pair, const SymmetricSpaceElement& xp);

// end-to-end check: the signed Jordan type of phi(section(representative(d')))
// equals the combinatorial lift of d'
bool verify_lift(const DualPair& pair, const SignedDiagram& dprime);

} // namespace theta
