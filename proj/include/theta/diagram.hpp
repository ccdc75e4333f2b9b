#pragma once

#include <string>
#include <vector>
#include <stdexcept>

namespace theta {

enum class Sign { plus, minus };

inline Sign flip(Sign s) { return s == Sign::plus ? Sign::minus : Sign::plus; }
inline char sign_char(Sign s) { return s == Sign::plus ? '+' : '-'; }

// Sign at 1-based position j of a row with the given leading sign.
inline Sign sign_at(Sign lead, int j) { return (j % 2 == 1) ? lead : flip(lead); }

enum class GroupKind { Sp2nR, Opq, Umn, OstarN, Sppq };

// A classical symmetric-pair group with the parameters its diagrams depend on.
struct GroupTag {
    GroupKind kind;
    int p = 0, q = 0; // Opq, Sppq: (p,q); Umn: (m,n) stored as (p,q)
    int n = 0;        // Sp2nR, OstarN

    static GroupTag sp2nR(int n) { return {GroupKind::Sp2nR, 0, 0, n}; }
    static GroupTag opq(int p, int q) { return {GroupKind::Opq, p, q, 0}; }
    static GroupTag umn(int m, int n) { return {GroupKind::Umn, m, n, 0}; }
    static GroupTag ostar(int n) { return {GroupKind::OstarN, 0, 0, n}; }
    static GroupTag sppq(int p, int q) { return {GroupKind::Sppq, p, q, 0}; }

    int diagram_size() const;
    bool has_signature() const {
        return kind == GroupKind::Opq || kind == GroupKind::Umn || kind == GroupKind::Sppq;
    }
    // (#plus boxes, #minus boxes) constraint where one exists
    std::pair<int, int> signature() const { return {p, q}; }

    auto operator<=>(const GroupTag&) const = default;
    std::string to_string() const;
};

struct SignedRow {
    int length = 1;
    Sign leading_sign = Sign::plus;

    int plus_boxes() const {
        return leading_sign == Sign::plus ? (length + 1) / 2 : length / 2;
    }
    int minus_boxes() const { return length - plus_boxes(); }
    Sign last_sign() const { return sign_at(leading_sign, length); }

    auto operator<=>(const SignedRow&) const = default;
};

// Canonical order: descending length, +-leading rows first within a length.
struct SignedDiagram {
    GroupTag group;
    std::vector<SignedRow> rows;

    void canonicalize();
    bool is_canonical() const;
    int total_boxes() const;
    std::pair<int, int> box_signature() const;
    auto operator<=>(const SignedDiagram&) const = default;
};

struct ValidationResult {
    bool ok = true;
    std::vector<std::string> violations;
};

ValidationResult validate_diagram(const SignedDiagram& d);

struct ParameterOverflow : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<SignedDiagram> enumerate_orbits(const GroupTag& g, long cap = 200000);

enum class PairKind { OSp, UU, SpOstar };

// One of the three stable-range dual pairs (G, G').
struct DualPair {
    PairKind kind;
    int p = 0, q = 0; // larger member parameters
    int m = 0, n = 0; // smaller member parameters (m only for UU)

    static DualPair osp(int p, int q, int n);    // (O(p,q), Sp(2n,R)), 2n < min(p,q)
    static DualPair uu(int p, int q, int m, int n); // (U(p,q), U(m,n)), m+n <= min(p,q)
    static DualPair sp_ostar(int p, int q, int n);  // (Sp(p,q), O*(2n)), n <= min(p,q)

    bool in_stable_range() const;
    GroupTag larger() const;
    GroupTag smaller() const;
    std::string to_string() const;
};

struct LiftInfeasible : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Add one box to the right of each row, then append singletons to meet the
// size and signature of the larger member.
SignedDiagram theta_lift_diagram(const DualPair& pair, const SignedDiagram& d);

// Distinguished orbits of the smaller member.
SignedDiagram zero_orbit_diagram(const GroupTag& g);
SignedDiagram regular_hol_orbit_diagram(const DualPair& pair);

// Text format "[(+-+)(+)(-)(-)]"; round-trips bit-exactly.
std::string diagram_to_text(const SignedDiagram& d);
SignedDiagram diagram_from_text(const GroupTag& g, const std::string& text);

} // namespace theta
