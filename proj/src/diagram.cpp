#include "theta/diagram.hpp"

#include <algorithm>
#include <map>
#include <cassert>

namespace theta {

int GroupTag::diagram_size() const {
    switch (kind) {
        case GroupKind::Sp2nR: return 2 * n;
        case GroupKind::Opq: return p + q;
        case GroupKind::Umn: return p + q;
        case GroupKind::OstarN: return n;
        case GroupKind::Sppq: return p + q;
    }
    return 0;
}

std::string GroupTag::to_string() const {
    switch (kind) {
        case GroupKind::Sp2nR: return "Sp(" + std::to_string(2 * n) + ",R)";
        case GroupKind::Opq: return "O(" + std::to_string(p) + "," + std::to_string(q) + ")";
        case GroupKind::Umn: return "U(" + std::to_string(p) + "," + std::to_string(q) + ")";
        case GroupKind::OstarN: return "O*(" + std::to_string(2 * n) + ")";
        case GroupKind::Sppq: return "Sp(" + std::to_string(p) + "," + std::to_string(q) + ")";
    }
    return "?";
}

namespace {

// canonical order: longer rows first; among equal lengths, +-leading first
bool row_before(const SignedRow& a, const SignedRow& b) {
    if (a.length != b.length) return a.length > b.length;
    return a.leading_sign == Sign::plus && b.leading_sign == Sign::minus;
}

} // namespace

void SignedDiagram::canonicalize() {
    std::stable_sort(rows.begin(), rows.end(), row_before);
}

bool SignedDiagram::is_canonical() const {
    for (size_t i = 0; i + 1 < rows.size(); ++i)
        if (row_before(rows[i + 1], rows[i])) return false;
    return true;
}

int SignedDiagram::total_boxes() const {
    int s = 0;
    for (const auto& r : rows) s += r.length;
    return s;
}

std::pair<int, int> SignedDiagram::box_signature() const {
    int pl = 0, mi = 0;
    for (const auto& r : rows) {
        pl += r.plus_boxes();
        mi += r.minus_boxes();
    }
    return {pl, mi};
}

ValidationResult validate_diagram(const SignedDiagram& d) {
    ValidationResult res;
    auto fail = [&](std::string msg) {
        res.ok = false;
        res.violations.push_back(std::move(msg));
    };

    if (!d.is_canonical()) fail("rows not in canonical order");
    for (const auto& r : d.rows)
        if (r.length < 1) fail("row with nonpositive length");

    if (d.total_boxes() != d.group.diagram_size())
        fail("total boxes " + std::to_string(d.total_boxes()) + " != required " +
             std::to_string(d.group.diagram_size()));

    if (d.group.has_signature()) {
        auto [pl, mi] = d.box_signature();
        auto [sp, sm] = d.group.signature();
        if (pl != sp || mi != sm)
            fail("signature (" + std::to_string(pl) + "," + std::to_string(mi) +
                 ") != (" + std::to_string(sp) + "," + std::to_string(sm) + ")");
    }

    // per-length lead counts
    std::map<int, std::pair<int, int>> counts; // length -> (#+lead, #-lead)
    for (const auto& r : d.rows) {
        if (r.leading_sign == Sign::plus) counts[r.length].first++;
        else counts[r.length].second++;
    }

    switch (d.group.kind) {
        case GroupKind::Sp2nR:
            for (auto& [len, c] : counts)
                if (len % 2 == 1 && c.first != c.second)
                    fail("odd length " + std::to_string(len) +
                         ": +leading and -leading row counts differ");
            break;
        case GroupKind::Opq:
            for (auto& [len, c] : counts)
                if (len % 2 == 0 && c.first != c.second)
                    fail("even length " + std::to_string(len) +
                         ": +leading and -leading row counts differ");
            break;
        case GroupKind::Umn:
            break;
        case GroupKind::OstarN:
            for (auto& [len, c] : counts)
                if (len % 2 == 1 && c.second != 0)
                    fail("odd length " + std::to_string(len) + ": row must lead +");
            break;
        case GroupKind::Sppq:
            for (auto& [len, c] : counts)
                if (len % 2 == 0 && c.second != 0)
                    fail("even length " + std::to_string(len) + ": row must lead +");
            break;
    }
    return res;
}

namespace {

void enumerate_rec(const GroupTag& g, int remaining, SignedRow max_row,
                   std::vector<SignedRow>& cur, std::vector<SignedDiagram>& out, long cap) {
    if (remaining == 0) {
        SignedDiagram d{g, cur};
        if (validate_diagram(d).ok) {
            if (static_cast<long>(out.size()) >= cap)
                throw ParameterOverflow("orbit enumeration exceeds cap");
            out.push_back(std::move(d));
        }
        return;
    }
    // candidate rows, canonically not-before max_row
    for (int len = std::min(remaining, max_row.length); len >= 1; --len) {
        for (Sign s : {Sign::plus, Sign::minus}) {
            SignedRow r{len, s};
            if (row_before(r, max_row)) continue; // keep canonical (weakly later) order
            cur.push_back(r);
            enumerate_rec(g, remaining - len, r, cur, out, cap);
            cur.pop_back();
        }
    }
}

} // namespace

std::vector<SignedDiagram> enumerate_orbits(const GroupTag& g, long cap) {
    int size = g.diagram_size();
    if (size < 0) throw ParameterOverflow("negative diagram size");
    std::vector<SignedDiagram> out;
    if (size == 0) {
        SignedDiagram d{g, {}};
        if (validate_diagram(d).ok) out.push_back(d);
        return out;
    }
    std::vector<SignedRow> cur;
    enumerate_rec(g, size, SignedRow{size, Sign::plus}, cur, out, cap);
    std::sort(out.begin(), out.end());
    return out;
}

DualPair DualPair::osp(int p, int q, int n) { return {PairKind::OSp, p, q, 0, n}; }
DualPair DualPair::uu(int p, int q, int m, int n) { return {PairKind::UU, p, q, m, n}; }
DualPair DualPair::sp_ostar(int p, int q, int n) { return {PairKind::SpOstar, p, q, 0, n}; }

bool DualPair::in_stable_range() const {
    if (p < 1 || q < 1 || n < 1) return false;
    switch (kind) {
        case PairKind::OSp: return 2 * n < std::min(p, q);
        case PairKind::UU: return m >= 1 && m + n <= std::min(p, q);
        case PairKind::SpOstar: return n <= std::min(p, q);
    }
    return false;
}

GroupTag DualPair::larger() const {
    switch (kind) {
        case PairKind::OSp: return GroupTag::opq(p, q);
        case PairKind::UU: return GroupTag::umn(p, q);
        case PairKind::SpOstar: return GroupTag::sppq(p, q);
    }
    return {};
}

GroupTag DualPair::smaller() const {
    switch (kind) {
        case PairKind::OSp: return GroupTag::sp2nR(n);
        case PairKind::UU: return GroupTag::umn(m, n);
        case PairKind::SpOstar: return GroupTag::ostar(n);
    }
    return {};
}

std::string DualPair::to_string() const {
    switch (kind) {
        case PairKind::OSp:
            return "(O(" + std::to_string(p) + "," + std::to_string(q) + "), Sp(" +
                   std::to_string(2 * n) + ",R))";
        case PairKind::UU:
            return "(U(" + std::to_string(p) + "," + std::to_string(q) + "), U(" +
                   std::to_string(m) + "," + std::to_string(n) + "))";
        case PairKind::SpOstar:
            return "(Sp(" + std::to_string(p) + "," + std::to_string(q) + "), O*(" +
                   std::to_string(2 * n) + "))";
    }
    return "?";
}

SignedDiagram theta_lift_diagram(const DualPair& pair, const SignedDiagram& d) {
    if (d.group != pair.smaller())
        throw LiftInfeasible("diagram group is not the smaller member of the pair");
    auto v = validate_diagram(d);
    if (!v.ok) throw LiftInfeasible("input diagram invalid: " + v.violations.front());

    SignedDiagram out{pair.larger(), {}};
    for (const auto& r : d.rows)
        out.rows.push_back(SignedRow{r.length + 1, r.leading_sign});

    auto [pl, mi] = SignedDiagram{out.group, out.rows}.box_signature();
    auto [tp, tm] = out.group.signature();
    if (pl > tp || mi > tm)
        throw LiftInfeasible("signature cannot be met by appending singletons");
    for (int i = 0; i < tp - pl; ++i) out.rows.push_back(SignedRow{1, Sign::plus});
    for (int i = 0; i < tm - mi; ++i) out.rows.push_back(SignedRow{1, Sign::minus});

    out.canonicalize();
    auto vo = validate_diagram(out);
    if (!vo.ok) throw LiftInfeasible("lift image invalid: " + vo.violations.front());
    return out;
}

SignedDiagram zero_orbit_diagram(const GroupTag& g) {
    SignedDiagram d{g, {}};
    int pl = 0, mi = 0;
    switch (g.kind) {
        case GroupKind::Sp2nR: pl = g.n; mi = g.n; break;
        case GroupKind::OstarN: pl = g.n; mi = 0; break;
        default: pl = g.p; mi = g.q; break;
    }
    for (int i = 0; i < pl; ++i) d.rows.push_back({1, Sign::plus});
    for (int i = 0; i < mi; ++i) d.rows.push_back({1, Sign::minus});
    d.canonicalize();
    return d;
}

SignedDiagram regular_hol_orbit_diagram(const DualPair& pair) {
    GroupTag g = pair.smaller();
    SignedDiagram d{g, {}};
    switch (pair.kind) {
        case PairKind::OSp:
            for (int i = 0; i < pair.n; ++i) d.rows.push_back({2, Sign::plus});
            break;
        case PairKind::UU:
            if (pair.m < pair.n)
                throw LiftInfeasible("regular holomorphic orbit needs m >= n");
            for (int i = 0; i < pair.n; ++i) d.rows.push_back({2, Sign::plus});
            for (int i = 0; i < pair.m - pair.n; ++i) d.rows.push_back({1, Sign::plus});
            break;
        case PairKind::SpOstar:
            for (int i = 0; i < pair.n / 2; ++i) d.rows.push_back({2, Sign::plus});
            if (pair.n % 2 == 1) d.rows.push_back({1, Sign::plus});
            break;
    }
    d.canonicalize();
    assert(validate_diagram(d).ok);
    return d;
}

std::string diagram_to_text(const SignedDiagram& d) {
    std::string s = "[";
    for (const auto& r : d.rows) {
        s += "(";
        for (int j = 1; j <= r.length; ++j) s += sign_char(sign_at(r.leading_sign, j));
        s += ")";
    }
    return s + "]";
}

SignedDiagram diagram_from_text(const GroupTag& g, const std::string& text) {
    SignedDiagram d{g, {}};
    size_t i = 0;
    auto err = [&](const std::string& m) {
        throw std::invalid_argument("diagram parse error at position " + std::to_string(i) +
                                    ": " + m);
    };
    if (i >= text.size() || text[i] != '[') err("expected '['");
    ++i;
    while (i < text.size() && text[i] == '(') {
        ++i;
        SignedRow r{0, Sign::plus};
        bool first = true;
        while (i < text.size() && (text[i] == '+' || text[i] == '-')) {
            Sign s = text[i] == '+' ? Sign::plus : Sign::minus;
            if (first) {
                r.leading_sign = s;
                first = false;
            } else if (s != sign_at(r.leading_sign, r.length + 1)) {
                err("signs do not alternate");
            }
            r.length++;
            ++i;
        }
        if (r.length == 0) err("empty row");
        if (i >= text.size() || text[i] != ')') err("expected ')'");
        ++i;
        d.rows.push_back(r);
    }
    if (i >= text.size() || text[i] != ']') err("expected ']'");
    ++i;
    if (i != text.size()) err("trailing characters");
    if (!d.is_canonical())
        throw std::invalid_argument("diagram rows not in canonical order");
    return d;
}

} // namespace theta
