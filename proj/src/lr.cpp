#include "theta/lr.hpp"

#include <algorithm>

namespace theta {

namespace {

struct LrSearch {
    const Partition& lam;
    const Partition& mu;
    const Partition& nu;
    std::vector<std::vector<int>> fill; // fill[i][j - mu_i] for skew cells
    std::vector<int> counts;            // content placed so far, 1-based values
    Int total = 0;

    LrSearch(const Partition& l, const Partition& m, const Partition& n)
        : lam(l), mu(m), nu(n), counts(n.length() + 1, 0) {
        fill.resize(l.length());
        for (int i = 0; i < l.length(); ++i)
            fill[i].assign(l.part(i) - m.part(i), 0);
    }

    int value_at(int i, int j) const { // 0 when (i,j) is not a skew cell
        if (i < 0 || i >= lam.length()) return 0;
        if (j < mu.part(i) || j >= lam.part(i)) return 0;
        return fill[i][j - mu.part(i)];
    }

    // cells processed row by row, right to left: this is exactly the
    // reverse reading word, so the lattice condition is a prefix check
    void rec(int i, int j) {
        if (i == lam.length()) {
            ++total;
            return;
        }
        if (j < mu.part(i)) {
            rec(i + 1, lam.part(i + 1) - 1);
            return;
        }
        if (j >= lam.part(i)) {
            rec(i, lam.part(i) - 1);
            return;
        }
        int right = j + 1 < lam.part(i) ? value_at(i, j + 1) : nu.length() + 1;
        int above = value_at(i - 1, j); // 0 when above cell lies in mu or outside
        for (int v = above + 1; v <= std::min(right, nu.length()); ++v) {
            if (counts[v] >= nu.part(v - 1)) continue;
            if (v > 1 && counts[v] >= counts[v - 1]) continue; // lattice word
            counts[v]++;
            fill[i][j - mu.part(i)] = v;
            rec(i, j - 1);
            fill[i][j - mu.part(i)] = 0;
            counts[v]--;
        }
    }

    void run() {
        if (lam.length() == 0) {
            total = 1;
            return;
        }
        rec(0, lam.part(0) - 1);
    }
};

} // namespace

Int lr_coefficient(const Partition& lam, const Partition& mu, const Partition& nu) {
    if (!lam.is_valid() || !mu.is_valid() || !nu.is_valid()) return 0;
    if (lam.size() != mu.size() + nu.size()) return 0;
    if (!lam.contains(mu)) return 0;
    if (nu.empty()) return lam == mu ? Int(1) : Int(0);
    LrSearch s(lam, mu, nu);
    s.run();
    return s.total;
}

namespace {

bool integral_dominant(const WeightVector& w) {
    for (size_t i = 0; i < w.size(); ++i) {
        Rat c = w[i];
        c.canonicalize();
        if (c.get_den() != 1) return false;
        if (i + 1 < w.size() && w[i] < w[i + 1]) return false;
    }
    return true;
}

} // namespace

Int tensor_multiplicity_gl(int r, const WeightVector& nu, const WeightVector& mu,
                           const WeightVector& lam) {
    if (static_cast<int>(nu.size()) != r || static_cast<int>(mu.size()) != r ||
        static_cast<int>(lam.size()) != r)
        throw NonDominantWeight("tensor_multiplicity_gl: weight length != rank");
    if (!integral_dominant(nu) || !integral_dominant(mu) || !integral_dominant(lam))
        throw NonDominantWeight("tensor_multiplicity_gl: weights must be dominant integral");

    auto shift_of = [](const WeightVector& w) {
        Rat last = w.empty() ? Rat(0) : w.back();
        return last < 0 ? long(-last.get_num().get_si()) : 0L;
    };
    long a = shift_of(mu), b = shift_of(lam);

    auto to_partition = [r](const WeightVector& w, long s, bool& ok) {
        std::vector<int> parts(r);
        ok = true;
        for (int i = 0; i < r; ++i) {
            Rat c = w[i] + s;
            c.canonicalize();
            if (c < 0) ok = false;
            parts[i] = static_cast<int>(c.get_num().get_si());
        }
        return Partition(std::move(parts));
    };

    bool ok1, ok2, ok3;
    Partition pm = to_partition(mu, a, ok1);
    Partition pl = to_partition(lam, b, ok2);
    Partition pn = to_partition(nu, a + b, ok3);
    if (!ok1 || !ok2) throw NonDominantWeight("tensor_multiplicity_gl: bad shift");
    if (!ok3) return 0; // nu too small to occur in the shifted product
    return lr_coefficient(pn, pm, pl);
}

} // namespace theta
