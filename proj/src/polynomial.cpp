#include "theta/polynomial.hpp"

#include <cmath>

namespace theta {

ExactPolynomial ExactPolynomial::constant(int nvars, const Rat& c) {
    ExactPolynomial p(nvars);
    p.add_term(Exponents(nvars, 0), c);
    return p;
}

ExactPolynomial ExactPolynomial::monomial(int nvars, Exponents e, const Rat& c) {
    if (int(e.size()) != nvars) throw std::invalid_argument("monomial exponent length");
    ExactPolynomial p(nvars);
    p.add_term(e, c);
    return p;
}

ExactPolynomial ExactPolynomial::linear(const std::vector<Rat>& coeffs) {
    ExactPolynomial p(int(coeffs.size()));
    for (size_t i = 0; i < coeffs.size(); ++i) {
        Exponents e(coeffs.size(), 0);
        e[i] = 1;
        p.add_term(e, coeffs[i]);
    }
    return p;
}

void ExactPolynomial::add_term(const Exponents& e, const Rat& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.try_emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

ExactPolynomial ExactPolynomial::operator+(const ExactPolynomial& o) const {
    ExactPolynomial r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

ExactPolynomial ExactPolynomial::operator-(const ExactPolynomial& o) const {
    ExactPolynomial r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

ExactPolynomial ExactPolynomial::multiply(const ExactPolynomial& o, size_t cap) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("variable count mismatch");
    ExactPolynomial r(nvars_);
    Exponents e(nvars_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            for (int i = 0; i < nvars_; ++i) e[i] = e1[i] + e2[i];
            r.add_term(e, c1 * c2);
            if (cap && r.terms_.size() > cap)
                throw MonomialCapExceeded("monomial count exceeds the configured cap");
        }
    return r;
}

ExactPolynomial ExactPolynomial::scaled(const Rat& c) const {
    ExactPolynomial r(nvars_);
    if (c == 0) return r;
    for (const auto& [e, v] : terms_) r.terms_[e] = v * c;
    return r;
}

int ExactPolynomial::total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
        int s = 0;
        for (int x : e) s += x;
        d = std::max(d, s);
    }
    return d;
}

int ExactPolynomial::homogeneous_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
        int s = 0;
        for (int x : e) s += x;
        if (d < 0) d = s;
        if (s != d) throw NotHomogeneous("polynomial is not homogeneous");
    }
    return d < 0 ? 0 : d;
}

Rat ExactPolynomial::eval(const std::vector<Rat>& x) const {
    if (int(x.size()) != nvars_) throw std::invalid_argument("evaluation point length");
    Rat sum = 0;
    for (const auto& [e, c] : terms_) {
        Rat t = c;
        for (int i = 0; i < nvars_; ++i)
            for (int k = 0; k < e[i]; ++k) t *= x[i];
        sum += t;
    }
    return sum;
}

double ExactPolynomial::eval_double(const std::vector<double>& x) const {
    if (int(x.size()) != nvars_) throw std::invalid_argument("evaluation point length");
    double sum = 0;
    for (const auto& [e, c] : terms_) {
        double t = c.get_d();
        for (int i = 0; i < nvars_; ++i) t *= std::pow(x[i], e[i]);
        sum += t;
    }
    return sum;
}

ExactPolynomial difference_product(int nvars, int first, int n, int power) {
    ExactPolynomial r = ExactPolynomial::constant(nvars, 1);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            ExactPolynomial f(nvars);
            ExactPolynomial::Exponents e(nvars, 0);
            e[first + i] = power;
            f.add_term(e, 1);
            e[first + i] = 0;
            e[first + j] = power;
            f.add_term(e, -1);
            r = r * f;
        }
    return r;
}

} // namespace theta
