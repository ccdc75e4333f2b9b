#pragma once

#include "theta/rational.hpp"

#include <map>
#include <stdexcept>
#include <vector>

namespace theta {

struct NotHomogeneous : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct MonomialCapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// sparse exact polynomial in a fixed number of variables; no zero terms stored
class ExactPolynomial {
public:
    using Exponents = std::vector<int>;

    explicit ExactPolynomial(int nvars = 0) : nvars_(nvars) {}

    static ExactPolynomial constant(int nvars, const Rat& c);
    static ExactPolynomial monomial(int nvars, Exponents e, const Rat& c);
    // sum of coeffs[i] * x_i
    static ExactPolynomial linear(const std::vector<Rat>& coeffs);

    int nvars() const { return nvars_; }
    size_t term_count() const { return terms_.size(); }
    const std::map<Exponents, Rat>& terms() const { return terms_; }

    void add_term(const Exponents& e, const Rat& c);

    ExactPolynomial operator+(const ExactPolynomial& o) const;
    ExactPolynomial operator-(const ExactPolynomial& o) const;
    // cap bounds the size of the product term map; 0 means unlimited
    ExactPolynomial multiply(const ExactPolynomial& o, size_t cap = 0) const;
    ExactPolynomial operator*(const ExactPolynomial& o) const { return multiply(o); }
    ExactPolynomial scaled(const Rat& c) const;

    bool is_zero() const { return terms_.empty(); }
    int total_degree() const; // max over terms; -1 for the zero polynomial
    // degree if homogeneous, throws NotHomogeneous otherwise
    int homogeneous_degree() const;

    Rat eval(const std::vector<Rat>& x) const;
    double eval_double(const std::vector<double>& x) const;

    bool operator==(const ExactPolynomial& o) const {
        return nvars_ == o.nvars_ && terms_ == o.terms_;
    }

private:
    int nvars_;
    std::map<Exponents, Rat> terms_;
};

// difference product prod_{i<j} (x_i^power - x_j^power) on the variable range
// [first, first + n) of a polynomial ring with nvars variables
ExactPolynomial difference_product(int nvars, int first, int n, int power);

} // namespace theta
