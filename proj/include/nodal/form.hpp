#pragma once

#include "nodal/matrix.hpp"
#include "nodal/point.hpp"
#include "nodal/scalar.hpp"

#include <map>
#include <vector>

namespace nodal {

/// Exponent vector of a monomial; entries sum to the form's degree.
using Exponents = std::vector<int>;

/// Compare exponent vectors so that the first variable is largest
/// (x0^d first, xn^d last). Within one degree this is plain lex-descending.
struct MonomialOrder {
    bool operator()(const Exponents& a, const Exponents& b) const { return a > b; }
};

/// All exponent vectors of the given total degree in graded-lex order with
/// the first variable largest. Length C(degree + num_vars - 1, num_vars - 1).
std::vector<Exponents> monomial_basis(int num_vars, int degree);

/// Multivariate homogeneous polynomial with exact coefficients, stored
/// sparsely. Zero coefficients are never kept.
class HomogeneousForm {
public:
    HomogeneousForm(int num_vars, int degree);

    static HomogeneousForm zero(int num_vars, int degree) { return {num_vars, degree}; }
    static HomogeneousForm monomial(int num_vars, Exponents exps, Scalar coeff);
    /// x_index as a linear form.
    static HomogeneousForm variable(int num_vars, int index);
    /// Linear form with the given coefficient vector.
    static HomogeneousForm linear(const std::vector<Scalar>& coeffs);

    int num_vars() const { return num_vars_; }
    int degree() const { return degree_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Exponents, Scalar, MonomialOrder>& terms() const { return terms_; }

    void set_coeff(const Exponents& exps, Scalar c);
    Scalar coeff(const Exponents& exps) const;

    /// Coefficient row in the monomial_basis(num_vars, degree) order.
    std::vector<Scalar> coefficient_row(const Scalar& zero_like) const;

    HomogeneousForm& operator+=(const HomogeneousForm& o);
    HomogeneousForm& operator-=(const HomogeneousForm& o);
    HomogeneousForm operator-() const;
    friend HomogeneousForm operator+(HomogeneousForm a, const HomogeneousForm& b) { return a += b; }
    friend HomogeneousForm operator-(HomogeneousForm a, const HomogeneousForm& b) { return a -= b; }
    friend HomogeneousForm operator*(const HomogeneousForm& a, const HomogeneousForm& b);
    HomogeneousForm& scale(const Scalar& s);

    friend bool operator==(const HomogeneousForm& a, const HomogeneousForm& b) {
        return a.num_vars_ == b.num_vars_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
    }

    Scalar evaluate(const std::vector<Scalar>& coords) const;
    Scalar evaluate(const ProjectivePoint& p) const;

    HomogeneousForm partial_derivative(int var_index) const;

    /// Substitute x_i = sum_j M(i,j) y_j: pullback along the linear map with
    /// matrix M ((num_vars) x (new_num_vars)). Degree is preserved.
    HomogeneousForm compose_linear(const Matrix& m) const;

    /// Reduce all coefficients mod p (throws if p divides a denominator).
    HomogeneousForm reduced_mod(std::uint64_t p) const;

private:
    int num_vars_;
    int degree_;
    std::map<Exponents, Scalar, MonomialOrder> terms_;
};

/// Exact value of f at the canonical coordinates of P. Vanishing is
/// well-defined on projective classes because f is homogeneous.
Scalar evaluate_form(const HomogeneousForm& f, const ProjectivePoint& p);

}  // namespace nodal
