#include "nodal/form.hpp"

#include <stdexcept>

namespace nodal {

namespace {

void enumerate(int vars_left, int degree_left, Exponents& current,
               std::vector<Exponents>& out) {
    if (vars_left == 1) {
        current.push_back(degree_left);
        out.push_back(current);
        current.pop_back();
        return;
    }
    for (int e = degree_left; e >= 0; --e) {
        current.push_back(e);
        enumerate(vars_left - 1, degree_left - e, current, out);
        current.pop_back();
    }
}

}  // namespace

std::vector<Exponents> monomial_basis(int num_vars, int degree) {
    if (num_vars < 1) throw std::invalid_argument("monomial basis needs at least one variable");
    if (degree < 0) throw std::invalid_argument("negative degree");
    std::vector<Exponents> out;
    Exponents current;
    enumerate(num_vars, degree, current, out);
    return out;
}

HomogeneousForm::HomogeneousForm(int num_vars, int degree)
    : num_vars_(num_vars), degree_(degree) {
    if (num_vars < 1) throw std::invalid_argument("form needs at least one variable");
    if (degree < 0) throw std::invalid_argument("negative degree");
}

HomogeneousForm HomogeneousForm::monomial(int num_vars, Exponents exps, Scalar coeff) {
    int total = 0;
    for (int e : exps) total += e;
    HomogeneousForm f(num_vars, total);
    f.set_coeff(exps, std::move(coeff));
    return f;
}

HomogeneousForm HomogeneousForm::variable(int num_vars, int index) {
    Exponents e(num_vars, 0);
    e.at(index) = 1;
    return monomial(num_vars, std::move(e), Scalar(1));
}

HomogeneousForm HomogeneousForm::linear(const std::vector<Scalar>& coeffs) {
    HomogeneousForm f(static_cast<int>(coeffs.size()), 1);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        Exponents e(coeffs.size(), 0);
        e[i] = 1;
        f.set_coeff(e, coeffs[i]);
    }
    return f;
}

void HomogeneousForm::set_coeff(const Exponents& exps, Scalar c) {
    if (static_cast<int>(exps.size()) != num_vars_)
        throw std::invalid_argument("exponent vector length mismatch");
    int total = 0;
    for (int e : exps) {
        if (e < 0) throw std::invalid_argument("negative exponent");
        total += e;
    }
    if (total != degree_) throw std::invalid_argument("exponents do not sum to the degree");
    if (c.is_zero())
        terms_.erase(exps);
    else
        terms_[exps] = std::move(c);
}

Scalar HomogeneousForm::coeff(const Exponents& exps) const {
    auto it = terms_.find(exps);
    if (it != terms_.end()) return it->second;
    return terms_.empty() ? Scalar(0) : terms_.begin()->second.zero_like();
}

std::vector<Scalar> HomogeneousForm::coefficient_row(const Scalar& zero_like) const {
    const auto basis = monomial_basis(num_vars_, degree_);
    std::vector<Scalar> row(basis.size(), zero_like.zero_like());
    for (std::size_t i = 0; i < basis.size(); ++i) {
        auto it = terms_.find(basis[i]);
        if (it != terms_.end()) row[i] = it->second;
    }
    return row;
}

HomogeneousForm& HomogeneousForm::operator+=(const HomogeneousForm& o) {
    if (num_vars_ != o.num_vars_ || degree_ != o.degree_)
        throw std::invalid_argument("adding forms of different shape");
    for (const auto& [e, c] : o.terms_) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

HomogeneousForm& HomogeneousForm::operator-=(const HomogeneousForm& o) { return *this += -o; }

HomogeneousForm HomogeneousForm::operator-() const {
    HomogeneousForm f(num_vars_, degree_);
    for (const auto& [e, c] : terms_) f.terms_.emplace(e, -c);
    return f;
}

HomogeneousForm operator*(const HomogeneousForm& a, const HomogeneousForm& b) {
    if (a.num_vars_ != b.num_vars_)
        throw std::invalid_argument("multiplying forms in different variable counts");
    HomogeneousForm f(a.num_vars_, a.degree_ + b.degree_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            Exponents e(ea);
            for (int i = 0; i < a.num_vars_; ++i) e[i] += eb[i];
            auto it = f.terms_.find(e);
            if (it == f.terms_.end()) {
                Scalar c = ca * cb;
                if (!c.is_zero()) f.terms_.emplace(std::move(e), std::move(c));
            } else {
                it->second += ca * cb;
                if (it->second.is_zero()) f.terms_.erase(it);
            }
        }
    }
    return f;
}

HomogeneousForm& HomogeneousForm::scale(const Scalar& s) {
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
}

Scalar HomogeneousForm::evaluate(const std::vector<Scalar>& coords) const {
    if (static_cast<int>(coords.size()) != num_vars_)
        throw std::invalid_argument("evaluation point dimension mismatch");
    Scalar acc = coords.front().zero_like();
    for (const auto& [e, c] : terms_) {
        Scalar term = c;
        term.match_field(acc);
        for (int i = 0; i < num_vars_; ++i)
            for (int k = 0; k < e[i]; ++k) term *= coords[i];
        acc += term;
    }
    return acc;
}

Scalar HomogeneousForm::evaluate(const ProjectivePoint& p) const { return evaluate(p.coords()); }

Scalar evaluate_form(const HomogeneousForm& f, const ProjectivePoint& p) {
    if (p.ambient_dim() + 1 != f.num_vars())
        throw std::invalid_argument("form/point ambient dimension mismatch");
    return f.evaluate(p);
}

HomogeneousForm HomogeneousForm::partial_derivative(int var_index) const {
    if (var_index < 0 || var_index >= num_vars_)
        throw std::invalid_argument("derivative index out of range");
    HomogeneousForm f(num_vars_, degree_ > 0 ? degree_ - 1 : 0);
    if (degree_ == 0) return f;
    for (const auto& [e, c] : terms_) {
        if (e[var_index] == 0) continue;
        Exponents d(e);
        --d[var_index];
        Scalar nc = c * c.int_like(e[var_index]);
        if (!nc.is_zero()) f.terms_.emplace(std::move(d), std::move(nc));
    }
    return f;
}

HomogeneousForm HomogeneousForm::compose_linear(const Matrix& m) const {
    if (m.rows() != static_cast<std::size_t>(num_vars_))
        throw std::invalid_argument("substitution matrix has wrong row count");
    const int new_vars = static_cast<int>(m.cols());
    // Linear forms substituted for each original variable.
    std::vector<HomogeneousForm> subs;
    subs.reserve(num_vars_);
    for (int i = 0; i < num_vars_; ++i) subs.push_back(HomogeneousForm::linear(m.row(i)));
    HomogeneousForm out(new_vars, degree_);
    for (const auto& [e, c] : terms_) {
        HomogeneousForm term(new_vars, 0);
        term.set_coeff(Exponents(new_vars, 0), c);
        for (int i = 0; i < num_vars_; ++i)
            for (int k = 0; k < e[i]; ++k) term = term * subs[i];
        out += term;
    }
    return out;
}

HomogeneousForm HomogeneousForm::reduced_mod(std::uint64_t p) const {
    HomogeneousForm f(num_vars_, degree_);
    for (const auto& [e, c] : terms_) {
        Scalar r = Scalar::mod(c.rat(), p);
        if (!r.is_zero()) f.terms_.emplace(e, std::move(r));
    }
    return f;
}

}  // namespace nodal
