#include "dio/polynomial.hpp"

#include <algorithm>
#include <numeric>

#include "dio/errors.hpp"
#include "dio/expr.hpp"

namespace dio {

Polynomial Polynomial::constant(Int value, int var_count) {
    Polynomial p(var_count);
    if (value != 0) p.terms_.emplace(Exponents(var_count, 0), std::move(value));
    return p;
}

Polynomial Polynomial::variable(int index, int var_count) {
    Polynomial p(var_count);
    Exponents e(var_count, 0);
    e.at(index - 1) = 1;
    p.terms_.emplace(std::move(e), 1);
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 &&
            std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(),
                        [](unsigned e) { return e == 0; }));
}

int Polynomial::total_degree() const {
    int best = 0;
    for (const auto& [exps, coeff] : terms_) {
        int d = std::accumulate(exps.begin(), exps.end(), 0);
        best = std::max(best, d);
    }
    return best;
}

Int Polynomial::constant_term() const {
    auto it = terms_.find(Exponents(k_, 0));
    return it == terms_.end() ? Int(0) : it->second;
}

void Polynomial::add_term(const Exponents& exps, const Int& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(exps, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
    Polynomial out = *this;
    for (const auto& [exps, coeff] : other.terms_) out.add_term(exps, coeff);
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
    Polynomial out = *this;
    for (const auto& [exps, coeff] : other.terms_) out.add_term(exps, -coeff);
    return out;
}

Polynomial Polynomial::operator-() const {
    Polynomial out(k_);
    for (const auto& [exps, coeff] : terms_) out.terms_.emplace(exps, -coeff);
    return out;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
    Polynomial out(k_);
    Exponents combined(k_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : other.terms_) {
            for (int i = 0; i < k_; ++i) combined[i] = ea[i] + eb[i];
            out.add_term(combined, ca * cb);
        }
    }
    return out;
}

Polynomial Polynomial::pow(unsigned long exponent) const {
    Polynomial result = Polynomial::constant(1, k_);
    Polynomial base = *this;
    while (exponent > 0) {
        if (exponent & 1) result = result * base;
        base = base * base;
        exponent >>= 1;
    }
    return result;
}

Polynomial Polynomial::extended_to(int new_k) const {
    if (new_k == k_) return *this;
    if (new_k < k_) throw Error("extended_to: cannot shrink variable space");
    Polynomial out(new_k);
    for (const auto& [exps, coeff] : terms_) {
        Exponents e(new_k, 0);
        std::copy(exps.begin(), exps.end(), e.begin());
        out.terms_.emplace(std::move(e), coeff);
    }
    return out;
}

Int Polynomial::evaluate(const std::vector<Int>& point) const {
    Int acc = 0;
    for (const auto& [exps, coeff] : terms_) {
        Int term = coeff;
        for (int i = 0; i < k_; ++i)
            if (exps[i] != 0) term *= ipow(point.at(i), exps[i]);
        acc += term;
    }
    return acc;
}

Polynomial::VarProfile Polynomial::profile(int var) const {
    VarProfile p;
    bool saw_positive = false, saw_negative = false;
    for (const auto& [exps, coeff] : terms_) {
        unsigned e = exps.at(var - 1);
        if (e == 0) continue;
        p.present = true;
        p.max_exponent = std::max(p.max_exponent, e);
        (coeff > 0 ? saw_positive : saw_negative) = true;
    }
    p.all_positive = p.present && !saw_negative;
    p.all_negative = p.present && !saw_positive;
    return p;
}

Int Polynomial::magnitude_bound(long long N) const {
    Int bound = 0;
    for (const auto& [exps, coeff] : terms_) {
        unsigned total = std::accumulate(exps.begin(), exps.end(), 0u);
        bound += abs(coeff) * ipow(Int(N), total);
    }
    return bound;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    // Sort degree-descending, lex ascending within a degree.
    std::vector<const TermMap::value_type*> order;
    order.reserve(terms_.size());
    for (const auto& t : terms_) order.push_back(&t);
    auto degree_of = [](const Exponents& e) {
        return std::accumulate(e.begin(), e.end(), 0u);
    };
    std::stable_sort(order.begin(), order.end(), [&](auto* a, auto* b) {
        unsigned da = degree_of(a->first), db = degree_of(b->first);
        if (da != db) return da > db;
        return a->first < b->first;
    });
    std::string out;
    bool first = true;
    for (auto* t : order) {
        const auto& [exps, coeff] = *t;
        Int mag = abs(coeff);
        if (first) {
            if (coeff < 0) out += "-";
        } else {
            out += coeff < 0 ? " - " : " + ";
        }
        std::string vars;
        for (int i = 0; i < k_; ++i) {
            if (exps[i] == 0) continue;
            if (!vars.empty()) vars += "*";
            vars += "x" + std::to_string(i + 1);
            if (exps[i] > 1) vars += "^" + std::to_string(exps[i]);
        }
        if (vars.empty()) {
            out += mag.str();
        } else {
            if (mag != 1) out += mag.str() + "*";
            out += vars;
        }
        first = false;
    }
    return out;
}

Polynomial expand_expr(const Expr& e, int var_count) {
    switch (e.kind) {
        case Expr::Kind::Constant:
            return Polynomial::constant(e.value, var_count);
        case Expr::Kind::Variable:
            return Polynomial::variable(e.var, var_count);
        case Expr::Kind::Negate:
            return -expand_expr(e.children[0], var_count);
        case Expr::Kind::Sum: {
            Polynomial acc(var_count);
            for (const auto& c : e.children) acc = acc + expand_expr(c, var_count);
            return acc;
        }
        case Expr::Kind::Product: {
            Polynomial acc = Polynomial::constant(1, var_count);
            for (const auto& c : e.children) acc = acc * expand_expr(c, var_count);
            return acc;
        }
        case Expr::Kind::Power: {
            const Expr& exp = e.children[1];
            if (!exp.is_constant())
                throw NotAlgebraicError("cannot expand a power with a variable exponent");
            if (exp.value < 0) throw NotAlgebraicError("negative exponent");
            return expand_expr(e.children[0], var_count)
                .pow(exp.value.convert_to<unsigned long>());
        }
    }
    return Polynomial(var_count);
}

}  // namespace dio
