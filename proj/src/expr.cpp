#include "dio/expr.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace dio {

Expr Expr::constant(Int v) {
    Expr e;
    e.kind = Kind::Constant;
    e.value = std::move(v);
    return e;
}

Expr Expr::variable(int index) {
    Expr e;
    e.kind = Kind::Variable;
    e.var = index;
    return e;
}

Expr Expr::sum(std::vector<Expr> terms) {
    Expr e;
    e.kind = Kind::Sum;
    e.children = std::move(terms);
    return e;
}

Expr Expr::product(std::vector<Expr> factors) {
    Expr e;
    e.kind = Kind::Product;
    e.children = std::move(factors);
    return e;
}

Expr Expr::power(Expr base, Expr exponent) {
    Expr e;
    e.kind = Kind::Power;
    e.children.push_back(std::move(base));
    e.children.push_back(std::move(exponent));
    return e;
}

Expr Expr::negate(Expr child) {
    Expr e;
    e.kind = Kind::Negate;
    e.children.push_back(std::move(child));
    return e;
}

bool Expr::operator==(const Expr& other) const {
    if (kind != other.kind) return false;
    switch (kind) {
        case Kind::Constant: return value == other.value;
        case Kind::Variable: return var == other.var;
        default: return children == other.children;
    }
}

namespace {

// normalize helpers ---------------------------------------------------------

// Splits a normalized term into (negated?, payload): Negate(u) -> (true, u).
std::pair<bool, const Expr*> strip_negate(const Expr& e) {
    if (e.kind == Expr::Kind::Negate) return {true, &e.children[0]};
    return {false, &e};
}

Expr normalize_sum(std::vector<Expr> terms);
Expr normalize_product(std::vector<Expr> factors);

Expr wrap_sign(bool negative, Expr e) {
    if (!negative) return e;
    if (e.is_constant()) return Expr::constant(-e.value);
    if (e.kind == Expr::Kind::Negate) return std::move(e.children[0]);
    return Expr::negate(std::move(e));
}

Expr normalize_sum(std::vector<Expr> terms) {
    std::vector<Expr> flat;
    Int constant = 0;
    for (auto& t : terms) {
        if (t.kind == Expr::Kind::Sum) {
            for (auto& c : t.children) flat.push_back(std::move(c));
        } else if (t.kind == Expr::Kind::Negate && t.children[0].kind == Expr::Kind::Sum) {
            for (auto& c : t.children[0].children)
                flat.push_back(wrap_sign(true, std::move(c)));
        } else {
            flat.push_back(std::move(t));
        }
    }
    std::vector<Expr> kept;
    for (auto& t : flat) {
        if (t.is_constant())
            constant += t.value;
        else
            kept.push_back(std::move(t));
    }
    if (constant != 0) kept.push_back(Expr::constant(constant));
    if (kept.empty()) return Expr::constant(0);
    if (kept.size() == 1) return std::move(kept[0]);
    return Expr::sum(std::move(kept));
}

Expr normalize_product(std::vector<Expr> factors) {
    std::vector<Expr> flat;
    for (auto& f : factors) {
        auto [neg, payload] = strip_negate(f);
        Expr body = *payload;
        if (body.kind == Expr::Kind::Product) {
            bool first = true;
            for (auto& c : body.children) {
                if (first && neg) {
                    flat.push_back(wrap_sign(true, std::move(c)));
                    first = false;
                } else {
                    flat.push_back(std::move(c));
                    first = false;
                }
            }
        } else {
            flat.push_back(wrap_sign(neg, std::move(body)));
        }
    }
    Int constant = 1;
    std::vector<Expr> kept;
    bool negative = false;
    for (auto& f : flat) {
        auto [neg, payload] = strip_negate(f);
        if (neg) negative = !negative;
        if (payload->is_constant()) {
            constant *= payload->value;
        } else {
            kept.push_back(*payload);
        }
    }
    if (constant == 0) return Expr::constant(0);
    if (constant < 0) {
        negative = !negative;
        constant = -constant;
    }
    if (kept.empty()) return wrap_sign(negative, Expr::constant(constant));
    if (constant != 1) kept.insert(kept.begin(), Expr::constant(constant));
    Expr body = kept.size() == 1 ? std::move(kept[0]) : Expr::product(std::move(kept));
    return wrap_sign(negative, std::move(body));
}

Expr normalize_power(Expr base, Expr exponent) {
    if (exponent.is_constant(0)) return Expr::constant(1);
    if (exponent.is_constant(1)) return base;
    if (base.is_constant(0)) {
        // Exponent is either a positive constant or an expression over
        // variables >= 1, so it evaluates to >= 1 and the power is 0.
        return Expr::constant(0);
    }
    if (base.is_constant(1)) return Expr::constant(1);
    if (base.is_constant() && exponent.is_constant() && exponent.value > 0 &&
        exponent.value < 65536) {
        return Expr::constant(ipow(base.value, exponent.value.convert_to<unsigned long>()));
    }
    // (x^a)^b with constant exponents folds to x^(a*b).
    if (base.kind == Expr::Kind::Power && exponent.is_constant() &&
        base.children[1].is_constant()) {
        Int combined = base.children[1].value * exponent.value;
        return normalize_power(std::move(base.children[0]), Expr::constant(combined));
    }
    // (-u)^c: resolve the sign for constant exponents.
    if (base.kind == Expr::Kind::Negate && exponent.is_constant() && exponent.value > 0) {
        bool odd = boost::multiprecision::bit_test(exponent.value, 0);
        Expr inner = normalize_power(std::move(base.children[0]), std::move(exponent));
        return wrap_sign(odd, std::move(inner));
    }
    return Expr::power(std::move(base), std::move(exponent));
}

}  // namespace

Expr normalize(const Expr& e) {
    switch (e.kind) {
        case Expr::Kind::Constant:
        case Expr::Kind::Variable:
            return e;
        case Expr::Kind::Negate: {
            Expr inner = normalize(e.children[0]);
            return normalize_sum({wrap_sign(true, std::move(inner))});
        }
        case Expr::Kind::Sum: {
            std::vector<Expr> terms;
            terms.reserve(e.children.size());
            for (const auto& c : e.children) terms.push_back(normalize(c));
            return normalize_sum(std::move(terms));
        }
        case Expr::Kind::Product: {
            std::vector<Expr> factors;
            factors.reserve(e.children.size());
            for (const auto& c : e.children) factors.push_back(normalize(c));
            return normalize_product(std::move(factors));
        }
        case Expr::Kind::Power:
            return normalize_power(normalize(e.children[0]), normalize(e.children[1]));
    }
    return e;
}

namespace {

// printing -------------------------------------------------------------------

enum class Ctx { Top, SumTerm, ProductFactor, PowerOperand };

std::string print(const Expr& e, Ctx ctx);

std::string print_sum(const Expr& e) {
    std::string out;
    bool first = true;
    for (const auto& t : e.children) {
        auto [neg, payload] = strip_negate(t);
        bool neg_const = payload->is_constant() && payload->value < 0;
        if (first) {
            if (neg) out += "-";
            out += neg ? print(*payload, Ctx::SumTerm) : print(t, Ctx::SumTerm);
        } else if (neg) {
            out += " - " + print(*payload, Ctx::SumTerm);
        } else if (neg_const) {
            out += " - " + (-payload->value).str();
        } else {
            out += " + " + print(t, Ctx::SumTerm);
        }
        first = false;
    }
    return out;
}

std::string print(const Expr& e, Ctx ctx) {
    switch (e.kind) {
        case Expr::Kind::Constant: {
            if (e.value < 0) {
                std::string body = "-" + (-e.value).str();
                if (ctx == Ctx::ProductFactor || ctx == Ctx::PowerOperand)
                    return "(" + body + ")";
                return body;
            }
            return e.value.str();
        }
        case Expr::Kind::Variable:
            return "x" + std::to_string(e.var);
        case Expr::Kind::Negate: {
            std::string body = "-" + print(e.children[0], Ctx::SumTerm);
            if (ctx == Ctx::ProductFactor || ctx == Ctx::PowerOperand)
                return "(" + body + ")";
            return body;
        }
        case Expr::Kind::Sum: {
            std::string body = print_sum(e);
            if (ctx == Ctx::Top) return body;
            return "(" + body + ")";
        }
        case Expr::Kind::Product: {
            std::string out;
            bool first = true;
            for (const auto& f : e.children) {
                if (!first) out += "*";
                out += print(f, Ctx::ProductFactor);
                first = false;
            }
            if (ctx == Ctx::PowerOperand) return "(" + out + ")";
            return out;
        }
        case Expr::Kind::Power: {
            std::string base = print(e.children[0], Ctx::PowerOperand);
            std::string exp = print(e.children[1], Ctx::PowerOperand);
            return base + "^" + exp;
        }
    }
    return {};
}

}  // namespace

std::string to_text(const Expr& e) { return print(e, Ctx::Top); }

Int evaluate(const Expr& e, const std::vector<Int>& point) {
    switch (e.kind) {
        case Expr::Kind::Constant:
            return e.value;
        case Expr::Kind::Variable:
            if (e.var < 1 || static_cast<std::size_t>(e.var) > point.size())
                throw std::out_of_range("evaluate: variable index outside point");
            return point[e.var - 1];
        case Expr::Kind::Negate:
            return -evaluate(e.children[0], point);
        case Expr::Kind::Sum: {
            Int acc = 0;
            for (const auto& c : e.children) acc += evaluate(c, point);
            return acc;
        }
        case Expr::Kind::Product: {
            Int acc = 1;
            for (const auto& c : e.children) {
                acc *= evaluate(c, point);
                if (acc == 0) return acc;
            }
            return acc;
        }
        case Expr::Kind::Power: {
            Int base = evaluate(e.children[0], point);
            Int exp = evaluate(e.children[1], point);
            if (exp < 0) throw Error("evaluate: negative exponent");
            // Hard cap: 2^(1<<24) is already a 2 MiB number; anything past it
            // cannot arise from the bounded searches this library runs.
            if (exp > (1 << 24) && base != 0 && base != 1 && base != -1)
                throw Error("evaluate: exponent too large for exact arithmetic");
            return ipow(base, exp.convert_to<unsigned long>());
        }
    }
    return 0;
}

int max_variable(const Expr& e) {
    int best = e.kind == Expr::Kind::Variable ? e.var : 0;
    for (const auto& c : e.children) best = std::max(best, max_variable(c));
    return best;
}

void collect_variables(const Expr& e, std::vector<bool>& used) {
    if (e.kind == Expr::Kind::Variable) {
        if (static_cast<std::size_t>(e.var) > used.size()) used.resize(e.var, false);
        used[e.var - 1] = true;
    }
    for (const auto& c : e.children) collect_variables(c, used);
}

bool is_algebraic(const Expr& e) {
    if (e.kind == Expr::Kind::Power && !e.children[1].is_constant()) return false;
    for (const auto& c : e.children)
        if (!is_algebraic(c)) return false;
    return true;
}

bool provably_nonnegative(const Expr& e) {
    switch (e.kind) {
        case Expr::Kind::Constant: return e.value >= 0;
        case Expr::Kind::Variable: return true;
        case Expr::Kind::Negate: return false;
        case Expr::Kind::Sum:
        case Expr::Kind::Product:
            return std::all_of(e.children.begin(), e.children.end(),
                               [](const Expr& c) { return provably_nonnegative(c); });
        case Expr::Kind::Power:
            return provably_nonnegative(e.children[0]);
    }
    return false;
}

bool provably_positive(const Expr& e) {
    switch (e.kind) {
        case Expr::Kind::Constant: return e.value >= 1;
        case Expr::Kind::Variable: return true;
        case Expr::Kind::Negate: return false;
        case Expr::Kind::Sum:
            return std::all_of(e.children.begin(), e.children.end(),
                               [](const Expr& c) { return provably_nonnegative(c); }) &&
                   std::any_of(e.children.begin(), e.children.end(),
                               [](const Expr& c) { return provably_positive(c); });
        case Expr::Kind::Product:
            return std::all_of(e.children.begin(), e.children.end(),
                               [](const Expr& c) { return provably_positive(c); });
        case Expr::Kind::Power:
            return provably_positive(e.children[0]);
    }
    return false;
}

namespace {

Trend flip(Trend t) {
    if (t == Trend::Increasing) return Trend::Decreasing;
    if (t == Trend::Decreasing) return Trend::Increasing;
    return t;
}

Trend combine_sum(Trend a, Trend b) {
    if (a == Trend::Constant) return b;
    if (b == Trend::Constant) return a;
    if (a == b) return a;
    return Trend::Unknown;
}

}  // namespace

Trend trend_in(const Expr& e, int var) {
    switch (e.kind) {
        case Expr::Kind::Constant:
            return Trend::Constant;
        case Expr::Kind::Variable:
            return e.var == var ? Trend::Increasing : Trend::Constant;
        case Expr::Kind::Negate:
            return flip(trend_in(e.children[0], var));
        case Expr::Kind::Sum: {
            Trend acc = Trend::Constant;
            for (const auto& c : e.children) {
                acc = combine_sum(acc, trend_in(c, var));
                if (acc == Trend::Unknown) return acc;
            }
            return acc;
        }
        case Expr::Kind::Product: {
            // Sound only when every non-constant factor is provably >= 0 and
            // all var-dependent factors move the same way; the sign of the
            // constant part decides the overall direction.
            bool negative = false;
            Trend acc = Trend::Constant;
            for (const auto& c : e.children) {
                if (c.is_constant()) {
                    if (c.value < 0) negative = !negative;
                    if (c.value == 0) return Trend::Constant;
                    continue;
                }
                if (!provably_nonnegative(c)) return Trend::Unknown;
                Trend t = trend_in(c, var);
                if (t == Trend::Unknown) return Trend::Unknown;
                acc = combine_sum(acc, t);
                if (acc == Trend::Unknown) return Trend::Unknown;
            }
            return negative ? flip(acc) : acc;
        }
        case Expr::Kind::Power: {
            const Expr& base = e.children[0];
            const Expr& exp = e.children[1];
            Trend bt = trend_in(base, var);
            Trend et = trend_in(exp, var);
            if (bt == Trend::Unknown || et == Trend::Unknown) return Trend::Unknown;
            if (bt == Trend::Constant && et == Trend::Constant) return Trend::Constant;
            if (et == Trend::Constant) {
                // base^c with c >= 1 (c == 0 folded away): monotone in the
                // base as long as the base stays >= 0.
                if (!provably_nonnegative(base)) return Trend::Unknown;
                return bt;
            }
            // Variable exponent: need base >= 1 so larger exponents cannot
            // shrink the value; constant base 1/0 folded by normalize.
            if (!provably_positive(base)) return Trend::Unknown;
            if (base.is_constant() && base.value == 1) return Trend::Constant;
            if (bt == Trend::Constant) return et;
            return combine_sum(bt, et);
        }
    }
    return Trend::Unknown;
}

bool occurs_exponentially(const Expr& e, int var) {
    if (e.kind == Expr::Kind::Power) {
        const Expr& base = e.children[0];
        const Expr& exp = e.children[1];
        std::vector<bool> used;
        collect_variables(exp, used);
        if (static_cast<std::size_t>(var) <= used.size() && used[var - 1]) return true;
        if (!exp.is_constant()) {
            used.clear();
            collect_variables(base, used);
            if (static_cast<std::size_t>(var) <= used.size() && used[var - 1]) return true;
        }
    }
    for (const auto& c : e.children)
        if (occurs_exponentially(c, var)) return true;
    return false;
}

}  // namespace dio
