#include "hilbnode/mpoly.hpp"

#include <algorithm>
#include <set>

namespace hilbnode {

MPoly MPoly::constant(const Scalar& c) {
    MPoly p(c.ctx());
    p.add_term({}, c);
    return p;
}

MPoly MPoly::var(const std::string& name, const FieldCtx& ctx) {
    MPoly p(ctx);
    p.add_term({{name, 1}}, ctx.one());
    return p;
}

void MPoly::add_term(Monomial m, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(std::move(m), c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

MPoly MPoly::operator-() const {
    MPoly p(ctx_);
    for (const auto& [m, c] : terms_) p.terms_.emplace(m, -c);
    return p;
}

MPoly MPoly::operator+(const MPoly& o) const {
    MPoly p = *this;
    for (const auto& [m, c] : o.terms_) p.add_term(m, c);
    return p;
}

MPoly MPoly::operator-(const MPoly& o) const { return *this + (-o); }

MPoly MPoly::operator*(const MPoly& o) const {
    MPoly p(ctx_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) {
            Monomial m = ma;
            for (const auto& [v, e] : mb) m[v] += e;
            p.add_term(std::move(m), ca * cb);
        }
    return p;
}

MPoly MPoly::derivative(const std::string& name) const {
    MPoly p(ctx_);
    for (const auto& [m, c] : terms_) {
        auto it = m.find(name);
        if (it == m.end()) continue;
        Monomial d = m;
        if (it->second == 1)
            d.erase(name);
        else
            --d[name];
        p.add_term(std::move(d), c * ctx_.from_int(it->second));
    }
    return p;
}

Scalar MPoly::eval(const std::map<std::string, Scalar>& point) const {
    Scalar total = ctx_.zero();
    for (const auto& [m, c] : terms_) {
        Scalar t = c;
        for (const auto& [v, e] : m) {
            auto it = point.find(v);
            if (it == point.end()) throw FieldError("eval: unbound variable " + v);
            for (int k = 0; k < e; ++k) t *= it->second;
        }
        total += t;
    }
    return total;
}

int MPoly::total_degree() const {
    int deg = -1;
    for (const auto& [m, c] : terms_) {
        int d = 0;
        for (const auto& [v, e] : m) d += e;
        deg = std::max(deg, d);
    }
    return deg;
}

MPoly MPoly::homogeneous_part(int degree) const {
    MPoly p(ctx_);
    for (const auto& [m, c] : terms_) {
        int d = 0;
        for (const auto& [v, e] : m) d += e;
        if (d == degree) p.terms_.emplace(m, c);
    }
    return p;
}

std::vector<std::string> MPoly::variables() const {
    std::set<std::string> seen;
    for (const auto& [m, c] : terms_)
        for (const auto& [v, e] : m) seen.insert(v);
    return {seen.begin(), seen.end()};
}

std::string MPoly::str() const {
    if (terms_.empty()) return "0";
    // graded-lex: higher total degree first, then map order
    std::vector<std::pair<Monomial, Scalar>> sorted(terms_.begin(), terms_.end());
    std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
        int da = 0, db = 0;
        for (const auto& [v, e] : a.first) da += e;
        for (const auto& [v, e] : b.first) db += e;
        return da > db;
    });
    std::string s;
    for (const auto& [m, c] : sorted) {
        std::string mono;
        for (const auto& [v, e] : m) {
            if (!mono.empty()) mono += "*";
            mono += v;
            if (e > 1) mono += "^" + std::to_string(e);
        }
        std::string coeff = c.str();
        bool negative = !coeff.empty() && coeff[0] == '-';
        if (s.empty()) {
            s += negative ? "-" : "";
        } else {
            s += negative ? " - " : " + ";
        }
        if (negative) coeff = coeff.substr(1);
        if (mono.empty())
            s += coeff;
        else if (coeff == "1")
            s += mono;
        else
            s += coeff + "*" + mono;
    }
    return s;
}

int hessian_rank(const MPoly& p) {
    MPoly quad = p.homogeneous_part(2);
    std::vector<std::string> vars = quad.variables();
    const std::size_t n = vars.size();
    const FieldCtx& ctx = p.ctx();
    Mat h(n, Vec(n, ctx.zero()));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            MPoly dij = quad.derivative(vars[i]).derivative(vars[j]);
            if (!dij.is_zero()) h[i][j] = dij.terms().begin()->second;
        }
    return rref(h);
}

bool has_unit_partial(const MPoly& p) {
    for (const auto& v : p.variables()) {
        MPoly d = p.derivative(v);
        if (d.terms().size() == 1 && d.terms().begin()->first.empty()) return true;
    }
    return false;
}

}  // namespace hilbnode
