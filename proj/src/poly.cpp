#include "folrig/poly.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <sstream>
#include <unordered_map>

namespace folrig {

void Poly::check_compat(const Poly& o) const {
    if (num_vars_ != o.num_vars_) throw std::invalid_argument("numVars mismatch");
}

Poly Poly::constant(int num_vars, const FieldElem& c) {
    Poly p(num_vars);
    p.add_term(Exponents(num_vars, 0), c);
    return p;
}

Poly Poly::variable(int num_vars, int i) {
    if (i < 0 || i >= num_vars) throw std::out_of_range("variable index");
    Exponents e(num_vars, 0);
    e[i] = 1;
    return monomial(num_vars, std::move(e), FieldElem(1));
}

Poly Poly::monomial(int num_vars, Exponents e, const FieldElem& c) {
    if ((int)e.size() != num_vars) throw std::invalid_argument("exponent vector length");
    Poly p(num_vars);
    p.add_term(std::move(e), c);
    return p;
}

FieldElem Poly::coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? FieldElem(0) : it->second;
}

void Poly::add_term(const Exponents& e, const FieldElem& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Poly Poly::operator+(const Poly& o) const {
    check_compat(o);
    Poly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    check_compat(o);
    Poly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

Poly Poly::operator-() const {
    Poly r(num_vars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

Poly Poly::scale(const FieldElem& c) const {
    Poly r(num_vars_);
    if (c.is_zero()) return r;
    for (const auto& [e, v] : terms_) r.terms_.emplace(e, c * v);
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    check_compat(o);
    Poly r(num_vars_);
    Exponents e(num_vars_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            for (int i = 0; i < num_vars_; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

Poly Poly::partial(int i) const {
    if (i < 0 || i >= num_vars_) throw std::out_of_range("variable index");
    Poly r(num_vars_);
    for (const auto& [e, c] : terms_) {
        if (e[i] == 0) continue;
        Exponents d = e;
        d[i] -= 1;
        r.add_term(d, FieldElem(e[i]) * c);
    }
    return r;
}

FieldElem Poly::eval(std::span<const FieldElem> point) const {
    if ((int)point.size() != num_vars_) throw std::invalid_argument("point dimension");
    FieldElem acc(0);
    for (const auto& [e, c] : terms_) {
        FieldElem t = c;
        for (int i = 0; i < num_vars_; ++i)
            for (int k = 0; k < e[i]; ++k) t *= point[i];
        acc += t;
    }
    return acc;
}

Poly Poly::substitute(int i, const Poly& value) const {
    check_compat(value);
    Poly r(num_vars_);
    for (const auto& [e, c] : terms_) {
        Exponents rest = e;
        int k = rest[i];
        rest[i] = 0;
        Poly t = Poly::monomial(num_vars_, rest, c);
        for (int j = 0; j < k; ++j) t = t * value;
        r += t;
    }
    return r;
}

Poly Poly::extended(int new_num_vars) const {
    if (new_num_vars < num_vars_) throw std::invalid_argument("cannot shrink variable set");
    Poly r(new_num_vars);
    for (const auto& [e, c] : terms_) {
        Exponents e2 = e;
        e2.resize(new_num_vars, 0);
        r.terms_.emplace(std::move(e2), c);
    }
    return r;
}

int Poly::total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
        int t = 0;
        for (int v : e) t += v;
        d = std::max(d, t);
    }
    return d;
}

std::optional<int> Poly::homogeneous_degree() const {
    if (terms_.empty()) return 0;
    std::optional<int> deg;
    for (const auto& [e, c] : terms_) {
        int t = 0;
        for (int v : e) t += v;
        if (!deg) deg = t;
        else if (*deg != t) return std::nullopt;
    }
    return deg;
}

int Poly::degree_in(int i) const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[i]);
    return d;
}

long Poly::radicand() const {
    for (const auto& [e, c] : terms_)
        if (c.radicand() != 0) return c.radicand();
    return 0;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) out << " + ";
        first = false;
        if (c.is_rational())
            out << c.str();
        else
            out << "(" << c.str() << ")";
        out << " *";
        for (int i = 0; i < num_vars_; ++i) out << " x" << i << "^" << e[i];
    }
    return out.str();
}

std::vector<Exponents> homogeneous_monomials(int num_vars, int d) {
    std::vector<Exponents> out;
    if (d < 0) return out;
    Exponents cur(num_vars, 0);
    std::function<void(int, int)> rec = [&](int var, int left) {
        if (var == num_vars - 1) {
            cur[var] = left;
            out.push_back(cur);
            return;
        }
        for (int e = left; e >= 0; --e) {
            cur[var] = e;
            rec(var + 1, left - e);
        }
    };
    rec(0, d);
    return out;
}

namespace {

Poly det_expand(const std::vector<std::vector<Poly>>& m, int row, std::uint64_t mask,
                std::unordered_map<std::uint64_t, Poly>& memo, int nv) {
    if (row < 0) return Poly::constant(nv, FieldElem(1));
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    Poly acc(nv);
    int pos = 0;
    for (size_t ci = 0; ci < m[row].size(); ++ci) {
        if (!(mask & (1ull << ci))) continue;
        if (!m[row][ci].is_zero()) {
            Poly sub = det_expand(m, row - 1, mask & ~(1ull << ci), memo, nv);
            Poly term = m[row][ci] * sub;
            acc += ((row + pos) % 2) ? -term : term;
        }
        ++pos;
    }
    memo.emplace(mask, acc);
    return acc;
}

}  // namespace

Poly poly_det(const std::vector<std::vector<Poly>>& m) {
    if (m.empty()) throw std::invalid_argument("empty matrix");
    size_t k = m.size();
    for (const auto& row : m)
        if (row.size() != k) throw std::invalid_argument("matrix must be square");
    if (k > 62) throw std::invalid_argument("matrix too large for mask expansion");
    int nv = m[0][0].num_vars();
    std::unordered_map<std::uint64_t, Poly> memo;
    return det_expand(m, (int)k - 1, (1ull << k) - 1, memo, nv);
}

Poly Poly::parse(const std::string& text, int num_vars) {
    Poly p(num_vars);
    std::string t = text;
    if (t == "0") return p;
    size_t pos = 0;
    while (pos < t.size()) {
        // split on " + " at top level (not inside parentheses)
        int depth = 0;
        size_t end = pos;
        while (end < t.size()) {
            if (t[end] == '(') ++depth;
            else if (t[end] == ')') --depth;
            else if (depth == 0 && t.compare(end, 3, " + ") == 0 && end + 3 < t.size()) break;
            ++end;
        }
        std::string term = t.substr(pos, end - pos);
        size_t star = term.find(" *");
        if (star == std::string::npos) throw std::invalid_argument("malformed poly term '" + term + "'");
        FieldElem c = FieldElem::parse(term.substr(0, star));
        Exponents e(num_vars, 0);
        std::istringstream rest(term.substr(star + 2));
        std::string tok;
        while (rest >> tok) {
            size_t caret = tok.find('^');
            if (tok[0] != 'x' || caret == std::string::npos)
                throw std::invalid_argument("malformed monomial '" + tok + "'");
            int var = std::stoi(tok.substr(1, caret - 1));
            int ex = std::stoi(tok.substr(caret + 1));
            if (var < 0 || var >= num_vars) throw std::invalid_argument("variable out of range");
            e[var] = ex;
        }
        p.add_term(e, c);
        pos = (end < t.size()) ? end + 3 : end;
    }
    return p;
}

}  // namespace folrig
