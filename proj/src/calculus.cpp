#include "folrig/calculus.hpp"

#include <algorithm>
#include <sstream>

namespace folrig {

VField VField::euler(int nv) {
    VField r(nv);
    for (int i = 0; i < nv; ++i) r.comp[i] = Poly::variable(nv, i);
    return r;
}

VField VField::coordinate(int nv, int i) {
    VField r(nv);
    r.comp[i] = Poly::constant(nv, FieldElem(1));
    return r;
}

bool VField::is_zero() const {
    return std::all_of(comp.begin(), comp.end(), [](const Poly& p) { return p.is_zero(); });
}

Poly VField::apply(const Poly& f) const {
    Poly r(num_vars);
    for (int i = 0; i < num_vars; ++i) {
        if (comp[i].is_zero()) continue;
        r += comp[i] * f.partial(i);
    }
    return r;
}

VField VField::operator+(const VField& o) const {
    if (num_vars != o.num_vars) throw std::invalid_argument("numVars mismatch");
    VField r(num_vars);
    for (int i = 0; i < num_vars; ++i) r.comp[i] = comp[i] + o.comp[i];
    return r;
}

VField VField::operator-(const VField& o) const {
    if (num_vars != o.num_vars) throw std::invalid_argument("numVars mismatch");
    VField r(num_vars);
    for (int i = 0; i < num_vars; ++i) r.comp[i] = comp[i] - o.comp[i];
    return r;
}

VField VField::scale(const FieldElem& c) const {
    VField r(num_vars);
    for (int i = 0; i < num_vars; ++i) r.comp[i] = comp[i].scale(c);
    return r;
}

VField VField::plus_scaled(const VField& o, const Poly& factor) const {
    if (num_vars != o.num_vars) throw std::invalid_argument("numVars mismatch");
    VField r(num_vars);
    for (int i = 0; i < num_vars; ++i) r.comp[i] = comp[i] + factor * o.comp[i];
    return r;
}

std::optional<int> VField::homogeneous_degree() const {
    std::optional<int> deg;
    for (const Poly& p : comp) {
        if (p.is_zero()) continue;
        auto d = p.homogeneous_degree();
        if (!d) return std::nullopt;
        if (!deg) deg = d;
        else if (*deg != *d) return std::nullopt;
    }
    return deg ? deg : std::optional<int>(0);
}

VField VField::extended(int new_num_vars) const {
    VField r(new_num_vars);
    for (int i = 0; i < num_vars; ++i) r.comp[i] = comp[i].extended(new_num_vars);
    return r;
}

// ---------------------------------------------------------------------------

PForm PForm::volume(int num_vars) {
    PForm w(num_vars, num_vars);
    IdxTuple all(num_vars);
    for (int i = 0; i < num_vars; ++i) all[i] = i;
    w.terms_.emplace(std::move(all), Poly::constant(num_vars, FieldElem(1)));
    return w;
}

Poly PForm::coeff(const IdxTuple& t) const {
    auto it = terms_.find(t);
    return it == terms_.end() ? Poly(num_vars_) : it->second;
}

void PForm::add_term(const IdxTuple& t, const Poly& c) {
    if ((int)t.size() != arity_) throw std::invalid_argument("tuple arity mismatch");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(t, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

PForm PForm::operator+(const PForm& o) const {
    if (num_vars_ != o.num_vars_ || arity_ != o.arity_) throw std::invalid_argument("form shape mismatch");
    PForm r = *this;
    for (const auto& [t, c] : o.terms_) r.add_term(t, c);
    return r;
}

PForm PForm::operator-(const PForm& o) const {
    if (num_vars_ != o.num_vars_ || arity_ != o.arity_) throw std::invalid_argument("form shape mismatch");
    PForm r = *this;
    for (const auto& [t, c] : o.terms_) r.add_term(t, -c);
    return r;
}

PForm PForm::operator-() const {
    PForm r(num_vars_, arity_);
    for (const auto& [t, c] : terms_) r.terms_.emplace(t, -c);
    return r;
}

PForm PForm::scale(const FieldElem& c) const {
    PForm r(num_vars_, arity_);
    if (c.is_zero()) return r;
    for (const auto& [t, v] : terms_) r.terms_.emplace(t, v.scale(c));
    return r;
}

PForm PForm::scale_poly(const Poly& f) const {
    PForm r(num_vars_, arity_);
    for (const auto& [t, v] : terms_) r.add_term(t, f * v);
    return r;
}

std::optional<int> PForm::homogeneous_degree() const {
    std::optional<int> deg;
    for (const auto& [t, c] : terms_) {
        auto d = c.homogeneous_degree();
        if (!d) return std::nullopt;
        if (!deg) deg = d;
        else if (*deg != *d) return std::nullopt;
    }
    return deg ? deg : std::optional<int>(0);
}

PForm PForm::extended(int new_num_vars) const {
    PForm r(new_num_vars, arity_);
    for (const auto& [t, c] : terms_) r.terms_.emplace(t, c.extended(new_num_vars));
    return r;
}

std::string PForm::str() const {
    if (terms_.empty()) return "0\n";
    std::ostringstream out;
    for (const auto& [t, c] : terms_) {
        out << "(" << c.str() << ") *";
        if (t.empty()) {
            out << " 1";
        } else {
            out << " ";
            for (size_t i = 0; i < t.size(); ++i) {
                if (i) out << "^";
                out << "dx_" << t[i];
            }
        }
        out << "\n";
    }
    return out.str();
}

// ---------------------------------------------------------------------------

PForm interior_product(const VField& X, const PForm& omega) {
    if (omega.arity() == 0) throw std::invalid_argument("interior product needs arity >= 1");
    if (X.num_vars != omega.num_vars()) throw std::invalid_argument("numVars mismatch");
    PForm r(omega.num_vars(), omega.arity() - 1);
    for (const auto& [t, c] : omega.terms()) {
        for (size_t j = 0; j < t.size(); ++j) {
            const Poly& xi = X.comp[t[j]];
            if (xi.is_zero()) continue;
            IdxTuple rest;
            rest.reserve(t.size() - 1);
            for (size_t k = 0; k < t.size(); ++k)
                if (k != j) rest.push_back(t[k]);
            Poly term = xi * c;
            r.add_term(rest, (j % 2) ? -term : term);
        }
    }
    return r;
}

PForm wedge(const PForm& a, const PForm& b) {
    if (a.num_vars() != b.num_vars()) throw std::invalid_argument("numVars mismatch");
    if (a.arity() + b.arity() > a.num_vars()) throw std::invalid_argument("arity overflow");
    PForm r(a.num_vars(), a.arity() + b.arity());
    for (const auto& [I, f] : a.terms()) {
        for (const auto& [J, g] : b.terms()) {
            // skip shared indices; count inversions for the merge sign
            int inversions = 0;
            bool shared = false;
            for (int x : I) {
                for (int y : J) {
                    if (x == y) { shared = true; break; }
                    if (x > y) ++inversions;
                }
                if (shared) break;
            }
            if (shared) continue;
            IdxTuple merged;
            merged.reserve(I.size() + J.size());
            std::merge(I.begin(), I.end(), J.begin(), J.end(), std::back_inserter(merged));
            Poly term = f * g;
            r.add_term(merged, (inversions % 2) ? -term : term);
        }
    }
    return r;
}

PForm exterior_derivative(const PForm& omega) {
    PForm r(omega.num_vars(), omega.arity() + 1);
    for (const auto& [t, c] : omega.terms()) {
        for (int i = 0; i < omega.num_vars(); ++i) {
            Poly df = c.partial(i);
            if (df.is_zero()) continue;
            if (std::binary_search(t.begin(), t.end(), i)) continue;
            IdxTuple ext;
            ext.reserve(t.size() + 1);
            int pos = 0;
            for (int x : t)
                if (x < i) ++pos;
            ext.assign(t.begin(), t.end());
            ext.insert(ext.begin() + pos, i);
            r.add_term(ext, (pos % 2) ? -df : df);
        }
    }
    return r;
}

VField lie_bracket(const VField& X, const VField& Y) {
    if (X.num_vars != Y.num_vars) throw std::invalid_argument("numVars mismatch");
    VField r(X.num_vars);
    for (int k = 0; k < X.num_vars; ++k) r.comp[k] = X.apply(Y.comp[k]) - Y.apply(X.comp[k]);
    return r;
}

PForm lie_derivative(const VField& X, const PForm& omega) {
    PForm d_iX(omega.num_vars(), omega.arity());
    if (omega.arity() >= 1) d_iX = exterior_derivative(interior_product(X, omega));
    return interior_product(X, exterior_derivative(omega)) + d_iX;
}

PForm lie_derivative_leibniz(const VField& X, const PForm& omega) {
    PForm r(omega.num_vars(), omega.arity());
    for (const auto& [t, c] : omega.terms()) {
        r.add_term(t, X.apply(c));
        // f * dx_{i1} ^ ... ^ d(X^{i_j}) ^ ... ^ dx_{ip}
        for (size_t j = 0; j < t.size(); ++j) {
            const Poly& component = X.comp[t[j]];
            for (int v = 0; v < omega.num_vars(); ++v) {
                Poly dv = component.partial(v);
                if (dv.is_zero()) continue;
                // replace slot j by dx_v, then sort back with sign
                IdxTuple rep(t);
                rep[j] = v;
                int sign = 1;
                bool dup = false;
                for (size_t a = 1; a < rep.size() && !dup; ++a) {
                    size_t b = a;
                    while (b > 0 && rep[b - 1] >= rep[b]) {
                        if (rep[b - 1] == rep[b]) { dup = true; break; }
                        std::swap(rep[b - 1], rep[b]);
                        sign = -sign;
                        --b;
                    }
                }
                if (dup) continue;
                Poly term = c * dv;
                r.add_term(rep, sign > 0 ? term : -term);
            }
        }
    }
    return r;
}

Poly divergence(const VField& X) {
    Poly r(X.num_vars);
    for (int i = 0; i < X.num_vars; ++i) r += X.comp[i].partial(i);
    return r;
}

PForm contract_volume(const std::vector<VField>& fields) {
    if (fields.empty()) throw std::invalid_argument("contract_volume needs at least one field");
    int nv = fields[0].num_vars;
    if ((int)fields.size() > nv) throw std::invalid_argument("too many fields");
    PForm w = PForm::volume(nv);
    for (auto it = fields.rbegin(); it != fields.rend(); ++it) {
        if (it->num_vars != nv) throw std::invalid_argument("numVars mismatch");
        w = interior_product(*it, w);
    }
    return w;
}

PForm interior_multi(const IdxTuple& idx, const PForm& omega) {
    PForm w = omega;
    for (auto it = idx.rbegin(); it != idx.rend(); ++it)
        w = interior_product(VField::coordinate(omega.num_vars(), *it), w);
    return w;
}

std::vector<IdxTuple> basis_multivectors(int num_vars, int k) {
    std::vector<IdxTuple> out;
    if (k == 0) {
        out.push_back({});
        return out;
    }
    IdxTuple cur(k);
    // iterative choose(num_vars, k)
    for (int i = 0; i < k; ++i) cur[i] = i;
    while (true) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[i] == num_vars - k + i) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

}  // namespace folrig
