#include "folrig/foliation.hpp"

#include "folrig/linalg.hpp"

#include <functional>
#include <sstream>

namespace folrig {

std::optional<Distribution> omega_from_fields(const std::vector<VField>& fields) {
    if (fields.empty()) throw std::invalid_argument("need at least one field");
    int nv = fields[0].num_vars;
    int n = nv - 1;
    for (const VField& f : fields) {
        if (!f.homogeneous_degree()) throw std::invalid_argument("fields must be homogeneous");
    }
    std::vector<VField> all = fields;
    all.push_back(VField::euler(nv));
    PForm omega = contract_volume(all);
    if (omega.is_zero()) return std::nullopt;
    Distribution d;
    d.n = n;
    d.q = omega.arity();
    auto cd = omega.homogeneous_degree();
    if (!cd) throw std::logic_error("contraction of homogeneous data must be homogeneous");
    d.degree = *cd - 1;
    d.omega = std::move(omega);
    std::vector<int> e;
    for (const VField& f : fields) e.push_back(1 - *f.homogeneous_degree());
    d.splitting_degrees = std::move(e);
    return d;
}

DescendsResult check_descends(const PForm& omega) {
    DescendsResult res;
    PForm r = interior_product(VField::euler(omega.num_vars()), omega);
    if (!r.is_zero()) {
        const auto& [t, c] = *r.terms().begin();
        std::ostringstream msg;
        msg << "i_R omega != 0 at tuple (";
        for (size_t i = 0; i < t.size(); ++i) msg << (i ? "," : "") << t[i];
        msg << "): " << c.str();
        res.violation = msg.str();
        return res;
    }
    auto deg = omega.homogeneous_degree();
    if (!deg) {
        res.violation = "coefficients not homogeneous of a common degree";
        return res;
    }
    res.ok = true;
    res.degree = *deg - 1;
    return res;
}

namespace {

// wedge that treats arities beyond the variable count as identically zero
bool wedge_vanishes(const PForm& a, const PForm& b) {
    if (a.arity() + b.arity() > a.num_vars()) return true;
    return wedge(a, b).is_zero();
}

}  // namespace

CheckResult check_pluecker(const PForm& omega) {
    if (omega.arity() < 1) throw std::invalid_argument("arity must be >= 1");
    CheckResult res;
    for (const IdxTuple& v : basis_multivectors(omega.num_vars(), omega.arity() - 1)) {
        if (!wedge_vanishes(interior_multi(v, omega), omega)) {
            res.counterexample = v;
            return res;
        }
    }
    res.pass = true;
    return res;
}

CheckResult check_integrability(const PForm& omega) {
    if (omega.arity() < 1) throw std::invalid_argument("arity must be >= 1");
    CheckResult res;
    PForm dw = exterior_derivative(omega);
    for (const IdxTuple& v : basis_multivectors(omega.num_vars(), omega.arity() - 1)) {
        if (!wedge_vanishes(interior_multi(v, omega), dw)) {
            res.counterexample = v;
            return res;
        }
    }
    res.pass = true;
    return res;
}

PreparaResult prepara_normalize(const std::vector<VField>& fields) {
    if (fields.empty()) throw std::invalid_argument("need at least one field");
    int nv = fields[0].num_vars;
    int n = nv - 1;
    int q = (int)fields.size();
    int degsum = 0;
    std::vector<int> degs;
    for (const VField& f : fields) {
        auto d = f.homogeneous_degree();
        if (!d) throw std::invalid_argument("fields must be homogeneous");
        degs.push_back(*d);
        degsum += *d;
    }
    long cval = (long)(n + 1 - q + degsum);
    FieldElem c = (q % 2) ? FieldElem(-cval) : FieldElem(cval);
    if (c.is_zero()) throw std::domain_error("normalization constant vanishes");

    VField R = VField::euler(nv);
    std::vector<VField> with_r = fields;
    with_r.push_back(R);
    PForm eta = contract_volume(with_r);
    PForm deta = exterior_derivative(eta);
    PForm target = contract_volume(fields).scale(c);
    PForm residual = deta - target;

    // residual must equal c * sum_i nu_i * B_i with
    // B_i = i_{X_1} .. i_R(at slot i) .. i_{X_q} Omega and deg nu_i = deg X_i - 1
    std::vector<PForm> basis_forms;
    for (int i = 0; i < q; ++i) {
        std::vector<VField> repl = fields;
        repl[i] = R;
        basis_forms.push_back(contract_volume(repl));
    }

    // unknowns: coefficients of each nu_i over its monomial basis
    struct Unknown { int field; Exponents mono; };
    std::vector<Unknown> unknowns;
    for (int i = 0; i < q; ++i) {
        if (degs[i] == 0) continue;  // nu_i would need degree -1, so nu_i = 0
        for (auto& m : homogeneous_monomials(nv, degs[i] - 1)) unknowns.push_back({i, m});
    }

    // collect equations: for every (tuple, monomial) coefficient of residual
    // and of the candidate combination
    std::map<std::pair<IdxTuple, Exponents>, int> rowidx;
    auto row_of = [&](const IdxTuple& t, const Exponents& e) {
        auto key = std::make_pair(t, e);
        auto it = rowidx.find(key);
        if (it != rowidx.end()) return it->second;
        int id = (int)rowidx.size();
        rowidx.emplace(key, id);
        return id;
    };
    std::vector<std::map<int, FieldElem>> cols(unknowns.size());
    for (size_t u = 0; u < unknowns.size(); ++u) {
        const auto& [fi, mono] = unknowns[u];
        PForm contrib = basis_forms[fi].scale_poly(Poly::monomial(nv, mono, c));
        for (const auto& [t, poly] : contrib.terms())
            for (const auto& [e, coef] : poly.terms()) cols[u][row_of(t, e)] = coef;
    }
    for (const auto& [t, poly] : residual.terms())
        for (const auto& [e, coef] : poly.terms()) row_of(t, e);

    int rows = (int)rowidx.size();
    FMatrix A(rows, (int)unknowns.size());
    for (size_t u = 0; u < unknowns.size(); ++u)
        for (const auto& [r, v] : cols[u]) A.at(r, (int)u) = v;
    std::vector<FieldElem> b(rows, FieldElem(0));
    for (const auto& [t, poly] : residual.terms())
        for (const auto& [e, coef] : poly.terms()) b[rowidx.at({t, e})] = coef;

    auto sol = A.solve(b);
    if (!sol) throw std::domain_error("d eta is not in the expected span (hypotheses violated)");

    std::vector<Poly> nus(q, Poly(nv));
    for (size_t u = 0; u < unknowns.size(); ++u) {
        if ((*sol)[u].is_zero()) continue;
        nus[unknowns[u].field] += Poly::monomial(nv, unknowns[u].mono, (*sol)[u]);
    }
    PreparaResult res;
    res.c = c;
    res.radial_factors = nus;
    for (int i = 0; i < q; ++i) res.adjusted.push_back(fields[i].plus_scaled(R, nus[i]));

    // re-verify both stated equalities exactly
    PForm check1 = contract_volume(res.adjusted).scale(c);
    if (!(check1 == deta)) throw std::logic_error("normalization post-check failed (d eta)");
    std::vector<VField> adj_r = res.adjusted;
    adj_r.push_back(R);
    if (!(contract_volume(adj_r) == eta)) throw std::logic_error("normalization post-check failed (eta)");
    return res;
}

CheckResult deformation_tangent_check(const PForm& theta, const PForm& eta, TangentMode mode) {
    CheckResult res;
    int nv = theta.num_vars();
    if (mode == TangentMode::Codim1) {
        bool lhs_zero;
        if (theta.arity() + eta.arity() + 1 > nv) {
            lhs_zero = true;
        } else {
            lhs_zero = (wedge(theta, exterior_derivative(eta)) +
                        wedge(eta, exterior_derivative(theta))).is_zero();
        }
        bool alt_zero = (theta.arity() + eta.arity() + 2 > nv) ||
                        wedge(exterior_derivative(theta), exterior_derivative(eta)).is_zero();
        if (interior_product(VField::euler(eta.num_vars()), eta).is_zero()) {
            if (lhs_zero != alt_zero)
                throw std::logic_error("codim-1 tangent conditions disagree on radial-closed input");
        }
        res.pass = lhs_zero;
        if (!res.pass) res.counterexample = IdxTuple{};
        return res;
    }
    for (const IdxTuple& v : basis_multivectors(theta.num_vars(), theta.arity() - 1)) {
        PForm a = interior_multi(v, eta);
        PForm b = interior_multi(v, theta);
        if (a.arity() + theta.arity() > nv) continue;
        PForm s = wedge(a, theta) + wedge(b, eta);
        if (!s.is_zero()) {
            res.counterexample = v;
            return res;
        }
    }
    res.pass = true;
    return res;
}

Distribution pullback_linear(const Distribution& d, int extra_dims) {
    if (extra_dims < 1) throw std::invalid_argument("extra_dims must be >= 1");
    Distribution r;
    r.n = d.n + extra_dims;
    r.q = d.q;
    r.degree = d.degree;
    r.omega = d.omega.extended(d.n + 1 + extra_dims);
    if (d.splitting_degrees) {
        auto e = *d.splitting_degrees;
        for (int i = 0; i < extra_dims; ++i) e.push_back(1);
        r.splitting_degrees = std::move(e);
    }
    return r;
}

}  // namespace folrig
