#include "zplusi/dioph.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "zplusi/errors.hpp"

namespace zplusi {

namespace {

RatFunc rf_pow(const RatFunc& base, unsigned long e) {
    RatFunc r(Rational(1));
    RatFunc b = base;
    while (e > 0) {
        if (e & 1ul) r = r * b;
        b = b * b;
        e >>= 1ul;
    }
    return r;
}

void append_basis(std::vector<RatFunc>& basis, const RatFunc& f) {
    for (const RatFunc& g : basis)
        if (g == f) return;
    basis.push_back(f);
}

// Fresh-name helper: deterministic, collision-proofed by underscore suffixes.
std::string fresh_name(std::string base, std::set<std::string>& used) {
    while (used.count(base)) base += "_";
    used.insert(base);
    return base;
}

}  // namespace

MultiPoly::MultiPoly(std::vector<std::string> variables, std::size_t n_params)
    : vars_(std::move(variables)), n_params_(n_params) {
    if (n_params_ > vars_.size())
        throw ArityMismatch("more parameters than variables");
}

MultiPoly MultiPoly::constant(std::vector<std::string> variables, std::size_t n_params,
                              const RatFunc& c) {
    MultiPoly p(std::move(variables), n_params);
    p.add_term(Exps(p.vars_.size(), 0), c);
    return p;
}

MultiPoly MultiPoly::var(std::vector<std::string> variables, std::size_t n_params,
                         std::size_t index) {
    MultiPoly p(std::move(variables), n_params);
    if (index >= p.vars_.size()) throw ArityMismatch("variable index out of range");
    Exps e(p.vars_.size(), 0);
    e[index] = 1;
    p.add_term(e, RatFunc(Rational(1)));
    return p;
}

void MultiPoly::add_term(const Exps& exps, const RatFunc& coeff) {
    if (exps.size() != vars_.size()) throw ArityMismatch("exponent vector arity mismatch");
    if (coeff.is_zero()) return;
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
        terms_.emplace(exps, coeff);
    } else {
        it->second = it->second + coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    if (vars_ != o.vars_) throw ArityMismatch("adding polynomials over different variables");
    MultiPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    return *this + o.scaled(RatFunc(Rational(-1)));
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    if (vars_ != o.vars_)
        throw ArityMismatch("multiplying polynomials over different variables");
    MultiPoly r(vars_, n_params_);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) {
            Exps e(ea);
            for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

MultiPoly MultiPoly::scaled(const RatFunc& c) const {
    MultiPoly r(vars_, n_params_);
    if (c.is_zero()) return r;
    for (const auto& [e, v] : terms_) r.add_term(e, v * c);
    return r;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
    return vars_ == o.vars_ && terms_ == o.terms_;
}

RatFunc MultiPoly::eval(const std::vector<RatFunc>& point) const {
    if (point.size() != vars_.size()) throw ArityMismatch("evaluation point arity mismatch");
    // power cache per variable, grown to the largest exponent used
    std::vector<std::vector<RatFunc>> pows(point.size());
    auto power = [&](std::size_t i, unsigned long e) -> const RatFunc& {
        auto& col = pows[i];
        if (col.empty()) col.push_back(RatFunc(Rational(1)));
        while (col.size() <= e) col.push_back(col.back() * point[i]);
        return col[e];
    };
    RatFunc acc;
    for (const auto& [exps, c] : terms_) {
        RatFunc term = c;
        for (std::size_t i = 0; i < exps.size(); ++i)
            if (exps[i] > 0) term = term * power(i, exps[i]);
        acc = acc + term;
    }
    return acc;
}

MultiPoly MultiPoly::remapped(std::vector<std::string> new_vars, std::size_t new_n_params,
                              const std::vector<std::size_t>& index_map) const {
    if (index_map.size() != vars_.size())
        throw ArityMismatch("index map arity mismatch");
    MultiPoly r(std::move(new_vars), new_n_params);
    for (std::size_t i : index_map)
        if (i >= r.vars_.size()) throw ArityMismatch("index map target out of range");
    for (const auto& [exps, c] : terms_) {
        Exps e(r.vars_.size(), 0);
        for (std::size_t i = 0; i < exps.size(); ++i) e[index_map[i]] += exps[i];
        r.add_term(e, c);
    }
    return r;
}

std::vector<std::string> system_variables(const DiophSystem& sys) {
    std::vector<std::string> v = sys.params;
    v.insert(v.end(), sys.exists.begin(), sys.exists.end());
    return v;
}

bool clause_satisfied(const Clause& c, const std::vector<RatFunc>& point) {
    for (const MultiPoly& f : c.eqs)
        if (!f.eval(point).is_zero()) return false;
    for (const MultiPoly& f : c.nonzero)
        if (f.eval(point).is_zero()) return false;
    return true;
}

bool system_satisfied(const DiophSystem& sys, const std::vector<RatFunc>& param_point,
                      const std::vector<RatFunc>& exists_point) {
    if (param_point.size() != sys.params.size() || exists_point.size() != sys.exists.size())
        throw ArityMismatch("assignment arity mismatch");
    std::vector<RatFunc> point = param_point;
    point.insert(point.end(), exists_point.begin(), exists_point.end());
    for (const Clause& c : sys.clauses)
        if (clause_satisfied(c, point)) return true;
    return false;
}

DiophSystem specialize(const DiophSystem& sys, const std::vector<RatFunc>& point) {
    if (point.size() != sys.params.size())
        throw ArityMismatch("specialization point arity mismatch");
    std::size_t m = sys.params.size();
    DiophSystem out;
    out.exists = sys.exists;
    out.coeff_basis = sys.coeff_basis;
    for (const RatFunc& v : point) append_basis(out.coeff_basis, v);

    auto substitute = [&](const MultiPoly& f) {
        if (f.variables().size() != m + sys.exists.size())
            throw ArityMismatch("system polynomial arity mismatch");
        MultiPoly r(sys.exists, 0);
        for (const auto& [exps, c] : f.terms()) {
            RatFunc coeff = c;
            for (std::size_t i = 0; i < m; ++i)
                if (exps[i] > 0) coeff = coeff * rf_pow(point[i], exps[i]);
            MultiPoly::Exps tail(exps.begin() + static_cast<long>(m), exps.end());
            r.add_term(tail, coeff);
        }
        return r;
    };
    for (const Clause& c : sys.clauses) {
        Clause nc;
        for (const MultiPoly& f : c.eqs) nc.eqs.push_back(substitute(f));
        for (const MultiPoly& f : c.nonzero) nc.nonzero.push_back(substitute(f));
        out.clauses.push_back(std::move(nc));
    }
    return out;
}

DiophSystem to_single_equation(const DiophSystem& sys, bool field_semantics) {
    if (sys.clauses.size() == 1 && sys.clauses[0].eqs.size() == 1 &&
        sys.clauses[0].nonzero.empty())
        return sys;

    // Fresh inverse witnesses for every NonZero, clause by clause.
    std::set<std::string> used;
    for (const std::string& v : sys.params) used.insert(v);
    for (const std::string& v : sys.exists) used.insert(v);
    std::vector<std::string> fresh;
    std::vector<std::vector<std::string>> inv_names(sys.clauses.size());
    for (std::size_t ci = 0; ci < sys.clauses.size(); ++ci)
        for (std::size_t k = 0; k < sys.clauses[ci].nonzero.size(); ++k) {
            if (!field_semantics)
                throw NotCollapsible("NonZero constraint with unit rewrite disabled");
            std::string name =
                fresh_name("inv" + std::to_string(ci) + "_" + std::to_string(k), used);
            inv_names[ci].push_back(name);
            fresh.push_back(name);
        }

    DiophSystem out;
    out.params = sys.params;
    out.exists = sys.exists;
    out.exists.insert(out.exists.end(), fresh.begin(), fresh.end());
    out.coeff_basis = sys.coeff_basis;

    std::vector<std::string> all_vars = system_variables(out);
    std::size_t np = out.params.size();
    std::vector<std::size_t> old_map(sys.params.size() + sys.exists.size());
    for (std::size_t i = 0; i < old_map.size(); ++i) old_map[i] = i;

    auto var_index = [&](const std::string& name) {
        return static_cast<std::size_t>(
            std::find(all_vars.begin(), all_vars.end(), name) - all_vars.begin());
    };

    MultiPoly product = MultiPoly::constant(all_vars, np, RatFunc(Rational(1)));
    for (std::size_t ci = 0; ci < sys.clauses.size(); ++ci) {
        const Clause& c = sys.clauses[ci];
        std::vector<MultiPoly> eqs;
        for (const MultiPoly& f : c.eqs) eqs.push_back(f.remapped(all_vars, np, old_map));
        for (std::size_t k = 0; k < c.nonzero.size(); ++k) {
            MultiPoly f = c.nonzero[k].remapped(all_vars, np, old_map);
            MultiPoly h = MultiPoly::var(all_vars, np, var_index(inv_names[ci][k]));
            eqs.push_back(h * f - MultiPoly::constant(all_vars, np, RatFunc(Rational(1))));
        }
        // A one-equation clause needs no squaring: f and f² cut out the same set.
        MultiPoly sq(all_vars, np);
        if (eqs.size() == 1) {
            sq = eqs[0];
        } else {
            for (const MultiPoly& f : eqs) sq = sq + f * f;
        }
        product = product * sq;
    }
    Clause single;
    single.eqs.push_back(std::move(product));
    out.clauses.push_back(std::move(single));
    return out;
}

DiophSystem model_criterion_transform(const std::vector<MultiPoly>& int_sys,
                                      const DiophSystem& delta_def,
                                      const std::vector<RatFunc>& ideal_gens) {
    if (ideal_gens.empty()) throw EmptyGenerators("the ideal needs at least one generator");
    if (delta_def.params.size() != 1)
        throw ArityMismatch("the membership definition must have exactly one parameter");
    if (int_sys.empty()) throw std::invalid_argument("empty integer system");
    const std::vector<std::string>& tvars = int_sys[0].variables();
    std::size_t m = tvars.size();
    for (const MultiPoly& f : int_sys) {
        if (f.variables() != tvars) throw ArityMismatch("integer system variable lists differ");
        if (f.n_params() != m)
            throw ArityMismatch("integer system variables must all be parameters");
        for (const auto& [e, c] : f.terms()) {
            (void)e;
            if (!c.is_poly() || (!c.num().is_zero() && c.num().deg() > 0) ||
                !rat_is_integer(c.as_constant()))
                throw std::invalid_argument("integer system has a non-integer coefficient");
        }
    }

    std::set<std::string> used(tvars.begin(), tvars.end());
    DiophSystem out;
    out.params = tvars;
    // Per coordinate: a renamed copy of the membership system's existentials.
    std::vector<std::vector<std::string>> coord_exists(m);
    for (std::size_t j = 0; j < m; ++j)
        for (const std::string& v : delta_def.exists) {
            std::string name = fresh_name("c" + std::to_string(j + 1) + "_" + v, used);
            coord_exists[j].push_back(name);
            out.exists.push_back(name);
        }
    // Ideal-membership multipliers, one row per equation, one per generator.
    std::vector<std::vector<std::string>> lam(int_sys.size());
    for (std::size_t i = 0; i < int_sys.size(); ++i)
        for (std::size_t g = 0; g < ideal_gens.size(); ++g) {
            std::string name = fresh_name(
                "lam" + std::to_string(i + 1) + "_" + std::to_string(g + 1), used);
            lam[i].push_back(name);
            out.exists.push_back(name);
        }

    std::vector<std::string> all_vars = system_variables(out);
    std::size_t np = m;
    auto var_index = [&](const std::string& name) {
        return static_cast<std::size_t>(
            std::find(all_vars.begin(), all_vars.end(), name) - all_vars.begin());
    };

    // The shared ideal-membership equations f_i(t) - Σ_g lam_ig·gen_g = 0.
    std::vector<MultiPoly> shared;
    std::vector<std::size_t> tmap(m);
    for (std::size_t i = 0; i < m; ++i) tmap[i] = i;
    for (std::size_t i = 0; i < int_sys.size(); ++i) {
        MultiPoly f = int_sys[i].remapped(all_vars, np, tmap);
        for (std::size_t g = 0; g < ideal_gens.size(); ++g) {
            MultiPoly lv = MultiPoly::var(all_vars, np, var_index(lam[i][g]));
            f = f - lv.scaled(ideal_gens[g]);
        }
        shared.push_back(std::move(f));
    }

    // Remap of the membership system for coordinate j: its parameter becomes
    // t_{j+1}, its existentials their renamed copies.
    auto coord_clause = [&](std::size_t j, const Clause& c) {
        std::vector<std::size_t> map(1 + delta_def.exists.size());
        map[0] = j;
        for (std::size_t k = 0; k < delta_def.exists.size(); ++k)
            map[1 + k] = var_index(coord_exists[j][k]);
        Clause nc;
        for (const MultiPoly& f : c.eqs) nc.eqs.push_back(f.remapped(all_vars, np, map));
        for (const MultiPoly& f : c.nonzero)
            nc.nonzero.push_back(f.remapped(all_vars, np, map));
        return nc;
    };

    // Disjunctive product over the coordinates.
    std::vector<Clause> combos(1);
    for (std::size_t j = 0; j < m; ++j) {
        std::vector<Clause> next;
        for (const Clause& partial : combos)
            for (const Clause& dc : delta_def.clauses) {
                Clause merged = partial;
                Clause inst = coord_clause(j, dc);
                merged.eqs.insert(merged.eqs.end(), inst.eqs.begin(), inst.eqs.end());
                merged.nonzero.insert(merged.nonzero.end(), inst.nonzero.begin(),
                                      inst.nonzero.end());
                next.push_back(std::move(merged));
            }
        combos = std::move(next);
    }
    for (Clause& c : combos)
        c.eqs.insert(c.eqs.end(), shared.begin(), shared.end());
    out.clauses = std::move(combos);

    out.coeff_basis = delta_def.coeff_basis;
    for (const RatFunc& g : ideal_gens) append_basis(out.coeff_basis, g);
    return out;
}

std::vector<Integer> recover_integer_solution(const HolomorphyRing& ring,
                                              const std::vector<RatFunc>& candidate) {
    const Place& p = ring.prime();
    if (p.is_infinity() || p.degree() != 1)
        throw std::invalid_argument("integer recovery needs a degree-one finite prime");
    Rational root = -p.modulus().coeff(0);
    std::vector<Integer> out;
    for (const RatFunc& f : candidate) {
        if (!ord_at_place(f, p).at_least(0))
            throw PoleAtPrime("candidate coordinate has a pole at the prime");
        Rational v = eval_at(f, root);
        if (!rat_is_integer(v))
            throw NotInZPlusI("residue " + rat_to_string(v) + " is not an integer");
        out.push_back(v.get_num());
    }
    return out;
}

namespace {

using Table = std::vector<std::vector<std::vector<RatFunc>>>;

void validate_algebra(const Table& table, const std::vector<RatFunc>& one) {
    std::size_t m = one.size();
    if (m == 0) throw BadAlgebra("rank zero");
    if (table.size() != m) throw BadAlgebra("table rank mismatch");
    for (const auto& row : table) {
        if (row.size() != m) throw BadAlgebra("table rank mismatch");
        for (const auto& cell : row)
            if (cell.size() != m) throw BadAlgebra("table rank mismatch");
    }
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t k = 0; k < m; ++k)
                if (!(table[i][j][k] == table[j][i][k]))
                    throw BadAlgebra("multiplication table is not commutative");
    // unit law: 1·b_j = b_j
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t k = 0; k < m; ++k) {
            RatFunc s;
            for (std::size_t i = 0; i < m; ++i) s = s + one[i] * table[i][j][k];
            RatFunc want(Rational(k == j ? 1 : 0));
            if (!(s == want)) throw BadAlgebra("unit coordinates fail the unit law");
        }
    // associativity on basis triples
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t l = 0; l < m; ++l)
                for (std::size_t t = 0; t < m; ++t) {
                    RatFunc lhs, rhs;
                    for (std::size_t k = 0; k < m; ++k) {
                        lhs = lhs + table[i][j][k] * table[k][l][t];
                        rhs = rhs + table[j][l][k] * table[i][k][t];
                    }
                    if (!(lhs == rhs)) throw BadAlgebra("multiplication table not associative");
                }
}

}  // namespace

DiophSystem weil_restriction(const DiophSystem& sys, const Table& mult_table,
                             const std::vector<RatFunc>& one_coords) {
    validate_algebra(mult_table, one_coords);
    std::size_t m = one_coords.size();
    if (m == 1 && mult_table[0][0][0] == RatFunc(Rational(1)) &&
        one_coords[0] == RatFunc(Rational(1)))
        return sys;

    DiophSystem out;
    for (const std::string& v : sys.params)
        for (std::size_t k = 0; k < m; ++k) out.params.push_back(v + "_" + std::to_string(k));
    for (const std::string& v : sys.exists)
        for (std::size_t k = 0; k < m; ++k) out.exists.push_back(v + "_" + std::to_string(k));
    std::vector<std::string> all_vars = system_variables(out);
    std::size_t np = out.params.size();

    std::vector<std::string> old_vars = system_variables(sys);
    // old variable index -> indices of its m coordinates in the new list
    auto coord_index = [&](std::size_t old_i, std::size_t k) { return old_i * m + k; };

    using Alg = std::vector<MultiPoly>;  // algebra element, m coordinates
    auto alg_zero = [&]() { return Alg(m, MultiPoly(all_vars, np)); };
    auto alg_mul = [&](const Alg& u, const Alg& v) {
        Alg w = alg_zero();
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) {
                MultiPoly uv = u[i] * v[j];
                for (std::size_t k = 0; k < m; ++k)
                    if (!mult_table[i][j][k].is_zero())
                        w[k] = w[k] + uv.scaled(mult_table[i][j][k]);
            }
        return w;
    };
    auto embed = [&](const RatFunc& c) {
        Alg a = alg_zero();
        for (std::size_t k = 0; k < m; ++k)
            a[k] = MultiPoly::constant(all_vars, np, c * one_coords[k]);
        return a;
    };

    // per-variable powers of the algebra-valued variable, cached
    std::vector<std::vector<Alg>> pow_cache(old_vars.size());
    auto var_power = [&](std::size_t i, unsigned long e) -> const Alg& {
        auto& col = pow_cache[i];
        if (col.empty()) {
            col.push_back(embed(RatFunc(Rational(1))));
            Alg v = alg_zero();
            for (std::size_t k = 0; k < m; ++k)
                v[k] = MultiPoly::var(all_vars, np, coord_index(i, k));
            col.push_back(std::move(v));
        }
        while (col.size() <= e) col.push_back(alg_mul(col.back(), col[1]));
        return col[e];
    };

    auto expand = [&](const MultiPoly& f) {
        Alg acc = alg_zero();
        for (const auto& [exps, c] : f.terms()) {
            Alg term = embed(c);
            for (std::size_t i = 0; i < exps.size(); ++i)
                if (exps[i] > 0) term = alg_mul(term, var_power(i, exps[i]));
            for (std::size_t k = 0; k < m; ++k) acc[k] = acc[k] + term[k];
        }
        return acc;
    };

    for (const Clause& c : sys.clauses) {
        Clause base;
        for (const MultiPoly& f : c.eqs) {
            Alg coords = expand(f);
            for (std::size_t k = 0; k < m; ++k) base.eqs.push_back(coords[k]);
        }
        // NonZero: the element is nonzero iff some coordinate is — an m-way
        // split of the clause per constraint.
        std::vector<Clause> branches{base};
        for (const MultiPoly& f : c.nonzero) {
            Alg coords = expand(f);
            std::vector<Clause> next;
            for (const Clause& partial : branches)
                for (std::size_t k = 0; k < m; ++k) {
                    Clause nc = partial;
                    nc.nonzero.push_back(coords[k]);
                    next.push_back(std::move(nc));
                }
            branches = std::move(next);
        }
        for (Clause& nc : branches) out.clauses.push_back(std::move(nc));
    }

    out.coeff_basis = sys.coeff_basis;
    for (const auto& row : mult_table)
        for (const auto& cell : row)
            for (const RatFunc& e : cell) append_basis(out.coeff_basis, e);
    for (const RatFunc& e : one_coords) append_basis(out.coeff_basis, e);
    return out;
}

}  // namespace zplusi
