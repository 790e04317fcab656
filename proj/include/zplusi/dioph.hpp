// Data model for Diophantine definitions over subrings of ℚ(x), and the
// effective transformations on them: specializing parameters, collapsing a
// whole system to one equation (sum of squares × products, valid over a
// formally real field), the model criterion that turns an integer polynomial
// system into a definable set over the ring (Δ-membership per coordinate
// plus explicit ideal-membership multipliers), and restriction of scalars
// along a finite free algebra.
//
// A system is a disjunction of clauses; a clause is a conjunction of
// polynomial equations and primitive NonZero constraints. NonZero stays
// primitive throughout: checkers evaluate it literally, nothing expands it.
#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "zplusi/ratfunc.hpp"
#include "zplusi/rings.hpp"

namespace zplusi {

class MultiPoly {
  public:
    using Exps = std::vector<unsigned long>;
    using TermMap = std::map<Exps, RatFunc>;  // lex-ascending exponent order

    // variables: parameters first (n_params of them), then existentials.
    MultiPoly(std::vector<std::string> variables, std::size_t n_params);
    static MultiPoly constant(std::vector<std::string> variables, std::size_t n_params,
                              const RatFunc& c);
    // The monomial for variable #index (within the full list).
    static MultiPoly var(std::vector<std::string> variables, std::size_t n_params,
                         std::size_t index);

    const std::vector<std::string>& variables() const { return vars_; }
    std::size_t n_params() const { return n_params_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Exps& exps, const RatFunc& coeff);  // accumulates, drops zeros

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly scaled(const RatFunc& c) const;
    bool operator==(const MultiPoly& o) const;

    // Exact value at a full assignment (length = variables().size()).
    RatFunc eval(const std::vector<RatFunc>& point) const;  // ArityMismatch

    // Same polynomial over a wider/reordered variable list; index_map sends
    // each old variable position to its position in new_vars.
    MultiPoly remapped(std::vector<std::string> new_vars, std::size_t new_n_params,
                       const std::vector<std::size_t>& index_map) const;

  private:
    std::vector<std::string> vars_;
    std::size_t n_params_;
    TermMap terms_;
};

struct Clause {
    std::vector<MultiPoly> eqs;      // each constrained = 0
    std::vector<MultiPoly> nonzero;  // each constrained ≠ 0 (primitive)
};

struct DiophSystem {
    std::vector<std::string> params;
    std::vector<std::string> exists;
    std::vector<Clause> clauses;  // disjunction of conjunctions, nonempty
    std::vector<RatFunc> coeff_basis;
};

// All variables of the system, parameters first.
std::vector<std::string> system_variables(const DiophSystem& sys);
// Clause truth at a full assignment.
bool clause_satisfied(const Clause& c, const std::vector<RatFunc>& point);
// System truth: some clause satisfied at (params ++ exists).
bool system_satisfied(const DiophSystem& sys, const std::vector<RatFunc>& param_point,
                      const std::vector<RatFunc>& exists_point);

// Substitute values for all parameters; the result has no parameters.
DiophSystem specialize(const DiophSystem& sys, const std::vector<RatFunc>& point);

// Collapse to one clause with one equation: conjunctions via sums of squares
// (the coefficient field is formally real), disjunctions via products.
// NonZero constraints are first rewritten as ∃h: h·f − 1 = 0, which is
// faithful when solutions range over a field; pass field_semantics = false
// to forbid that rewrite, making a system with NonZero refuse
// (NotCollapsible). A system already of the target shape returns unchanged.
DiophSystem to_single_equation(const DiophSystem& sys, bool field_semantics = true);

// From an integer polynomial system (all variables parameters, integer
// coefficients) to the system defining its solutions with coordinates in
// Δ = ℤ+I: per coordinate an instance of delta_def (existentials renamed
// "c{j}_..."), expanded disjunctively, and per equation f_i the constraint
// f_i(t) = Σ_j lam{i}_{j}·g_j over the ideal generators. Throws
// EmptyGenerators, ArityMismatch (delta_def must have exactly one
// parameter; int_sys variable lists must agree).
DiophSystem model_criterion_transform(const std::vector<MultiPoly>& int_sys,
                                      const DiophSystem& delta_def,
                                      const std::vector<RatFunc>& ideal_gens);

// Project a Δ^m-valued solution back to its integer part: evaluate each
// coordinate at the prime (which must be finite of degree one). Throws
// PoleAtPrime when a coordinate has a pole there, NotInZPlusI when a residue
// is not an integer.
std::vector<Integer> recover_integer_solution(const HolomorphyRing& ring,
                                              const std::vector<RatFunc>& candidate);

// Restriction of scalars along the rank-m free algebra with the given
// multiplication table (mult_table[i][j][k] = coefficient of basis k in
// b_i·b_j) and coordinates of 1. Each variable v splits into v_0..v_{m-1};
// equations expand coordinatewise; a NonZero constraint splits a clause m
// ways (some coordinate nonzero). The table is checked for commutativity,
// associativity and the unit law (BadAlgebra). Rank 1 with the identity
// table returns the system unchanged.
DiophSystem weil_restriction(const DiophSystem& sys,
                             const std::vector<std::vector<std::vector<RatFunc>>>& mult_table,
                             const std::vector<RatFunc>& one_coords);

}  // namespace zplusi
