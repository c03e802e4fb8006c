#pragma once

// Exact differential-polynomial arithmetic over jet coordinates.
//
// Every expression handled by the library is a canonical sum of monomials
// with rational coefficients.  Monomial factors are jet coordinates (a
// dependent variable carrying a leading-variable derivative order and a
// multiset of spatial derivative directions), the leading independent
// variable t, the spatial variables x^i, and named symbolic parameters.
// Canonical form makes expression identity decidable: two expressions are
// equal iff their term maps are equal.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "conslaw/errors.hpp"

namespace conslaw {

using Rational = mpq_class;

std::string rational_to_string(const Rational& r);

// Sorted multiset of spatial direction indices (0-based).
using IndexSet = std::vector<int>;

IndexSet sorted(IndexSet ix);

// One jet coordinate: the |x_index|-th spatial derivative of the t_order-th
// t-derivative of dependent variable `dep`.  x_index is order-insensitive.
struct JetVar {
    int dep = 0;
    int t_order = 0;
    IndexSet x_index;

    int spatial_order() const { return static_cast<int>(x_index.size()); }
    int total_order() const { return t_order + spatial_order(); }

    friend bool operator==(const JetVar& a, const JetVar& b) {
        return a.dep == b.dep && a.t_order == b.t_order && a.x_index == b.x_index;
    }
    // Graded order: (t_order, spatial order, spatial multiset, dep).
    friend bool operator<(const JetVar& a, const JetVar& b);
};

// A monomial factor: jet coordinate, t, x^i, or a named parameter.
class Sym {
  public:
    enum class Kind { Jet, T, X, Param };

    Sym() : kind_(Kind::T) {}

    static Sym jet(int dep, int t_order, IndexSet ix);
    static Sym jet(const JetVar& v);
    static Sym t();
    static Sym x(int dir);
    static Sym param(std::string name);

    Kind kind() const { return kind_; }
    bool is_jet() const { return kind_ == Kind::Jet; }
    const JetVar& jet_var() const { return jet_; }
    int x_dir() const { return xdir_; }
    const std::string& param_name() const { return name_; }

    // Debug rendering independent of any user-facing name table.
    std::string debug() const;

    friend bool operator==(const Sym& a, const Sym& b);
    friend bool operator!=(const Sym& a, const Sym& b) { return !(a == b); }
    friend bool operator<(const Sym& a, const Sym& b);

  private:
    Kind kind_;
    JetVar jet_;
    int xdir_ = 0;
    std::string name_;
};

// Product of symbol powers, kept sorted by symbol with positive exponents.
class Monomial {
  public:
    Monomial() = default;
    explicit Monomial(const Sym& s, int exp = 1);

    static Monomial one() { return Monomial(); }

    bool empty() const { return factors_.empty(); }
    int degree() const;
    int exponent_of(const Sym& s) const;
    const std::vector<std::pair<Sym, int>>& factors() const { return factors_; }

    Monomial times(const Monomial& other) const;
    // Returns the monomial with the exponent of s reduced by one; exponent
    // must be positive.
    Monomial without_one(const Sym& s) const;

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.factors_ == b.factors_;
    }
    // Graded lexicographic with respect to the symbol order.
    friend bool operator<(const Monomial& a, const Monomial& b);

  private:
    std::vector<std::pair<Sym, int>> factors_;
};

// Canonical differential polynomial.  Invariant: no zero coefficients.
class DiffPoly {
  public:
    DiffPoly() = default;
    DiffPoly(const Rational& c);  // NOLINT: implicit constant lift
    DiffPoly(int c) : DiffPoly(Rational(c)) {}
    explicit DiffPoly(const Sym& s);

    static DiffPoly zero() { return DiffPoly(); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Requires is_constant().
    Rational constant_value() const;
    int degree() const;

    const std::map<Monomial, Rational>& terms() const { return terms_; }

    DiffPoly& operator+=(const DiffPoly& o);
    DiffPoly& operator-=(const DiffPoly& o);
    DiffPoly& operator*=(const DiffPoly& o);
    DiffPoly& operator*=(const Rational& c);
    DiffPoly operator-() const;
    DiffPoly pow(int k) const;

    void add_term(const Monomial& m, const Rational& c);

    friend DiffPoly operator+(DiffPoly a, const DiffPoly& b) { return a += b; }
    friend DiffPoly operator-(DiffPoly a, const DiffPoly& b) { return a -= b; }
    friend DiffPoly operator*(DiffPoly a, const DiffPoly& b) { return a *= b; }
    friend DiffPoly operator*(DiffPoly a, const Rational& c) { return a *= c; }
    friend DiffPoly operator*(const Rational& c, DiffPoly a) { return a *= c; }
    friend bool operator==(const DiffPoly& a, const DiffPoly& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const DiffPoly& a, const DiffPoly& b) {
        return !(a == b);
    }

    std::string debug() const;

  private:
    std::map<Monomial, Rational> terms_;
};

// Convenience constructors.
DiffPoly jet_poly(int dep, int t_order, IndexSet ix);
DiffPoly t_poly();
DiffPoly x_poly(int dir);
DiffPoly param_poly(const std::string& name);

std::set<Sym> symbols_of(const DiffPoly& e);
std::set<JetVar> jets_of(const DiffPoly& e);
// Jets of one dependent variable occurring in e.
std::set<JetVar> jets_of_dep(const DiffPoly& e, int dep);
// Largest t_order among jets of deps < dep_limit (0 when none occur).
int max_t_order(const DiffPoly& e, int dep_limit);
// Largest spatial order among all jets in e.
int max_spatial_order(const DiffPoly& e);
int max_total_order(const DiffPoly& e);

// Simultaneous substitution of symbols by polynomials.
DiffPoly substitute(const DiffPoly& e, const std::map<Sym, DiffPoly>& repl);

// Exact point evaluation -----------------------------------------------------

struct Point {
    std::map<Sym, Rational> values;
    const Rational& at(const Sym& s) const;
};

Rational eval_at(const DiffPoly& e, const Point& p);

// Independent uniform rationals with |numerator| <= bound and
// 1 <= denominator <= bound for every symbol of the given expressions.
Point random_point(const std::vector<const DiffPoly*>& exprs, std::uint64_t seed,
                   long bound);
Point random_point(const DiffPoly& e, std::uint64_t seed, long bound);

// Raw expression trees -------------------------------------------------------
//
// The parser produces these; canonicalize() folds them into DiffPoly and is
// the single place where the expression class is policed.

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    enum class Op { Num, Symbol, Add, Sub, Mul, Div, Neg, Pow };

    Op op = Op::Num;
    Rational value;
    Sym symbol;
    ExprPtr lhs, rhs;
    long exponent = 0;

    static ExprPtr num(Rational v);
    static ExprPtr sym(Sym s);
    static ExprPtr add(ExprPtr a, ExprPtr b);
    static ExprPtr sub(ExprPtr a, ExprPtr b);
    static ExprPtr mul(ExprPtr a, ExprPtr b);
    static ExprPtr div(ExprPtr a, ExprPtr b);
    static ExprPtr neg(ExprPtr a);
    static ExprPtr pow(ExprPtr a, long k);
};

// Canonical form; idempotent on already-canonical input.  Throws
// UnsupportedExpression for division by a non-constant or a negative power
// of a non-constant.
DiffPoly canonicalize(const ExprPtr& tree);

// Tree evaluation without canonicalization, for independence cross-checks.
Rational eval_raw(const ExprPtr& tree, const Point& p);

}  // namespace conslaw
