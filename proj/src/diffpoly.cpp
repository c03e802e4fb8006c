#include "conslaw/diffpoly.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace conslaw {

std::string rational_to_string(const Rational& r) {
    return r.get_str();
}

IndexSet sorted(IndexSet ix) {
    std::sort(ix.begin(), ix.end());
    return ix;
}

bool operator<(const JetVar& a, const JetVar& b) {
    if (a.t_order != b.t_order) return a.t_order < b.t_order;
    if (a.x_index.size() != b.x_index.size())
        return a.x_index.size() < b.x_index.size();
    if (a.x_index != b.x_index) return a.x_index < b.x_index;
    return a.dep < b.dep;
}

Sym Sym::jet(int dep, int t_order, IndexSet ix) {
    Sym s;
    s.kind_ = Kind::Jet;
    s.jet_ = JetVar{dep, t_order, sorted(std::move(ix))};
    return s;
}

Sym Sym::jet(const JetVar& v) {
    return jet(v.dep, v.t_order, v.x_index);
}

Sym Sym::t() {
    Sym s;
    s.kind_ = Kind::T;
    return s;
}

Sym Sym::x(int dir) {
    Sym s;
    s.kind_ = Kind::X;
    s.xdir_ = dir;
    return s;
}

Sym Sym::param(std::string name) {
    Sym s;
    s.kind_ = Kind::Param;
    s.name_ = std::move(name);
    return s;
}

std::string Sym::debug() const {
    std::ostringstream os;
    switch (kind_) {
        case Kind::T:
            return "t";
        case Kind::X:
            os << "x" << xdir_ + 1;
            return os.str();
        case Kind::Param:
            return name_;
        case Kind::Jet: {
            os << "u" << jet_.dep + 1;
            if (jet_.t_order > 0) os << "_t" << jet_.t_order;
            if (!jet_.x_index.empty()) {
                os << "_x(";
                for (size_t i = 0; i < jet_.x_index.size(); ++i) {
                    if (i) os << ",";
                    os << jet_.x_index[i] + 1;
                }
                os << ")";
            }
            return os.str();
        }
    }
    return "?";
}

bool operator==(const Sym& a, const Sym& b) {
    if (a.kind_ != b.kind_) return false;
    switch (a.kind_) {
        case Sym::Kind::T:
            return true;
        case Sym::Kind::X:
            return a.xdir_ == b.xdir_;
        case Sym::Kind::Param:
            return a.name_ == b.name_;
        case Sym::Kind::Jet:
            return a.jet_ == b.jet_;
    }
    return false;
}

bool operator<(const Sym& a, const Sym& b) {
    if (a.kind_ != b.kind_) return static_cast<int>(a.kind_) < static_cast<int>(b.kind_);
    switch (a.kind_) {
        case Sym::Kind::T:
            return false;
        case Sym::Kind::X:
            return a.xdir_ < b.xdir_;
        case Sym::Kind::Param:
            return a.name_ < b.name_;
        case Sym::Kind::Jet:
            return a.jet_ < b.jet_;
    }
    return false;
}

Monomial::Monomial(const Sym& s, int exp) {
    if (exp != 0) factors_.push_back({s, exp});
}

int Monomial::degree() const {
    int d = 0;
    for (const auto& [s, e] : factors_) d += e;
    return d;
}

int Monomial::exponent_of(const Sym& s) const {
    for (const auto& [sym, e] : factors_)
        if (sym == s) return e;
    return 0;
}

Monomial Monomial::times(const Monomial& other) const {
    Monomial out;
    auto a = factors_.begin();
    auto b = other.factors_.begin();
    while (a != factors_.end() || b != other.factors_.end()) {
        if (b == other.factors_.end() || (a != factors_.end() && a->first < b->first)) {
            out.factors_.push_back(*a++);
        } else if (a == factors_.end() || b->first < a->first) {
            out.factors_.push_back(*b++);
        } else {
            out.factors_.push_back({a->first, a->second + b->second});
            ++a;
            ++b;
        }
    }
    return out;
}

Monomial Monomial::without_one(const Sym& s) const {
    Monomial out;
    for (const auto& [sym, e] : factors_) {
        if (sym == s) {
            if (e > 1) out.factors_.push_back({sym, e - 1});
        } else {
            out.factors_.push_back({sym, e});
        }
    }
    return out;
}

bool operator<(const Monomial& a, const Monomial& b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return a.factors_ < b.factors_;
}

DiffPoly::DiffPoly(const Rational& c) {
    if (c != 0) terms_[Monomial::one()] = c;
}

DiffPoly::DiffPoly(const Sym& s) {
    terms_[Monomial(s)] = 1;
}

bool DiffPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rational DiffPoly::constant_value() const {
    if (terms_.empty()) return 0;
    return terms_.begin()->second;
}

int DiffPoly::degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

void DiffPoly::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_[m] = c;
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

DiffPoly& DiffPoly::operator+=(const DiffPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

DiffPoly& DiffPoly::operator-=(const DiffPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

DiffPoly& DiffPoly::operator*=(const DiffPoly& o) {
    DiffPoly out;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) out.add_term(ma.times(mb), ca * cb);
    terms_ = std::move(out.terms_);
    return *this;
}

DiffPoly& DiffPoly::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, coeff] : terms_) coeff *= c;
    return *this;
}

DiffPoly DiffPoly::operator-() const {
    DiffPoly out = *this;
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
}

DiffPoly DiffPoly::pow(int k) const {
    if (k < 0) throw UnsupportedExpression("negative power of a polynomial");
    DiffPoly out(1);
    DiffPoly base = *this;
    while (k > 0) {
        if (k & 1) out *= base;
        base *= base;
        k >>= 1;
    }
    return out;
}

std::string DiffPoly::debug() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Rational& c = it->second;
        if (!first) os << (c < 0 ? " - " : " + ");
        if (first && c < 0) os << "-";
        first = false;
        Rational ac = abs(c);
        bool wrote = false;
        if (ac != 1 || it->first.empty()) {
            os << rational_to_string(ac);
            wrote = true;
        }
        for (const auto& [s, e] : it->first.factors()) {
            if (wrote) os << "*";
            os << s.debug();
            if (e != 1) os << "^" << e;
            wrote = true;
        }
    }
    return os.str();
}

DiffPoly jet_poly(int dep, int t_order, IndexSet ix) {
    return DiffPoly(Sym::jet(dep, t_order, std::move(ix)));
}

DiffPoly t_poly() {
    return DiffPoly(Sym::t());
}

DiffPoly x_poly(int dir) {
    return DiffPoly(Sym::x(dir));
}

DiffPoly param_poly(const std::string& name) {
    return DiffPoly(Sym::param(name));
}

std::set<Sym> symbols_of(const DiffPoly& e) {
    std::set<Sym> out;
    for (const auto& [m, c] : e.terms())
        for (const auto& [s, exp] : m.factors()) out.insert(s);
    return out;
}

std::set<JetVar> jets_of(const DiffPoly& e) {
    std::set<JetVar> out;
    for (const auto& s : symbols_of(e))
        if (s.is_jet()) out.insert(s.jet_var());
    return out;
}

std::set<JetVar> jets_of_dep(const DiffPoly& e, int dep) {
    std::set<JetVar> out;
    for (const auto& v : jets_of(e))
        if (v.dep == dep) out.insert(v);
    return out;
}

int max_t_order(const DiffPoly& e, int dep_limit) {
    int q = 0;
    for (const auto& v : jets_of(e))
        if (v.dep < dep_limit) q = std::max(q, v.t_order);
    return q;
}

int max_spatial_order(const DiffPoly& e) {
    int m = 0;
    for (const auto& v : jets_of(e)) m = std::max(m, v.spatial_order());
    return m;
}

int max_total_order(const DiffPoly& e) {
    int m = 0;
    for (const auto& v : jets_of(e)) m = std::max(m, v.total_order());
    return m;
}

DiffPoly substitute(const DiffPoly& e, const std::map<Sym, DiffPoly>& repl) {
    DiffPoly out;
    for (const auto& [m, c] : e.terms()) {
        DiffPoly term(c);
        for (const auto& [s, exp] : m.factors()) {
            auto it = repl.find(s);
            if (it == repl.end()) {
                term *= DiffPoly(s).pow(exp);
            } else {
                term *= it->second.pow(exp);
            }
        }
        out += term;
    }
    return out;
}

const Rational& Point::at(const Sym& s) const {
    auto it = values.find(s);
    if (it == values.end())
        throw IncompletePoint("no value assigned to symbol " + s.debug());
    return it->second;
}

Rational eval_at(const DiffPoly& e, const Point& p) {
    Rational total = 0;
    for (const auto& [m, c] : e.terms()) {
        Rational v = c;
        for (const auto& [s, exp] : m.factors()) {
            const Rational& val = p.at(s);
            for (int i = 0; i < exp; ++i) v *= val;
        }
        total += v;
    }
    return total;
}

Point random_point(const std::vector<const DiffPoly*>& exprs, std::uint64_t seed,
                   long bound) {
    std::set<Sym> syms;
    for (const DiffPoly* e : exprs)
        for (const auto& s : symbols_of(*e)) syms.insert(s);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> num(-bound, bound);
    std::uniform_int_distribution<long> den(1, bound);
    Point p;
    for (const auto& s : syms)
        p.values[s] = Rational(num(rng), den(rng));
    return p;
}

Point random_point(const DiffPoly& e, std::uint64_t seed, long bound) {
    return random_point(std::vector<const DiffPoly*>{&e}, seed, bound);
}

// Expression trees ------------------------------------------------------------

ExprPtr Expr::num(Rational v) {
    auto e = std::make_shared<Expr>();
    e->op = Op::Num;
    e->value = std::move(v);
    return e;
}

ExprPtr Expr::sym(Sym s) {
    auto e = std::make_shared<Expr>();
    e->op = Op::Symbol;
    e->symbol = std::move(s);
    return e;
}

static ExprPtr binary(Expr::Op op, ExprPtr a, ExprPtr b) {
    auto e = std::make_shared<Expr>();
    e->op = op;
    e->lhs = std::move(a);
    e->rhs = std::move(b);
    return e;
}

ExprPtr Expr::add(ExprPtr a, ExprPtr b) { return binary(Op::Add, std::move(a), std::move(b)); }
ExprPtr Expr::sub(ExprPtr a, ExprPtr b) { return binary(Op::Sub, std::move(a), std::move(b)); }
ExprPtr Expr::mul(ExprPtr a, ExprPtr b) { return binary(Op::Mul, std::move(a), std::move(b)); }
ExprPtr Expr::div(ExprPtr a, ExprPtr b) { return binary(Op::Div, std::move(a), std::move(b)); }

ExprPtr Expr::neg(ExprPtr a) {
    auto e = std::make_shared<Expr>();
    e->op = Op::Neg;
    e->lhs = std::move(a);
    return e;
}

ExprPtr Expr::pow(ExprPtr a, long k) {
    auto e = std::make_shared<Expr>();
    e->op = Op::Pow;
    e->lhs = std::move(a);
    e->exponent = k;
    return e;
}

DiffPoly canonicalize(const ExprPtr& tree) {
    if (!tree) return DiffPoly::zero();
    switch (tree->op) {
        case Expr::Op::Num:
            return DiffPoly(tree->value);
        case Expr::Op::Symbol:
            return DiffPoly(tree->symbol);
        case Expr::Op::Add:
            return canonicalize(tree->lhs) + canonicalize(tree->rhs);
        case Expr::Op::Sub:
            return canonicalize(tree->lhs) - canonicalize(tree->rhs);
        case Expr::Op::Mul:
            return canonicalize(tree->lhs) * canonicalize(tree->rhs);
        case Expr::Op::Neg:
            return -canonicalize(tree->lhs);
        case Expr::Op::Div: {
            DiffPoly den = canonicalize(tree->rhs);
            if (!den.is_constant())
                throw UnsupportedExpression("division by non-constant expression");
            Rational d = den.constant_value();
            if (d == 0) throw UnsupportedExpression("division by zero");
            return canonicalize(tree->lhs) * Rational(1 / d);
        }
        case Expr::Op::Pow: {
            DiffPoly base = canonicalize(tree->lhs);
            if (tree->exponent >= 0) return base.pow(static_cast<int>(tree->exponent));
            if (!base.is_constant())
                throw UnsupportedExpression("negative power of non-constant expression");
            Rational b = base.constant_value();
            if (b == 0) throw UnsupportedExpression("zero to a negative power");
            Rational inv = 1 / b;
            DiffPoly out(1);
            for (long i = 0; i < -tree->exponent; ++i) out *= inv;
            return out;
        }
    }
    return DiffPoly::zero();
}

Rational eval_raw(const ExprPtr& tree, const Point& p) {
    switch (tree->op) {
        case Expr::Op::Num:
            return tree->value;
        case Expr::Op::Symbol:
            return p.at(tree->symbol);
        case Expr::Op::Add:
            return eval_raw(tree->lhs, p) + eval_raw(tree->rhs, p);
        case Expr::Op::Sub:
            return eval_raw(tree->lhs, p) - eval_raw(tree->rhs, p);
        case Expr::Op::Mul:
            return eval_raw(tree->lhs, p) * eval_raw(tree->rhs, p);
        case Expr::Op::Neg:
            return -eval_raw(tree->lhs, p);
        case Expr::Op::Div: {
            Rational d = eval_raw(tree->rhs, p);
            if (d == 0) throw UnsupportedExpression("division by zero at point");
            return eval_raw(tree->lhs, p) / d;
        }
        case Expr::Op::Pow: {
            Rational b = eval_raw(tree->lhs, p);
            Rational out = 1;
            long k = tree->exponent;
            if (k < 0) {
                if (b == 0) throw UnsupportedExpression("zero to a negative power");
                b = 1 / b;
                k = -k;
            }
            for (long i = 0; i < k; ++i) out *= b;
            return out;
        }
    }
    return 0;
}

}  // namespace conslaw
