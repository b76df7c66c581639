#include "invar/polynomial.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <cctype>

namespace invar {

namespace {
const MonomialOrder kRefOrder = MonomialOrder::grevlex();

struct MonoGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return kRefOrder.compare(a, b) > 0; }
};
} // namespace

Polynomial::Polynomial(Domain dom, int nvars, std::vector<Term> terms)
    : dom_(std::move(dom)), nvars_(nvars), terms_(std::move(terms)) {
    for (const Term& t : terms_) {
        if (t.mono.nvars() != nvars_) throw std::invalid_argument("term arity mismatch");
        if (!(t.coeff.domain() == dom_)) throw std::invalid_argument("term domain mismatch");
    }
    normalize();
}

void Polynomial::normalize() {
    std::map<Monomial, Scalar, MonoGreater> acc;
    for (Term& t : terms_) {
        auto it = acc.find(t.mono);
        if (it == acc.end()) acc.emplace(t.mono, t.coeff);
        else it->second = it->second + t.coeff;
    }
    terms_.clear();
    for (auto& [m, c] : acc)
        if (!c.is_zero()) terms_.push_back({m, c});
}

Polynomial Polynomial::constant(const Domain& d, int nvars, const Scalar& c) {
    Polynomial f(d, nvars);
    if (!c.is_zero()) f.terms_.push_back({Monomial(nvars), c});
    return f;
}

Polynomial Polynomial::variable(const Domain& d, int nvars, int i) {
    return monomial_term(d, Monomial::var(nvars, i), Scalar::one(d));
}

Polynomial Polynomial::monomial_term(const Domain& d, const Monomial& m, const Scalar& c) {
    Polynomial f(d, m.nvars());
    if (!c.is_zero()) f.terms_.push_back({m, c});
    return f;
}

int Polynomial::degree() const {
    int d = -1;
    for (const Term& t : terms_) d = std::max(d, t.mono.degree());
    return d;
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = terms_[0].mono.degree();
    for (const Term& t : terms_)
        if (t.mono.degree() != d) return false;
    return true;
}

void Polynomial::check_compatible(const Polynomial& o) const {
    if (!(dom_ == o.dom_)) throw std::invalid_argument("polynomial domain mismatch: " + dom_.str() + " vs " + o.dom_.str());
    if (nvars_ != o.nvars_) throw std::invalid_argument("polynomial arity mismatch");
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    check_compatible(o);
    Polynomial r(dom_, nvars_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        int c = kRefOrder.compare(terms_[i].mono, o.terms_[j].mono);
        if (c > 0) r.terms_.push_back(terms_[i++]);
        else if (c < 0) r.terms_.push_back(o.terms_[j++]);
        else {
            Scalar s = terms_[i].coeff + o.terms_[j].coeff;
            if (!s.is_zero()) r.terms_.push_back({terms_[i].mono, s});
            ++i; ++j;
        }
    }
    while (i < terms_.size()) r.terms_.push_back(terms_[i++]);
    while (j < o.terms_.size()) r.terms_.push_back(o.terms_[j++]);
    return r;
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (Term& t : r.terms_) t.coeff = -t.coeff;
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
    check_compatible(o);
    std::map<Monomial, Scalar, MonoGreater> acc;
    for (const Term& a : terms_) {
        for (const Term& b : o.terms_) {
            Monomial m = a.mono * b.mono;
            Scalar c = a.coeff * b.coeff;
            auto it = acc.find(m);
            if (it == acc.end()) acc.emplace(std::move(m), std::move(c));
            else it->second = it->second + c;
        }
    }
    Polynomial r(dom_, nvars_);
    for (auto& [m, c] : acc)
        if (!c.is_zero()) r.terms_.push_back({m, c});
    return r;
}

Polynomial Polynomial::scaled(const Scalar& c) const {
    if (!(c.domain() == dom_)) throw std::invalid_argument("scale domain mismatch");
    Polynomial r(dom_, nvars_);
    if (c.is_zero()) return r;
    r.terms_ = terms_;
    for (Term& t : r.terms_) t.coeff = t.coeff * c;
    return r;
}

Polynomial Polynomial::pow(unsigned long e) const {
    Polynomial r = Polynomial::constant(dom_, nvars_, Scalar::one(dom_));
    Polynomial base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (!(dom_ == o.dom_) || nvars_ != o.nvars_ || terms_.size() != o.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); ++i)
        if (!(terms_[i].mono == o.terms_[i].mono) || terms_[i].coeff != o.terms_[i].coeff) return false;
    return true;
}

Scalar Polynomial::coeff(const Monomial& m) const {
    for (const Term& t : terms_)
        if (t.mono == m) return t.coeff;
    return Scalar::zero(dom_);
}

Polynomial Polynomial::linear_substitute(const std::vector<std::vector<Scalar>>& m) const {
    if ((int)m.size() != nvars_) throw std::invalid_argument("substitution matrix must be nvars x nvars");
    for (const auto& row : m)
        if ((int)row.size() != nvars_) throw std::invalid_argument("substitution matrix must be square");
    std::vector<Polynomial> images;
    images.reserve(nvars_);
    for (int i = 0; i < nvars_; ++i) {
        Polynomial li(dom_, nvars_);
        for (int j = 0; j < nvars_; ++j)
            li = li + monomial_term(dom_, Monomial::var(nvars_, j), m[i][j]);
        images.push_back(li);
    }
    return compose(images);
}

Polynomial Polynomial::homogeneous_component(int d) const {
    if (d < 0) throw std::invalid_argument("negative degree");
    Polynomial r(dom_, nvars_);
    for (const Term& t : terms_)
        if (t.mono.degree() == d) r.terms_.push_back(t);
    return r;
}

Polynomial Polynomial::map_coefficients(const Domain& target,
                                        const std::function<Scalar(const Scalar&)>& f) const {
    Polynomial r(target, nvars_);
    for (const Term& t : terms_) {
        Scalar c = f(t.coeff);
        if (!(c.domain() == target)) throw std::invalid_argument("coefficient map produced wrong domain");
        if (!c.is_zero()) r.terms_.push_back({t.mono, c});
    }
    return r;
}

Polynomial Polynomial::compose(const std::vector<Polynomial>& fs) const {
    if ((int)fs.size() != nvars_) throw std::invalid_argument("compose: need one polynomial per variable");
    int target_nvars = nvars_;
    if (!fs.empty()) target_nvars = fs[0].nvars();
    for (const Polynomial& f : fs) {
        if (!(f.domain() == dom_)) throw std::invalid_argument("compose: domain mismatch");
        if (f.nvars() != target_nvars) throw std::invalid_argument("compose: arity mismatch among substituents");
    }
    // Cache powers of each substituent as needed.
    std::vector<std::vector<Polynomial>> powers(nvars_);
    auto power_of = [&](int i, int e) -> const Polynomial& {
        auto& cache = powers[i];
        if (cache.empty())
            cache.push_back(Polynomial::constant(dom_, target_nvars, Scalar::one(dom_)));
        while ((int)cache.size() <= e) cache.push_back(cache.back() * fs[i]);
        return cache[e];
    };
    Polynomial r(dom_, target_nvars);
    for (const Term& t : terms_) {
        Polynomial prod = Polynomial::constant(dom_, target_nvars, t.coeff);
        for (int i = 0; i < nvars_; ++i)
            if (t.mono.e[i] > 0) prod = prod * power_of(i, t.mono.e[i]);
        r = r + prod;
    }
    return r;
}

Scalar Polynomial::evaluate(const std::vector<Scalar>& xs) const {
    if ((int)xs.size() != nvars_) throw std::invalid_argument("evaluate: arity mismatch");
    Scalar r = Scalar::zero(dom_);
    for (const Term& t : terms_) {
        Scalar v = t.coeff;
        for (int i = 0; i < nvars_; ++i)
            for (int k = 0; k < t.mono.e[i]; ++k) v = v * xs[i];
        r = r + v;
    }
    return r;
}

Polynomial Polynomial::derivative(int i) const {
    if (i < 0 || i >= nvars_) throw std::invalid_argument("derivative: variable out of range");
    Polynomial r(dom_, nvars_);
    for (const Term& t : terms_) {
        if (t.mono.e[i] == 0) continue;
        Monomial m = t.mono;
        long e = m.e[i];
        m.e[i] -= 1;
        Scalar c = t.coeff * Scalar(dom_, e);
        if (!c.is_zero()) r.terms_.push_back({m, c});
    }
    // Term order is preserved only degree-wise; renormalize.
    return Polynomial(dom_, nvars_, r.terms_);
}

std::string Polynomial::str() const { return format_polynomial(*this); }

Polynomial arith(const Polynomial& f, const Polynomial& g, ArithOp op) {
    switch (op) {
        case ArithOp::Add: return f + g;
        case ArithOp::Sub: return f - g;
        case ArithOp::Mul: return f * g;
    }
    throw std::logic_error("unreachable");
}

Polynomial map_coefficients_mod_p(const Polynomial& f) {
    if (f.domain().kind != DomainKind::LocalizedIntegers)
        throw std::invalid_argument("map_coefficients_mod_p expects Z_(p) coefficients");
    Domain fp = Domain::prime_field(f.domain().p);
    return f.map_coefficients(fp, [&](const Scalar& c) { return reduce_mod_p(c); });
}

Polynomial poly_to_rationals(const Polynomial& f) {
    Domain q = Domain::rationals();
    return f.map_coefficients(q, [&](const Scalar& c) { return to_rational(c); });
}

Polynomial poly_to_localized(const Polynomial& f, const Int& p) {
    Domain zp = Domain::localized_integers(p);
    return f.map_coefficients(zp, [&](const Scalar& c) { return to_localized(c, p); });
}

Polynomial poly_lift_to_localized(const Polynomial& f) {
    if (f.domain().kind != DomainKind::PrimeField)
        throw std::invalid_argument("poly_lift_to_localized expects GF(p) coefficients");
    Domain zp = Domain::localized_integers(f.domain().p);
    return f.map_coefficients(zp, [&](const Scalar& c) { return lift_to_localized(c); });
}

long min_coeff_valuation(const Polynomial& f, const Int& p) {
    long v = VAL_INFINITY;
    for (const auto& t : f.terms())
        v = std::min(v, valuation_rat(t.coeff.value(), p));
    return v;
}

std::string variable_name(int nvars, int i) {
    if (nvars <= 3) {
        static const char* names[] = {"x", "y", "z"};
        return names[i];
    }
    return "x" + std::to_string(i + 1);
}

std::string format_polynomial(const Polynomial& f) {
    if (f.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& t : f.terms()) {
        Rat c = t.coeff.value();
        bool neg = c < 0;
        Rat a = neg ? Rat(-c) : c;
        if (first) {
            if (neg) out << "-";
            first = false;
        } else {
            out << (neg ? "-" : "+");
        }
        bool constant = t.mono.is_constant();
        bool printed_coeff = false;
        if (a != 1 || constant) {
            out << a.get_str();
            printed_coeff = true;
        }
        bool first_factor = !printed_coeff;
        for (int i = 0; i < t.mono.nvars(); ++i) {
            if (t.mono.e[i] == 0) continue;
            if (!first_factor) out << "*";
            first_factor = false;
            out << variable_name(t.mono.nvars(), i);
            if (t.mono.e[i] > 1) out << "^" << t.mono.e[i];
        }
    }
    return out.str();
}

namespace {

struct Parser {
    const std::string& s;
    size_t pos = 0;
    const Domain& dom;
    int nvars;

    void skip_ws() { while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos; }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) { ++pos; return true; }
        return false;
    }
    [[noreturn]] void fail(const std::string& msg) {
        throw std::invalid_argument("parse error at position " + std::to_string(pos) + ": " + msg);
    }

    int parse_uint() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
        if (pos == start) fail("expected number");
        return std::stoi(s.substr(start, pos - start));
    }

    Rat parse_number() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
        if (pos == start) fail("expected number");
        Int num(s.substr(start, pos - start));
        skip_ws();
        if (pos < s.size() && s[pos] == '/') {
            size_t save = pos;
            ++pos;
            skip_ws();
            size_t dstart = pos;
            while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
            if (pos == dstart) { pos = save; return Rat(num); }
            Int den(s.substr(dstart, pos - dstart));
            return make_rat(num, den);
        }
        return Rat(num);
    }

    int parse_variable() {
        skip_ws();
        if (pos >= s.size() || !std::isalpha((unsigned char)s[pos])) fail("expected variable");
        char c = s[pos++];
        if (pos < s.size() && std::isdigit((unsigned char)s[pos])) {
            if (c != 'x') fail("indexed variables use x<k>");
            int k = parse_uint();
            if (k < 1 || k > nvars) fail("variable index out of range");
            return k - 1;
        }
        int idx;
        switch (c) {
            case 'x': idx = 0; break;
            case 'y': idx = 1; break;
            case 'z': idx = 2; break;
            default: fail(std::string("unknown variable '") + c + "'");
        }
        if (idx >= nvars) fail("variable out of range for arity");
        return idx;
    }

    // factor := number | variable['^'uint]
    // term := ['-'|'+'] factor ('*'? factor)*
    Polynomial parse_term() {
        skip_ws();
        bool neg = false;
        while (true) {
            if (eat('-')) { neg = !neg; continue; }
            if (eat('+')) continue;
            break;
        }
        Rat coeff(1);
        Monomial mono(nvars);
        bool any = false;
        while (true) {
            skip_ws();
            if (pos >= s.size()) break;
            char c = s[pos];
            if (std::isdigit((unsigned char)c)) {
                coeff *= parse_number();
                any = true;
            } else if (std::isalpha((unsigned char)c)) {
                int v = parse_variable();
                int e = 1;
                if (eat('^')) e = parse_uint();
                mono.e[v] += e;
                any = true;
            } else {
                break;
            }
            skip_ws();
            if (pos < s.size() && s[pos] == '*') { ++pos; continue; }
        }
        if (!any) fail("empty term");
        if (neg) coeff = -coeff;
        return Polynomial::monomial_term(dom, mono, Scalar(dom, coeff));
    }

    Polynomial parse() {
        Polynomial r(dom, nvars);
        skip_ws();
        if (pos >= s.size()) fail("empty input");
        while (true) {
            r = r + parse_term();
            skip_ws();
            if (pos >= s.size()) break;
            if (s[pos] != '+' && s[pos] != '-') fail("expected '+' or '-'");
        }
        return r;
    }
};

} // namespace

Polynomial parse_polynomial(const std::string& text, const Domain& d, int nvars) {
    Parser p{text, 0, d, nvars};
    return p.parse();
}

} // namespace invar
