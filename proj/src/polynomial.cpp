#include "monocurve/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace monocurve {

namespace {

bool storage_greater(const Term& a, const Term& b) { return b.m.e < a.m.e; }

} // namespace

Polynomial::Polynomial(int nvars, std::vector<Term> terms) : nvars_(nvars), terms_(std::move(terms)) {
    for (const Term& t : terms_)
        if (t.m.nvars() != nvars_) throw DimensionMismatchError("term does not match ambient ring");
    normalize();
}

void Polynomial::normalize() {
    std::sort(terms_.begin(), terms_.end(), storage_greater);
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (Term& t : terms_) {
        if (!out.empty() && out.back().m == t.m)
            out.back().c += t.c;
        else
            out.push_back(std::move(t));
    }
    out.erase(std::remove_if(out.begin(), out.end(), [](const Term& t) { return t.c == 0; }),
              out.end());
    terms_ = std::move(out);
}

Polynomial Polynomial::constant(int nvars, const Rational& c) {
    Polynomial f(nvars);
    if (c != 0) f.terms_.push_back({Monomial(nvars), c});
    return f;
}

Polynomial Polynomial::monomial(Monomial m, Rational c) {
    Polynomial f(m.nvars());
    if (c != 0) f.terms_.push_back({std::move(m), std::move(c)});
    return f;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(*this);
    for (Term& t : r.terms_) t.c = -t.c;
    return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    if (nvars_ != o.nvars_) throw DimensionMismatchError("polynomial ambient mismatch");
    // Merge two sorted term lists.
    Polynomial r(nvars_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        if (terms_[i].m == o.terms_[j].m) {
            Rational c = terms_[i].c + o.terms_[j].c;
            if (c != 0) r.terms_.push_back({terms_[i].m, std::move(c)});
            ++i, ++j;
        } else if (storage_greater(terms_[i], o.terms_[j])) {
            r.terms_.push_back(terms_[i++]);
        } else {
            r.terms_.push_back(o.terms_[j++]);
        }
    }
    while (i < terms_.size()) r.terms_.push_back(terms_[i++]);
    while (j < o.terms_.size()) r.terms_.push_back(o.terms_[j++]);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (nvars_ != o.nvars_) throw DimensionMismatchError("polynomial ambient mismatch");
    std::vector<Term> prod;
    prod.reserve(terms_.size() * o.terms_.size());
    for (const Term& a : terms_)
        for (const Term& b : o.terms_) prod.push_back({a.m * b.m, a.c * b.c});
    return Polynomial(nvars_, std::move(prod));
}

Polynomial Polynomial::operator*(const Rational& c) const {
    if (c == 0) return Polynomial(nvars_);
    Polynomial r(*this);
    for (Term& t : r.terms_) t.c *= c;
    return r;
}

Polynomial operator*(const Polynomial& f, const Monomial& m) {
    std::vector<Term> out;
    out.reserve(f.terms().size());
    for (const Term& t : f.terms()) out.push_back({t.m * m, t.c});
    return Polynomial(f.nvars(), std::move(out));
}

const Term& Polynomial::leading_term(const MonomialOrder& o) const {
    if (terms_.empty()) throw Error("leading term of the zero polynomial");
    const Term* best = &terms_[0];
    for (std::size_t i = 1; i < terms_.size(); ++i)
        if (o.greater(terms_[i].m, best->m)) best = &terms_[i];
    return *best;
}

std::int32_t Polynomial::degree() const {
    std::int32_t d = -1;
    for (const Term& t : terms_) d = std::max(d, t.m.degree());
    return d;
}

std::int64_t Polynomial::weighted_degree(const std::vector<std::int64_t>& w) const {
    std::int64_t d = -1;
    for (const Term& t : terms_) {
        std::int64_t s = 0;
        for (std::size_t i = 0; i < t.m.e.size(); ++i) s += w[i] * t.m.e[i];
        d = std::max(d, s);
    }
    return d;
}

bool Polynomial::is_homogeneous() const {
    for (const Term& t : terms_)
        if (t.m.degree() != terms_[0].m.degree()) return false;
    return true;
}

bool Polynomial::is_homogeneous(const std::vector<std::int64_t>& w) const {
    if (terms_.empty()) return true;
    auto wdeg = [&](const Monomial& m) {
        std::int64_t s = 0;
        for (std::size_t i = 0; i < m.e.size(); ++i) s += w[i] * m.e[i];
        return s;
    };
    std::int64_t d0 = wdeg(terms_[0].m);
    for (const Term& t : terms_)
        if (wdeg(t.m) != d0) return false;
    return true;
}

Polynomial rename_vars(const Polynomial& f, int new_nvars, const std::vector<int>& image) {
    std::vector<Term> out;
    out.reserve(f.terms().size());
    for (const Term& t : f.terms()) {
        Monomial m(new_nvars);
        for (std::size_t i = 0; i < t.m.e.size(); ++i)
            if (t.m.e[i]) m.e[static_cast<std::size_t>(image[i])] = t.m.e[i];
        out.push_back({std::move(m), t.c});
    }
    return Polynomial(new_nvars, std::move(out));
}

Polynomial restrict_vars(const Polynomial& f, const std::vector<int>& keep) {
    std::vector<int> image(static_cast<std::size_t>(f.nvars()), -1);
    for (std::size_t j = 0; j < keep.size(); ++j) image[static_cast<std::size_t>(keep[j])] = static_cast<int>(j);
    std::vector<Term> out;
    out.reserve(f.terms().size());
    for (const Term& t : f.terms()) {
        Monomial m(static_cast<int>(keep.size()));
        for (std::size_t i = 0; i < t.m.e.size(); ++i) {
            if (!t.m.e[i]) continue;
            if (image[i] < 0) throw DimensionMismatchError("polynomial meets a dropped variable");
            m.e[static_cast<std::size_t>(image[i])] = t.m.e[i];
        }
        out.push_back({std::move(m), t.c});
    }
    return Polynomial(static_cast<int>(keep.size()), std::move(out));
}

Polynomial set_var_zero(const Polynomial& f, int v) {
    std::vector<Term> out;
    for (const Term& t : f.terms())
        if (t.m.e[static_cast<std::size_t>(v)] == 0) out.push_back(t);
    return Polynomial(f.nvars(), std::move(out));
}

std::int32_t var_min_exponent(const Polynomial& f, int v) {
    if (f.is_zero()) return 0;
    std::int32_t k = f.terms()[0].m.e[static_cast<std::size_t>(v)];
    for (const Term& t : f.terms()) k = std::min(k, t.m.e[static_cast<std::size_t>(v)]);
    return k;
}

Polynomial divide_by_var_power(const Polynomial& f, int v, std::int32_t k) {
    if (k == 0) return f;
    std::vector<Term> out;
    out.reserve(f.terms().size());
    for (const Term& t : f.terms()) {
        if (t.m.e[static_cast<std::size_t>(v)] < k)
            throw Error("polynomial not divisible by requested variable power");
        Term s = t;
        s.m.e[static_cast<std::size_t>(v)] -= k;
        out.push_back(std::move(s));
    }
    return Polynomial(f.nvars(), std::move(out));
}

bool uses_var(const Polynomial& f, int v) {
    for (const Term& t : f.terms())
        if (t.m.e[static_cast<std::size_t>(v)]) return true;
    return false;
}

namespace {

struct Parser {
    const std::string& s;
    std::size_t pos = 0;
    int num_x;
    bool with_u;
    int nvars;

    Parser(const std::string& text, int num_x_vars, bool allow_u)
        : s(text), num_x(num_x_vars), with_u(allow_u), nvars(num_x_vars + (allow_u ? 1 : 0)) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& why) {
        throw ParseError("cannot parse '" + s + "': " + why + " at position " + std::to_string(pos));
    }

    std::int64_t integer() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail("expected a number");
        if (pos - start > 18) fail("numeric literal too long");
        return std::stoll(s.substr(start, pos - start));
    }

    // factor := number ('/' number)? | name ('^' number)?
    void factor(Monomial& m, Rational& c) {
        skip_ws();
        if (pos >= s.size()) fail("expected a factor");
        char ch = s[pos];
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            std::int64_t num = integer();
            if (eat('/')) {
                std::int64_t den = integer();
                if (den == 0) fail("zero denominator");
                c *= Rational(num, den);
            } else {
                c *= num;
            }
            return;
        }
        int v;
        if (ch == 'u' && with_u) {
            ++pos;
            v = num_x;
        } else if (ch == 'x') {
            ++pos;
            std::int64_t idx = integer();
            if (idx >= num_x) fail("variable x" + std::to_string(idx) + " outside ambient ring");
            v = static_cast<int>(idx);
        } else {
            fail("expected a variable or number");
        }
        std::int64_t p = 1;
        if (eat('^')) {
            p = integer();
            if (p > 1000000) fail("exponent too large");
        }
        m.e[static_cast<std::size_t>(v)] += static_cast<std::int32_t>(p);
    }

    // term := factor ('*' factor)*
    Term term() {
        Term t{Monomial(nvars), Rational(1)};
        factor(t.m, t.c);
        while (eat('*')) factor(t.m, t.c);
        return t;
    }

    Polynomial expr() {
        std::vector<Term> out;
        int sign = 1;
        skip_ws();
        if (eat('-'))
            sign = -1;
        else
            eat('+');
        Term t = term();
        t.c *= sign;
        out.push_back(std::move(t));
        for (;;) {
            skip_ws();
            if (pos >= s.size()) break;
            if (eat('+'))
                sign = 1;
            else if (eat('-'))
                sign = -1;
            else
                fail("expected '+' or '-'");
            Term u = term();
            u.c *= sign;
            out.push_back(std::move(u));
        }
        return Polynomial(nvars, std::move(out));
    }
};

} // namespace

Polynomial parse_polynomial(const std::string& text, int num_x_vars, bool with_u) {
    Parser p(text, num_x_vars, with_u);
    return p.expr();
}

Monomial parse_monomial(const std::string& text, int num_x_vars) {
    Parser p(text, num_x_vars, false);
    Term t = p.term();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    if (t.c != 1) throw ParseError("'" + text + "' is not a monomial");
    return t.m;
}

std::string to_string(const Rational& c) {
    std::ostringstream os;
    os << c;
    return os.str();
}

std::string to_string(const Monomial& m, int u_index) {
    if (m.is_one()) return "1";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < m.e.size(); ++i) {
        if (!m.e[i]) continue;
        if (!first) os << "*";
        first = false;
        if (static_cast<int>(i) == u_index)
            os << "u";
        else
            os << "x" << i;
        if (m.e[i] > 1) os << "^" << m.e[i];
    }
    return os.str();
}

std::string to_string(const Polynomial& f, int u_index) {
    if (f.is_zero()) return "0";
    std::vector<Term> ts(f.terms());
    MonomialOrder o = MonomialOrder::degrevlex(f.nvars());
    std::sort(ts.begin(), ts.end(), [&](const Term& a, const Term& b) { return o.greater(a.m, b.m); });
    std::ostringstream os;
    for (std::size_t i = 0; i < ts.size(); ++i) {
        Rational c = ts[i].c;
        if (i == 0) {
            if (c < 0) {
                os << "-";
                c = -c;
            }
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        if (ts[i].m.is_one())
            os << to_string(c);
        else if (c == 1)
            os << to_string(ts[i].m, u_index);
        else
            os << to_string(c) << "*" << to_string(ts[i].m, u_index);
    }
    return os.str();
}

} // namespace monocurve
