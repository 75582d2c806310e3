#include "omr/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "omr/tensor.hpp"

namespace omr {

Polynomial Polynomial::constant(int nvars, const Rat& c) {
    Polynomial p(nvars);
    p.add_term(Monomial(nvars), c);
    return p;
}

Polynomial Polynomial::variable(int nvars, int v) {
    if (v < 0 || v >= nvars) throw std::invalid_argument("variable index out of range");
    Monomial m(nvars);
    m.exps[static_cast<size_t>(v)] = 1;
    Polynomial p(nvars);
    p.add_term(m, Rat(1));
    return p;
}

bool Polynomial::is_constant() const {
    return terms.empty() || (terms.size() == 1 && terms.begin()->first.is_one());
}

int Polynomial::degree() const {
    int d = -1;
    for (const auto& [m, c] : terms) d = std::max(d, m.degree());
    return d;
}

bool Polynomial::is_homogeneous() const {
    if (terms.empty()) return true;
    int d = terms.begin()->first.degree();
    for (const auto& [m, c] : terms)
        if (m.degree() != d) return false;
    return true;
}

Rat Polynomial::coeff(const Monomial& m) const {
    auto it = terms.find(m);
    return it == terms.end() ? Rat() : it->second;
}

void Polynomial::add_term(const Monomial& m, const Rat& c) {
    if (m.nvars() != nv) throw std::invalid_argument("term has wrong variable count");
    if (c.is_zero()) return;
    auto [it, fresh] = terms.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial r(nv);
    for (const auto& [m, c] : terms) r.terms.emplace(m, -c);
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (nv != o.nv) throw std::invalid_argument("variable count mismatch");
    for (const auto& [m, c] : o.terms) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (nv != o.nv) throw std::invalid_argument("variable count mismatch");
    for (const auto& [m, c] : o.terms) add_term(m, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(const Rat& f) {
    if (f.is_zero()) {
        terms.clear();
        return *this;
    }
    for (auto& [m, c] : terms) c *= f;
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.nv != b.nv) throw std::invalid_argument("variable count mismatch");
    Polynomial r(a.nv);
    for (const auto& [ma, ca] : a.terms)
        for (const auto& [mb, cb] : b.terms) r.add_term(ma * mb, ca * cb);
    return r;
}

Polynomial Polynomial::pow(int r) const {
    if (r < 0) throw std::invalid_argument("negative power");
    Polynomial acc = constant(nv, Rat(1));
    for (int t = 0; t < r; ++t) acc = acc * (*this);
    return acc;
}

Polynomial Polynomial::homogeneous_part(int d) const {
    Polynomial r(nv);
    for (const auto& [m, c] : terms)
        if (m.degree() == d) r.terms.emplace(m, c);
    return r;
}

const std::pair<const Monomial, Rat>* leading_term(const Polynomial& p, const MonomialOrder& ord) {
    const std::pair<const Monomial, Rat>* best = nullptr;
    for (const auto& term : p.terms)
        if (!best || ord.less(best->first, term.first)) best = &term;
    return best;
}

Polynomial with_nvars(const Polynomial& p, int nvars) {
    Polynomial r(nvars);
    for (const auto& [m, c] : p.terms) {
        Monomial mm(nvars);
        for (int v = 0; v < m.nvars(); ++v) {
            if (m.exps[static_cast<size_t>(v)] == 0) continue;
            if (v >= nvars) throw std::invalid_argument("dropped variable is in use");
            mm.exps[static_cast<size_t>(v)] = m.exps[static_cast<size_t>(v)];
        }
        r.terms.emplace(std::move(mm), c);
    }
    return r;
}

std::string poly_to_string(const Polynomial& p, int dA, int dB) {
    if (p.nv != dA * dB) throw std::invalid_argument("polynomial not over the given variable grid");
    if (p.is_zero()) return "0";
    GrevlexOrder ord;
    std::vector<const Monomial*> mons;
    mons.reserve(p.terms.size());
    for (const auto& [m, c] : p.terms) mons.push_back(&m);
    std::sort(mons.begin(), mons.end(),
              [&](const Monomial* a, const Monomial* b) { return ord.less(*b, *a); });
    std::ostringstream out;
    bool first = true;
    for (const Monomial* m : mons) {
        const Rat& c = p.terms.at(*m);
        if (first) {
            if (c.sign() < 0) out << "-";
            first = false;
        } else {
            out << (c.sign() < 0 ? " - " : " + ");
        }
        out << c.abs().str();
        for (int v = 0; v < m->nvars(); ++v) {
            int e = m->exps[static_cast<size_t>(v)];
            if (e == 0) continue;
            auto [i, j] = hom_index_split(v + 1, dB);
            out << " * l[" << i << "][" << j << "]";
            if (e >= 2) out << "^" << e;
        }
    }
    return out.str();
}

namespace {

struct Cursor {
    const std::string& s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= s.size();
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("polynomial parse error at offset " + std::to_string(pos) +
                                    ": " + what);
    }
    long read_uint() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail("expected number");
        return std::stol(s.substr(start, pos - start));
    }
    Rat read_rational() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail("expected coefficient");
        if (pos < s.size() && s[pos] == '/') {
            ++pos;
            size_t dstart = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            if (pos == dstart) fail("expected denominator");
        }
        return Rat::parse(s.substr(start, pos - start));
    }
};

}  // namespace

Polynomial poly_parse(const std::string& text, int dA, int dB) {
    if (dA < 1 || dB < 1) throw std::invalid_argument("bad variable grid");
    int nvars = dA * dB;
    Cursor c{text};
    if (c.done()) c.fail("empty input");
    Polynomial p(nvars);
    bool negative = c.eat('-');
    while (true) {
        Rat coeff = c.read_rational();
        if (negative) coeff = -coeff;
        Monomial mon(nvars);
        while (c.peek() == '*') {
            c.eat('*');
            if (!c.eat('l') || !c.eat('[')) c.fail("expected l[");
            long i = c.read_uint();
            if (!c.eat(']') || !c.eat('[')) c.fail("expected ][");
            long j = c.read_uint();
            if (!c.eat(']')) c.fail("expected ]");
            if (i < 1 || i > dA || j < 1 || j > dB) c.fail("variable outside grid");
            long e = 1;
            if (c.eat('^')) {
                e = c.read_uint();
                if (e < 1) c.fail("exponent must be positive");
            }
            mon.exps[static_cast<size_t>(hom_index(static_cast<int>(i), static_cast<int>(j), dB)) -
                     1] += static_cast<int>(e);
        }
        p.add_term(mon, coeff);
        if (c.done()) break;
        if (c.eat('+'))
            negative = false;
        else if (c.eat('-'))
            negative = true;
        else
            c.fail("expected + or -");
    }
    return p;
}

Rat evaluate(const Polynomial& p, const std::vector<Rat>& vals) {
    if (static_cast<int>(vals.size()) != p.nv) throw std::invalid_argument("value grid mismatch");
    Rat acc;
    for (const auto& [m, c] : p.terms) {
        Rat t = c;
        for (int v = 0; v < p.nv; ++v)
            for (int e = 0; e < m.exps[static_cast<size_t>(v)]; ++e)
                t *= vals[static_cast<size_t>(v)];
        acc += t;
    }
    return acc;
}

Fp reduce_mod(const Rat& x, uint32_t prime) {
    if (!Fp::valid_modulus(prime)) throw std::invalid_argument("bad modulus");
    uint32_t n = static_cast<uint32_t>(mpz_fdiv_ui(x.num().get_mpz_t(), prime));
    uint32_t d = static_cast<uint32_t>(mpz_fdiv_ui(x.den().get_mpz_t(), prime));
    if (d == 0) throw std::invalid_argument("denominator divisible by the modulus");
    return Fp(n, prime) * Fp(d, prime).inv();
}

Fp evaluate_mod(const Polynomial& p, const std::vector<Fp>& vals, uint32_t prime) {
    if (static_cast<int>(vals.size()) != p.nv) throw std::invalid_argument("value grid mismatch");
    for (const Fp& v : vals)
        if (v.modulus() != prime) throw std::invalid_argument("mixed moduli");
    Fp acc(0, prime);
    for (const auto& [m, c] : p.terms) {
        Fp t = reduce_mod(c, prime);
        for (int v = 0; v < p.nv; ++v)
            for (int e = 0; e < m.exps[static_cast<size_t>(v)]; ++e)
                t = t * vals[static_cast<size_t>(v)];
        acc = acc + t;
    }
    return acc;
}

}  // namespace omr
