#include "omr/monomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace omr {

int Monomial::degree() const {
    int d = 0;
    for (int e : exps) d += e;
    return d;
}

bool Monomial::is_one() const {
    return std::all_of(exps.begin(), exps.end(), [](int e) { return e == 0; });
}

Monomial Monomial::operator*(const Monomial& o) const {
    if (exps.size() != o.exps.size()) throw std::invalid_argument("variable count mismatch");
    Monomial r = *this;
    for (size_t v = 0; v < exps.size(); ++v) r.exps[v] += o.exps[v];
    return r;
}

bool Monomial::divides(const Monomial& o) const {
    if (exps.size() != o.exps.size()) throw std::invalid_argument("variable count mismatch");
    for (size_t v = 0; v < exps.size(); ++v)
        if (exps[v] > o.exps[v]) return false;
    return true;
}

Monomial Monomial::divided_by(const Monomial& by) const {
    if (!by.divides(*this)) throw std::invalid_argument("not divisible");
    Monomial r = *this;
    for (size_t v = 0; v < exps.size(); ++v) r.exps[v] -= by.exps[v];
    return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    if (a.exps.size() != b.exps.size()) throw std::invalid_argument("variable count mismatch");
    Monomial r = a;
    for (size_t v = 0; v < r.exps.size(); ++v) r.exps[v] = std::max(r.exps[v], b.exps[v]);
    return r;
}

bool Monomial::coprime(const Monomial& o) const {
    if (exps.size() != o.exps.size()) throw std::invalid_argument("variable count mismatch");
    for (size_t v = 0; v < exps.size(); ++v)
        if (exps[v] > 0 && o.exps[v] > 0) return false;
    return true;
}

int GrevlexOrder::cmp(const Monomial& a, const Monomial& b) const {
    if (a.exps.size() != b.exps.size()) throw std::invalid_argument("variable count mismatch");
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db ? -1 : 1;
    for (size_t v = 0; v < a.exps.size(); ++v)
        if (a.exps[v] != b.exps[v]) return a.exps[v] > b.exps[v] ? -1 : 1;
    return 0;
}

int EliminationOrder::cmp(const Monomial& a, const Monomial& b) const {
    if (a.exps.size() != b.exps.size()) throw std::invalid_argument("variable count mismatch");
    size_t t = static_cast<size_t>(var_);
    if (t >= a.exps.size()) throw std::invalid_argument("eliminated variable out of range");
    if (a.exps[t] != b.exps[t]) return a.exps[t] < b.exps[t] ? -1 : 1;
    int da = a.degree() - a.exps[t], db = b.degree() - b.exps[t];
    if (da != db) return da < db ? -1 : 1;
    for (size_t v = 0; v < a.exps.size(); ++v) {
        if (v == t) continue;
        if (a.exps[v] != b.exps[v]) return a.exps[v] > b.exps[v] ? -1 : 1;
    }
    return 0;
}

}  // namespace omr
