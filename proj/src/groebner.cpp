#include "omr/groebner.hpp"

#include <algorithm>
#include <set>

namespace omr {

namespace {

Polynomial make_monic(Polynomial p, const MonomialOrder& ord) {
    const auto* lt = leading_term(p, ord);
    if (lt && !lt->second.is_one()) p *= lt->second.inv();
    return p;
}

Polynomial times_monomial(const Polynomial& p, const Monomial& m, const Rat& c) {
    Polynomial r(p.nv);
    for (const auto& [pm, pc] : p.terms) r.terms.emplace(pm * m, pc * c);
    return r;
}

Polynomial reduce_full(Polynomial p, const std::vector<Polynomial>& basis,
                       const MonomialOrder& ord) {
    Polynomial rem(p.nv);
    while (!p.is_zero()) {
        const auto* lt = leading_term(p, ord);
        bool reduced = false;
        for (const Polynomial& g : basis) {
            const auto* gt = leading_term(g, ord);
            if (!gt || !gt->first.divides(lt->first)) continue;
            p -= times_monomial(g, lt->first.divided_by(gt->first), lt->second / gt->second);
            reduced = true;
            break;
        }
        if (!reduced) {
            rem.add_term(lt->first, lt->second);
            Polynomial next(p.nv);
            for (const auto& [m, c] : p.terms)
                if (!(m == lt->first)) next.terms.emplace(m, c);
            p = std::move(next);
        }
    }
    return rem;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& ord) {
    const auto* ft = leading_term(f, ord);
    const auto* gt = leading_term(g, ord);
    Monomial l = Monomial::lcm(ft->first, gt->first);
    Polynomial a = times_monomial(f, l.divided_by(ft->first), ft->second.inv());
    Polynomial b = times_monomial(g, l.divided_by(gt->first), gt->second.inv());
    return a - b;
}

struct Pair {
    size_t i, j;  // i < j
    Monomial lcm;
    int degree;
};

}  // namespace

bool GroebnerBasis::contains_unit() const {
    return polys.size() == 1 && polys.front().is_constant() && !polys.front().is_zero();
}

GroebnerBasis buchberger(int nvars, const std::vector<Polynomial>& gens,
                         std::shared_ptr<const MonomialOrder> order) {
    if (!order) throw std::invalid_argument("null monomial order");
    const MonomialOrder& ord = *order;

    std::vector<Polynomial> basis;
    for (const Polynomial& g : gens) {
        if (g.nv != nvars) throw std::invalid_argument("generator has wrong variable count");
        if (!g.is_zero()) basis.push_back(make_monic(g, ord));
    }

    auto lt_of = [&](size_t k) -> const Monomial& { return leading_term(basis[k], ord)->first; };
    auto make_pair = [&](size_t i, size_t j) {
        Monomial l = Monomial::lcm(lt_of(i), lt_of(j));
        int d = l.degree();
        return Pair{i, j, std::move(l), d};
    };

    std::vector<Pair> queue;
    std::set<std::pair<size_t, size_t>> pending;
    for (size_t j = 1; j < basis.size(); ++j)
        for (size_t i = 0; i < j; ++i) {
            queue.push_back(make_pair(i, j));
            pending.insert({i, j});
        }

    auto still_pending = [&](size_t a, size_t b) {
        if (a > b) std::swap(a, b);
        return pending.count({a, b}) != 0;
    };

    while (!queue.empty()) {
        // Normal strategy: minimal lcm degree, then lexicographically
        // smallest lcm, then smallest index pair.
        size_t best = 0;
        for (size_t k = 1; k < queue.size(); ++k) {
            const Pair &p = queue[k], &q = queue[best];
            if (p.degree != q.degree ? p.degree < q.degree
                : p.lcm != q.lcm     ? p.lcm < q.lcm
                                     : std::pair{p.i, p.j} < std::pair{q.i, q.j})
                best = k;
        }
        Pair pair = std::move(queue[best]);
        queue.erase(queue.begin() + static_cast<long>(best));
        pending.erase({pair.i, pair.j});

        // Product criterion: coprime leading monomials reduce to zero.
        if (lt_of(pair.i).coprime(lt_of(pair.j))) continue;
        // Chain criterion: some third leading monomial divides the lcm and
        // both companion pairs are already settled.
        bool chained = false;
        for (size_t k = 0; k < basis.size() && !chained; ++k) {
            if (k == pair.i || k == pair.j) continue;
            chained = lt_of(k).divides(pair.lcm) && !still_pending(pair.i, k) &&
                      !still_pending(pair.j, k);
        }
        if (chained) continue;

        Polynomial rem = reduce_full(s_polynomial(basis[pair.i], basis[pair.j], ord), basis, ord);
        if (rem.is_zero()) continue;
        basis.push_back(make_monic(std::move(rem), ord));
        size_t j = basis.size() - 1;
        for (size_t i = 0; i < j; ++i) {
            queue.push_back(make_pair(i, j));
            pending.insert({i, j});
        }
    }

    // Minimalize: drop polynomials whose leading monomial is divisible by
    // another one's.
    std::vector<bool> keep(basis.size(), true);
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = 0; j < basis.size() && keep[i]; ++j) {
            if (i == j || !keep[j]) continue;
            const Monomial &li = lt_of(i), &lj = lt_of(j);
            if (lj.divides(li) && !(li == lj && j > i)) keep[i] = false;
        }
    std::vector<Polynomial> minimal;
    for (size_t i = 0; i < basis.size(); ++i)
        if (keep[i]) minimal.push_back(basis[i]);

    // Interreduce: each element fully reduced against the others.
    std::vector<Polynomial> reduced = minimal;
    for (size_t i = 0; i < reduced.size(); ++i) {
        std::vector<Polynomial> others;
        for (size_t j = 0; j < reduced.size(); ++j)
            if (j != i) others.push_back(reduced[j]);
        reduced[i] = make_monic(reduce_full(reduced[i], others, ord), ord);
    }
    std::erase_if(reduced, [](const Polynomial& p) { return p.is_zero(); });
    std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
        return ord.less(leading_term(b, ord)->first, leading_term(a, ord)->first);
    });

    return {nvars, std::move(order), std::move(reduced)};
}

GroebnerBasis buchberger(int nvars, const std::vector<Polynomial>& gens) {
    return buchberger(nvars, gens, std::make_shared<GrevlexOrder>());
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) {
    if (f.nv != gb.nv) throw std::invalid_argument("variable count mismatch");
    return reduce_full(f, gb.polys, *gb.order);
}

bool radical_member(const Polynomial& f, const std::vector<Polynomial>& gens) {
    if (f.is_zero()) return true;
    int nv = f.nv;
    int ext = nv + 1;
    std::vector<Polynomial> extended;
    extended.reserve(gens.size() + 1);
    for (const Polynomial& g : gens) {
        if (g.nv != nv) throw std::invalid_argument("variable count mismatch");
        extended.push_back(with_nvars(g, ext));
    }
    Polynomial t = Polynomial::variable(ext, ext - 1);
    extended.push_back(Polynomial::constant(ext, Rat(1)) - t * with_nvars(f, ext));
    GroebnerBasis gb = buchberger(ext, extended, std::make_shared<EliminationOrder>(ext - 1));
    return gb.contains_unit();
}

std::optional<int> min_power(const Polynomial& f, const GroebnerBasis& gb, int r_max) {
    if (r_max < 1) throw std::invalid_argument("r_max must be at least 1");
    Polynomial p = Polynomial::constant(gb.nv, Rat(1));
    for (int r = 1; r <= r_max; ++r) {
        p = normal_form(p * f, gb);
        if (p.is_zero()) return r;
    }
    return std::nullopt;
}

}  // namespace omr
