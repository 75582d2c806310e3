#include "omr/ideal.hpp"

#include <algorithm>

#include "omr/tensor.hpp"

namespace omr {

IdealGens multiplicativity_ideal(const AlgebraSpec& a, const AlgebraSpec& b) {
    int dA = a.dim(), dB = b.dim();
    int nv = dA * dB;
    IdealGens out{dA, dB, {}};
    auto var = [&](int i, int j) { return hom_index(i, j, dB) - 1; };
    for (int i = 1; i <= dA; ++i)
        for (int j = i; j <= dA; ++j)
            for (int k = 1; k <= dB; ++k) {
                Polynomial g(nv);
                for (int p = 1; p <= dB; ++p)
                    for (int q = 1; q <= dB; ++q) {
                        const Rat& c = b.c(p, q, k);
                        if (c.is_zero()) continue;
                        Monomial m(nv);
                        ++m.exps[static_cast<size_t>(var(i, p))];
                        ++m.exps[static_cast<size_t>(var(j, q))];
                        g.add_term(m, c);
                    }
                for (int t = 1; t <= dA; ++t) {
                    const Rat& c = a.c(i, j, t);
                    if (c.is_zero()) continue;
                    Monomial m(nv);
                    ++m.exps[static_cast<size_t>(var(t, k))];
                    g.add_term(m, -c);
                }
                if (!g.is_zero()) out.gens.push_back(std::move(g));
            }
    return out;
}

namespace {

// All monomials of degree exactly d over nv variables, deterministic order.
void monomials_of_degree(int nv, int d, int from, Monomial& cur, std::vector<Monomial>& out) {
    if (d == 0) {
        out.push_back(cur);
        return;
    }
    for (int v = from; v < nv; ++v) {
        ++cur.exps[static_cast<size_t>(v)];
        monomials_of_degree(nv, d - 1, v, cur, out);
        --cur.exps[static_cast<size_t>(v)];
    }
}

}  // namespace

std::vector<Polynomial> truncated_span(const AlgebraSpec& a, const AlgebraSpec& b, int N) {
    IdealGens ideal = multiplicativity_ideal(a, b);
    std::vector<Polynomial> span;
    if (N < 2) return span;
    int nv = ideal.nvars();
    std::vector<Monomial> mons;
    Monomial cur(nv);
    for (int d = 0; d <= N - 2; ++d) monomials_of_degree(nv, d, 0, cur, mons);
    for (const Polynomial& g : ideal.gens)
        for (const Monomial& m : mons) {
            Polynomial prod(nv);
            for (const auto& [gm, gc] : g.terms) prod.terms.emplace(gm * m, gc);
            span.push_back(std::move(prod));
        }
    return span;
}

namespace {

struct ModConstants {
    uint32_t p;
    int dA, dB;
    // cA[i][j][t], cB[a][b][k], all < p
    std::vector<uint32_t> ca, cb;

    uint32_t cA(int i, int j, int t) const {
        return ca[(static_cast<size_t>(i - 1) * dA + (j - 1)) * dA + (t - 1)];
    }
    uint32_t cB(int i, int j, int t) const {
        return cb[(static_cast<size_t>(i - 1) * dB + (j - 1)) * dB + (t - 1)];
    }
};

ModConstants reduce_constants(const AlgebraSpec& a, const AlgebraSpec& b, uint32_t p) {
    ModConstants mc{p, a.dim(), b.dim(), {}, {}};
    for (int i = 1; i <= mc.dA; ++i)
        for (int j = 1; j <= mc.dA; ++j)
            for (int t = 1; t <= mc.dA; ++t) mc.ca.push_back(reduce_mod(a.c(i, j, t), p).value());
    for (int i = 1; i <= mc.dB; ++i)
        for (int j = 1; j <= mc.dB; ++j)
            for (int t = 1; t <= mc.dB; ++t) mc.cb.push_back(reduce_mod(b.c(i, j, t), p).value());
    return mc;
}

bool is_hom(const ModConstants& mc, const FpMat& u) {
    uint64_t p = mc.p;
    // u(e_i) u(e_k) = u(e_i e_k) coordinatewise on the m-th basis vector of B.
    for (int i = 1; i <= mc.dA; ++i)
        for (int k = 1; k <= mc.dA; ++k)
            for (int m = 1; m <= mc.dB; ++m) {
                uint64_t lhs = 0;
                for (int j = 1; j <= mc.dB; ++j) {
                    uint64_t uji = u.at(j - 1, i - 1);
                    if (uji == 0) continue;
                    for (int j2 = 1; j2 <= mc.dB; ++j2) {
                        uint64_t c = mc.cB(j, j2, m);
                        if (c == 0) continue;
                        lhs = (lhs + uji * u.at(j2 - 1, k - 1) % p * c) % p;
                    }
                }
                uint64_t rhs = 0;
                for (int t = 1; t <= mc.dA; ++t)
                    rhs = (rhs + static_cast<uint64_t>(mc.cA(i, k, t)) * u.at(m - 1, t - 1)) % p;
                if (lhs != rhs) return false;
            }
    return true;
}

size_t point_count(int nvars, uint32_t p) {
    size_t total = 1;
    for (int v = 0; v < nvars; ++v) {
        total *= p;
        if (total > enumeration_budget) throw BudgetError("prime-field enumeration exceeds budget");
    }
    return total;
}

// Point x (ascending = lexicographic on the variable digits, first variable
// most significant) as a matrix.
FpMat point_matrix(size_t x, int dA, int dB, uint32_t p) {
    int nvars = dA * dB;
    FpMat u{p, dB, dA, std::vector<uint32_t>(static_cast<size_t>(dA) * dB, 0)};
    for (int v = nvars; v >= 1; --v) {
        auto [i, j] = hom_index_split(v, dB);
        u.vals[static_cast<size_t>(j - 1) * dA + (i - 1)] = static_cast<uint32_t>(x % p);
        x /= p;
    }
    return u;
}

struct VarietyScan {
    const AlgebraSpec& a;
    const AlgebraSpec& b;
    uint32_t p;
    ModConstants mc;
    IdealGens ideal;
    size_t total;

    VarietyScan(const AlgebraSpec& a_, const AlgebraSpec& b_, uint32_t p_)
        : a(a_), b(b_), p(p_), mc(reduce_constants(a_, b_, p_)),
          ideal(multiplicativity_ideal(a_, b_)), total(point_count(a_.dim() * b_.dim(), p_)) {}

    bool accept(const FpMat& u) const {
        std::vector<Fp> vals;
        vals.reserve(static_cast<size_t>(ideal.nvars()));
        for (int v = 1; v <= ideal.nvars(); ++v) {
            auto [i, j] = hom_index_split(v, ideal.dB);
            vals.emplace_back(u.at(j - 1, i - 1), p);
        }
        bool vanishes = true;
        for (const Polynomial& g : ideal.gens)
            if (!evaluate_mod(g, vals, p).is_zero()) {
                vanishes = false;
                break;
            }
        // The vanishing set provably coincides with the homomorphism set;
        // enforce that here, point by point.
        if (vanishes != is_hom(mc, u))
            throw std::logic_error("variety point disagrees with the direct homomorphism test");
        return vanishes;
    }
};

}  // namespace

bool is_homomorphism_mod(const AlgebraSpec& a, const AlgebraSpec& b, const FpMat& u) {
    if (!Fp::valid_modulus(u.p)) throw std::invalid_argument("bad modulus");
    if (u.rows != b.dim() || u.cols != a.dim()) throw std::invalid_argument("matrix shape mismatch");
    return is_hom(reduce_constants(a, b, u.p), u);
}

std::vector<FpMat> variety_points_serial(const AlgebraSpec& a, const AlgebraSpec& b, uint32_t p) {
    if (!Fp::valid_modulus(p)) throw std::invalid_argument("bad modulus");
    VarietyScan scan(a, b, p);
    std::vector<FpMat> out;
    for (size_t x = 0; x < scan.total; ++x) {
        FpMat u = point_matrix(x, a.dim(), b.dim(), p);
        if (scan.accept(u)) out.push_back(std::move(u));
    }
    return out;
}

std::vector<FpMat> variety_points(const AlgebraSpec& a, const AlgebraSpec& b, uint32_t p) {
    if (!Fp::valid_modulus(p)) throw std::invalid_argument("bad modulus");
    VarietyScan scan(a, b, p);
    const size_t block = 4096;
    size_t nblocks = (scan.total + block - 1) / block;
    std::vector<std::vector<FpMat>> found(nblocks);
    std::exception_ptr err;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (size_t bi = 0; bi < nblocks; ++bi) {
        try {
            size_t end = std::min(scan.total, (bi + 1) * block);
            for (size_t x = bi * block; x < end; ++x) {
                FpMat u = point_matrix(x, a.dim(), b.dim(), p);
                if (scan.accept(u)) found[bi].push_back(std::move(u));
            }
        } catch (...) {
#ifdef _OPENMP
#pragma omp critical
#endif
            if (!err) err = std::current_exception();
        }
    }
    if (err) std::rethrow_exception(err);
    std::vector<FpMat> out;
    for (auto& chunk : found)
        for (auto& u : chunk) out.push_back(std::move(u));
    return out;
}

std::vector<FpMat> homomorphism_points(const AlgebraSpec& a, const AlgebraSpec& b, uint32_t p) {
    if (!Fp::valid_modulus(p)) throw std::invalid_argument("bad modulus");
    ModConstants mc = reduce_constants(a, b, p);
    size_t total = point_count(a.dim() * b.dim(), p);
    std::vector<FpMat> out;
    for (size_t x = 0; x < total; ++x) {
        FpMat u = point_matrix(x, a.dim(), b.dim(), p);
        if (is_hom(mc, u)) out.push_back(std::move(u));
    }
    return out;
}

Fp det_mod(const FpMat& u) {
    if (u.rows != u.cols) throw std::invalid_argument("determinant of a non-square matrix");
    uint32_t p = u.p;
    int n = u.rows;
    std::vector<Fp> m;
    m.reserve(static_cast<size_t>(n) * n);
    for (uint32_t v : u.vals) m.emplace_back(v, p);
    Fp det(1, p);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n && pivot < 0; ++r)
            if (!m[static_cast<size_t>(r) * n + col].is_zero()) pivot = r;
        if (pivot < 0) return Fp(0, p);
        if (pivot != col) {
            for (int c = 0; c < n; ++c)
                std::swap(m[static_cast<size_t>(pivot) * n + c], m[static_cast<size_t>(col) * n + c]);
            det = Fp(p - 1, p) * det;
        }
        Fp lead = m[static_cast<size_t>(col) * n + col];
        det = det * lead;
        Fp inv = lead.inv();
        for (int r = col + 1; r < n; ++r) {
            Fp f = m[static_cast<size_t>(r) * n + col] * inv;
            if (f.is_zero()) continue;
            for (int c = col; c < n; ++c)
                m[static_cast<size_t>(r) * n + c] =
                    m[static_cast<size_t>(r) * n + c] - f * m[static_cast<size_t>(col) * n + c];
        }
    }
    return det;
}

}  // namespace omr
