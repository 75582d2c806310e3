#include "omr/sparse_solve.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace omr {

namespace {

using ZRow = std::vector<std::pair<int, mpz_class>>;

void strip_content(ZRow& r) {
    if (r.empty()) return;
    mpz_class g = 0;
    for (auto& [c, v] : r) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) break;
    }
    if (sgn(r.front().second) < 0) g = -g;
    if (g != 1)
        for (auto& [c, v] : r) v /= g;
}

// dst = a*dst - b*src, sorted-merge; zero terms dropped; content stripped.
ZRow combine(const ZRow& dst, const mpz_class& a, const ZRow& src, const mpz_class& b) {
    ZRow out;
    out.reserve(dst.size() + src.size());
    size_t i = 0, j = 0;
    while (i < dst.size() || j < src.size()) {
        if (j == src.size() || (i < dst.size() && dst[i].first < src[j].first)) {
            out.emplace_back(dst[i].first, a * dst[i].second);
            ++i;
        } else if (i == dst.size() || src[j].first < dst[i].first) {
            out.emplace_back(src[j].first, -b * src[j].second);
            ++j;
        } else {
            mpz_class v = a * dst[i].second - b * src[j].second;
            if (v != 0) out.emplace_back(dst[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    strip_content(out);
    return out;
}

}  // namespace

void SparseSystem::add_row(const std::vector<std::pair<int, Rat>>& terms) {
    std::map<int, Rat> merged;
    for (const auto& [c, v] : terms) {
        if (c < 0 || c >= ncols_) throw std::out_of_range("SparseSystem: column out of range");
        if (v.is_zero()) continue;
        Rat& slot = merged[c];
        slot += v;
        if (slot.is_zero()) merged.erase(c);
    }
    if (merged.empty()) return;  // trivially satisfied row carries no information
    mpz_class den = 1;
    for (const auto& [c, v] : merged) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.den().get_mpz_t());
    ZRow row;
    row.reserve(merged.size());
    for (const auto& [c, v] : merged) row.emplace_back(c, v.num() * (den / v.den()));
    strip_content(row);
    rows_.push_back(std::move(row));
}

std::vector<int> EchelonForm::free_cols() const {
    std::vector<bool> is_pivot(ncols, false);
    for (int c : pivot_cols) is_pivot[c] = true;
    std::vector<int> free;
    for (int c = 0; c < ncols; ++c)
        if (!is_pivot[c]) free.push_back(c);
    return free;
}

std::vector<std::vector<Rat>> EchelonForm::nullspace_basis() const {
    std::vector<std::vector<Rat>> basis;
    for (int f : free_cols()) {
        std::vector<Rat> v(ncols);
        v[f] = Rat(1);
        for (size_t i = 0; i < rows.size(); ++i) {
            for (const auto& [c, coef] : rows[i].terms)
                if (c == f) {
                    v[pivot_cols[i]] = -coef;
                    break;
                }
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<Rat> EchelonForm::reduce(std::vector<Rat> v) const {
    if (static_cast<int>(v.size()) != ncols) throw std::invalid_argument("EchelonForm::reduce: size mismatch");
    for (size_t i = 0; i < rows.size(); ++i) {
        Rat f = v[pivot_cols[i]];
        if (f.is_zero()) continue;
        for (const auto& [c, coef] : rows[i].terms) v[c] -= f * coef;
    }
    return v;
}

bool EchelonForm::in_rowspace(const std::vector<Rat>& v) const {
    for (const Rat& x : reduce(v))
        if (!x.is_zero()) return false;
    return true;
}

namespace {

EchelonForm echelonize_zrows(int ncols, const std::vector<ZRow>& input) {
    std::vector<ZRow> red;              // echelon rows, one pivot each
    std::map<int, size_t> pivot_of;     // leading column -> index into red

    for (const ZRow& r0 : input) {
        ZRow r = r0;
        while (!r.empty()) {
            int lead = r.front().first;
            auto it = pivot_of.find(lead);
            if (it == pivot_of.end()) {
                if (sgn(r.front().second) < 0)
                    for (auto& [c, v] : r) v = -v;
                pivot_of[lead] = red.size();
                red.push_back(std::move(r));
                break;
            }
            const ZRow& p = red[it->second];
            r = combine(r, p.front().second, p, r.front().second);
        }
    }

    // Full reduction: clear pivot columns from every other row, working from
    // the largest pivot down so each tail is reduced against finished rows.
    std::vector<std::pair<int, size_t>> order(pivot_of.begin(), pivot_of.end());
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const auto& [pc, pi] = *it;
        for (auto& [qc, qi] : order) {
            if (qi == pi || qc >= pc) continue;
            ZRow& row = red[qi];
            auto t = std::lower_bound(row.begin(), row.end(), pc,
                                      [](const auto& term, int col) { return term.first < col; });
            if (t == row.end() || t->first != pc) continue;
            row = combine(row, red[pi].front().second, red[pi], t->second);
        }
    }

    EchelonForm ef;
    ef.ncols = ncols;
    for (const auto& [pc, pi] : order) {
        const ZRow& row = red[pi];
        Rat lead_inv = Rat(mpz_class(1)) / Rat(row.front().second);
        SparseRowQ q;
        q.terms.reserve(row.size());
        for (const auto& [c, v] : row) q.terms.emplace_back(c, Rat(v) * lead_inv);
        ef.pivot_cols.push_back(pc);
        ef.rows.push_back(std::move(q));
    }
    return ef;
}

}  // namespace

EchelonForm echelonize(const SparseSystem& sys) {
    return echelonize_zrows(sys.ncols(), sys.rows());
}

EchelonForm echelonize_vectors(int ncols, const std::vector<std::vector<Rat>>& vecs) {
    SparseSystem sys(ncols);
    for (const auto& v : vecs) {
        if (static_cast<int>(v.size()) != ncols)
            throw std::invalid_argument("echelonize_vectors: size mismatch");
        std::vector<std::pair<int, Rat>> terms;
        for (int c = 0; c < ncols; ++c)
            if (!v[c].is_zero()) terms.emplace_back(c, v[c]);
        sys.add_row(terms);
    }
    return echelonize(sys);
}

std::pair<int, std::vector<Rat>> sparse_solve_unique(
    int ncols,
    const std::vector<std::vector<std::pair<int, Rat>>>& rows,
    const std::vector<Rat>& rhs) {
    if (rows.size() != rhs.size()) throw std::invalid_argument("sparse_solve_unique: shape mismatch");
    SparseSystem sys(ncols + 1);
    for (size_t i = 0; i < rows.size(); ++i) {
        auto terms = rows[i];
        if (!rhs[i].is_zero()) terms.emplace_back(ncols, -rhs[i]);
        sys.add_row(terms);
    }
    EchelonForm ef = echelonize(sys);
    bool aug_pivot = !ef.pivot_cols.empty() && ef.pivot_cols.back() == ncols;
    if (aug_pivot) return {1, {}};
    if (static_cast<int>(ef.rank()) < ncols) return {2, {}};
    // each row reads x_p + c*(aug) = 0 with aug = 1, so x_p = -c
    std::vector<Rat> x(ncols);
    for (size_t i = 0; i < ef.rows.size(); ++i) {
        Rat val;
        for (const auto& [c, coef] : ef.rows[i].terms)
            if (c == ncols) val = -coef;
        x[ef.pivot_cols[i]] = val;
    }
    return {0, std::move(x)};
}

bool spans_equal(int ncols, const std::vector<std::vector<Rat>>& a,
                 const std::vector<std::vector<Rat>>& b) {
    EchelonForm ea = echelonize_vectors(ncols, a);
    EchelonForm eb = echelonize_vectors(ncols, b);
    if (ea.rank() != eb.rank() || ea.pivot_cols != eb.pivot_cols) return false;
    for (const auto& v : a)
        if (!eb.in_rowspace(v)) return false;
    for (const auto& v : b)
        if (!ea.in_rowspace(v)) return false;
    return true;
}

}  // namespace omr
