#include "omr/surjection.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace omr {

Surjection::Surjection(int codomain_size, std::vector<int> images)
    : codomain_(codomain_size), images_(std::move(images)) {
    if (codomain_ < 0) throw std::invalid_argument("Surjection: negative codomain");
    if (images_.empty() && codomain_ != 0)
        throw std::invalid_argument("Surjection: empty map must have codomain 0");
    std::vector<bool> hit(codomain_, false);
    for (int v : images_) {
        if (v < 1 || v > codomain_) throw std::invalid_argument("Surjection: image out of range");
        hit[v - 1] = true;
    }
    for (bool h : hit)
        if (!h) throw std::invalid_argument("Surjection: not surjective");
}

Surjection Surjection::identity(int n) {
    std::vector<int> im(n);
    std::iota(im.begin(), im.end(), 1);
    return Surjection(n, std::move(im));
}

std::vector<int> Surjection::fiber(int j) const {
    std::vector<int> f;
    for (int i = 1; i <= domain_size(); ++i)
        if (images_[i - 1] == j) f.push_back(i);
    return f;
}

std::string Surjection::str() const {
    std::ostringstream os;
    for (size_t i = 0; i < images_.size(); ++i) {
        if (i) os << ',';
        os << images_[i];
    }
    return os.str();
}

Surjection Surjection::parse(const std::string& s, int codomain_size) {
    std::vector<int> im;
    if (!s.empty()) {
        std::istringstream is(s);
        std::string tok;
        while (std::getline(is, tok, ',')) {
            size_t pos = 0;
            int v = std::stoi(tok, &pos);
            if (pos != tok.size()) throw std::invalid_argument("Surjection::parse: bad token '" + tok + "'");
            im.push_back(v);
        }
    }
    return Surjection(codomain_size, std::move(im));
}

Surjection Surjection::parse(const std::string& s) {
    int mx = 0;
    std::vector<int> im;
    if (!s.empty()) {
        std::istringstream is(s);
        std::string tok;
        while (std::getline(is, tok, ',')) {
            size_t pos = 0;
            int v = std::stoi(tok, &pos);
            if (pos != tok.size()) throw std::invalid_argument("Surjection::parse: bad token '" + tok + "'");
            im.push_back(v);
            mx = std::max(mx, v);
        }
    }
    return Surjection(mx, std::move(im));
}

Permutation::Permutation(const Surjection& s) : images_(s.images()) {
    if (!s.is_bijective()) throw std::invalid_argument("Permutation: not bijective");
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    Surjection check(static_cast<int>(images_.size()), images_);
    (void)check;
}

Permutation Permutation::identity(int n) {
    std::vector<int> im(n);
    std::iota(im.begin(), im.end(), 1);
    return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(images_.size());
    for (int i = 1; i <= size(); ++i) inv[images_[i - 1] - 1] = i;
    return Permutation(std::move(inv));
}

int Permutation::sign() const {
    int inversions = 0;
    for (size_t i = 0; i < images_.size(); ++i)
        for (size_t j = i + 1; j < images_.size(); ++j)
            if (images_[i] > images_[j]) ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}

bool Permutation::is_identity() const {
    for (int i = 1; i <= size(); ++i)
        if (images_[i - 1] != i) return false;
    return true;
}

Surjection compose(const Surjection& h, const Surjection& g) {
    if (h.domain_size() != g.codomain_size())
        throw std::invalid_argument("compose: size mismatch");
    std::vector<int> im(g.domain_size());
    for (int i = 1; i <= g.domain_size(); ++i) im[i - 1] = h(g(i));
    return Surjection(h.codomain_size(), std::move(im));
}

Permutation compose(const Permutation& h, const Permutation& g) {
    return Permutation(compose(h.as_surjection(), g.as_surjection()));
}

std::vector<Surjection> enumerate_surjections(int m, int n) {
    if (m < 0 || n < 0) throw std::invalid_argument("enumerate_surjections: negative size");
    std::vector<Surjection> out;
    if (m < n) return out;
    if (m == 0) {
        out.push_back(Surjection(0, {}));
        return out;
    }
    if (n == 0) return out;
    std::vector<int> im(m, 1);
    while (true) {
        std::vector<bool> hit(n, false);
        for (int v : im) hit[v - 1] = true;
        if (std::all_of(hit.begin(), hit.end(), [](bool b) { return b; }))
            out.push_back(Surjection(n, im));
        int k = m - 1;
        while (k >= 0 && im[k] == n) im[k--] = 1;
        if (k < 0) break;
        ++im[k];
    }
    return out;
}

std::vector<Permutation> enumerate_permutations(int n) {
    std::vector<int> im(n);
    std::iota(im.begin(), im.end(), 1);
    std::vector<Permutation> out;
    do
        out.push_back(Permutation(im));
    while (std::next_permutation(im.begin(), im.end()));
    return out;
}

Surjection merge_map(int n) {
    if (n < 0) throw std::invalid_argument("merge_map: negative index");
    std::vector<int> im(n + 2);
    im[0] = 1;
    for (int i = 2; i <= n + 2; ++i) im[i - 1] = i - 1;
    return Surjection(n + 1, std::move(im));
}

namespace {

// Merge of positions a < b (the two smallest elements of the chosen fiber),
// order-preserving on the rest, expressed through merge_map by conjugation.
GeneratorFactor make_merge_factor(int m, int a, int b) {
    // inner: a -> 1, b -> 2, others order-preserving onto 3..m
    std::vector<int> inner(m);
    inner[a - 1] = 1;
    inner[b - 1] = 2;
    int next = 3;
    for (int i = 1; i <= m; ++i)
        if (i != a && i != b) inner[i - 1] = next++;
    // outer: 1 -> a, 2..m-1 order-preserving onto {1..m-1} \ {a}
    std::vector<int> outer(m - 1);
    outer[0] = a;
    next = 1;
    for (int k = 2; k <= m - 1; ++k) {
        if (next == a) ++next;
        outer[k - 1] = next++;
    }
    GeneratorFactor f{Surjection(0, {}), true, Permutation(inner), Permutation(outer), m - 2};
    f.factor = compose(f.outer->as_surjection(),
                       compose(merge_map(f.tau_index), f.inner->as_surjection()));
    return f;
}

}  // namespace

std::vector<GeneratorFactor> decompose(const Surjection& h) {
    if (h.is_bijective())
        return {GeneratorFactor{h, false, std::nullopt, std::nullopt, -1}};

    std::vector<GeneratorFactor> merges;
    Surjection cur = h;
    while (!cur.is_bijective()) {
        int m = cur.domain_size();
        // fibers ordered by minimal element = ascending h-image of sorted mins;
        // scan domain order for the first duplicated value's two least preimages
        int a = -1, b = -1;
        std::vector<int> mins;  // fiber minima in ascending order
        {
            std::vector<int> seen_min(cur.codomain_size() + 1, 0);
            for (int i = 1; i <= m; ++i) {
                int j = cur(i);
                if (seen_min[j] == 0) seen_min[j] = i;
            }
            std::vector<std::pair<int, int>> by_min;  // (min, j)
            for (int j = 1; j <= cur.codomain_size(); ++j) by_min.emplace_back(seen_min[j], j);
            std::sort(by_min.begin(), by_min.end());
            for (const auto& [mn, j] : by_min) {
                std::vector<int> f = cur.fiber(j);
                if (f.size() >= 2) {
                    a = f[0];
                    b = f[1];
                    break;
                }
            }
        }
        GeneratorFactor mf = make_merge_factor(m, a, b);
        merges.push_back(mf);
        // peel: cur = next o mf.factor with next well-defined on merged classes
        std::vector<int> im(m - 1, 0);
        for (int i = 1; i <= m; ++i) im[mf.factor(i) - 1] = cur(i);
        cur = Surjection(cur.codomain_size(), std::move(im));
    }

    std::vector<GeneratorFactor> out;
    Permutation last(cur);
    if (!last.is_identity())
        out.push_back(GeneratorFactor{cur, false, std::nullopt, std::nullopt, -1});
    for (auto it = merges.rbegin(); it != merges.rend(); ++it) out.push_back(*it);
    return out;
}

Surjection recompose(const std::vector<GeneratorFactor>& factors) {
    if (factors.empty()) throw std::invalid_argument("recompose: empty factor list");
    Surjection acc = factors.back().factor;
    for (auto it = std::next(factors.rbegin()); it != factors.rend(); ++it)
        acc = compose(it->factor, acc);
    return acc;
}

}  // namespace omr
