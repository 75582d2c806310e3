#include "omr/determinant.hpp"

#include "omr/transforms.hpp"

namespace omr {

void DetData::check_pair(const AlgebraSpec& a, const AlgebraSpec& b) const {
    if (a.name() != src_name || b.name() != dst_name)
        throw std::invalid_argument("determinant data was built for a different pair of bases");
    if (a.dim() != m || b.dim() != m) throw std::invalid_argument("dimension mismatch");
}

DetData build_det_data(const AlgebraSpec& a, const AlgebraSpec& b) {
    if (a.dim() != b.dim())
        throw std::invalid_argument("determinant data needs equal dimensions");
    int m = a.dim();
    tensor_space_dim(m, m);
    DetData dd;
    dd.m = m;
    dd.src_name = a.name();
    dd.dst_name = b.name();

    MultiIndex ladder(static_cast<size_t>(m));
    for (int t = 1; t <= m; ++t) ladder[static_cast<size_t>(t) - 1] = t;
    dd.domain_alt = antisymmetrize(m, TensorVector::basis(m, ladder));
    dd.codomain_alt = dd.domain_alt;  // same coordinates on the codomain basis

    dd.det_tensor = TensorVector::zero(m * m, m);
    dd.det_poly = Polynomial(m * m);
    for (const auto& g : enumerate_permutations(m)) {
        Permutation gi = g.inverse();
        Rat sign(g.sign());
        // factor t is the coordinate row picking l_{g^{-1}(t)}^t
        MultiIndex idx(static_cast<size_t>(m));
        Monomial mon(m * m);
        for (int t = 1; t <= m; ++t) {
            int v = hom_index(gi(t), t, m);
            idx[static_cast<size_t>(t) - 1] = v;
            ++mon.exps[static_cast<size_t>(v) - 1];
        }
        dd.det_tensor.add(idx, sign);
        dd.det_poly.add_term(mon, sign);
    }
    return dd;
}

PairingCheck check_asym_pairing(const DetData& dd, const TensorVector& w, int r) {
    if (r < 0) throw std::invalid_argument("negative power");
    if (w.dim != dd.m * dd.m || w.deg != dd.m * r)
        throw std::invalid_argument("tensor shape mismatch");
    PairingCheck out;
    TensorVector lifted = kronecker_map(w, dd.m, dd.m).apply(tensor_power(dd.domain_alt, r));
    // the covector (top basis row)^{(x)r} just extracts one coordinate
    MultiIndex top;
    top.reserve(static_cast<size_t>(dd.m * r));
    for (int k = 0; k < r; ++k)
        for (int t = 1; t <= dd.m; ++t) top.push_back(t);
    out.left = lifted.coord(top);
    out.right = dual_pairing(tensor_power(dd.det_tensor, r), w);
    out.pass = out.left == out.right;
    return out;
}

SymCheck check_sym_pairing(const DetData& dd, const SymTensor& w, int r) {
    if (r < 0) throw std::invalid_argument("negative power");
    if (w.dim != dd.m * dd.m || w.deg != dd.m * r)
        throw std::invalid_argument("tensor shape mismatch");
    SymCheck out;
    out.left = kronecker_map(expand(w), dd.m, dd.m).apply(tensor_power(dd.domain_alt, r));
    out.scalar = sym_pairing(dd.det_poly.pow(r), w);
    out.right = out.scalar * tensor_power(dd.codomain_alt, r);
    out.pass = out.left == out.right;
    return out;
}

MorphismCheck check_morphism_identity(const DetData& dd, const TruncatedMorphism& s, int r) {
    if (r < 0) throw std::invalid_argument("negative power");
    if (s.src_dim != dd.m || s.dst_dim != dd.m)
        throw std::invalid_argument("morphism shape mismatch");
    int level = dd.m * r;
    if (level > s.level_bound) throw std::out_of_range("morphism level missing");
    MorphismCheck out;
    out.left = s.level(level).apply(tensor_power(dd.domain_alt, r));
    PolyFunctional xi = morphism_functional(s, level);
    out.scalar = xi.apply(dd.det_poly.pow(r));
    out.right = out.scalar * tensor_power(dd.codomain_alt, r);
    out.pass = out.left == out.right;
    return out;
}

}  // namespace omr
