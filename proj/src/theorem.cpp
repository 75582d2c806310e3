#include "omr/theorem.hpp"

#include <sstream>

#include "json.hpp"
#include "omr/transforms.hpp"

namespace omr {

namespace {

constexpr size_t listed_points_cap = 1000;

const char* scope_note =
    "verdict statements refer to the algebraic closure; Groebner bases and radical "
    "membership are stable under extension of the coefficient field";

bool level1_zero_everywhere(const HomSpaceBasis& hom) {
    if (hom.layout.N < 1) return true;
    size_t begin = hom.layout.offsets[1], end = hom.layout.offsets[2];
    for (const auto& v : hom.vectors)
        for (size_t t = begin; t < end; ++t)
            if (!v[t].is_zero()) return false;
    return true;
}

}  // namespace

std::string TheoremReport::verdict() const {
    return radical ? "no invertible homomorphism over ℚ̄"
                   : "invertible homomorphism may exist over ℚ̄";
}

TheoremReport theorem_report(const AlgebraSpec& a, const AlgebraSpec& b, int N, int r_max,
                             const std::vector<uint32_t>& primes,
                             const std::optional<TruncatedMorphism>& morphism) {
    if (a.dim() != b.dim()) throw std::invalid_argument("the pair must have equal dimensions");
    if (N < 0 || r_max < 1) throw std::invalid_argument("bad truncation or power bound");
    if (!a.validate().pass()) throw std::invalid_argument("source algebra failed validation");
    if (!b.validate().pass()) throw std::invalid_argument("target algebra failed validation");

    TheoremReport rep;
    rep.src_name = a.name();
    rep.dst_name = b.name();
    rep.dim = a.dim();
    rep.N = N;
    rep.r_max = r_max;

    IdealGens ideal = multiplicativity_ideal(a, b);
    rep.gb = buchberger(ideal.nvars(), ideal.gens);
    DetData dd = build_det_data(a, b);
    rep.det_poly = dd.det_poly;
    rep.radical = radical_member(rep.det_poly, ideal.gens);
    if (rep.radical) rep.power = min_power(rep.det_poly, rep.gb, r_max);

    HomSpaceBasis hom = solve_hom_space(a, b, N);
    rep.hom_space_dim = hom.dimension();
    rep.level1_forced_zero = level1_zero_everywhere(hom);

    for (uint32_t p : primes) {
        PrimeEvidence ev;
        ev.p = p;
        ev.points = variety_points(a, b, p);
        ev.determinants.reserve(ev.points.size());
        for (const FpMat& u : ev.points) {
            uint32_t d = det_mod(u).value();
            ev.determinants.push_back(d);
            if (d != 0) ev.some_invertible = true;
        }
        rep.primes.push_back(std::move(ev));
    }

    rep.identity_is_homomorphism = true;
    for (int i = 1; i <= a.dim() && rep.identity_is_homomorphism; ++i)
        for (int j = 1; j <= a.dim() && rep.identity_is_homomorphism; ++j)
            for (int k = 1; k <= a.dim(); ++k)
                if (a.c(i, j, k) != b.c(i, j, k)) {
                    rep.identity_is_homomorphism = false;
                    break;
                }

    if (morphism && rep.radical && rep.power) {
        const TruncatedMorphism& s = *morphism;
        if (s.src_dim != a.dim() || s.dst_dim != b.dim())
            throw std::invalid_argument("supplied morphism does not match the pair");
        ObstructionDemo demo;
        demo.r = *rep.power;
        demo.level = rep.dim * demo.r;
        if (s.level_bound < demo.level)
            throw std::invalid_argument("supplied morphism is truncated below level " +
                                        std::to_string(demo.level));
        demo.morphism_natural = is_natural(a, b, s).pass();
        for (int n = 0; n <= s.level_bound; ++n)
            if (!is_invertible(s.level(n))) demo.non_invertible_levels.push_back(n);
        bool equivariant_below = true;
        for (int n = 0; n <= demo.level && equivariant_below; ++n)
            equivariant_below = is_equivariant(s.level(n));
        if (equivariant_below)
            demo.functional_value =
                morphism_functional(s, demo.level).apply(rep.det_poly.pow(demo.r));
        TensorVector alt_power = tensor_power(dd.domain_alt, demo.r);
        demo.alt_power_nonzero = !alt_power.is_zero();
        demo.top_level_kills_alt = s.level(demo.level).apply(alt_power).is_zero();
        rep.obstruction = std::move(demo);
    }

    return rep;
}

namespace {

using nlohmann::json;

json points_json(const PrimeEvidence& ev, int dim) {
    json pts = json::array();
    size_t count = std::min(ev.points.size(), listed_points_cap);
    for (size_t k = 0; k < count; ++k) {
        const FpMat& u = ev.points[k];
        json rows = json::array();
        for (int r = 0; r < u.rows; ++r) {
            json row = json::array();
            for (int c = 0; c < u.cols; ++c) row.push_back(u.at(r, c));
            rows.push_back(std::move(row));
        }
        pts.push_back(json{{"matrix", std::move(rows)},
                           {"det", std::to_string(ev.determinants[k])}});
    }
    json out{{"p", ev.p},
             {"point_count", ev.points.size()},
             {"points", std::move(pts)},
             {"some_invertible", ev.some_invertible}};
    if (ev.points.size() > listed_points_cap) out["points_truncated"] = true;
    (void)dim;
    return out;
}

}  // namespace

std::string report_json(const TheoremReport& r) {
    int dA = r.dim, dB = r.dim;
    json gb = json::array();
    for (const auto& p : r.gb.polys) gb.push_back(poly_to_string(p, dA, dB));
    json primes = json::array();
    for (const auto& ev : r.primes) primes.push_back(points_json(ev, r.dim));
    json j{{"pair", json{{"src", r.src_name}, {"dst", r.dst_name}, {"dim", r.dim}}},
           {"truncation", r.N},
           {"r_max", r.r_max},
           {"groebner_basis", std::move(gb)},
           {"monomial_order", r.gb.order ? r.gb.order->name() : "grevlex"},
           {"det_poly", poly_to_string(r.det_poly, dA, dB)},
           {"radical_member", r.radical},
           {"hom_space_dim", r.hom_space_dim},
           {"level1_forced_zero", r.level1_forced_zero},
           {"primes", std::move(primes)},
           {"identity_is_homomorphism", r.identity_is_homomorphism},
           {"verdict", r.verdict()},
           {"scope", scope_note}};
    j["min_power"] = r.power ? json(*r.power) : json(nullptr);
    if (r.obstruction) {
        const ObstructionDemo& d = *r.obstruction;
        j["obstruction"] = json{{"r", d.r},
                                {"level", d.level},
                                {"morphism_natural", d.morphism_natural},
                                {"non_invertible_levels", d.non_invertible_levels},
                                {"functional_value", d.functional_value.str()},
                                {"top_level_kills_alt", d.top_level_kills_alt},
                                {"alt_power_nonzero", d.alt_power_nonzero}};
    } else {
        j["obstruction"] = nullptr;
    }
    return j.dump(2) + "\n";
}

std::string report_summary(const TheoremReport& r) {
    std::ostringstream out;
    out << "pair: " << r.src_name << " -> " << r.dst_name << " (dim " << r.dim << ")\n";
    out << "multiplicativity ideal Groebner basis (grevlex):\n";
    if (r.gb.polys.empty())
        out << "  (zero ideal)\n";
    else
        for (const auto& p : r.gb.polys) out << "  " << poly_to_string(p, r.dim, r.dim) << "\n";
    out << "det polynomial: " << poly_to_string(r.det_poly, r.dim, r.dim) << "\n";
    out << "radical membership of det: " << (r.radical ? "yes" : "no") << "\n";
    if (r.power) out << "smallest power of det in the ideal: " << *r.power << "\n";
    out << "natural-morphism space at N=" << r.N << ": dim " << r.hom_space_dim
        << (r.level1_forced_zero ? " (level-1 component forced to zero)" : "") << "\n";
    for (const auto& ev : r.primes)
        out << "F_" << ev.p << ": " << ev.points.size() << " homomorphism point(s), "
            << (ev.some_invertible ? "some invertible" : "none invertible") << "\n";
    out << "identity map is a homomorphism: " << (r.identity_is_homomorphism ? "yes" : "no")
        << "\n";
    if (r.obstruction) {
        const ObstructionDemo& d = *r.obstruction;
        out << "obstruction walk (r = " << d.r << ", level = " << d.level << "): "
            << "natural: " << (d.morphism_natural ? "yes" : "no") << "; "
            << "all levels invertible: " << (d.non_invertible_levels.empty() ? "yes" : "no")
            << "; functional value on det^r: " << d.functional_value.str() << "; "
            << "top level kills the alternating tensor: " << (d.top_level_kills_alt ? "yes" : "no")
            << "; alternating tensor power nonzero: " << (d.alt_power_nonzero ? "yes" : "no")
            << "\n";
        if (d.morphism_natural && d.top_level_kills_alt && d.alt_power_nonzero)
            out << "  => a natural morphism cannot be invertible at level " << d.level << "\n";
    }
    out << "verdict: " << r.verdict() << "\n";
    return out.str();
}

}  // namespace omr
