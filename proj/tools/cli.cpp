// omegarep — exact workbench for tensor-power functors of pairs of
// finite-dimensional commutative algebras: functor maps on surjections,
// truncated natural-morphism spaces, the multiplicativity ideal with
// Groebner/radical certificates, determinant identities, and the combined
// invertibility report.
//
// Exit codes: 0 success / property holds, 1 mathematical failure (with a
// witness on stdout), 2 usage error, malformed input, or budget guard.

#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "omr/determinant.hpp"
#include "omr/fixtures.hpp"
#include "omr/groebner.hpp"
#include "omr/ideal.hpp"
#include "omr/json_io.hpp"
#include "omr/loday.hpp"
#include "omr/naturality.hpp"
#include "omr/theorem.hpp"
#include "omr/transforms.hpp"

namespace {

using namespace omr;

std::string index_str(const MultiIndex& idx) {
    std::string out = "(";
    for (size_t t = 0; t < idx.size(); ++t) {
        if (t) out += ",";
        out += std::to_string(idx[t]);
    }
    return out + ")";
}

Surjection parse_images(const std::string& text) {
    std::vector<int> images;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        size_t pos = 0;
        int v = std::stoi(tok, &pos);
        while (pos < tok.size() && std::isspace(static_cast<unsigned char>(tok[pos]))) ++pos;
        if (pos != tok.size() || v < 1) throw std::invalid_argument("bad image list: " + text);
        images.push_back(v);
    }
    if (images.empty()) throw std::invalid_argument("empty image list");
    int codomain = *std::max_element(images.begin(), images.end());
    return Surjection(codomain, images);
}

int cmd_algebra_validate(const std::string& file) {
    AlgebraSpec a = read_algebra_file(file);
    ValidationReport rep = a.validate();
    std::cout << "algebra " << a.name() << " (dim " << a.dim() << ")\n";
    if (rep.pass()) {
        std::cout << "PASS: commutative and associative\n";
        return 0;
    }
    if (!rep.commutative) {
        auto [i, j] = *rep.commutativity_witness;
        std::cout << "FAIL: not commutative, witness e_" << i << " e_" << j << " != e_" << j
                  << " e_" << i << "\n";
    }
    if (!rep.associative) {
        auto [i, j, l] = *rep.associativity_witness;
        std::cout << "FAIL: not associative, witness (e_" << i << " e_" << j << ") e_" << l
                  << " != e_" << i << " (e_" << j << " e_" << l << ")\n";
    }
    return 1;
}

int cmd_loday_map(const std::string& algebra_file, const std::string& images) {
    AlgebraSpec a = read_algebra_file(algebra_file);
    Surjection h = parse_images(images);
    TensorMap lm = loday_map(a, h);
    RatMat dense = to_dense(lm);
    std::cout << "surjection: " << h.str() << " (" << h.domain_size() << " -> "
              << h.codomain_size() << ")\n";
    std::cout << "matrix (" << dense.rows() << " x " << dense.cols()
              << "), rows = target basis, cols = source basis, both in odometer order:\n";
    for (size_t r = 0; r < dense.rows(); ++r) {
        for (size_t c = 0; c < dense.cols(); ++c) {
            if (c) std::cout << ' ';
            std::cout << dense(r, c).str();
        }
        std::cout << '\n';
    }
    return 0;
}

int cmd_loday_check(const std::string& algebra_file, int max_domain) {
    if (max_domain < 1) throw std::invalid_argument("--max-domain must be >= 1");
    AlgebraSpec a = read_algebra_file(algebra_file);
    long pairs = 0;
    for (int m = 1; m <= max_domain; ++m) {
        TensorMap id_direct = loday_map(a, Surjection::identity(m));
        if (!(id_direct == TensorMap::identity(a.dim(), m))) {
            std::cout << "FAIL: L(id_" << m << ") is not the identity\n";
            return 1;
        }
        for (int k = 1; k <= m; ++k)
            for (const Surjection& g : enumerate_surjections(m, k))
                for (int j = 1; j <= k; ++j)
                    for (const Surjection& h : enumerate_surjections(k, j)) {
                        FunctorCheck chk = functor_composition_check(a, h, g);
                        ++pairs;
                        if (chk.pass) continue;
                        auto [dst, src] = *chk.where;
                        std::cout << "FAIL: L(h o g) != L(h) o L(g) for h = " << h.str()
                                  << ", g = " << g.str() << " at entry [" << index_str(dst)
                                  << ", " << index_str(src)
                                  << "]: composite " << chk.composite_value.str() << ", direct "
                                  << chk.direct_value.str() << "\n";
                        return 1;
                    }
    }
    std::cout << "PASS: functor laws hold on " << pairs
              << " composable pairs with domain size <= " << max_domain << " (algebra "
              << a.name() << ")\n";
    return 0;
}

int cmd_nat_solve(const std::string& file_a, const std::string& file_b, int N) {
    AlgebraSpec a = read_algebra_file(file_a);
    AlgebraSpec b = read_algebra_file(file_b);
    HomSpaceBasis basis = solve_hom_space(a, b, N);
    std::cout << "pair: " << a.name() << " -> " << b.name() << ", truncation N = " << N << "\n";
    std::cout << "dimension: " << basis.dimension() << "\n";
    for (size_t k = 0; k < basis.dimension(); ++k) {
        std::cout << "-- basis vector " << (k + 1) << " --\n";
        std::cout << morphism_to_json_text(basis.morphism(k));
    }
    return 0;
}

int cmd_nat_verify(const std::string& file_a, const std::string& file_b,
                   const std::string& morphism_file) {
    AlgebraSpec a = read_algebra_file(file_a);
    AlgebraSpec b = read_algebra_file(file_b);
    TruncatedMorphism s = read_morphism_file(morphism_file);
    if (s.src_dim != a.dim() || s.dst_dim != b.dim())
        throw std::invalid_argument("morphism dimensions do not match the pair");
    NaturalityReport rep = is_natural(a, b, s);
    if (rep.pass()) {
        std::cout << "PASS: natural up to level " << s.level_bound << " (all levels "
                  << "equivariant, merge discrepancies vanish)\n";
        return 0;
    }
    for (int n : rep.non_equivariant_levels)
        std::cout << "FAIL: level " << n << " is not equivariant\n";
    for (int n : rep.nonzero_discrepancies)
        std::cout << "FAIL: merge discrepancy r_" << n << " is nonzero\n";
    return 1;
}

int cmd_nat_counterexample(int N, std::string out_file) {
    if (N < 1) throw std::invalid_argument("-N must be >= 1");
    AlgebraSpec a = fixture_ax();
    AlgebraSpec b = fixture_by();
    TruncatedMorphism s = counterexample_morphism(N);
    long squares = 0;
    for (int m = 1; m <= N; ++m)
        for (int n = 1; n <= m; ++n)
            for (const Surjection& h : enumerate_surjections(m, n)) {
                ++squares;
                if (naturality_square_holds(a, b, s, h)) continue;
                std::cout << "FAIL: naturality square broken at " << h.str() << "\n";
                return 1;
            }
    for (int n = 0; n <= N; ++n)
        if (!is_invertible(s.level(n))) {
            std::cout << "FAIL: level " << n << " is not invertible\n";
            return 1;
        }
    if (out_file.empty()) out_file = "counterexample_N" + std::to_string(N) + ".json";
    write_morphism_file(s, out_file);
    std::cout << "PASS: natural at all " << squares << " surjection squares (1 <= n <= m <= "
              << N << "), all levels invertible\n";
    std::cout << "wrote " << out_file << "\n";
    return 0;
}

int cmd_ideal_groebner(const std::string& file_a, const std::string& file_b) {
    AlgebraSpec a = read_algebra_file(file_a);
    AlgebraSpec b = read_algebra_file(file_b);
    IdealGens ideal = multiplicativity_ideal(a, b);
    std::cout << "pair: " << a.name() << " -> " << b.name() << ", " << ideal.gens.size()
              << " generator(s) in " << ideal.nvars() << " variable(s)\n";
    GroebnerBasis gb = buchberger(ideal.nvars(), ideal.gens);
    std::cout << "reduced Groebner basis (grevlex):\n";
    if (gb.polys.empty())
        std::cout << "  (zero ideal)\n";
    else
        for (const Polynomial& p : gb.polys)
            std::cout << "  " << poly_to_string(p, a.dim(), b.dim()) << "\n";
    return 0;
}

int cmd_ideal_points(const std::string& file_a, const std::string& file_b, uint32_t p) {
    AlgebraSpec a = read_algebra_file(file_a);
    AlgebraSpec b = read_algebra_file(file_b);
    std::vector<FpMat> pts = variety_points(a, b, p);
    std::cout << "F_" << p << " points of the homomorphism variety " << a.name() << " -> "
              << b.name() << ": " << pts.size() << "\n";
    for (const FpMat& u : pts) {
        std::cout << "[";
        for (int r = 0; r < u.rows; ++r) {
            if (r) std::cout << ",";
            std::cout << "[";
            for (int c = 0; c < u.cols; ++c) {
                if (c) std::cout << ",";
                std::cout << u.at(r, c);
            }
            std::cout << "]";
        }
        std::cout << "]";
        if (u.rows == u.cols) std::cout << " det=" << det_mod(u).value();
        std::cout << "\n";
    }
    return 0;
}

int cmd_det_identity(const std::string& file_a, const std::string& file_b,
                     const std::string& morphism_file, int r) {
    if (r < 1) throw std::invalid_argument("-r must be >= 1");
    AlgebraSpec a = read_algebra_file(file_a);
    AlgebraSpec b = read_algebra_file(file_b);
    DetData dd = build_det_data(a, b);
    TruncatedMorphism s = read_morphism_file(morphism_file);
    if (s.src_dim != a.dim() || s.dst_dim != b.dim())
        throw std::invalid_argument("morphism dimensions do not match the pair");
    int level = dd.m * r;
    if (s.level_bound < level)
        throw std::invalid_argument("morphism is truncated below level " +
                                    std::to_string(level));
    for (int n = 0; n <= level; ++n)
        if (!is_equivariant(s.level(n))) {
            std::cout << "FAIL: level " << n << " is not equivariant\n";
            return 1;
        }
    MorphismCheck mc = check_morphism_identity(dd, s, r);
    std::cout << "det polynomial: " << poly_to_string(dd.det_poly, dd.m, dd.m) << "\n";
    std::cout << "functional value on det^" << r << ": " << mc.scalar.str() << "\n";
    if (mc.pass) {
        std::cout << "PASS: s_" << level << "(E^(x)" << r << ") = value * F^(x)" << r << "\n";
        return 0;
    }
    TensorVector diff = mc.left - mc.right;
    const auto& [idx, val] = *diff.coords.begin();
    std::cout << "FAIL: sides differ at " << index_str(idx) << " by " << val.str() << "\n";
    return 1;
}

int cmd_theorem(const std::string& file_a, const std::string& file_b, int N, int r_max,
                std::vector<uint32_t> primes, const std::string& morphism_file) {
    AlgebraSpec a = read_algebra_file(file_a);
    AlgebraSpec b = read_algebra_file(file_b);
    std::optional<TruncatedMorphism> s;
    if (!morphism_file.empty()) s = read_morphism_file(morphism_file);
    TheoremReport rep = theorem_report(a, b, N, r_max, primes, s);
    std::cout << report_summary(rep);
    std::cout << report_json(rep);
    return 0;
}

CLI::App* subcommand(CLI::App* parent, const std::string& name, const std::string& desc) {
    CLI::App* sub = parent->add_subcommand(name, desc);
    sub->set_help_flag("--help", "print help and exit");
    return sub;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "exact workbench for tensor-power functors of finite-dimensional "
        "commutative algebras"};
    app.set_help_flag("--help", "print help and exit");
    app.require_subcommand(1);

    int rc = 0;

    // algebra validate <file>
    CLI::App* algebra = subcommand(&app, "algebra", "structure-constant table operations");
    algebra->require_subcommand(1);
    CLI::App* validate = subcommand(algebra, "validate", "check commutativity and associativity");
    static std::string validate_file;
    validate->add_option("file", validate_file, "algebra JSON file")->required();
    validate->callback([&] { rc = cmd_algebra_validate(validate_file); });

    // loday map | loday check
    CLI::App* loday = subcommand(&app, "loday", "tensor-power functor on surjections");
    loday->require_subcommand(1);
    CLI::App* lmap = subcommand(loday, "map", "print the matrix of the functor on a surjection");
    static std::string lmap_algebra, lmap_images;
    lmap->add_option("-A", lmap_algebra, "algebra JSON file")->required();
    lmap->add_option("-h", lmap_images, "surjection images, e.g. \"1,1,2\"")->required();
    lmap->callback([&] { rc = cmd_loday_map(lmap_algebra, lmap_images); });
    CLI::App* lcheck = subcommand(loday, "check", "verify functor laws on all composable pairs");
    static std::string lcheck_algebra;
    static int lcheck_max = 4;
    lcheck->add_option("-A", lcheck_algebra, "algebra JSON file")->required();
    lcheck->add_option("--max-domain", lcheck_max, "largest domain size (default 4)");
    lcheck->callback([&] { rc = cmd_loday_check(lcheck_algebra, lcheck_max); });

    // nat solve | nat verify | nat counterexample
    CLI::App* nat = subcommand(&app, "nat", "truncated natural morphisms between functors");
    nat->require_subcommand(1);
    CLI::App* nsolve = subcommand(nat, "solve", "basis of the natural-morphism space");
    static std::string nsolve_a, nsolve_b;
    static int nsolve_n = 3;
    nsolve->add_option("-A", nsolve_a, "source algebra JSON file")->required();
    nsolve->add_option("-B", nsolve_b, "target algebra JSON file")->required();
    nsolve->add_option("-N", nsolve_n, "truncation level")->required();
    nsolve->callback([&] { rc = cmd_nat_solve(nsolve_a, nsolve_b, nsolve_n); });
    CLI::App* nverify = subcommand(nat, "verify", "check naturality of a stored morphism");
    static std::string nverify_a, nverify_b, nverify_s;
    nverify->add_option("-A", nverify_a, "source algebra JSON file")->required();
    nverify->add_option("-B", nverify_b, "target algebra JSON file")->required();
    nverify->add_option("-s", nverify_s, "morphism JSON file")->required();
    nverify->callback([&] { rc = cmd_nat_verify(nverify_a, nverify_b, nverify_s); });
    CLI::App* ncounter =
        subcommand(nat, "counterexample", "build and verify the sign-split pair morphism");
    static int ncounter_n = 5;
    static std::string ncounter_out;
    ncounter->add_option("-N", ncounter_n, "truncation level")->required();
    ncounter->add_option("-o,--out", ncounter_out, "output morphism file");
    ncounter->callback([&] { rc = cmd_nat_counterexample(ncounter_n, ncounter_out); });

    // ideal groebner | ideal points
    CLI::App* ideal = subcommand(&app, "ideal", "multiplicativity ideal of a pair");
    ideal->require_subcommand(1);
    CLI::App* igro = subcommand(ideal, "groebner", "reduced grevlex Groebner basis");
    static std::string igro_a, igro_b;
    igro->add_option("-A", igro_a, "source algebra JSON file")->required();
    igro->add_option("-B", igro_b, "target algebra JSON file")->required();
    igro->callback([&] { rc = cmd_ideal_groebner(igro_a, igro_b); });
    CLI::App* ipts = subcommand(ideal, "points", "vanishing set over a small prime field");
    static std::string ipts_a, ipts_b;
    static uint32_t ipts_p = 3;
    ipts->add_option("-A", ipts_a, "source algebra JSON file")->required();
    ipts->add_option("-B", ipts_b, "target algebra JSON file")->required();
    ipts->add_option("-p", ipts_p, "prime modulus (<= 31)")->required();
    ipts->callback([&] { rc = cmd_ideal_points(ipts_a, ipts_b, ipts_p); });

    // det identity
    CLI::App* det = subcommand(&app, "det", "determinant-tensor identities");
    det->require_subcommand(1);
    CLI::App* dident = subcommand(det, "identity", "morphism identity on alternating powers");
    static std::string dident_a, dident_b, dident_s;
    static int dident_r = 1;
    dident->add_option("-A", dident_a, "source algebra JSON file")->required();
    dident->add_option("-B", dident_b, "target algebra JSON file")->required();
    dident->add_option("-s", dident_s, "morphism JSON file")->required();
    dident->add_option("-r", dident_r, "power of the determinant")->required();
    dident->callback([&] { rc = cmd_det_identity(dident_a, dident_b, dident_s, dident_r); });

    // theorem
    CLI::App* thm = subcommand(&app, "theorem", "combined invertibility report for a pair");
    static std::string thm_a, thm_b, thm_morphism;
    static int thm_n = 3, thm_rmax = 10;
    static std::vector<uint32_t> thm_primes = {3, 5, 7};
    thm->add_option("-A", thm_a, "source algebra JSON file")->required();
    thm->add_option("-B", thm_b, "target algebra JSON file")->required();
    thm->add_option("-N", thm_n, "truncation level (default 3)");
    thm->add_option("--rmax", thm_rmax, "largest determinant power tried (default 10)");
    thm->add_option("--primes", thm_primes, "prime moduli for point counts (default 3,5,7)")
        ->delimiter(',');
    thm->add_option("--morphism", thm_morphism, "optional morphism file for the obstruction walk");
    thm->callback([&] { rc = cmd_theorem(thm_a, thm_b, thm_n, thm_rmax, thm_primes, thm_morphism); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const omr::BudgetError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        std::cerr << "internal cross-check failed: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}
