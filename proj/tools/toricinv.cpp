// Command-line front end: exact F-signature, class group, Frobenius
// decomposition, Hilbert-Kunz estimators, bound tables, and the catalog
// verification entry point.
//
// Exit codes: 0 ok, 1 verdict violation, 2 input error, 3 budget exceeded.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "toricinv/classify.hpp"
#include "toricinv/json_io.hpp"
#include "toricinv/verify.hpp"

namespace ti = toricinv;
namespace fs = std::filesystem;

namespace {

struct GlobalOpts {
    unsigned threads = 1;
    int decimal = -1;
    bool json_out = false;
    unsigned characteristic = 0;  // metadata only; never affects values
};

std::string show(const ti::Rational& q, const GlobalOpts& g) {
    return g.decimal >= 0 ? ti::to_decimal(q, static_cast<unsigned>(g.decimal)) : ti::to_string(q);
}

ti::NamedCone resolve_ring(const std::string& ring, const std::string& file) {
    if (!file.empty()) return ti::load_cone_file(file);
    const ti::CatalogEntry& e = ti::catalog_entry(ring);
    return {e.name, e.generators};
}

std::vector<unsigned> parse_list(const std::string& s) {
    std::vector<unsigned> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (!tok.empty()) out.push_back(static_cast<unsigned>(std::stoul(tok)));
    }
    if (out.empty()) throw ti::Error("empty integer list: " + s);
    return out;
}

void write_golden(const fs::path& dir, const std::string& ring, const std::string& invariant,
                  const ti::json& value) {
    fs::create_directories(dir / ring);
    std::ofstream out(dir / ring / (invariant + ".json"));
    ti::json j;
    j["ring"] = ring;
    j["invariant"] = invariant;
    j["value"] = value;
    out << j.dump(2) << "\n";
}

int compare_golden(const fs::path& dir, const std::string& ring, const std::string& invariant,
                   const ti::json& value) {
    fs::path p = dir / ring / (invariant + ".json");
    std::ifstream in(p);
    if (!in) {
        std::cerr << "missing golden file: " << p << "\n";
        return 1;
    }
    ti::json j;
    in >> j;
    if (j.at("value") != value) {
        std::cerr << "golden mismatch for " << ring << "/" << invariant << ": got "
                  << value.dump() << " want " << j.at("value").dump() << "\n";
        return 1;
    }
    return 0;
}

// The per-ring golden snapshot: cheap exact invariants only.
ti::json golden_values(const ti::CatalogEntry& e, unsigned threads) {
    ti::ConeSpec cone = ti::validate_cone(e.generators);
    ti::ClassGroup cl(cone);
    ti::json vals;
    vals["fsig"] = ti::to_string(ti::fsignature(cone));
    vals["classgroup"] = cl.describe();
    auto g = ti::gorenstein_data(cone, cl);
    vals["gorenstein"] = g.is_gorenstein;
    vals["index"] = g.q_index ? ti::json(*g.q_index) : ti::json(nullptr);
    auto dec = ti::decompose(cone, 4, threads);
    vals["a_e_q4"] = dec.free_count;
    vals["b_e_q4"] = dec.canonical_count;
    vals["classes_q4"] = dec.class_counts.size();
    return vals;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact invariants of pointed normal affine toric rings"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand
    GlobalOpts g;
    app.add_option("--threads", g.threads, "worker threads (output is identical for any count)");
    app.add_option("--decimal", g.decimal, "print rationals as decimals with this many digits");
    app.add_flag("--json", g.json_out, "machine-readable JSON output");
    app.add_option("--p", g.characteristic,
                   "characteristic label for reports; values are characteristic-free");

    std::string ring, file;
    auto add_ring_opts = [&](CLI::App* cmd) {
        cmd->add_option("ring", ring, "catalog ring name");
        cmd->add_option("--file", file, "cone JSON file {\"name\",\"dim\",\"generators\"}");
    };

    auto* c_fsig = app.add_subcommand("fsig", "exact F-signature");
    add_ring_opts(c_fsig);

    auto* c_cg = app.add_subcommand("classgroup", "divisor class group");
    add_ring_opts(c_cg);

    auto* c_gor = app.add_subcommand("gorenstein", "Gorenstein property and index");
    add_ring_opts(c_gor);

    auto* c_type = app.add_subcommand("type", "Cohen-Macaulay type (mu of the canonical module)");
    add_ring_opts(c_type);

    auto* c_conic = app.add_subcommand("conic", "conic divisor class census");
    add_ring_opts(c_conic);
    std::string denoms = "16,27";
    c_conic->add_option("--denoms", denoms, "sampling denominators (comma separated)");

    auto* c_dec = app.add_subcommand("decompose", "Frobenius pushforward decomposition at level q");
    add_ring_opts(c_dec);
    unsigned q = 4;
    c_dec->add_option("--q", q, "Frobenius level (any integer >= 2)");

    auto* c_ehk = app.add_subcommand("ehk", "Hilbert-Kunz colength samples and extrapolation");
    add_ring_opts(c_ehk);
    std::string q_list = "8,16";
    c_ehk->add_option("--q-list", q_list, "ascending levels (comma separated)");

    auto* c_mult = app.add_subcommand("mult", "Hilbert-Samuel multiplicity samples");
    add_ring_opts(c_mult);
    std::string n_list = "16,32";
    c_mult->add_option("--n-list", n_list, "ascending powers (comma separated)");

    auto* c_check = app.add_subcommand("check", "full identity/inequality report for one ring");
    add_ring_opts(c_check);

    auto* c_bounds = app.add_subcommand("bounds", "bound calculus tables");
    c_bounds->require_subcommand(1);
    auto* b_v = c_bounds->add_subcommand("v", "cube corner volume v(s,d)");
    std::string s_str = "1";
    unsigned bd = 3, br = 0;
    std::string be_str = "2";
    b_v->add_option("--s", s_str, "cut parameter (rational like 3/2)");
    b_v->add_option("--d", bd, "dimension");
    auto* b_ae = c_bounds->add_subcommand("ae", "volume lower bound e(v_s - r v_{s-1})");
    b_ae->add_option("--e", be_str, "multiplicity");
    b_ae->add_option("--d", bd, "dimension");
    b_ae->add_option("--r", br, "generator count bound");
    b_ae->add_option("--s", s_str, "cut parameter");
    auto* b_t1 = c_bounds->add_subcommand("table1", "limit constants vs conjectured bounds");
    unsigned dmax = 6;
    b_t1->add_option("--dmax", dmax, "largest dimension");
    auto* b_eu = c_bounds->add_subcommand("euler", "Eulerian numbers and cube slices");
    b_eu->add_option("--dmax", dmax, "largest dimension");

    auto* c_classify = app.add_subcommand("classify", "search [I_d | B] cones by F-signature");
    unsigned cd = 3, cn = 4, cbound = 1;
    std::string thr_str = "1/2";
    c_classify->add_option("--d", cd, "dimension");
    c_classify->add_option("--n", cn, "generator count");
    c_classify->add_option("--bound", cbound, "max |entry| of the extra generators");
    c_classify->add_option("--threshold", thr_str, "keep cones with F-signature above this");

    auto* c_cat = app.add_subcommand("catalog", "catalog operations");
    c_cat->require_subcommand(1);
    c_cat->add_subcommand("list", "list catalog rings");
    auto* cat_verify = c_cat->add_subcommand("verify", "run every check on every catalog ring");
    std::string golden_dir, write_golden_dir;
    cat_verify->add_option("--golden", golden_dir, "compare against a golden directory");
    cat_verify->add_option("--write-golden", write_golden_dir, "write golden files and exit");

    CLI11_PARSE(app, argc, argv);

    try {
        if (g.characteristic) std::cerr << "note: characteristic p=" << g.characteristic
                                        << " is metadata only; all values are characteristic-free\n";
        if (*c_fsig) {
            auto nc = resolve_ring(ring, file);
            ti::ConeSpec cone = ti::validate_cone(nc.generators);
            ti::Rational s = ti::fsignature(cone);
            if (g.json_out) {
                ti::json j{{"ring", nc.name}, {"fsig", ti::to_string(s)}};
                std::cout << j.dump() << "\n";
            } else {
                std::cout << show(s, g) << "\n";
            }
        } else if (*c_cg) {
            auto nc = resolve_ring(ring, file);
            ti::ConeSpec cone = ti::validate_cone(nc.generators);
            ti::ClassGroup cl(cone);
            if (g.json_out) {
                ti::json j{{"ring", nc.name},
                           {"free_rank", cl.free_rank()},
                           {"torsion", ti::json::array()}};
                for (const auto& t : cl.torsion()) j["torsion"].push_back(t.convert_to<long long>());
                std::cout << j.dump() << "\n";
            } else {
                std::cout << cl.describe() << "\n";
            }
        } else if (*c_gor) {
            auto nc = resolve_ring(ring, file);
            ti::ConeSpec cone = ti::validate_cone(nc.generators);
            auto gd = ti::gorenstein_data(cone);
            if (g.json_out) {
                ti::json j{{"ring", nc.name}, {"gorenstein", gd.is_gorenstein}};
                j["index"] = gd.q_index ? ti::json(*gd.q_index) : ti::json(nullptr);
                std::cout << j.dump() << "\n";
            } else {
                std::cout << (gd.is_gorenstein ? "Gorenstein" : "not Gorenstein");
                if (gd.q_index) std::cout << ", index " << *gd.q_index;
                std::cout << "\n";
            }
        } else if (*c_type) {
            auto nc = resolve_ring(ring, file);
            ti::ConeSpec cone = ti::validate_cone(nc.generators);
            std::cout << ti::cm_type(cone) << "\n";
        } else if (*c_conic) {
            auto nc = resolve_ring(ring, file);
            ti::ConeSpec cone = ti::validate_cone(nc.generators);
            auto census = ti::conic_census(cone, parse_list(denoms), g.threads);
            if (g.json_out) {
                ti::json j{{"ring", nc.name},
                           {"classes", census.classes.size()},
                           {"stable", census.stable}};
                std::cout << j.dump() << "\n";
            } else {
                std::cout << census.classes.size() << " conic classes, stable="
                          << (census.stable ? "yes" : "no") << "\n";
            }
        } else if (*c_dec) {
            auto nc = resolve_ring(ring, file);
            ti::ConeSpec cone = ti::validate_cone(nc.generators);
            auto dec = ti::decompose(cone, q, g.threads);
            if (g.json_out) {
                ti::json j{{"ring", nc.name},
                           {"q", dec.q},
                           {"total", dec.total},
                           {"a_e", dec.free_count},
                           {"b_e", dec.canonical_count},
                           {"classes", dec.class_counts.size()}};
                std::cout << j.dump() << "\n";
            } else {
                std::cout << "q=" << dec.q << " total=" << dec.total << " a_e=" << dec.free_count
                          << " b_e=" << dec.canonical_count << " distinct classes="
                          << dec.class_counts.size() << "\n";
                for (const auto& [cls, cnt] : dec.class_counts) {
                    std::cout << "  class x" << cnt << "  witness D(";
                    const ti::IVec& w = dec.witnesses.at(cls);
                    for (std::size_t i = 0; i < w.size(); ++i)
                        std::cout << (i ? "," : "") << w[i];
                    std::cout << ")\n";
                }
            }
        } else if (*c_ehk) {
            auto nc = resolve_ring(ring, file);
            ti::ConeSpec cone = ti::validate_cone(nc.generators);
            auto est = ti::ehk_estimate(cone, parse_list(q_list));
            for (const auto& s : est.samples)
                std::cout << "q=" << s.parameter << " colength=" << s.colength
                          << " normalized=" << show(s.normalized, g) << "\n";
            if (est.has_extrapolation)
                std::cout << "extrapolated " << show(est.extrapolated, g) << " (correction "
                          << show(est.claimed_tolerance, g) << ")\n";
        } else if (*c_mult) {
            auto nc = resolve_ring(ring, file);
            ti::ConeSpec cone = ti::validate_cone(nc.generators);
            auto est = ti::multiplicity_estimate(cone, parse_list(n_list));
            for (const auto& s : est.samples)
                std::cout << "n=" << s.parameter << " colength=" << s.colength
                          << " normalized=" << show(s.normalized, g) << "\n";
            if (est.has_extrapolation)
                std::cout << "extrapolated " << show(est.extrapolated, g) << " (correction "
                          << show(est.claimed_tolerance, g) << ")\n";
        } else if (*c_check) {
            const ti::CatalogEntry& e = ti::catalog_entry(ring);
            ti::VerifyOptions vo;
            vo.threads = g.threads;
            ti::RingReport rep = ti::verify_entry(e, vo);
            std::cout << rep.render();
            return rep.ok() ? 0 : 1;
        } else if (*b_v) {
            std::cout << ti::to_string(ti::cube_corner_volume(ti::parse_rational(s_str), bd)) << "\n";
        } else if (*b_ae) {
            ti::BoundContext ctx;
            ctx.e = ti::parse_rational(be_str);
            ctx.d = bd;
            ctx.r = br;
            ctx.s = ti::parse_rational(s_str);
            std::cout << ti::to_string(ti::ae_bound(ctx)) << "\n";
        } else if (*b_t1) {
            auto rows = ti::conjecture_table(dmax);
            if (g.json_out) {
                ti::json j = ti::json::array();
                for (const auto& r : rows)
                    j.push_back({{"d", r.d},
                                 {"limit", ti::to_string(r.gessel_monsky)},
                                 {"rhs", ti::to_string(r.rhs)}});
                std::cout << j.dump() << "\n";
            } else {
                std::ostringstream l1, l2, l3;
                l1 << "d      ";
                l2 << "1+c_d  ";
                l3 << "(RHS)  ";
                for (const auto& r : rows) {
                    std::string a = std::to_string(r.d);
                    std::string b = ti::to_string(r.gessel_monsky);
                    std::string c = ti::to_string(r.rhs);
                    std::size_t w = std::max({a.size(), b.size(), c.size()}) + 2;
                    l1 << a << std::string(w - a.size(), ' ');
                    l2 << b << std::string(w - b.size(), ' ');
                    l3 << c << std::string(w - c.size(), ' ');
                }
                std::cout << l1.str() << "\n" << l2.str() << "\n" << l3.str() << "\n";
                std::cout << "note: " << ti::conjecture_table_footnote() << "\n";
            }
        } else if (*b_eu) {
            for (unsigned dd = 1; dd <= dmax; ++dd) {
                std::cout << "d=" << dd << ":";
                for (unsigned k = 0; k < dd; ++k) std::cout << " " << ti::eulerian(dd, k);
                std::cout << "\n";
            }
            std::cout << "slices above 1/2:";
            for (auto [dd, kk] : ti::euler_lemma_scan(dmax))
                std::cout << " (" << dd << "," << kk << ")";
            std::cout << "\n";
        } else if (*c_classify) {
            ti::SearchSpace space{cd, cn, cbound};
            auto found = ti::enumerate_high_fsig(space, ti::parse_rational(thr_str));
            if (g.json_out) {
                ti::json j = ti::json::array();
                for (const auto& f : found) {
                    ti::json rec = ti::cone_to_json("class", f.generators);
                    rec["fsig"] = ti::to_string(f.fsig);
                    j.push_back(rec);
                }
                std::cout << j.dump() << "\n";
            } else {
                std::cout << found.size() << " classes with fsig > " << thr_str << "\n";
                for (const auto& f : found)
                    std::cout << "  fsig=" << ti::to_string(f.fsig) << "  " << f.generators.str()
                              << "\n";
            }
        } else if (*c_cat) {
            if (cat_verify->parsed()) {
                if (!write_golden_dir.empty()) {
                    for (const auto& e : ti::catalog()) {
                        ti::json vals = golden_values(e, g.threads);
                        for (auto& [inv, val] : vals.items())
                            write_golden(write_golden_dir, e.name, inv, val);
                    }
                    std::cout << "golden files written to " << write_golden_dir << "\n";
                    return 0;
                }
                if (!golden_dir.empty()) {
                    int bad = 0;
                    for (const auto& e : ti::catalog()) {
                        ti::json vals = golden_values(e, g.threads);
                        for (auto& [inv, val] : vals.items())
                            bad += compare_golden(golden_dir, e.name, inv, val);
                    }
                    std::cout << (bad == 0 ? "golden comparison: PASS" : "golden comparison: FAIL")
                              << "\n";
                    return bad == 0 ? 0 : 1;
                }
                ti::VerifyOptions vo;
                vo.threads = g.threads;
                ti::CatalogVerification v = ti::verify_catalog(vo);
                std::cout << v.render();
                double total = 0;
                for (const auto& r : v.reports) {
                    std::cerr << "timing " << r.ring << ": " << r.seconds << "s\n";
                    total += r.seconds;
                }
                std::cerr << "timing total: " << total << "s\n";
                return v.ok() ? 0 : 1;
            }
            for (const auto& e : ti::catalog()) {
                std::cout << e.name << "  (d=" << e.generators.cols()
                          << ", n=" << e.generators.rows() << ")  " << e.description << "\n";
            }
        }
    } catch (const ti::BudgetExceeded& ex) {
        std::cerr << "budget exceeded: " << ex.what() << "\n";
        return 3;
    } catch (const ti::Error& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }
    return 0;
}
