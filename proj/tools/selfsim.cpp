#include <CLI11.hpp>

#include <iostream>

#include "selfsim/catalog.hpp"
#include "selfsim/cyclic.hpp"
#include "selfsim/dot.hpp"
#include "selfsim/io.hpp"
#include "selfsim/verify.hpp"

using namespace selfsim;

namespace {

std::vector<Automorphism> resolve_all(const std::vector<std::string>& specs) {
    std::vector<Automorphism> out;
    for (const auto& s : specs) out.push_back(resolve_automorphism(s));
    if (out.empty()) throw InputError("at least one --aut is required");
    return out;
}

void print_report(const Report& rep) {
    for (const auto& line : rep.lines) std::cout << line << "\n";
}

std::vector<int> parse_type(const std::string& text) {
    std::vector<int> out;
    std::string s = text;
    std::replace(s.begin(), s.end(), ',', ' ');
    std::istringstream in(s);
    int v = 0;
    while (in >> v) out.push_back(v);
    return out;
}

std::vector<long long> parse_exps(const std::string& text) {
    std::vector<long long> out;
    std::string s = text;
    std::replace(s.begin(), s.end(), ',', ' ');
    std::istringstream in(s);
    long long v = 0;
    while (in >> v) out.push_back(v);
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computation with self-similar groups of rooted-tree automorphisms"};
    app.require_subcommand(1);

    std::vector<std::string> auts;
    std::string aut2, word, vertex, gfile, t4type, t4exps, show_name;
    std::vector<std::string> show_params;
    int depth = 3, delta_len = -1;
    long long power = 1;
    bool use_brute = false;

    auto* act = app.add_subcommand("act", "apply an automorphism to a vertex word");
    act->add_option("--aut", auts)->required();
    act->add_option("--word", word)->required();

    auto* mul = app.add_subcommand("mul", "product of two automorphisms (canonical form)");
    mul->add_option("--aut", auts)->required();
    mul->add_option("--aut2", aut2)->required();

    auto* inv = app.add_subcommand("inv", "inverse (canonical form)");
    inv->add_option("--aut", auts)->required();

    auto* section_cmd = app.add_subcommand("section", "state at a vertex (canonical form)");
    section_cmd->add_option("--aut", auts)->required();
    section_cmd->add_option("--vertex", vertex)->required();

    auto* states_cmd = app.add_subcommand("states", "bisimulation-distinct states");
    states_cmd->add_option("--aut", auts)->required();

    auto* orbits_cmd = app.add_subcommand("orbits", "activity group orbits and orbit-type");
    orbits_cmd->add_option("--aut", auts)->required();

    auto* factor_cmd = app.add_subcommand("factor", "orbit factor decomposition");
    factor_cmd->add_option("--aut", auts)->required();

    auto* dc = app.add_subcommand("delta-close", "diagonal closure generators");
    dc->add_option("--aut", auts)->required();
    dc->add_option("--len", delta_len)->required();

    auto* cent = app.add_subcommand("centralizer", "centralizer in the truncated ambient group");
    cent->add_option("--aut", auts)->required();
    cent->add_option("--depth", depth)->required();
    cent->add_option("--delta-len", delta_len);
    cent->add_flag("--brute", use_brute);

    auto* conj = app.add_subcommand("conjugate", "conjugator of a^xi back to a, or absence");
    conj->add_option("--aut", auts)->required();
    conj->add_option("--power", power)->required();
    conj->add_option("--depth", depth)->required();

    auto* verify = app.add_subcommand("verify", "verification reports");
    verify->require_subcommand(1);
    auto* va = verify->add_subcommand("theorem-a", "centralizer of the diagonal closure");
    va->add_option("--aut", auts)->required();
    va->add_option("--depth", depth)->required();
    va->add_flag("--brute", use_brute);
    auto* vb = verify->add_subcommand("theorem-b", "finitely generated closure core");
    vb->add_option("--aut", auts)->required();
    vb->add_option("--depth", depth)->required();
    auto* vp = verify->add_subcommand("prop-4-2", "centralizer structure facts");
    vp->add_option("--aut", auts)->required();
    vp->add_option("--depth", depth)->required();
    auto* vt = verify->add_subcommand("t4", "cyclic centralizer case analysis on T_4");
    vt->add_option("--type", t4type)->required();
    vt->add_option("--exps", t4exps)->required();
    vt->add_option("--depth", depth);

    auto* gd = app.add_subcommand("gdata", "virtual endomorphism data");
    gd->require_subcommand(1);
    auto* gcheck = gd->add_subcommand("check", "validate and certify recurrence");
    gcheck->add_option("file", gfile)->required();
    auto* gcore = gd->add_subcommand("core", "F-core iteration verdict");
    gcore->add_option("file", gfile)->required();
    auto* grep = gd->add_subcommand("represent", "induced self-similar representation");
    grep->add_option("file", gfile)->required();
    grep->add_option("--depth", depth);

    auto* cat = app.add_subcommand("catalog", "named example machines");
    cat->require_subcommand(1);
    cat->add_subcommand("list", "list entries");
    auto* cshow = cat->add_subcommand("show", "show one entry and its self-check");
    cshow->add_option("name", show_name)->required();
    cshow->add_option("--param", show_params, "key=value");
    cshow->add_option("--depth", depth);

    auto* dot = app.add_subcommand("export-dot", "Graphviz diagram of the minimized automaton");
    dot->add_option("--aut", auts)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        bool pass = true;
        if (*act) {
            Automorphism a = resolve_automorphism(auts.front());
            std::cout << format_vertex_word(a.act(parse_vertex_word(word, a.m()))) << "\n";
        } else if (*mul) {
            Automorphism a = resolve_automorphism(auts.front());
            Automorphism b = resolve_automorphism(aut2);
            std::cout << serialize_automorphism(a.then(b));
        } else if (*inv) {
            std::cout << serialize_automorphism(resolve_automorphism(auts.front()).inverse());
        } else if (*section_cmd) {
            Automorphism a = resolve_automorphism(auts.front());
            std::cout << serialize_automorphism(a.section(parse_vertex_word(vertex, a.m())));
        } else if (*states_cmd) {
            Automorphism a = resolve_automorphism(auts.front());
            auto sts = a.states();
            std::cout << "states " << sts.size() << "\n";
            for (const auto& s : sts) std::cout << "portrait@2 " << s.portrait(2).to_string() << "\n";
        } else if (*orbits_cmd) {
            auto gens = resolve_all(auts);
            OrbitPartition part = activity_orbits(gens);
            std::cout << "orbit-type";
            for (int t : part.orbit_type()) std::cout << ' ' << t;
            std::cout << "\n";
            for (const auto& orbit : part.orbits) {
                std::cout << "orbit";
                for (int y : orbit) std::cout << ' ' << y + 1;
                std::cout << "\n";
            }
        } else if (*factor_cmd) {
            Automorphism a = resolve_automorphism(auts.front());
            OrbitPartition part = activity_orbits({a});
            auto dec = factor(a, part);
            for (size_t i = 0; i < dec.factors.size(); ++i) {
                std::cout << "factor " << i + 1 << "\n";
                std::cout << serialize_automorphism(dec.factors[i]);
            }
        } else if (*dc) {
            auto gens = resolve_all(auts);
            OrbitPartition part = activity_orbits(gens);
            for (const auto& entry : delta_closure_entries(gens, part, delta_len)) {
                std::cout << "gen " << entry.gen_index + 1 << " word";
                if (entry.word.empty()) std::cout << " -";
                for (int i : entry.word) std::cout << " x" << i + 1;
                std::cout << " portrait@2 " << entry.value.portrait(2).to_string() << "\n";
            }
        } else if (*cent) {
            auto gens = resolve_all(auts);
            std::vector<Automorphism> target = gens;
            if (delta_len >= 0)
                target = delta_closure(gens, activity_orbits(gens), delta_len);
            TruncatedGroup g = use_brute ? centralizer_brute(target, depth)
                                         : centralizer_levelwise(target, depth);
            std::cout << "order " << g.order() << (g.complete ? "" : " (incomplete)") << "\n";
            for (const auto& p : g.elements)
                std::cout << "element " << p.to_string() << "\n";
        } else if (*conj) {
            Automorphism a = resolve_automorphism(auts.front());
            auto g = conjugator_unit_power(a, power, depth);
            if (g) {
                std::cout << "found\n" << "conjugator " << g->portrait(depth).to_string() << "\n";
                pass = a.pow(power).conjugate(*g).equal_at_depth(a, depth);
                std::cout << (pass ? "PASS" : "FAIL") << " conjugation verified at depth " << depth
                          << "\n";
            } else {
                std::cout << "absent at depth " << depth << "\n";
            }
        } else if (*verify) {
            if (*va || *vb || *vp) {
                auto gens = resolve_all(auts);
                OrbitPartition part = activity_orbits(gens);
                if (*va) {
                    TheoremOptions opt;
                    opt.brute_cross_check = use_brute;
                    auto rep = verify_theorem_A(gens, part, depth, opt);
                    print_report(rep.report);
                    pass = rep.pass();
                } else if (*vb) {
                    auto rep = verify_theorem_B(gens, part, depth);
                    print_report(rep.report);
                    pass = rep.pass();
                } else {
                    Report rep = verify_prop_4_2(gens, part, depth);
                    print_report(rep);
                    pass = rep.pass;
                }
            } else if (*vt) {
                T4Report rep = t4_analysis(parse_type(t4type), parse_exps(t4exps), depth);
                std::cout << "case " << rep.case_label << "\n";
                for (const auto& line : rep.lines) std::cout << line << "\n";
                pass = rep.pass;
            }
        } else if (*gd) {
            GDataSpec d = load_gdata(gfile);
            if (*gcheck) {
                Tri rec = is_recurrent(d);
                Tri strong = is_strongly_recurrent(d);
                std::cout << "valid true\nrecurrent " << to_string(rec) << "\nstrongly-recurrent "
                          << to_string(strong) << "\n";
            } else if (*gcore) {
                FCoreResult core = f_core(d);
                const char* verdict = core.verdict == CoreVerdict::Trivial ? "trivial"
                                      : core.verdict == CoreVerdict::Nontrivial ? "nontrivial"
                                                                                : "unknown";
                std::cout << "core " << verdict << " after " << core.iterations << " iterations ("
                          << core.detail << ")\n";
                if (core.verdict == CoreVerdict::Nontrivial)
                    std::cout << format_matrix(core.core.basis());
            } else {
                auto gens = induced_representation(d);
                for (size_t i = 0; i < gens.size(); ++i)
                    std::cout << "generator " << i + 1 << " portrait@" << depth << " "
                              << gens[i].portrait(depth).to_string() << "\n";
            }
        } else if (*cat) {
            if (*cshow) {
                CatalogParams params;
                for (const auto& p : show_params) {
                    auto eq = p.find('=');
                    if (eq == std::string::npos) throw InputError("--param needs key=value");
                    params[p.substr(0, eq)] = p.substr(eq + 1);
                }
                CatalogEntry entry = catalog(show_name, params);
                std::cout << "name " << entry.name << "\n";
                for (size_t i = 0; i < entry.generators.size(); ++i)
                    std::cout << serialize_automorphism(entry.generators[i]);
                Report rep = entry.self_check(depth);
                print_report(rep);
                pass = rep.pass;
            } else {
                for (const auto& name : catalog_names()) std::cout << name << "\n";
            }
        } else if (*dot) {
            std::cout << export_dot(resolve_automorphism(auts.front()));
        }
        return pass ? 0 : 1;
    } catch (const InputError& err) {
        std::cerr << "input error: " << err.what() << "\n";
        return 2;
    } catch (const SizeError& err) {
        std::cerr << "size error: " << err.what() << "\n";
        return 3;
    } catch (const ResourceError& err) {
        std::cerr << "resource error: " << err.what() << "\n";
        return 3;
    }
}
