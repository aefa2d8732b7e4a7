// wreathlab: exact computations in wreath products G wr Z -- element
// arithmetic and word metrics, the Diestel-Leader graph model, compatible-pair
// automorphisms, twisted-conjugacy/Reidemeister counts, and the certificate
// producing R-infinity classifier.
//
// Exit codes: 0 success / verdict produced, 1 falsified check, 2 usage error.

#include <CLI11.hpp>
#include <iostream>

#include "wreathlab/group_spec.hpp"
#include "wreathlab/reports.hpp"
#include "wreathlab/suite.hpp"

using namespace wreathlab;

namespace {

struct Options {
    std::string format = "text";
    int aut_cap = kDefaultAutCap;
    long long carrier_cap = kDefaultCarrierCap;
    int ball_cap = WreathGroup::kDefaultBallCap;

    bool json() const { return format == "json"; }
    Caps caps() const { return {aut_cap, carrier_cap, ball_cap}; }
};

void emit(const Options& opt, const json& machine, const std::string& human) {
    if (opt.json())
        std::cout << machine.dump(2) << "\n";
    else
        std::cout << human << "\n";
}

GenSet parse_gens(const std::string& s) {
    if (s == "at") return GenSet::AT;
    if (s == "ta") return GenSet::TA;
    throw ValidationError("generating set must be 'at' or 'ta'");
}

WreathElement element_from_word(const WreathGroup& W, const std::string& text,
                                const std::string& gens) {
    return eval_word(W, parse_word(text, parse_gens(gens), W.lamp_order()));
}

CharSubgroupTag parse_tag(const std::string& s) {
    if (s == "lamp-base") return CharSubgroupTag::lamp_base();
    if (s == "commutator-lamps") return CharSubgroupTag::commutator_lamps();
    if (s == "center-wreath") return CharSubgroupTag::center_wreath();
    if (s == "h2") return CharSubgroupTag::order_subgroup(2);
    if (s == "h3") return CharSubgroupTag::order_subgroup(3);
    if (s.starts_with("sylow-wreath-")) return CharSubgroupTag::sylow_wreath(std::stoi(s.substr(13)));
    throw ValidationError("unknown subgroup tag '" + s +
                          "' (lamp-base, commutator-lamps, center-wreath, h2, h3, sylow-wreath-P)");
}

GroupAut parse_phi(const FiniteGroup& G, const std::string& s, int aut_cap) {
    if (s == "id") return identity_aut(G);
    if (s.starts_with("*")) return unit_aut(G, std::stoi(s.substr(1)));
    auto auts = automorphism_group(G, aut_cap);
    int idx = std::stoi(s);
    if (idx < 0 || idx >= static_cast<int>(auts.size()))
        throw ValidationError("aut index out of range 0.." + std::to_string(auts.size() - 1));
    return auts[idx];
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact wreath-product toolkit (G wr Z)"};
    app.require_subcommand(1);
    app.fallthrough(true);  // global flags may follow the subcommand
    Options opt;
    app.add_option("--format", opt.format, "output format: text | json")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--aut-cap", opt.aut_cap, "order cap for automorphism enumeration");
    app.add_option("--carrier-cap", opt.carrier_cap, "size cap for direct orbit enumeration");
    app.add_option("--ball-cap", opt.ball_cap, "radius cap for BFS searches");

    // group info <spec>
    auto* group = app.add_subcommand("group", "finite group computations");
    auto* group_info = group->add_subcommand("info", "orders, center, commutator, classes");
    std::string g_spec;
    group_info->add_option("spec", g_spec, "group spec (C5, C2xC4, D12, Q8, S5, A6, @table-file)")
        ->required();

    // wreath {mul|inv|eval|normform|len|lenbfs}
    auto* wreath = app.add_subcommand("wreath", "element arithmetic and word metrics");
    int w_n = 2;
    std::string w_gens = "at", w_word, w_x, w_y, w_side = "rf";
    wreath->add_option("--n", w_n, "lamp order (base group C_n)")->required();
    auto* w_mul = wreath->add_subcommand("mul", "multiply two elements given as words");
    w_mul->add_option("--x", w_x)->required();
    w_mul->add_option("--y", w_y)->required();
    w_mul->add_option("--gens", w_gens);
    auto* w_inv = wreath->add_subcommand("inv", "invert an element given as a word");
    w_inv->add_option("--word", w_word)->required();
    w_inv->add_option("--gens", w_gens);
    auto* w_eval = wreath->add_subcommand("eval", "evaluate a word");
    w_eval->add_option("--word", w_word)->required();
    w_eval->add_option("--gens", w_gens);
    auto* w_nf = wreath->add_subcommand("normform", "normal form of a word's element");
    w_nf->add_option("--word", w_word)->required();
    w_nf->add_option("--gens", w_gens);
    w_nf->add_option("--side", w_side)->check(CLI::IsMember({"rf", "lf"}));
    auto* w_len = wreath->add_subcommand("len", "word length over {a,t} (closed form)");
    w_len->add_option("--word", w_word)->required();
    w_len->add_option("--gens", w_gens);
    auto* w_lenbfs = wreath->add_subcommand("lenbfs", "word length by BFS oracle");
    w_lenbfs->add_option("--word", w_word)->required();
    std::string w_bfs_gens = "at";
    w_lenbfs->add_option("--gens", w_bfs_gens, "metric generating set: at | ta");
    std::string w_word_gens = "at";
    w_lenbfs->add_option("--word-gens", w_word_gens, "generating set the word is written in");

    // dl {ball|check-iso|locate}
    auto* dl = app.add_subcommand("dl", "Diestel-Leader graph model");
    auto* dl_ball_cmd = dl->add_subcommand("ball", "BFS ball of DL(m,n)");
    int d_m = 2, d_n = -1, d_radius = 3;
    bool d_adjacency = false;
    dl_ball_cmd->add_option("--m", d_m)->required();
    dl_ball_cmd->add_option("--n", d_n, "defaults to m");
    dl_ball_cmd->add_option("--radius", d_radius)->required();
    dl_ball_cmd->add_flag("--adjacency", d_adjacency, "dump the adjacency list");
    auto* dl_check = dl->add_subcommand("check-iso", "verify Cayley graph = DL(m,m)");
    int c_m = 2, c_radius = 3;
    dl_check->add_option("--m", c_m)->required();
    dl_check->add_option("--radius", c_radius)->required();
    auto* dl_locate = dl->add_subcommand("locate", "vertex of a group element");
    int l_m = 2;
    std::string l_word, l_gens = "ta";
    dl_locate->add_option("--m", l_m)->required();
    dl_locate->add_option("--word", l_word)->required();
    dl_locate->add_option("--gens", l_gens);

    // aut {apply|blocks|verify-char}
    auto* aut = app.add_subcommand("aut", "compatible-pair automorphisms");
    std::string a_group, a_spec, a_word, a_gens = "at", a_tag;
    auto* aut_apply = aut->add_subcommand("apply", "apply a spec to an element");
    aut_apply->add_option("--group", a_group)->required();
    aut_apply->add_option("--spec", a_spec, "xi=<idx|*k> c=<int> eps=<+1|-1>")->required();
    aut_apply->add_option("--word", a_word)->required();
    aut_apply->add_option("--gens", a_gens);
    auto* aut_blocks = aut->add_subcommand("blocks", "block maps, class counts, fixed points");
    std::string b_blocks = "0,1,2";
    aut_blocks->add_option("--group", a_group)->required();
    aut_blocks->add_option("--spec", a_spec)->required();
    aut_blocks->add_option("--blocks", b_blocks, "comma separated block indices");
    auto* aut_verify = aut->add_subcommand("verify-char", "characteristic subgroup check");
    int v_window = 4;
    aut_verify->add_option("--group", a_group)->required();
    aut_verify->add_option("--tag", a_tag, "lamp-base|commutator-lamps|center-wreath|h2|h3|sylow-wreath-P")
        ->required();
    aut_verify->add_option("--window", v_window);
    std::string v_spec = "all";
    aut_verify->add_option("--spec", v_spec, "a single spec, or 'all' compatible-pair specs");

    // reid {finite|wreath|window}
    auto* reid = app.add_subcommand("reid", "twisted conjugacy and Reidemeister numbers");
    std::string r_group, r_phi = "id", r_spec, r_window = "0,1,2";
    bool r_direct = false;
    auto* reid_finite = reid->add_subcommand("finite", "R(phi) on a finite group");
    reid_finite->add_option("--group", r_group)->required();
    reid_finite->add_option("--phi", r_phi, "id | *k | aut index");
    std::string r_method = "all";
    reid_finite->add_option("--method", r_method)->check(CLI::IsMember({"orbit", "coker", "fh", "all"}));
    auto* reid_wreath = reid->add_subcommand("wreath", "R of the induced wreath automorphism");
    reid_wreath->add_option("--group", r_group)->required();
    reid_wreath->add_option("--spec", r_spec)->required();
    auto* reid_window = reid->add_subcommand("window", "class count over a block window");
    reid_window->add_option("--group", r_group)->required();
    reid_window->add_option("--spec", r_spec)->required();
    reid_window->add_option("--blocks", r_window, "comma separated block indices");
    reid_window->add_flag("--direct", r_direct, "also run direct orbit enumeration");

    // classify
    auto* classify_cmd = app.add_subcommand("classify", "R-infinity classifier for G wr Z");
    std::string cl_group;
    classify_cmd->add_option("--group", cl_group)->required();

    // suite {acceptance|cyclic}
    auto* suite = app.add_subcommand("suite", "batch experiment drivers");
    auto* suite_acc = suite->add_subcommand("acceptance", "run the acceptance suite");
    auto* suite_cyc = suite->add_subcommand("cyclic", "cross-validate cyclic groups");
    int s_limit = 30;
    suite_cyc->add_option("--limit", s_limit);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (*group_info) {
            FiniteGroup G = build_group(g_spec);
            json j = group_info_json(G, opt.aut_cap);
            std::ostringstream os;
            os << G.name() << ": order " << G.order() << ", family " << family_name(G.family())
               << "\n  abelian: " << (G.is_abelian() ? "yes" : "no")
               << "\n  |Z(G)| = " << j["center_order"] << ", |[G,G]| = " << j["commutator_order"]
               << "\n  G^ab = " << j["abelianization"]["text"].get<std::string>()
               << "\n  conjugacy classes: " << j["conjugacy_class_count"]
               << "\n  simple: " << (j["simple"].get<bool>() ? "yes" : "no");
            if (!j["automorphism_count"].is_null())
                os << "\n  |Aut(G)| = " << j["automorphism_count"]
                   << ", trivial Out: " << (j["outer_trivial"].get<bool>() ? "yes" : "no");
            emit(opt, j, os.str());
        } else if (*wreath) {
            WreathGroup W(FiniteGroup::cyclic(w_n));
            if (*w_mul) {
                auto z = W.mul(element_from_word(W, w_x, w_gens), element_from_word(W, w_y, w_gens));
                emit(opt, element_json(W, z), W.to_string(z));
            } else if (*w_inv) {
                auto z = W.inverse(element_from_word(W, w_word, w_gens));
                emit(opt, element_json(W, z), W.to_string(z));
            } else if (*w_eval) {
                auto z = element_from_word(W, w_word, w_gens);
                emit(opt, element_json(W, z), W.to_string(z));
            } else if (*w_nf) {
                auto z = element_from_word(W, w_word, w_gens);
                auto nf = normal_form(W, z,
                                      w_side == "rf" ? NormalFormSide::RF : NormalFormSide::LF);
                json j = normal_form_json(nf);
                j["word"] = print_word(to_word(nf));
                emit(opt, j, to_string(nf));
            } else if (*w_len) {
                auto z = element_from_word(W, w_word, w_gens);
                int len = word_length_ct(W, z);
                emit(opt, json{{"length", len}}, std::to_string(len));
            } else if (*w_lenbfs) {
                auto z = element_from_word(W, w_word, w_word_gens);
                auto len = W.word_length_bfs(z, parse_gens(w_bfs_gens), opt.ball_cap);
                if (len)
                    emit(opt, json{{"length", *len}}, std::to_string(*len));
                else
                    emit(opt, json{{"length", nullptr}, {"cap", opt.ball_cap}},
                         "not found within radius " + std::to_string(opt.ball_cap));
            }
        } else if (*dl) {
            if (*dl_ball_cmd) {
                if (d_n < 0) d_n = d_m;
                auto ball = dl_ball(d_m, d_n, d_radius);
                json j{{"m", d_m}, {"n", d_n}, {"radius", d_radius},
                       {"sphere_sizes", ball.sphere_sizes}};
                std::ostringstream os;
                os << "DL(" << d_m << "," << d_n << ") ball radius " << d_radius << ": spheres";
                for (auto s : ball.sphere_sizes) os << " " << s;
                if (d_adjacency) {
                    json adj = json::array();
                    for (const auto& v : ball.vertices) {
                        json row{{"vertex", vertex_to_string(v)}, {"neighbors", json::array()}};
                        for (const auto& w : graph_neighbors(v, d_m, d_n))
                            row["neighbors"].push_back(vertex_to_string(w));
                        adj.push_back(row);
                    }
                    j["adjacency"] = adj;
                    os << "\n";
                    for (const auto& v : ball.vertices) {
                        os << vertex_to_string(v) << " ->";
                        for (const auto& w : graph_neighbors(v, d_m, d_n))
                            os << "  " << vertex_to_string(w);
                        os << "\n";
                    }
                }
                emit(opt, j, os.str());
            } else if (*dl_check) {
                auto rep = check_cayley_isomorphism(c_m, c_radius);
                emit(opt, iso_report_json(rep), rep.to_string());
                if (!rep.pass) return 1;
            } else if (*dl_locate) {
                WreathGroup W(FiniteGroup::cyclic(l_m));
                auto z = element_from_word(W, l_word, l_gens);
                auto v = vertex_of_element(z, l_m);
                emit(opt, vertex_json(v), vertex_to_string(v));
            }
        } else if (*aut) {
            FiniteGroup G = build_group(a_group);
            WreathGroup W(G);
            if (*aut_apply) {
                auto s = parse_autospec(W, a_spec, opt.aut_cap);
                auto z = apply_aut(W, s, element_from_word(W, a_word, a_gens));
                emit(opt, element_json(W, z), W.to_string(z));
            } else if (*aut_blocks) {
                auto s = parse_autospec(W, a_spec, opt.aut_cap);
                json rows = json::array();
                std::ostringstream os;
                std::istringstream bs(b_blocks);
                std::string item;
                while (std::getline(bs, item, ',')) {
                    int i = std::stoi(item);
                    auto b = block_map(W, s, i);
                    auto fixed = block_fixed_points(W, s, i);
                    long long count = block_class_count(W, s, i, opt.carrier_cap);
                    rows.push_back({{"index", i},
                                    {"partner", b.partner},
                                    {"kind", b.kind == BlockKind::Pair ? "pair" : "middle"},
                                    {"class_count", count},
                                    {"fixed_points", fixed.size()}});
                    os << "block " << i << " (partner " << b.partner << ", "
                       << (b.kind == BlockKind::Pair ? "pair" : "middle") << "): " << count
                       << " classes, " << fixed.size() << " fixed points\n";
                }
                emit(opt, json{{"spec", autospec_json(s)}, {"blocks", rows}}, os.str());
            } else if (*aut_verify) {
                auto tag = parse_tag(a_tag);
                std::vector<LampAutSpec> specs;
                if (v_spec == "all")
                    specs = all_compatible_specs(W, opt.aut_cap);
                else
                    specs.push_back(parse_autospec(W, v_spec, opt.aut_cap));
                auto rep = verify_characteristic(W, tag, specs, v_window);
                emit(opt, char_report_json(rep), rep.to_string());
                if (!rep.pass) return 1;
            }
        } else if (*reid) {
            FiniteGroup G = build_group(r_group);
            if (*reid_finite) {
                auto phi = parse_phi(G, r_phi, opt.aut_cap);
                json j{{"group", G.name()}};
                std::ostringstream os;
                if (r_method == "orbit" || r_method == "all") {
                    auto rep = twisted_classes(G, phi);
                    j["orbit"] = twisted_report_json(rep);
                    os << "orbit: " << rep.count << "  ";
                }
                if ((r_method == "coker" || r_method == "all") && G.is_abelian()) {
                    auto v = reidemeister_abelian(G, phi);
                    j["cokernel"] = v;
                    os << "cokernel: " << v << "  ";
                }
                if (r_method == "fh" || r_method == "all") {
                    auto v = reidemeister_fh(G, phi);
                    j["fh"] = v;
                    os << "fixed-classes: " << v;
                }
                emit(opt, j, os.str());
            } else {
                WreathGroup W(G);
                auto s = parse_autospec(W, r_spec, opt.aut_cap);
                if (*reid_wreath) {
                    auto r = reidemeister_wreath(W, s, opt.carrier_cap);
                    json j = reidemeister_json(r);
                    j["spec"] = autospec_json(s);
                    if (s.eps == -1) {
                        json table = json::array();
                        for (int i : {s.offset / 2, s.offset / 2 + 1, s.offset / 2 + 2}) {
                            auto b = block_map(W, s, i);
                            table.push_back(
                                {{"index", i},
                                 {"kind", b.kind == BlockKind::Pair ? "pair" : "middle"},
                                 {"class_count", block_class_count(W, s, i, opt.carrier_cap)},
                                 {"fixed_points", block_fixed_points(W, s, i).size()}});
                        }
                        j["blocks"] = table;
                    }
                    emit(opt, j, r.to_string());
                } else if (*reid_window) {
                    std::vector<int> window;
                    std::istringstream bs(r_window);
                    std::string item;
                    while (std::getline(bs, item, ',')) window.push_back(std::stoi(item));
                    long long product = window_class_count(W, s, window);
                    json j{{"spec", autospec_json(s)}, {"window", window}, {"product", product}};
                    std::ostringstream os;
                    os << "blockwise product: " << product;
                    if (r_direct) {
                        long long direct = window_direct_count(W, s, window, opt.carrier_cap);
                        j["direct"] = direct;
                        os << ", direct enumeration: " << direct
                           << (direct == product ? " (agree)" : " (MISMATCH)");
                        if (direct != product) {
                            emit(opt, j, os.str());
                            return 1;
                        }
                    }
                    emit(opt, j, os.str());
                }
            }
        } else if (*classify_cmd) {
            Verdict v = classify(build_group(cl_group), opt.caps());
            emit(opt, verdict_json(v), v.to_string());
        } else if (*suite) {
            if (*suite_acc) {
                bool ok = run_acceptance_suite(std::cout);
                return ok ? 0 : 1;
            } else if (*suite_cyc) {
                auto rep = cross_validate_cyclic(s_limit, opt.caps());
                emit(opt, cyclic_cross_json(rep), rep.to_string());
                if (!rep.pass) return 1;
            }
        }
    } catch (const CLI::Error& e) {
        return 2;
    } catch (const CapacityError& e) {
        std::cerr << "capacity error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
