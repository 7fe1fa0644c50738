// splitfact: enumeration, splitting-invariant computation, table
// reproduction, verification suites and cross-torus comparison for split
// simply-connected real groups, with exact arithmetic throughout.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "splitfact/json_io.hpp"

namespace sf = splitfact;
using sf::Int;
using sf::Rat;
using sf::json;

namespace {

sf::RootSystem parse_system(const std::string& label) {
    if (label.size() < 2) throw CLI::ValidationError("system", "expected <T><n>, e.g. B3");
    char type = label[0];
    int rank = 0;
    try {
        rank = std::stoi(label.substr(1));
    } catch (const std::exception&) {
        throw CLI::ValidationError("system", "cannot parse rank in '" + label + "'");
    }
    try {
        return sf::build(type, rank);
    } catch (const std::invalid_argument& e) {
        throw CLI::ValidationError("system", e.what());
    }
}

sf::Root parse_root_csv(const std::string& csv) {
    sf::Root v;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            v.push_back(std::stoll(tok));
        } catch (const std::exception&) {
            throw CLI::ValidationError("root", "cannot parse integer '" + tok + "'");
        }
    }
    if (v.empty()) throw CLI::ValidationError("root", "empty coordinate list");
    return v;
}

// semicolon-separated list of comma-separated roots: "1,-1,0;1,1,0"
sf::SOSet parse_sos(const std::string& text) {
    sf::SOSet a;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ';'))
        if (!tok.empty()) a.push_back(parse_root_csv(tok));
    return a;
}

std::vector<Rat> parse_rat_csv(const std::string& csv) {
    std::vector<Rat> v;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) v.push_back(sf::parse_rat(tok));
    return v;
}

void emit(const json& doc) { std::cout << doc.dump(2) << "\n"; }

struct SuiteReport {
    std::string suite;
    int cases_run = 0;
    json failures = json::array();

    void check(bool ok, const std::string& case_id, const json& witness = nullptr) {
        ++cases_run;
        if (!ok) failures.push_back(json{{"case_id", case_id}, {"witness", witness}});
    }

    int finish() {
        emit(json{{"suite", suite},
                  {"cases_run", cases_run},
                  {"failures", failures},
                  {"status", failures.empty() ? "pass" : "fail"}});
        return failures.empty() ? 0 : 1;
    }
};

std::string root_str(const sf::Root& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

std::string sos_str(const sf::SOSet& a) {
    std::string s;
    for (size_t i = 0; i < a.size(); ++i) s += (i ? ";" : "") + root_str(a[i]);
    return s;
}

std::vector<std::pair<char, int>> systems_up_to(int max_rank, bool with_g2) {
    std::vector<std::pair<char, int>> out;
    for (int n = 1; n <= max_rank; ++n) out.push_back({'A', n});
    for (int n = 2; n <= max_rank; ++n) out.push_back({'B', n});
    for (int n = 2; n <= max_rank; ++n) out.push_back({'C', n});
    for (int n = 3; n <= max_rank; ++n) out.push_back({'D', n});
    if (with_g2) out.push_back({'G', 2});
    return out;
}

int run_verify(const std::string& suite) {
    SuiteReport rep;
    rep.suite = suite;
    if (suite == "sharp-equiv") {
        for (auto [t, n] : systems_up_to(4, true)) {
            sf::RootSystem r = sf::build(t, n);
            for (const auto& a : sf::enumerate_sos(r, r.std_pos)) {
                if (a.size() < 2) continue;
                for (int which = 0; which < 2; ++which) {
                    sf::Positivity pos = which ? sf::adapted_positivity(r, a) : r.std_pos;
                    bool sharp = sf::check_statement(r, pos, a, sf::StatementKind::Sharp).holds;
                    bool dsharp =
                        sf::check_statement(r, pos, a, sf::StatementKind::SharpSharp).holds;
                    rep.check(sharp == dsharp,
                              r.label() + (which ? " adapted " : " standard ") + sos_str(a),
                              json{{"sharp", sharp}, {"double_sharp", dsharp}});
                }
            }
        }
    } else if (suite == "adapted-positivity") {
        for (auto [t, n] : systems_up_to(6, true)) {
            sf::RootSystem r = sf::build(t, n);
            for (const auto& a : sf::msos_orbit_representatives(r)) {
                sf::Positivity pos = sf::adapted_positivity(r, a);
                rep.check(sf::check_statement(r, pos, a, sf::StatementKind::Sharp).holds,
                          r.label() + " # for A=" + sos_str(a));
                for (const auto& sub : sf::enumerate_sos(r, pos)) {
                    if (sub.size() < 2 || !sf::is_adapted(r, sub, a)) continue;
                    if (!sf::support_separated(sub, a)) continue;
                    rep.check(sf::check_statement(r, pos, sub, sf::StatementKind::Sharp).holds,
                              r.label() + " # for separated adapted A'=" + sos_str(sub));
                }
            }
        }
        // separation is a real hypothesis: a straddling adapted set fails #
        {
            sf::RootSystem c3 = sf::build('C', 3);
            sf::SOSet a{{2, 0, 0}, {0, 2, 0}, {0, 0, 2}};
            sf::SOSet straddle{{0, 2, 0}, {1, 0, -1}};
            sf::Positivity pos = sf::adapted_positivity(c3, a);
            auto res = sf::check_statement(c3, pos, straddle, sf::StatementKind::Sharp);
            rep.check(sf::is_adapted(c3, straddle, a) && !sf::support_separated(straddle, a) &&
                          !res.holds,
                      "C3 interleaved adapted set breaks # (witness beta = e2-e3)");
        }
    } else if (suite == "decomposition") {
        for (auto [t, n] : systems_up_to(5, true)) {
            sf::RootSystem r = sf::build(t, n);
            for (const auto& full : sf::msos_orbit_representatives(r)) {
                sf::Positivity pos = sf::adapted_positivity(r, full);
                for (size_t mask = 0; mask < (size_t(1) << full.size()); ++mask) {
                    sf::SOSet a;
                    for (size_t i = 0; i < full.size(); ++i)
                        if (mask & (size_t(1) << i)) a.push_back(full[i]);
                    sf::TwistedCocycle whole = sf::rho_sos(r, pos, {}, a);
                    sf::TorusElem sum{sf::IVec(r.rank, 0)};
                    for (const auto& al : a) {
                        sf::WeylElement m = sf::conjugate_to_simple(r, pos, al);
                        sum = sf::torus_mul(sum, sf::rho(r, pos, m, al).value);
                    }
                    rep.check(whole.value == sum, r.label() + " A=" + sos_str(a),
                              json{{"rho_sos", sf::to_json(whole.value)},
                                   {"factor_sum", sf::to_json(sum)}});
                }
            }
        }
    } else if (suite == "strongco") {
        for (auto [t, n] : systems_up_to(6, true)) {
            sf::RootSystem r = sf::build(t, n);
            for (const auto& a : r.roots)
                for (const auto& b : r.roots) {
                    if (a >= b || !sf::strongly_orthogonal(r, a, b)) continue;
                    bool in2q =
                        sf::in_coroot_lattice(r, sf::add(sf::coroot(r, a), sf::coroot(r, b)), 2);
                    rep.check(in2q == (t == 'G'),
                              r.label() + " pair " + root_str(a) + " / " + root_str(b),
                              json{{"in_2Qvee", in2q}});
                }
        }
    } else if (suite == "boxed") {
        for (auto [t, n] : systems_up_to(8, false)) {
            if (n < 2) continue;
            sf::RootSystem r = sf::build(t, n);
            auto table = sf::classical_rho_table(r);
            for (const auto& [alpha, want] : table) {
                sf::TwistedCocycle c = sf::rho(r, r.std_pos, sf::table_mu(r, alpha), alpha);
                rep.check(c.value == want, r.label() + " alpha=" + root_str(alpha),
                          json{{"general", sf::to_json(c.value)},
                               {"closed_form", sf::to_json(want)}});
            }
        }
    } else if (suite == "tn-model") {
        for (auto [t, n] : systems_up_to(4, true)) {
            sf::RootSystem r = sf::build(t, n);
            for (const auto& a : sf::enumerate_sos(r, r.std_pos)) {
                bool div_ok = true;
                for (Int d : sf::tn_quotient(r, a).nontrivial_divisors())
                    if (d != 2) div_ok = false;
                rep.check(div_ok, r.label() + " divisors " + sos_str(a));
                rep.check(sf::tn_model_isomorphic(r, a), r.label() + " bijection " + sos_str(a));
            }
        }
    } else if (suite == "embedding") {
        for (auto [t, n] : systems_up_to(5, true)) {
            sf::RootSystem r = sf::build(t, n);
            for (const auto& full : sf::msos_orbit_representatives(r)) {
                for (size_t mask = 0; mask < (size_t(1) << full.size()); ++mask) {
                    sf::SOSet sub;
                    for (size_t i = 0; i < full.size(); ++i)
                        if (mask & (size_t(1) << i)) sub.push_back(full[i]);
                    auto q = sf::comparison_quotients(r, sub, full);
                    rep.check(sf::embedding_injective(q),
                              r.label() + " A'=" + sos_str(sub) + " A=" + sos_str(full));
                }
            }
        }
        // the worked end-to-end example
        sf::RootSystem b2 = sf::build('B', 2);
        sf::EndoChar s{{Rat(1, 2), Rat(0)}};
        auto res = sf::compare_invariants(b2, s, {{1, -1}}, {{1, -1}, {1, 1}});
        rep.check(res.value_sub == Rat(1, 2) && res.value == Rat(1, 2) &&
                      res.embedding_consistent,
                  "B2 end-to-end",
                  json{{"value_sub", sf::rat_to_string(res.value_sub)},
                       {"value", sf::rat_to_string(res.value)},
                       {"consistent", res.embedding_consistent}});
    } else if (suite == "d3-counterexample") {
        sf::RootSystem d3 = sf::build('D', 3);
        sf::Positivity pos = sf::base_from_positivity(d3, {Rat(3), Rat(2), Rat(-1)});
        auto positives = sf::positive_roots(d3, pos);
        std::set<sf::Root> got(positives.begin(), positives.end());
        std::set<sf::Root> want{{1, -1, 0}, {1, 0, -1}, {0, 1, -1},
                                {1, 1, 0},  {1, 0, 1},  {0, 1, 1}};
        rep.check(got == want, "D3 positive system matches the counterexample data");
        sf::SOSet a{{1, 0, -1}, {1, 0, 1}};
        auto res = sf::check_statement(d3, pos, a, sf::StatementKind::Sharp);
        rep.check(!res.holds && res.witness_beta == sf::Root{1, -1, 0},
                  "sharp fails with witness e1-e2",
                  json{{"holds", res.holds}, {"witness_beta", res.witness_beta}});
        sf::Positivity fixed = sf::adapted_positivity(d3, a);
        rep.check(sf::check_statement(d3, fixed, a, sf::StatementKind::Sharp).holds,
                  "adapted positivity repairs the failure");
    } else {
        throw CLI::ValidationError("suite", "unknown suite '" + suite + "'");
    }
    return rep.finish();
}

json msos_census_json(const sf::RootSystem& r) {
    json orbits = json::array();
    auto all = sf::enumerate_msos(r);
    for (size_t i = 0; i < all.size(); ++i)
        orbits.push_back(json{{"orbit_id", i},
                              {"size", all[i].members.size()},
                              {"representative", sf::roots_json(all[i].representative)}});
    return orbits;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"splitting-invariant cocycles for split real groups"};
    app.require_subcommand(1);

    std::string system_label, alpha_csv, sos_text, sos_sub_text, char_csv, format = "json";
    std::string mu_mode = "auto", suite, cache_dir;
    bool do_enumerate = false;

    auto* cmd_rootsys = app.add_subcommand("rootsys", "root system info");
    auto* cmd_info = cmd_rootsys->add_subcommand("info", "summary of a root system");
    cmd_info->add_option("system", system_label)->required();

    auto* cmd_msos = app.add_subcommand("msos", "maximal strongly orthogonal sets");
    auto* cmd_list = cmd_msos->add_subcommand("list", "orbit representatives");
    cmd_list->add_option("system", system_label)->required();
    cmd_list->add_flag("--enumerate", do_enumerate, "full brute-force orbit census");
    cmd_list->add_option("--cache", cache_dir, "census cache directory");

    auto* cmd_rho = app.add_subcommand("rho", "splitting-invariant cocycle");
    cmd_rho->add_option("system", system_label)->required();
    cmd_rho->add_option("--alpha", alpha_csv, "root in ambient coordinates");
    cmd_rho->add_option("--mu", mu_mode, "conjugator choice (auto)");
    cmd_rho->add_option("--sos", sos_text, "strongly orthogonal set, roots ;-separated");

    auto* cmd_table = app.add_subcommand("table", "closed-form table reproduction");
    cmd_table->add_option("system", system_label)->required();
    cmd_table->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

    auto* cmd_verify = app.add_subcommand("verify", "verification suites");
    cmd_verify->add_option("suite", suite)->required();

    auto* cmd_coh = app.add_subcommand("cohomology", "lattice cohomology");
    auto* cmd_quot = cmd_coh->add_subcommand("quotient", "Tate-Nakayama quotient");
    cmd_quot->add_option("system", system_label)->required();
    cmd_quot->add_option("--sos", sos_text)->required();

    auto* cmd_cmp = app.add_subcommand("compare", "cross-torus character comparison");
    cmd_cmp->add_option("system", system_label)->required();
    cmd_cmp->add_option("--sos-sub", sos_sub_text)->required();
    cmd_cmp->add_option("--sos", sos_text)->required();
    cmd_cmp->add_option("--char", char_csv)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (cmd_info->parsed()) {
            sf::RootSystem r = parse_system(system_label);
            json doc = sf::to_json(r);
            doc["positive_count"] = sf::positive_roots(r, r.std_pos).size();
            json coroots = json::array();
            for (const auto& c : r.simple_coroots) {
                json cv = json::array();
                for (const auto& x : c) cv.push_back(sf::rat_to_string(x));
                coroots.push_back(cv);
            }
            doc["simple_coroots"] = coroots;
            emit(doc);
        } else if (cmd_list->parsed()) {
            sf::RootSystem r = parse_system(system_label);
            json doc;
            doc["system"] = r.label();
            json reps = json::array();
            for (const auto& a : sf::msos_orbit_representatives(r)) reps.push_back(sf::roots_json(a));
            doc["representatives"] = reps;
            if (do_enumerate) {
                bool from_cache = false;
                std::string cache_file;
                if (!cache_dir.empty()) {
                    cache_file = cache_dir + "/msos-" + r.label() + ".json";
                    std::ifstream in(cache_file);
                    if (in) {
                        json cached = json::parse(in, nullptr, false);
                        if (!cached.is_discarded()) {
                            doc["census"] = cached;
                            from_cache = true;
                        }
                    }
                }
                if (!from_cache) {
                    doc["census"] = msos_census_json(r);
                    if (!cache_file.empty()) {
                        std::ofstream out(cache_file);
                        if (out) out << doc["census"].dump(2) << "\n";
                    }
                }
                doc["census_cached"] = from_cache;
            }
            emit(doc);
        } else if (cmd_rho->parsed()) {
            sf::RootSystem r = parse_system(system_label);
            if (mu_mode != "auto") throw CLI::ValidationError("--mu", "only 'auto' is supported");
            json doc;
            doc["system"] = r.label();
            if (!sos_text.empty()) {
                sf::SOSet a = parse_sos(sos_text);
                sf::Positivity pos = sf::adapted_positivity(r, a);
                sf::TwistedCocycle c = sf::rho_sos(r, pos, {}, a);
                doc["cocycle"] = sf::to_json(c);
                json mus = json::object();
                for (const auto& al : a)
                    mus[root_str(al)] = sf::to_json(sf::conjugate_to_simple(r, pos, al));
                doc["mu"] = mus;
            } else if (!alpha_csv.empty()) {
                sf::Root alpha = parse_root_csv(alpha_csv);
                sf::WeylElement mu = sf::conjugate_to_simple(r, r.std_pos, alpha);
                sf::TwistedCocycle c = sf::rho(r, r.std_pos, mu, alpha);
                doc["cocycle"] = sf::to_json(c);
                doc["mu"] = sf::to_json(mu);
            } else {
                throw CLI::ValidationError("rho", "need --alpha or --sos");
            }
            emit(doc);
        } else if (cmd_table->parsed()) {
            sf::RootSystem r = parse_system(system_label);
            auto table = sf::classical_rho_table(r);
            struct Row {
                sf::Root alpha;
                sf::TorusElem closed, general;
                bool match;
            };
            std::vector<Row> rows;
            for (const auto& [alpha, want] : table) {
                sf::TwistedCocycle c = sf::rho(r, r.std_pos, sf::table_mu(r, alpha), alpha);
                rows.push_back({alpha, want, c.value, c.value == want});
            }
            if (format == "csv") {
                std::cout << "alpha,closed_form,general,match\n";
                for (const auto& row : rows) {
                    std::cout << '"' << root_str(row.alpha) << "\",\"" << root_str(row.closed.w)
                              << "\",\"" << root_str(row.general.w) << "\","
                              << (row.match ? "true" : "false") << "\n";
                }
            } else {
                json doc;
                doc["system"] = r.label();
                json entries = json::array();
                for (const auto& row : rows)
                    entries.push_back(json{{"alpha", row.alpha},
                                           {"closed_form", sf::to_json(row.closed)},
                                           {"general", sf::to_json(row.general)},
                                           {"match", row.match}});
                doc["entries"] = entries;
                if (r.type == 'C')
                    doc["note"] =
                        "long-root entries use the j-indexed product e*_j(-1), j = i..n; "
                        "the i-indexed variant printed in some references disagrees with "
                        "the general formula and is not used";
                if (r.type == 'B' && r.rank % 2 == 0)
                    doc["note"] =
                        "for even rank the e_{2i-1}+e_{2i} entries are 4e_{2i}, not the "
                        "identity: the descent constant -2(n+1-2i)(e_{2i-1}-e_{2i}) is "
                        "sometimes misread as a multiple of alpha^vee, which would "
                        "wrongly cancel the value mod 4Q^vee";
                emit(doc);
            }
        } else if (cmd_verify->parsed()) {
            return run_verify(suite);
        } else if (cmd_quot->parsed()) {
            sf::RootSystem r = parse_system(system_label);
            sf::SOSet a = parse_sos(sos_text);
            json doc;
            doc["system"] = r.label();
            doc["sos"] = sf::roots_json(a);
            doc["tn_quotient"] = sf::to_json(sf::tn_quotient(r, a));
            auto model = sf::finite_cocycle_model(r, a);
            doc["cocycle_model"] = sf::to_json(model.quotient);
            doc["isomorphic"] = sf::tn_model_isomorphic(r, a);
            emit(doc);
        } else if (cmd_cmp->parsed()) {
            sf::RootSystem r = parse_system(system_label);
            sf::SOSet sub = parse_sos(sos_sub_text);
            sf::SOSet a = parse_sos(sos_text);
            sf::EndoChar s{parse_rat_csv(char_csv)};
            if (s.s.size() != static_cast<size_t>(r.rank))
                throw CLI::ValidationError("--char", "length must equal the rank");
            auto res = sf::compare_invariants(r, s, sub, a);
            emit(json{{"system", r.label()},
                      {"sos_sub", sf::roots_json(sub)},
                      {"sos", sf::roots_json(a)},
                      {"value_sub", sf::mod1_string(res.value_sub)},
                      {"value", sf::mod1_string(res.value)},
                      {"embedding_consistent", res.embedding_consistent}});
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
