#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "atrans/bounds.hpp"
#include "atrans/constructions.hpp"
#include "atrans/engine.hpp"
#include "atrans/error.hpp"
#include "atrans/io.hpp"
#include "atrans/report_json.hpp"
#include "atrans/search.hpp"
#include "atrans/verify.hpp"

namespace {

using nlohmann::json;

struct Options {
    bool tsv = false;
    std::string out_path;
    std::string payload;
    int exit_code = 0;
};

atrans::Hypergraph load_hypergraph(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return atrans::parse_hypergraph(buf.str());
    }
    std::ifstream in(path);
    if (!in) throw atrans::ParseError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return atrans::parse_hypergraph(buf.str());
}

void set_count_json(json& j, const atrans::BigNat& count) {
    if (count.fits_u64())
        j["count"] = count.as_u64();
    else
        j["count"] = count.to_string();
}

std::string vertex_list(atrans::VertexSet s) {
    std::string line;
    s.for_each([&](int v) {
        if (!line.empty()) line += ' ';
        line += std::to_string(v);
    });
    return line;
}

atrans::Mode parse_mode(const std::string& text) {
    return text == "maximal" ? atrans::Mode::maximal : atrans::Mode::all;
}

void add_count(CLI::App& app, Options& opt) {
    auto* cmd = app.add_subcommand("count", "count A-transversals of a hypergraph");
    auto file = std::make_shared<std::string>("-");
    auto profile = std::make_shared<std::string>();
    auto mode = std::make_shared<std::string>("all");
    auto witnesses = std::make_shared<std::size_t>(0);
    cmd->add_option("file", *file, "hypergraph file, '-' for stdin");
    cmd->add_option("--profile", *profile, "admissible intersection sizes")->required();
    cmd->add_option("--mode", *mode)->check(CLI::IsMember({"all", "maximal"}));
    cmd->add_option("--witnesses", *witnesses, "include up to K sets in the output");
    cmd->callback([&opt, file, profile, mode, witnesses] {
        atrans::Hypergraph h = load_hypergraph(*file);
        atrans::Profile p = atrans::Profile::parse(*profile, h.r());
        auto query = atrans::TransversalQuery::make(h, p, parse_mode(*mode));
        atrans::CountResult res = atrans::run_query(query, *witnesses);
        if (opt.tsv) {
            opt.payload = "n\tr\tprofile\tmode\tcount\n" + std::to_string(h.n()) + "\t" +
                          std::to_string(h.r()) + "\t" + p.to_string() + "\t" + *mode + "\t" +
                          res.count.to_string() + "\n";
            return;
        }
        json j{{"n", h.n()}, {"r", h.r()}, {"profile", p.to_string()}, {"mode", *mode}};
        set_count_json(j, res.count);
        if (*witnesses > 0) {
            json w = json::array();
            for (atrans::VertexSet s : res.witnesses) w.push_back(s.to_indices());
            j["witnesses"] = w;
        }
        opt.payload = j.dump() + "\n";
    });
}

void add_enumerate(CLI::App& app, Options& opt) {
    auto* cmd = app.add_subcommand(
        "enumerate", "stream transversals, one sorted vertex list per line");
    auto file = std::make_shared<std::string>("-");
    auto profile = std::make_shared<std::string>();
    auto mode = std::make_shared<std::string>("all");
    cmd->add_option("file", *file, "hypergraph file, '-' for stdin");
    cmd->add_option("--profile", *profile)->required();
    cmd->add_option("--mode", *mode)->check(CLI::IsMember({"all", "maximal"}));
    cmd->callback([&opt, file, profile, mode] {
        atrans::Hypergraph h = load_hypergraph(*file);
        atrans::Profile p = atrans::Profile::parse(*profile, h.r());
        std::string out;
        if (parse_mode(*mode) == atrans::Mode::all) {
            atrans::for_each_transversal(h, p, [&](atrans::VertexSet s) {
                out += vertex_list(s);
                out += '\n';
                return true;
            });
        } else {
            for (atrans::VertexSet s : atrans::enumerate_maximal(h, p)) {
                out += vertex_list(s);
                out += '\n';
            }
        }
        opt.payload = std::move(out);
    });
}

void add_construct(CLI::App& app, Options& opt) {
    auto* cmd = app.add_subcommand("construct", "emit a catalog hypergraph");
    auto kind = std::make_shared<std::string>();
    auto n = std::make_shared<int>(0);
    auto r = std::make_shared<int>(0);
    auto profile = std::make_shared<std::string>();
    cmd->add_option("kind", *kind,
                    "matching | msis-extremal | star | component-packing | sunflower | "
                    "parity-overlap | complete")
        ->required();
    cmd->add_option("--n", *n, "vertex count")->required();
    cmd->add_option("--r", *r, "uniformity (implied 2 for star, 3 for msis-extremal)");
    cmd->add_option("--profile", *profile, "profile (sunflower only)");
    cmd->callback([&opt, kind, n, r, profile] {
        auto k = atrans::construction_kind_from_token(*kind);
        if (!k) throw atrans::ParseError("unknown construction kind '" + *kind + "'");
        atrans::ConstructionSpec spec;
        spec.kind = *k;
        spec.n = *n;
        spec.r = *r;
        if (*k == atrans::ConstructionKind::star) spec.r = 2;
        if (*k == atrans::ConstructionKind::msis_extremal) spec.r = 3;
        if (spec.r <= 0) throw atrans::ParseError("this construction needs --r");
        if (*k == atrans::ConstructionKind::sunflower) {
            if (profile->empty()) throw atrans::ParseError("sunflower needs --profile");
            spec.profile = atrans::Profile::parse(*profile, spec.r);
        }
        opt.payload = atrans::serialize_hypergraph(atrans::build_construction(spec));
    });
}

json exact_json(const atrans::Rational& v) {
    return json{{"exact", v.to_string()}, {"approx", v.to_double()}};
}

void add_bounds(CLI::App& app, Options& opt) {
    auto* cmd = app.add_subcommand("bounds", "closed-form extremal values");
    cmd->require_subcommand(1);

    auto emit = [&opt](json j, const std::string& tsv_header, const std::string& tsv_row) {
        opt.payload = opt.tsv ? tsv_header + "\n" + tsv_row + "\n" : j.dump() + "\n";
    };

    auto* mm = cmd->add_subcommand("mm", "largest number of maximal independent sets");
    auto mm_n = std::make_shared<long long>(0);
    mm->add_option("n", *mm_n)->required();
    mm->callback([emit, mm_n] {
        atrans::Rational v = atrans::moon_moser(*mm_n);
        json j = exact_json(v);
        j["name"] = "mm";
        j["n"] = *mm_n;
        emit(j, "name\tn\texact\tapprox",
             "mm\t" + std::to_string(*mm_n) + "\t" + v.to_string() + "\t" +
                 std::to_string(v.to_double()));
    });

    auto* g = cmd->add_subcommand(
        "g", "bound for maximal strongly independent sets in 3-uniform hosts");
    auto g_n = std::make_shared<long long>(0);
    g->add_option("n", *g_n)->required();
    g->callback([emit, g_n] {
        atrans::Rational v = atrans::msis_bound(*g_n);
        json j = exact_json(v);
        j["name"] = "g";
        j["n"] = *g_n;
        emit(j, "name\tn\texact\tapprox",
             "g\t" + std::to_string(*g_n) + "\t" + v.to_string() + "\t" +
                 std::to_string(v.to_double()));
    });

    auto* table = cmd->add_subcommand("table1", "extremal values over graphs");
    auto t_profile = std::make_shared<std::string>();
    auto t_n = std::make_shared<long long>(0);
    auto t_which = std::make_shared<std::string>("g");
    table->add_option("--profile", *t_profile)->required();
    table->add_option("--n", *t_n)->required();
    table->add_option("--which", *t_which)->check(CLI::IsMember({"g", "h"}));
    table->callback([emit, t_profile, t_n, t_which] {
        atrans::Profile p = atrans::Profile::parse(*t_profile, 2);
        auto which = *t_which == "g" ? atrans::GraphStat::all_transversals
                                     : atrans::GraphStat::maximal_transversals;
        auto v = atrans::graph_table_value(p, *t_n, which);
        json j{{"name", "table1"}, {"profile", p.to_string()}, {"n", *t_n},
               {"which", *t_which}};
        std::string text = v ? v->to_string() : "undefined";
        if (v) {
            j["exact"] = v->to_string();
            j["approx"] = v->to_double();
        } else {
            j["exact"] = "undefined";
        }
        emit(j, "name\tprofile\tn\twhich\texact",
             "table1\t" + p.to_string() + "\t" + std::to_string(*t_n) + "\t" + *t_which +
                 "\t" + text);
    });

    auto* parity = cmd->add_subcommand("parity", "even/odd profile extremal count");
    auto p_r = std::make_shared<int>(0);
    auto p_n = std::make_shared<long long>(0);
    parity->add_option("--r", *p_r)->required();
    parity->add_option("--n", *p_n)->required();
    parity->callback([emit, p_r, p_n] {
        atrans::BigNat v = atrans::parity_bound(*p_r, *p_n);
        json j{{"name", "parity"}, {"r", *p_r}, {"n", *p_n}, {"exact", v.to_string()},
               {"approx", v.to_double()}};
        emit(j, "name\tr\tn\texact",
             "parity\t" + std::to_string(*p_r) + "\t" + std::to_string(*p_n) + "\t" +
                 v.to_string());
    });

    auto* prop = cmd->add_subcommand("prop1", "elementary special-profile identities");
    auto c_case = std::make_shared<std::string>();
    auto c_r = std::make_shared<int>(0);
    auto c_n = std::make_shared<long long>(0);
    prop->add_option("--case", *c_case, "i..vii")
        ->required()
        ->check(CLI::IsMember({"i", "ii", "iii", "iv", "v", "vi", "vii"}));
    prop->add_option("--r", *c_r)->required();
    prop->add_option("--n", *c_n)->required();
    prop->callback([emit, c_case, c_r, c_n] {
        atrans::ElementaryCase c;
        if (*c_case == "i") c = atrans::ElementaryCase::single_zero;
        else if (*c_case == "ii") c = atrans::ElementaryCase::contains_r;
        else if (*c_case == "iii") c = atrans::ElementaryCase::single_r;
        else if (*c_case == "iv") c = atrans::ElementaryCase::full_range;
        else if (*c_case == "v") c = atrans::ElementaryCase::zero_or_r;
        else if (*c_case == "vi") c = atrans::ElementaryCase::complement_pair;
        else c = atrans::ElementaryCase::singleton_profile;
        atrans::ElementaryResult res = atrans::elementary_value(c, *c_r, *c_n);
        json j{{"name", "prop1"}, {"case", *c_case}, {"r", *c_r}, {"n", *c_n},
               {"relation", res.relation}};
        std::string text = res.value ? res.value->to_string() : "relation";
        if (res.value) {
            j["exact"] = res.value->to_string();
            j["approx"] = res.value->to_double();
        }
        emit(j, "name\tcase\tr\tn\texact",
             "prop1\t" + *c_case + "\t" + std::to_string(*c_r) + "\t" +
                 std::to_string(*c_n) + "\t" + text);
    });

    auto* expo = cmd->add_subcommand("exponent", "optimal block size for the growth base");
    auto e_profile = std::make_shared<std::string>();
    auto e_r = std::make_shared<int>(0);
    expo->add_option("--profile", *e_profile)->required();
    expo->add_option("--r", *e_r)->required();
    expo->callback([emit, e_profile, e_r] {
        atrans::Profile p = atrans::Profile::parse(*e_profile, *e_r);
        atrans::ExponentChoice c = atrans::best_exponent(p, *e_r);
        json j{{"name", "exponent"}, {"profile", p.to_string()}, {"r", *e_r}, {"p", c.p},
               {"i", c.offset}, {"f", c.f.to_string()}, {"base", c.base}};
        emit(j, "name\tprofile\tr\tp\ti\tf",
             "exponent\t" + p.to_string() + "\t" + std::to_string(*e_r) + "\t" +
                 std::to_string(c.p) + "\t" + std::to_string(c.offset) + "\t" +
                 c.f.to_string());
    });
}

void add_search(CLI::App& app, Options& opt) {
    auto* cmd = app.add_subcommand("search-extremal",
                                   "exhaustive extremal search with witness");
    auto n_text = std::make_shared<std::string>();
    auto r = std::make_shared<int>(0);
    auto profile = std::make_shared<std::string>();
    auto mode = std::make_shared<std::string>("all");
    auto no_isolated = std::make_shared<bool>(false);
    auto iso = std::make_shared<bool>(false);
    auto workers = std::make_shared<int>(1);
    cmd->add_option("--n", *n_text, "vertex count, or range 'lo..hi'")->required();
    cmd->add_option("--r", *r)->required();
    cmd->add_option("--profile", *profile)->required();
    cmd->add_option("--mode", *mode)->check(CLI::IsMember({"all", "maximal"}));
    cmd->add_flag("--no-isolated", *no_isolated, "restrict hosts to isolated-free ones");
    cmd->add_flag("--iso", *iso, "walk one representative per isomorphism class");
    cmd->add_option("--workers", *workers);
    cmd->callback([&opt, n_text, r, profile, mode, no_isolated, iso, workers] {
        int lo = 0, hi = 0;
        std::size_t dots = n_text->find("..");
        try {
            if (dots == std::string::npos) {
                lo = hi = std::stoi(*n_text);
            } else {
                lo = std::stoi(n_text->substr(0, dots));
                hi = std::stoi(n_text->substr(dots + 2));
            }
        } catch (const std::exception&) {
            throw atrans::ParseError("bad --n value '" + *n_text + "'");
        }
        atrans::Profile p = atrans::Profile::parse(*profile, *r);
        std::vector<atrans::SearchReport> reports = atrans::scan_range(
            *r, lo, hi, p, parse_mode(*mode), *no_isolated, *iso, *workers);
        for (const atrans::SearchReport& rep : reports)
            std::cerr << "# n=" << rep.space.n << " explored=" << rep.explored
                      << " elapsed_ms=" << rep.elapsed.count() / 1000.0 << "\n";
        if (opt.tsv) {
            std::string out = "n\tr\tprofile\tmode\tno_isolated\tiso\tmaximum\texplored\n";
            for (const atrans::SearchReport& rep : reports)
                out += std::to_string(rep.space.n) + "\t" + std::to_string(rep.space.r) +
                       "\t" + rep.profile + "\t" + *mode + "\t" +
                       (rep.space.no_isolated ? "1" : "0") + "\t" +
                       (rep.space.iso_reduce ? "1" : "0") + "\t" +
                       std::to_string(rep.maximum) + "\t" + std::to_string(rep.explored) +
                       "\n";
            opt.payload = std::move(out);
            return;
        }
        if (reports.size() == 1) {
            opt.payload = atrans::to_json(reports[0]).dump() + "\n";
        } else {
            json arr = json::array();
            for (const atrans::SearchReport& rep : reports) arr.push_back(atrans::to_json(rep));
            opt.payload = arr.dump() + "\n";
        }
    });
}

void add_verify(CLI::App& app, Options& opt) {
    auto* cmd = app.add_subcommand("verify", "replay the whole verification battery");
    auto level = std::make_shared<std::string>("quick");
    auto fault = std::make_shared<std::string>();
    cmd->add_option("--level", *level)->check(CLI::IsMember({"quick", "full"}));
    cmd->add_option("--inject-fault", *fault,
                    "testing hook: corrupt a named formula (msis-bound)")
        ->check(CLI::IsMember({"msis-bound"}));
    cmd->callback([&opt, level, fault] {
        atrans::FaultInjection faults;
        faults.corrupt_msis_bound = (*fault == "msis-bound");
        atrans::VerificationReport rep = atrans::run_verification(
            *level == "full" ? atrans::VerifyLevel::full : atrans::VerifyLevel::quick,
            fault->empty() ? nullptr : &faults);
        for (const atrans::CheckResult& c : rep.checks)
            std::cerr << "# " << (c.pass ? "pass" : "FAIL") << " " << c.name << " ("
                      << c.millis << " ms)\n";
        if (opt.tsv) {
            std::string out = "name\texpected\tobserved\tpass\n";
            for (const atrans::CheckResult& c : rep.checks)
                out += c.name + "\t" + c.expected + "\t" + c.observed + "\t" +
                       (c.pass ? "1" : "0") + "\n";
            opt.payload = std::move(out);
        } else {
            opt.payload = atrans::to_json(rep).dump() + "\n";
        }
        if (!rep.all_pass()) opt.exit_code = 1;
    });
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact enumeration, counting and extremal search of A-transversals "
                 "in uniform hypergraphs"};
    app.require_subcommand(1);
    Options opt;
    app.add_flag("--tsv", opt.tsv, "tabular output instead of JSON");
    app.add_option("--out", opt.out_path, "write the payload to FILE instead of stdout");

    add_count(app, opt);
    add_enumerate(app, opt);
    add_construct(app, opt);
    add_bounds(app, opt);
    add_search(app, opt);
    add_verify(app, opt);

    // --tsv / --out are accepted anywhere on the line
    std::function<void(CLI::App*)> allow_globals = [&](CLI::App* cmd) {
        cmd->fallthrough();
        for (CLI::App* sub : cmd->get_subcommands([](CLI::App*) { return true; }))
            allow_globals(sub);
    };
    for (CLI::App* sub : app.get_subcommands([](CLI::App*) { return true; }))
        allow_globals(sub);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const atrans::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    if (opt.out_path.empty()) {
        std::cout << opt.payload;
    } else {
        std::ofstream out(opt.out_path);
        if (!out) {
            std::cerr << "error: cannot write '" << opt.out_path << "'\n";
            return 2;
        }
        out << opt.payload;
    }
    return opt.exit_code;
}
