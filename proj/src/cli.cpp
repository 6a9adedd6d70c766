#include "kwall/cli.hpp"

#include "kwall/json_io.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <ctime>
#include <fstream>
#include <sstream>

namespace kwall {

namespace {

// Decimal rendering for --approx, by integer long division (display only).
std::string decimal_string(const Rat& r, int digits = 6) {
    BigInt num = r.num() < 0 ? BigInt(-r.num()) : r.num();
    BigInt q = num / r.den(), rem = num % r.den();
    std::string s = (r.sign() < 0 ? "-" : "") + q.str();
    if (digits > 0) {
        s += ".";
        for (int i = 0; i < digits; ++i) {
            rem *= 10;
            s += BigInt(rem / r.den()).str();
            rem %= r.den();
        }
    }
    return s;
}

struct PointSpec {
    enum class Kind { family, last_wall, d1 } kind = Kind::family;
    std::optional<FamilyPoint> point;
    std::vector<Rat> b;
};

PointSpec parse_point(const std::string& s, long n) {
    PointSpec spec;
    if (s == "dss") {
        spec.point = dss_point(n);
        return spec;
    }
    if (s == "zero") {
        spec.point = FamilyPoint(n, Rat(0), std::vector<Rat>(n + 4));
        return spec;
    }
    if (s.rfind("monomial:", 0) == 0) {
        spec.point = monomial_point(n, std::stol(s.substr(9)));
        return spec;
    }
    if (s == "w0d0") {
        spec.kind = PointSpec::Kind::last_wall;
        return spec;
    }
    if (s.rfind("d1:", 0) == 0) {
        spec.kind = PointSpec::Kind::d1;
        std::stringstream ss(s.substr(3));
        std::string item;
        while (std::getline(ss, item, ',')) spec.b.push_back(Rat::parse(item));
        if (spec.b.empty()) throw std::invalid_argument("d1 preset needs coefficients");
        return spec;
    }
    if (!s.empty() && s[0] == '{') {
        json j = json::parse(s);
        if (!j.contains("n")) j["n"] = n;
        spec.point = family_point_from_json(j);
        if (spec.point->n != n)
            throw std::invalid_argument("point JSON disagrees with --n");
        return spec;
    }
    throw std::invalid_argument("unknown point '" + s +
                                "' (expected dss, zero, monomial:<e>, w0d0, d1:<b...>, or JSON)");
}

std::vector<Rat> parse_weight_list(const std::string& s) {
    std::vector<Rat> ws;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) ws.push_back(Rat::parse(item));
    if (ws.empty()) throw std::invalid_argument("empty weight list");
    return ws;
}

void attach_approx(json& j, const Rat& r) { j["approx"] = decimal_string(r); }

std::string render_walls(const WallSchedule& s, const std::string& format, bool approx) {
    if (format == "csv") {
        std::ostringstream os;
        os << "label,value\n";
        for (const auto& [label, value] : s.walls) os << label << "," << value.str() << "\n";
        os << "domain_end," << s.domain_end.str() << "\n";
        return os.str();
    }
    if (format == "md") {
        std::ostringstream os;
        os << "| label | value |\n|---|---|\n";
        for (const auto& [label, value] : s.walls)
            os << "| " << label << " | " << value.str() << " |\n";
        os << "| domain_end | " << s.domain_end.str() << " |\n";
        return os.str();
    }
    json j = to_json(s);
    if (approx) {
        json a = json::array();
        for (const auto& [label, value] : s.walls) a.push_back(decimal_string(value));
        j["walls_approx"] = a;
    }
    return j.dump(2) + "\n";
}

struct BatchRow {
    size_t point_index;
    Rat w;
    json git;
    std::string k_verdict;
    bool agree = false;
    std::string error;
};

std::string render_batch(const std::vector<BatchRow>& rows, const std::string& format) {
    if (format == "csv" || format == "md") {
        std::ostringstream os;
        const char* sep = format == "csv" ? "," : " | ";
        if (format == "csv") {
            os << "point,w,git_semistable,git_polystable,k_verdict,agree,error\n";
        } else {
            os << "| point | w | git_semistable | git_polystable | k_verdict | agree | error |\n"
               << "|---|---|---|---|---|---|---|\n";
        }
        for (const auto& r : rows) {
            std::string gs = r.error.empty() ? (r.git["semistable"].get<bool>() ? "true" : "false") : "";
            std::string gp = r.error.empty() ? (r.git["polystable"].get<bool>() ? "true" : "false") : "";
            if (format == "md") os << "| ";
            os << r.point_index << sep << r.w.str() << sep << gs << sep << gp << sep
               << r.k_verdict << sep << (r.error.empty() ? (r.agree ? "true" : "false") : "")
               << sep << r.error;
            os << (format == "md" ? " |\n" : "\n");
        }
        return os.str();
    }
    json rows_json = json::array();
    for (const auto& r : rows) {
        json j{{"point", r.point_index}, {"w", r.w.str()}};
        if (r.error.empty()) {
            j["git"] = r.git;
            j["k_verdict"] = r.k_verdict;
            j["agree"] = r.agree;
        } else {
            j["error"] = r.error;
        }
        rows_json.push_back(j);
    }
    return rows_json.dump(2) + "\n";
}

FlagPreset parse_preset(const std::string& s) {
    if (s == "special-point-odd") return FlagPreset::special_point_odd;
    if (s == "special-point-even") return FlagPreset::special_point_even;
    if (s == "pz-blowup-odd") return FlagPreset::pz_blowup_odd;
    if (s == "pz-blowup-even") return FlagPreset::pz_blowup_even;
    if (s == "h1") return FlagPreset::h1_flag;
    if (s == "pencil") return FlagPreset::pencil_flag;
    throw std::invalid_argument("unknown preset '" + s + "'");
}

}  // namespace

CliResult run_cli(const std::vector<std::string>& args) {
    CliResult result;
    std::ostringstream out;

    CLI::App app{"exact wall-crossing and K-stability calculator for weighted-plane curve pairs"};
    app.require_subcommand(1);

    long n = 0;
    long l = -1;
    std::string w_str, point_str, format = "json", preset_str, curve_str, points_file,
                weights_str;
    long wall_index = -1;
    int oracle_radius = 30;
    bool oracle = false, approx = false, meta = false;

    auto add_common = [&](CLI::App* cmd, bool needs_n) {
        auto* optn = cmd->add_option("--n", n, "family parameter n");
        cmd->add_option("--l", l, "even-family parameter l (sets n = 2l)");
        if (needs_n) optn->required(false);
        cmd->add_flag("--approx", approx, "add decimal renderings (display only)");
        cmd->add_flag("--meta", meta, "append a metadata line");
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"json", "csv", "md"}));
    };
    auto resolve_n = [&]() {
        if (l >= 1) {
            if (n != 0 && n != 2 * l) throw std::invalid_argument("--n and --l disagree");
            n = 2 * l;
        }
        if (n < 1) throw std::invalid_argument("--n (or --l) is required");
    };

    auto* walls_cmd = app.add_subcommand("walls", "wall schedule for the family");
    add_common(walls_cmd, true);
    walls_cmd->callback([&] {
        resolve_n();
        out << render_walls(enumerate_walls(n), format, approx);
    });

    auto* classify_cmd = app.add_subcommand("classify", "K-stability verdict at a weight");
    add_common(classify_cmd, true);
    classify_cmd->add_option("--point", point_str, "point preset or inline JSON")->required();
    classify_cmd->add_option("--w", w_str, "coefficient w as a rational")->required();
    classify_cmd->add_flag("--oracle", oracle, "cross-check against the GIT brute-force oracle");
    classify_cmd->callback([&] {
        resolve_n();
        Rat w = Rat::parse(w_str);
        PointSpec spec = parse_point(point_str, n);
        json j;
        if (spec.kind == PointSpec::Kind::family) {
            KVerdict v = classify_at(*spec.point, w);
            j["verdict"] = to_string(v);
            j["kss"] = to_json(kss_domain(*spec.point));
            if (oracle) {
                GitVerdict g = git_classify(*spec.point, w);
                GitVerdict o = brute_force_git_oracle(*spec.point, w, oracle_radius);
                j["git"] = to_json(g);
                j["git_oracle"] = to_json(o);
                j["agree"] = g.semistable == o.semistable && g.polystable == o.polystable &&
                             g.semistable == is_semistable(v) && g.polystable == is_polystable(v);
            }
        } else {
            bool is_d0 = spec.kind == PointSpec::Kind::last_wall;
            std::vector<Rat> b = is_d0 ? std::vector<Rat>(n % 2 ? n + 3 : n + 1) : spec.b;
            KVerdict v = d1_stability(n, b, w);
            j["verdict"] = to_string(v);
            j["pair"] = to_json(is_d0 ? last_wall_replacement(n)
                                      : PolystablePair{n % 2 ? PairKind::w0_d1
                                                             : PairKind::wprime_h0_d1,
                                                       n, 0, spec.b});
        }
        out << j.dump(2) << "\n";
    });

    auto* kss_cmd = app.add_subcommand("kss-domain", "exact K-(semi/poly)stable w-sets");
    add_common(kss_cmd, true);
    kss_cmd->add_option("--point", point_str, "point preset or inline JSON")->required();
    kss_cmd->callback([&] {
        resolve_n();
        PointSpec spec = parse_point(point_str, n);
        if (spec.kind != PointSpec::Kind::family)
            throw std::domain_error("kss-domain expects a family point");
        out << to_json(kss_domain(*spec.point)).dump(2) << "\n";
    });

    auto* git_cmd = app.add_subcommand("git", "GIT verdict of a point at a weight");
    add_common(git_cmd, true);
    git_cmd->add_option("--point", point_str, "point preset or inline JSON")->required();
    git_cmd->add_option("--w", w_str, "coefficient w as a rational")->required();
    git_cmd->add_flag("--oracle", oracle, "also run the brute-force sweep");
    git_cmd->add_option("--oracle-radius", oracle_radius, "sweep radius for --oracle");
    git_cmd->callback([&] {
        resolve_n();
        Rat w = Rat::parse(w_str);
        PointSpec spec = parse_point(point_str, n);
        if (spec.kind != PointSpec::Kind::family)
            throw std::domain_error("git expects a family point");
        GitVerdict g = git_classify(*spec.point, w);
        json j = to_json(g);
        j["stratum"] = to_json(stratum_description(n, w));
        auto [cm, ample] = cm_degree(n, w);
        j["cm_degree"] = cm.str();
        j["ample"] = ample;
        if (oracle) {
            GitVerdict o = brute_force_git_oracle(*spec.point, w, oracle_radius);
            j["oracle"] = to_json(o);
            j["agree"] = g.semistable == o.semistable && g.polystable == o.polystable;
        }
        out << j.dump(2) << "\n";
    });

    auto* lct_cmd = app.add_subcommand("lct", "log canonical threshold report");
    add_common(lct_cmd, true);
    lct_cmd->add_option("--point", point_str, "point preset or inline JSON")->required();
    lct_cmd->callback([&] {
        resolve_n();
        PointSpec spec = parse_point(point_str, n);
        if (spec.kind != PointSpec::Kind::family)
            throw std::domain_error("lct expects a family point");
        LctReport r = lct_pair(*spec.point);
        json j = to_json(r);
        if (approx) attach_approx(j, r.lct);
        out << j.dump(2) << "\n";
    });

    auto* degen_cmd = app.add_subcommand("degenerate", "monomial degeneration at a wall");
    add_common(degen_cmd, true);
    degen_cmd->add_option("--point", point_str, "point preset or inline JSON")->required();
    degen_cmd->add_option("--wall", wall_index, "wall index")->required();
    degen_cmd->callback([&] {
        resolve_n();
        PointSpec spec = parse_point(point_str, n);
        if (spec.kind != PointSpec::Kind::family)
            throw std::domain_error("degenerate expects a family point");
        out << to_json(wall_degeneration(*spec.point, wall_index)).dump(2) << "\n";
    });

    auto* nf_cmd = app.add_subcommand("normal-form", "last-wall normal form of a curve");
    add_common(nf_cmd, true);
    nf_cmd->add_option("--curve", curve_str,
                       "curve JSON {\"c2\":..,\"c1\":[..],\"c0\":[..]} or @file")
        ->required();
    nf_cmd->callback([&] {
        resolve_n();
        std::string text = curve_str;
        if (!text.empty() && text[0] == '@') {
            std::ifstream in(text.substr(1));
            if (!in) throw std::invalid_argument("cannot open curve file");
            std::stringstream ss;
            ss << in.rdbuf();
            text = ss.str();
        }
        json j = json::parse(text);
        W0Curve c{n, rat_from_json(j.at("c2")), rats_from_json(j.at("c1")),
                  rats_from_json(j.at("c0"))};
        std::vector<Rat> b = d1_normal_form(n, c);
        out << json{{"b", to_json(b)}}.dump(2) << "\n";
    });

    auto* az_cmd = app.add_subcommand("az", "local delta bound for a flag preset");
    add_common(az_cmd, true);
    az_cmd->add_option("--preset", preset_str, "flag preset")->required();
    az_cmd->add_option("--w", w_str, "coefficient w as a rational")->required();
    az_cmd->callback([&] {
        resolve_n();
        FlagConfig cfg(parse_preset(preset_str), n, Rat::parse(w_str));
        AZReport rep = az_delta_bound(cfg);
        json j = to_json(rep);
        if (cfg.preset == FlagPreset::special_point_odd ||
            cfg.preset == FlagPreset::special_point_even)
            j["critical_weight"] = solve_critical_weight(cfg).str();
        if (approx) attach_approx(j, rep.delta_lower_bound);
        out << j.dump(2) << "\n";
    });

    auto* batch_cmd = app.add_subcommand("batch", "classify a list of points at several weights");
    add_common(batch_cmd, true);
    batch_cmd->add_option("--points", points_file, "JSON file with an array of points")
        ->required();
    batch_cmd->add_option("--weights", weights_str, "comma-separated rational weights")
        ->required();
    batch_cmd->add_flag("--oracle", oracle, "also require brute-force agreement");
    batch_cmd->callback([&] {
        resolve_n();
        std::ifstream in(points_file);
        if (!in) throw std::invalid_argument("cannot open points file");
        json arr = json::parse(in);
        if (!arr.is_array() || arr.empty()) throw std::invalid_argument("points file must hold a nonempty array");
        std::vector<FamilyPoint> points;
        for (size_t i = 0; i < arr.size(); ++i) {
            try {
                json pj = arr[i];
                if (!pj.contains("n")) pj["n"] = n;
                points.push_back(family_point_from_json(pj));
            } catch (const std::exception& e) {
                throw std::invalid_argument("point " + std::to_string(i) + ": " + e.what());
            }
        }
        std::vector<Rat> weights = parse_weight_list(weights_str);
        std::vector<BatchRow> rows;
        bool any_error = false;
        for (size_t i = 0; i < points.size(); ++i) {
            for (const auto& w : weights) {
                BatchRow row;
                row.point_index = i;
                row.w = w;
                try {
                    GitVerdict g = git_classify(points[i], w);
                    KVerdict k = classify_at(points[i], w);
                    row.git = to_json(g);
                    row.k_verdict = to_string(k);
                    row.agree = g.semistable == is_semistable(k) &&
                                g.polystable == is_polystable(k);
                    if (oracle) {
                        GitVerdict o = brute_force_git_oracle(points[i], w, oracle_radius);
                        row.agree = row.agree && o.semistable == g.semistable &&
                                    o.polystable == g.polystable;
                    }
                } catch (const std::domain_error& e) {
                    row.error = e.what();
                    any_error = true;
                }
                rows.push_back(std::move(row));
            }
        }
        out << render_batch(rows, format);
        if (any_error) throw std::domain_error("batch contained error rows");
    });

    std::vector<const char*> argv;
    argv.push_back("kwall");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        std::ostringstream os_out, os_err;
        int code = app.exit(e, os_out, os_err);
        result.out = out.str() + os_out.str();
        result.err = os_err.str();
        result.exit_code = code == 0 ? 0 : 2;
        return result;
    } catch (const std::invalid_argument& e) {
        result.out = out.str();
        result.err = std::string("error: ") + e.what() + "\n";
        result.exit_code = 2;
        return result;
    } catch (const std::domain_error& e) {
        result.out = out.str();
        result.err = std::string("error: ") + e.what() + "\n";
        result.exit_code = 1;
        return result;
    } catch (const std::exception& e) {
        result.out = out.str();
        result.err = std::string("error: ") + e.what() + "\n";
        result.exit_code = 1;
        return result;
    }

    result.out = out.str();
    if (meta) {
        auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
        char buf[64];
        std::strftime(buf, sizeof(buf), "%FT%TZ", std::gmtime(&now));
        result.out += std::string("# meta: generated-at=") + buf + "\n";
    }
    return result;
}

}  // namespace kwall
