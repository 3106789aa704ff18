#include "hw/characters.hpp"
#include "hw/group_algebra.hpp"
#include "hw/hurwitz.hpp"
#include "hw/parallel.hpp"
#include "hw/partition.hpp"
#include "hw/tau_series.hpp"
#include "hw/verify.hpp"
#include "hw/weightgen.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

using json = nlohmann::ordered_json;
using namespace hw;

namespace {

Partition parse_partition(const std::string& s) {
    std::string t = s;
    if (!t.empty() && t.front() == '[') t = t.substr(1);
    if (!t.empty() && t.back() == ']') t.pop_back();
    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos < t.size()) {
        std::size_t comma = t.find(',', pos);
        std::string tok = comma == std::string::npos ? t.substr(pos) : t.substr(pos, comma - pos);
        if (!tok.empty()) parts.push_back(std::stoi(tok));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return Partition(std::move(parts));
}

std::vector<Partition> parse_profiles(const std::string& s) {
    std::vector<Partition> out;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t semi = s.find(';', pos);
        std::string tok = semi == std::string::npos ? s.substr(pos) : s.substr(pos, semi - pos);
        if (!tok.empty()) out.push_back(parse_partition(tok));
        if (semi == std::string::npos) break;
        pos = semi + 1;
    }
    return out;
}

json partition_json(const Partition& p) { return json(p.parts()); }

void emit(const std::string& text, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(output_path);
        f << text;
    }
}

struct Options {
    std::string format = "json";
    std::string output;
    unsigned width = 1;
};

json hurwitz_rows(const HurwitzTable& t) {
    json rows = json::array();
    for (int d = 0; d <= t.D; ++d)
        for (std::size_t i = 0; i < t.parts.size(); ++i)
            for (std::size_t j = 0; j < t.parts.size(); ++j) {
                json row;
                row["d"] = d;
                row["mu"] = partition_json(t.parts[i]);
                row["nu"] = partition_json(t.parts[j]);
                row["value"] = to_string(t.values[d][i][j]);
                auto g = genus(t.parts[i], t.parts[j], d);
                if (g) row["genus"] = *g;
                else row["genus"] = nullptr;
                rows.push_back(std::move(row));
            }
    return rows;
}

std::string render_table_csv(const CharacterTable& tab) {
    std::string out = "lambda\\mu";
    auto pstr = [](const Partition& p) {
        std::string s = "(";
        for (std::size_t i = 0; i < p.parts().size(); ++i)
            s += (i ? " " : "") + std::to_string(p.parts()[i]);
        return s + ")";
    };
    for (const auto& mu : tab.partitions()) out += "," + pstr(mu);
    out += "\n";
    for (std::size_t i = 0; i < tab.partitions().size(); ++i) {
        out += pstr(tab.partitions()[i]);
        for (std::size_t j = 0; j < tab.partitions().size(); ++j)
            out += "," + to_string(tab.chi(i, j));
        out += "\n";
    }
    return out;
}

int run(int argc, char** argv) {
    CLI::App app{"Exact classical and weighted double Hurwitz numbers"};
    app.require_subcommand(1);
    app.fallthrough();
    Options opt;
    app.add_option("--format", opt.format, "json|csv|pretty")->capture_default_str();
    app.add_option("--output", opt.output, "write to file instead of stdout");
    app.add_option("--width", opt.width, "worker pool width")->capture_default_str();

    // characters --n N
    int ch_n = 0;
    auto* characters = app.add_subcommand("characters", "irreducible character table of S_n");
    characters->add_option("--n", ch_n)->required();

    // frobenius --profiles
    std::string frob_profiles;
    auto* frobenius = app.add_subcommand("frobenius", "brute-force factorization count");
    frobenius->add_option("--profiles", frob_profiles)->required();

    // paths count --n --mu --nu --signature
    auto* paths = app.add_subcommand("paths", "transposition path enumeration");
    auto* paths_count = paths->add_subcommand("count", "class-averaged signature count");
    int pc_n = 0;
    std::string pc_mu, pc_nu, pc_sig;
    paths_count->add_option("--n", pc_n)->required();
    paths_count->add_option("--mu", pc_mu)->required();
    paths_count->add_option("--nu", pc_nu)->required();
    paths_count->add_option("--signature", pc_sig)->required();

    // hurwitz classical / weighted
    auto* hurwitz = app.add_subcommand("hurwitz", "double Hurwitz numbers");
    auto* hw_classical = hurwitz->add_subcommand("classical", "character-formula Hurwitz number");
    std::string hc_profiles;
    hw_classical->add_option("--profiles", hc_profiles)->required();
    auto* hw_weighted = hurwitz->add_subcommand("weighted", "weighted table for one generator");
    std::string ww_preset, ww_route = "character";
    int ww_n = 0, ww_degree = 0;
    hw_weighted->add_option("--preset", ww_preset)->required();
    hw_weighted->add_option("--n", ww_n)->required();
    hw_weighted->add_option("--degree", ww_degree)->required();
    hw_weighted->add_option("--route", ww_route, "character|paths|geometric|all")
        ->capture_default_str();

    // tau table
    auto* tau = app.add_subcommand("tau", "hypergeometric tau-function blocks");
    auto* tau_table = tau->add_subcommand("table", "double power-sum coefficient block");
    std::string tt_preset;
    int tt_n = 0, tt_degree = 0;
    tau_table->add_option("--preset", tt_preset)->required();
    tau_table->add_option("--n", tt_n)->required();
    tau_table->add_option("--degree", tt_degree)->required();

    // multispecies --n --factors "preset@degree;..."
    auto* multi = app.add_subcommand("multispecies", "matrix product of weighted tables");
    std::string ms_factors;
    int ms_n = 0;
    multi->add_option("--n", ms_n)->required();
    multi->add_option("--factors", ms_factors, "semicolon list of preset@degree")->required();

    // macdonald decompose
    auto* mac = app.add_subcommand("macdonald", "Macdonald-deformed numbers");
    auto* mac_dec = mac->add_subcommand("decompose", "t-polynomial coefficients of H^d");
    std::string md_q, md_samples, md_c, md_mu, md_nu;
    int md_degree = 0;
    mac_dec->add_option("--q", md_q)->required();
    mac_dec->add_option("--t-samples", md_samples, "comma list; default d+2 values k/(d+3)");
    mac_dec->add_option("--c", md_c)->required();
    mac_dec->add_option("--mu", md_mu)->required();
    mac_dec->add_option("--nu", md_nu)->required();
    mac_dec->add_option("--degree", md_degree)->required();

    // verify --suite core --n N
    auto* verify = app.add_subcommand("verify", "one-shot verification suites");
    std::string vs_suite = "core";
    int vs_n = 4, vs_degree = 3;
    verify->add_option("--suite", vs_suite)->capture_default_str();
    verify->add_option("--n", vs_n)->capture_default_str();
    verify->add_option("--degree", vs_degree)->capture_default_str();

    // seed-table: golden fixtures
    auto* seed = app.add_subcommand("seed-table", "dump golden regression tables");
    int st_n = 3, st_degree = 3;
    seed->add_option("--n", st_n)->capture_default_str();
    seed->add_option("--degree", st_degree)->capture_default_str();

    CLI11_PARSE(app, argc, argv);
    set_parallel_width(opt.width);

    if (*characters) {
        const auto& tab = CharacterTable::get(ch_n);
        if (opt.format == "csv" || opt.format == "pretty") {
            emit(render_table_csv(tab), opt.output);
        } else {
            json out;
            out["n"] = ch_n;
            out["partitions"] = json::array();
            for (const auto& p : tab.partitions()) out["partitions"].push_back(partition_json(p));
            out["entries"] = json::array();
            for (std::size_t i = 0; i < tab.partitions().size(); ++i) {
                json row = json::array();
                for (std::size_t j = 0; j < tab.partitions().size(); ++j)
                    row.push_back(to_string(tab.chi(i, j)));
                out["entries"].push_back(std::move(row));
            }
            emit(out.dump(2) + "\n", opt.output);
        }
        return 0;
    }

    if (*frobenius) {
        auto profiles = parse_profiles(frob_profiles);
        Rat v = frobenius_count(profiles);
        Rat raw = v * Rat(factorial(static_cast<unsigned>(profiles.at(0).weight())));
        json out;
        out["value"] = to_string(v);
        out["count_raw"] = to_string(raw);
        emit(out.dump(2) + "\n", opt.output);
        return 0;
    }

    if (*paths_count) {
        Partition mu = parse_partition(pc_mu), nu = parse_partition(pc_nu),
                  sig = parse_partition(pc_sig);
        if (mu.weight() != pc_n || nu.weight() != pc_n)
            throw std::invalid_argument("paths count: --mu/--nu must have weight --n");
        Rat v = count_paths_by_signature(mu, nu, sig);
        json out;
        out["value"] = to_string(v);
        out["count_raw"] = to_string(v * Rat(conjugacy_class(mu).size()));
        emit(out.dump(2) + "\n", opt.output);
        return 0;
    }

    if (*hw_classical) {
        json out;
        out["value"] = to_string(hurwitz_classical(parse_profiles(hc_profiles)));
        emit(out.dump(2) + "\n", opt.output);
        return 0;
    }

    if (*hw_weighted) {
        WeightGenerator g = WeightGenerator::parse(ww_preset);
        HurwitzTable t = weighted_H_character_table(g, ww_n, ww_degree);
        if (ww_route == "paths" || ww_route == "geometric" || ww_route == "all") {
            for (int d = 0; d <= ww_degree; ++d)
                for (std::size_t i = 0; i < t.parts.size(); ++i)
                    for (std::size_t j = 0; j < t.parts.size(); ++j) {
                        Rat other = (ww_route == "geometric")
                                        ? weighted_H_geometric(g, t.parts[i], t.parts[j], d)
                                        : weighted_F_paths(g, t.parts[i], t.parts[j], d);
                        if (other != t.values[d][i][j]) {
                            json err;
                            err["error"] = "route mismatch";
                            err["preset"] = ww_preset;
                            err["d"] = d;
                            err["mu"] = partition_json(t.parts[i]);
                            err["nu"] = partition_json(t.parts[j]);
                            err["character"] = to_string(t.values[d][i][j]);
                            err[ww_route == "geometric" ? "geometric" : "paths"] =
                                to_string(other);
                            emit(err.dump(2) + "\n", opt.output);
                            return 1;
                        }
                        if (ww_route == "all") {
                            Rat geo = weighted_H_geometric(g, t.parts[i], t.parts[j], d);
                            if (geo != t.values[d][i][j]) {
                                json err;
                                err["error"] = "route mismatch";
                                err["preset"] = ww_preset;
                                err["d"] = d;
                                err["mu"] = partition_json(t.parts[i]);
                                err["nu"] = partition_json(t.parts[j]);
                                err["character"] = to_string(t.values[d][i][j]);
                                err["geometric"] = to_string(geo);
                                emit(err.dump(2) + "\n", opt.output);
                                return 1;
                            }
                        }
                    }
        }
        json out;
        out["generator"] = t.generator;
        out["n"] = t.n;
        out["route"] = ww_route;
        out["rows"] = hurwitz_rows(t);
        emit(out.dump(2) + "\n", opt.output);
        return 0;
    }

    if (*tau_table) {
        TauTable t = toda_block(WeightGenerator::parse(tt_preset), tt_n, tt_degree);
        json out;
        out["n"] = t.n;
        out["degree"] = t.D;
        out["powersum"] = json::array();
        for (const auto& [key, v] : t.powersum_coeffs) {
            json row;
            row["d"] = std::get<0>(key);
            row["mu"] = partition_json(std::get<1>(key));
            row["nu"] = partition_json(std::get<2>(key));
            row["value"] = to_string(v);
            out["powersum"].push_back(std::move(row));
        }
        emit(out.dump(2) + "\n", opt.output);
        return 0;
    }

    if (*multi) {
        std::vector<std::pair<WeightGenerator, int>> factors;
        for (std::size_t pos = 0; pos <= ms_factors.size();) {
            std::size_t semi = ms_factors.find(';', pos);
            std::string tok = semi == std::string::npos ? ms_factors.substr(pos)
                                                        : ms_factors.substr(pos, semi - pos);
            if (!tok.empty()) {
                std::size_t at = tok.rfind('@');
                if (at == std::string::npos)
                    throw std::invalid_argument("multispecies factor needs preset@degree: " + tok);
                factors.emplace_back(WeightGenerator::parse(tok.substr(0, at)),
                                     std::stoi(tok.substr(at + 1)));
            }
            if (semi == std::string::npos) break;
            pos = semi + 1;
        }
        auto m = multispecies_F(factors, ms_n);
        auto parts = all_partitions(ms_n);
        json out;
        out["n"] = ms_n;
        out["rows"] = json::array();
        for (std::size_t i = 0; i < parts.size(); ++i)
            for (std::size_t j = 0; j < parts.size(); ++j) {
                json row;
                row["mu"] = partition_json(parts[i]);
                row["nu"] = partition_json(parts[j]);
                row["value"] = to_string(m[i][j]);
                out["rows"].push_back(std::move(row));
            }
        emit(out.dump(2) + "\n", opt.output);
        return 0;
    }

    if (*mac_dec) {
        std::vector<Rat> samples;
        if (!md_samples.empty()) {
            for (std::size_t pos = 0; pos <= md_samples.size();) {
                std::size_t comma = md_samples.find(',', pos);
                std::string tok = comma == std::string::npos
                                      ? md_samples.substr(pos)
                                      : md_samples.substr(pos, comma - pos);
                if (!tok.empty()) samples.push_back(parse_rational(tok));
                if (comma == std::string::npos) break;
                pos = comma + 1;
            }
        } else {
            for (int k = 1; k <= md_degree + 2; ++k) samples.emplace_back(k, md_degree + 3);
        }
        std::vector<Rat> cvals;
        for (std::size_t pos = 0; pos <= md_c.size();) {
            std::size_t comma = md_c.find(',', pos);
            std::string tok =
                comma == std::string::npos ? md_c.substr(pos) : md_c.substr(pos, comma - pos);
            if (!tok.empty()) cvals.push_back(parse_rational(tok));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        auto coeffs = macdonald_decompose(parse_rational(md_q), samples, cvals,
                                          parse_partition(md_mu), parse_partition(md_nu),
                                          md_degree);
        json out;
        out["coefficients"] = json::array();
        for (const auto& c : coeffs) out["coefficients"].push_back(to_string(c));
        emit(out.dump(2) + "\n", opt.output);
        return 0;
    }

    if (*verify) {
        if (vs_suite != "core") throw std::invalid_argument("unknown suite: " + vs_suite);
        VerifyResult r = verify_core(vs_n, vs_degree);
        emit(r.report, opt.output);
        return r.ok ? 0 : 1;
    }

    if (*seed) {
        static const char* kPresets[] = {"exp", "E",          "Ek:2",           "Ek:3",
                                         "H",   "Eprime:1/3", "classical:1,1/2"};
        json out = json::array();
        for (const char* name : kPresets) {
            HurwitzTable t =
                weighted_H_character_table(WeightGenerator::parse(name), st_n, st_degree);
            json entry;
            entry["generator"] = t.generator;
            entry["n"] = t.n;
            entry["degree"] = t.D;
            entry["rows"] = hurwitz_rows(t);
            out.push_back(std::move(entry));
        }
        emit(out.dump(2) + "\n", opt.output);
        return 0;
    }

    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        json err;
        err["error"] = e.what();
        std::cout << err.dump(2) << "\n";
        return 1;
    }
}
