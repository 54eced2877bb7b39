#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "lcprof/complexity.hpp"
#include "lcprof/oracle.hpp"
#include "lcprof/sequence.hpp"

namespace {

using nlohmann::json;

struct CommonOpts {
    int p = 0;
    int m = 1;
    int n = 0;
    std::string modulus;
    std::string input;
    std::string inline_seq;
    std::string format = "text";
};

void add_field_opts(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--p", o.p, "prime characteristic")->required();
    cmd->add_option("--m", o.m, "extension degree (default 1)");
    cmd->add_option("--n", o.n, "level exponent, period = p^n")->required();
    cmd->add_option("--modulus", o.modulus,
                    "modulus coefficients over GF(p), low degree first (e.g. 1,1,1 for x^2+x+1)");
    cmd->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));
}

void add_input_opts(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--input", o.input, "sequence file holding one period");
    cmd->add_option("--seq", o.inline_seq, "inline sequence text");
}

std::vector<int> parse_modulus(const std::string& text) {
    std::vector<int> coeffs;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        try {
            std::size_t used = 0;
            const int v = std::stoi(token, &used);
            if (used != token.size()) throw std::invalid_argument(token);
            coeffs.push_back(v);
        } catch (const std::exception&) {
            throw lcprof::BadModulus("cannot parse modulus coefficient '" + token + "'");
        }
    }
    return coeffs;
}

lcprof::Field make_field_from(const CommonOpts& o) {
    return lcprof::make_field(o.p, o.m, o.modulus.empty() ? std::vector<int>{} : parse_modulus(o.modulus));
}

lcprof::Sequence load_sequence(const CommonOpts& o) {
    if (o.input.empty() == o.inline_seq.empty())
        throw lcprof::Error("exactly one of --input or --seq must be given");
    const lcprof::Field field = make_field_from(o);
    std::string text;
    if (!o.input.empty()) {
        std::ifstream in(o.input);
        if (!in) throw lcprof::Error("cannot open '" + o.input + "'");
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    } else {
        text = o.inline_seq;
    }
    return lcprof::parse_sequence(text, field, o.n);
}

json base_json(const CommonOpts& o) {
    return json{{"p", o.p}, {"m", o.m}, {"n", o.n}};
}

json trace_json(const std::vector<lcprof::LevelTrace>& trace) {
    json arr = json::array();
    for (const auto& level : trace)
        arr.push_back(json{{"M", level.m}, {"TB", level.tb}, {"w", level.w}});
    return arr;
}

json points_json(const lcprof::TightProfile& prof) {
    json arr = json::array();
    for (const auto& pt : prof.points) arr.push_back(json::array({pt.k, pt.c}));
    return arr;
}

void print_trace_text(const std::vector<lcprof::LevelTrace>& trace) {
    for (const auto& level : trace) {
        std::cout << "M=" << level.m << ": ";
        for (std::size_t u = 0; u < level.tb.size(); ++u)
            std::cout << "TB[" << u << "]=" << level.tb[u] << ",";
        std::cout << "w=" << level.w << "\n";
    }
}

void run_lc(const CommonOpts& o) {
    const lcprof::Sequence s = load_sequence(o);
    const int lc = lcprof::linear_complexity_gc(s);
    if (o.format == "json") {
        json out = base_json(o);
        out["k"] = 0;
        out["klc"] = lc;
        std::cout << out.dump() << "\n";
    } else if (o.format == "csv") {
        std::cout << "lc\n" << lc << "\n";
    } else {
        std::cout << "lc=" << lc << "\n";
    }
}

void run_klc(const CommonOpts& o, int k, bool trace) {
    const lcprof::Sequence s = load_sequence(o);
    const lcprof::AnalysisResult r = lcprof::k_error_lc(s, k);
    if (o.format == "json") {
        json out = base_json(o);
        out["k"] = r.k;
        out["klc"] = r.klc;
        if (r.tmin) out["tmin"] = *r.tmin;
        if (trace) out["trace"] = trace_json(r.trace);
        std::cout << out.dump() << "\n";
    } else if (o.format == "csv") {
        std::cout << "k,klc,tmin\n" << r.k << "," << r.klc << ",";
        if (r.tmin) std::cout << *r.tmin;
        std::cout << "\n";
    } else {
        if (trace) print_trace_text(r.trace);
        std::cout << "k=" << r.k << " klc=" << r.klc;
        if (r.tmin) std::cout << " tmin=" << *r.tmin;
        std::cout << "\n";
    }
}

void run_tight(const CommonOpts& o, std::optional<int> count) {
    const lcprof::Sequence s = load_sequence(o);
    const lcprof::TightProfile prof = lcprof::tight_profile(s, count);
    if (o.format == "json") {
        json out = base_json(o);
        out["points"] = points_json(prof);
        std::cout << out.dump() << "\n";
    } else if (o.format == "csv") {
        std::cout << "k,c\n";
        for (const auto& pt : prof.points) std::cout << pt.k << "," << pt.c << "\n";
    } else {
        for (const auto& pt : prof.points) std::cout << "(" << pt.k << "," << pt.c << ")\n";
    }
}

void run_oracle(const CommonOpts& o, std::optional<int> k, bool profile, long long budget) {
    const lcprof::Sequence s = load_sequence(o);
    if (profile) {
        const auto brute = lcprof::oracle::brute_force_profile(s, budget);
        const auto tight = lcprof::tight_profile(s);
        bool match = brute.size() == tight.points.size();
        for (std::size_t i = 0; match && i < brute.size(); ++i)
            match = brute[i].k == tight.points[i].k && brute[i].lc == tight.points[i].c;
        if (o.format == "json") {
            json out = base_json(o);
            json bp = json::array();
            for (const auto& pt : brute) bp.push_back(json::array({pt.k, pt.lc}));
            out["brute_points"] = bp;
            out["points"] = points_json(tight);
            out["match"] = match;
            std::cout << out.dump() << "\n";
        } else if (o.format == "csv") {
            std::cout << "k,c\n";
            for (const auto& pt : brute) std::cout << pt.k << "," << pt.lc << "\n";
            std::cout << "match," << (match ? "true" : "false") << "\n";
        } else {
            for (const auto& pt : brute) std::cout << "(" << pt.k << "," << pt.lc << ")\n";
            std::cout << (match ? "MATCH" : "MISMATCH") << "\n";
        }
    } else if (k) {
        const int brute = lcprof::oracle::brute_force_klc(s, *k, budget);
        const int fast = lcprof::k_error_lc(s, *k).klc;
        const bool match = brute == fast;
        if (o.format == "json") {
            json out = base_json(o);
            out["k"] = *k;
            out["brute_klc"] = brute;
            out["klc"] = fast;
            out["match"] = match;
            std::cout << out.dump() << "\n";
        } else if (o.format == "csv") {
            std::cout << "k,brute_klc,klc,match\n"
                      << *k << "," << brute << "," << fast << "," << (match ? "true" : "false") << "\n";
        } else {
            std::cout << "brute_klc=" << brute << " " << (match ? "MATCH" : "MISMATCH") << "\n";
        }
    } else {
        const int bm = lcprof::oracle::berlekamp_massey(s);
        const int gc = lcprof::linear_complexity_gc(s);
        const bool match = bm == gc;
        if (o.format == "json") {
            json out = base_json(o);
            out["bm_lc"] = bm;
            out["lc"] = gc;
            out["match"] = match;
            std::cout << out.dump() << "\n";
        } else if (o.format == "csv") {
            std::cout << "bm_lc,lc,match\n"
                      << bm << "," << gc << "," << (match ? "true" : "false") << "\n";
        } else {
            std::cout << "bm_lc=" << bm << " " << (match ? "MATCH" : "MISMATCH") << "\n";
        }
    }
}

void run_gen(const CommonOpts& o, std::uint64_t seed, const std::string& output) {
    const lcprof::Field field = make_field_from(o);
    const lcprof::Sequence s = lcprof::random_sequence(field, o.n, seed);
    const std::string text = lcprof::serialize_sequence(s) + "\n";
    if (output.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(output);
        if (!out) throw lcprof::Error("cannot write '" + output + "'");
        out << text;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "lcprof: linear complexity, k-error linear complexity, and tight error "
        "complexity profiles of sequences over GF(p^m) with period p^n"};
    app.require_subcommand(1);

    CommonOpts lc_opts;
    CLI::App* lc_cmd = app.add_subcommand("lc", "linear complexity (generalized Games-Chan)");
    add_field_opts(lc_cmd, lc_opts);
    add_input_opts(lc_cmd, lc_opts);
    lc_cmd->callback([&] { run_lc(lc_opts); });

    CommonOpts klc_opts;
    int klc_k = 0;
    bool klc_trace = false;
    CLI::App* klc_cmd = app.add_subcommand("klc", "k-error linear complexity with decline cost");
    add_field_opts(klc_cmd, klc_opts);
    add_input_opts(klc_cmd, klc_opts);
    klc_cmd->add_option("--k", klc_k, "change budget")->required();
    klc_cmd->add_flag("--trace", klc_trace, "print one line per reduction level");
    klc_cmd->callback([&] { run_klc(klc_opts, klc_k, klc_trace); });

    CommonOpts tight_opts;
    std::optional<int> tight_count;
    CLI::App* tight_cmd =
        app.add_subcommand("tight", "jump points of the k-error linear complexity profile");
    add_field_opts(tight_cmd, tight_opts);
    add_input_opts(tight_cmd, tight_opts);
    tight_cmd->add_option("--count", tight_count, "stop after this many points")
        ->check(CLI::PositiveNumber);
    tight_cmd->callback([&] { run_tight(tight_opts, tight_count); });

    CommonOpts oracle_opts;
    std::optional<int> oracle_k;
    bool oracle_profile = false;
    long long oracle_budget = lcprof::oracle::kDefaultBudget;
    CLI::App* oracle_cmd =
        app.add_subcommand("oracle", "brute-force cross-check (Berlekamp-Massey + exhaustive errors)");
    add_field_opts(oracle_cmd, oracle_opts);
    add_input_opts(oracle_cmd, oracle_opts);
    oracle_cmd->add_option("--k", oracle_k, "check the k-error linear complexity");
    oracle_cmd->add_flag("--profile", oracle_profile, "check the whole profile");
    oracle_cmd->add_option("--budget", oracle_budget, "pattern enumeration cap");
    oracle_cmd->callback([&] { run_oracle(oracle_opts, oracle_k, oracle_profile, oracle_budget); });

    CommonOpts gen_opts;
    std::uint64_t gen_seed = 0;
    std::string gen_output;
    CLI::App* gen_cmd = app.add_subcommand("gen", "generate a seeded pseudorandom sequence");
    add_field_opts(gen_cmd, gen_opts);
    gen_cmd->add_option("--seed", gen_seed, "generator seed")->required();
    gen_cmd->add_option("--output", gen_output, "write to a file instead of stdout");
    gen_cmd->callback([&] { run_gen(gen_opts, gen_seed, gen_output); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const lcprof::BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const lcprof::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
