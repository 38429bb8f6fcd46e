// Command-line surface: formula and oracle evaluation, verification
// suites, bijection round trips, and SVG/ASCII rendering.  Exit codes:
// 0 success, 1 verification failure, 2 usage or input error.

#include <oblique/closed_forms.hpp>
#include <oblique/json_io.hpp>
#include <oblique/render.hpp>
#include <oblique/verify.hpp>
#include <oblique/vertex.hpp>

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

using namespace oblique;

int default_trunc() {
    if (const char* env = std::getenv("OBLIQUE_TRUNC_DEFAULT")) {
        try {
            int v = std::stoi(env);
            if (v >= 0) return v;
        } catch (...) {
        }
        throw std::invalid_argument("OBLIQUE_TRUNC_DEFAULT must be a nonnegative integer");
    }
    return 10;
}

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open input file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open output file: " + path);
    out << text;
}

struct SeriesArgs {
    std::string word;
    std::string diamond;
    std::string model = "pure";
    int trunc = -1;
    bool multivariate = false;
    bool at_one = false;
    std::string format = "text";
};

void add_series_options(CLI::App* cmd, SeriesArgs& args) {
    cmd->add_option("--word", args.word, "sign word, e.g. ++--");
    cmd->add_option("--diamond", args.diamond, "diamond word, e.g. h+,v+,h-,v-");
    cmd->add_option("--model", args.model, "pure | mixed | free | cylindric | extended")
        ->default_val("pure");
    cmd->add_option("--trunc", args.trunc, "truncation order (default OBLIQUE_TRUNC_DEFAULT or 10)");
    cmd->add_flag("--multivariate", args.multivariate, "per-diagonal flip grading");
    cmd->add_flag("--at-one", args.at_one, "evaluate a polynomial series at q=1");
    cmd->add_option("--format", args.format, "text | json")->default_val("text");
}

std::string model_normalized(std::string m) {
    if (m == "cyclic") m = "cylindric";  // spelling alias
    return m;
}

int emit_series(const SeriesArgs& args, const std::optional<UniSeries>& uni,
                const std::optional<MultiSeries>& multi) {
    if (args.at_one) {
        if (!uni) throw std::invalid_argument("--at-one applies to univariate series only");
        int margin = std::max(3, (uni->trunc() + 1) / 3);
        if (!uni->looks_polynomial(margin))
            throw std::invalid_argument(
                "--at-one rejected: series does not look polynomial at this truncation "
                "(nonzero top coefficients)");
        std::cout << uni->value_at_one().get_str() << "\n";
        return 0;
    }
    if (args.format == "json") {
        Json j = uni ? to_json(*uni) : to_json(*multi);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << (uni ? uni->to_string() : multi->to_string()) << "\n";
    }
    return 0;
}

int run_series(const SeriesArgs& raw, bool oracle) {
    SeriesArgs args = raw;
    if (args.trunc < 0) args.trunc = default_trunc();
    std::string model = model_normalized(args.model);
    int N = args.trunc;
    std::optional<UniSeries> uni;
    std::optional<MultiSeries> multi;

    if (model == "extended") {
        if (args.diamond.empty())
            throw std::invalid_argument("model extended requires --diamond");
        DiamondWord d = parse_diamond(args.diamond);
        if (args.multivariate)
            multi = oracle ? interlaced_pure_fn_multi(d, N) : extended_multi(d, N);
        else
            uni = oracle ? interlaced_pure_fn(d, N) : extended_q(d, N);
        return emit_series(args, uni, multi);
    }

    if (args.word.empty()) throw std::invalid_argument("model " + model + " requires --word");
    SignWord w = SignWord::parse(args.word);
    if (model == "pure") {
        if (args.multivariate)
            multi = oracle ? pure_fn_multi(w, N) : pure_multi(w, N);
        else
            uni = oracle ? pure_fn(w, N) : pure_q(w, N);
    } else if (model == "mixed") {
        if (args.multivariate)
            multi = oracle ? mixed_fn_marked(w, N) : mixed_multi_marked(w, N);
        else
            uni = oracle ? mixed_fn(w, N) : mixed_q(w, N);
    } else if (model == "free") {
        if (args.multivariate)
            multi = oracle ? free_fn(w, N) : free_multi_marked(w, N);
        else
            uni = oracle ? free_fn_q(w, N) : free_q(w, N);
    } else if (model == "cylindric") {
        if (args.multivariate) {
            multi = oracle ? cylindric_fn_multi(w, N) : cyl_multi(w, N);
        } else {
            if (!w.has_plus() || !w.has_minus())
                throw std::invalid_argument(
                    "cylindric q-form needs a word containing both + and - (the flip "
                    "grading is undefined otherwise); use --multivariate for such words");
            uni = oracle ? cylindric_fn(w, N) : cyl_q(w, N);
        }
    } else {
        throw std::invalid_argument("unknown model: " + raw.model);
    }
    return emit_series(args, uni, multi);
}

int run_verify(const std::string& suite, int max_len, int trunc, long long max_size, int count,
               unsigned seed, const std::string& format) {
    SuiteReport rep;
    if (suite == "commutation")
        rep = verify_commutation(trunc, max_size);
    else if (suite == "reflection")
        rep = verify_reflection(trunc);
    else if (suite == "formulas")
        rep = verify_formulas(max_len, trunc);
    else if (suite == "flips")
        rep = verify_flips(max_len, max_size);
    else if (suite == "bijection")
        rep = verify_bijection(count, seed);
    else if (suite == "extended")
        rep = verify_extended(std::min(max_len, 4), std::min(trunc, 8));
    else
        throw std::invalid_argument("unknown suite: " + suite);

    if (format == "json") {
        Json j;
        j["suite"] = rep.suite;
        j["pass"] = rep.pass();
        Json rs = Json::array();
        for (const auto& r : rep.results) {
            Json rj;
            rj["name"] = r.name;
            rj["pass"] = r.pass;
            if (!r.detail.empty()) rj["detail"] = r.detail;
            rs.push_back(rj);
        }
        j["results"] = rs;
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& r : rep.results)
            std::cout << (r.pass ? "PASS" : "FAIL") << " [" << rep.suite << "] " << r.name
                      << (r.detail.empty() ? "" : " -- " + r.detail) << "\n";
        std::cout << (rep.pass() ? "OK" : "FAILED") << " suite " << rep.suite << " ("
                  << rep.results.size() << " checks)\n";
    }
    return rep.pass() ? 0 : 1;
}

int run_bijection(const std::string& direction, const std::string& input,
                  const std::string& output, int half_width) {
    Json in = Json::parse(read_input(input));
    Json out;
    if (direction == "seq-to-tiling") {
        InterlacedSeq s = interlaced_seq_from_json(in);
        int A = half_width > 0 ? half_width : sufficient_half_width(s);
        out = to_json(seq_to_tiling(s, A));
    } else if (direction == "tiling-to-seq") {
        out = to_json(tiling_to_seq(tiling_from_json(in)));
    } else if (direction == "seq-to-matching") {
        ExtendedSeq s = extended_seq_from_json(in);
        out = to_json(psi_inverse(s));
    } else if (direction == "matching-to-seq") {
        out = to_json(psi(matching_from_json(in)));
    } else {
        throw std::invalid_argument("unknown direction: " + direction);
    }
    write_output(output, out.dump(2) + "\n");
    return 0;
}

int run_render(const std::string& kind, const std::string& input, const std::string& output,
               bool particles, int half_width) {
    Json in = Json::parse(read_input(input));
    std::string text;
    if (kind == "tiling-svg" || kind == "tiling-ascii") {
        TilingWindow t;
        if (in.contains("dominos")) {
            t = tiling_from_json(in);
        } else {
            InterlacedSeq s = interlaced_seq_from_json(in);
            int A = half_width > 0 ? half_width : sufficient_half_width(s);
            t = seq_to_tiling(s, A);
        }
        text = kind == "tiling-svg" ? render_tiling_svg(t, particles) : render_tiling_ascii(t);
    } else if (kind == "matching-svg" || kind == "matching-dual-svg") {
        MatchingWindow m;
        if (in.contains("edges")) {
            m = matching_from_json(in);
        } else {
            m = psi_inverse(extended_seq_from_json(in));
        }
        text = kind == "matching-svg" ? render_matching_svg(m) : render_matching_dual_svg(m);
    } else {
        throw std::invalid_argument("unknown render kind: " + kind);
    }
    write_output(output, text);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"steep tilings of the oblique strip: exact generating functions, bijections "
                 "and renderers"};
    app.require_subcommand(1);

    SeriesArgs formula_args, oracle_args, extended_args;
    CLI::App* formula = app.add_subcommand("formula", "evaluate a closed-form product");
    add_series_options(formula, formula_args);
    CLI::App* oracle = app.add_subcommand("oracle", "evaluate by vertex-operator sweep");
    add_series_options(oracle, oracle_args);
    CLI::App* extended =
        app.add_subcommand("extended", "extended-model products (shorthand for --model extended)");
    add_series_options(extended, extended_args);
    bool extended_oracle = false;
    extended->add_flag("--oracle", extended_oracle, "use the enumeration engine");

    std::string suite = "formulas", vformat = "text";
    int max_len = 4, vtrunc = 8, count = 200;
    long long max_size = 5;
    unsigned seed = 1;
    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", suite, "commutation | reflection | formulas | flips | bijection | extended")
        ->required();
    verify->add_option("--max-len", max_len, "largest word length");
    verify->add_option("--trunc", vtrunc, "truncation order");
    verify->add_option("--max-size", max_size, "largest total partition size");
    verify->add_option("--count", count, "random instances for the bijection suite");
    verify->add_option("--seed", seed, "random seed");
    verify->add_option("--format", vformat, "text | json");

    std::string direction, bij_in, bij_out;
    int bij_half_width = 0;
    CLI::App* bijection = app.add_subcommand("bijection", "convert between encodings");
    bijection
        ->add_option("--direction", direction,
                     "seq-to-tiling | tiling-to-seq | seq-to-matching | matching-to-seq")
        ->required();
    bijection->add_option("--input", bij_in, "input JSON file (default stdin)");
    bijection->add_option("--output", bij_out, "output file (default stdout)");
    bijection->add_option("--half-width", bij_half_width, "tiling window half-width");

    std::string rkind, rin, rout;
    bool particles = false;
    int rhalf = 0;
    CLI::App* render = app.add_subcommand("render", "draw a tiling or matching");
    render
        ->add_option("--kind", rkind, "tiling-svg | tiling-ascii | matching-svg | matching-dual-svg")
        ->required();
    render->add_option("--input", rin, "input JSON file (default stdin)");
    render->add_option("--output", rout, "output file (default stdout)");
    render->add_flag("--particles", particles, "overlay the particle configuration");
    render->add_option("--half-width", rhalf, "tiling window half-width");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (formula->parsed()) return run_series(formula_args, false);
        if (oracle->parsed()) return run_series(oracle_args, true);
        if (extended->parsed()) {
            extended_args.model = "extended";
            return run_series(extended_args, extended_oracle);
        }
        if (verify->parsed())
            return run_verify(suite, max_len, vtrunc, max_size, count, seed, vformat);
        if (bijection->parsed()) return run_bijection(direction, bij_in, bij_out, bij_half_width);
        if (render->parsed()) return run_render(rkind, rin, rout, particles, rhalf);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
