// semicm: exact Groebner-based analysis of simplicial affine semigroups,
// projective closures of monomial curves, and k-liftings.

#include <CLI11.hpp>
#include <semicm/report.hpp>
#include <semicm/semicm.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using namespace semicm;

struct parse_failure {
    std::string message;
};

struct InputSpec {
    std::size_t dim = 0;
    std::vector<IntVec> generators;
    std::optional<Int> k;
};

Int parse_nonneg(const std::string& tok, const std::string& where) {
    if (tok.empty()) throw parse_failure{"empty integer at " + where};
    std::size_t start = 0;
    if (tok[0] == '-') throw parse_failure{"negative entry at " + where};
    if (tok[0] == '+') start = 1;
    for (std::size_t i = start; i < tok.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(tok[i])))
            throw parse_failure{"malformed integer '" + tok + "' at " + where};
    return Int(tok.substr(start));
}

Int json_to_int(const Json& v, const std::string& where) {
    if (v.is_string()) return parse_nonneg(v.get<std::string>(), where);
    if (v.is_number_integer()) {
        if (v.is_number_unsigned() || v.get<long long>() >= 0)
            return Int(v.get<long long>());
        throw parse_failure{"negative entry at " + where};
    }
    throw parse_failure{"expected an integer at " + where};
}

InputSpec parse_json_input(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw parse_failure{std::string("invalid JSON: ") + e.what()};
    }
    if (!j.is_object()) throw parse_failure{"top-level JSON value must be an object"};
    InputSpec spec;
    if (!j.contains("dim") || !j["dim"].is_number_integer() || j["dim"].get<long long>() <= 0)
        throw parse_failure{"field 'dim' must be a positive integer"};
    spec.dim = j["dim"].get<std::size_t>();
    if (!j.contains("generators") || !j["generators"].is_array() || j["generators"].empty())
        throw parse_failure{"field 'generators' must be a nonempty array"};
    std::size_t row = 0;
    for (const auto& g : j["generators"]) {
        ++row;
        const std::string where = "generators[" + std::to_string(row) + "]";
        IntVec v;
        if (g.is_array()) {
            for (const auto& x : g) v.push_back(json_to_int(x, where));
        } else if (spec.dim == 1) {
            v.push_back(json_to_int(g, where));
        } else {
            throw parse_failure{where + " must be an array of " + std::to_string(spec.dim) +
                                " entries"};
        }
        if (v.size() != spec.dim)
            throw parse_failure{where + " has " + std::to_string(v.size()) + " entries, expected " +
                                std::to_string(spec.dim)};
        spec.generators.push_back(std::move(v));
    }
    if (j.contains("k")) spec.k = json_to_int(j["k"], "k");
    return spec;
}

InputSpec parse_plain_input(const std::string& text) {
    InputSpec spec;
    spec.dim = 1;
    std::size_t line = 1, col = 0;
    std::string tok;
    std::size_t tok_line = 1, tok_col = 1;
    auto flush = [&]() {
        if (tok.empty()) return;
        const std::string where =
            "line " + std::to_string(tok_line) + ", column " + std::to_string(tok_col);
        spec.generators.push_back(IntVec{parse_nonneg(tok, where)});
        tok.clear();
    };
    for (char c : text) {
        ++col;
        if (c == '\n') {
            flush();
            ++line;
            col = 0;
        } else if (std::isspace(static_cast<unsigned char>(c))) {
            flush();
        } else {
            if (tok.empty()) {
                tok_line = line;
                tok_col = col;
            }
            tok += c;
        }
    }
    flush();
    if (spec.generators.empty()) throw parse_failure{"no generators in input"};
    return spec;
}

InputSpec parse_input(const std::string& text) {
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        if (c == '{') return parse_json_input(text);
        break;
    }
    return parse_plain_input(text);
}

struct Options {
    std::string input_path = "-";
    std::string format = "json";
    std::vector<std::size_t> order;  // 1-based variable ranking, greatest first
    long long k = 0;
    bool k_set = false;
    std::size_t bound = 0;
    std::size_t last_gen = 0;  // 1-based override of the homogenizing generator
    long max_seconds = 0;
    bool no_timing = false;
};

void add_common(CLI::App* cmd, Options& opt) {
    cmd->add_option("input", opt.input_path, "input file, or - for stdin");
    cmd->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"json", "text"}));
    cmd->add_option("--order", opt.order,
                    "variable ranking override, greatest first (1-based, comma separated)")
        ->delimiter(',');
    auto* kopt = cmd->add_option("--k,-k", opt.k, "lifting factor");
    kopt->check(CLI::PositiveNumber);
    cmd->parse_complete_callback([kopt, &opt] { opt.k_set = kopt->count() > 0; });
    cmd->add_option("--bound", opt.bound, "degree bound for Betti computations");
    cmd->add_option("--last-gen", opt.last_gen,
                    "index (1-based) of the generator used for homogenization");
    cmd->add_option("--max-seconds", opt.max_seconds, "wall-clock budget; exceeding exits 3");
    cmd->add_flag("--no-timing", opt.no_timing, "omit the timing field from the report");
}

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw parse_failure{"cannot open input file '" + path + "'"};
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Json input_echo(const InputSpec& spec) {
    Json j;
    j["dim"] = spec.dim;
    j["generators"] = json_vecs(spec.generators);
    if (spec.k) j["k"] = json_int(*spec.k);
    return j;
}

MonomialOrder choose_order(const AffineSemigroup& s, const Options& opt) {
    if (!opt.order.empty()) {
        std::vector<std::size_t> ranking;
        for (std::size_t v : opt.order) {
            if (v == 0 || v > s.ngens())
                throw precondition_error("--order entries must be in 1.." +
                                         std::to_string(s.ngens()));
            ranking.push_back(v - 1);
        }
        return degrevlex_ranked(std::move(ranking));
    }
    if (s.extremal) return canonical_order(s);
    return degrevlex(s.ngens());
}

void append_semigroup_and_ideal(Json& root, const AffineSemigroup& s, const Options& opt) {
    const auto redundant = redundant_generators(s);
    root["semigroup"] = semigroup_section(s, s.extremal.has_value(), redundant);
    const MonomialOrder ord = choose_order(s, opt);
    const BinomialIdeal ideal = toric_ideal(s);
    const GroebnerBasis gb = reduced_gb(ideal.gens, ord);
    const MinimalGenerators min = minimalize(ideal, ord);
    root["ideal"] = ideal_section(gb, min, variable_names(s.ngens(), "z"));
}

void run_command(const std::string& command, const InputSpec& spec, const Options& opt,
                 Json& root) {
    AffineSemigroup input;
    input.dim = spec.dim;
    input.generators = spec.generators;
    if (opt.last_gen > 0) {
        if (opt.last_gen > input.generators.size())
            throw precondition_error("--last-gen out of range");
        const IntVec g = input.generators[opt.last_gen - 1];
        input.generators.erase(input.generators.begin() +
                               static_cast<std::ptrdiff_t>(opt.last_gen - 1));
        input.generators.push_back(g);
    }
    input.validate();

    std::vector<std::string> warnings;
    const auto note_warnings = [&](const std::vector<std::string>& more) {
        for (const auto& w : more) warnings.push_back(w);
    };

    if (command == "gb") {
        AffineSemigroup s = input;
        if (opt.order.empty() && is_simplicial(s)) s = make_simplicial(s);
        append_semigroup_and_ideal(root, s, opt);
    } else if (command == "apery") {
        AffineSemigroup s = make_simplicial(input);
        root["semigroup"] = semigroup_section(s, true, redundant_generators(s));
        const AperySet ap = apery(s);
        root["apery"] = apery_section(ap, quasi_frobenius(s, ap), s.extremal_generators());
    } else if (command == "cm") {
        AffineSemigroup s = make_simplicial(input);
        const CMReport rep = is_cohen_macaulay(s);
        note_warnings(rep.warnings);
        root["semigroup"] = semigroup_section(rep.semigroup, true, rep.redundant_generators);
        const MinimalGenerators min =
            minimalize(toric_ideal(rep.semigroup), rep.affine_gb.order);
        root["ideal"] =
            ideal_section(rep.affine_gb, min, variable_names(rep.semigroup.ngens(), "z"));
        root["cohen_macaulay"] = cm_section(rep);
        if (rep.cm_type) root["projective_closure"] = closure_section(rep);
    } else if (command == "buchsbaum") {
        if (input.dim != 1)
            throw precondition_error(
                "the Buchsbaum criterion applies to monomial curves; input must have dim 1");
        CurveData c;
        for (const auto& g : input.generators) c.exponents.push_back(g[0]);
        std::sort(c.exponents.begin(), c.exponents.end());
        const BuchsbaumReport rep = is_buchsbaum(c);
        note_warnings(rep.warnings);
        root["buchsbaum"] = buchsbaum_section(rep);
    } else if (command == "lift") {
        if (!spec.k) throw precondition_error("lift requires --k");
        AffineSemigroup s = make_simplicial(input);
        const LiftReport rep = verify_lift(s, *spec.k);
        root["semigroup"] = semigroup_section(s, true, redundant_generators(s));
        root["lifting"] = lifting_section(rep);
    } else if (command == "betti") {
        AffineSemigroup s = make_simplicial(input);
        const std::size_t bound = opt.bound > 0 ? opt.bound : 2 * s.ngens();
        root["semigroup"] = semigroup_section(s, true, redundant_generators(s));
        root["betti"] = betti_section(betti_numbers(s, bound));
    } else if (command == "analyze") {
        AffineSemigroup s = make_simplicial(input);
        const CMReport rep = is_cohen_macaulay(s);
        note_warnings(rep.warnings);
        root["semigroup"] = semigroup_section(rep.semigroup, true, rep.redundant_generators);
        const MinimalGenerators min =
            minimalize(toric_ideal(rep.semigroup), rep.affine_gb.order);
        root["ideal"] =
            ideal_section(rep.affine_gb, min, variable_names(rep.semigroup.ngens(), "z"));
        root["cohen_macaulay"] = cm_section(rep);
        const AperySet ap = apery(rep.semigroup);
        root["apery"] =
            apery_section(ap, quasi_frobenius(rep.semigroup, ap),
                          rep.semigroup.extremal_generators());
        if (rep.cm_type) root["projective_closure"] = closure_section(rep);
        if (input.dim == 1 && !rep.cm_projective) {
            CurveData c;
            for (const auto& g : input.generators) c.exponents.push_back(g[0]);
            std::sort(c.exponents.begin(), c.exponents.end());
            const BuchsbaumReport brep = is_buchsbaum(c);
            note_warnings(brep.warnings);
            root["buchsbaum"] = buchsbaum_section(brep);
        }
        if (spec.k) {
            const LiftReport lrep = verify_lift(rep.semigroup, *spec.k);
            root["lifting"] = lifting_section(lrep);
        }
    } else {
        throw precondition_error("unknown command " + command);
    }
    root["warnings"] = warnings;
}

int run(const std::string& command, Options& opt) {
    std::string text;
    InputSpec spec;
    try {
        text = read_input(opt.input_path);
        spec = parse_input(text);
        if (opt.k_set) spec.k = Int(opt.k);
    } catch (const parse_failure& e) {
        std::cerr << "parse error: " << e.message << "\n";
        return 1;
    }

    Json root;
    root["command"] = command;
    root["input"] = input_echo(spec);

    const auto started = std::chrono::steady_clock::now();
    if (opt.max_seconds > 0)
        budget::set_deadline_after(std::chrono::milliseconds(opt.max_seconds * 1000));
    int code = 0;
    try {
        run_command(command, spec, opt, root);
    } catch (const budget_error&) {
        root["partial"] = true;
        root["error"] = "computation budget exceeded";
        code = 3;
    } catch (const parse_failure& e) {
        std::cerr << "parse error: " << e.message << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {  // precondition/domination/dimension/grading
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    budget::clear();
    if (!opt.no_timing) {
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - started)
                            .count();
        root["timing_ms"] = ms;
    }
    if (opt.format == "text")
        std::cout << render_text(root);
    else
        std::cout << root.dump(2) << "\n";
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "semicm: Cohen-Macaulayness of projective closures of simplicial affine semigroups,\n"
        "Buchsbaum tests for projective monomial curves, and k-lifting verification,\n"
        "all via exact Groebner bases over the rationals"};
    app.require_subcommand(1);

    const std::vector<std::string> commands{"analyze", "cm",    "buchsbaum", "apery",
                                            "lift",    "betti", "gb"};
    const std::vector<std::string> help{
        "full report: semigroup, ideal, CM verdicts, Apery data, optional Buchsbaum/lifting",
        "Cohen-Macaulay verdicts for the semigroup ring and its projective closure",
        "Buchsbaum test for the projective closure of a monomial curve (dim 1)",
        "Apery set, quasi-Frobenius elements and type",
        "k-lifting verification: mu, Apery scaling, CM transfer",
        "Betti numbers via squarefree divisor complexes",
        "reduced Groebner basis of the defining toric ideal"};
    std::vector<Options> opts(commands.size());
    for (std::size_t i = 0; i < commands.size(); ++i)
        add_common(app.add_subcommand(commands[i], help[i]), opts[i]);

    CLI11_PARSE(app, argc, argv);
    for (std::size_t i = 0; i < commands.size(); ++i)
        if (app.get_subcommand(commands[i])->parsed()) return run(commands[i], opts[i]);
    return 1;
}
