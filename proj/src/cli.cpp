#include "rhokit/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "rhokit/constructions.hpp"
#include "rhokit/density.hpp"
#include "rhokit/error.hpp"
#include "rhokit/graph_spec.hpp"
#include "rhokit/graphon_io.hpp"
#include "rhokit/rho.hpp"
#include "rhokit/search.hpp"
#include "rhokit/serialize.hpp"
#include "rhokit/verifier.hpp"

namespace rhokit {

namespace {

enum class Format { json, csv, text };

std::vector<std::string> split(std::string_view text, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t at = text.find(sep, start);
        out.emplace_back(text.substr(start, at == std::string_view::npos ? std::string_view::npos : at - start));
        if (at == std::string_view::npos) break;
        start = at + 1;
    }
    return out;
}

double parse_real(const std::string& text) {
    double x = 0;
    const char* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, x);
    if (text.empty() || ec != std::errc() || ptr != end || !std::isfinite(x))
        throw ParseError("expected a number, got '" + text + "'", 0);
    return x;
}

std::vector<double> parse_reals(const std::string& text) {
    std::vector<double> out;
    for (const auto& part : split(text, ',')) out.push_back(parse_real(part));
    return out;
}

std::vector<int> parse_ints(const std::string& text) {
    std::vector<int> out;
    for (const auto& part : split(text, ',')) {
        int x = 0;
        auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), x);
        if (part.empty() || ec != std::errc() || ptr != part.data() + part.size())
            throw ParseError("expected an integer, got '" + part + "'", 0);
        out.push_back(x);
    }
    return out;
}

DensityMethod parse_method(const std::string& name) {
    if (name == "auto") return DensityMethod::automatic;
    if (name == "eliminate") return DensityMethod::eliminate;
    if (name == "enumerate") return DensityMethod::enumerate;
    if (name == "multipartite") return DensityMethod::multipartite;
    throw ParseError("unknown method '" + name + "'", 0);
}

void write_error(std::ostream& err, std::string_view code, const std::string& message) {
    Json j;
    j["error"]["code"] = code;
    j["error"]["message"] = message;
    err << j.dump() << '\n';
}

void print_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

std::string join(const std::vector<std::string>& parts, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
    return out;
}

std::string rational_text(const std::optional<Rational>& r) { return r ? r->to_string() : ""; }

struct Options {
    Format format = Format::json;

    std::string g, h;
    std::string graphon;
    std::string method = "auto";

    std::string family;
    std::string scales = "10,100,1000,10000,100000,1000000";
    std::optional<std::string> claimed;
    std::optional<double> tolerance;

    std::string suite = "all";
    int trials = 200;
    std::uint64_t seed = 1;
    int jobs = 1;
    std::string junit;

    std::string blocks = "2,3,4";
    int restarts = SearchConfig{}.restarts;
    int iterations = SearchConfig{}.iterations;
    double epsilon = SearchConfig{}.epsilon;
    std::string dump;
};

int cmd_density(const Options& o, std::ostream& out) {
    const Graph g = parse_graph_spec(o.g);
    const WeightedGraph w = resolve_graphon(o.graphon);
    const DensityMethod method = parse_method(o.method);
    const double t = density(g, w, method);
    const double lt = log_density(g, w, method);
    switch (o.format) {
    case Format::json: {
        Json j;
        j["g"] = o.g;
        j["graphon"] = o.graphon;
        j["method"] = o.method;
        j["density"] = real_json(t);
        j["log_density"] = real_json(lt);
        print_json(out, j);
        break;
    }
    case Format::csv:
        out << "g,graphon,density,log_density\n" << o.g << ',' << o.graphon << ',' << format_real(t) << ','
            << format_real(lt) << '\n';
        break;
    case Format::text:
        out << "t(" << o.g << ", W) = " << format_real(t) << "  (log " << format_real(lt) << ")\n";
        break;
    }
    return 0;
}

int cmd_rho(const Options& o, std::ostream& out) {
    const RhoResult r = rho_exact(o.g, o.h);
    switch (o.format) {
    case Format::json: print_json(out, rho_json(o.g, o.h, r)); break;
    case Format::csv:
        out << "g,h,status,value,lower,upper,provenance\n" << o.g << ',' << o.h << ',' << to_string(r.status) << ','
            << rational_text(r.value) << ',' << rational_text(r.lower) << ',' << rational_text(r.upper) << ','
            << join(r.provenance, ";") << '\n';
        break;
    case Format::text: {
        out << "rho(" << o.g << ", " << o.h << "): " << to_string(r.status);
        if (r.value) out << " " << r.value->to_string();
        if (r.lower || r.upper) out << " [" << rational_text(r.lower) << ", " << rational_text(r.upper) << "]";
        out << "  (" << join(r.provenance, ", ") << ")\n";
        break;
    }
    }
    return 0;
}

int cmd_certify(const Options& o, std::ostream& out) {
    const Graph g = parse_graph_spec(o.g);
    const Graph h = parse_graph_spec(o.h);
    const ConstructionFamily family = parse_family(o.family);
    double claimed = 0;
    if (o.claimed) {
        const auto parts = split(*o.claimed, '/');
        if (parts.size() > 2) throw ParseError("claimed value must be a number or p/q", 0);
        claimed = parse_real(parts[0]);
        if (parts.size() == 2) claimed /= parse_real(parts[1]);
    } else {
        const RhoResult r = rho_exact(o.g, o.h);
        if (!r.lower) throw DomainError("no catalog lower bound for this pair; pass --claimed");
        claimed = r.lower->to_double();
    }
    const CertificateReport report = certify_lower_bound(g, h, family, parse_reals(o.scales), claimed);
    switch (o.format) {
    case Format::json: print_json(out, certificate_json(o.g, o.h, family, report)); break;
    case Format::csv: out << certificate_csv(report); break;
    case Format::text:
        for (const auto& row : report.schedule)
            out << "n = " << format_real(row.scale) << ": ratio " << (row.ratio ? format_real(*row.ratio) : "degenerate")
                << '\n';
        out << "claimed " << format_real(claimed) << ", achieved "
            << (report.achieved ? format_real(*report.achieved) : "none") << ", gap "
            << (report.gap ? format_real(*report.gap) : "none") << '\n';
        break;
    }
    if (o.tolerance && (!report.gap || *report.gap > *o.tolerance)) return 1;
    return 0;
}

int cmd_verify(const Options& o, std::ostream& out) {
    std::vector<Suite> suites;
    if (o.suite == "all") {
        suites = all_suites();
    } else {
        for (const auto& name : split(o.suite, ',')) {
            const auto s = parse_suite(name);
            if (!s) throw ParseError("unknown suite '" + name + "'", 0);
            suites.push_back(*s);
        }
    }
    SuiteOptions options;
    options.jobs = o.jobs;
    std::vector<SuiteReport> reports;
    bool passed = true;
    for (Suite s : suites) {
        reports.push_back(run_suite(s, o.trials, o.seed, options));
        passed = passed && reports.back().failures.empty();
    }
    if (!o.junit.empty()) {
        std::ofstream file(o.junit);
        if (!file) throw IoError("cannot write " + o.junit);
        file << suites_junit(reports);
    }
    switch (o.format) {
    case Format::json: {
        Json j;
        j["seed"] = o.seed;
        j["trials"] = o.trials;
        j["passed"] = passed;
        Json list = Json::array();
        for (const auto& r : reports) list.push_back(suite_json(r));
        j["suites"] = list;
        print_json(out, j);
        break;
    }
    case Format::csv: out << suites_csv(reports); break;
    case Format::text:
        for (const auto& r : reports) {
            out << (r.failures.empty() ? "PASS " : "FAIL ") << r.suite << ": " << r.trials << " trials, " << r.skipped
                << " skipped, " << r.failures.size() << " failures, min residual "
                << (r.min_residual ? format_real(*r.min_residual) : "none") << '\n';
            for (const auto& f : r.failures)
                out << "  trial " << f.trial << " seed " << f.seed << ": " << f.instance << " residual "
                    << format_real(f.residual) << '\n';
        }
        break;
    }
    return passed ? 0 : 1;
}

int cmd_search(const Options& o, std::ostream& out) {
    SearchConfig config;
    config.blocks = parse_ints(o.blocks);
    config.restarts = o.restarts;
    config.iterations = o.iterations;
    config.epsilon = o.epsilon;
    config.seed = o.seed;
    config.jobs = o.jobs;
    const SearchResult result = search_lower_bound(parse_spec(o.g), parse_spec(o.h), config);
    if (!o.dump.empty()) save_graphon(result.best, o.dump);
    switch (o.format) {
    case Format::json: print_json(out, search_json(o.g, o.h, result)); break;
    case Format::csv: out << search_csv(result); break;
    case Format::text:
        out << "best ratio " << format_real(result.best_ratio) << " for (" << o.g << ", " << o.h << ")";
        if (result.catalog_lower || result.catalog_upper)
            out << "; catalog [" << rational_text(result.catalog_lower) << ", " << rational_text(result.catalog_upper)
                << "]";
        out << '\n' << format_graphon(result.best);
        break;
    }
    return 0;
}

}  // namespace

WeightedGraph resolve_graphon(const std::string& text) {
    constexpr std::string_view prefix = "builtin:";
    if (text.rfind(prefix, 0) != 0) return load_graphon(text);
    const std::string rest = text.substr(prefix.size());
    if (rest.rfind("graph:", 0) == 0) return WeightedGraph::from_graph(parse_graph_spec(rest.substr(6)));
    const std::size_t colon = rest.find(':');
    const std::string name = rest.substr(0, colon);
    const auto kind = parse_construction_kind(name);
    if (!kind) throw ParseError("unknown construction '" + name + "'", prefix.size());
    std::vector<double> values;
    if (colon != std::string::npos) values = parse_reals(rest.substr(colon + 1));
    const auto want = static_cast<std::size_t>(parameter_count(*kind)) + (uses_scale(*kind) ? 1 : 0);
    if (values.size() != want)
        throw ParseError("construction '" + name + "' takes " + std::to_string(want) + " values", prefix.size());
    double scale = 2;
    if (uses_scale(*kind)) {
        scale = values.back();
        values.pop_back();
    }
    return build_construction({*kind, values}, scale);
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Homomorphism densities and density domination exponents", "rhokit"};
    app.require_subcommand(1);
    Options o;
    std::string format = "json";
    app.add_option("--format", format, "json, csv or text")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();

    auto* density_cmd = app.add_subcommand("density", "t(G, W) for a pattern and a step graphon");
    density_cmd->add_option("G", o.g, "pattern spec")->required();
    density_cmd->add_option("--graphon", o.graphon, "file, builtin:<kind>[:params,n] or builtin:graph:<spec>")
        ->required();
    density_cmd->add_option("--method", o.method, "auto, eliminate, enumerate or multipartite")
        ->capture_default_str();

    auto* rho_cmd = app.add_subcommand("rho", "catalog value of rho(G, H) with provenance");
    rho_cmd->add_option("G", o.g)->required();
    rho_cmd->add_option("H", o.h)->required();

    auto* certify_cmd = app.add_subcommand("certify", "evaluate a construction family along a scale schedule");
    certify_cmd->add_option("G", o.g)->required();
    certify_cmd->add_option("H", o.h)->required();
    certify_cmd->add_option("--family", o.family, "kind or kind:p1,p2")->required();
    certify_cmd->add_option("--scales", o.scales, "comma separated scales")->capture_default_str();
    certify_cmd->add_option("--claimed", o.claimed, "claimed lower bound (number or p/q); default: catalog lower");
    certify_cmd->add_option("--tolerance", o.tolerance, "exit 1 when the gap exceeds this");

    auto* verify_cmd = app.add_subcommand("verify", "randomized inequality suites");
    verify_cmd->add_option("--suite", o.suite, "suite id, comma list or all")->capture_default_str();
    verify_cmd->add_option("--trials", o.trials)->capture_default_str()->check(CLI::NonNegativeNumber);
    verify_cmd->add_option("--seed", o.seed)->capture_default_str();
    verify_cmd->add_option("--jobs", o.jobs)->capture_default_str()->check(CLI::PositiveNumber);
    verify_cmd->add_option("--junit", o.junit, "write JUnit XML to this path");

    auto* search_cmd = app.add_subcommand("search", "gradient search for a lower bound on rho(G, H)");
    search_cmd->add_option("G", o.g)->required();
    search_cmd->add_option("H", o.h)->required();
    search_cmd->add_option("--blocks", o.blocks, "comma separated block counts")->capture_default_str();
    search_cmd->add_option("--restarts", o.restarts)->capture_default_str();
    search_cmd->add_option("--iterations", o.iterations)->capture_default_str();
    search_cmd->add_option("--epsilon", o.epsilon)->capture_default_str();
    search_cmd->add_option("--seed", o.seed)->capture_default_str();
    search_cmd->add_option("--jobs", o.jobs)->capture_default_str()->check(CLI::PositiveNumber);
    search_cmd->add_option("--dump", o.dump, "write the best graphon to this .graphon file");

    for (auto* sub : {density_cmd, rho_cmd, certify_cmd, verify_cmd, search_cmd}) sub->fallthrough();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::Success& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        write_error(err, to_string(ErrorCode::usage), e.what());
        return 2;
    }
    o.format = format == "csv" ? Format::csv : format == "text" ? Format::text : Format::json;

    try {
        if (density_cmd->parsed()) return cmd_density(o, out);
        if (rho_cmd->parsed()) return cmd_rho(o, out);
        if (certify_cmd->parsed()) return cmd_certify(o, out);
        if (verify_cmd->parsed()) return cmd_verify(o, out);
        return cmd_search(o, out);
    } catch (const DiscrepancyError& e) {
        write_error(err, to_string(e.code()), e.what());
        return 1;
    } catch (const Error& e) {
        write_error(err, to_string(e.code()), e.what());
        return 2;
    } catch (const std::exception& e) {
        write_error(err, "internal_error", e.what());
        return 2;
    }
}

}  // namespace rhokit
