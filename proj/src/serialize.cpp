#include "rhokit/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace rhokit {

namespace {

// Integral values print as integers so `"value": 2` stays exact.
Json rational_json(const Rational& r) {
    if (r.den() == 1) return r.num();
    return r.to_double();
}

void put_rational(Json& out, const char* key, const std::optional<Rational>& r) {
    if (!r) return;
    out[key] = rational_json(*r);
    out[std::string(key) + "_rational"] = r->to_string();
}

std::string xml_escape(const std::string& text) {
    std::string out;
    for (char c : text) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out += c;
        }
    }
    return out;
}

std::string csv_field(const std::string& text) {
    if (text.find_first_of(",\"\n") == std::string::npos) return text;
    std::string out = "\"";
    for (char c : text) out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
}

}  // namespace

Json real_json(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    return x;
}

std::string format_real(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "%.17g", x);
    return buffer;
}

Json weighted_graph_json(const WeightedGraph& w) {
    Json out;
    out["blocks"] = w.block_count();
    Json masses = Json::array();
    for (double m : w.masses()) masses.push_back(m);
    out["masses"] = masses;
    Json rows = Json::array();
    for (int i = 0; i < w.block_count(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < w.block_count(); ++j) row.push_back(w.weight(i, j));
        rows.push_back(row);
    }
    out["weights"] = rows;
    return out;
}

Json rho_json(const std::string& g, const std::string& h, const RhoResult& r) {
    Json out;
    out["g"] = g;
    out["h"] = h;
    out["status"] = std::string(to_string(r.status));
    if (r.status == RhoStatus::infinite) {
        out["value"] = "inf";
        out["lower"] = "inf";
    }
    put_rational(out, "value", r.value);
    put_rational(out, "lower", r.lower);
    put_rational(out, "upper", r.upper);
    out["provenance"] = r.provenance;
    return out;
}

Json certificate_json(const std::string& g, const std::string& h, const ConstructionFamily& family,
                      const CertificateReport& report) {
    Json out;
    out["g"] = g;
    out["h"] = h;
    out["family"] = render(family);
    out["claimed"] = report.claimed;
    out["achieved"] = report.achieved ? real_json(*report.achieved) : Json(nullptr);
    out["gap"] = report.gap ? real_json(*report.gap) : Json(nullptr);
    Json rows = Json::array();
    for (const auto& row : report.schedule) {
        Json r;
        r["scale"] = row.scale;
        r["t_g"] = real_json(row.t_g);
        r["t_h"] = real_json(row.t_h);
        r["log_t_g"] = real_json(row.log_t_g);
        r["log_t_h"] = real_json(row.log_t_h);
        r["ratio"] = row.ratio ? real_json(*row.ratio) : Json(nullptr);
        rows.push_back(r);
    }
    out["schedule"] = rows;
    out["degenerate_scales"] = report.degenerate_scales;
    return out;
}

Json suite_json(const SuiteReport& report) {
    Json out;
    out["suite"] = report.suite;
    out["trials"] = report.trials;
    out["skipped"] = report.skipped;
    out["passed"] = report.failures.empty();
    out["min_residual"] = report.min_residual ? real_json(*report.min_residual) : Json(nullptr);
    Json failures = Json::array();
    for (const auto& f : report.failures) {
        Json j;
        j["trial"] = f.trial;
        j["seed"] = f.seed;
        j["instance"] = f.instance;
        j["residual"] = real_json(f.residual);
        failures.push_back(j);
    }
    out["failures"] = failures;
    return out;
}

Json search_json(const std::string& g, const std::string& h, const SearchResult& result) {
    Json out;
    out["g"] = g;
    out["h"] = h;
    out["best_ratio"] = real_json(result.best_ratio);
    out["best"] = weighted_graph_json(result.best);
    Json traces = Json::array();
    for (const auto& t : result.traces) {
        Json j;
        j["blocks"] = t.blocks;
        j["start"] = t.start;
        j["iterations"] = t.iterations;
        j["ratio"] = t.ratio ? real_json(*t.ratio) : Json(nullptr);
        traces.push_back(j);
    }
    out["traces"] = traces;
    Json catalog = Json::object();
    put_rational(catalog, "lower", result.catalog_lower);
    put_rational(catalog, "upper", result.catalog_upper);
    out["catalog"] = catalog;
    return out;
}

std::string certificate_csv(const CertificateReport& report) {
    std::ostringstream out;
    out << "scale,t_g,t_h,log_t_g,log_t_h,ratio\n";
    for (const auto& row : report.schedule) {
        out << format_real(row.scale) << ',' << format_real(row.t_g) << ',' << format_real(row.t_h) << ','
            << format_real(row.log_t_g) << ',' << format_real(row.log_t_h) << ','
            << (row.ratio ? format_real(*row.ratio) : "") << '\n';
    }
    return out.str();
}

std::string search_csv(const SearchResult& result) {
    std::ostringstream out;
    out << "restart,blocks,start,iterations,ratio\n";
    for (std::size_t i = 0; i < result.traces.size(); ++i) {
        const auto& t = result.traces[i];
        out << i << ',' << t.blocks << ',' << csv_field(t.start) << ',' << t.iterations << ','
            << (t.ratio ? format_real(*t.ratio) : "") << '\n';
    }
    return out.str();
}

std::string suites_csv(const std::vector<SuiteReport>& reports) {
    std::ostringstream out;
    out << "suite,trials,skipped,failures,min_residual\n";
    for (const auto& r : reports)
        out << r.suite << ',' << r.trials << ',' << r.skipped << ',' << r.failures.size() << ','
            << (r.min_residual ? format_real(*r.min_residual) : "") << '\n';
    return out.str();
}

std::string suites_junit(const std::vector<SuiteReport>& reports) {
    std::ostringstream out;
    std::size_t failures = 0;
    for (const auto& r : reports) failures += r.failures.size();
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<testsuites name=\"rhokit-verify\" failures=\"" << failures << "\">\n";
    for (const auto& r : reports) {
        out << "  <testsuite name=\"" << xml_escape(r.suite) << "\" tests=\"" << r.failures.size() + 1
            << "\" failures=\"" << r.failures.size() << "\" skipped=\"" << r.skipped << "\">\n";
        for (const auto& f : r.failures) {
            out << "    <testcase classname=\"" << xml_escape(r.suite) << "\" name=\"trial " << f.trial << "\">\n";
            out << "      <failure message=\"residual " << format_real(f.residual) << "\">seed " << f.seed << ": "
                << xml_escape(f.instance) << "</failure>\n";
            out << "    </testcase>\n";
        }
        out << "    <testcase classname=\"" << xml_escape(r.suite) << "\" name=\"" << r.trials - r.skipped
            << " trials checked\"/>\n";
        out << "  </testsuite>\n";
    }
    out << "</testsuites>\n";
    return out.str();
}

}  // namespace rhokit
