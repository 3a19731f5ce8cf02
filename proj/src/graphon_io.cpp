#include "rhokit/graphon_io.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "rhokit/error.hpp"

namespace rhokit {

namespace {

std::string number(double x) {
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "%.17g", x);
    return buffer;
}

struct Token {
    std::string text;
    std::size_t position;
};

std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < text.size()) {
        const char c = text[i];
        if (c == '#') {
            while (i < text.size() && text[i] != '\n') ++i;
        } else if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
        } else {
            const std::size_t start = i;
            while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) && text[i] != '#') ++i;
            out.push_back({std::string(text.substr(start, i - start)), start});
        }
    }
    return out;
}

double to_number(const Token& t) {
    double x = 0;
    const char* end = t.text.data() + t.text.size();
    auto [ptr, ec] = std::from_chars(t.text.data(), end, x);
    if (ec != std::errc() || ptr != end || !std::isfinite(x)) throw ParseError("expected a number, got '" + t.text + "'", t.position);
    return x;
}

}  // namespace

std::string format_graphon(const WeightedGraph& w) {
    const int k = w.block_count();
    std::string out = std::to_string(k) + "\n";
    for (int i = 0; i < k; ++i) out += (i ? " " : "") + number(w.mass(i));
    out += "\n";
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) out += (j ? " " : "") + number(w.weight(i, j));
        out += "\n";
    }
    return out;
}

WeightedGraph parse_graphon(std::string_view text) {
    const std::vector<Token> tokens = tokenize(text);
    if (tokens.empty()) throw ParseError("empty graphon file", 0);
    const double count = to_number(tokens[0]);
    if (count < 1 || count > 64 || count != std::floor(count))
        throw ParseError("block count must be an integer in 1..64", tokens[0].position);
    const auto k = static_cast<std::size_t>(count);
    const std::size_t expected = 1 + k + k * k;
    if (tokens.size() != expected) {
        const std::size_t at = tokens.size() > expected ? tokens[expected].position : text.size();
        throw ParseError("expected " + std::to_string(k) + " masses and " + std::to_string(k * k) + " weights", at);
    }
    std::vector<double> masses(k), weights(k * k);
    double total = 0;
    for (std::size_t i = 0; i < k; ++i) {
        masses[i] = to_number(tokens[1 + i]);
        if (!(masses[i] > 0)) throw ParseError("masses must be positive", tokens[1 + i].position);
        total += masses[i];
    }
    if (std::abs(total - 1) > 1e-9) throw ParseError("masses must sum to 1", tokens[1].position);
    for (std::size_t i = 0; i < k * k; ++i) weights[i] = to_number(tokens[1 + k + i]);
    return WeightedGraph::normalized(std::move(masses), std::move(weights));
}

WeightedGraph load_graphon(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_graphon(buffer.str());
}

void save_graphon(const WeightedGraph& w, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path);
    out << format_graphon(w);
    if (!out) throw IoError("cannot write " + path);
}

}  // namespace rhokit
