#include "rhokit/graph_spec.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "rhokit/error.hpp"
#include "rhokit/families.hpp"

namespace rhokit {

bool operator==(const GraphSpec& a, const GraphSpec& b) {
    if (a.kind != b.kind || a.params != b.params || a.file != b.file) return false;
    if (static_cast<bool>(a.inner) != static_cast<bool>(b.inner)) return false;
    return !a.inner || *a.inner == *b.inner;
}

namespace {

class SpecParser {
public:
    explicit SpecParser(std::string_view text) : text_(text) {}

    GraphSpec parse() {
        skip_spaces();
        GraphSpec spec = parse_spec();
        skip_spaces();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return spec;
    }

private:
    [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }

    void skip_spaces() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool consume(std::string_view token) {
        if (text_.substr(pos_, token.size()) == token) {
            pos_ += token.size();
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    int parse_int() {
        std::size_t start = pos_;
        if (peek() == '-') ++pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        int value = 0;
        auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, value);
        if (ec != std::errc{} || ptr != text_.data() + pos_ || start == pos_) {
            pos_ = start;
            fail("expected an integer");
        }
        return value;
    }

    std::vector<int> parse_list() {
        std::vector<int> values;
        expect('[');
        skip_spaces();
        values.push_back(parse_int());
        skip_spaces();
        while (peek() == ',') {
            ++pos_;
            skip_spaces();
            values.push_back(parse_int());
            skip_spaces();
        }
        expect(']');
        return values;
    }

    void check(bool ok, std::size_t at, const std::string& message) const {
        if (!ok) throw ParseError(message, at);
    }

    GraphSpec parse_spec() {
        GraphSpec spec;
        const std::size_t start = pos_;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            int copies = parse_int();
            expect('x');
            check(copies >= 1, start, "number of copies must be positive");
            spec.kind = GraphSpec::Kind::copies;
            spec.params = {copies};
            spec.inner = std::make_shared<const GraphSpec>(parse_spec());
            return spec;
        }
        if (consume("paw")) {
            spec.kind = GraphSpec::Kind::paw;
            return spec;
        }
        if (consume("Khub")) {
            spec.kind = GraphSpec::Kind::hub;
            spec.params = parse_list();
            for (int a : spec.params) check(a >= 0, start, "hub pendant counts must be nonnegative");
            return spec;
        }
        if (consume("Gtail")) {
            spec.kind = GraphSpec::Kind::cycle_tail;
            spec.params = parse_list();
            check(spec.params.size() == 2, start, "Gtail takes exactly two parameters");
            check(spec.params[0] >= 1, start, "Gtail needs k >= 1");
            check(spec.params[1] >= 0, start, "Gtail needs a nonnegative tail length");
            return spec;
        }
        if (consume("K[")) {
            --pos_;
            spec.kind = GraphSpec::Kind::multipartite;
            spec.params = parse_list();
            bool positive = false;
            for (int a : spec.params) {
                check(a >= 0, start, "part sizes must be nonnegative");
                positive = positive || a > 0;
            }
            check(positive, start, "complete multipartite graph needs a positive part");
            return spec;
        }
        if (consume("@")) {
            spec.kind = GraphSpec::Kind::edge_file;
            std::size_t end = pos_;
            while (end < text_.size() && !std::isspace(static_cast<unsigned char>(text_[end]))) ++end;
            check(end > pos_, pos_, "expected a file path after '@'");
            spec.file = std::string(text_.substr(pos_, end - pos_));
            pos_ = end;
            return spec;
        }
        const char head = peek();
        if (head == 'P' || head == 'C' || head == 'K' || head == 'S') {
            ++pos_;
            const int value = parse_int();
            switch (head) {
            case 'P':
                spec.kind = GraphSpec::Kind::path;
                check(value >= 1, start, "path needs at least one edge");
                break;
            case 'C':
                spec.kind = GraphSpec::Kind::cycle;
                check(value >= 3, start, "cycle needs length at least 3");
                break;
            case 'K':
                spec.kind = GraphSpec::Kind::complete;
                check(value >= 1, start, "complete graph needs at least one vertex");
                break;
            default:
                spec.kind = GraphSpec::Kind::star;
                check(value >= 1, start, "star needs at least one leaf");
                break;
            }
            spec.params = {value};
            return spec;
        }
        fail("unknown graph family");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

std::string join(const std::vector<int>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(values[i]);
    }
    return out;
}

}  // namespace

GraphSpec parse_spec(std::string_view text) { return SpecParser(text).parse(); }

std::string render(const GraphSpec& spec) {
    using Kind = GraphSpec::Kind;
    switch (spec.kind) {
    case Kind::path: return "P" + std::to_string(spec.params.at(0));
    case Kind::cycle: return "C" + std::to_string(spec.params.at(0));
    case Kind::complete: return "K" + std::to_string(spec.params.at(0));
    case Kind::star: return "S" + std::to_string(spec.params.at(0));
    case Kind::multipartite: return "K[" + join(spec.params) + "]";
    case Kind::hub: return "Khub[" + join(spec.params) + "]";
    case Kind::cycle_tail: return "Gtail[" + join(spec.params) + "]";
    case Kind::paw: return "paw";
    case Kind::copies: return std::to_string(spec.params.at(0)) + "x" + render(*spec.inner);
    case Kind::edge_file: return "@" + spec.file;
    }
    return {};
}

Graph to_graph(const GraphSpec& spec) {
    using Kind = GraphSpec::Kind;
    switch (spec.kind) {
    case Kind::path: return path_graph(spec.params.at(0));
    case Kind::cycle: return cycle_graph(spec.params.at(0));
    case Kind::complete: return complete_graph(spec.params.at(0));
    case Kind::star: return star_graph(spec.params.at(0));
    case Kind::multipartite: return complete_multipartite(spec.params);
    case Kind::hub: return hub_graph(spec.params);
    case Kind::cycle_tail: return cycle_tail_graph(spec.params.at(0), spec.params.at(1));
    case Kind::paw: return paw_graph();
    case Kind::copies: return disjoint_copies(to_graph(*spec.inner), spec.params.at(0));
    case Kind::edge_file: return read_edge_file(spec.file);
    }
    throw DomainError("unknown graph spec kind");
}

Graph parse_graph_spec(std::string_view text) { return to_graph(parse_spec(text)); }

Graph parse_edge_list(std::string_view text) {
    std::string cleaned;
    cleaned.reserve(text.size());
    bool comment = false;
    for (char c : text) {
        if (c == '#') comment = true;
        if (c == '\n') comment = false;
        cleaned += comment ? ' ' : c;
    }
    std::istringstream in(cleaned);
    long long n = 0;
    if (!(in >> n) || n < 0) throw ParseError("edge list must start with a vertex count", 0);
    std::vector<Edge> edges;
    long long u = 0;
    long long v = 0;
    while (in >> u) {
        if (!(in >> v)) throw ParseError("edge list has an odd number of endpoints", cleaned.size());
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    if (!in.eof()) throw ParseError("edge list contains a non-integer token", cleaned.size());
    return Graph(static_cast<int>(n), std::move(edges));
}

Graph read_edge_file(const std::string& path) {
    std::ifstream file(path);
    if (!file) throw IoError("cannot open edge file '" + path + "'");
    std::stringstream buffer;
    buffer << file.rdbuf();
    return parse_edge_list(buffer.str());
}

}  // namespace rhokit
