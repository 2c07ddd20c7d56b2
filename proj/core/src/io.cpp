#include "matchbook/io.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

namespace matchbook {

namespace {

struct Token {
    std::string_view text;
    int column;  // 1-based
};

struct Line {
    int number = 0;  // 1-based
    std::vector<Token> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
    std::vector<Line> lines;
    int number = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t eol = text.find('\n', pos);
        std::string_view raw =
            text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
        ++number;
        if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
        Line line;
        line.number = number;
        size_t i = 0;
        while (i < raw.size()) {
            while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t')) ++i;
            size_t start = i;
            while (i < raw.size() && raw[i] != ' ' && raw[i] != '\t') ++i;
            if (i > start)
                line.tokens.push_back({raw.substr(start, i - start), static_cast<int>(start) + 1});
        }
        if (!line.tokens.empty()) lines.push_back(std::move(line));
        if (eol == std::string_view::npos) break;
        pos = eol + 1;
    }
    return lines;
}

int parse_int(const Line& line, const Token& tok) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), value);
    if (ec != std::errc() || ptr != tok.text.data() + tok.text.size())
        throw ParseError(line.number, tok.column, "expected an integer, got '" + std::string(tok.text) + "'");
    return value;
}

void expect_arity(const Line& line, size_t count) {
    if (line.tokens.size() != count)
        throw ParseError(line.number, line.tokens.front().column,
                         "directive '" + std::string(line.tokens.front().text) + "' expects " +
                             std::to_string(count - 1) + " argument(s)");
}

void check_header(const std::vector<Line>& lines, std::string_view magic) {
    if (lines.empty()) throw ParseError(1, 1, "empty document");
    const Line& head = lines.front();
    if (head.tokens.size() != 2 || head.tokens[0].text != magic || head.tokens[1].text != "v1")
        throw ParseError(head.number, head.tokens.front().column,
                         "expected header '" + std::string(magic) + " v1'");
}

}  // namespace

Graph GraphDocument::to_graph() const { return Graph(n, edges); }

GraphDocument GraphDocument::from_graph(const Graph& g) {
    GraphDocument doc;
    doc.n = g.vertex_count();
    doc.edges = g.edges();
    return doc;
}

GraphDocument parse_graph_document(std::string_view text) {
    auto lines = tokenize(text);
    check_header(lines, "matchbook-graph");

    GraphDocument doc;
    bool have_n = false;
    for (size_t i = 1; i < lines.size(); ++i) {
        const Line& line = lines[i];
        std::string_view dir = line.tokens.front().text;
        if (dir == "n") {
            expect_arity(line, 2);
            if (have_n)
                throw ParseError(line.number, line.tokens[0].column, "duplicate 'n' directive");
            doc.n = parse_int(line, line.tokens[1]);
            if (doc.n < 0)
                throw Error(errc::invalid_graph, "negative vertex count");
            have_n = true;
        } else if (dir == "edge") {
            expect_arity(line, 3);
            if (!have_n)
                throw ParseError(line.number, line.tokens[0].column, "'edge' before 'n'");
            Vertex u = parse_int(line, line.tokens[1]);
            Vertex v = parse_int(line, line.tokens[2]);
            if (u == v) throw Error(errc::invalid_graph, "self-loop at vertex " + std::to_string(u));
            doc.edges.emplace_back(u, v);
        } else if (dir == "label") {
            expect_arity(line, 3);
            if (!have_n)
                throw ParseError(line.number, line.tokens[0].column, "'label' before 'n'");
            Vertex v = parse_int(line, line.tokens[1]);
            if (v < 0 || v >= doc.n)
                throw Error(errc::invalid_graph, "label for out-of-range vertex " + std::to_string(v));
            if (doc.labels.count(v))
                throw ParseError(line.number, line.tokens[1].column,
                                 "duplicate label for vertex " + std::to_string(v));
            doc.labels[v] = std::string(line.tokens[2].text);
        } else {
            throw ParseError(line.number, line.tokens[0].column,
                             "unknown directive '" + std::string(dir) + "'");
        }
    }
    if (!have_n) throw ParseError(lines.back().number, 1, "missing 'n' directive");
    doc.to_graph();  // validate edges eagerly
    return doc;
}

std::string serialize_graph_document(const GraphDocument& doc) {
    std::vector<Edge> edges = doc.edges;
    std::sort(edges.begin(), edges.end());
    std::ostringstream out;
    out << "matchbook-graph v1\n";
    out << "n " << doc.n << "\n";
    for (const Edge& e : edges) out << "edge " << e.u << " " << e.v << "\n";
    for (const auto& [v, name] : doc.labels) out << "label " << v << " " << name << "\n";
    return out.str();
}

BookEmbedding CertificateDocument::to_embedding() const {
    BookEmbedding emb;
    emb.order = SpineOrder(order);
    emb.pages = pages;
    for (const auto& [e, page] : assignment) emb.page_of[e] = page;
    return emb;
}

CertificateDocument CertificateDocument::from_embedding(const BookEmbedding& emb) {
    CertificateDocument doc;
    doc.order = emb.order.sequence();
    doc.pages = emb.pages;
    for (const auto& [e, page] : emb.page_of) doc.assignment.emplace_back(e, page);
    return doc;
}

CertificateDocument parse_certificate_document(std::string_view text) {
    auto lines = tokenize(text);
    check_header(lines, "matchbook-cert");

    CertificateDocument doc;
    bool have_order = false, have_pages = false;
    std::set<Vertex> on_spine;
    std::set<Edge> seen_edges;

    for (size_t i = 1; i < lines.size(); ++i) {
        const Line& line = lines[i];
        std::string_view dir = line.tokens.front().text;
        if (dir == "order") {
            if (have_order)
                throw ParseError(line.number, line.tokens[0].column, "duplicate 'order' directive");
            for (size_t t = 1; t < line.tokens.size(); ++t) {
                Vertex v = parse_int(line, line.tokens[t]);
                if (v < 0)
                    throw Error(errc::invalid_certificate, "negative vertex on the spine");
                if (!on_spine.insert(v).second)
                    throw Error(errc::invalid_certificate,
                                "vertex " + std::to_string(v) + " appears twice on the spine");
                doc.order.push_back(v);
            }
            have_order = true;
        } else if (dir == "pages") {
            expect_arity(line, 2);
            if (have_pages)
                throw ParseError(line.number, line.tokens[0].column, "duplicate 'pages' directive");
            doc.pages = parse_int(line, line.tokens[1]);
            if (doc.pages < 1)
                throw Error(errc::invalid_certificate, "page count must be at least 1");
            have_pages = true;
        } else if (dir == "edge") {
            expect_arity(line, 4);
            if (!have_order || !have_pages)
                throw ParseError(line.number, line.tokens[0].column,
                                 "'edge' before 'order' and 'pages'");
            Vertex u = parse_int(line, line.tokens[1]);
            Vertex v = parse_int(line, line.tokens[2]);
            int page = parse_int(line, line.tokens[3]);
            if (u == v)
                throw Error(errc::invalid_certificate, "self-loop at vertex " + std::to_string(u));
            if (!on_spine.count(u) || !on_spine.count(v))
                throw Error(errc::invalid_certificate, "edge endpoint not on the spine");
            if (page < 0 || page >= doc.pages)
                throw Error(errc::invalid_certificate,
                            "page index " + std::to_string(page) + " outside [0, " +
                                std::to_string(doc.pages) + ")");
            Edge e(u, v);
            if (!seen_edges.insert(e).second)
                throw Error(errc::invalid_certificate, "duplicate assignment for an edge");
            doc.assignment.emplace_back(e, page);
        } else {
            throw ParseError(line.number, line.tokens[0].column,
                             "unknown directive '" + std::string(dir) + "'");
        }
    }
    if (!have_order) throw ParseError(lines.back().number, 1, "missing 'order' directive");
    if (!have_pages) throw ParseError(lines.back().number, 1, "missing 'pages' directive");
    std::sort(doc.assignment.begin(), doc.assignment.end());
    return doc;
}

std::string serialize_certificate_document(const CertificateDocument& doc) {
    std::vector<std::pair<Edge, int>> assignment = doc.assignment;
    std::sort(assignment.begin(), assignment.end());
    std::ostringstream out;
    out << "matchbook-cert v1\n";
    out << "order";
    for (Vertex v : doc.order) out << " " << v;
    out << "\n";
    out << "pages " << doc.pages << "\n";
    for (const auto& [e, page] : assignment)
        out << "edge " << e.u << " " << e.v << " " << page << "\n";
    return out.str();
}

Graph parse_graph(std::string_view text) { return parse_graph_document(text).to_graph(); }

std::string serialize_graph(const Graph& g) {
    return serialize_graph_document(GraphDocument::from_graph(g));
}

BookEmbedding parse_certificate(std::string_view text) {
    return parse_certificate_document(text).to_embedding();
}

std::string serialize_certificate(const BookEmbedding& emb) {
    return serialize_certificate_document(CertificateDocument::from_embedding(emb));
}

}  // namespace matchbook
