#pragma once

#include <map>
#include <string>
#include <string_view>

#include "matchbook/embedding.hpp"
#include "matchbook/graph.hpp"

namespace matchbook {

// Serialized graph. The canonical text form is line oriented and frozen:
//
//   matchbook-graph v1
//   n 4
//   edge 0 1
//   ...
//   label 0 alpha
//
// Edges sorted, labels sorted, one trailing newline; unknown directives are
// rejected. Certificates diff cleanly only if serialization is byte stable.
struct GraphDocument {
    int version = 1;
    int n = 0;
    std::vector<Edge> edges;
    std::map<Vertex, std::string> labels;  // optional external names

    Graph to_graph() const;
    static GraphDocument from_graph(const Graph& g);
};

// Serialized certificate:
//
//   matchbook-cert v1
//   order 0 1 2 3
//   pages 3
//   edge 0 1 0
//   ...
struct CertificateDocument {
    int version = 1;
    std::vector<Vertex> order;
    int pages = 1;
    std::vector<std::pair<Edge, int>> assignment;  // sorted by edge

    BookEmbedding to_embedding() const;
    static CertificateDocument from_embedding(const BookEmbedding& emb);
};

GraphDocument parse_graph_document(std::string_view text);
std::string serialize_graph_document(const GraphDocument& doc);

CertificateDocument parse_certificate_document(std::string_view text);
std::string serialize_certificate_document(const CertificateDocument& doc);

// Shorthands for the common no-label case.
Graph parse_graph(std::string_view text);
std::string serialize_graph(const Graph& g);
BookEmbedding parse_certificate(std::string_view text);
std::string serialize_certificate(const BookEmbedding& emb);

struct RenderStyle {
    bool two_sided = false;   // alternate pages above/below instead of all above
    bool show_labels = true;  // vertex indices under the spine
    bool force = false;       // render even if the certificate fails to verify
    double spacing = 44.0;    // distance between adjacent spine vertices
    double margin = 36.0;
};

// Static arc-diagram rendering of a certificate: spine dots in order, one
// semicircular arc per edge, one color per page. Output is byte stable for
// fixed inputs. Refuses certificates that fail verification unless
// style.force.
std::string render_svg(const Graph& g, const BookEmbedding& emb, const RenderStyle& style = {});

}  // namespace matchbook
