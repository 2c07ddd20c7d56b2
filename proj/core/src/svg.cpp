#include <array>
#include <cstdio>
#include <sstream>

#include "matchbook/io.hpp"

namespace matchbook {

namespace {

constexpr std::array<const char*, 12> kPalette = {
    "#e41a1c", "#377eb8", "#4daf4a", "#984ea3", "#ff7f00", "#a65628",
    "#f781bf", "#17becf", "#666666", "#bcbd22", "#8c564b", "#1b9e77",
};

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1f", x);
    return buf;
}

}  // namespace

std::string render_svg(const Graph& g, const BookEmbedding& emb, const RenderStyle& style) {
    VerificationReport report = verify(g, emb);
    if (!report.ok && !style.force)
        throw Error(errc::invalid_certificate,
                    "refusing to render a certificate that fails verification");

    const int n = emb.order.size();
    const double spacing = style.spacing;
    const double margin = style.margin;
    const double width = 2 * margin + spacing * std::max(n - 1, 0);
    const double arc_room = spacing * std::max(n - 1, 0) / 2.0 + 16.0;
    const double baseline = arc_room + 8.0;
    const double below_room = style.two_sided ? arc_room : (style.show_labels ? 28.0 : 16.0);
    const double height = baseline + below_room + 8.0;

    auto x_of = [&](Vertex v) { return margin + spacing * emb.order.position(v); };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width) << "\" height=\""
        << fmt(height) << "\" viewBox=\"0 0 " << fmt(width) << " " << fmt(height) << "\">\n";
    out << "<line x1=\"" << fmt(margin) << "\" y1=\"" << fmt(baseline) << "\" x2=\""
        << fmt(width - margin) << "\" y2=\"" << fmt(baseline)
        << "\" stroke=\"#444444\" stroke-width=\"1\"/>\n";

    out << "<g fill=\"none\" stroke-width=\"1.6\">\n";
    for (const auto& [e, page] : emb.page_of) {
        double x1 = x_of(e.u), x2 = x_of(e.v);
        if (x1 > x2) std::swap(x1, x2);
        double r = (x2 - x1) / 2.0;
        bool below = style.two_sided && (page % 2 == 1);
        out << "<path d=\"M " << fmt(x1) << " " << fmt(baseline) << " A " << fmt(r) << " " << fmt(r)
            << " 0 0 " << (below ? 0 : 1) << " " << fmt(x2) << " " << fmt(baseline)
            << "\" stroke=\"" << kPalette[page % static_cast<int>(kPalette.size())] << "\"/>\n";
    }
    out << "</g>\n";

    for (Vertex v : emb.order.sequence())
        out << "<circle cx=\"" << fmt(x_of(v)) << "\" cy=\"" << fmt(baseline)
            << "\" r=\"3.2\" fill=\"#222222\"/>\n";

    if (style.show_labels) {
        double label_y = baseline + (style.two_sided ? -8.0 : 18.0);
        for (Vertex v : emb.order.sequence())
            out << "<text x=\"" << fmt(x_of(v)) << "\" y=\"" << fmt(label_y)
                << "\" font-family=\"monospace\" font-size=\"11\" text-anchor=\"middle\">" << v
                << "</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace matchbook
