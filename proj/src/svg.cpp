#include "kdecomp/svg.hpp"

#include <cstdio>
#include <ostream>
#include <string>

#include "kdecomp/error.hpp"

namespace kdecomp {

namespace {

constexpr int kSize = 560;    // full viewport, px
constexpr int kMargin = 40;   // around the data square
constexpr int kInner = kSize - 2 * kMargin;

// Data coordinate (micros in [-1e6, 1e6]) to pixel centi-units, exactly.
long long to_centipx(std::int64_t micros, bool flip) {
    if (flip) micros = -micros;  // SVG y grows downward
    // (micros + 1e6) / 2e6 * kInner, in hundredths of a pixel
    long long offset = (micros + 1'000'000) * kInner / 20'000;
    return static_cast<long long>(kMargin) * 100 + offset;
}

std::string centipx_text(long long centi) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%lld.%02lld", centi / 100, centi % 100);
    return buf;
}

}  // namespace

void write_scatter_svg(std::ostream& out, const TupleDataset& points, std::size_t col_x,
                       std::size_t col_y, std::string_view label_x, std::string_view label_y) {
    if (col_x >= points.n_cols() || col_y >= points.n_cols()) {
        throw BoundsError("scatter plot column out of range");
    }

    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kSize << "\" height=\""
        << kSize << "\" viewBox=\"0 0 " << kSize << " " << kSize << "\">\n";
    out << "<rect x=\"" << kMargin << "\" y=\"" << kMargin << "\" width=\"" << kInner
        << "\" height=\"" << kInner << "\" fill=\"white\" stroke=\"black\"/>\n";

    // zero axes
    int mid = kMargin + kInner / 2;
    out << "<line x1=\"" << kMargin << "\" y1=\"" << mid << "\" x2=\"" << kMargin + kInner
        << "\" y2=\"" << mid << "\" stroke=\"lightgray\"/>\n";
    out << "<line x1=\"" << mid << "\" y1=\"" << kMargin << "\" x2=\"" << mid << "\" y2=\""
        << kMargin + kInner << "\" stroke=\"lightgray\"/>\n";

    out << "<text x=\"" << kMargin + kInner / 2 << "\" y=\"" << kSize - 8
        << "\" text-anchor=\"middle\" font-size=\"14\">" << label_x << "</text>\n";
    out << "<text x=\"14\" y=\"" << kMargin + kInner / 2 << "\" text-anchor=\"middle\" "
        << "font-size=\"14\" transform=\"rotate(-90 14 " << kMargin + kInner / 2 << ")\">"
        << label_y << "</text>\n";

    std::string line;
    for (std::size_t i = 0; i < points.m_rows(); ++i) {
        auto row = points.row(i);
        line = "<circle cx=\"";
        line += centipx_text(to_centipx(row[col_x].micros(), false));
        line += "\" cy=\"";
        line += centipx_text(to_centipx(row[col_y].micros(), true));
        line += "\" r=\"1.5\" fill=\"black\" fill-opacity=\"0.5\"/>\n";
        out << line;
    }
    out << "</svg>\n";
}

}  // namespace kdecomp
