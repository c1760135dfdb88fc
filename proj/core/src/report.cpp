#include "accelent/report.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "accelent/errors.hpp"

namespace accelent {
namespace {

std::string fixed2(double v) {
    std::array<char, 64> buf{};
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::fixed, 2);
    return {buf.data(), end};
}

std::ofstream open_for_write(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
    return out;
}

void finish(std::ofstream& out, const std::filesystem::path& path) {
    out.flush();
    if (!out) throw IoError("failed writing '" + path.string() + "'");
}

std::string_view color_of(ReducedSystem system) {
    switch (system) {
        case ReducedSystem::Full: return "#000000";
        case ReducedSystem::SP:
        case ReducedSystem::PP: return "#1f77b4";
        case ReducedSystem::SA:
        case ReducedSystem::AA: return "#d62728";
        case ReducedSystem::PA: return "#2ca02c";
        case ReducedSystem::AP: return "#9467bd";
    }
    return "#777777";
}

std::string_view dash_of(ReducedSystem system, Acceleration accelerated) {
    if (system == ReducedSystem::Full) return "10,4,2,4";
    return accelerated == Acceleration::One ? "6,4" : "";
}

// "ρ_{s,p}" -> ρ with an SVG subscript.
std::string svg_symbol(std::string_view symbol) {
    const auto open = symbol.find("_{");
    if (open == std::string_view::npos) return std::string(symbol);
    std::string out(symbol.substr(0, open));
    out += "<tspan dy=\"4\" font-size=\"9\">";
    out += symbol.substr(open + 2, symbol.size() - open - 3);
    out += "</tspan>";
    return out;
}

}  // namespace

std::string format_number(double value) {
    if (value == 0.0) return "0";  // also folds -0
    std::array<char, 64> buf{};
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value,
                                   std::chars_format::general, 12);
    return {buf.data(), end};
}

std::vector<std::string> csv_header(const SweepTable& table) {
    std::vector<std::string> header;
    if (table.mu2_mode) header.emplace_back("mu2");
    header.emplace_back("r");
    for (auto system : table.systems) header.push_back("ln_" + std::string(system_key(system)));
    if (statistics_of(table.scenario) == Statistics::Fermion) {
        for (auto system : table.systems) header.push_back("cf_" + std::string(system_key(system)));
    }
    header.emplace_back("deficit");
    header.emplace_back("cutoff");
    header.emplace_back("converged");
    return header;
}

void write_csv(const SweepTable& table, std::ostream& out) {
    const auto header = csv_header(table);
    for (std::size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << header[i];
    out << '\n';
    for (const auto& row : table.rows) {
        std::string line;
        if (table.mu2_mode) line += format_number(row.parameter) + ",";
        line += format_number(row.squeeze);
        for (double v : row.ln) line += "," + format_number(v);
        for (double v : row.closed_form) line += "," + format_number(v);
        line += "," + format_number(row.deficit);
        line += "," + std::to_string(row.cutoff);
        line += row.converged ? ",1" : ",0";
        out << line << '\n';
    }
}

void emit_csv(const SweepTable& table, const std::filesystem::path& path) {
    auto out = open_for_write(path);
    write_csv(table, out);
    finish(out, path);
}

void write_svg(std::span<const SweepTable> tables, std::ostream& out, const PlotStyle& style) {
    const double left = 70, right = 200, top = 40, bottom = 60;
    const double w = style.width, h = style.height;
    const double pw = w - left - right, ph = h - top - bottom;

    double xmin = 0.0, xmax = 1.0;
    bool first = true;
    bool fermion = false, mu2 = false;
    for (const auto& t : tables) {
        fermion = fermion || statistics_of(t.scenario) == Statistics::Fermion;
        mu2 = mu2 || t.mu2_mode;
        for (const auto& row : t.rows) {
            xmin = first ? row.parameter : std::min(xmin, row.parameter);
            xmax = first ? row.parameter : std::max(xmax, row.parameter);
            first = false;
        }
    }
    if (xmax <= xmin) xmax = xmin + 1.0;
    const double ymax = 1.05;
    auto px = [&](double x) { return left + (x - xmin) / (xmax - xmin) * pw; };
    auto py = [&](double y) { return top + (1.0 - std::clamp(y, 0.0, ymax) / ymax) * ph; };

    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << style.width << "\" height=\""
        << style.height << "\" viewBox=\"0 0 " << style.width << ' ' << style.height
        << "\" font-family=\"sans-serif\" font-size=\"13\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    if (!style.title.empty()) {
        out << "<text x=\"" << fixed2(left + pw / 2) << "\" y=\"22\" text-anchor=\"middle\">"
            << style.title << "</text>\n";
    }

    // Axes, ticks and grid.
    out << "<g stroke=\"#000\" stroke-width=\"1\">\n";
    out << "<line x1=\"" << fixed2(left) << "\" y1=\"" << fixed2(top + ph) << "\" x2=\""
        << fixed2(left + pw) << "\" y2=\"" << fixed2(top + ph) << "\"/>\n";
    out << "<line x1=\"" << fixed2(left) << "\" y1=\"" << fixed2(top) << "\" x2=\"" << fixed2(left)
        << "\" y2=\"" << fixed2(top + ph) << "\"/>\n";
    out << "</g>\n";
    out << "<g font-size=\"11\">\n";
    for (int i = 0; i <= 5; ++i) {
        const double y = 0.2 * i;
        out << "<line x1=\"" << fixed2(left - 4) << "\" y1=\"" << fixed2(py(y)) << "\" x2=\""
            << fixed2(left + pw) << "\" y2=\"" << fixed2(py(y))
            << "\" stroke=\"#ddd\" stroke-width=\"0.5\"/>\n";
        out << "<text x=\"" << fixed2(left - 8) << "\" y=\"" << fixed2(py(y) + 4)
            << "\" text-anchor=\"end\">" << fixed2(y).substr(0, 3) << "</text>\n";
    }
    for (int i = 0; i <= 5; ++i) {
        const double x = xmin + (xmax - xmin) * i / 5.0;
        out << "<line x1=\"" << fixed2(px(x)) << "\" y1=\"" << fixed2(top + ph) << "\" x2=\""
            << fixed2(px(x)) << "\" y2=\"" << fixed2(top + ph + 4) << "\" stroke=\"#000\"/>\n";
        out << "<text x=\"" << fixed2(px(x)) << "\" y=\"" << fixed2(top + ph + 18)
            << "\" text-anchor=\"middle\">" << fixed2(x) << "</text>\n";
    }
    out << "</g>\n";
    const std::string xlabel = mu2 ? "μ<tspan dy=\"-6\" font-size=\"9\">2</tspan>"
                               : fermion ? "r<tspan dy=\"4\" font-size=\"9\">f</tspan>"
                                         : "r";
    out << "<text x=\"" << fixed2(left + pw / 2) << "\" y=\"" << fixed2(h - 18)
        << "\" text-anchor=\"middle\">" << xlabel << "</text>\n";
    out << "<text transform=\"translate(20 " << fixed2(top + ph / 2)
        << ") rotate(-90)\" text-anchor=\"middle\">LN</text>\n";

    // Curves and legend.
    int legend_row = 0;
    for (const auto& t : tables) {
        const Acceleration acc = acceleration_of(t.scenario);
        for (std::size_t s = 0; s < t.systems.size(); ++s) {
            const ReducedSystem system = t.systems[s];
            const auto dash = dash_of(system, acc);
            out << "<polyline fill=\"none\" stroke=\"" << color_of(system)
                << "\" stroke-width=\"1.8\"";
            if (!dash.empty()) out << " stroke-dasharray=\"" << dash << '"';
            out << " points=\"";
            for (std::size_t i = 0; i < t.rows.size(); ++i) {
                out << (i ? " " : "") << fixed2(px(t.rows[i].parameter)) << ','
                    << fixed2(py(t.rows[i].ln[s]));
            }
            out << "\"/>\n";

            const double ly = top + 10 + 20.0 * legend_row++;
            const double lx = left + pw + 16;
            out << "<line x1=\"" << fixed2(lx) << "\" y1=\"" << fixed2(ly) << "\" x2=\""
                << fixed2(lx + 30) << "\" y2=\"" << fixed2(ly) << "\" stroke=\"" << color_of(system)
                << "\" stroke-width=\"1.8\"";
            if (!dash.empty()) out << " stroke-dasharray=\"" << dash << '"';
            out << "/>\n";
            out << "<text x=\"" << fixed2(lx + 38) << "\" y=\"" << fixed2(ly + 4) << "\">"
                << svg_symbol(system_symbol(system, acc)) << "</text>\n";
        }
    }
    out << "</svg>\n";
}

void emit_plot(std::span<const SweepTable> tables, const std::filesystem::path& path,
               const PlotStyle& style) {
    if (path.empty()) return;
    auto out = open_for_write(path);
    write_svg(tables, out, style);
    finish(out, path);
}

ConversionReport convert_mu2(double mass, double field, Statistics statistics) {
    ConversionReport report;
    report.statistics = statistics;
    report.mass = mass;
    report.field = field;
    report.mu2 = mu2_from_field({mass, field});
    if (statistics == Statistics::Boson) {
        const auto c = scalar_coefficients(report.mu2);
        report.alpha_mag = c.alpha_mag;
        report.beta_mag = c.beta_mag;
        report.squeeze = c.r;
    } else {
        const auto c = fermion_coefficients(report.mu2);
        report.alpha_mag = c.alpha_mag;
        report.beta_mag = c.beta_mag;
        report.squeeze = c.r_f;
    }
    report.residual = verify_unitarity(report.mu2, statistics);
    return report;
}

void write_report(const ConversionReport& report, std::ostream& out) {
    const bool boson = report.statistics == Statistics::Boson;
    out << "statistics " << (boson ? "scalar" : "fermion") << '\n'
        << "mass       " << format_number(report.mass) << '\n'
        << "field      " << format_number(report.field) << '\n'
        << "mu2        " << format_number(report.mu2) << '\n'
        << "alpha_mag  " << format_number(report.alpha_mag) << '\n'
        << "beta_mag   " << format_number(report.beta_mag) << '\n'
        << (boson ? "r          " : "r_f        ") << format_number(report.squeeze) << '\n'
        << "residual   " << format_number(report.residual) << '\n';
}

}  // namespace accelent
