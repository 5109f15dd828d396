#include "symcoh/report.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <sstream>

#include "json.hpp"
#include "symcoh/cohomology.hpp"

namespace symcoh {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json weight_to_json(const Weight& w) {
    auto arr = ordered_json::array();
    for (const Rat& q : w.f) {
        if (!is_integer(q)) throw std::logic_error("non-integral weight in report");
        arr.push_back(static_cast<long long>(to_integer(q)));
    }
    return arr;
}

ordered_json dim_to_json(const Int& dim) {
    static const Int max_exact = (Int(1) << 53) - 1;
    if (dim <= max_exact) return ordered_json(static_cast<long long>(dim));
    return ordered_json(dim.str());
}

ordered_json module_list_json(const RootSystem& rs, const VirtualModule& vm) {
    auto arr = ordered_json::array();
    for (const auto& [mu, mult] : vm.entries()) {
        ordered_json item;
        item["weight"] = weight_to_json(mu);
        item["mult"] = mult;
        item["dim"] = dim_to_json(rs.weyl_dim(mu));
        arr.push_back(std::move(item));
    }
    return arr;
}

bool is_cnh4(const SymmetricPair& pair) {
    return pair.name().rfind("CnH4", 0) == 0;
}

std::vector<long long> special_units(const SymmetricPair& pair, const Weight& lambda) {
    auto coords = pair.special_coords(lambda);
    std::vector<long long> units;
    for (int i = 0; i < pair.rank_restricted(); ++i)
        units.push_back(static_cast<long long>(to_integer((*coords)[i] * pair.unit_scale()[i])));
    return units;
}

}  // namespace

Weight lambda_from_cli(const SymmetricPair& pair, const std::vector<Int>& values) {
    if (static_cast<int>(values.size()) == pair.rank_restricted()) {
        auto w = pair.weight_from_units(values);
        if (!w)
            throw std::invalid_argument("lambda units are not divisible by the special basis scale");
        return *w;
    }
    if (static_cast<int>(values.size()) == pair.ambient_rank()) {
        Weight w = Weight::zero(pair.ambient_rank());
        for (int i = 0; i < pair.ambient_rank(); ++i) w[i] = values[i];
        require_special_lattice(pair, w);
        return w;
    }
    throw std::invalid_argument("lambda needs " + std::to_string(pair.rank_restricted()) +
                                " special units or " + std::to_string(pair.ambient_rank()) +
                                " ambient coordinates");
}

std::string euler_report_json(const SymmetricPair& pair, const Weight& lambda) {
    require_special_lattice(pair, lambda);
    VirtualModule chi = euler_character(pair, lambda);
    ordered_json doc;
    doc["schema"] = 1;
    doc["pair"] = pair.name();
    doc["lambda"] = weight_to_json(lambda);
    doc["lambda_units"] = special_units(pair, lambda);
    doc["chi"] = module_list_json(pair.rs(), chi);
    return doc.dump(2) + "\n";
}

std::string cohomology_report_json(const SymmetricPair& pair, const Weight& lambda, bool exact) {
    require_special_lattice(pair, lambda);
    CohomologyTable table;
    if (!exact) {
        table = bound_cohomology(pair, lambda);
    } else if (pair.name() == "conics") {
        auto coords = pair.special_coords(lambda);
        table = conics_cohomology(static_cast<long long>(to_integer((*coords)[0])),
                                  static_cast<long long>(to_integer((*coords)[1])));
    } else if (is_cnh4(pair)) {
        auto coords = pair.special_coords(lambda);
        table = sp_cohomology(pair, static_cast<long long>(to_integer((*coords)[0])),
                              static_cast<long long>(to_integer((*coords)[1])));
    } else {
        throw std::invalid_argument("no exact cohomology table for pair '" + pair.name() + "'");
    }

    ordered_json doc;
    doc["schema"] = 1;
    doc["pair"] = pair.name();
    doc["mode"] = exact ? "exact" : "bound";
    doc["lambda"] = weight_to_json(lambda);
    doc["lambda_units"] = special_units(pair, lambda);
    doc["dim_x"] = pair.dimension();
    auto rows = ordered_json::array();
    for (const auto& [d, vm] : table.by_degree()) {
        ordered_json row;
        row["degree"] = d;
        row["modules"] = module_list_json(pair.rs(), vm);
        rows.push_back(std::move(row));
    }
    doc["table"] = rows;
    return doc.dump(2) + "\n";
}

namespace {

std::set<int> point_degrees(const SymmetricPair& pair, long long cx, long long cy) {
    if (pair.name() == "conics") return conics_nonvanishing(cx, cy);
    Weight lambda = pair.weight_from_special({Int(cx), Int(cy)});
    return bound_cohomology(pair, lambda).support();
}

const char* kGlyphNames[] = {"circle", "plus", "cross", "square", "diamond", "triangle"};

std::string glyph_svg(int glyph, double px, double py) {
    std::ostringstream os;
    const double r = 5.0;
    switch (glyph % 6) {
        case 0:
            os << "<circle cx=\"" << px << "\" cy=\"" << py << "\" r=\"" << r
               << "\" fill=\"none\" stroke=\"black\"/>";
            break;
        case 1:
            os << "<path d=\"M " << px - r << " " << py << " H " << px + r << " M " << px << " "
               << py - r << " V " << py + r << "\" stroke=\"black\"/>";
            break;
        case 2:
            os << "<path d=\"M " << px - r << " " << py - r << " L " << px + r << " " << py + r
               << " M " << px - r << " " << py + r << " L " << px + r << " " << py - r
               << "\" stroke=\"black\"/>";
            break;
        case 3:
            os << "<rect x=\"" << px - r << "\" y=\"" << py - r << "\" width=\"" << 2 * r
               << "\" height=\"" << 2 * r << "\" fill=\"none\" stroke=\"black\"/>";
            break;
        case 4:
            os << "<path d=\"M " << px << " " << py - r << " L " << px + r << " " << py << " L "
               << px << " " << py + r << " L " << px - r << " " << py << " Z\" fill=\"none\" stroke=\"black\"/>";
            break;
        default:
            os << "<path d=\"M " << px << " " << py - r << " L " << px + r << " " << py + r
               << " L " << px - r << " " << py + r << " Z\" fill=\"none\" stroke=\"black\"/>";
            break;
    }
    return os.str();
}

}  // namespace

std::string regions_render(const SymmetricPair& pair, long long x0, long long x1, long long y0,
                           long long y1, const std::string& format) {
    if (pair.rank_restricted() != 2)
        throw std::invalid_argument("regions: pair must have restricted rank 2");
    if (x0 > x1 || y0 > y1) throw std::invalid_argument("regions: empty window");
    if (format != "svg" && format != "ascii")
        throw std::invalid_argument("regions: format must be svg or ascii");

    std::map<std::pair<long long, long long>, std::set<int>> grid;
    std::set<int> all_degrees;
    for (long long cx = x0; cx <= x1; ++cx)
        for (long long cy = y0; cy <= y1; ++cy) {
            auto degrees = point_degrees(pair, cx, cy);
            all_degrees.insert(degrees.begin(), degrees.end());
            grid[{cx, cy}] = std::move(degrees);
        }
    std::map<int, int> glyph_of;  // degree -> glyph index, in degree order
    for (int d : all_degrees) glyph_of.emplace(d, static_cast<int>(glyph_of.size()));

    if (format == "ascii") {
        std::ostringstream os;
        os << "# " << pair.name() << "  window x=[" << x0 << "," << x1 << "] y=[" << y0 << ","
           << y1 << "]  (special-basis coordinates; cells list nonvanishing degrees)\n";
        size_t width = 1;
        for (const auto& [pt, degrees] : grid) {
            size_t w = 1;
            if (!degrees.empty()) {
                w = 0;
                for (int d : degrees) w += std::to_string(d).size() + 1;
                w -= 1;
            }
            width = std::max(width, w);
        }
        for (long long cy = y1; cy >= y0; --cy) {
            os << std::setw(5) << cy << " |";
            for (long long cx = x0; cx <= x1; ++cx) {
                const auto& degrees = grid[{cx, cy}];
                std::string cell;
                if (degrees.empty()) {
                    cell = ".";
                } else {
                    for (int d : degrees) {
                        if (!cell.empty()) cell += ",";
                        cell += std::to_string(d);
                    }
                }
                os << " " << std::setw(static_cast<int>(width)) << cell;
            }
            os << "\n";
        }
        os << "      +";
        for (long long cx = x0; cx <= x1; ++cx) os << std::string(width + 1, '-');
        os << "\n       ";
        for (long long cx = x0; cx <= x1; ++cx) os << " " << std::setw(static_cast<int>(width)) << cx;
        os << "\n";
        return os.str();
    }

    const double cell = 26.0, margin = 60.0;
    const double w = margin * 2 + cell * static_cast<double>(x1 - x0);
    const double h = margin * 2 + cell * static_cast<double>(y1 - y0) + 24.0 * (all_degrees.size() + 1);
    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
       << "\" viewBox=\"0 0 " << w << " " << h << "\">\n";
    os << "<title>" << pair.name() << " nonvanishing degrees</title>\n";
    auto px_of = [&](long long cx) { return margin + cell * static_cast<double>(cx - x0); };
    auto py_of = [&](long long cy) { return margin + cell * static_cast<double>(y1 - cy); };
    for (const auto& [pt, degrees] : grid) {
        const double px = px_of(pt.first), py = py_of(pt.second);
        os << "<circle cx=\"" << px << "\" cy=\"" << py << "\" r=\"0.8\" fill=\"#999\"/>\n";
        for (int d : degrees) os << glyph_svg(glyph_of[d], px, py) << "\n";
    }
    // axes through the origin when visible
    if (x0 <= 0 && 0 <= x1)
        os << "<line x1=\"" << px_of(0) << "\" y1=\"" << py_of(y1) << "\" x2=\"" << px_of(0)
           << "\" y2=\"" << py_of(y0) << "\" stroke=\"#ccc\"/>\n";
    if (y0 <= 0 && 0 <= y1)
        os << "<line x1=\"" << px_of(x0) << "\" y1=\"" << py_of(0) << "\" x2=\"" << px_of(x1)
           << "\" y2=\"" << py_of(0) << "\" stroke=\"#ccc\"/>\n";
    double ly = margin + cell * static_cast<double>(y1 - y0) + 30.0;
    for (const auto& [d, glyph] : glyph_of) {
        ly += 24.0;
        os << glyph_svg(glyph, margin, ly) << "\n";
        os << "<text x=\"" << margin + 14 << "\" y=\"" << ly + 4 << "\" font-size=\"12\">H^" << d
           << " (" << kGlyphNames[glyph % 6] << ")</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

std::string catalog_list_json() {
    ordered_json doc;
    doc["schema"] = 1;
    auto arr = ordered_json::array();
    for (const auto& entry : catalog_entries()) {
        ordered_json item;
        item["name"] = entry.name;
        item["parameterized"] = entry.parameterized;
        if (entry.parameterized) item["min_n"] = entry.min_n;
        item["description"] = entry.description;
        arr.push_back(std::move(item));
    }
    doc["catalog"] = arr;
    return doc.dump(2) + "\n";
}

std::string pair_info_json(const SymmetricPair& pair) {
    ordered_json doc;
    doc["schema"] = 1;
    doc["name"] = pair.name();
    doc["family"] = pair.rs().family() == 'X' ? pair.rs().label()
                                              : std::string(1, pair.rs().family());
    doc["ambient_rank"] = pair.ambient_rank();
    doc["restricted_rank"] = pair.rank_restricted();
    doc["dim_x"] = pair.dimension();
    auto rho = ordered_json::array();
    for (const Rat& q : pair.rho_coefficients()) {
        std::ostringstream os;
        os << q;
        rho.push_back(os.str());
    }
    doc["rho_coefficients"] = rho;
    auto basis = ordered_json::array();
    for (const auto& w : pair.special_basis()) basis.push_back(weight_to_json(w));
    doc["special_basis"] = basis;
    auto warn = ordered_json::array();
    for (const auto& s : pair.warnings()) warn.push_back(s);
    doc["warnings"] = warn;
    return doc.dump(2) + "\n";
}

}  // namespace symcoh
