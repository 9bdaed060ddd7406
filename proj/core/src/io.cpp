#include "iwkin/io.hpp"

#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace iwkin {

namespace {

using nlohmann::json;

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    out += '"';
    return out;
}

json interval_json(const Interval& iv) {
    if (iv.is_point())
        return iv.lo;
    return json{{"lo", iv.lo}, {"hi", iv.hi}};
}

json record_json(const ObservationRecord& r) {
    return json{{"name", r.name},
                {"omega_exponent", interval_json(r.omega_exponent)},
                {"vertical_exponent", interval_json(r.vertical_exponent)},
                {"wavenumber_basis", to_string(r.wavenumber_basis)},
                {"derived_x", interval_json(r.derived_x)},
                {"derived_y", interval_json(r.derived_y)},
                {"notes", r.notes}};
}

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos)
        return "";
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

}  // namespace

std::string format_sig9(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

void emit_csv(const std::vector<ObservationRecord>& records, std::ostream& out) {
    if (records.empty())
        throw std::invalid_argument("emit_csv: no observation records");
    out << "name,omega_exponent_lo,omega_exponent_hi,vertical_exponent_lo,vertical_exponent_hi,"
           "wavenumber_basis,derived_x_lo,derived_x_hi,derived_y_lo,derived_y_hi,notes\n";
    for (const auto& r : records) {
        out << csv_quote(r.name) << ',' << format_sig9(r.omega_exponent.lo) << ','
            << format_sig9(r.omega_exponent.hi) << ',' << format_sig9(r.vertical_exponent.lo)
            << ',' << format_sig9(r.vertical_exponent.hi) << ',' << to_string(r.wavenumber_basis)
            << ',' << format_sig9(r.derived_x.lo) << ',' << format_sig9(r.derived_x.hi) << ','
            << format_sig9(r.derived_y.lo) << ',' << format_sig9(r.derived_y.hi) << ','
            << csv_quote(r.notes) << '\n';
    }
}

void emit_csv(const std::vector<CurvePoint>& curve, std::ostream& out) {
    if (curve.empty())
        throw std::invalid_argument("emit_csv: empty curve");
    out << "x,y,normalized_residual,bracket_width\n";
    for (const auto& p : curve) {
        out << format_sig9(p.x) << ',' << format_sig9(p.y) << ','
            << format_sig9(p.normalized_residual) << ',' << format_sig9(p.bracket_width) << '\n';
    }
}

void emit_csv(const GridField& grid, std::ostream& out) {
    if (grid.values.empty())
        throw std::invalid_argument("emit_csv: empty grid");
    out << "x,y,value,status\n";
    const int nx = static_cast<int>(grid.x_axis.size());
    const int ny = static_cast<int>(grid.y_axis.size());
    for (int iy = 0; iy < ny; ++iy)
        for (int ix = 0; ix < nx; ++ix)
            out << format_sig9(grid.x_axis[ix]) << ',' << format_sig9(grid.y_axis[iy]) << ','
                << format_sig9(grid.value_at(ix, iy)) << ',' << to_string(grid.status_at(ix, iy))
                << '\n';
}

std::vector<CurvePoint> parse_curve_csv(std::istream& in) {
    std::vector<CurvePoint> out;
    std::string line;
    bool header = true;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        if (header) {
            header = false;
            continue;
        }
        std::istringstream ls(line);
        std::string field;
        CurvePoint p;
        double* fields[4] = {&p.x, &p.y, &p.normalized_residual, &p.bracket_width};
        for (int i = 0; i < 4; ++i) {
            if (!std::getline(ls, field, ','))
                throw std::runtime_error("parse_curve_csv: malformed row: " + line);
            *fields[i] = std::stod(field);
        }
        out.push_back(p);
    }
    return out;
}

std::string to_json(const IntegralResult& r) {
    json j{{"value", r.value},
           {"error_estimate", r.error_estimate},
           {"status", to_string(r.status)},
           {"levels_used", r.levels_used},
           {"evaluations", r.evaluations},
           {"reference_scale", r.reference_scale},
           {"normalized_residual", r.normalized_residual()},
           {"tangential_skips", r.tangential_skips}};
    return j.dump(2);
}

std::string to_json(const std::vector<CurvePoint>& curve,
                    const std::vector<ThicknessSample>& thickness) {
    json pts = json::array();
    for (const auto& p : curve)
        pts.push_back(json{{"x", p.x},
                           {"y", p.y},
                           {"normalized_residual", p.normalized_residual},
                           {"bracket_width", p.bracket_width}});
    json j{{"points", pts}};
    if (!thickness.empty()) {
        json th = json::array();
        for (const auto& t : thickness)
            th.push_back(json{{"x", t.x},
                              {"y_minus", t.y_minus},
                              {"residual_minus", t.residual_minus},
                              {"y_plus", t.y_plus},
                              {"residual_plus", t.residual_plus}});
        j["thickness"] = th;
    }
    return j.dump(2);
}

std::string to_json(const GridField& grid) {
    const int nx = static_cast<int>(grid.x_axis.size());
    const int ny = static_cast<int>(grid.y_axis.size());
    json values = json::array();
    json status = json::array();
    for (int iy = 0; iy < ny; ++iy) {
        json vrow = json::array();
        json srow = json::array();
        for (int ix = 0; ix < nx; ++ix) {
            vrow.push_back(grid.value_at(ix, iy));
            srow.push_back(to_string(grid.status_at(ix, iy)));
        }
        values.push_back(vrow);
        status.push_back(srow);
    }
    json j{{"x_axis", grid.x_axis}, {"y_axis", grid.y_axis}, {"values", values},
           {"status", status}};
    return j.dump(2);
}

std::string to_json(const std::vector<ObservationRecord>& records) {
    json arr = json::array();
    for (const auto& r : records)
        arr.push_back(record_json(r));
    return json{{"observations", arr}}.dump(2);
}

void apply_config(std::istream& in, QuadratureConfig& cfg) {
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty())
            continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        const auto bad_value = [&]() {
            return std::invalid_argument("config line " + std::to_string(lineno) +
                                         ": bad value '" + value + "' for '" + key + "'");
        };
        const auto as_int = [&]() {
            try {
                std::size_t pos = 0;
                const int r = std::stoi(value, &pos);
                if (pos != value.size())
                    throw bad_value();
                return r;
            } catch (const std::invalid_argument&) {
                throw bad_value();
            } catch (const std::out_of_range&) {
                throw bad_value();
            }
        };
        const auto as_double = [&]() {
            try {
                std::size_t pos = 0;
                const double r = std::stod(value, &pos);
                if (pos != value.size())
                    throw bad_value();
                return r;
            } catch (const std::invalid_argument&) {
                throw bad_value();
            } catch (const std::out_of_range&) {
                throw bad_value();
            }
        };
        if (key == "base_resolution")
            cfg.base_resolution = as_int();
        else if (key == "max_levels")
            cfg.max_levels = as_int();
        else if (key == "rel_tol")
            cfg.rel_tol = as_double();
        else if (key == "domain_scale")
            cfg.domain_scale = as_double();
        else if (key == "divergence_growth")
            cfg.divergence_growth = as_double();
        else if (key == "scale_window")
            cfg.scale_window = as_double();
        else
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        ": unknown key '" + key + "'");
    }
    cfg.validate();
}

QuadratureConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open config file: " + path);
    QuadratureConfig cfg;
    apply_config(in, cfg);
    return cfg;
}

}  // namespace iwkin
