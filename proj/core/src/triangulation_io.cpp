#include "simplexity/io.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

namespace simplexity {

using nlohmann::json;

namespace {

template <class Range>
void write_list(std::ostream& os, const Range& r)
{
    os << '[';
    bool first = true;
    for (const auto& v : r) {
        if (!first) os << ',';
        os << v;
        first = false;
    }
    os << ']';
}

} // namespace

void write_triangulation_json(std::ostream& os, const Triangulation& t)
{
    const auto& config = t.config();
    os << "{\"dim\":" << config.dim() << ",\"label\":" << json(config.label().to_string()).dump() << ",\"points\":[";
    for (std::size_t i = 0; i < config.size(); ++i) {
        if (i) os << ',';
        write_list(os, config.point(i));
    }
    os << "],\"simplices\":[";
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) os << ",\n";
        write_list(os, t.simplex(i));
    }
    os << "]}\n";
}

Triangulation read_triangulation_json(std::istream& is)
{
    const json doc = json::parse(is);
    const auto dim = doc.at("dim").get<std::size_t>();
    const auto label = ConfigLabel::parse(doc.value("label", std::string("custom")));
    std::vector<Point> points;
    for (const auto& p : doc.at("points")) points.push_back(p.get<Point>());

    ConfigPtr config;
    if (label.kind == ConfigLabel::Kind::custom) {
        config = std::make_shared<PointConfiguration>(dim, std::move(points));
    } else {
        config = make_configuration(label);
        if (config->dim() != dim || config->size() != points.size()) {
            throw std::runtime_error("triangulation file: points do not match label " + label.to_string());
        }
        for (std::size_t i = 0; i < points.size(); ++i) {
            auto p = config->point(i);
            if (!std::equal(p.begin(), p.end(), points[i].begin(), points[i].end())) {
                throw std::runtime_error("triangulation file: point " + std::to_string(i) +
                                         " is not in canonical order for " + label.to_string());
            }
        }
    }
    Triangulation t(config);
    const auto& simplices = doc.at("simplices");
    t.reserve(simplices.size());
    std::vector<Index> s;
    for (const auto& entry : simplices) {
        s = entry.get<std::vector<Index>>();
        t.add(s);
    }
    return t;
}

void write_mixed_json(std::ostream& os, const MixedSubdivision& s)
{
    os << "{\"base\":" << json(s.base->label().to_string()).dump() << ",\"m\":" << s.m << ",\"cells\":[";
    for (std::size_t c = 0; c < s.cells.size(); ++c) {
        if (c) os << ",\n";
        os << '[';
        for (std::size_t i = 0; i < s.cells[c].summands.size(); ++i) {
            if (i) os << ',';
            write_list(os, s.cells[c].summands[i]);
        }
        os << ']';
    }
    os << "]}\n";
}

MixedSubdivision read_mixed_json(std::istream& is)
{
    const json doc = json::parse(is);
    MixedSubdivision s;
    s.base = make_configuration(ConfigLabel::parse(doc.at("base").get<std::string>()));
    s.m = doc.at("m").get<unsigned>();
    for (const auto& cell : doc.at("cells")) {
        MixedCell mc;
        for (const auto& b : cell) mc.summands.push_back(b.get<std::vector<Index>>());
        if (mc.summands.size() != s.m) throw std::runtime_error("mixed subdivision file: cell with wrong summand count");
        s.cells.push_back(std::move(mc));
    }
    return s;
}

void save_triangulation(const std::string& path, const Triangulation& t)
{
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot write " + path);
    write_triangulation_json(os, t);
}

Triangulation load_triangulation(const std::string& path)
{
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot read " + path);
    return read_triangulation_json(is);
}

} // namespace simplexity
