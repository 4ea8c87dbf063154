#include "ckt/io.hpp"

#include <sstream>

#include "json.hpp"

namespace ckt {

using nlohmann::json;

Grid grid_from_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& ex) {
        throw ParameterError(std::string("grid parse error: ") + ex.what());
    }
    try {
        if (doc.contains("cyclic_diagonal")) {
            const json& b = doc.at("cyclic_diagonal");
            return Grid::cyclic_diagonal(b.at("n").get<int>(), b.at("k").get<int>());
        }
        if (doc.contains("holed")) {
            const json& b = doc.at("holed");
            const std::string corner = b.at("corner").get<std::string>();
            if (corner != "sw" && corner != "se")
                throw ParameterError("corner must be \"sw\" or \"se\"");
            HoleSpec hole{corner == "sw" ? HoleSpec::Corner::SW : HoleSpec::Corner::SE,
                          b.at("a").get<int>(), b.at("b").get<int>()};
            return Grid::holed(b.at("m").get<int>(), b.at("n").get<int>(), hole);
        }
        std::vector<Cell> cells;
        for (const json& pair : doc.at("filled")) {
            if (!pair.is_array() || pair.size() != 2)
                throw ParameterError("filled entries must be [row, col] pairs");
            cells.push_back({pair[0].get<int>(), pair[1].get<int>()});
        }
        return Grid::from_cells(doc.at("rows").get<int>(), doc.at("cols").get<int>(),
                                std::move(cells));
    } catch (const json::exception& ex) {
        throw ParameterError(std::string("grid document malformed: ") + ex.what());
    }
}

std::string grid_to_json(const Grid& g) {
    json doc;
    doc["rows"] = g.rows();
    doc["cols"] = g.cols();
    json cells = json::array();
    for (Cell c : g.filled_cells()) cells.push_back(json::array({c.row, c.col}));
    doc["filled"] = std::move(cells);
    return doc.dump() + "\n";
}

std::string cycles_to_json(const CycleDecomposition& dec) {
    json doc;
    json cycles = json::array();
    for (const auto& cycle : dec.cycles) {
        json arr = json::array();
        for (Cell c : cycle) arr.push_back(json::array({c.row, c.col}));
        cycles.push_back(std::move(arr));
    }
    doc["cycles"] = std::move(cycles);
    return doc.dump() + "\n";
}

std::string cycles_to_dot(const CycleDecomposition& dec) {
    std::ostringstream os;
    os << "digraph orbits {\n";
    for (const auto& cycle : dec.cycles)
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            const Cell from = cycle[i];
            const Cell to = cycle[(i + 1) % cycle.size()];
            os << "  \"" << from.row << "," << from.col << "\" -> \"" << to.row << ","
               << to.col << "\";\n";
        }
    os << "}\n";
    return os.str();
}

}  // namespace ckt
