#include "omr/json_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace omr {

namespace {

using nlohmann::json;

json parse_text(const std::string& text, const char* what) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw std::invalid_argument(std::string(what) + ": not valid JSON");
    return j;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << text;
    if (!out) throw std::runtime_error("write to " + path + " failed");
}

Rat rational_field(const json& j, const char* what) {
    if (!j.is_string()) throw std::invalid_argument(std::string(what) + ": rational must be a string");
    return Rat::parse(j.get<std::string>());
}

int int_field(const json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_number_integer())
        throw std::invalid_argument(std::string("missing integer field \"") + key + "\"");
    return j.at(key).get<int>();
}

MultiIndex index_field(const json& j, const char* what) {
    if (!j.is_array()) throw std::invalid_argument(std::string(what) + ": index must be an array");
    MultiIndex idx;
    idx.reserve(j.size());
    for (const auto& v : j) {
        if (!v.is_number_integer())
            throw std::invalid_argument(std::string(what) + ": index entries must be integers");
        idx.push_back(v.get<int>());
    }
    return idx;
}

json index_json(const MultiIndex& idx) {
    return json(idx);
}

AlgebraSpec algebra_from_json(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("algebra: expected an object");
    if (!j.contains("name") || !j.at("name").is_string())
        throw std::invalid_argument("algebra: missing string field \"name\"");
    int dim = int_field(j, "dim");
    if (dim < 1) throw std::invalid_argument("algebra: dim must be positive");
    if (!j.contains("constants") || !j.at("constants").is_array())
        throw std::invalid_argument("algebra: missing array field \"constants\"");
    const json& cs = j.at("constants");
    size_t d = static_cast<size_t>(dim);
    if (cs.size() != d) throw std::invalid_argument("algebra: constants must have dim rows");
    std::vector<std::vector<std::vector<Rat>>> constants(d);
    for (size_t i = 0; i < d; ++i) {
        if (!cs[i].is_array() || cs[i].size() != d)
            throw std::invalid_argument("algebra: constants rows must have dim columns");
        constants[i].resize(d);
        for (size_t jj = 0; jj < d; ++jj) {
            if (!cs[i][jj].is_array() || cs[i][jj].size() != d)
                throw std::invalid_argument("algebra: constants cells must have dim entries");
            for (size_t k = 0; k < d; ++k)
                constants[i][jj].push_back(rational_field(cs[i][jj][k], "algebra constants"));
        }
    }
    return AlgebraSpec(j.at("name").get<std::string>(), dim, std::move(constants));
}

json algebra_to_json(const AlgebraSpec& a) {
    json cs = json::array();
    for (int i = 1; i <= a.dim(); ++i) {
        json row = json::array();
        for (int jj = 1; jj <= a.dim(); ++jj) {
            json cell = json::array();
            for (int k = 1; k <= a.dim(); ++k) cell.push_back(a.c(i, jj, k).str());
            row.push_back(std::move(cell));
        }
        cs.push_back(std::move(row));
    }
    return json{{"name", a.name()}, {"dim", a.dim()}, {"constants", std::move(cs)}};
}

TensorMap tensor_map_from_json(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("map: expected an object");
    TensorMap m = TensorMap::zero(int_field(j, "src_dim"), int_field(j, "src_deg"),
                                  int_field(j, "dst_dim"), int_field(j, "dst_deg"));
    if (m.src_dim < 1 || m.dst_dim < 1 || m.src_deg < 0 || m.dst_deg < 0)
        throw std::invalid_argument("map: bad shape");
    if (!j.contains("entries") || !j.at("entries").is_array())
        throw std::invalid_argument("map: missing array field \"entries\"");
    for (const auto& e : j.at("entries")) {
        if (!e.is_array() || e.size() != 3)
            throw std::invalid_argument("map: entries must be [dst, src, value] triples");
        m.add_entry(index_field(e[0], "map dst"), index_field(e[1], "map src"),
                    rational_field(e[2], "map value"));
    }
    return m;
}

json tensor_map_to_json(const TensorMap& m) {
    json entries = json::array();
    for (const auto& [key, v] : m.entries)
        entries.push_back(json::array({index_json(key.first), index_json(key.second), v.str()}));
    return json{{"src_dim", m.src_dim}, {"src_deg", m.src_deg},
                {"dst_dim", m.dst_dim}, {"dst_deg", m.dst_deg},
                {"entries", std::move(entries)}};
}

}  // namespace

AlgebraSpec algebra_from_json_text(const std::string& text) {
    return algebra_from_json(parse_text(text, "algebra"));
}

std::string algebra_to_json_text(const AlgebraSpec& a) {
    return algebra_to_json(a).dump(2) + "\n";
}

AlgebraSpec read_algebra_file(const std::string& path) {
    return algebra_from_json_text(read_file(path));
}

void write_algebra_file(const AlgebraSpec& a, const std::string& path) {
    write_file(path, algebra_to_json_text(a));
}

TensorMap tensor_map_from_json_text(const std::string& text) {
    return tensor_map_from_json(parse_text(text, "map"));
}

std::string tensor_map_to_json_text(const TensorMap& m) {
    return tensor_map_to_json(m).dump(2) + "\n";
}

TruncatedMorphism morphism_from_json_text(const std::string& text) {
    json j = parse_text(text, "morphism");
    if (!j.is_object()) throw std::invalid_argument("morphism: expected an object");
    int N = int_field(j, "N");
    if (N < 0) throw std::invalid_argument("morphism: N must be non-negative");
    if (!j.contains("levels") || !j.at("levels").is_array())
        throw std::invalid_argument("morphism: missing array field \"levels\"");
    const json& levels = j.at("levels");
    if (static_cast<int>(levels.size()) != N + 1)
        throw std::invalid_argument("morphism: expected N+1 levels");
    TruncatedMorphism s;
    s.level_bound = N;
    for (const auto& lj : levels) s.levels.push_back(tensor_map_from_json(lj));
    s.src_dim = s.levels.front().src_dim;
    s.dst_dim = s.levels.front().dst_dim;
    s.check_shape();
    return s;
}

std::string morphism_to_json_text(const TruncatedMorphism& s) {
    s.check_shape();
    json levels = json::array();
    for (const auto& m : s.levels) levels.push_back(tensor_map_to_json(m));
    return json{{"N", s.level_bound}, {"levels", std::move(levels)}}.dump(2) + "\n";
}

TruncatedMorphism read_morphism_file(const std::string& path) {
    return morphism_from_json_text(read_file(path));
}

void write_morphism_file(const TruncatedMorphism& s, const std::string& path) {
    write_file(path, morphism_to_json_text(s));
}

}  // namespace omr
