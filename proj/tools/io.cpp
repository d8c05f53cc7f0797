#include "io.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "tautilt/error.hpp"

namespace tautilt::cli {

namespace {

Rational entry_from_json(const json& e) {
    if (e.is_number_integer()) return Rational(e.get<long long>());
    if (e.is_string()) return Rational::parse(e.get<std::string>());
    throw ParseError("cli", "matrix entry must be an integer or a \"p/q\" string", 0, 0);
}

json optional_index(const std::optional<std::size_t>& k) { return k ? json(*k) : json(nullptr); }

// Index order that sorts by label, ties by discovery order.
std::vector<std::size_t> sorted_by(const std::vector<std::string>& labels) {
    std::vector<std::size_t> order(labels.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return labels[a] < labels[b]; });
    std::vector<std::size_t> node(labels.size());
    for (std::size_t r = 0; r < order.size(); ++r) node[order[r]] = r;
    return node;
}

std::string quoted(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

}  // namespace

json to_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols) {
    Matrix m(rows, cols);
    if (rows == 0 || cols == 0) {
        if (!j.is_array() || !(j.empty() || j.size() == rows)) {
            throw ParseError("cli", "matrix shape does not match the dimension vector", 0, 0);
        }
        return m;
    }
    if (!j.is_array() || j.size() != rows) throw ParseError("cli", "matrix must have " + std::to_string(rows) + " rows", 0, 0);
    for (std::size_t r = 0; r < rows; ++r) {
        if (!j[r].is_array() || j[r].size() != cols) throw ParseError("cli", "matrix row must have " + std::to_string(cols) + " entries", 0, 0);
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = entry_from_json(j[r][c]);
    }
    return m;
}

json to_json(const Representation& m) {
    json maps = json::object();
    const auto& arrows = m.algebra()->arrows();
    for (std::size_t k = 0; k < arrows.size(); ++k) maps[arrows[k].name] = to_json(m.map(static_cast<int>(k)));
    return {{"algebra", m.algebra()->fingerprint_hex()}, {"dims", m.dims()}, {"arrows", maps}};
}

Representation representation_from_json(const AlgebraPtr& a, const json& j) {
    if (!j.is_object() || !j.contains("dims")) throw ParseError("cli", "representation JSON needs \"dims\"", 0, 0);
    const auto dims = j.at("dims").get<std::vector<std::size_t>>();
    if (dims.size() != static_cast<std::size_t>(a->vertex_count())) {
        throw ParseError("cli", "dimension vector has " + std::to_string(dims.size()) + " entries, algebra has " +
                                    std::to_string(a->vertex_count()) + " vertices", 0, 0);
    }
    if (j.contains("algebra") && j.at("algebra").get<std::string>() != a->fingerprint_hex()) {
        throw ParseError("cli", "representation belongs to algebra " + j.at("algebra").get<std::string>() + ", not " + a->fingerprint_hex(), 0, 0);
    }
    const json maps = j.value("arrows", json::object());
    for (const auto& [name, value] : maps.items()) {
        if (a->arrow_index(name) < 0) throw ParseError("cli", "unknown arrow " + name, 0, 0);
    }
    std::vector<Matrix> ms;
    for (const auto& arr : a->arrows()) {
        const std::size_t r = dims[static_cast<std::size_t>(arr.target)];
        const std::size_t c = dims[static_cast<std::size_t>(arr.source)];
        ms.push_back(maps.contains(arr.name) ? matrix_from_json(maps.at(arr.name), r, c) : Matrix(r, c));
    }
    Representation m(a, dims, std::move(ms));
    const auto v = validate(m);
    if (!v.ok) throw ParseError("cli", "representation fails the relations: " + v.message, 0, 0);
    return m;
}

json to_json(const ARQuiverData& ar) {
    json mods = json::array();
    json tau = json::array();
    json tau_inv = json::array();
    json labels = json::array();
    for (std::size_t k = 0; k < ar.size(); ++k) {
        mods.push_back(to_json(ar.indecomposables[k]));
        labels.push_back(ar.label(k));
        tau.push_back(optional_index(ar.tau[k]));
        tau_inv.push_back(optional_index(ar.tau_inverse[k]));
    }
    return {{"labels", labels}, {"indecomposables", mods}, {"projective", ar.projective}, {"injective", ar.injective},
            {"tau", tau},       {"tau_inverse", tau_inv}, {"middle", ar.middle}};
}

ARQuiverData ar_quiver_from_json(const AlgebraPtr& a, const json& j) {
    ARQuiverData ar;
    ar.algebra = a;
    for (const auto& m : j.at("indecomposables")) ar.indecomposables.push_back(representation_from_json(a, m));
    const std::size_t n = ar.indecomposables.size();
    ar.projective = j.at("projective").get<std::vector<bool>>();
    ar.injective = j.at("injective").get<std::vector<bool>>();
    for (const auto& t : j.at("tau")) ar.tau.push_back(t.is_null() ? std::nullopt : std::optional<std::size_t>(t.get<std::size_t>()));
    for (const auto& t : j.at("tau_inverse")) {
        ar.tau_inverse.push_back(t.is_null() ? std::nullopt : std::optional<std::size_t>(t.get<std::size_t>()));
    }
    ar.middle = j.at("middle").get<std::vector<std::vector<std::size_t>>>();
    ar.sequences.resize(n);
    if (ar.projective.size() != n || ar.injective.size() != n || ar.tau.size() != n || ar.tau_inverse.size() != n ||
        ar.middle.size() != n) {
        throw ParseError("cli", "AR quiver JSON arrays disagree in length", 0, 0);
    }
    for (std::size_t k = 0; k < n; ++k) {
        for (auto t : {ar.tau[k], ar.tau_inverse[k]}) {
            if (t && *t >= n) throw ParseError("cli", "AR quiver JSON index out of range", 0, 0);
        }
        for (std::size_t m : ar.middle[k]) {
            if (m >= n) throw ParseError("cli", "AR quiver JSON index out of range", 0, 0);
        }
    }
    return ar;
}

json hasse_json(const ARIndex& ix, const HasseQuiver& h) {
    const auto& vlabels = ix.algebra()->source().vertex_labels;
    json vertices = json::array();
    json labels = json::array();
    for (std::size_t v = 0; v < h.vertices.size(); ++v) {
        const auto& p = h.vertices[v];
        json summands = json::array();
        for (std::size_t k : p.summands.members) summands.push_back(ix.label(k));
        json killed = json::array();
        for (int q : p.killed) killed.push_back(vlabels[static_cast<std::size_t>(q)]);
        json torsion = json::array();
        for (std::size_t k : h.torsion[v].members) torsion.push_back(ix.label(k));
        const std::string label = pair_label(ix, p);
        vertices.push_back({{"id", v}, {"label", label}, {"summands", summands}, {"killed", killed}, {"torsion_class", torsion}});
        labels.push_back(label);
    }
    json edges = json::array();
    for (const auto& e : h.edges) {
        const std::string what = e.killed ? "P" + std::to_string(vlabels[e.exchanged]) : ix.label(e.exchanged);
        edges.push_back({{"from", e.from}, {"to", e.to}, {"exchanged", what}});
    }
    return {{"algebra", ix.algebra()->name()},
            {"vertices", vertices},
            {"edges", edges},
            {"labels", labels},
            {"counts", {{"vertices", h.vertices.size()}, {"edges", h.edges.size()}}}};
}

json oracle_json(const ARIndex& ix, const std::vector<ModuleClass>& classes) {
    json rows = json::array();
    for (const auto& t : classes) {
        json tj = json::array();
        json fj = json::array();
        for (std::size_t k : t.members) tj.push_back(ix.label(k));
        for (std::size_t k : torsion_pair(ix, t).torsion_free.members) fj.push_back(ix.label(k));
        rows.push_back({{"torsion", tj}, {"torsion_free", fj}});
    }
    return {{"algebra", ix.algebra()->name()}, {"classes", rows}, {"counts", {{"classes", classes.size()}}}};
}

std::string ar_quiver_dot(const ARQuiverData& ar) {
    std::vector<std::string> labels;
    for (std::size_t k = 0; k < ar.size(); ++k) labels.push_back(ar.label(k));
    const auto node = sorted_by(labels);
    std::vector<std::size_t> by_node(ar.size());
    for (std::size_t k = 0; k < ar.size(); ++k) by_node[node[k]] = k;

    std::ostringstream os;
    os << "digraph AR {\n  rankdir=LR;\n";
    for (std::size_t r = 0; r < by_node.size(); ++r) {
        const std::size_t k = by_node[r];
        os << "  n" << r << " [label=" << quoted(labels[k]);
        if (ar.projective[k] || ar.injective[k]) os << ", shape=box";
        os << "];\n";
    }
    std::vector<std::pair<std::size_t, std::size_t>> solid;
    for (auto [from, to] : ar.arrows()) solid.emplace_back(node[from], node[to]);
    std::sort(solid.begin(), solid.end());
    for (auto [from, to] : solid) os << "  n" << from << " -> n" << to << ";\n";
    std::vector<std::pair<std::size_t, std::size_t>> dashed;
    for (std::size_t k = 0; k < ar.size(); ++k) {
        if (ar.tau[k]) dashed.emplace_back(node[*ar.tau[k]], node[k]);
    }
    std::sort(dashed.begin(), dashed.end());
    for (auto [from, to] : dashed) os << "  n" << from << " -> n" << to << " [style=dashed, constraint=false];\n";
    os << "}\n";
    return os.str();
}

std::string hasse_dot(const ARIndex& ix, const HasseQuiver& h) {
    std::vector<std::string> labels;
    for (const auto& p : h.vertices) labels.push_back(pair_label(ix, p));
    const auto node = sorted_by(labels);
    std::vector<std::size_t> by_node(labels.size());
    for (std::size_t v = 0; v < labels.size(); ++v) by_node[node[v]] = v;

    std::ostringstream os;
    os << "digraph Hasse {\n";
    for (std::size_t r = 0; r < by_node.size(); ++r) os << "  n" << r << " [label=" << quoted(labels[by_node[r]]) << "];\n";
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (const auto& e : h.edges) edges.emplace_back(node[e.from], node[e.to]);
    std::sort(edges.begin(), edges.end());
    for (auto [from, to] : edges) os << "  n" << from << " -> n" << to << ";\n";
    os << "}\n";
    return os.str();
}

std::string oracle_table(const ARIndex& ix, const std::vector<ModuleClass>& classes) {
    auto join = [&](const ModuleClass& c) {
        if (c.empty()) return std::string("0");
        std::string s;
        for (std::size_t k : c.members) s += (s.empty() ? "" : " ") + ix.label(k);
        return s;
    };
    std::vector<std::pair<std::string, std::string>> rows;
    std::size_t width = 1;
    for (const auto& t : classes) {
        rows.emplace_back(join(t), join(torsion_pair(ix, t).torsion_free));
        width = std::max(width, rows.back().first.size());
    }
    std::ostringstream os;
    os << "T" << std::string(width - 1, ' ') << " | F\n";
    os << std::string(width, '-') << "-+-" << std::string(width, '-') << "\n";
    for (const auto& [t, f] : rows) os << t << std::string(width - t.size(), ' ') << " | " << f << "\n";
    return os.str();
}

}  // namespace tautilt::cli
