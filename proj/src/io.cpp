#include "netmx/io.hpp"

#include "netmx/error.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>
#include <type_traits>
#include <unordered_map>

namespace netmx::io {

namespace {

std::vector<std::string> tokenize(const std::string& line)
{
    std::string body = line.substr(0, line.find('#'));
    std::istringstream ss(body);
    std::vector<std::string> out;
    for (std::string tok; ss >> tok;)
        out.push_back(std::move(tok));
    return out;
}

std::ifstream open_input(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError(path.string(), 0, "cannot open file");
    return in;
}

std::string strip_cr(std::string line)
{
    if (!line.empty() && line.back() == '\r')
        line.pop_back();
    return line;
}

} // namespace

// Graph

Graph read_graph(std::istream& in, const std::string& source)
{
    std::vector<std::string> labels;
    std::unordered_map<std::string, NodeId> index;
    std::vector<Edge> edges;
    std::set<Edge> seen;
    bool any_content = false;

    auto intern = [&](const std::string& label) {
        auto [it, fresh] = index.emplace(label, labels.size());
        if (fresh)
            labels.push_back(label);
        return it->second;
    };

    std::string line;
    for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
        const auto toks = tokenize(strip_cr(line));
        if (toks.empty())
            continue;

        if (toks.front() == "nodes:") {
            if (any_content)
                throw ParseError(source, lineno, "'nodes:' header must precede all edges");
            for (std::size_t k = 1; k < toks.size(); ++k) {
                if (index.count(toks[k]))
                    throw ParseError(source, lineno, "duplicate node label '" + toks[k] + "'");
                intern(toks[k]);
            }
            any_content = true;
            continue;
        }
        any_content = true;

        if (toks.size() != 2)
            throw ParseError(source, lineno, "expected 'src dst', got " + std::to_string(toks.size()) + " tokens");
        if (toks[0] == toks[1])
            throw ParseError(source, lineno, "self-loop on node '" + toks[0] + "'");
        const Edge e{intern(toks[0]), intern(toks[1])};
        if (!seen.insert(e).second)
            throw ParseError(source, lineno, "duplicate edge " + toks[0] + " -> " + toks[1]);
        edges.push_back(e);
    }

    if (labels.empty())
        throw ParseError(source, 0, "graph has no nodes");
    return Graph(std::move(labels), std::move(edges));
}

Graph read_graph_file(const std::filesystem::path& path)
{
    auto in = open_input(path);
    return read_graph(in, path.string());
}

std::string write_graph(const Graph& g)
{
    std::string out = "nodes:";
    for (const auto& l : g.labels())
        out += " " + l;
    out += "\n";
    for (const auto& [s, d] : g.edges())
        out += g.label(s) + " " + g.label(d) + "\n";
    return out;
}

// Trajectories

std::vector<Trajectory> read_trajectories(std::istream& in, const std::string& source, const Graph& g)
{
    std::vector<Trajectory> out;
    std::string line;
    for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
        const auto toks = tokenize(strip_cr(line));
        if (toks.empty())
            continue;

        Trajectory t;
        for (const auto& tok : toks) {
            const auto v = g.index_of(tok);
            if (!v)
                throw ParseError(source, lineno, "unknown node label '" + tok + "'");
            t.nodes.push_back(*v);
        }
        try {
            validate_trajectory(t, g);
        } catch (const TrajectoryError& e) {
            static constexpr const char* names[] = {"TooShort", "RepeatedNode", "MissingEdge"};
            std::string what = std::string(names[static_cast<int>(e.fault)]) + ": " + e.what();
            throw ParseError(source, lineno, what);
        }
        out.push_back(std::move(t));
    }
    return out;
}

std::vector<Trajectory> read_trajectories_file(const std::filesystem::path& path, const Graph& g)
{
    auto in = open_input(path);
    return read_trajectories(in, path.string(), g);
}

std::string write_trajectories(const Dataset& d)
{
    std::string out;
    for (const auto& t : d.trajectories()) {
        for (std::size_t k = 0; k < t.nodes.size(); ++k) {
            if (k)
                out += ' ';
            out += d.graph().label(t.nodes[k]);
        }
        out += '\n';
    }
    return out;
}

Dataset load_dataset(const std::filesystem::path& graph_path, const std::filesystem::path& traj_path)
{
    Graph g = read_graph_file(graph_path);
    auto trajs = read_trajectories_file(traj_path, g);
    return Dataset(std::move(g), std::move(trajs));
}

// Matrix CSV

namespace {

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

std::vector<std::string> split_csv(const std::string& line, const std::string& source, std::size_t lineno)
{
    std::vector<std::string> out;
    std::string cur;
    bool quoted = false;
    for (std::size_t k = 0; k < line.size(); ++k) {
        const char c = line[k];
        if (quoted) {
            if (c == '"' && k + 1 < line.size() && line[k + 1] == '"') {
                cur += '"';
                ++k;
            } else if (c == '"') {
                quoted = false;
            } else {
                cur += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            out.push_back(std::move(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (quoted)
        throw ParseError(source, lineno, "unterminated quoted field");
    out.push_back(std::move(cur));
    return out;
}

ExtendedCount parse_cell(const std::string& text, const std::string& source, std::size_t lineno)
{
    if (text == "INF")
        return INF;
    ExtendedCount::value_type v = 0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, v);
    if (text.empty() || ec != std::errc() || ptr != end || v > ExtendedCount::max_finite)
        throw ParseError(source, lineno, "bad matrix cell '" + text + "'");
    return v;
}

} // namespace

std::string matrix_to_csv(const CountMatrix& m, const std::vector<std::string>& labels)
{
    if (labels.size() != m.n())
        throw DimensionMismatch(m.n(), labels.size());
    std::string out;
    for (const auto& l : labels)
        out += "," + csv_field(l);
    out += "\n";
    for (std::size_t i = 0; i < m.n(); ++i) {
        out += csv_field(labels[i]);
        for (std::size_t j = 0; j < m.n(); ++j)
            out += "," + m(i, j).to_string();
        out += "\n";
    }
    return out;
}

LabelledMatrix matrix_from_csv(std::istream& in, const std::string& source)
{
    std::string line;
    if (!std::getline(in, line))
        throw ParseError(source, 1, "empty CSV");
    auto header = split_csv(strip_cr(line), source, 1);
    if (header.size() < 2 || !header.front().empty())
        throw ParseError(source, 1, "header must be ',label1,...,labelN'");
    std::vector<std::string> labels(header.begin() + 1, header.end());
    const std::size_t n = labels.size();

    CountMatrix m(n);
    std::size_t row = 0;
    for (std::size_t lineno = 2; std::getline(in, line); ++lineno) {
        line = strip_cr(line);
        if (line.empty())
            continue;
        if (row == n)
            throw ParseError(source, lineno, "more rows than header labels");
        const auto fields = split_csv(line, source, lineno);
        if (fields.size() != n + 1)
            throw ParseError(source, lineno,
                             "expected " + std::to_string(n + 1) + " fields, got " + std::to_string(fields.size()));
        if (fields.front() != labels[row])
            throw ParseError(source, lineno, "row label '" + fields.front() + "' does not match header '" + labels[row] + "'");
        for (std::size_t j = 0; j < n; ++j)
            m(row, j) = parse_cell(fields[j + 1], source, lineno);
        ++row;
    }
    if (row != n)
        throw ParseError(source, row + 2, "expected " + std::to_string(n) + " rows, got " + std::to_string(row));
    return LabelledMatrix{std::move(labels), std::move(m)};
}

// Matrix JSON

namespace {

json cell_json(ExtendedCount c)
{
    return c.is_inf() ? json(nullptr) : json(c.value());
}

} // namespace

json matrix_to_json(const CountMatrix& m, const std::vector<std::string>& labels)
{
    if (labels.size() != m.n())
        throw DimensionMismatch(m.n(), labels.size());
    json cells = json::array();
    for (std::size_t i = 0; i < m.n(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.n(); ++j)
            row.push_back(cell_json(m(i, j)));
        cells.push_back(std::move(row));
    }
    return json{{"n", m.n()}, {"labels", labels}, {"cells", std::move(cells)}};
}

LabelledMatrix matrix_from_json(const json& j)
{
    try {
        const auto n = j.at("n").get<std::size_t>();
        auto labels = j.at("labels").get<std::vector<std::string>>();
        const auto& cells = j.at("cells");
        if (labels.size() != n || !cells.is_array() || cells.size() != n)
            throw ParseError("<json>", 0, "matrix shape does not match n");
        CountMatrix m(n);
        for (std::size_t i = 0; i < n; ++i) {
            if (!cells[i].is_array() || cells[i].size() != n)
                throw ParseError("<json>", 0, "row " + std::to_string(i) + " has wrong length");
            for (std::size_t k = 0; k < n; ++k) {
                const auto& c = cells[i][k];
                if (c.is_null())
                    m(i, k) = INF;
                else if (c.is_number_unsigned())
                    m(i, k) = c.get<ExtendedCount::value_type>();
                else
                    throw ParseError("<json>", 0, "cell must be a nonnegative integer or null");
            }
        }
        return LabelledMatrix{std::move(labels), std::move(m)};
    } catch (const json::exception& e) {
        throw ParseError("<json>", 0, e.what());
    }
}

// Catalogue

json catalogue_to_json(std::span<const IdentitySpec> catalogue)
{
    json out = json::array();
    for (const auto& s : catalogue)
        out.push_back(json{{"id", s.id},
                           {"class", class_name(s.cls)},
                           {"lhs", s.lhs.to_string()},
                           {"relation", relation_symbol(s.relation)},
                           {"rhs", s.rhs.to_string()},
                           {"paper_section", s.section},
                           {"quote", s.quote}});
    return out;
}

std::vector<IdentitySpec> catalogue_from_json(const json& j)
{
    if (!j.is_array())
        throw ParseError("<catalogue>", 0, "catalogue must be a JSON array");
    std::vector<IdentitySpec> out;
    for (std::size_t k = 0; k < j.size(); ++k) {
        const auto& e = j[k];
        const std::string where = "entry " + std::to_string(k);
        try {
            const auto cls = class_from_name(e.at("class").get<std::string>());
            if (!cls)
                throw ParseError("<catalogue>", 0, where + ": unknown class");
            const std::string rel = e.value("relation", "=");
            if (rel != "=" && rel != "<=")
                throw ParseError("<catalogue>", 0, where + ": relation must be '=' or '<='");
            out.push_back(IdentitySpec{e.at("id").get<std::string>(), *cls, Expr::parse(e.at("lhs").get<std::string>()),
                                       rel == "=" ? Relation::Equal : Relation::LessEqual,
                                       Expr::parse(e.at("rhs").get<std::string>()), e.value("paper_section", ""),
                                       e.value("quote", "")});
        } catch (const json::exception& ex) {
            throw ParseError("<catalogue>", 0, where + ": " + ex.what());
        }
    }
    check_catalogue(out);
    return out;
}

// Audit report

namespace {

std::string cell_label(const std::vector<std::string>& labels, std::size_t k)
{
    return k < labels.size() ? labels[k] : std::to_string(k);
}

} // namespace

json report_to_json(const AuditReport& r, const std::vector<std::string>& labels)
{
    json verdicts = json::array();
    for (const auto& v : r.verdicts) {
        json w = nullptr;
        if (v.witness)
            w = json{{"row", v.witness->cell.row},
                     {"col", v.witness->cell.col},
                     {"row_label", cell_label(labels, v.witness->cell.row)},
                     {"col_label", cell_label(labels, v.witness->cell.col)},
                     {"lhs", cell_json(v.witness->lhs)},
                     {"rhs", cell_json(v.witness->rhs)}};
        verdicts.push_back(json{{"id", v.id},
                                {"class", class_name(v.cls)},
                                {"holds", v.holds},
                                {"assessment", assessment_name(assess(v, r.fully_utilized))},
                                {"witness", std::move(w)}});
    }
    return json{{"dataset",
                 {{"name", r.dataset.name},
                  {"nodes", r.dataset.nodes},
                  {"edges", r.dataset.edges},
                  {"trajectories", r.dataset.trajectories}}},
                {"fully_utilized", r.fully_utilized},
                {"sound", r.sound()},
                {"verdicts", std::move(verdicts)}};
}

std::string report_table(const AuditReport& r, const std::vector<std::string>& labels)
{
    std::ostringstream os;
    os << "dataset: " << (r.dataset.name.empty() ? "-" : r.dataset.name) << "  nodes=" << r.dataset.nodes
       << " edges=" << r.dataset.edges << " trajectories=" << r.dataset.trajectories
       << " fully_utilized=" << (r.fully_utilized ? "true" : "false") << "\n";
    os << std::left << std::setw(24) << "identity" << std::setw(21) << "class" << std::setw(22) << "verdict"
       << "witness\n";
    for (const auto& v : r.verdicts) {
        os << std::setw(24) << v.id << std::setw(21) << class_name(v.cls) << std::setw(22)
           << assessment_name(assess(v, r.fully_utilized));
        if (v.witness)
            os << "(" << cell_label(labels, v.witness->cell.row) << "," << cell_label(labels, v.witness->cell.col)
               << ") lhs=" << v.witness->lhs << " rhs=" << v.witness->rhs;
        else
            os << "-";
        os << "\n";
    }
    os << "sound: " << (r.sound() ? "yes" : "NO") << "\n";
    return os.str();
}

// GenConfig

json gen_config_to_json(const GenConfig& cfg)
{
    return json{{"n", cfg.n},
                {"edge_prob", cfg.edge_prob},
                {"max_traj", cfg.max_traj},
                {"max_len", cfg.max_len},
                {"allow_duplicates", cfg.allow_duplicates},
                {"seed", cfg.seed}};
}

GenConfig gen_config_from_json(const json& j, GenConfig cfg)
{
    if (!j.is_object())
        throw ConfigError("generator config must be a JSON object");
    auto pick = [&](const char* underscored, auto& field) {
        std::string dashed = underscored;
        std::replace(dashed.begin(), dashed.end(), '_', '-');
        for (const auto& key : {std::string(underscored), dashed})
            if (j.contains(key)) {
                try {
                    field = j.at(key).template get<std::decay_t<decltype(field)>>();
                } catch (const json::exception& e) {
                    throw ConfigError("bad value for '" + key + "': " + e.what());
                }
            }
    };
    pick("n", cfg.n);
    pick("edge_prob", cfg.edge_prob);
    pick("max_traj", cfg.max_traj);
    pick("max_len", cfg.max_len);
    pick("allow_duplicates", cfg.allow_duplicates);
    pick("seed", cfg.seed);
    return cfg;
}

// Files

void write_text(const std::filesystem::path& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw Error("cannot write " + path.string());
    out << text;
    if (!out)
        throw Error("write failed for " + path.string());
}

std::string read_text(const std::filesystem::path& path)
{
    auto in = open_input(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace netmx::io
