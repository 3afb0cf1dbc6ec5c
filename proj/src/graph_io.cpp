#include "twotype/graph_io.hpp"

#include <fstream>
#include <sstream>

#include "twotype/errors.hpp"

namespace twotype {

namespace {

// Extracts the value of "key=" from the header line; value ends at the next space.
std::string header_field(const std::string& line, const std::string& key, std::size_t line_no) {
    const std::string pat = key + "=";
    const auto pos = line.find(pat);
    if (pos == std::string::npos)
        throw ParseError("header is missing '" + pat + "'", line_no);
    const auto start = pos + pat.size();
    const auto end = line.find(' ', start);
    return line.substr(start, end == std::string::npos ? std::string::npos : end - start);
}

std::uint64_t parse_u64(const std::string& s, const std::string& what, std::size_t line_no) {
    try {
        std::size_t used = 0;
        const std::uint64_t v = std::stoull(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ParseError("cannot parse " + what + " from '" + s + "'", line_no);
    }
}

} // namespace

std::string edge_list_to_string(const EdgeListFile& f) {
    std::ostringstream os;
    os << "# n=" << f.graph.n << " model=" << f.model << " seed=" << f.seed << "\n";
    for (const std::string& c : f.extra_header) os << c << "\n";
    for (std::uint64_t v = 0; v < f.graph.n; ++v)
        os << "v " << v << " " << type_label(f.graph.types[v]) << "\n";
    for (const Edge& e : f.graph.edges) os << "e " << e.u << " " << e.v << "\n";
    return os.str();
}

void write_edge_list(const EdgeListFile& f, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << edge_list_to_string(f);
    if (!out) throw std::runtime_error("write failed: " + path);
}

EdgeListFile read_edge_list(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open edge list: " + path);
    EdgeListFile f;
    std::string line;
    std::size_t line_no = 0;

    if (!std::getline(in, line)) throw ParseError("empty edge-list file", 1);
    ++line_no;
    if (line.rfind("# ", 0) != 0)
        throw ParseError("expected header '# n=<n> model=<name> seed=<seed>'", line_no);
    f.graph.n = parse_u64(header_field(line, "n", line_no), "n", line_no);
    if (f.graph.n > (std::uint64_t{1} << 32))
        throw ParseError("n exceeds the 32-bit vertex id range", line_no);
    f.model = header_field(line, "model", line_no);
    f.seed = parse_u64(header_field(line, "seed", line_no), "seed", line_no);

    f.graph.types.reserve(f.graph.n);
    std::uint64_t vertices_seen = 0;
    bool edges_started = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        if (line[0] == '#') {
            // Further comment lines are kept verbatim so a parse/emit round
            // trip is byte-exact.
            f.extra_header.push_back(line);
            continue;
        }
        std::istringstream is(line);
        char tag;
        is >> tag;
        if (tag == 'v') {
            if (edges_started) throw ParseError("vertex line after edge lines", line_no);
            std::uint64_t id;
            int type;
            if (!(is >> id >> type)) throw ParseError("malformed vertex line", line_no);
            if (id != vertices_seen)
                throw ParseError("vertex ids must be dense and in order; expected " +
                                 std::to_string(vertices_seen), line_no);
            if (type != 1 && type != 2) throw ParseError("vertex type must be 1 or 2", line_no);
            f.graph.types.push_back(type == 1 ? VertexType::Type1 : VertexType::Type2);
            ++vertices_seen;
        } else if (tag == 'e') {
            edges_started = true;
            std::uint64_t u, v;
            if (!(is >> u >> v)) throw ParseError("malformed edge line", line_no);
            if (u >= f.graph.n || v >= f.graph.n)
                throw ParseError("edge endpoint out of range", line_no);
            f.graph.edges.push_back({static_cast<std::uint32_t>(u), static_cast<std::uint32_t>(v)});
        } else {
            throw ParseError(std::string("unknown line tag '") + tag + "'", line_no);
        }
    }
    if (vertices_seen != f.graph.n)
        throw ParseError("header announced n=" + std::to_string(f.graph.n) + " but file has " +
                         std::to_string(vertices_seen) + " vertex lines", line_no);
    f.graph.multigraph = f.model == "cm";
    return f;
}

} // namespace twotype
