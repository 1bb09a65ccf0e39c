#include "lapspec/graph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

namespace lapspec {

Graph Graph::from_edges(int n, std::vector<std::pair<int, int>> raw, std::size_t* duplicates) {
    if (n < 0) throw std::invalid_argument("node count must be nonnegative");
    for (auto& [i, j] : raw) {
        if (i < 0 || i >= n || j < 0 || j >= n)
            throw std::invalid_argument("edge (" + std::to_string(i) + ", " + std::to_string(j) +
                                        ") out of range for n=" + std::to_string(n));
        if (i == j)
            throw std::invalid_argument("self-loop at node " + std::to_string(i) +
                                        " violates the simple-graph model");
        if (i > j) std::swap(i, j);
    }
    std::sort(raw.begin(), raw.end());
    std::size_t before = raw.size();
    raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
    if (duplicates) *duplicates = before - raw.size();

    Graph g;
    g.n = n;
    g.edges = std::move(raw);
    g.adjacency.assign(n, {});
    for (auto [i, j] : g.edges) {
        g.adjacency[i].push_back(j);
        g.adjacency[j].push_back(i);
    }
    for (auto& nbrs : g.adjacency) std::sort(nbrs.begin(), nbrs.end());
    g.degrees.resize(n);
    for (int i = 0; i < n; ++i) g.degrees[i] = int(g.adjacency[i].size());
    return g;
}

int Graph::d_max() const {
    int d = 0;
    for (int di : degrees) d = std::max(d, di);
    return d;
}

bool Graph::has_edge(int i, int j) const {
    const auto& nbrs = adjacency[i];
    return std::binary_search(nbrs.begin(), nbrs.end(), j);
}

namespace {

// Strips comments and surrounding whitespace; returns false for blank lines.
bool clean_line(std::string& line) {
    if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
    auto first = line.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) return false;
    auto last = line.find_last_not_of(" \t\r\n");
    line = line.substr(first, last - first + 1);
    return true;
}

long parse_id(const std::string& tok, int lineno) {
    std::size_t used = 0;
    long v = 0;
    try {
        v = std::stol(tok, &used);
    } catch (const std::exception&) {
        throw ParseError("line " + std::to_string(lineno) + ": expected an integer node id, got '" +
                         tok + "'");
    }
    if (used != tok.size())
        throw ParseError("line " + std::to_string(lineno) + ": trailing junk in token '" + tok + "'");
    return v;
}

}  // namespace

ParsedGraph parse_edge_list(std::istream& in, const ParseOptions& opt) {
    std::vector<std::pair<int, int>> edges;
    long declared = opt.declared_nodes > 0 ? opt.declared_nodes : -1;
    long max_id = -1;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!clean_line(line)) continue;
        std::istringstream ls(line);
        std::string a, b, extra;
        ls >> a;
        if (a == "nodes") {
            if (!(ls >> b) || (ls >> extra))
                throw ParseError("line " + std::to_string(lineno) + ": header must read 'nodes N'");
            long nn = parse_id(b, lineno);
            if (nn < 0) throw ParseError("line " + std::to_string(lineno) + ": negative node count");
            declared = std::max(declared, nn);
            continue;
        }
        if (!(ls >> b) || (ls >> extra))
            throw ParseError("line " + std::to_string(lineno) +
                             ": expected 'i j', got '" + line + "'");
        long i = parse_id(a, lineno);
        long j = parse_id(b, lineno);
        if (opt.one_based) {
            if (i < 1 || j < 1)
                throw ParseError("line " + std::to_string(lineno) +
                                 ": node ids must be >= 1 with one-based input");
            --i;
            --j;
        }
        if (i < 0 || j < 0)
            throw ParseError("line " + std::to_string(lineno) + ": negative node id");
        if (i == j)
            throw ParseError("self-loop at line " + std::to_string(lineno) + ": '" + line + "'");
        max_id = std::max({max_id, i, j});
        edges.emplace_back(int(i), int(j));
    }
    long n = max_id + 1;
    if (declared >= 0) {
        if (declared < n)
            throw ParseError("declared node count " + std::to_string(declared) +
                             " is smaller than largest node id " + std::to_string(max_id));
        n = declared;
    }
    ParsedGraph out;
    try {
        out.graph = Graph::from_edges(int(n), std::move(edges), &out.duplicate_edges);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
    return out;
}

ParsedGraph parse_matrix_market(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw ParseError("empty Matrix Market input");
    std::istringstream hs(line);
    std::string banner, object, format, field, symmetry;
    hs >> banner >> object >> format >> field >> symmetry;
    auto lower = [](std::string s) {
        std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
        return s;
    };
    object = lower(object);
    format = lower(format);
    field = lower(field);
    symmetry = lower(symmetry);
    if (banner != "%%MatrixMarket" || object != "matrix")
        throw ParseError("not a Matrix Market file (bad banner)");
    if (format != "coordinate")
        throw ParseError("unsupported Matrix Market format '" + format + "' (need coordinate)");
    if (field != "pattern" && field != "real" && field != "integer")
        throw ParseError("unsupported Matrix Market field '" + field + "' (need pattern or real)");
    if (symmetry != "symmetric")
        throw ParseError("unsupported Matrix Market symmetry '" + symmetry + "' (need symmetric)");

    int lineno = 1;
    long rows = -1, cols = -1, nnz = -1;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line[0] == '%') continue;
        std::string copy = line;
        if (auto pos = copy.find_first_not_of(" \t\r\n"); pos == std::string::npos) continue;
        std::istringstream ls(line);
        if (!(ls >> rows >> cols >> nnz))
            throw ParseError("line " + std::to_string(lineno) + ": malformed size line");
        break;
    }
    if (rows < 0) throw ParseError("missing Matrix Market size line");
    if (rows != cols)
        throw ParseError("matrix is " + std::to_string(rows) + "x" + std::to_string(cols) +
                         ", adjacency requires square");

    std::vector<std::pair<int, int>> edges;
    long seen = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line[0] == '%') continue;
        if (auto pos = line.find_first_not_of(" \t\r\n"); pos == std::string::npos) continue;
        std::istringstream ls(line);
        long i = 0, j = 0;
        if (!(ls >> i >> j))
            throw ParseError("line " + std::to_string(lineno) + ": malformed entry");
        ++seen;
        if (i < 1 || i > rows || j < 1 || j > rows)
            throw ParseError("line " + std::to_string(lineno) + ": index out of range");
        if (i == j)
            throw ParseError("line " + std::to_string(lineno) +
                             ": diagonal entry (self-loop) not allowed");
        edges.emplace_back(int(i - 1), int(j - 1));
    }
    if (nnz >= 0 && seen != nnz)
        throw ParseError("entry count mismatch: header declares " + std::to_string(nnz) +
                         ", file holds " + std::to_string(seen));
    ParsedGraph out;
    try {
        out.graph = Graph::from_edges(int(rows), std::move(edges), &out.duplicate_edges);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
    return out;
}

void write_edge_list(const Graph& g, std::ostream& out) {
    long max_id = -1;
    for (auto [i, j] : g.edges) max_id = std::max({max_id, long(i), long(j)});
    if (max_id + 1 < g.n) out << "nodes " << g.n << "\n";
    for (auto [i, j] : g.edges) out << i << " " << j << "\n";
}

Graph generate_ring(int n) {
    if (n < 3) throw std::invalid_argument("ring requires n >= 3");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(n, std::move(e));
}

Graph generate_path(int n) {
    if (n < 1) throw std::invalid_argument("path requires n >= 1");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph::from_edges(n, std::move(e));
}

Graph generate_complete(int n) {
    if (n < 1) throw std::invalid_argument("complete graph requires n >= 1");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph::from_edges(n, std::move(e));
}

Graph generate_star(int n) {
    if (n < 2) throw std::invalid_argument("star requires n >= 2");
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i < n; ++i) e.emplace_back(0, i);
    return Graph::from_edges(n, std::move(e));
}

namespace {

std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace

Graph generate_erdos_renyi(int n, double p, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("erdos_renyi requires n >= 1");
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("edge probability must lie in [0, 1]");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            std::uint64_t h = splitmix64(splitmix64(splitmix64(seed) ^ std::uint64_t(i + 1)) ^
                                         std::uint64_t(j + 1));
            double u = double(h >> 11) * 0x1.0p-53;  // uniform in [0, 1)
            if (u < p) e.emplace_back(i, j);
        }
    }
    return Graph::from_edges(n, std::move(e));
}

Components connected_components(const Graph& g) {
    Components c;
    c.labels.assign(g.n, -1);
    std::vector<int> stack;
    for (int s = 0; s < g.n; ++s) {
        if (c.labels[s] != -1) continue;
        ++c.count;
        c.labels[s] = s;  // s is the smallest unvisited node of its component
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : g.adjacency[v]) {
                if (c.labels[w] == -1) {
                    c.labels[w] = s;
                    stack.push_back(w);
                }
            }
        }
    }
    return c;
}

std::int64_t LaplacianGraph::weight(int i, int j) const {
    const auto& row = out[i];
    auto it = std::lower_bound(row.begin(), row.end(), std::make_pair(j, INT64_MIN));
    if (it != row.end() && it->first == j) return it->second;
    return 0;
}

LaplacianGraph laplacian_graph(const Graph& g) {
    LaplacianGraph lg;
    lg.n = g.n;
    lg.out.resize(g.n);
    for (int i = 0; i < g.n; ++i) {
        auto& row = lg.out[i];
        row.reserve(g.adjacency[i].size() + 1);
        bool loop_placed = false;
        for (int j : g.adjacency[i]) {
            if (!loop_placed && j > i) {
                row.emplace_back(i, g.degrees[i]);
                loop_placed = true;
            }
            row.emplace_back(j, -1);
        }
        if (!loop_placed) row.emplace_back(i, g.degrees[i]);
    }
    return lg;
}

}  // namespace lapspec
