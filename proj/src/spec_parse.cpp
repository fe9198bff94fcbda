#include "derange/spec_parse.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace derange {

namespace {

std::vector<int> parse_dims(const std::string& body, const std::string& spec, size_t want = 0) {
    std::vector<int> dims;
    std::stringstream ss(body);
    std::string tok;
    while (std::getline(ss, tok, 'x')) {
        size_t used = 0;
        int d = 0;
        try {
            d = std::stoi(tok, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad dimension '" + tok + "' in spec '" + spec + "'");
        }
        if (used != tok.size() || d <= 0)
            throw std::invalid_argument("bad dimension '" + tok + "' in spec '" + spec + "'");
        dims.push_back(d);
    }
    if (dims.empty()) throw std::invalid_argument("no dimensions in spec '" + spec + "'");
    if (want && dims.size() != want)
        throw std::invalid_argument("spec '" + spec + "' needs exactly " + std::to_string(want) +
                                    " dimensions");
    return dims;
}

}  // namespace

Graph parse_graph_spec(const std::string& spec) {
    const auto colon = spec.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("graph spec '" + spec + "' needs the form kind:args");
    const std::string kind = spec.substr(0, colon);
    const std::string body = spec.substr(colon + 1);
    if (kind == "rect") return gen_checkerboard(parse_dims(body, spec));
    if (kind == "mobius") {
        auto d = parse_dims(body, spec, 2);
        return gen_moebius(d[0], d[1]);
    }
    if (kind == "torus") {
        auto d = parse_dims(body, spec, 2);
        return gen_torus(d[0], d[1]);
    }
    if (kind == "cycle") return gen_cycle(parse_dims(body, spec, 1)[0]);
    if (kind == "complete") return gen_complete(parse_dims(body, spec, 1)[0]);
    if (kind == "file") return read_graph_file(body);
    throw std::invalid_argument("unknown graph spec kind '" + kind + "'");
}

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open graph file '" + path + "'");
    long long n = 0, m = 0;
    if (!(in >> n >> m)) throw std::invalid_argument("graph file '" + path + "' lacks 'n m' header");
    if (n < 0 || m < 0) throw std::invalid_argument("graph file '" + path + "' has negative counts");
    std::vector<std::pair<VertexId, VertexId>> edges;
    edges.reserve(static_cast<size_t>(m));
    for (long long i = 0; i < m; ++i) {
        long long u = 0, v = 0;
        if (!(in >> u >> v))
            throw std::invalid_argument("graph file '" + path + "' ends before edge " +
                                        std::to_string(i));
        edges.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
    }
    return build_graph(static_cast<int>(n), edges, "file:" + path);
}

void write_graph_file(const Graph& g, std::ostream& os) {
    const auto es = g.edges();
    os << g.n << " " << es.size() << "\n";
    for (auto [u, v] : es) os << u << " " << v << "\n";
}

}  // namespace derange
