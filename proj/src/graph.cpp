#include "basepack/graph.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace basepack {

EdgeId Graph::insert_edge(Vertex u, Vertex v, std::optional<EdgeId> id) {
    check_vertex(u);
    check_vertex(v);
    EdgeId assigned;
    if (id) {
        if (*id < next_id_)
            throw DuplicateEdgeId("edge id " + std::to_string(*id) + " already spent");
        assigned = *id;
        next_id_ = *id + 1;
    } else {
        assigned = next_id_++;
    }
    edges_.emplace(assigned, Endpoints{u, v});
    adjacency_[u].push_back(assigned);
    if (v != u) adjacency_[v].push_back(assigned);
    return assigned;
}

Graph::Endpoints Graph::delete_edge(EdgeId id) {
    auto it = edges_.find(id);
    if (it == edges_.end())
        throw UnknownEdgeId("no edge with id " + std::to_string(id));
    Endpoints e = it->second;
    edges_.erase(it);
    auto drop = [&](Vertex w) {
        auto& adj = adjacency_[w];
        adj.erase(std::find(adj.begin(), adj.end(), id));
    };
    drop(e.u);
    if (e.v != e.u) drop(e.v);
    return e;
}

std::vector<EdgeId> Graph::edge_ids_sorted() const {
    std::vector<EdgeId> ids;
    ids.reserve(edges_.size());
    for (const auto& [id, ep] : edges_) ids.push_back(id);
    std::sort(ids.begin(), ids.end());
    return ids;
}

ApplyResult apply_update(Graph& g, const UpdateEvent& ev) {
    switch (ev.kind) {
        case UpdateEvent::Kind::Insert:
            return {g.insert_edge(ev.u, ev.v, ev.id)};
        case UpdateEvent::Kind::Delete:
            g.delete_edge(*ev.id);
            return {*ev.id};
        default:
            return {std::nullopt};
    }
}

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos) {
            if (pos < text.size()) lines.push_back(text.substr(pos));
            break;
        }
        lines.push_back(text.substr(pos, nl - pos));
        pos = nl + 1;
    }
    return lines;
}

std::vector<std::string_view> tokens(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

long long parse_int(std::string_view tok, int lineno) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw ParseError("expected integer, got '" + std::string(tok) + "'", lineno);
    return value;
}

}  // namespace

Graph parse_graph_file(std::string_view text) {
    auto lines = split_lines(text);
    std::size_t li = 0;
    while (li < lines.size() && tokens(lines[li]).empty()) ++li;
    if (li >= lines.size()) throw ParseError("missing header", 1);

    auto head = tokens(lines[li]);
    if (head.size() != 2) throw ParseError("header must be 'n m'", static_cast<int>(li + 1));
    long long n = parse_int(head[0], static_cast<int>(li + 1));
    long long m = parse_int(head[1], static_cast<int>(li + 1));
    if (n < 0 || m < 0) throw ParseError("negative header values", static_cast<int>(li + 1));

    Graph g(static_cast<int>(n));
    long long seen = 0;
    for (std::size_t k = li + 1; k < lines.size(); ++k) {
        auto toks = tokens(lines[k]);
        if (toks.empty() || toks[0][0] == '#') continue;
        int lineno = static_cast<int>(k + 1);
        if (toks.size() != 3) throw ParseError("edge line must be 'id u v'", lineno);
        long long id = parse_int(toks[0], lineno);
        long long u = parse_int(toks[1], lineno);
        long long v = parse_int(toks[2], lineno);
        if (id < 0) throw ParseError("edge id must be non-negative", lineno);
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError("vertex out of range", lineno);
        if (g.has_edge(id) || id < g.next_edge_id())
            throw ParseError("duplicate edge id " + std::to_string(id), lineno);
        g.insert_edge(static_cast<Vertex>(u), static_cast<Vertex>(v), id);
        ++seen;
    }
    if (seen != m)
        throw InconsistentHeader("header declares " + std::to_string(m) + " edges, found " +
                                 std::to_string(seen));
    return g;
}

std::string to_graph_file(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (EdgeId id : g.edge_ids_sorted()) {
        auto ep = g.endpoints(id);
        out << id << ' ' << ep.u << ' ' << ep.v << '\n';
    }
    return out.str();
}

std::vector<UpdateEvent> parse_update_stream(std::string_view text) {
    std::vector<UpdateEvent> events;
    auto lines = split_lines(text);
    for (std::size_t k = 0; k < lines.size(); ++k) {
        auto toks = tokens(lines[k]);
        if (toks.empty() || toks[0][0] == '#') continue;
        int lineno = static_cast<int>(k + 1);
        if (toks[0] == "+") {
            if (toks.size() == 3) {
                events.push_back(UpdateEvent::insert(
                    static_cast<Vertex>(parse_int(toks[1], lineno)),
                    static_cast<Vertex>(parse_int(toks[2], lineno))));
            } else if (toks.size() == 4) {
                events.push_back(UpdateEvent::insert(
                    static_cast<Vertex>(parse_int(toks[2], lineno)),
                    static_cast<Vertex>(parse_int(toks[3], lineno)),
                    parse_int(toks[1], lineno)));
            } else {
                throw ParseError("insert line must be '+ u v' or '+ id u v'", lineno);
            }
        } else if (toks[0] == "-") {
            if (toks.size() != 2) throw ParseError("delete line must be '- id'", lineno);
            events.push_back(UpdateEvent::erase(parse_int(toks[1], lineno)));
        } else if (toks[0] == "?") {
            if (toks.size() == 2 && toks[1] == "density") {
                events.push_back(UpdateEvent::query_density());
            } else if (toks.size() == 3 && toks[1] == "orient") {
                events.push_back(UpdateEvent::query_orientation(parse_int(toks[2], lineno)));
            } else {
                throw ParseError("query must be '? density' or '? orient id'", lineno);
            }
        } else {
            throw ParseError("unknown directive '" + std::string(toks[0]) + "'", lineno);
        }
    }
    return events;
}

}  // namespace basepack
