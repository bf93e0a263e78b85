#include "cnsparse/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <unordered_map>

namespace cnsparse {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::string body = line;
    if (auto pos = body.find('#'); pos != std::string::npos) body.resize(pos);
    std::istringstream ss(body);
    std::vector<std::string> toks;
    std::string t;
    while (ss >> t) toks.push_back(t);
    return toks;
}

class LabelMap {
  public:
    int id_for(const std::string& label) {
        auto [it, inserted] = ids_.try_emplace(label, static_cast<int>(labels_.size()));
        if (inserted) labels_.push_back(label);
        return it->second;
    }
    int size() const { return static_cast<int>(labels_.size()); }
    std::vector<std::string> take_labels() { return std::move(labels_); }

  private:
    std::unordered_map<std::string, int> ids_;
    std::vector<std::string> labels_;
};

double parse_weight(const std::string& tok, int line_no) {
    double w = 0.0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), w);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw ParseError(line_no, "expected numeric weight, got '" + tok + "'");
    return w;
}

}  // namespace

LoadedGraph read_edge_list(std::istream& in) {
    LabelMap labels;
    std::vector<std::tuple<int, int, double>> triples;
    bool any_weight = false;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto toks = tokenize(line);
        if (toks.empty()) continue;
        if (toks.size() != 2 && toks.size() != 3)
            throw ParseError(line_no, "expected 'i j' or 'i j w', got " +
                                          std::to_string(toks.size()) + " fields");
        int a = labels.id_for(toks[0]);
        int b = labels.id_for(toks[1]);
        if (a == b) throw ParseError(line_no, "self-loop on '" + toks[0] + "'");
        double w = 1.0;
        if (toks.size() == 3) {
            w = parse_weight(toks[2], line_no);
            if (!(w > 0.0)) throw ParseError(line_no, "weight must be positive");
            any_weight = true;
        }
        triples.push_back({a, b, w});
    }
    LoadedGraph out;
    out.has_weights = any_weight;
    out.labels = labels.take_labels();
    int n = static_cast<int>(out.labels.size());
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(triples.size());
    for (auto& [a, b, w] : triples) pairs.push_back({a, b});
    try {
        out.graph = Graph::from_edges(n, pairs);
        if (any_weight) out.weighted = WeightedGraph::from_edges(n, triples);
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error(std::string("invalid edge list: ") + e.what());
    }
    return out;
}

LoadedGraph read_edge_list_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open '" + path + "'");
    return read_edge_list(f);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

void write_edge_list(std::ostream& out, const WeightedGraph& g) {
    char buf[64];
    for (const auto& e : g.edges()) {
        std::snprintf(buf, sizeof buf, "%d %d %.17g", e.u, e.v, e.w);
        out << buf << '\n';
    }
}

void write_edge_list_file(const std::string& path, const WeightedGraph& g) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open '" + path + "' for writing");
    write_edge_list(f, g);
}

void write_edge_list_file(const std::string& path, const Graph& g) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open '" + path + "' for writing");
    write_edge_list(f, g);
}

LoadedHypergraph read_hyperedge_list(std::istream& in) {
    LabelMap labels;
    std::vector<std::vector<int>> hyperedges;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto toks = tokenize(line);
        if (toks.empty()) continue;
        if (toks.size() < 2)
            throw ParseError(line_no, "hyperedge must contain at least 2 nodes");
        std::vector<int> e;
        e.reserve(toks.size());
        for (const auto& t : toks) e.push_back(labels.id_for(t));
        std::vector<int> sorted = e;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw ParseError(line_no, "repeated node in hyperedge");
        hyperedges.push_back(std::move(e));
    }
    LoadedHypergraph out;
    out.labels = labels.take_labels();
    out.hypergraph =
        Hypergraph::from_hyperedges(static_cast<int>(out.labels.size()), std::move(hyperedges));
    return out;
}

LoadedHypergraph read_hyperedge_list_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open '" + path + "'");
    return read_hyperedge_list(f);
}

void write_hyperedge_list(std::ostream& out, const Hypergraph& h) {
    for (const auto& e : h.hyperedges()) {
        for (std::size_t i = 0; i < e.size(); ++i) out << (i ? " " : "") << e[i];
        out << '\n';
    }
}

void write_hyperedge_list_file(const std::string& path, const Hypergraph& h) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open '" + path + "' for writing");
    write_hyperedge_list(f, h);
}

}  // namespace cnsparse
