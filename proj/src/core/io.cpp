#include "fewapsp/core/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "fewapsp/core/error.hpp"

namespace fewapsp {

namespace {

class LineReader {
public:
    explicit LineReader(std::istream& in) : in_(in) {}

    // Next non-blank line split into tokens; throws on EOF.
    std::vector<std::string> next(const char* what) {
        std::string line;
        while (std::getline(in_, line)) {
            ++lineno_;
            std::istringstream ss(line);
            std::vector<std::string> toks;
            std::string t;
            while (ss >> t) toks.push_back(t);
            if (!toks.empty()) return toks;
        }
        throw ParseError(std::string("unexpected end of input, expected ") + what);
    }

    void expect_end() {
        std::string line;
        while (std::getline(in_, line)) {
            ++lineno_;
            if (line.find_first_not_of(" \t\r") != std::string::npos) fail("trailing content");
        }
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError("line " + std::to_string(lineno_) + ": " + msg);
    }

    std::size_t lineno() const { return lineno_; }

private:
    std::istream& in_;
    std::size_t lineno_ = 0;
};

std::int64_t parse_int(const LineReader& r, const std::string& tok) {
    std::int64_t v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || p != tok.data() + tok.size()) r.fail("not an integer: '" + tok + "'");
    return v;
}

std::size_t parse_count(const LineReader& r, const std::string& tok) {
    auto v = parse_int(r, tok);
    if (v < 0) r.fail("negative count: '" + tok + "'");
    return static_cast<std::size_t>(v);
}

std::int64_t parse_bounded(const LineReader& r, const std::string& tok, std::int64_t bound) {
    auto v = parse_int(r, tok);
    if (v > bound || v < -bound) r.fail("entry out of range: '" + tok + "'");
    return v;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream f(path);
    if (!f) throw ParseError("cannot open for writing: " + path);
    return f;
}

std::ifstream open_in(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ParseError("cannot open: " + path);
    return f;
}

}  // namespace

WeightMatrix read_matrix(std::istream& in, std::int64_t bound) {
    LineReader r(in);
    auto head = r.next("matrix header");
    if (head.size() != 2) r.fail("matrix header must be 'rows cols'");
    const auto rows = parse_count(r, head[0]);
    const auto cols = parse_count(r, head[1]);
    std::vector<Weight> data;
    data.reserve(rows * cols);
    for (std::size_t i = 0; i < rows; ++i) {
        auto toks = cols == 0 ? std::vector<std::string>{} : r.next("matrix row");
        if (toks.size() != cols) {
            r.fail("expected " + std::to_string(cols) + " entries, got " + std::to_string(toks.size()));
        }
        for (const auto& t : toks) {
            if (t == "inf" || t == "-inf" || t == "bot" || t == "+inf") {
                data.push_back(*Weight::parse(t));
            } else {
                data.push_back(Weight(parse_bounded(r, t, bound)));
            }
        }
    }
    r.expect_end();
    return WeightMatrix(rows, cols, std::move(data));
}

void write_matrix(std::ostream& out, const WeightMatrix& m) {
    out << m.rows() << ' ' << m.cols() << '\n';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) out << ' ';
            out << m(i, j).to_string();
        }
        out << '\n';
    }
}

WeightMatrix load_matrix(const std::string& path, std::int64_t bound) {
    auto f = open_in(path);
    return read_matrix(f, bound);
}

void save_matrix(const std::string& path, const WeightMatrix& m) {
    auto f = open_out(path);
    write_matrix(f, m);
}

AnyGraph read_graph(std::istream& in, std::int64_t bound) {
    LineReader r(in);
    auto head = r.next("graph header");
    if (head.size() != 2 && head.size() != 3) r.fail("graph header must be 'n m [type]'");
    const auto n = parse_count(r, head[0]);
    const auto m = parse_count(r, head[1]);
    const std::string type = head.size() == 3 ? head[2] : "edge-weighted";
    auto node = [&](const std::string& tok) {
        auto v = parse_count(r, tok);
        if (v >= n) r.fail("node id out of range: " + tok);
        return v;
    };

    if (type == "node-weighted") {
        std::vector<std::int64_t> w(n, 0);
        std::vector<bool> seen(n, false);
        for (std::size_t i = 0; i < n; ++i) {
            auto t = r.next("node weight line");
            if (t.size() != 2) r.fail("node line must be 'v w'");
            auto v = node(t[0]);
            if (seen[v]) r.fail("duplicate node weight for " + t[0]);
            seen[v] = true;
            w[v] = parse_bounded(r, t[1], bound);
        }
        std::vector<std::pair<std::size_t, std::size_t>> edges;
        edges.reserve(m);
        for (std::size_t e = 0; e < m; ++e) {
            auto t = r.next("edge line");
            if (t.size() != 2) r.fail("edge line must be 'u v'");
            edges.emplace_back(node(t[0]), node(t[1]));
        }
        r.expect_end();
        return NodeWeightedGraph(n, std::move(w), std::move(edges));
    }
    if (type != "edge-weighted") r.fail("unknown graph type '" + type + "'");
    std::vector<Edge> edges;
    edges.reserve(m);
    for (std::size_t e = 0; e < m; ++e) {
        auto t = r.next("edge line");
        if (t.size() != 3) r.fail("edge line must be 'u v w'");
        edges.push_back({node(t[0]), node(t[1]), parse_bounded(r, t[2], bound)});
    }
    r.expect_end();
    return EdgeWeightedGraph(n, std::move(edges));
}

void write_graph(std::ostream& out, const NodeWeightedGraph& g) {
    out << g.n() << ' ' << g.m() << " node-weighted\n";
    for (std::size_t v = 0; v < g.n(); ++v) out << v << ' ' << g.weight(v) << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

void write_graph(std::ostream& out, const EdgeWeightedGraph& g) {
    out << g.n() << ' ' << g.m() << " edge-weighted\n";
    for (const auto& e : g.edges()) out << e.u << ' ' << e.v << ' ' << e.w << '\n';
}

AnyGraph load_graph(const std::string& path, std::int64_t bound) {
    auto f = open_in(path);
    return read_graph(f, bound);
}

void save_graph(const std::string& path, const NodeWeightedGraph& g) {
    auto f = open_out(path);
    write_graph(f, g);
}

void save_graph(const std::string& path, const EdgeWeightedGraph& g) {
    auto f = open_out(path);
    write_graph(f, g);
}

}  // namespace fewapsp
