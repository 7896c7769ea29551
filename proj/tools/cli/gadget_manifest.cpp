#include "cli/gadget_manifest.hpp"

#include <filesystem>
#include <fstream>

#include "fewapsp/core/error.hpp"
#include "fewapsp/core/io.hpp"

namespace fewapsp::cli {

namespace {

template <class G>
nlohmann::json gadget_fields(const GadgetGraph<G>& g, const char* type) {
    return {{"graph", "graph.txt"},       {"graph_type", type},         {"sources", g.sources},
            {"sinks", g.sinks},           {"offset", g.offset},         {"max_genuine", g.max_genuine},
            {"undirected", g.undirected}, {"layer_sizes", g.layer_sizes}};
}

template <class G>
GadgetGraph<G> restore(const nlohmann::json& j, G graph) {
    GadgetGraph<G> g;
    g.graph = std::move(graph);
    g.sources = j.at("sources").get<std::vector<std::size_t>>();
    g.sinks = j.at("sinks").get<std::vector<std::size_t>>();
    g.offset = j.at("offset").get<std::int64_t>();
    g.max_genuine = j.at("max_genuine").get<std::int64_t>();
    g.undirected = j.at("undirected").get<bool>();
    return g;
}

}  // namespace

nlohmann::json save_gadget(const std::string& dir, const EdgeGadget& g) {
    save_graph((std::filesystem::path(dir) / "graph.txt").string(), g.graph);
    return gadget_fields(g, "edge-weighted");
}

nlohmann::json save_gadget(const std::string& dir, const NodeGadget& g) {
    save_graph((std::filesystem::path(dir) / "graph.txt").string(), g.graph);
    return gadget_fields(g, "node-weighted");
}

WeightMatrix decode_saved_gadget(const std::string& manifest_path, const WeightMatrix& dist) {
    std::ifstream in(manifest_path);
    if (!in) throw ParseError("cannot open manifest " + manifest_path);
    nlohmann::json m;
    try {
        m = nlohmann::json::parse(in);
        const auto& gj = m.at("gadget");
        const auto dir = std::filesystem::path(manifest_path).parent_path();
        const AnyGraph graph = load_graph((dir / gj.at("graph").get<std::string>()).string());
        const auto n = std::visit([](const auto& g) { return g.n(); }, graph);
        if (dist.rows() != n || dist.cols() != n) throw ShapeError("distance matrix does not match the gadget graph");
        if (const auto* eg = std::get_if<EdgeWeightedGraph>(&graph)) return decode_gadget(restore(gj, *eg), dist);
        return decode_gadget(restore(gj, std::get<NodeWeightedGraph>(graph)), dist);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("bad manifest " + manifest_path + ": " + e.what());
    }
}

}  // namespace fewapsp::cli
