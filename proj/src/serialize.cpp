#include "lrforest/serialize.hpp"

#include <sstream>

namespace lrforest {

nlohmann::ordered_json to_json(const TraceResult& trace) {
    nlohmann::ordered_json j;
    j["root"] = format_number(trace.root);
    j["word"] = trace.word.to_string();
    auto chain = nlohmann::ordered_json::array();
    for (const GaussianRational& z : trace.chain)
        chain.push_back(format_number(z));
    j["chain"] = std::move(chain);
    return j;
}

namespace {

nlohmann::ordered_json node_to_json(const OrbitNode* node) {
    if (!node)
        return nullptr;
    nlohmann::ordered_json j;
    j["value"] = format_number(node->value);
    j["left"] = node_to_json(node->left.get());
    j["right"] = node_to_json(node->right.get());
    return j;
}

void node_to_dot(const OrbitNode* node, std::ostream& os) {
    if (!node || !node->left)
        return;
    os << "  \"" << format_number(node->value) << "\" -> \""
       << format_number(node->left->value) << "\" [label=\"L\"];\n";
    os << "  \"" << format_number(node->value) << "\" -> \""
       << format_number(node->right->value) << "\" [label=\"R\"];\n";
    node_to_dot(node->left.get(), os);
    node_to_dot(node->right.get(), os);
}

} // namespace

nlohmann::ordered_json to_json(const OrbitTree& tree) {
    return node_to_json(tree.nodes.get());
}

std::string to_dot(const OrbitTree& tree) {
    std::ostringstream os;
    os << "digraph orbit {\n";
    if (tree.nodes && !tree.nodes->left)
        os << "  \"" << format_number(tree.nodes->value) << "\";\n";
    node_to_dot(tree.nodes.get(), os);
    os << "}\n";
    return os.str();
}

} // namespace lrforest
