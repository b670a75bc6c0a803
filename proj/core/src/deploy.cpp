#include "wsnq/deploy.hpp"

#include <stdexcept>

namespace wsnq {

void DeploymentConfig::validate() const {
    if (n_nodes < 1) throw std::domain_error("deployment: n_nodes must be >= 1");
    if (!(area_width > 0.0) || !(area_height > 0.0))
        throw std::domain_error("deployment: area dimensions must be > 0");
    if (!(comm_radius > 0.0)) throw std::domain_error("deployment: comm_radius must be > 0");
    if (!(initial_energy > 0.0)) throw std::domain_error("deployment: initial_energy must be > 0");
}

std::vector<Node> deploy(const DeploymentConfig& config) {
    config.validate();
    UniformRng rng(config.seed);
    std::vector<Node> nodes;
    nodes.reserve(config.n_nodes);
    for (int i = 0; i < config.n_nodes; ++i) {
        Node node;
        node.id = i;
        node.position.x = rng.next(config.area_width);
        node.position.y = rng.next(config.area_height);
        node.initial_energy = config.initial_energy;
        nodes.push_back(node);
    }
    if (config.pin_sink_center) {
        nodes[0].position = {config.area_width / 2.0, config.area_height / 2.0};
    }
    return nodes;
}

} // namespace wsnq
