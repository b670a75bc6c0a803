#include "wsnq/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "wsnq/errors.hpp"

namespace wsnq {

namespace {

std::string trim(const std::string& s) {
    auto begin = s.find_first_not_of(" \t\r");
    auto end = s.find_last_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    return s.substr(begin, end - begin + 1);
}

double parse_double(const std::string& value, int line) {
    try {
        std::size_t used = 0;
        const double parsed = std::stod(value, &used);
        if (used != value.size()) throw std::invalid_argument("trailing characters");
        return parsed;
    } catch (const std::exception&) {
        throw ConfigError(line, "not a number: '" + value + "'");
    }
}

long long parse_int(const std::string& value, int line) {
    long long parsed = 0;
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), parsed);
    if (ec != std::errc() || ptr != value.data() + value.size())
        throw ConfigError(line, "not an integer: '" + value + "'");
    return parsed;
}

bool parse_bool(const std::string& value, int line) {
    if (value == "true" || value == "1" || value == "yes" || value == "on") return true;
    if (value == "false" || value == "0" || value == "no" || value == "off") return false;
    throw ConfigError(line, "not a boolean: '" + value + "'");
}

protocols::ProtocolKind parse_protocol(const std::string& value, int line) {
    if (value == "cds-rule-k") return protocols::ProtocolKind::CdsRuleK;
    if (value == "a3") return protocols::ProtocolKind::A3;
    if (value == "eecds") return protocols::ProtocolKind::Eecds;
    throw ConfigError(line, "unknown protocol '" + value + "' (cds-rule-k, a3, eecds)");
}

std::vector<int> parse_counts(const std::string& value, int line) {
    std::vector<int> counts;
    std::stringstream stream(value);
    std::string item;
    while (std::getline(stream, item, ',')) {
        item = trim(item);
        const long long n = parse_int(item, line);
        if (n < 1) throw ConfigError(line, "node count must be >= 1");
        counts.push_back(static_cast<int>(n));
    }
    if (counts.empty()) throw ConfigError(line, "node_counts must be non-empty");
    return counts;
}

void require(bool ok, int line, const std::string& what) {
    if (!ok) throw ConfigError(line, what);
}

} // namespace

const char* protocol_name(protocols::ProtocolKind kind) {
    switch (kind) {
        case protocols::ProtocolKind::CdsRuleK: return "cds-rule-k";
        case protocols::ProtocolKind::A3: return "a3";
        case protocols::ProtocolKind::Eecds: return "eecds";
    }
    return "?";
}

void apply_setting(CliConfig& config, const std::string& key, const std::string& value, int line) {
    if (key == "area_width") {
        config.area_width = parse_double(value, line);
        require(config.area_width > 0, line, "area_width must be > 0");
    } else if (key == "area_height") {
        config.area_height = parse_double(value, line);
        require(config.area_height > 0, line, "area_height must be > 0");
    } else if (key == "n_nodes") {
        config.n_nodes = static_cast<int>(parse_int(value, line));
        require(config.n_nodes >= 1, line, "n_nodes must be >= 1");
    } else if (key == "comm_radius") {
        config.comm_radius = parse_double(value, line);
        require(config.comm_radius > 0, line, "comm_radius must be > 0");
    } else if (key == "initial_energy_j") {
        config.initial_energy_j = parse_double(value, line);
        require(config.initial_energy_j > 0, line, "initial_energy_j must be > 0");
    } else if (key == "alpha0") {
        config.alpha0 = parse_double(value, line);
        require(config.alpha0 > 0, line, "alpha0 must be > 0");
    } else if (key == "beta1") {
        config.beta1 = parse_double(value, line);
        require(config.beta1 >= 0, line, "beta1 must be >= 0");
    } else if (key == "msg_bits") {
        config.msg_bits = parse_double(value, line);
        require(config.msg_bits >= 0, line, "msg_bits must be >= 0");
    } else if (key == "protocol") {
        config.protocol = parse_protocol(value, line);
    } else if (key == "rule_k") {
        config.rule_k = static_cast<int>(parse_int(value, line));
        require(config.rule_k >= 1, line, "rule_k must be >= 1");
    } else if (key == "a3_energy_weight") {
        config.a3_energy_weight = parse_double(value, line);
        require(config.a3_energy_weight >= 0 && config.a3_energy_weight <= 1, line,
                "a3_energy_weight must be in [0,1]");
    } else if (key == "reception_charging") {
        config.reception_charging = parse_bool(value, line);
    } else if (key == "seed") {
        const long long seed = parse_int(value, line);
        require(seed >= 0, line, "seed must be >= 0");
        config.seed = static_cast<std::uint64_t>(seed);
    } else if (key == "node_counts") {
        config.node_counts = parse_counts(value, line);
    } else if (key == "trials") {
        config.trials = static_cast<int>(parse_int(value, line));
        require(config.trials >= 1, line, "trials must be >= 1");
    } else if (key == "output_path") {
        config.output_path = value;
    } else {
        throw ConfigError(line, "unknown key '" + key + "'");
    }
}

CliConfig parse_config(std::istream& file,
                       const std::vector<std::pair<std::string, std::string>>& overrides) {
    CliConfig config;
    std::string raw;
    int line_number = 0;
    while (std::getline(file, raw)) {
        ++line_number;
        std::string line = raw;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError(line_number, "expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) throw ConfigError(line_number, "empty key");
        apply_setting(config, key, value, line_number);
    }
    for (const auto& [key, value] : overrides) apply_setting(config, key, value, 0);
    return config;
}

DeploymentConfig CliConfig::deployment() const {
    DeploymentConfig deployment;
    deployment.area_width = area_width;
    deployment.area_height = area_height;
    deployment.n_nodes = n_nodes;
    deployment.comm_radius = comm_radius;
    deployment.initial_energy = initial_energy_j;
    deployment.seed = seed;
    return deployment;
}

RadioParams CliConfig::radio() const { return {alpha0, beta1, msg_bits}; }

protocols::ProtocolConfig CliConfig::protocol_config() const {
    return {protocol, rule_k, a3_energy_weight, reception_charging};
}

harness::ExperimentConfig CliConfig::experiment() const {
    harness::ExperimentConfig experiment;
    experiment.deployment = deployment();
    experiment.protocol = protocol_config();
    experiment.radio = radio();
    experiment.node_counts = node_counts;
    experiment.trials_per_count = trials;
    experiment.base_seed = seed;
    return experiment;
}

std::string CliConfig::to_text() const {
    std::ostringstream out;
    char buf[128];
    auto num = [&](const char* key, double value) {
        std::snprintf(buf, sizeof buf, "%s = %.9g\n", key, value);
        out << buf;
    };
    num("area_width", area_width);
    num("area_height", area_height);
    out << "n_nodes = " << n_nodes << "\n";
    num("comm_radius", comm_radius);
    num("initial_energy_j", initial_energy_j);
    num("alpha0", alpha0);
    num("beta1", beta1);
    num("msg_bits", msg_bits);
    out << "protocol = " << protocol_name(protocol) << "\n";
    out << "rule_k = " << rule_k << "\n";
    num("a3_energy_weight", a3_energy_weight);
    out << "reception_charging = " << (reception_charging ? "true" : "false") << "\n";
    out << "seed = " << seed << "\n";
    out << "node_counts = ";
    for (std::size_t i = 0; i < node_counts.size(); ++i)
        out << (i ? "," : "") << node_counts[i];
    out << "\n";
    out << "trials = " << trials << "\n";
    out << "output_path = " << output_path << "\n";
    return out.str();
}

} // namespace wsnq
