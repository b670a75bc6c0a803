#pragma once

#include "wsnq/errors.hpp"
#include "wsnq/node.hpp"
#include "wsnq/radio.hpp"
#include "wsnq/topology.hpp"

namespace wsnq {

namespace detail {
inline double apply_charge(Node& node, double charge) {
    if (node.consumed_energy + charge > node.initial_energy) {
        throw BatteryDepletedError(node.id, charge, node.residual_energy());
    }
    node.consumed_energy += charge;
    return charge;
}
} // namespace detail

/// Broadcasts go out at full radio range regardless of who is listening.
inline double charge_broadcast(Node& node, const Topology& topology, const RadioParams& params) {
    return detail::apply_charge(node, energy_cost(params.msg_bits, topology.comm_radius, params));
}

/// Unicasts are charged at the actual link distance; the receiver pays nothing
/// (transmit-only model) unless reception charging is enabled by the caller.
inline double charge_unicast(Node& sender, const Node& receiver, const RadioParams& params) {
    return detail::apply_charge(sender, energy_cost(params.msg_bits, distance(sender.position, receiver.position), params));
}

/// Optional reception cost: circuit energy only, alpha0 * l.
inline double charge_reception(Node& node, const RadioParams& params) {
    return detail::apply_charge(node, params.alpha0 * params.msg_bits);
}

} // namespace wsnq
