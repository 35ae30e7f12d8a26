#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wrnet/egraph.hpp"

namespace wrnet {

/// A parsed network file.
///
///   # comment
///   species X Y
///   X + Y -> 2X + Y : 3/2
///   0 <-> X : 1, 2
///
/// Rates are given on every reaction or on none.
struct Network
{
    std::vector<std::string> species;
    EGraph graph;
    std::optional<RateVector> rates;
};

/// Throws ParseError with a 1-based line and column.
Network parse_network(std::string_view text);
Network read_network_file(const std::string& path);

/// "0", "X", "2X + 3/2Y". Coordinates must be nonnegative.
std::string format_complex(const RatVec& coords, const std::vector<std::string>& species);

/// Inverse of parse_network up to whitespace and comments; `<->` lines are
/// written as two reactions.
std::string print_network(const std::vector<std::string>& species, const EGraph& g,
                          const std::optional<RateVector>& rates = std::nullopt);
std::string print_network(const Network& n);

}  // namespace wrnet
