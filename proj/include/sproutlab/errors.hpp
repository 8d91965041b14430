#pragma once

#include <stdexcept>

namespace sproutlab {

// Structural graph violations: bad endpoints, loops, duplicate edges.
struct graph_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Family parameter below the family's documented minimum, or unknown family.
struct family_parameter_error : graph_error {
    using graph_error::graph_error;
};

// Operation requires a connected input.
struct connectivity_error : graph_error {
    using graph_error::graph_error;
};

// Operation requires a tree.
struct tree_error : graph_error {
    using graph_error::graph_error;
};

// Sequence is not a permutation of 1..n, or pattern/graph sizes disagree.
struct pattern_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Instance exceeds the configured exhaustive-search cap and no override was given.
struct size_cap_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input text or JSON.
struct format_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace sproutlab
