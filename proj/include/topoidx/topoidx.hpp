#pragma once

// Umbrella header for the topoidx library: exact topological indices
// (Wiener, Wiener polarity, generalized W_d, Zagreb), distance
// distributions and the Hosoya polynomial for connected undirected graphs,
// with O(1) closed forms for k-sun graphs and a brute-force oracle for
// cross-validation.

#include "topoidx/checked.hpp"
#include "topoidx/closed_forms.hpp"
#include "topoidx/distance.hpp"
#include "topoidx/edgelist.hpp"
#include "topoidx/errors.hpp"
#include "topoidx/graph.hpp"
#include "topoidx/hosoya.hpp"
#include "topoidx/indices.hpp"
#include "topoidx/oracle.hpp"
#include "topoidx/rational.hpp"
#include "topoidx/relations.hpp"

namespace topoidx {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace topoidx
