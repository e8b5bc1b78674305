#pragma once

#include <dgraceful/decomposition.hpp>

#include <string>

namespace dgraceful
{
    /// Vertices carry their labels, edges their gaps.
    auto labeling_to_dot(const Labeling & l) -> std::string;

    /// The orbit of the first base block under x -> x+1, drawn on Z_{pq}
    /// with one colour per translate.
    auto orbit_to_dot(const Decomposition & dec) -> std::string;
}
