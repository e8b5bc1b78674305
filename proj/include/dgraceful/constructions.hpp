#pragma once

#include <dgraceful/labeling.hpp>

#include <optional>
#include <string>

namespace dgraceful
{
    // Explicit d-graceful labellings of paths, stars, even cycles and ladders.
    // Every function verifies its own output before returning and throws
    // std::logic_error if the formulas produced something invalid.

    /// d-graceful alpha-labelling of P_{e+1}, for any divisor d of e.
    auto label_path(int e, int d) -> Labeling;

    /// Centre 0, external vertices get the required gap set in increasing order.
    auto label_star(int e, int d) -> Labeling;

    /// 2-graceful alpha-labelling of C_{4k}, k >= 1.
    auto label_cycle_4k_d2(int k) -> Labeling;

    /// 4-graceful alpha-labelling of C_{4k}, k >= 1.
    auto label_cycle_4k_d4(int k) -> Labeling;

    /// 2-graceful labelling of C_{2k} for odd k >= 3. Not claimed to be alpha.
    auto label_cycle_2k_odd_d2(int k) -> Labeling;

    /// 2-graceful alpha-labelling of the ladder L_{2k}; exists iff k is even.
    auto label_ladder_d2(int k) -> Labeling;

    enum class ConstructionFamily
    {
        Path,
        Star,
        Cycle4kD2,
        Cycle4kD4,
        Cycle2kOddD2,
        LadderD2
    };

    /// CLI spelling: path, star, cycle4k-d2, cycle4k-d4, cycle2k-odd, ladder-d2.
    auto construction_family_name(ConstructionFamily f) -> std::string;
    auto construction_family_from_name(const std::string & name) -> std::optional<ConstructionFamily>;

    /// d is fixed for the cycle and ladder families; nullopt for path and star.
    auto fixed_d(ConstructionFamily f) -> std::optional<int>;

    /// Whether the construction guarantees an alpha-labelling.
    auto claims_alpha(ConstructionFamily f) -> bool;

    struct ConstructionRequest
    {
        ConstructionFamily family;
        int size_param;  // e for paths and stars, k otherwise
        int d;
    };

    auto construct(const ConstructionRequest & req) -> Labeling;
}
