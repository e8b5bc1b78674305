#pragma once

#include <dgraceful/graph.hpp>

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace dgraceful
{
    using Label = std::int64_t;

    /// A vertex labelling of a graph of size e = d*m, together with d and m.
    /// labels[v] is the label of vertex id v.
    struct Labeling
    {
        Graph graph;
        std::vector<Label> labels;
        int d;
        int m;
    };

    /// Largest permitted label (and largest required gap), d(m+1) - 1.
    auto max_label(int d, int m) -> Label;

    /// [1, d(m+1)-1] minus the multiples m+1, 2(m+1), ..., (d-1)(m+1). Has exactly d*m elements.
    auto required_gaps(int d, int m) -> std::vector<Label>;

    /// The gaps a d-graceful labelling must avoid: {m+1, ..., (d-1)(m+1)}.
    auto forbidden_gaps(int d, int m) -> std::vector<Label>;

    /// Divisors of e in increasing order.
    auto admissible_divisors(const Graph & g) -> std::vector<int>;
    auto divisors(int e) -> std::vector<int>;

    /// Builds a labelling, computing m = e / d. Throws NotAdmissible if d does not divide e.
    auto make_labeling(Graph graph, std::vector<Label> labels, int d) -> Labeling;

    /// f -> d(m+1) - 1 - f. Preserves every gap.
    auto complement(const Labeling & l) -> Labeling;

    enum class ViolationKind
    {
        DivisorMismatch,
        LabelCount,
        LabelOutOfRange,
        NonInjective,
        DuplicateGap,
        ForbiddenGap,
        MissingGap
    };

    auto violation_kind_name(ViolationKind k) -> std::string;

    struct Violation
    {
        ViolationKind kind;
        std::string detail;
    };

    struct DifferenceSpectrum
    {
        /// Edge gaps in edge order. A multiset.
        std::vector<Label> realized;
        std::vector<Label> required;
    };

    struct GracefulReport
    {
        bool ok = false;
        DifferenceSpectrum spectrum;
        std::vector<Violation> violations;

        explicit operator bool() const { return ok; }
    };

    /// Checks the labelling is d-graceful. Structural problems (d*m != e, wrong
    /// label count, out-of-range or repeated labels) are reported and stop the
    /// gap analysis; otherwise every repeated, forbidden or missing gap is listed.
    auto verify_d_graceful(const Labeling & l) -> GracefulReport;

    /// One part's labels all lie below the other part's. Throws
    /// PreconditionFailed if the graph is not bipartite.
    auto verify_alpha(const Labeling & l) -> bool;

    struct RdsReport
    {
        bool ok = false;
        Label group_order = 0;
        Label subgroup_order = 0;
        std::vector<Label> uncovered;      // outside the subgroup, never hit
        std::vector<Label> overcovered;    // outside the subgroup, hit more than once
        std::vector<Label> subgroup_hits;  // inside the subgroup, hit at all
        bool distinct = true;              // the subset has no repeated residues

        explicit operator bool() const { return ok; }
    };

    /// Is the subset a cyclic relative difference set with lambda = 1 in
    /// Z_group_order, relative to the subgroup of order subgroup_order?
    /// Elements are read modulo group_order, so no range restriction applies.
    auto verify_rds(std::span<const Label> subset, Label group_order, Label subgroup_order) -> RdsReport;

    /// A labelling of K_v read in Z_{v(v-1)+2d}, relative to the subgroup of
    /// order 2d. Throws PreconditionFailed if the graph is not complete.
    auto verify_rds_view(const Labeling & l) -> RdsReport;
}
