#include <dgraceful/labeling.hpp>
#include <dgraceful/errors.hpp>

#include <algorithm>
#include <map>
#include <set>

namespace dgraceful
{
    namespace
    {
        auto modulo(Label a, Label n) -> Label
        {
            auto r = a % n;
            return r < 0 ? r + n : r;
        }

        auto is_forbidden(Label gap, int d, int m) -> bool
        {
            return gap % (m + 1) == 0 && gap / (m + 1) >= 1 && gap / (m + 1) <= d - 1;
        }
    }

    auto max_label(int d, int m) -> Label
    {
        return static_cast<Label>(d) * (m + 1) - 1;
    }

    auto required_gaps(int d, int m) -> std::vector<Label>
    {
        std::vector<Label> result;
        for (Label g = 1 ; g <= max_label(d, m) ; ++g)
            if (g % (m + 1) != 0)
                result.push_back(g);
        return result;
    }

    auto forbidden_gaps(int d, int m) -> std::vector<Label>
    {
        std::vector<Label> result;
        for (int j = 1 ; j < d ; ++j)
            result.push_back(static_cast<Label>(j) * (m + 1));
        return result;
    }

    auto divisors(int e) -> std::vector<int>
    {
        if (e < 1)
            throw InvalidParameter("divisors of a non-positive number");
        std::vector<int> small, large;
        for (int d = 1 ; d * d <= e ; ++d)
            if (e % d == 0) {
                small.push_back(d);
                if (d != e / d)
                    large.push_back(e / d);
            }
        small.insert(small.end(), large.rbegin(), large.rend());
        return small;
    }

    auto admissible_divisors(const Graph & g) -> std::vector<int>
    {
        return divisors(g.size());
    }

    auto make_labeling(Graph graph, std::vector<Label> labels, int d) -> Labeling
    {
        if (d < 1 || graph.size() % d != 0)
            throw NotAdmissible("d = " + std::to_string(d) + " does not divide e = " + std::to_string(graph.size()));
        int m = graph.size() / d;
        return Labeling{ std::move(graph), std::move(labels), d, m };
    }

    auto complement(const Labeling & l) -> Labeling
    {
        auto result = l;
        auto top = max_label(l.d, l.m);
        for (auto & f : result.labels)
            f = top - f;
        return result;
    }

    auto violation_kind_name(ViolationKind k) -> std::string
    {
        switch (k) {
            case ViolationKind::DivisorMismatch: return "divisor_mismatch";
            case ViolationKind::LabelCount:      return "label_count";
            case ViolationKind::LabelOutOfRange: return "label_out_of_range";
            case ViolationKind::NonInjective:    return "non_injective";
            case ViolationKind::DuplicateGap:    return "duplicate_gap";
            case ViolationKind::ForbiddenGap:    return "forbidden_gap";
            case ViolationKind::MissingGap:      return "missing_gap";
        }
        return "unknown";
    }

    auto verify_d_graceful(const Labeling & l) -> GracefulReport
    {
        GracefulReport report;
        auto fail = [&] (ViolationKind kind, std::string detail) {
            report.violations.push_back(Violation{ kind, std::move(detail) });
        };

        const auto e = l.graph.size();
        if (l.d < 1 || l.m < 1 || static_cast<long long>(l.d) * l.m != e) {
            fail(ViolationKind::DivisorMismatch, "d*m = " + std::to_string(static_cast<long long>(l.d) * l.m)
                    + " but e = " + std::to_string(e));
            return report;
        }
        if (static_cast<int>(l.labels.size()) != l.graph.vertex_count()) {
            fail(ViolationKind::LabelCount, "expected " + std::to_string(l.graph.vertex_count())
                    + " labels, got " + std::to_string(l.labels.size()));
            return report;
        }

        const auto top = max_label(l.d, l.m);
        for (VertexId v = 0 ; v < l.graph.vertex_count() ; ++v)
            if (l.labels[v] < 0 || l.labels[v] > top)
                fail(ViolationKind::LabelOutOfRange, "vertex " + std::to_string(v) + " has label "
                        + std::to_string(l.labels[v]) + " outside [0," + std::to_string(top) + "]");

        std::map<Label, VertexId> owner;
        for (VertexId v = 0 ; v < l.graph.vertex_count() ; ++v) {
            auto [it, fresh] = owner.emplace(l.labels[v], v);
            if (! fresh)
                fail(ViolationKind::NonInjective, "vertices " + std::to_string(it->second) + " and "
                        + std::to_string(v) + " share label " + std::to_string(l.labels[v]));
        }

        if (! report.violations.empty())
            return report;

        report.spectrum.required = required_gaps(l.d, l.m);
        std::map<Label, int> seen;
        for (auto [a, b] : l.graph.edges()) {
            auto gap = l.labels[a] > l.labels[b] ? l.labels[a] - l.labels[b] : l.labels[b] - l.labels[a];
            report.spectrum.realized.push_back(gap);
            ++seen[gap];
        }

        for (auto & [gap, count] : seen) {
            if (count > 1)
                fail(ViolationKind::DuplicateGap, "gap " + std::to_string(gap) + " realized "
                        + std::to_string(count) + " times");
            if (is_forbidden(gap, l.d, l.m))
                fail(ViolationKind::ForbiddenGap, "gap " + std::to_string(gap) + " is a forbidden multiple of "
                        + std::to_string(l.m + 1));
        }
        for (auto gap : report.spectrum.required)
            if (! seen.contains(gap))
                fail(ViolationKind::MissingGap, "gap " + std::to_string(gap) + " not realized");

        report.ok = report.violations.empty();
        return report;
    }

    auto verify_alpha(const Labeling & l) -> bool
    {
        auto parts = bipartition(l.graph);
        if (! parts)
            throw PreconditionFailed("alpha check needs a bipartite graph");

        auto range = [&] (const std::vector<VertexId> & part) {
            auto [lo, hi] = std::minmax_element(part.begin(), part.end(),
                    [&] (VertexId a, VertexId b) { return l.labels.at(a) < l.labels.at(b); });
            return std::pair{ l.labels.at(*lo), l.labels.at(*hi) };
        };

        // a connected bipartite graph with an edge has both parts non-empty
        if (parts->part_b.empty())
            return true;
        auto [a_min, a_max] = range(parts->part_a);
        auto [b_min, b_max] = range(parts->part_b);
        return a_max < b_min || b_max < a_min;
    }

    auto verify_rds(std::span<const Label> subset, Label group_order, Label subgroup_order) -> RdsReport
    {
        if (group_order < 1 || subgroup_order < 1 || group_order % subgroup_order != 0)
            throw InvalidParameter("subgroup order must divide the group order");

        RdsReport report;
        report.group_order = group_order;
        report.subgroup_order = subgroup_order;

        std::set<Label> residues;
        for (auto s : subset)
            if (! residues.insert(modulo(s, group_order)).second)
                report.distinct = false;

        const Label step = group_order / subgroup_order;
        std::vector<int> hits(group_order, 0);
        for (std::size_t i = 0 ; i < subset.size() ; ++i)
            for (std::size_t j = 0 ; j < subset.size() ; ++j)
                if (i != j)
                    ++hits[modulo(subset[i] - subset[j], group_order)];

        for (Label g = 0 ; g < group_order ; ++g) {
            if (g % step == 0) {
                if (hits[g] > 0)
                    report.subgroup_hits.push_back(g);
            }
            else if (hits[g] == 0)
                report.uncovered.push_back(g);
            else if (hits[g] > 1)
                report.overcovered.push_back(g);
        }

        report.ok = report.distinct && report.uncovered.empty() && report.overcovered.empty()
            && report.subgroup_hits.empty();
        return report;
    }

    auto verify_rds_view(const Labeling & l) -> RdsReport
    {
        if (! l.graph.complete())
            throw PreconditionFailed("the difference set view applies to complete graphs only");
        const Label v = l.graph.vertex_count();
        return verify_rds(l.labels, v * (v - 1) + 2 * static_cast<Label>(l.d), 2 * static_cast<Label>(l.d));
    }
}
