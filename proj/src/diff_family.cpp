#include <dgraceful/diff_family.hpp>
#include <dgraceful/errors.hpp>

#include <algorithm>
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
    }

    auto df_from_labeling(const Labeling & l) -> DifferenceFamily
    {
        if (! verify_d_graceful(l))
            throw PreconditionFailed("difference family needs a d-graceful labelling");

        const Label v = 2 * static_cast<Label>(l.d) * (l.m + 1);
        return DifferenceFamily{ v, 2 * static_cast<Label>(l.d), l.graph, { l.labels } };
    }

    auto df_from_alpha(const Labeling & l, int n) -> DifferenceFamily
    {
        if (n < 1)
            throw InvalidParameter("n must be at least 1");
        if (! verify_d_graceful(l))
            throw PreconditionFailed("difference family needs a d-graceful labelling");
        if (! verify_alpha(l))
            throw PreconditionFailed("n-fold difference family needs an alpha-labelling");

        // the two parts occupy disjoint label ranges; the one holding the
        // smallest label is the lower part and stays fixed
        auto parts = *bipartition(l.graph);
        auto lowest = std::min_element(l.labels.begin(), l.labels.end()) - l.labels.begin();
        const auto & upper = std::find(parts.part_a.begin(), parts.part_a.end(), lowest) != parts.part_a.end()
            ? parts.part_b : parts.part_a;

        const Label shift = static_cast<Label>(l.d) + l.graph.size();
        const Label v = 2 * static_cast<Label>(l.d) * n * (l.m + 1);

        DifferenceFamily df{ v, 2 * static_cast<Label>(l.d) * n, l.graph, { } };
        for (int i = 0 ; i < n ; ++i) {
            auto map = l.labels;
            for (auto y : upper)
                map[y] += i * shift;
            df.maps.push_back(std::move(map));
        }
        return df;
    }

    auto verify_df(const DifferenceFamily & df) -> CoverageReport
    {
        CoverageReport report;
        if (df.modulus < 1 || df.forbidden_order < 1 || df.modulus % df.forbidden_order != 0) {
            report.shape_ok = false;
            return report;
        }
        for (auto & map : df.maps)
            if (static_cast<int>(map.size()) != df.graph.vertex_count()) {
                report.shape_ok = false;
                return report;
            }

        for (std::size_t i = 0 ; i < df.maps.size() ; ++i) {
            std::set<Label> image;
            for (auto x : df.maps[i])
                image.insert(modulo(x, df.modulus));
            if (image.size() != df.maps[i].size())
                report.non_injective_maps.push_back(i);
        }

        std::vector<int> count(df.modulus, 0);
        for (auto & map : df.maps)
            for (auto [x, y] : df.graph.edges()) {
                ++count[modulo(map[x] - map[y], df.modulus)];
                ++count[modulo(map[y] - map[x], df.modulus)];
                report.difference_count += 2;
            }

        // (v / t) Z_v is the subgroup of order t
        const Label step = df.modulus / df.forbidden_order;
        for (Label g = 0 ; g < df.modulus ; ++g) {
            if (g % step == 0) {
                if (count[g] > 0)
                    report.subgroup_hits.push_back(g);
            }
            else if (count[g] == 0)
                report.uncovered.push_back(g);
            else if (count[g] > 1)
                report.overcovered.push_back(g);
        }

        report.ok = report.non_injective_maps.empty() && report.uncovered.empty()
            && report.overcovered.empty() && report.subgroup_hits.empty();
        return report;
    }
}
