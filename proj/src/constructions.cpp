#include <dgraceful/constructions.hpp>
#include <dgraceful/errors.hpp>

#include <algorithm>
#include <stdexcept>

namespace dgraceful
{
    namespace
    {
        constexpr Label unassigned = -1;

        /// Labels addressed by the 1-based vertex names x_1, ..., x_n.
        class OneBased
        {
            public:
                explicit OneBased(int n) : _labels(n, unassigned) { }

                auto x(int t) -> Label & { return _labels.at(t - 1); }

                auto take() -> std::vector<Label>
                {
                    if (std::find(_labels.begin(), _labels.end(), unassigned) != _labels.end())
                        throw std::logic_error("construction left a vertex unlabelled");
                    return std::move(_labels);
                }

            private:
                std::vector<Label> _labels;
        };

        /// Calls fn(i) for i in [lo, hi]; an empty interval does nothing.
        template <typename Fn>
        auto over(long long lo, long long hi, Fn fn) -> void
        {
            for (auto i = lo ; i <= hi ; ++i)
                fn(i);
        }

        auto certified(Labeling l, bool alpha, const std::string & what) -> Labeling
        {
            if (! verify_d_graceful(l))
                throw std::logic_error(what + ": construction is not d-graceful");
            if (alpha && ! verify_alpha(l))
                throw std::logic_error(what + ": construction is not an alpha-labelling");
            return l;
        }

        auto check_divides(int e, int d) -> void
        {
            if (e < 1)
                throw InvalidParameter("size e must be positive");
            if (d < 1 || e % d != 0)
                throw NotAdmissible("d = " + std::to_string(d) + " does not divide e = " + std::to_string(e));
        }
    }

    auto label_path(int e, int d) -> Labeling
    {
        check_divides(e, d);
        const long long m = e / d, dd = d;
        const long long top = dd * (m + 1);
        OneBased f(e + 1);

        if (m % 2 == 0) {
            over(0, dd * m / 2, [&] (auto i) { f.x(2 * i + 1) = i; });
            // s-th block of m/2 indices is shifted down by s
            for (long long s = 0 ; s < dd ; ++s)
                over(s * m / 2 + 1, (s + 1) * m / 2, [&] (auto i) { f.x(2 * i) = top - i - s; });
        }
        else {
            // odd d: x_1, x_3, ..., x_{dm} and x_2, ..., x_{dm+1}
            // even d: x_1, x_3, ..., x_{dm+1} and x_2, ..., x_{dm}
            const long long last_odd = (d % 2 == 1) ? (dd * m - 1) / 2 : dd * m / 2;
            const long long last_even = (d % 2 == 1) ? (dd * m + 1) / 2 : dd * m / 2;

            over(0, (m - 1) / 2, [&] (auto i) { f.x(2 * i + 1) = i; });
            for (long long s = 1 ; ((2 * s - 1) * m + 1) / 2 <= last_odd ; ++s)
                over(((2 * s - 1) * m + 1) / 2, std::min(((2 * s + 1) * m - 1) / 2, last_odd),
                        [&] (auto i) { f.x(2 * i + 1) = i + s; });

            for (long long s = 0 ; s * m + 1 <= last_even ; ++s)
                over(s * m + 1, std::min((s + 1) * m, last_even),
                        [&] (auto i) { f.x(2 * i) = top - i - s; });
        }

        return certified(make_labeling(build_path(e), f.take(), d), true, "path");
    }

    auto label_star(int e, int d) -> Labeling
    {
        check_divides(e, d);
        std::vector<Label> labels{ 0 };
        auto externals = required_gaps(d, e / d);
        labels.insert(labels.end(), externals.begin(), externals.end());
        return certified(make_labeling(build_star(e), std::move(labels), d), true, "star");
    }

    auto label_cycle_4k_d2(int k) -> Labeling
    {
        if (k < 1)
            throw InvalidParameter("C_4k needs k >= 1");
        const long long kk = k;
        OneBased f(4 * k);

        over(0, 2 * kk - 1, [&] (auto i) { f.x(2 * i + 1) = i; });
        over(1, kk, [&] (auto i) { f.x(2 * i) = 4 * kk + 2 - i; });
        over(kk + 1, 2 * kk, [&] (auto i) { f.x(2 * i) = 4 * kk - i; });

        return certified(make_labeling(build_cycle(4 * k), f.take(), 2), true, "C_4k, d = 2");
    }

    auto label_cycle_4k_d4(int k) -> Labeling
    {
        if (k < 1)
            throw InvalidParameter("C_4k needs k >= 1");
        const long long kk = k;
        OneBased f(4 * k);

        if (k % 2 == 0) {
            over(0, 3 * kk / 2 - 1, [&] (auto i) { f.x(2 * i + 1) = i; });
            over(3 * kk / 2, 2 * kk - 1, [&] (auto i) { f.x(2 * i + 1) = i + 1; });

            over(1, kk / 2, [&] (auto i) { f.x(2 * i) = 4 * kk + 4 - i; });
            over(kk / 2 + 1, kk, [&] (auto i) { f.x(2 * i) = 4 * kk + 3 - i; });
            over(kk + 1, 2 * kk, [&] (auto i) { f.x(2 * i) = 4 * kk + 1 - i; });
        }
        else {
            over(0, (kk - 1) / 2, [&] (auto i) { f.x(2 * i + 1) = i; });
            over((kk + 1) / 2, 2 * kk - 1, [&] (auto i) { f.x(2 * i + 1) = i + 1; });

            over(1, kk, [&] (auto i) { f.x(2 * i) = 4 * kk + 4 - i; });
            over(kk + 1, (3 * kk - 1) / 2, [&] (auto i) { f.x(2 * i) = 4 * kk + 2 - i; });
            over((3 * kk + 1) / 2, 2 * kk, [&] (auto i) { f.x(2 * i) = 4 * kk + 1 - i; });
        }

        return certified(make_labeling(build_cycle(4 * k), f.take(), 4), true, "C_4k, d = 4");
    }

    auto label_cycle_2k_odd_d2(int k) -> Labeling
    {
        if (k < 3 || k % 2 == 0)
            throw InvalidParameter("C_2k construction needs odd k >= 3, got k = " + std::to_string(k));

        std::vector<Label> labels;
        switch (k) {
            case 3: labels = { 0, 5, 2, 3, 1, 7 }; break;
            case 5: labels = { 0, 11, 1, 3, 7, 4, 5, 10, 2, 9 }; break;
            case 7: labels = { 0, 15, 1, 14, 11, 4, 10, 5, 7, 6, 2, 13, 3, 12 }; break;
            default: break;
        }

        if (labels.empty()) {
            const long long t = (k - 1) / 2;
            OneBased f(2 * k);

            if (t % 2 == 0) {
                // k = 1 mod 4; for t = 4 the third even branch is an empty interval
                over(0, t / 2, [&] (auto i) { f.x(2 * i + 1) = i; });
                over(t / 2 + 1, t, [&] (auto i) { f.x(2 * i + 1) = 7 * t / 2 + 3 - i; });
                over(t + 1, t + t / 4, [&] (auto i) { f.x(2 * i + 1) = 3 * t + 2 - i; });
                over(t + t / 4 + 1, 3 * t / 2, [&] (auto i) { f.x(2 * i + 1) = t + 2 + i; });
                over(3 * t / 2 + 1, 2 * t, [&] (auto i) { f.x(2 * i + 1) = i - t; });

                over(1, t / 2, [&] (auto i) { f.x(2 * i) = 4 * t + 4 - i; });
                over(t / 2 + 1, t + 1, [&] (auto i) { f.x(2 * i) = t / 2 + i; });
                over(t + 2, t + (t + 2) / 4, [&] (auto i) { f.x(2 * i) = t + 1 + i; });
                over(t + (t + 2) / 4 + 1, 3 * t / 2, [&] (auto i) { f.x(2 * i) = 3 * t + 2 - i; });
                over(3 * t / 2 + 1, 2 * t + 1, [&] (auto i) { f.x(2 * i) = 5 * t + 4 - i; });
            }
            else {
                // k = 3 mod 4
                over(0, (t - 1) / 2, [&] (auto i) { f.x(2 * i + 1) = i; });
                over((t + 1) / 2, t, [&] (auto i) { f.x(2 * i + 1) = (7 * t + 5) / 2 - i; });
                over(t + 1, t + (t + 1) / 4, [&] (auto i) { f.x(2 * i + 1) = 3 * t + 2 - i; });
                over(t + (t + 1) / 4 + 1, (3 * t - 1) / 2, [&] (auto i) { f.x(2 * i + 1) = t + 2 + i; });
                over((3 * t + 1) / 2, 2 * t, [&] (auto i) { f.x(2 * i + 1) = i - t; });

                over(1, (t + 1) / 2, [&] (auto i) { f.x(2 * i) = 4 * t + 4 - i; });
                over((t + 3) / 2, t + 1, [&] (auto i) { f.x(2 * i) = (t - 1) / 2 + i; });
                over(t + 2, t + (t + 3) / 4, [&] (auto i) { f.x(2 * i) = t + 1 + i; });
                over(t + (t + 3) / 4 + 1, (3 * t + 1) / 2, [&] (auto i) { f.x(2 * i) = 3 * t + 2 - i; });
                over((3 * t + 3) / 2, 2 * t + 1, [&] (auto i) { f.x(2 * i) = 5 * t + 4 - i; });
            }
            labels = f.take();
        }

        return certified(make_labeling(build_cycle(2 * k), std::move(labels), 2), false, "C_2k, k odd, d = 2");
    }

    auto label_ladder_d2(int k) -> Labeling
    {
        if (k < 2)
            throw InvalidParameter("ladder needs k >= 2");
        if (k % 2 != 0)
            throw NotAdmissible("L_2k has 3k - 2 = " + std::to_string(3 * k - 2)
                    + " edges; d = 2 needs k even");

        std::vector<Label> labels(2 * k);
        for (int i = 0 ; i < 2 ; ++i)
            for (int j = 0 ; j < k ; ++j) {
                Label value;
                if ((i + j) % 2 == 0)
                    value = j;
                else if (j < k / 2)
                    value = 3 * k - 2 * j - 1;
                else
                    value = 3 * k - 2 * j - 2;
                labels[ladder_vertex(k, i, j)] = value;
            }

        return certified(make_labeling(build_ladder(k), std::move(labels), 2), true, "ladder, d = 2");
    }

    auto construction_family_name(ConstructionFamily f) -> std::string
    {
        switch (f) {
            case ConstructionFamily::Path:         return "path";
            case ConstructionFamily::Star:         return "star";
            case ConstructionFamily::Cycle4kD2:    return "cycle4k-d2";
            case ConstructionFamily::Cycle4kD4:    return "cycle4k-d4";
            case ConstructionFamily::Cycle2kOddD2: return "cycle2k-odd";
            case ConstructionFamily::LadderD2:     return "ladder-d2";
        }
        return "path";
    }

    auto construction_family_from_name(const std::string & name) -> std::optional<ConstructionFamily>
    {
        for (auto f : { ConstructionFamily::Path, ConstructionFamily::Star, ConstructionFamily::Cycle4kD2,
                ConstructionFamily::Cycle4kD4, ConstructionFamily::Cycle2kOddD2, ConstructionFamily::LadderD2 })
            if (construction_family_name(f) == name)
                return f;
        return std::nullopt;
    }

    auto fixed_d(ConstructionFamily f) -> std::optional<int>
    {
        switch (f) {
            case ConstructionFamily::Path:
            case ConstructionFamily::Star:         return std::nullopt;
            case ConstructionFamily::Cycle4kD4:    return 4;
            case ConstructionFamily::Cycle4kD2:
            case ConstructionFamily::Cycle2kOddD2:
            case ConstructionFamily::LadderD2:     return 2;
        }
        return std::nullopt;
    }

    auto claims_alpha(ConstructionFamily f) -> bool
    {
        return f != ConstructionFamily::Cycle2kOddD2;
    }

    auto construct(const ConstructionRequest & req) -> Labeling
    {
        if (auto fixed = fixed_d(req.family) ; fixed && *fixed != req.d)
            throw NotAdmissible(construction_family_name(req.family) + " is only constructed for d = "
                    + std::to_string(*fixed));

        switch (req.family) {
            case ConstructionFamily::Path:         return label_path(req.size_param, req.d);
            case ConstructionFamily::Star:         return label_star(req.size_param, req.d);
            case ConstructionFamily::Cycle4kD2:    return label_cycle_4k_d2(req.size_param);
            case ConstructionFamily::Cycle4kD4:    return label_cycle_4k_d4(req.size_param);
            case ConstructionFamily::Cycle2kOddD2: return label_cycle_2k_odd_d2(req.size_param);
            case ConstructionFamily::LadderD2:     return label_ladder_d2(req.size_param);
        }
        throw std::logic_error("unknown construction family");
    }
}
