#include <dgraceful/dot.hpp>

#include <array>
#include <sstream>

namespace dgraceful
{
    auto labeling_to_dot(const Labeling & l) -> std::string
    {
        std::ostringstream out;
        out << "graph labeling {\n";
        out << "    label=\"d=" << l.d << ", m=" << l.m << "\";\n";
        for (VertexId v = 0 ; v < l.graph.vertex_count() ; ++v)
            out << "    " << v << " [label=\"" << l.labels.at(v) << "\"];\n";
        for (auto [a, b] : l.graph.edges()) {
            auto gap = l.labels.at(a) > l.labels.at(b) ? l.labels.at(a) - l.labels.at(b) : l.labels.at(b) - l.labels.at(a);
            out << "    " << a << " -- " << b << " [label=\"" << gap << "\"];\n";
        }
        out << "}\n";
        return out.str();
    }

    auto orbit_to_dot(const Decomposition & dec) -> std::string
    {
        static const std::array<const char *, 8> palette{
            "red", "blue", "darkgreen", "orange", "purple", "brown", "magenta", "cyan" };

        const auto v = dec.spec.modulus();
        std::ostringstream out;
        out << "graph orbit {\n";
        out << "    label=\"K_{" << dec.spec.parts << "x" << dec.spec.part_size << "}\";\n";
        for (Label x = 0 ; x < v ; ++x)
            out << "    " << x << " [label=\"" << x << "\", group=\"part" << x % dec.spec.parts << "\"];\n";
        if (! dec.base_blocks.empty())
            for (Label g = 0 ; g < v ; ++g) {
                auto block = translate(dec.base_blocks.front(), g, v);
                for (auto [a, b] : dec.graph.edges())
                    out << "    " << block[a] << " -- " << block[b] << " [color=" << palette[g % palette.size()]
                        << ", tooltip=\"block +" << g << "\"];\n";
            }
        out << "}\n";
        return out.str();
    }
}
