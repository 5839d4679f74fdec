#include "hilbnode/combin.hpp"

#include <algorithm>
#include <stdexcept>

namespace hilbnode {

ComponentLabel ComponentLabel::product(char kind, std::vector<int> levels, std::vector<int> indices) {
    if (levels.size() != indices.size() || levels.empty())
        throw std::invalid_argument("product label needs matching level/index lists");
    return {kind, std::move(levels), std::move(indices)};
}

std::string ComponentLabel::str() const {
    std::string s(1, kind);
    s += "[";
    if (levels.size() == 1) {
        s += std::to_string(levels[0]) + "," + std::to_string(indices[0]);
    } else {
        for (std::size_t k = 0; k < levels.size(); ++k) s += (k ? "," : "") + std::to_string(levels[k]);
        s += ";";
        for (std::size_t k = 0; k < indices.size(); ++k) s += (k ? "," : "") + std::to_string(indices[k]);
    }
    s += "]";
    return s;
}

ChainGraph punctual_chain(int m) {
    if (m < 1) throw std::invalid_argument("punctual_chain needs m >= 1");
    ChainGraph g;
    if (m == 1) {
        g.degenerate_point = ComponentLabel::q_point(1, 1);
        return g;
    }
    for (int i = 1; i <= m - 1; ++i) g.components.push_back({ComponentLabel::c_curve(m, i), 1, ""});
    for (int i = 1; i <= m - 2; ++i)
        g.attachments.push_back({i - 1, i, {ComponentLabel::q_point(m, i + 1)}, 0});
    return g;
}

ChainGraph hilb_component_graph(int m) {
    if (m < 1) throw std::invalid_argument("hilb_component_graph needs m >= 1");
    ChainGraph g;
    for (int i = 0; i <= m; ++i) {
        ComponentLabel support = (i == 0)   ? ComponentLabel::q_point(m, 1)
                                 : (i == m) ? ComponentLabel::q_point(m, m)
                                            : ComponentLabel::c_curve(m, i);
        std::string note = "support " + support.str() + ", generic (" + std::to_string(m - i) + "," +
                           std::to_string(i) + ")";
        g.components.push_back({ComponentLabel::d_germ(m, i), m, note});
    }
    for (int i = 0; i <= m - 1; ++i) g.attachments.push_back({i, i + 1, {}, m - 1});
    return g;
}

ChainGraph flag_chain_graph(int m) {
    if (m < 2) throw std::invalid_argument("flag_chain_graph needs m >= 2");
    ChainGraph g;
    // C^m_1, C^(m-1)_1, C^m_2, ..., C^(m-1)_(m-2), C^m_(m-1)
    for (int i = 1; i <= m - 1; ++i) {
        g.components.push_back({ComponentLabel::c_curve(m, i), 1,
                                "iso onto C[" + std::to_string(m) + "," + std::to_string(i) +
                                    "], point Q[" + std::to_string(m - 1) + "," + std::to_string(i) + "]"});
        if (i <= m - 2)
            g.components.push_back({ComponentLabel::c_curve(m - 1, i), 1,
                                    "point Q[" + std::to_string(m) + "," + std::to_string(i + 1) +
                                        "], iso onto C[" + std::to_string(m - 1) + "," + std::to_string(i) + "]"});
    }
    for (int k = 0; k + 1 < static_cast<int>(g.components.size()); ++k) {
        // attachment pairs alternate (Q^m_(i+1), Q^(m-1)_i) and (Q^m_(i+1), Q^(m-1)_(i+1))
        int i = k / 2 + 1;
        std::vector<ComponentLabel> locus;
        if (k % 2 == 0)
            locus = {ComponentLabel::q_point(m, i + 1), ComponentLabel::q_point(m - 1, i)};
        else
            locus = {ComponentLabel::q_point(m, i + 1), ComponentLabel::q_point(m - 1, i + 1)};
        g.attachments.push_back({k, k + 1, std::move(locus), 0});
    }
    return g;
}

ChainGraph lemma6_chain_graph(int m) {
    if (m < 3) throw std::invalid_argument("lemma6_chain_graph needs m >= 3");
    ChainGraph g;
    g.components.push_back({ComponentLabel::c_curve(m, 1), 1, ""});
    g.components.push_back({ComponentLabel::c_curve(m - 1, 1), 1, ""});
    for (int i = 2; i <= m - 2; ++i) {
        // product component C^(m,m-2)_(i,i-1); the bottom level is a point
        // only when m = 3, which has an empty product range anyway
        g.components.push_back({ComponentLabel::product('C', {m, m - 2}, {i, i - 1}), 2,
                                "iso onto C[" + std::to_string(m) + "," + std::to_string(i) + "] x C[" +
                                    std::to_string(m - 2) + "," + std::to_string(i - 1) + "], point Q[" +
                                    std::to_string(m - 1) + "," + std::to_string(i) + "]"});
        g.components.push_back({ComponentLabel::c_curve(m - 1, i), 1, ""});
    }
    g.components.push_back({ComponentLabel::c_curve(m, m - 1), 1, ""});
    for (int k = 0; k + 1 < static_cast<int>(g.components.size()); ++k)
        g.attachments.push_back({k, k + 1, {}, 0});
    return g;
}

std::vector<ComponentLabel> fhilb_components(int m, bool literal_index_rule) {
    if (m < 2) throw std::invalid_argument("fhilb_components needs m >= 2");
    std::vector<ComponentLabel> out;
    auto column = [&](int top, int i, int depth) {
        std::vector<int> levels, indices;
        for (int j = 0; j <= depth; ++j) {
            levels.push_back(top - 2 * j);
            indices.push_back(i - j);
        }
        out.push_back(ComponentLabel::product('C', std::move(levels), std::move(indices)));
    };
    // columns headed at level m
    for (int i = 1; i <= m - 1; ++i) {
        int j = std::min(i - 1, m - i - 1);
        if (literal_index_rule) j = std::min(j, m / 2);
        column(m, i, j);
    }
    // columns headed at level m-1
    for (int i = 1; i <= m - 2; ++i) {
        int j = literal_index_rule ? std::min({(m - 1) / 2, i - 1, m - i - 3})
                                   : std::min(i - 1, m - i - 2);
        if (j < 0) continue;
        column(m - 1, i, j);
    }
    return out;
}

BigInt binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    BigInt r = 1;
    for (int j = 1; j <= k; ++j) {
        r *= n - k + j;
        r /= j;
    }
    return r;
}

BigInt stars_and_bars_count(int m, int c) {
    if (c < 1) return m == 0 ? 1 : 0;
    if (c == 1) return 1;
    BigInt total = 0;
    for (int k = 0; k <= m; ++k) total += stars_and_bars_count(m - k, c - 1);
    return total;
}

GlobalCounts global_counts(int m, int c, const std::vector<int>& node_multiplicities) {
    if (c < 1) throw std::invalid_argument("need at least one component");
    int sum = 0;
    for (int mi : node_multiplicities) {
        if (mi < 0) throw std::invalid_argument("negative node multiplicity");
        sum += mi;
    }
    if (sum > m) throw std::invalid_argument("node multiplicities exceed the total length");
    GlobalCounts g;
    g.components = binomial(m + c - 1, m);
    for (int mi : node_multiplicities) {
        g.cycle_fibre_chain_lengths.push_back(mi >= 1 ? mi - 1 : 0);
        if (mi == 0)
            g.local_model.push_back("point");
        else
            g.local_model.push_back("normal crossing of 2 components, dim " + std::to_string(mi));
    }
    return g;
}

std::string chain_to_dot(const ChainGraph& g, const std::string& name) {
    std::string dot = "graph " + name + " {\n  rankdir=LR;\n";
    if (g.degenerate_point) dot += "  p0 [label=\"" + g.degenerate_point->str() + "\", shape=point];\n";
    for (std::size_t k = 0; k < g.components.size(); ++k) {
        dot += "  c" + std::to_string(k) + " [label=\"" + g.components[k].label.str() + " (dim " +
               std::to_string(g.components[k].dim) + ")\"];\n";
    }
    for (const auto& a : g.attachments) {
        dot += "  c" + std::to_string(a.a) + " -- c" + std::to_string(a.b);
        if (!a.locus.empty()) {
            dot += " [label=\"";
            for (std::size_t k = 0; k < a.locus.size(); ++k) dot += (k ? "," : "") + a.locus[k].str();
            dot += "\"]";
        }
        dot += ";\n";
    }
    dot += "}\n";
    return dot;
}

std::string chain_to_ascii(const ChainGraph& g) {
    if (g.degenerate_point) return "* " + g.degenerate_point->str() + "\n";
    std::string line, labels;
    for (std::size_t k = 0; k < g.components.size(); ++k) {
        if (k) line += "·";
        line += "-";
        if (k) labels += " ";
        labels += g.components[k].label.str();
    }
    return line + "\n" + labels + "\n";
}

std::string triangle_ascii(int m) {
    std::string out;
    for (int k = 2; k <= m; ++k) {
        out += std::string(static_cast<std::size_t>(m - k), ' ');
        for (int i = 1; i <= k - 1; ++i) {
            if (i > 1) out += "·";
            out += "-";
        }
        out += "\n";
    }
    return out;
}

}  // namespace hilbnode
