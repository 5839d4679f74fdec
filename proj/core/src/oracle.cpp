#include "hilbnode/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "json.hpp"

namespace hilbnode {

namespace {

using Json = nlohmann::ordered_json;

// All nonzero vectors supported on the given coordinates with the first
// nonzero entry normalized to 1 (projective representatives).
void for_each_projective_rep(const std::vector<int>& support, std::uint64_t q, int ambient,
                             const FieldCtx& ctx, long long& budget,
                             const std::function<void(const Vec&)>& fn) {
    const int d = static_cast<int>(support.size());
    // iterate over the position of the leading 1, then free tails
    for (int lead = 0; lead < d; ++lead) {
        const int tail = d - lead - 1;
        long long total = 1;
        for (int k = 0; k < tail; ++k) {
            total *= static_cast<long long>(q);
            if (total > (1ll << 40)) throw ResourceError("oracle: projective enumeration too large");
        }
        for (long long code = 0; code < total; ++code) {
            if (--budget < 0) throw ResourceError("oracle: candidate budget exhausted");
            Vec v(static_cast<std::size_t>(ambient), ctx.zero());
            v[static_cast<std::size_t>(support[static_cast<std::size_t>(lead)])] = ctx.one();
            long long rest = code;
            for (int k = 0; k < tail; ++k) {
                long long digit = rest % static_cast<long long>(q);
                rest /= static_cast<long long>(q);
                v[static_cast<std::size_t>(support[static_cast<std::size_t>(lead + 1 + k)])] =
                    ctx.from_int(digit);
            }
            fn(v);
        }
    }
}

// Associate normal forms of the nonzero non-units at truncation N:
// x^a, y^b, x^a + c y^b with c != 0.
std::vector<FieldSeries> first_generator_classes(std::uint64_t q, int n, const FieldCtx& ctx) {
    std::vector<FieldSeries> out;
    for (int a = 1; a <= n; ++a) out.push_back(FieldSeries::monomial_x(n, a, ctx.one()));
    for (int b = 1; b <= n; ++b) out.push_back(FieldSeries::monomial_y(n, b, ctx.one()));
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b)
            for (std::uint64_t c = 1; c < q; ++c) {
                FieldSeries s = FieldSeries::monomial_x(n, a, ctx.one());
                s.set_y(b, ctx.from_int(static_cast<long long>(c)));
                out.push_back(std::move(s));
            }
    return out;
}

}  // namespace

std::vector<NodeIdeal> enumerate_ideals(std::uint64_t q, int m, int g, const OracleLimits& limits) {
    if (q != 2 && q != 3 && q != 5) throw FieldError("oracle fields are F_2, F_3, F_5");
    if (m < 1 || m > 6) throw FieldError("oracle colength out of range");
    if (g < 1 || g > 3) throw FieldError("oracle generator count out of range");

    const FieldCtx ctx = FieldCtx::prime(q);
    const int n = m;  // truncation at N = m
    const int amb = 2 * n + 1;
    long long budget = limits.max_candidates;

    std::map<std::string, NodeIdeal> found;     // colength == m, by canonical key
    std::map<std::string, NodeIdeal> parents;   // colength > m, candidates for refinement
    auto record = [&](NodeIdeal ideal) {
        if (ideal.colength() == m && ideal.colength_faithful())
            found.emplace(ideal.key(), std::move(ideal));
        else if (ideal.colength() > m)
            parents.emplace(ideal.key(), std::move(ideal));
    };

    for (const auto& z1 : first_generator_classes(q, n, ctx)) {
        if (--budget < 0) throw ResourceError("oracle: candidate budget exhausted");
        record(NodeIdeal::from_generators({z1}, n));
    }

    for (int stage = 2; stage <= g; ++stage) {
        std::map<std::string, NodeIdeal> next_parents;
        for (const auto& [key, parent] : parents) {
            std::vector<int> free = parent.space().free_coords();
            // drop the constant coordinate: a generator with a unit term
            // yields the whole ring, never colength m >= 1
            std::vector<int> support;
            for (int c : free)
                if (c != 0) support.push_back(c);
            for_each_projective_rep(support, q, amb, ctx, budget, [&](const Vec& v) {
                std::vector<FieldSeries> gens = parent.generators();
                gens.push_back(series_from_vec(v, n, ctx));
                NodeIdeal ideal = NodeIdeal::from_generators(std::move(gens), n);
                if (ideal.colength() == m && ideal.colength_faithful()) {
                    found.emplace(ideal.key(), std::move(ideal));
                } else if (ideal.colength() > m && stage < g) {
                    next_parents.emplace(ideal.key(), std::move(ideal));
                }
            });
        }
        parents = std::move(next_parents);
    }

    std::vector<NodeIdeal> out;
    out.reserve(found.size());
    for (auto& [key, ideal] : found) out.push_back(std::move(ideal));
    return out;
}

std::vector<int> IncidenceGraph::supers_of(int level, int idx) const {
    std::vector<int> out;
    for (const auto& e : edges)
        if (e.level == level && e.from == idx) out.push_back(e.to);
    return out;
}

IncidenceGraph incidence_graph(std::uint64_t q, std::vector<int> levels, int g,
                               const OracleLimits& limits) {
    for (std::size_t l = 1; l < levels.size(); ++l)
        if (levels[l] >= levels[l - 1]) throw FieldError("levels must strictly decrease");
    const int n_top = levels.empty() ? 1 : levels.front();
    const FieldCtx ctx = FieldCtx::prime(q);

    IncidenceGraph graph;
    graph.levels = levels;
    for (int m : levels) {
        std::vector<IncidenceGraph::Node> nodes;
        for (auto& ideal : enumerate_ideals(q, m, g, limits)) {
            // re-embed at the common truncation so containments are comparable
            NodeIdeal lifted = NodeIdeal::from_generators(
                [&] {
                    std::vector<FieldSeries> gens;
                    for (const auto& gsrc : ideal.generators()) {
                        FieldSeries g2(n_top, ctx.zero());
                        g2.set_c(gsrc.c());
                        for (int i = 1; i <= ideal.trunc_order(); ++i) {
                            g2.set_x(i, gsrc.x(i));
                            g2.set_y(i, gsrc.y(i));
                        }
                        gens.push_back(std::move(g2));
                    }
                    return gens;
                }(),
                n_top);
            IncidenceGraph::Node node{lifted, classify(lifted)};
            nodes.push_back(std::move(node));
        }
        std::sort(nodes.begin(), nodes.end(),
                  [](const auto& a, const auto& b) { return a.ideal.key() < b.ideal.key(); });
        graph.nodes.push_back(std::move(nodes));
    }
    for (std::size_t l = 0; l + 1 < graph.nodes.size(); ++l)
        for (std::size_t i = 0; i < graph.nodes[l].size(); ++i)
            for (std::size_t j = 0; j < graph.nodes[l + 1].size(); ++j)
                if (graph.nodes[l + 1][j].ideal.contains_ideal(graph.nodes[l][i].ideal))
                    graph.edges.push_back({static_cast<int>(l), static_cast<int>(i), static_cast<int>(j)});
    return graph;
}

std::string incidence_to_dot(const IncidenceGraph& graph) {
    std::string dot = "digraph incidence {\n  rankdir=BT;\n";
    for (std::size_t l = 0; l < graph.nodes.size(); ++l) {
        dot += "  { rank=same;";
        for (std::size_t i = 0; i < graph.nodes[l].size(); ++i)
            dot += " n" + std::to_string(l) + "_" + std::to_string(i) + ";";
        dot += " }\n";
        for (std::size_t i = 0; i < graph.nodes[l].size(); ++i)
            dot += "  n" + std::to_string(l) + "_" + std::to_string(i) + " [label=\"" +
                   graph.nodes[l][i].label.str() + "\"];\n";
    }
    for (const auto& e : graph.edges)
        dot += "  n" + std::to_string(e.level) + "_" + std::to_string(e.from) + " -> n" +
               std::to_string(e.level + 1) + "_" + std::to_string(e.to) + ";\n";
    dot += "}\n";
    return dot;
}

namespace {

void walk_chains(const IncidenceGraph& graph, std::size_t level, std::vector<int>& prefix,
                 std::vector<std::vector<int>>& out) {
    if (level + 1 == graph.nodes.size()) {
        out.push_back(prefix);
        return;
    }
    for (int next : graph.supers_of(static_cast<int>(level), prefix.back())) {
        prefix.push_back(next);
        walk_chains(graph, level + 1, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::string FlagCensus::pattern_str(const Pattern& p, const std::vector<int>& levels) {
    std::string s;
    for (std::size_t l = 0; l < p.size(); ++l) {
        if (l) s += " > ";
        s += (p[l].is_c ? "C[" : "Q[") + std::to_string(levels[l]) + "," + std::to_string(p[l].i) + "]";
    }
    return s;
}

std::vector<FlagCensus::Pattern> FlagCensus::maximal_patterns() const {
    // P1 specializes P2 iff per level: a C(i) entry of P2 allows C(i), Q(i)
    // or Q(i+1) in P1, and a Q(j) entry forces Q(j).
    auto specializes = [](const Pattern& p1, const Pattern& p2) {
        for (std::size_t l = 0; l < p1.size(); ++l) {
            if (p2[l].is_c) {
                if (p1[l].is_c) {
                    if (p1[l].i != p2[l].i) return false;
                } else if (p1[l].i != p2[l].i && p1[l].i != p2[l].i + 1) {
                    return false;
                }
            } else {
                if (p1[l].is_c || p1[l].i != p2[l].i) return false;
            }
        }
        return true;
    };
    std::vector<Pattern> maximal;
    for (const auto& p : patterns) {
        bool dominated = false;
        for (const auto& other : patterns) {
            if (&other == &p) continue;
            if (specializes(p, other) && !(other == p)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) maximal.push_back(p);
    }
    return maximal;
}

int FlagCensus::component_count() const { return static_cast<int>(maximal_patterns().size()); }

FlagCensus flag_census_levels(std::uint64_t q, std::vector<int> levels, const OracleLimits& limits) {
    FlagCensus census;
    census.levels = levels;
    census.graph = incidence_graph(q, levels, 2, limits);

    for (std::size_t i = 0; i < census.graph.nodes[0].size(); ++i) {
        std::vector<int> prefix{static_cast<int>(i)};
        walk_chains(census.graph, 0, prefix, census.chains);
    }

    std::map<FlagCensus::Pattern, long long> groups;
    for (const auto& chain : census.chains) {
        FlagCensus::Pattern pat;
        for (std::size_t l = 0; l < chain.size(); ++l) {
            const IdealType& t = census.graph.nodes[l][static_cast<std::size_t>(chain[l])].label;
            pat.push_back({t.kind == IdealType::Kind::C, t.i});
        }
        ++groups[pat];
    }
    for (auto& [pat, count] : groups) {
        census.patterns.push_back(pat);
        census.pattern_counts.push_back(count);
    }
    return census;
}

FlagCensus flag_point_census(std::uint64_t q, int m, const OracleLimits& limits) {
    if (m < 1 || m > 4) throw FieldError("full-flag census limited to m <= 4");
    std::vector<int> levels;
    for (int k = m; k >= 1; --k) levels.push_back(k);
    return flag_census_levels(q, std::move(levels), limits);
}

std::string census_to_json(const FlagCensus& census, std::uint64_t q) {
    Json j;
    j["schema"] = 1;
    j["q"] = q;
    j["levels"] = census.levels;
    Json pats = Json::array();
    for (std::size_t i = 0; i < census.patterns.size(); ++i) {
        Json p;
        p["pattern"] = FlagCensus::pattern_str(census.patterns[i], census.levels);
        Json entries = Json::array();
        for (const auto& e : census.patterns[i]) {
            entries.push_back(Json{{"c", e.is_c}, {"i", e.i}});
        }
        p["entries"] = entries;
        p["chains"] = census.pattern_counts[i];
        pats.push_back(p);
    }
    j["patterns"] = pats;
    j["chain_count"] = census.chains.size();
    j["component_count"] = census.component_count();
    return j.dump(2);
}

bool census_from_json(const std::string& text, std::uint64_t q, const std::vector<int>& levels,
                      FlagCensus& out) {
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) return false;
    if (!j.contains("schema") || j["schema"] != 1) return false;
    if (j["q"] != q) return false;
    if (j["levels"].get<std::vector<int>>() != levels) return false;
    out = FlagCensus{};
    out.levels = levels;
    for (const auto& p : j["patterns"]) {
        FlagCensus::Pattern pat;
        for (const auto& e : p["entries"]) pat.push_back({e["c"].get<bool>(), e["i"].get<int>()});
        out.patterns.push_back(std::move(pat));
        out.pattern_counts.push_back(p["chains"].get<long long>());
    }
    return true;
}

}  // namespace hilbnode
