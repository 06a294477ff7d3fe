#include "fracol/fold_coloring.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace fracol {

FoldColoring::FoldColoring(int fold, std::map<Vertex, std::vector<Color>> assignment)
    : fold_(fold), assignment_(std::move(assignment)) {
    if (fold < 0) {
        throw Error(ErrorKind::invalid_input, "negative fold");
    }
    for (auto& [v, list] : assignment_) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
    }
}

FoldColoring FoldColoring::zero() { return {}; }

VertexSet FoldColoring::domain() const {
    VertexSet out;
    out.reserve(assignment_.size());
    for (const auto& [v, list] : assignment_) {
        out.push_back(v);
    }
    return out;
}

std::vector<Color> FoldColoring::palette() const {
    std::vector<Color> out;
    for (const auto& [v, list] : assignment_) {
        out.insert(out.end(), list.begin(), list.end());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::int64_t VennSignature::total() const {
    std::int64_t sum = 0;
    for (const auto& [key, count] : counts) {
        sum += count;
    }
    return sum;
}

Rational FractionalColoring::gvalue() const {
    Rational sum = 0;
    for (const auto& [key, w] : weights) {
        sum += w;
    }
    return sum;
}

Check validate_on_domain(const Graph& g, const FoldColoring& c) {
    if (c.fold() < 1) {
        return Check::fail("fold must be at least 1");
    }
    for (const auto& [v, list] : c.assignment()) {
        if (!g.contains(v)) {
            return Check::fail("vertex " + std::to_string(v) + " is not in the graph");
        }
        if (static_cast<int>(list.size()) != c.fold()) {
            return Check::fail("vertex " + std::to_string(v) + " has " + std::to_string(list.size()) +
                               " colors, expected " + std::to_string(c.fold()));
        }
    }
    for (const auto& [u, list] : c.assignment()) {
        for (Vertex w : g.neighbors(u)) {
            if (w <= u) {
                continue;
            }
            auto it = c.assignment().find(w);
            if (it == c.assignment().end()) {
                continue;
            }
            std::vector<Color> shared;
            std::set_intersection(list.begin(), list.end(), it->second.begin(), it->second.end(),
                                  std::back_inserter(shared));
            if (!shared.empty()) {
                return Check::fail("edge (" + std::to_string(u) + ", " + std::to_string(w) + ") shares color " +
                                   std::to_string(shared.front()));
            }
        }
    }
    return Check::pass();
}

Check validate(const Graph& g, const FoldColoring& c) {
    const auto dom = c.domain();
    if (static_cast<int>(dom.size()) != g.order() || (!dom.empty() && dom.back() != g.order() - 1) ||
        (!dom.empty() && dom.front() != 0)) {
        for (Vertex v = 0; v < g.order(); ++v) {
            if (!c.assignment().contains(v)) {
                return Check::fail("vertex " + std::to_string(v) + " has no colors");
            }
        }
        return Check::fail("coloring assigns colors outside the vertex range");
    }
    return validate_on_domain(g, c);
}

namespace {

FoldColoring shifted(const FoldColoring& c, Color offset) {
    auto assignment = c.assignment();
    for (auto& [v, list] : assignment) {
        for (auto& id : list) {
            id += offset;
        }
    }
    return FoldColoring(c.fold(), std::move(assignment));
}

}  // namespace

FoldColoring add(const FoldColoring& c1, const FoldColoring& c2) {
    if (c1.is_zero()) {
        return c2;
    }
    if (c2.is_zero()) {
        return c1;
    }
    if (c1.domain() != c2.domain()) {
        throw Error(ErrorKind::invalid_input, "add: colorings live on different vertex sets");
    }
    const auto p1 = c1.palette();
    const auto p2 = c2.palette();
    const Color offset = (p1.empty() || p2.empty()) ? 0 : p1.back() - p2.front() + 1;
    const auto moved = shifted(c2, offset);
    auto assignment = c1.assignment();
    for (auto& [v, list] : assignment) {
        const auto& extra = moved.colors(v);
        list.insert(list.end(), extra.begin(), extra.end());
    }
    return FoldColoring(c1.fold() + c2.fold(), std::move(assignment));
}

FoldColoring scale(int times, const FoldColoring& c) {
    if (times < 1) {
        throw Error(ErrorKind::invalid_input, "scale factor must be positive");
    }
    FoldColoring out = FoldColoring::zero();
    for (int i = 0; i < times; ++i) {
        out = add(out, c);
    }
    return out;
}

VennSignature venn_signature(const FoldColoring& c) {
    std::map<Color, VertexSet> carriers;
    for (const auto& [v, list] : c.assignment()) {
        for (Color id : list) {
            carriers[id].push_back(v);
        }
    }
    VennSignature sig;
    for (auto& [id, set] : carriers) {
        ++sig.counts[set];
    }
    return sig;
}

VennSignature venn_signature(const Graph& g, const FoldColoring& c) {
    auto sig = venn_signature(c);
    for (const auto& [key, count] : sig.counts) {
        if (!is_independent(g, key)) {
            throw Error(ErrorKind::invalid_input, "a color class is not independent; coloring is improper");
        }
    }
    return sig;
}

bool isomorphic(const FoldColoring& c1, const FoldColoring& c2) {
    return c1.fold() == c2.fold() && c1.domain() == c2.domain() && venn_signature(c1) == venn_signature(c2);
}

FractionalColoring to_fractional(const FoldColoring& c) {
    if (c.fold() < 1) {
        throw Error(ErrorKind::invalid_input, "to_fractional needs fold >= 1");
    }
    FractionalColoring f;
    for (const auto& [key, count] : venn_signature(c).counts) {
        f.weights.emplace(key, Rational(count, c.fold()));
    }
    return f;
}

bool equivalent(const FoldColoring& c1, const FoldColoring& c2) {
    return c1.domain() == c2.domain() && to_fractional(c1) == to_fractional(c2);
}

Rational gvalue(const FractionalColoring& f) { return f.gvalue(); }

Rational gvalue(const FoldColoring& c) { return Rational(static_cast<long long>(c.palette_size()), c.fold()); }

Check check_coverage(const FractionalColoring& f, const VertexSet& domain) {
    std::map<Vertex, Rational> coverage;
    for (Vertex v : domain) {
        coverage[v] = 0;
    }
    for (const auto& [key, w] : f.weights) {
        if (w < 0) {
            return Check::fail("negative weight");
        }
        for (Vertex v : key) {
            auto it = coverage.find(v);
            if (it == coverage.end()) {
                return Check::fail("weight on vertex " + std::to_string(v) + " outside the domain");
            }
            it->second += w;
        }
    }
    for (const auto& [v, total] : coverage) {
        if (total != 1) {
            return Check::fail("vertex " + std::to_string(v) + " covered " + to_string(total));
        }
    }
    return Check::pass();
}

FractionalColoring convex_combine(const Rational& lambda, const FractionalColoring& f1,
                                  const FractionalColoring& f2) {
    if (lambda < 0 || lambda > 1) {
        throw Error(ErrorKind::invalid_input, "convex_combine: lambda " + to_string(lambda) + " outside [0, 1]");
    }
    FractionalColoring out;
    for (const auto& [key, w] : f1.weights) {
        out.weights[key] += lambda * w;
    }
    for (const auto& [key, w] : f2.weights) {
        out.weights[key] += (1 - lambda) * w;
    }
    std::erase_if(out.weights, [](const auto& kv) { return kv.second == 0; });
    return out;
}

FoldColoring restrict_to(const FoldColoring& c, const VertexSet& subset) {
    std::map<Vertex, std::vector<Color>> assignment;
    for (Vertex v : subset) {
        auto it = c.assignment().find(v);
        if (it == c.assignment().end()) {
            throw Error(ErrorKind::invalid_input, "restrict: vertex " + std::to_string(v) + " not in the domain");
        }
        assignment.emplace(v, it->second);
    }
    return FoldColoring(c.fold(), std::move(assignment));
}

namespace {

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::string describe_signature_diff(const VennSignature& a, const VennSignature& b) {
    std::set<VertexSet> keys;
    for (const auto& [k, n] : a.counts) {
        keys.insert(k);
    }
    for (const auto& [k, n] : b.counts) {
        keys.insert(k);
    }
    for (const auto& key : keys) {
        const auto na = a.counts.contains(key) ? a.counts.at(key) : 0;
        const auto nb = b.counts.contains(key) ? b.counts.at(key) : 0;
        if (na != nb) {
            std::string text = "{";
            for (std::size_t i = 0; i < key.size(); ++i) {
                text += (i ? "," : "") + std::to_string(key[i]);
            }
            return text + "}: " + std::to_string(na) + " vs " + std::to_string(nb);
        }
    }
    return "no difference";
}

/// Colors grouped by the set of overlap vertices carrying them; colors that
/// miss the overlap are keyed by the empty set.
std::map<VertexSet, std::vector<Color>> group_by_overlap(const FoldColoring& c, const VertexSet& overlap) {
    std::map<Color, VertexSet> carriers;
    for (Color id : c.palette()) {
        carriers[id];
    }
    for (Vertex v : overlap) {
        for (Color id : c.colors(v)) {
            carriers[id].push_back(v);
        }
    }
    std::map<VertexSet, std::vector<Color>> groups;
    for (auto& [id, key] : carriers) {
        groups[key].push_back(id);
    }
    return groups;
}

}  // namespace

FoldColoring glue(const Graph& g, const VertexSet& part1, const VertexSet& part2, const FoldColoring& c1,
                  const FoldColoring& c2) {
    if (c1.domain() != part1 || c2.domain() != part2) {
        throw Error(ErrorKind::invalid_input, "glue: coloring domains do not match the given parts");
    }
    std::vector<char> in1(static_cast<std::size_t>(g.order()), 0), in2(static_cast<std::size_t>(g.order()), 0);
    for (Vertex v : part1) {
        in1.at(v) = 1;
    }
    for (Vertex v : part2) {
        in2.at(v) = 1;
    }
    for (auto [u, v] : g.edges()) {
        if ((in1[u] || in2[u]) && (in1[v] || in2[v]) && !(in1[u] && in1[v]) && !(in2[u] && in2[v])) {
            throw Error(ErrorKind::invalid_input, "glue: edge (" + std::to_string(u) + ", " + std::to_string(v) +
                                                      ") lies in neither part");
        }
    }

    const int fold = std::lcm(c1.fold(), c2.fold());
    const auto s1 = scale(fold / c1.fold(), c1);
    const auto s2 = scale(fold / c2.fold(), c2);
    const auto overlap = set_intersection(part1, part2);
    const auto r1 = restrict_to(s1, overlap);
    const auto r2 = restrict_to(s2, overlap);
    const auto sig1 = venn_signature(r1);
    const auto sig2 = venn_signature(r2);
    if (sig1 != sig2) {
        throw Error(ErrorKind::invalid_input,
                    "glue: restrictions to the overlap are not isomorphic (" + describe_signature_diff(sig1, sig2) + ")");
    }

    const auto groups1 = group_by_overlap(s1, overlap);
    const auto groups2 = group_by_overlap(s2, overlap);
    std::map<Color, Color> rename;
    Color next_fresh = s1.palette().empty() ? 0 : s1.palette().back() + 1;
    for (const auto& [key, ids2] : groups2) {
        auto it = groups1.find(key);
        const std::vector<Color> empty;
        const auto& ids1 = it == groups1.end() ? empty : it->second;
        for (std::size_t i = 0; i < ids2.size(); ++i) {
            rename[ids2[i]] = i < ids1.size() ? ids1[i] : next_fresh++;
        }
    }

    auto assignment = s1.assignment();
    for (const auto& [v, list] : s2.assignment()) {
        if (in1[v]) {
            continue;
        }
        std::vector<Color> mapped;
        mapped.reserve(list.size());
        for (Color id : list) {
            mapped.push_back(rename.at(id));
        }
        assignment.emplace(v, std::move(mapped));
    }
    FoldColoring out(fold, std::move(assignment));
    if (auto check = validate_on_domain(g, out); !check) {
        throw Error(ErrorKind::internal, "glue produced an improper coloring: " + check.reason);
    }
    return out;
}

nlohmann::json to_json(const FoldColoring& c) {
    nlohmann::json colors = nlohmann::json::object();
    for (const auto& [v, list] : c.assignment()) {
        colors[std::to_string(v)] = list;
    }
    return {{"b", c.fold()}, {"colors", colors}};
}

FoldColoring fold_coloring_from_json(const nlohmann::json& j) {
    try {
        std::map<Vertex, std::vector<Color>> assignment;
        for (const auto& [key, list] : j.at("colors").items()) {
            std::size_t used = 0;
            const int v = std::stoi(key, &used);
            if (used != key.size()) {
                throw Error(ErrorKind::invalid_input, "bad vertex key '" + key + "'");
            }
            assignment.emplace(v, list.get<std::vector<Color>>());
        }
        return FoldColoring(j.at("b").get<int>(), std::move(assignment));
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::invalid_input, std::string("malformed coloring: ") + e.what());
    } catch (const std::logic_error& e) {
        throw Error(ErrorKind::invalid_input, std::string("malformed coloring: ") + e.what());
    }
}

}  // namespace fracol
