#pragma once

#include "fracol/graph.hpp"

#include "json.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace fracol {

using Color = std::int64_t;

/// A b-fold color assignment: every vertex of its domain receives a sorted
/// set of b opaque color ids. The domain is a set of host-graph vertices,
/// which need not be all of V(G) (restrictions and gluing pieces).
class FoldColoring {
public:
    FoldColoring() = default;

    /// Color lists are sorted and deduplicated; nothing else is checked here.
    FoldColoring(int fold, std::map<Vertex, std::vector<Color>> assignment);

    /// The additive identity: fold 0, empty domain. Only `add` accepts it.
    static FoldColoring zero();

    bool is_zero() const noexcept { return fold_ == 0 && assignment_.empty(); }
    int fold() const noexcept { return fold_; }
    const std::map<Vertex, std::vector<Color>>& assignment() const noexcept { return assignment_; }
    const std::vector<Color>& colors(Vertex v) const { return assignment_.at(v); }

    VertexSet domain() const;
    std::vector<Color> palette() const;
    std::size_t palette_size() const { return palette().size(); }

    bool operator==(const FoldColoring&) const = default;

private:
    int fold_ = 0;
    std::map<Vertex, std::vector<Color>> assignment_;
};

/// Sparse Venn-diagram coordinates: for each color, the set of vertices that
/// carry it; the map counts how many colors share each such set.
struct VennSignature {
    std::map<VertexSet, std::int64_t> counts;

    std::int64_t total() const;
    bool operator==(const VennSignature&) const = default;
};

/// A fold coloring modulo scaling: signature weights divided by the fold.
struct FractionalColoring {
    std::map<VertexSet, Rational> weights;

    Rational gvalue() const;
    bool operator==(const FractionalColoring&) const = default;
};

/// Domain must be exactly V(G).
Check validate(const Graph& g, const FoldColoring& c);

/// Validates against the subgraph of g induced by the coloring's domain.
Check validate_on_domain(const Graph& g, const FoldColoring& c);

FoldColoring add(const FoldColoring& c1, const FoldColoring& c2);
FoldColoring scale(int times, const FoldColoring& c);

VennSignature venn_signature(const FoldColoring& c);

/// As above, additionally checking every key is independent in g.
VennSignature venn_signature(const Graph& g, const FoldColoring& c);

bool isomorphic(const FoldColoring& c1, const FoldColoring& c2);
bool equivalent(const FoldColoring& c1, const FoldColoring& c2);

FractionalColoring to_fractional(const FoldColoring& c);
Rational gvalue(const FractionalColoring& f);
Rational gvalue(const FoldColoring& c);

/// Every domain vertex must be covered with total weight exactly one.
Check check_coverage(const FractionalColoring& f, const VertexSet& domain);

FractionalColoring convex_combine(const Rational& lambda, const FractionalColoring& f1,
                                  const FractionalColoring& f2);

/// Restriction to `subset` with the palette recomputed.
FoldColoring restrict_to(const FoldColoring& c, const VertexSet& subset);

/// Glues c1 (domain part1) and c2 (domain part2) into a coloring on
/// part1 ∪ part2. Every edge of g inside the union must lie within one part,
/// and the restrictions to the overlap must be isomorphic after rescaling
/// both to a common fold. Overlap colors are matched by smallest id; c2's
/// remaining colors reuse c1's colors absent from the overlap before fresh
/// ids are drawn, so the palette is the larger of the two.
FoldColoring glue(const Graph& g, const VertexSet& part1, const VertexSet& part2, const FoldColoring& c1,
                  const FoldColoring& c2);

nlohmann::json to_json(const FoldColoring& c);
FoldColoring fold_coloring_from_json(const nlohmann::json& j);

}  // namespace fracol
