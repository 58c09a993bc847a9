#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/graph_traits.hpp>
#include <stdexcept>

#include "biplane/error.hpp"
#include "biplane/search.hpp"

namespace biplane {
namespace {

using BoostGraph =
    boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS, boost::property<boost::vertex_index_t, int>,
                          boost::property<boost::edge_index_t, int>>;
using BoostEdge = boost::graph_traits<BoostGraph>::edge_descriptor;

}  // namespace

std::optional<std::vector<std::vector<EdgeId>>> planar_edge_order(const SimpleGraph& g) {
  const int n = g.num_vertices();
  BoostGraph bg(n);
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    boost::add_edge(g.edge(e).u, g.edge(e).v, boost::property<boost::edge_index_t, int>(e), bg);
  }
  std::vector<std::vector<BoostEdge>> embedding(n);
  const bool planar = boost::boyer_myrvold_planarity_test(
      boost::boyer_myrvold_params::graph = bg,
      boost::boyer_myrvold_params::embedding =
          boost::make_iterator_property_map(embedding.begin(), boost::get(boost::vertex_index, bg)));
  if (!planar) return std::nullopt;
  std::vector<std::vector<EdgeId>> order(n);
  auto index = boost::get(boost::edge_index, bg);
  for (int x = 0; x < n; ++x)
    for (const BoostEdge& be : embedding[x]) order[x].push_back(boost::get(index, be));
  return order;
}

std::optional<Rotation> planarity_test(const SimpleGraph& g) {
  auto order = planar_edge_order(g);
  if (!order) return std::nullopt;
  Rotation rotation(g.num_vertices());
  for (VertexId x = 0; x < g.num_vertices(); ++x)
    for (EdgeId e : (*order)[x]) rotation[x].push_back(g.edge(e).u == x ? 4 * e : 4 * e + 1);

  // Self-certification: the embedding must satisfy Euler's formula.
  const auto faces = trace_faces(rotation);
  int components = 0;
  g.components(&components);
  int isolated = 0;
  for (VertexId x = 0; x < g.num_vertices(); ++x) isolated += g.degree(x) == 0;
  const int lhs = g.num_vertices() - g.num_edges() + static_cast<int>(faces.size());
  if (lhs != 2 * (components - isolated) + isolated) {
    throw std::logic_error("planar embedding failed its Euler certificate");
  }
  return rotation;
}

std::optional<Drawing> planar_drawing(const ColoredGraph& g) {
  auto rotation = planarity_test(g.graph());
  if (!rotation) return std::nullopt;
  return build_drawing(g, {}, std::move(*rotation));
}

}  // namespace biplane
