#include <algorithm>
#include <cmath>
#include <random>

#include "rtlab/census.hpp"

namespace rtlab {

double ColoringFamily::log2_size() const {
  return static_cast<double>(free_edges) * std::log2(static_cast<double>(palette.size()));
}

BigInt ColoringFamily::size() const {
  BigInt out = 1;
  for (int64_t i = 0; i < free_edges; ++i) out *= static_cast<int>(palette.size());
  return out;
}

namespace {

// Inner edges take the color of their part; edges between parts are free.
ColoringFamily family_from_part_colors(const PartitionedGraph& g, const std::vector<int>& part_color, int r,
                                       int forbidden, std::vector<int> palette) {
  ColoringFamily fam;
  fam.r = r;
  fam.forbidden = forbidden;
  fam.palette = std::move(palette);
  fam.edges = g.graph.edges();
  auto part = g.part_of();
  fam.fixed.assign(fam.edges.size(), 0);
  for (std::size_t e = 0; e < fam.edges.size(); ++e) {
    auto [u, v] = fam.edges[e];
    if (part[u] == part[v])
      fam.fixed[e] = part_color[part[u]];
    else
      ++fam.free_edges;
  }
  return fam;
}

bool has_be_block(const PartitionedGraph& g, int a, int b) {
  for (auto [p, q] : g.be_blocks)
    if ((p == a && q == b) || (p == b && q == a)) return true;
  return false;
}

}  // namespace

ColoringFamily generate_lower_bound_family(int t, int i, const PartitionedGraph& g) {
  if (t < 1) throw precondition_error("BadFamily", "need t >= 1");
  if (i < 1 || i > 3) throw precondition_error("BadFamily", "i must be 1, 2 or 3");
  const int parts = (i == 1) ? 2 * t : 2 * t + 1;
  if (static_cast<int>(g.parts.size()) != parts)
    throw precondition_error("BadFamily", "H(n," + std::to_string(4 * t + i) + ") needs " + std::to_string(parts) +
                                              " parts, got " + std::to_string(g.parts.size()));
  if (i == 2 && !has_be_block(g, 0, 1)) throw precondition_error("BadFamily", "i = 2 needs a BE block on V1 u V2");
  const int red_parts = (i == 2) ? t + 1 : t;
  std::vector<int> part_color(parts);
  for (int p = 0; p < parts; ++p) part_color[p] = p < red_parts ? 1 : 2;
  return family_from_part_colors(g, part_color, 2, 3 * t + i, {1, 2});
}

ColoringFamily rf33_family(const PartitionedGraph& g) {
  if (g.parts.size() != 2) throw precondition_error("BadFamily", "RF(3,3) family needs two parts");
  return family_from_part_colors(g, {1, 1}, 3, 3, {2, 3});
}

FamilyValidation validate_family(const Graph& g, const ColoringFamily& family, int samples, uint64_t seed) {
  if (family.edges != g.edges()) throw precondition_error("BadFamily", "family does not match the graph's edges");
  if (family.palette.empty() && family.free_edges > 0) throw precondition_error("BadFamily", "empty palette");
  if (samples < 0) throw precondition_error("InvalidArgument", "samples must be >= 0");
  const std::size_t m = family.edges.size();
  std::vector<int> mono(samples, 0);
  std::vector<char> failed(samples, 0);

#pragma omp parallel for schedule(dynamic, 1)
  for (int s = 0; s < samples; ++s) {
    std::mt19937_64 rng(seed ^ (0x9E3779B97F4A7C15ULL * (static_cast<uint64_t>(s) + 1)));
    std::uniform_int_distribution<std::size_t> pick(0, family.palette.empty() ? 0 : family.palette.size() - 1);
    EdgeColoring col{family.r, family.fixed};
    for (std::size_t e = 0; e < m; ++e)
      if (col.color[e] == 0) col.color[e] = family.palette[pick(rng)];
    for (int c = 1; c <= family.r; ++c) {
      Graph gc = color_graph(g, col, c);
      mono[s] = std::max(mono[s], static_cast<int>(max_clique(gc).size()));
    }
    failed[s] = mono[s] >= family.forbidden;
  }

  FamilyValidation out;
  out.samples = samples;
  for (int s = 0; s < samples; ++s) {
    out.max_mono_clique = std::max(out.max_mono_clique, mono[s]);
    if (!failed[s]) continue;
    if (out.failures++ > 0) continue;
    // Regenerate the first failing sample to report it.
    std::mt19937_64 rng(seed ^ (0x9E3779B97F4A7C15ULL * (static_cast<uint64_t>(s) + 1)));
    std::uniform_int_distribution<std::size_t> pick(0, family.palette.size() - 1);
    EdgeColoring col{family.r, family.fixed};
    for (std::size_t e = 0; e < m; ++e)
      if (col.color[e] == 0) col.color[e] = family.palette[pick(rng)];
    out.witness_coloring = col.color;
    for (int c = 1; c <= family.r && out.witness_clique.empty(); ++c) {
      auto res = is_clique_free(color_graph(g, col, c), family.forbidden);
      if (!res.clique_free) out.witness_clique = res.witness;
    }
  }
  return out;
}

}  // namespace rtlab
