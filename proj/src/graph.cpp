#include "rtlab/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace rtlab {

VertexSet::VertexSet(int universe, std::initializer_list<int> members) : VertexSet(universe) {
  for (int v : members) set(v);
}

VertexSet::VertexSet(int universe, std::span<const int> members) : VertexSet(universe) {
  for (int v : members) set(v);
}

VertexSet VertexSet::full(int universe) {
  VertexSet s(universe);
  for (auto& w : s.w_) w = ~uint64_t{0};
  if (universe % 64 != 0 && !s.w_.empty()) s.w_.back() = (uint64_t{1} << (universe % 64)) - 1;
  return s;
}

int VertexSet::count() const noexcept {
  int c = 0;
  for (uint64_t w : w_) c += std::popcount(w);
  return c;
}

bool VertexSet::empty() const noexcept {
  return std::all_of(w_.begin(), w_.end(), [](uint64_t w) { return w == 0; });
}

int VertexSet::first() const noexcept {
  for (std::size_t i = 0; i < w_.size(); ++i)
    if (w_[i]) return static_cast<int>(i * 64 + std::countr_zero(w_[i]));
  return -1;
}

int VertexSet::next(int v) const noexcept {
  int start = v + 1;
  if (start >= n_) return -1;
  std::size_t i = static_cast<std::size_t>(start >> 6);
  uint64_t word = w_[i] & (~uint64_t{0} << (start & 63));
  while (true) {
    if (word) return static_cast<int>(i * 64 + std::countr_zero(word));
    if (++i >= w_.size()) return -1;
    word = w_[i];
  }
}

std::vector<int> VertexSet::to_vector() const {
  std::vector<int> out;
  out.reserve(count());
  for_each([&](int v) { out.push_back(v); });
  return out;
}

void VertexSet::intersect(std::span<const uint64_t> row) noexcept {
  for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= row[i];
}

void VertexSet::keep_above(int v) noexcept {
  int cut = v + 1;
  std::size_t full_words = static_cast<std::size_t>(cut >> 6);
  for (std::size_t i = 0; i < full_words && i < w_.size(); ++i) w_[i] = 0;
  if (full_words < w_.size() && (cut & 63)) w_[full_words] &= ~uint64_t{0} << (cut & 63);
}

int VertexSet::count_and(std::span<const uint64_t> row) const noexcept {
  int c = 0;
  for (std::size_t i = 0; i < w_.size(); ++i) c += std::popcount(w_[i] & row[i]);
  return c;
}

VertexSet VertexSet::complement() const {
  VertexSet s = full(n_);
  for (std::size_t i = 0; i < w_.size(); ++i) s.w_[i] &= ~w_[i];
  return s;
}

VertexSet& VertexSet::operator&=(const VertexSet& o) noexcept {
  for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
  return *this;
}

VertexSet& VertexSet::operator|=(const VertexSet& o) noexcept {
  for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& o) noexcept {
  for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
  return *this;
}

// ---------------------------------------------------------------------------

Graph::Graph(int n) : n_(n), words_((n + 63) / 64) {
  if (n < 0 || n > kMaxVertices)
    throw precondition_error("InvalidGraph", "vertex count " + std::to_string(n) + " outside [0, 4096]");
  bits_.assign(static_cast<std::size_t>(n) * words_, 0);
}

Graph Graph::from_rows(int n, std::vector<uint64_t> rows) {
  Graph g(n);
  if (rows.size() != g.bits_.size()) throw precondition_error("InvalidGraph", "row buffer has wrong size");
  g.bits_ = std::move(rows);
  for (int u = 0; u < n; ++u) {
    if (g.adjacent(u, u)) throw precondition_error("InvalidGraph", "self loop at " + std::to_string(u));
    for (int v = u + 1; v < n; ++v)
      if (g.adjacent(u, v) != g.adjacent(v, u)) throw precondition_error("InvalidGraph", "asymmetric rows");
  }
  return g;
}

void Graph::add_edge(int u, int v) {
  if (u == v || u < 0 || v < 0 || u >= n_ || v >= n_)
    throw precondition_error("InvalidEdge", std::to_string(u) + "-" + std::to_string(v));
  bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] |= uint64_t{1} << (v & 63);
  bits_[static_cast<std::size_t>(v) * words_ + (u >> 6)] |= uint64_t{1} << (u & 63);
}

void Graph::remove_edge(int u, int v) {
  bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] &= ~(uint64_t{1} << (v & 63));
  bits_[static_cast<std::size_t>(v) * words_ + (u >> 6)] &= ~(uint64_t{1} << (u & 63));
}

VertexSet Graph::neighbors(int v) const {
  VertexSet s(n_);
  auto r = row(v);
  std::copy(r.begin(), r.end(), s.words().begin());
  return s;
}

int Graph::degree(int v) const noexcept {
  int d = 0;
  for (uint64_t w : row(v)) d += std::popcount(w);
  return d;
}

int64_t Graph::edge_count() const noexcept {
  int64_t twice = 0;
  for (uint64_t w : bits_) twice += std::popcount(w);
  return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u) {
    VertexSet nb = neighbors(u);
    nb.keep_above(u);
    nb.for_each([&](int v) { out.emplace_back(u, v); });
  }
  return out;
}

Graph Graph::complement() const {
  Graph c(n_);
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (!adjacent(u, v)) c.add_edge(u, v);
  return c;
}

Graph Graph::induced(const VertexSet& within) const {
  std::vector<int> verts = within.to_vector();
  Graph h(static_cast<int>(verts.size()));
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = i + 1; j < verts.size(); ++j)
      if (adjacent(verts[i], verts[j])) h.add_edge(static_cast<int>(i), static_cast<int>(j));
  return h;
}

int64_t Graph::edges_between(const VertexSet& a, const VertexSet& b) const {
  int64_t total = 0;
  a.for_each([&](int v) { total += b.count_and(row(v)); });
  return total;
}

int64_t Graph::edges_within(const VertexSet& a) const {
  int64_t twice = 0;
  a.for_each([&](int v) { twice += a.count_and(row(v)); });
  return twice / 2;
}

// ---------------------------------------------------------------------------

Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph empty_graph(int n) { return Graph(n); }

Graph cycle_graph(int n) {
  Graph g(n);
  if (n >= 3)
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

Graph path_graph(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

std::vector<int> turan_parts(int n, int r) {
  if (r < 1) throw precondition_error("InvalidArgument", "turan graph needs r >= 1");
  std::vector<int> part(n);
  // First n % r parts get the extra vertex; vertices are laid out part by part.
  int base = n / r, extra = n % r, v = 0;
  for (int p = 0; p < r; ++p)
    for (int i = 0; i < base + (p < extra ? 1 : 0); ++i) part[v++] = p;
  return part;
}

Graph turan_graph(int n, int r) {
  auto part = turan_parts(n, r);
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (part[u] != part[v]) g.add_edge(u, v);
  return g;
}

namespace {

bool parse_int(std::string_view s, int& out) {
  if (s.empty()) return false;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && p == s.data() + s.size();
}

}  // namespace

bool is_named_graph(std::string_view name) {
  if (name.size() < 2) return false;
  char kind = name[0];
  std::string_view rest = name.substr(1);
  int a = 0;
  if (kind == 'T') {
    auto sep = rest.find_first_of(",_");
    int b = 0;
    return sep != std::string_view::npos && parse_int(rest.substr(0, sep), a) &&
           parse_int(rest.substr(sep + 1), b);
  }
  return (kind == 'K' || kind == 'C' || kind == 'P' || kind == 'E') && parse_int(rest, a);
}

Graph named_graph(std::string_view name) {
  if (!is_named_graph(name))
    throw precondition_error("UnknownGraph", "not a built-in graph name: " + std::string(name));
  std::string_view rest = name.substr(1);
  int a = 0;
  switch (name[0]) {
    case 'K': parse_int(rest, a); return complete_graph(a);
    case 'C': parse_int(rest, a); return cycle_graph(a);
    case 'P': parse_int(rest, a); return path_graph(a);
    case 'E': parse_int(rest, a); return empty_graph(a);
    default: {
      auto sep = rest.find_first_of(",_");
      int b = 0;
      parse_int(rest.substr(0, sep), a);
      parse_int(rest.substr(sep + 1), b);
      return turan_graph(a, b);
    }
  }
}

}  // namespace rtlab
