#include "hamsym/graph_io.hpp"

#include <cstdint>

#include "hamsym/error.hpp"

namespace hamsym {

namespace {

constexpr int kBias = 63;

void put_size(std::string& out, int n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
  } else {
    out += "~~";
    for (int shift = 30; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((static_cast<std::int64_t>(n) >> shift) & 63) + kBias));
  }
}

int sextet(unsigned char c) {
  if (c < kBias || c > 126) throw Error(ErrorCode::MalformedHeader, "byte outside graph6 range");
  return c - kBias;
}

}  // namespace

std::string graph6_encode(const Graph& g) {
  std::string out;
  put_size(out, g.order());
  int acc = 0;
  int bits = 0;
  for (int j = 1; j < g.order(); ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        bits = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + kBias));
  return out;
}

Graph graph6_decode(std::string_view bytes) {
  constexpr std::string_view kHeader = ">>graph6<<";
  if (bytes.substr(0, kHeader.size()) == kHeader) bytes.remove_prefix(kHeader.size());
  if (!bytes.empty() && bytes.back() == '\n') bytes.remove_suffix(1);
  if (!bytes.empty() && bytes.back() == '\r') bytes.remove_suffix(1);
  if (bytes.empty()) throw Error(ErrorCode::MalformedHeader, "empty input");

  std::size_t pos = 0;
  std::int64_t n = 0;
  auto take = [&](int count) {
    std::int64_t v = 0;
    for (int i = 0; i < count; ++i) {
      if (pos >= bytes.size()) throw Error(ErrorCode::MalformedHeader, "truncated size field");
      v = (v << 6) | sextet(static_cast<unsigned char>(bytes[pos++]));
    }
    return v;
  };
  if (bytes[0] == '~') {
    ++pos;
    if (bytes.size() > 1 && bytes[1] == '~') {
      ++pos;
      n = take(6);
    } else {
      n = take(3);
    }
  } else {
    n = take(1);
  }
  if (n > kMaxVertices)
    throw Error(ErrorCode::CapExceeded, "graph6 input has " + std::to_string(n) + " vertices");

  int nv = static_cast<int>(n);
  std::int64_t total_bits = static_cast<std::int64_t>(nv) * (nv - 1) / 2;
  std::size_t body = static_cast<std::size_t>((total_bits + 5) / 6);
  if (bytes.size() - pos < body) throw Error(ErrorCode::MalformedHeader, "adjacency data too short");

  std::vector<Edge> edges;
  std::int64_t bit = 0;
  for (int j = 1; j < nv; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      int byte = sextet(static_cast<unsigned char>(bytes[pos + bit / 6]));
      if ((byte >> (5 - bit % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  if (body > 0) {
    // Padding bits of the final byte must be zero.
    int last = sextet(static_cast<unsigned char>(bytes[pos + body - 1]));
    int used = static_cast<int>(total_bits - 6 * (static_cast<std::int64_t>(body) - 1));
    if ((last & ((1 << (6 - used)) - 1)) != 0)
      throw Error(ErrorCode::MalformedHeader, "nonzero padding bits");
  }
  if (pos + body != bytes.size()) throw Error(ErrorCode::TrailingGarbage, "bytes after adjacency data");
  return Graph::from_edge_list(nv, edges);
}

nlohmann::json graph_to_json(const Graph& g) {
  nlohmann::json j;
  j["n"] = g.order();
  auto edges = nlohmann::json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  j["edges"] = std::move(edges);
  if (!g.labels().empty()) j["labels"] = g.labels();
  return j;
}

Graph graph_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
    throw Error(ErrorCode::ParseError, "expected object with \"n\" and \"edges\"");
  int n = j.at("n").get<int>();
  std::vector<Edge> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) throw Error(ErrorCode::ParseError, "edge must be [u, v]");
    int u = e[0].get<int>();
    int v = e[1].get<int>();
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw Error(ErrorCode::VertexOutOfRange, "edge endpoint out of range");
    if (u == v) throw Error(ErrorCode::SelfLoop, "self-loop at " + std::to_string(u));
    edges.emplace_back(u, v);
  }
  Graph g = Graph::from_edge_list(n, edges);
  if (j.contains("labels")) g = g.with_labels(j.at("labels").get<std::vector<std::string>>());
  return g;
}

}  // namespace hamsym
