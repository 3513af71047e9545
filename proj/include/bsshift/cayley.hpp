#ifndef BSSHIFT_CAYLEY_HPP_
#define BSSHIFT_CAYLEY_HPP_

// Finite windows of the Cayley graph of BS(1,N) with generators {a, b}.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "group.hpp"

namespace bsshift {

  inline constexpr std::size_t kDefaultMaxVertices = 1'000'000;

  enum class Generator : std::uint8_t { a = 0, b = 1 };

  char to_char(Generator s);

  // (g a, g a^-1, g b, g b^-1).
  std::array<Element, 4> neighbors(Element const& g, GroupParams const& P);

  struct WindowKind {
    enum class Tag { rectangle, ball, sheet, custom };

    Tag                       tag = Tag::custom;
    std::int64_t              size = 0;  // m for rectangle, r for ball
    std::vector<std::int64_t> branches;  // sheet only
    std::int64_t              depth_down = 0;
    std::int64_t              depth_up   = 0;
    std::int64_t              width      = 0;
    std::string               label;  // custom only

    // "rectangle(2)", "ball(3)", "sheet([0,1],1,2,4)", or the custom label.
    std::string describe() const;

    static WindowKind rectangle(std::int64_t m);
    static WindowKind ball(std::int64_t r);
    static WindowKind custom(std::string label);
  };

  class Window {
   public:
    // Vertices are normalized and de-duplicated, keeping first occurrences.
    Window(GroupParams const& P, std::vector<Element> vertices, WindowKind kind);

    GroupParams const& params() const noexcept {
      return _params;
    }

    WindowKind const& kind() const noexcept {
      return _kind;
    }

    std::size_t size() const noexcept {
      return _vertices.size();
    }

    std::vector<Element> const& vertices() const noexcept {
      return _vertices;
    }

    Element const& vertex(std::size_t ordinal) const {
      return _vertices.at(ordinal);
    }

    std::optional<std::size_t> index_of(Element const& g) const;

    bool contains(Element const& g) const {
      return _index.contains(g);
    }

    // { g v : v in this }, same vertex order, kind becomes custom.
    Window translated(Element const& g) const;

   private:
    GroupParams                                           _params;
    std::vector<Element>                                  _vertices;
    std::unordered_map<Element, std::size_t, ElementHash> _index;
    WindowKind                                            _kind;
  };

  struct Edge {
    std::uint32_t from;
    std::uint32_t to;
    Generator     label;

    bool operator==(Edge const&) const = default;
  };

  // (u, v, s) present iff vertex(v) = vertex(u) * s.
  using EdgeList = std::vector<Edge>;

  // R_m = { a^k b^i : 0 <= k < N^m, 0 <= i < m }, row-major (i outer, k inner).
  Window rectangle(GroupParams const& P, std::int64_t m,
                   std::size_t max_vertices = kDefaultMaxVertices);

  // Word-metric ball of radius r around the identity, in BFS order.
  Window ball(GroupParams const& P, std::int64_t r,
              std::size_t max_vertices = kDefaultMaxVertices);

  // Truncation of the sheet through the identity following branches[0..]
  // upward: rows b^-n A (1 <= n <= depth_down) and (prod_{s<=n} a^{i_s} b) A
  // (0 <= n <= depth_up), each cut to |k| <= width.  Rows are emitted
  // bottom-up.
  Window sheet_window(GroupParams const& P, std::span<std::int64_t const> branches,
                      std::int64_t depth_down, std::int64_t depth_up, std::int64_t width,
                      std::size_t max_vertices = kDefaultMaxVertices);

  EdgeList induced_edges(Window const& w);

  // Number of Cayley edges with exactly one endpoint in w.
  std::size_t boundary_edge_count(Window const& w);

  // 2 (N^{m+1} - 1) / (N - 1): the boundary size of R_m.
  Integer gamma_closed_form(GroupParams const& P, std::int64_t m);

  // |R_m| = m N^m.
  Integer rectangle_size(GroupParams const& P, std::int64_t m);

  // Adjacency of a window, both directions, for search routines.
  struct Arc {
    std::uint32_t other;
    Generator     label;
    bool          outgoing;  // true when vertex(other) = vertex(self) * label
  };

  std::vector<std::vector<Arc>> adjacency(Window const& w, EdgeList const& edges);

}  // namespace bsshift

#endif  // BSSHIFT_CAYLEY_HPP_
