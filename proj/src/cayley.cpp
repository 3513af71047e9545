#include "bsshift/cayley.hpp"

#include <deque>
#include <sstream>

#include "bsshift/errors.hpp"

namespace bsshift {

  namespace {
    void check_budget(Integer const& needed, std::size_t max_vertices, std::string const& what) {
      if (needed > Integer(max_vertices)) {
        throw ResourceError(what + " needs " + needed.str() + " vertices, budget is "
                            + std::to_string(max_vertices));
      }
    }
  }  // namespace

  char to_char(Generator s) {
    return s == Generator::a ? 'a' : 'b';
  }

  std::array<Element, 4> neighbors(Element const& g, GroupParams const& P) {
    return {multiply(g, a_pow(1), P),
            multiply(g, a_pow(-1), P),
            multiply(g, b_pow(1), P),
            multiply(g, b_pow(-1), P)};
  }

  std::string WindowKind::describe() const {
    std::ostringstream out;
    switch (tag) {
      case Tag::rectangle:
        out << "rectangle(" << size << ")";
        break;
      case Tag::ball:
        out << "ball(" << size << ")";
        break;
      case Tag::sheet: {
        out << "sheet([";
        for (std::size_t s = 0; s < branches.size(); ++s) {
          out << (s ? "," : "") << branches[s];
        }
        out << "]," << depth_down << "," << depth_up << "," << width << ")";
        break;
      }
      case Tag::custom:
        out << (label.empty() ? "custom" : label);
        break;
    }
    return out.str();
  }

  WindowKind WindowKind::rectangle(std::int64_t m) {
    WindowKind kind;
    kind.tag  = Tag::rectangle;
    kind.size = m;
    return kind;
  }

  WindowKind WindowKind::ball(std::int64_t r) {
    WindowKind kind;
    kind.tag  = Tag::ball;
    kind.size = r;
    return kind;
  }

  WindowKind WindowKind::custom(std::string label) {
    WindowKind kind;
    kind.tag   = Tag::custom;
    kind.label = std::move(label);
    return kind;
  }

  Window::Window(GroupParams const& P, std::vector<Element> vertices, WindowKind kind)
      : _params(P), _kind(std::move(kind)) {
    _vertices.reserve(vertices.size());
    _index.reserve(vertices.size());
    for (auto& v : vertices) {
      Element g = normalize(v.j, std::move(v.k), v.i, P);
      if (_index.emplace(g, _vertices.size()).second) {
        _vertices.push_back(std::move(g));
      }
    }
  }

  std::optional<std::size_t> Window::index_of(Element const& g) const {
    auto it = _index.find(g);
    if (it == _index.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  Window Window::translated(Element const& g) const {
    std::vector<Element> moved;
    moved.reserve(_vertices.size());
    for (auto const& v : _vertices) {
      moved.push_back(multiply(g, v, _params));
    }
    return Window(_params, std::move(moved),
                  WindowKind::custom(emit_word(g) + "*" + _kind.describe()));
  }

  Integer rectangle_size(GroupParams const& P, std::int64_t m) {
    return Integer(m) * psi_pow(1, m, P);
  }

  Window rectangle(GroupParams const& P, std::int64_t m, std::size_t max_vertices) {
    if (m < 1) {
      throw ParameterError("rectangle requires m >= 1");
    }
    check_budget(rectangle_size(P, m), max_vertices, "rectangle(" + std::to_string(m) + ")");
    auto const width = static_cast<std::int64_t>(psi_pow(1, m, P));
    std::vector<Element> vertices;
    vertices.reserve(static_cast<std::size_t>(width * m));
    for (std::int64_t i = 0; i < m; ++i) {
      for (std::int64_t k = 0; k < width; ++k) {
        vertices.push_back(Element{0, k, i});
      }
    }
    return Window(P, std::move(vertices), WindowKind::rectangle(m));
  }

  Window ball(GroupParams const& P, std::int64_t r, std::size_t max_vertices) {
    if (r < 0) {
      throw ParameterError("ball requires r >= 0");
    }
    std::vector<Element>                                   order{identity()};
    std::unordered_map<Element, std::int64_t, ElementHash> dist{{identity(), 0}};
    for (std::size_t head = 0; head < order.size(); ++head) {
      std::int64_t const d = dist.at(order[head]);
      if (d == r) {
        continue;
      }
      for (auto& h : neighbors(order[head], P)) {
        if (dist.emplace(h, d + 1).second) {
          if (order.size() >= max_vertices) {
            throw ResourceError("ball(" + std::to_string(r) + ") exceeds the vertex budget "
                                + std::to_string(max_vertices));
          }
          order.push_back(std::move(h));
        }
      }
    }
    return Window(P, std::move(order), WindowKind::ball(r));
  }

  Window sheet_window(GroupParams const& P, std::span<std::int64_t const> branches,
                      std::int64_t depth_down, std::int64_t depth_up, std::int64_t width,
                      std::size_t max_vertices) {
    if (depth_down < 0 || depth_up < 0 || width < 0) {
      throw ParameterError("sheet_window requires non-negative depths and width");
    }
    if (static_cast<std::int64_t>(branches.size()) < depth_up) {
      throw ParameterError("sheet_window needs at least depth_up branch symbols");
    }
    for (auto s : branches) {
      if (s < 0 || s >= P.N()) {
        throw ParameterError("sheet branch symbols must lie in 0..N-1");
      }
    }
    check_budget(Integer(depth_down + depth_up + 1) * Integer(2 * width + 1), max_vertices,
                 "sheet window");

    std::vector<Element> row_bases;
    for (std::int64_t n = depth_down; n >= 1; --n) {
      row_bases.push_back(b_pow(-n));
    }
    Element g = identity();
    row_bases.push_back(g);
    for (std::int64_t n = 1; n <= depth_up; ++n) {
      g = multiply(g, a_pow(branches[n - 1]), P);
      g = multiply(g, b_pow(1), P);
      row_bases.push_back(g);
    }

    std::vector<Element> vertices;
    for (auto const& base : row_bases) {
      for (std::int64_t k = -width; k <= width; ++k) {
        vertices.push_back(multiply(base, a_pow(k), P));
      }
    }
    WindowKind kind;
    kind.tag        = WindowKind::Tag::sheet;
    kind.branches.assign(branches.begin(), branches.end());
    kind.depth_down = depth_down;
    kind.depth_up   = depth_up;
    kind.width      = width;
    return Window(P, std::move(vertices), std::move(kind));
  }

  EdgeList induced_edges(Window const& w) {
    EdgeList edges;
    auto const& P = w.params();
    for (std::size_t u = 0; u < w.size(); ++u) {
      for (auto s : {Generator::a, Generator::b}) {
        Element const step = s == Generator::a ? a_pow(1) : b_pow(1);
        if (auto v = w.index_of(multiply(w.vertex(u), step, P))) {
          edges.push_back(Edge{static_cast<std::uint32_t>(u), static_cast<std::uint32_t>(*v), s});
        }
      }
    }
    return edges;
  }

  std::size_t boundary_edge_count(Window const& w) {
    std::size_t count = 0;
    for (auto const& v : w.vertices()) {
      for (auto const& h : neighbors(v, w.params())) {
        if (!w.contains(h)) {
          ++count;
        }
      }
    }
    return count;
  }

  Integer gamma_closed_form(GroupParams const& P, std::int64_t m) {
    if (m < 1) {
      throw ParameterError("gamma requires m >= 1");
    }
    return 2 * (psi_pow(1, m + 1, P) - 1) / (P.N() - 1);
  }

  std::vector<std::vector<Arc>> adjacency(Window const& w, EdgeList const& edges) {
    std::vector<std::vector<Arc>> adj(w.size());
    for (auto const& e : edges) {
      adj[e.from].push_back(Arc{e.to, e.label, true});
      adj[e.to].push_back(Arc{e.from, e.label, false});
    }
    return adj;
  }

}  // namespace bsshift
