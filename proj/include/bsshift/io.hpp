#ifndef BSSHIFT_IO_HPP_
#define BSSHIFT_IO_HPP_

// JSON, CSV and DOT serialisation.  a-exponents and counts are written as
// decimal strings since they are unbounded.

#include <memory>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "coloring.hpp"
#include "frozen.hpp"
#include "periodicity.hpp"

namespace bsshift {

  using json = nlohmann::json;

  json to_json(Window const& w);
  json to_json(Pattern const& p);
  json to_json(NNSFT const& X);
  json to_json(PeriodicWitness const& w, NNSFT const& X);
  json to_json(FrozenVerdict const& v);

  // Rebuilds rectangle and ball kinds when the vertex list matches them;
  // anything else becomes a custom window.  Throws ParseError.
  std::shared_ptr<Window const> window_from_json(json const& j);
  Pattern                       pattern_from_json(json const& j);
  NNSFT                         nnsft_from_json(json const& j);

  // json::parse with failures reported as ParseError.
  json parse_json(std::string const& text);

  // m,cells,count,estimate; estimate with 17 significant digits.  With
  // `bounds`, a fifth column reports the bound checks ("ok" or the failures).
  void write_entropy_csv(std::ostream& out, std::vector<EntropyRow> const& rows,
                         bool bounds = false);

  // Vertices labelled by canonical words, edges by generator.
  void write_dot(std::ostream& out, Window const& w, EdgeList const& edges);

  std::string format_double(double x);

}  // namespace bsshift

#endif  // BSSHIFT_IO_HPP_
