#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "hrep/algebroid.hpp"
#include "hrep/groupoid.hpp"
#include "hrep/rep_groupoid.hpp"
#include "hrep/smooth_groupoid.hpp"

namespace hrep::suites {

using Json = nlohmann::ordered_json;

/// Malformed input. The message carries `source:line:column` for syntax
/// errors and a JSON pointer for schema errors.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json parse_json_text(std::string_view text, const std::string& source);
Json load_json_file(const std::string& path);

/// {"base": "point"|"coord", "rank": r, "chart_dim": n,
///  "anchor": [[poly]] (r rows of n entries),
///  "brackets": {"i,j": {"k": poly}}} with i < j; chart variables x0, x1, ..
AlgebroidModel algebra_from_json(const Json& j);
Json algebra_to_json(const AlgebroidModel& a);

/// {"objects": n, "arrows": [{"src": s, "tgt": t}], "comp": [[..]],
///  "units": [..], "inverses": [..]}; comp[g][h] = -1 when not composable.
FiniteGroupoid groupoid_from_json(const Json& j);
Json groupoid_to_json(const FiniteGroupoid& g);

/// {"degrees": [..], "unital": bool,
///  "F": {"k": [{"simplex": [..], "matrix": [["p/q", ..], ..]}]}}.
/// A simplex is its arrow list ([object] for k = 0); missing entries are zero.
RepG rep_from_json(const Json& j, const Nerve& n);
Json rep_to_json(const RepG& r, const Nerve& n);

/// {"kind": "pair_chart", "chart_dim": n} or
/// {"kind": "matrix_group", "size": n, "free": [[row, col], ..]}.
SmoothGroupoid smooth_model_from_json(const Json& j);
Json smooth_model_to_json(const SmoothGroupoid& g);

/// {"lambda": [[poly]]}: the n x n splitting on a pair chart, in x0..x{n-1}
/// (target) and x{n}..x{2n-1} (source). Omitted or null on a matrix group.
EhresmannConn connection_from_json(const Json& j, const SmoothGroupoid& g);
Json connection_to_json(const EhresmannConn& c, const SmoothGroupoid& g);

/// Example inputs by kind: sl2, abelian-<n>, heisenberg, pair-finite-<n>,
/// pair-chart-<n>, matrix-heisenberg, lambda-quadratic, gauge-demo-<n>.
/// Returns (file name, content) pairs. Throws InputError for an unknown kind.
std::vector<std::pair<std::string, Json>> generate_example(const std::string& kind, std::uint64_t seed);

/// Serialized form used in every report: fixed indentation, trailing newline.
std::string dump(const Json& j);

}  // namespace hrep::suites
