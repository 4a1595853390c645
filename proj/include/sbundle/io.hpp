#ifndef SBUNDLE_IO_HPP
#define SBUNDLE_IO_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sbundle/bistellar.hpp"
#include "sbundle/complex.hpp"
#include "sbundle/stacked.hpp"
#include "sbundle/verify.hpp"

namespace sbundle {

// Facet-list text: one facet per line as space-separated positive integers.
// Blank lines and lines starting with '#' are ignored. Errors carry the
// 1-based line number.
Complex parse_facet_list(std::string_view text);

// Canonical form: facets in lexicographic order, sorted vertices, LF endings.
// Header lines, if any, are emitted first with a "# " prefix.
std::string write_facet_list(const Complex& c, const std::vector<std::string>& header = {});

// "base: v1 ... v(n+1)" then "step: f1 ... fn | new: v" per subdivision.
std::string write_trace(const SubdivisionTrace& trace);

// "A: a1 a2 | B: b1 ... b(n-1)" per move.
std::string write_schedule(const FillSchedule& schedule);

inline constexpr std::string_view kReportSchema = "sbundle.analysis/1";

struct AnalysisReport {
  int n = 0;
  std::vector<std::int64_t> f;  // f_{-1} .. f_{n-1}
  std::vector<std::int64_t> h;
  std::vector<std::int64_t> g;
  std::int64_t g2 = 0;
  std::int64_t g2_bound = 0;  // C(n+1, 2)
  std::int64_t euler_characteristic = 0;
  std::vector<std::int64_t> klee_residual;
  std::vector<std::int64_t> betti;
  PseudomanifoldReport pseudomanifold;
  std::optional<bool> orientable;  // only for pseudomanifolds
  ManifoldEvidence evidence;
  std::optional<SubdivisionTrace> stacked_trace;
  std::vector<std::string> warnings;
};

AnalysisReport analyze(const Complex& c);

std::string report_to_json(const AnalysisReport& r);
std::string report_to_text(const AnalysisReport& r);

}  // namespace sbundle

#endif  // SBUNDLE_IO_HPP
