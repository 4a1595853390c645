#include "sbundle/io.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <sstream>

#include "json.hpp"

#include "sbundle/face_numbers.hpp"

namespace sbundle {

Complex parse_facet_list(std::string_view text) {
  std::vector<Face> facets;
  std::size_t expected = 0;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const std::size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    const std::size_t first = line.find_first_not_of(" \t");
    if (first == std::string_view::npos || line[first] == '#') continue;

    Face facet;
    std::size_t pos = first;
    while (pos < line.size()) {
      const std::size_t end = std::min(line.find_first_of(" \t", pos), line.size());
      const std::string_view token = line.substr(pos, end - pos);
      std::int64_t value = 0;
      const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
      if (ec != std::errc{} || ptr != token.data() + token.size() || value > std::numeric_limits<Vertex>::max()) {
        throw LineError(ErrorCode::ParseError, line_no, "invalid vertex label '" + std::string(token) + "'");
      }
      if (value <= 0) throw LineError(ErrorCode::NonPositiveLabel, line_no, "label " + std::to_string(value));
      facet.push_back(static_cast<Vertex>(value));
      pos = line.find_first_not_of(" \t", end);
      if (pos == std::string_view::npos) break;
    }
    if (expected == 0) expected = facet.size();
    if (facet.size() != expected) {
      throw LineError(ErrorCode::MixedCardinality, line_no,
                      std::to_string(facet.size()) + " vertices, expected " + std::to_string(expected));
    }
    std::sort(facet.begin(), facet.end());
    if (std::adjacent_find(facet.begin(), facet.end()) != facet.end()) {
      throw LineError(ErrorCode::RepeatedVertex, line_no, "facet repeats a vertex");
    }
    facets.push_back(std::move(facet));
  }
  if (facets.empty()) throw Error(ErrorCode::EmptyInput, "document has no facets");
  return Complex::from_facets(std::move(facets));
}

std::string write_facet_list(const Complex& c, const std::vector<std::string>& header) {
  std::string out;
  for (const auto& h : header) out += "# " + h + "\n";
  for (const auto& f : c.facets()) {
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(f[i]);
    }
    out += '\n';
  }
  return out;
}

namespace {

std::string join(std::span<const Vertex> vs) {
  std::string out;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(vs[i]);
  }
  return out;
}

std::vector<std::string> trace_lines(const SubdivisionTrace& trace) {
  std::vector<std::string> lines{"base: " + join(trace.base)};
  for (const auto& s : trace.steps) lines.push_back("step: " + join(s.facet) + " | new: " + std::to_string(s.new_vertex));
  return lines;
}

}  // namespace

std::string write_trace(const SubdivisionTrace& trace) {
  std::string out;
  for (const auto& line : trace_lines(trace)) out += line + "\n";
  return out;
}

std::string write_schedule(const FillSchedule& schedule) {
  std::string out;
  for (const auto& m : schedule.moves) out += "A: " + join(m.move.a) + " | B: " + join(m.move.b) + "\n";
  return out;
}

AnalysisReport analyze(const Complex& c) {
  AnalysisReport r;
  r.n = c.n();
  const FVector f = f_vector(c);
  const HVector h = h_from_f(f, c.n());
  const GVector g = g_vector(h);
  r.f = f.values;
  r.h = h.values;
  r.g = g.values;
  r.g2 = g.g2;
  r.g2_bound = binomial(c.n() + 1, 2);
  r.euler_characteristic = euler_characteristic(f);
  r.klee_residual = klee_residual(f, c.n());
  r.betti = betti_numbers(c);
  r.pseudomanifold = is_pseudomanifold(c);
  if (r.pseudomanifold.ok) r.orientable = coherent_orientation(c).has_value();
  r.evidence = manifold_evidence(c);

  const std::int64_t chi_sphere = c.n() % 2 == 1 ? 2 : 0;
  if (r.pseudomanifold.ok && r.g2 == 0 && r.euler_characteristic == chi_sphere) {
    r.stacked_trace = recognize_stacked(c);
  }

  if (!all_zero(r.klee_residual)) r.warnings.push_back("Klee residual is nonzero");
  std::int64_t alt = 0;
  for (std::size_t d = 0; d < r.betti.size(); ++d) alt += (d % 2 == 0 ? 1 : -1) * r.betti[d];
  if (alt != r.euler_characteristic) r.warnings.push_back("Betti numbers disagree with the Euler characteristic");
  return r;
}

std::string report_to_json(const AnalysisReport& r) {
  using nlohmann::json;
  json checks = json::array();
  for (const auto& ch : r.evidence.checks) {
    checks.push_back({{"name", ch.name}, {"passed", ch.passed}, {"detail", ch.detail}});
  }
  json j = {
      {"schema", kReportSchema},
      {"n", r.n},
      {"dimension", r.n - 1},
      {"f_vector", std::vector<std::int64_t>(r.f.begin() + 1, r.f.end())},
      {"h_vector", r.h},
      {"g_vector", r.g},
      {"g2", r.g2},
      {"g2_bound", r.g2_bound},
      {"euler_characteristic", r.euler_characteristic},
      {"klee_residual", r.klee_residual},
      {"klee_holds", all_zero(r.klee_residual)},
      {"betti", r.betti},
      {"pseudomanifold", {{"ok", r.pseudomanifold.ok}, {"detail", r.pseudomanifold.detail}}},
      {"orientable", r.orientable ? json(*r.orientable) : json(nullptr)},
      {"manifold_evidence", {{"conclusion", r.evidence.passed ? "evidence of a closed manifold" : "not a closed manifold"},
                             {"passed", r.evidence.passed},
                             {"checks", checks}}},
      {"stacked_sphere", r.stacked_trace.has_value()},
      {"warnings", r.warnings},
  };
  if (r.stacked_trace) j["stacked_trace"] = trace_lines(*r.stacked_trace);
  return j.dump(2) + "\n";
}

std::string report_to_text(const AnalysisReport& r) {
  std::ostringstream out;
  auto list = [](const std::vector<std::int64_t>& v, std::size_t from = 0) {
    std::string s;
    for (std::size_t i = from; i < v.size(); ++i) s += (i > from ? " " : "") + std::to_string(v[i]);
    return s;
  };
  out << "dimension: " << r.n - 1 << "\n";
  out << "f: " << list(r.f, 1) << "\n";
  out << "h: " << list(r.h) << "\n";
  out << "g: " << list(r.g) << "\n";
  out << "g2: " << r.g2 << " (bound " << r.g2_bound << ")\n";
  out << "euler characteristic: " << r.euler_characteristic << "\n";
  out << "klee residual: " << list(r.klee_residual) << "\n";
  out << "betti: " << list(r.betti) << "\n";
  out << "pseudomanifold: " << (r.pseudomanifold.ok ? "yes" : "no: " + r.pseudomanifold.detail) << "\n";
  out << "orientable: " << (r.orientable ? (*r.orientable ? "yes" : "no") : "n/a") << "\n";
  for (const auto& ch : r.evidence.checks) {
    out << "check " << ch.name << ": " << (ch.passed ? "pass" : "FAIL " + ch.detail) << "\n";
  }
  out << "manifold evidence: " << (r.evidence.passed ? "pass (evidence, not proof)" : "fail") << "\n";
  out << "stacked sphere: " << (r.stacked_trace ? "yes" : "no") << "\n";
  if (r.stacked_trace) {
    for (const auto& line : trace_lines(*r.stacked_trace)) out << "  " << line << "\n";
  }
  for (const auto& w : r.warnings) out << "warning: " << w << "\n";
  return out.str();
}

}  // namespace sbundle
