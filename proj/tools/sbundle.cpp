// Command-line front end over the sbundle C API.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sbundle/sbundle.h"

namespace {

struct DomainFailure {
  sb_status status;
  std::string message;
};

struct IoFailure {
  std::string message;
};

void check(sb_status s) {
  if (s != SB_OK) throw DomainFailure{s, sb_last_error()};
}

using ComplexPtr = std::unique_ptr<sb_complex, decltype(&sb_complex_free)>;

ComplexPtr own(sb_complex* c) { return ComplexPtr(c, &sb_complex_free); }

std::string take(char* s) {
  std::string out = s ? s : "";
  sb_string_free(s);
  return out;
}

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoFailure{"cannot open " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw IoFailure{"cannot write " + path};
}

ComplexPtr load(const std::string& path) {
  const std::string text = read_input(path);
  sb_complex* c = nullptr;
  check(sb_complex_parse(text.data(), text.size(), &c));
  return own(c);
}

std::string facet_list(const sb_complex* c) {
  char* s = nullptr;
  check(sb_complex_write(c, &s));
  return take(s);
}

const std::map<std::string, int> kBundles{{"orientable", 1}, {"nonorientable", 0}};
const std::map<std::string, int> kVariants{{"standard", 0}, {"swapped", 1}};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Triangulations of sphere bundles over the circle"};
  app.require_subcommand(1);

  std::string out_path;
  int n = 0;
  int steps = 0;
  int f0 = 0;
  int k = 0;
  int bundle = 0;
  int variant = 0;
  long long target = 0;
  std::string in_path;
  std::string schedule_path;
  bool json = false;
  std::string iso_a, iso_b;

  auto* build = app.add_subcommand("build", "Construct a complex");
  build->require_subcommand(1);
  auto* stacked = build->add_subcommand("stacked", "Stacked sphere after I subdivisions");
  stacked->add_option("--n", n, "Facet size")->required();
  stacked->add_option("--steps", steps, "Number of subdivisions")->required();
  stacked->add_option("-o,--output", out_path);
  auto* miss = build->add_subcommand("miss", "Minimal bundle from the two-stack sphere");
  miss->add_option("--n", n)->required();
  miss->add_option("-o,--output", out_path);
  auto* kuhnel = build->add_subcommand("kuhnel", "Kuhnel's cyclic bundle");
  kuhnel->add_option("--n", n)->required();
  kuhnel->add_option("-o,--output", out_path);
  auto* iss = build->add_subcommand("iss", "Bundle with f1 = n f0");
  iss->add_option("--n", n)->required();
  iss->add_option("--vertices", f0)->required();
  iss->add_option("--bundle", bundle)->required()->transform(CLI::CheckedTransformer(kBundles));
  iss->add_option("-o,--output", out_path);

  auto* fill = app.add_subcommand("fill-edges", "Apply the edge-filling schedule up to a target edge count");
  fill->add_option("--in", in_path)->required();
  fill->add_option("--n", n)->required();
  fill->add_option("--vertices", f0)->required();
  fill->add_option("--variant", variant)->required()->transform(CLI::CheckedTransformer(kVariants));
  fill->add_option("--target-f1", target)->required();
  fill->add_option("--schedule", schedule_path, "Also write the move list here");
  fill->add_option("-o,--output", out_path);

  auto* analyze = app.add_subcommand("analyze", "Report invariants of a complex");
  analyze->add_option("--in", in_path, "Facet list (default: stdin)");
  analyze->add_flag("--json", json);
  analyze->add_option("-o,--output", out_path);

  auto* iso = app.add_subcommand("iso", "Decide combinatorial isomorphism");
  iso->add_option("a", iso_a)->required();
  iso->add_option("b", iso_b)->required();

  auto* cover = app.add_subcommand("double-cover", "Orientation double cover");
  cover->add_option("--in", in_path)->required();
  cover->add_option("-o,--output", out_path);

  auto* region = app.add_subcommand("region", "Feasible edge counts for bundles");
  region->add_option("--k", k)->required();
  region->add_option("--vertices", f0)->required();
  region->add_option("--bundle", bundle)->required()->transform(CLI::CheckedTransformer(kBundles));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    sb_complex* raw = nullptr;
    if (*stacked) {
      check(sb_build_stacked(n, steps, &raw));
      write_output(out_path, facet_list(own(raw).get()));
    } else if (*miss) {
      check(sb_build_miss(n, &raw));
      write_output(out_path, facet_list(own(raw).get()));
    } else if (*kuhnel) {
      check(sb_build_kuhnel(n, &raw));
      write_output(out_path, facet_list(own(raw).get()));
    } else if (*iss) {
      int swapped = 0;
      char* warnings = nullptr;
      check(sb_build_iss(n, f0, bundle, &raw, &swapped, &warnings));
      auto c = own(raw);
      std::cerr << take(warnings);
      if (swapped) std::cerr << "note: swapped pairing\n";
      write_output(out_path, facet_list(c.get()));
    } else if (*fill) {
      auto c = load(in_path);
      sb_schedule* sched = nullptr;
      check(sb_fill_schedule(c.get(), n, f0, variant, &sched));
      std::unique_ptr<sb_schedule, decltype(&sb_schedule_free)> s(sched, &sb_schedule_free);
      if (!schedule_path.empty()) {
        char* text = nullptr;
        check(sb_schedule_write(s.get(), &text));
        write_output(schedule_path, take(text));
      }
      check(sb_fill_to(c.get(), s.get(), target, &raw));
      write_output(out_path, facet_list(own(raw).get()));
    } else if (*analyze) {
      auto c = load(in_path);
      char* text = nullptr;
      check(sb_analyze(c.get(), json ? 1 : 0, &text));
      write_output(out_path, take(text));
    } else if (*iso) {
      auto a = load(iso_a);
      auto b = load(iso_b);
      int found = 0;
      std::vector<int32_t> pairs(2 * sb_complex_vertex_count(a.get()));
      check(sb_isomorphism(a.get(), b.get(), &found, pairs.data(), pairs.size()));
      if (!found) {
        std::cout << "non-isomorphic\n";
        return 1;
      }
      for (std::size_t i = 0; i < pairs.size(); i += 2) std::cout << pairs[i] << " -> " << pairs[i + 1] << "\n";
    } else if (*cover) {
      auto c = load(in_path);
      check(sb_double_cover(c.get(), &raw));
      write_output(out_path, facet_list(own(raw).get()));
    } else if (*region) {
      int feasible = 0;
      int64_t lo = 0, hi = 0;
      check(sb_feasible_region(k, f0, bundle, &feasible, &lo, &hi));
      if (feasible) {
        std::cout << lo << " " << hi << "\n";
      } else {
        std::cout << "infeasible\n";
      }
    }
  } catch (const DomainFailure& e) {
    const std::string name = sb_status_name(e.status);
    std::cerr << (e.message.rfind(name, 0) == 0 ? e.message : name + ": " + e.message) << "\n";
    return 1;
  } catch (const IoFailure& e) {
    std::cerr << "IoError: " << e.message << "\n";
    return 1;
  }
  return 0;
}
