#include "sbundle/sbundle.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <string>

#include "sbundle/bistellar.hpp"
#include "sbundle/face_numbers.hpp"
#include "sbundle/handle.hpp"
#include "sbundle/io.hpp"
#include "sbundle/stacked.hpp"
#include "sbundle/verify.hpp"

struct sb_complex {
  sbundle::Complex value;
};

struct sb_schedule {
  sbundle::FillSchedule value;
};

namespace {

thread_local std::string last_error;

sb_status fail(sb_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

// Runs `body`, translating exceptions into status codes.
template <typename Body>
sb_status guarded(Body&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const sbundle::Error& e) {
    return fail(static_cast<sb_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(SB_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(SB_INTERNAL, e.what());
  }
}

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

sb_status wrap(sbundle::Complex c, sb_complex** out) {
  *out = new sb_complex{std::move(c)};
  return SB_OK;
}

sb_status copy_vector(const std::vector<std::int64_t>& v, int64_t* out, size_t capacity, size_t* length) {
  if (length) *length = v.size();
  if (v.size() > capacity) return fail(SB_BUFFER_TOO_SMALL, "need " + std::to_string(v.size()) + " entries");
  if (out) std::copy(v.begin(), v.end(), out);
  return SB_OK;
}

}  // namespace

#define SB_REQUIRE(ptr) \
  if (!(ptr)) return fail(SB_NULL_ARGUMENT, #ptr " is null")

extern "C" {

const char* sb_status_name(sb_status status) {
  switch (status) {
    case SB_NULL_ARGUMENT: return "NullArgument";
    case SB_BUFFER_TOO_SMALL: return "BufferTooSmall";
    case SB_INTERNAL: return "Internal";
    default: break;
  }
  if (status >= SB_OK && status <= SB_INVARIANT_VIOLATION) {
    return sbundle::error_name(static_cast<sbundle::ErrorCode>(status)).data();
  }
  return "Unknown";
}

const char* sb_last_error(void) { return last_error.c_str(); }

void sb_string_free(char* s) { std::free(s); }

sb_status sb_complex_from_facets(const int32_t* labels, size_t facet_count, size_t facet_size, sb_complex** out) {
  SB_REQUIRE(out);
  if (facet_count > 0) SB_REQUIRE(labels);
  return guarded([&] {
    std::vector<sbundle::Face> facets(facet_count);
    for (size_t i = 0; i < facet_count; ++i) facets[i].assign(labels + i * facet_size, labels + (i + 1) * facet_size);
    return wrap(sbundle::Complex::from_facets(std::move(facets)), out);
  });
}

sb_status sb_complex_parse(const char* text, size_t length, sb_complex** out) {
  SB_REQUIRE(out);
  if (length > 0) SB_REQUIRE(text);
  return guarded([&] { return wrap(sbundle::parse_facet_list(std::string_view(text ? text : "", length)), out); });
}

sb_status sb_complex_write(const sb_complex* c, char** out) {
  SB_REQUIRE(c);
  SB_REQUIRE(out);
  return guarded([&] {
    *out = duplicate(sbundle::write_facet_list(c->value));
    return SB_OK;
  });
}

void sb_complex_free(sb_complex* c) { delete c; }

size_t sb_complex_facet_size(const sb_complex* c) { return c ? static_cast<size_t>(c->value.n()) : 0; }
size_t sb_complex_vertex_count(const sb_complex* c) { return c ? c->value.vertex_count() : 0; }
size_t sb_complex_facet_count(const sb_complex* c) { return c ? c->value.facet_count() : 0; }

sb_status sb_complex_facets(const sb_complex* c, int32_t* out, size_t capacity) {
  SB_REQUIRE(c);
  const size_t need = c->value.facet_count() * static_cast<size_t>(c->value.n());
  if (capacity < need) return fail(SB_BUFFER_TOO_SMALL, "need " + std::to_string(need) + " labels");
  if (need > 0) SB_REQUIRE(out);
  size_t k = 0;
  for (const auto& f : c->value.facets()) {
    for (auto v : f) out[k++] = v;
  }
  return SB_OK;
}

sb_status sb_f_vector(const sb_complex* c, int64_t* out, size_t capacity, size_t* length) {
  SB_REQUIRE(c);
  return guarded([&] { return copy_vector(sbundle::f_vector(c->value).values, out, capacity, length); });
}

sb_status sb_betti_numbers(const sb_complex* c, int64_t* out, size_t capacity, size_t* length) {
  SB_REQUIRE(c);
  return guarded([&] { return copy_vector(sbundle::betti_numbers(c->value), out, capacity, length); });
}

sb_status sb_euler_characteristic(const sb_complex* c, int64_t* out) {
  SB_REQUIRE(c);
  SB_REQUIRE(out);
  return guarded([&] {
    *out = sbundle::euler_characteristic(c->value);
    return SB_OK;
  });
}

sb_status sb_is_orientable(const sb_complex* c, int* orientable) {
  SB_REQUIRE(c);
  SB_REQUIRE(orientable);
  return guarded([&] {
    *orientable = sbundle::is_orientable(c->value) ? 1 : 0;
    return SB_OK;
  });
}

sb_status sb_analyze(const sb_complex* c, int json, char** out) {
  SB_REQUIRE(c);
  SB_REQUIRE(out);
  return guarded([&] {
    const auto report = sbundle::analyze(c->value);
    *out = duplicate(json ? sbundle::report_to_json(report) : sbundle::report_to_text(report));
    return SB_OK;
  });
}

sb_status sb_build_stacked(int n, int steps, sb_complex** out) {
  SB_REQUIRE(out);
  return guarded([&] { return wrap(sbundle::build_delta(n, steps).complex, out); });
}

sb_status sb_build_miss(int n, sb_complex** out) {
  SB_REQUIRE(out);
  return guarded([&] { return wrap(sbundle::build_miss(n), out); });
}

sb_status sb_build_kuhnel(int n, sb_complex** out) {
  SB_REQUIRE(out);
  return guarded([&] { return wrap(sbundle::kuhnel_Mn(n), out); });
}

sb_status sb_build_iss(int n, int f0, int orientable, sb_complex** out, int* swapped, char** warnings) {
  SB_REQUIRE(out);
  return guarded([&] {
    auto iss = sbundle::build_iss(n, f0, orientable ? sbundle::BundleType::Orientable : sbundle::BundleType::Nonorientable);
    if (swapped) *swapped = iss.variant == sbundle::PairingVariant::Swapped ? 1 : 0;
    if (warnings) {
      std::string text;
      for (const auto& w : iss.warnings) {
        text += "cross pair (" + std::to_string(w.u) + "," + std::to_string(w.w) + ") at distance " +
                std::to_string(w.distance) + "\n";
      }
      *warnings = duplicate(text);
    }
    return wrap(std::move(iss.complex), out);
  });
}

sb_status sb_double_cover(const sb_complex* c, sb_complex** out) {
  SB_REQUIRE(c);
  SB_REQUIRE(out);
  return guarded([&] { return wrap(sbundle::orientation_double_cover(c->value), out); });
}

sb_status sb_fill_schedule(const sb_complex* c, int n, int f0, int swapped, sb_schedule** out) {
  SB_REQUIRE(c);
  SB_REQUIRE(out);
  return guarded([&] {
    const auto variant = swapped ? sbundle::PairingVariant::Swapped : sbundle::PairingVariant::Standard;
    *out = new sb_schedule{sbundle::build_fill_schedule(c->value, n, f0, variant)};
    return SB_OK;
  });
}

size_t sb_schedule_length(const sb_schedule* s) { return s ? s->value.moves.size() : 0; }

sb_status sb_schedule_write(const sb_schedule* s, char** out) {
  SB_REQUIRE(s);
  SB_REQUIRE(out);
  return guarded([&] {
    *out = duplicate(sbundle::write_schedule(s->value));
    return SB_OK;
  });
}

void sb_schedule_free(sb_schedule* s) { delete s; }

sb_status sb_fill_to(const sb_complex* c, const sb_schedule* s, int64_t target_f1, sb_complex** out) {
  SB_REQUIRE(c);
  SB_REQUIRE(s);
  SB_REQUIRE(out);
  return guarded([&] { return wrap(sbundle::fill_to(c->value, s->value, target_f1), out); });
}

sb_status sb_feasible_region(int k, int f0, int orientable, int* feasible, int64_t* f1_min, int64_t* f1_max) {
  SB_REQUIRE(feasible);
  return guarded([&] {
    const auto region = sbundle::feasible_region(
        k, f0, orientable ? sbundle::BundleType::Orientable : sbundle::BundleType::Nonorientable);
    *feasible = region ? 1 : 0;
    if (region) {
      if (f1_min) *f1_min = region->first;
      if (f1_max) *f1_max = region->second;
    }
    return SB_OK;
  });
}

sb_status sb_isomorphism(const sb_complex* a, const sb_complex* b, int* found, int32_t* pairs, size_t capacity) {
  SB_REQUIRE(a);
  SB_REQUIRE(b);
  SB_REQUIRE(found);
  return guarded([&] {
    const auto w = sbundle::are_isomorphic(a->value, b->value);
    *found = w ? 1 : 0;
    if (!w) return SB_OK;
    if (capacity < 2 * w->bijection.size()) {
      return fail(SB_BUFFER_TOO_SMALL, "need " + std::to_string(2 * w->bijection.size()) + " labels");
    }
    if (!pairs) return fail(SB_NULL_ARGUMENT, "pairs is null");
    size_t k = 0;
    for (const auto& [src, dst] : w->bijection) {
      pairs[k++] = src;
      pairs[k++] = dst;
    }
    return SB_OK;
  });
}

}  // extern "C"
