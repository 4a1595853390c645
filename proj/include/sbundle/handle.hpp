#ifndef SBUNDLE_HANDLE_HPP
#define SBUNDLE_HANDLE_HPP

#include <utility>
#include <vector>

#include "sbundle/complex.hpp"
#include "sbundle/stacked.hpp"

namespace sbundle {

enum class BundleType { Orientable, Nonorientable };

enum class PairingVariant { Standard, Swapped };

const char* to_string(BundleType bt) noexcept;
const char* to_string(PairingVariant v) noexcept;

/**
 * Vertex identification for handle addition: w_i is glued onto u_i. The u's
 * and the w's each span a facet of the sphere and the two facets are disjoint.
 */
struct Pairing {
  std::vector<std::pair<Vertex, Vertex>> pairs;

  Face first_facet() const;
  Face second_facet() const;
  friend bool operator==(const Pairing&, const Pairing&) = default;
};

// Pairs (u, w) with u, w on different identified facets, not matched to each
// other, and at distance < 3 in the sphere. These do not block handle
// addition but are reported.
struct CrossPairWarning {
  Vertex u;
  Vertex w;
  int distance;
};

std::vector<CrossPairWarning> cross_pair_warnings(const Complex& sphere, const Pairing& p);

// Glues w_i onto u_i and removes the identified facet. Requires every
// matched pair at distance >= 3, a face-injective quotient, and a
// pseudomanifold result.
Complex handle_addition(const Complex& sphere, const Pairing& p);

// Kühnel's complex on Z/(2n+1): n-subsets of the cyclic windows
// {t+1, ..., t+n+1} that are not cyclic intervals.
Complex kuhnel_Mn(int n);

// Pairs (i, f0+i), i = 1..n; the swapped variant exchanges the partners of
// n-1 and n.
Pairing iss_pairing(int n, int f0, PairingVariant variant);

// Handle addition on Δ_{2n+1} with the standard pairing.
Complex build_miss(int n);

struct IssConstruction {
  Complex complex;
  PairingVariant variant;
  Pairing pairing;
  std::vector<CrossPairWarning> warnings;
};

// Smallest vertex count of an S^{n-2}-bundle over S^1 of the given type.
int minimum_vertices(int n, BundleType bt);

// ISS with f0 vertices and n*f0 edges realizing `bt`. The bundle type of each
// candidate pairing is computed, never assumed.
IssConstruction build_iss(int n, int f0, BundleType bt);

struct StackReduction {
  Complex sphere;
  SubdivisionTrace trace;
  Pairing pairing;
};

// Moves subdivisions from one stack onto the other until a single stack
// remains, keeping the handle-addition quotient unchanged up to isomorphism.
StackReduction two_stack_reduction(const Complex& sphere, const SubdivisionTrace& trace, const Pairing& p);

Complex orientation_double_cover(const Complex& c);

}  // namespace sbundle

#endif  // SBUNDLE_HANDLE_HPP
