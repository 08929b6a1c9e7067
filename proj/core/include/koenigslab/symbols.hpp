#ifndef KOENIGSLAB_SYMBOLS_HPP
#define KOENIGSLAB_SYMBOLS_HPP

#include <string>
#include <variant>

#include "koenigslab/kernels.hpp"
#include "koenigslab/series.hpp"

namespace koenigslab {

/// z -> slope*z + offset. Must map the closed disk into the disk; validated
/// numerically on a boundary grid (max_t |slope*e^{it} + offset| < 1 + 1e-12,
/// 1024 samples), which admits rotations and the identity but rejects
/// genuine expansions.
struct AffineSymbol {
  Cx slope;
  Cx offset;
};

/// The involutive disk automorphism phi_a(z) = (a - z)/(1 - conj(a) z).
/// Swaps 0 and a; phi_a o phi_a = id.
struct AutomorphismSymbol {
  DiskPoint center;
};

/// phi_a(multiplier * phi_a(z)): the conjugate of a rotation-dilation by the
/// involution at a. Fixes a with derivative `multiplier`; requires
/// 0 < |multiplier| < 1 so the fixed point is attracting.
struct BlaschkePairSymbol {
  DiskPoint center;
  Cx multiplier;
};

/// z -> e^{i angle} z.
struct RotationSymbol {
  double angle;
};

/// Arbitrary self-map given by its truncated series; the constant term must
/// respect the composition margin. Self-mapness beyond that is the caller's
/// responsibility.
struct CustomSymbol {
  TaylorSeries series;
};

using SymbolSpec = std::variant<AffineSymbol, AutomorphismSymbol,
                                BlaschkePairSymbol, RotationSymbol, CustomSymbol>;

/// Throws domain_error if the spec fails its family's validity conditions.
void validate_symbol(const SymbolSpec& s);

/// Truncated series of the symbol at the given order. Validates first.
TaylorSeries symbol_series(const SymbolSpec& s, int order);

struct FixedPointResult {
  DiskPoint location;
  Cx multiplier;       // derivative of the symbol at the fixed point
  bool schroeder;      // 0 < |multiplier| < 1: a Koenigs eigenfunction exists
  int newton_steps;    // 0 when the fixed point came from a closed form
};

/// Interior fixed point of the symbol. Closed forms for the parametric
/// families; damped-free Newton from z = 0 (tolerance 1e-14, at most 100
/// steps) for custom series and automorphisms. Rotations report the origin
/// with a unimodular multiplier and schroeder = false; that is not an error,
/// callers that need the Koenigs model check the flag.
FixedPointResult fixed_point(const SymbolSpec& s, int order);

/// Parse the CLI grammar:
///   affine:c_re,c_im,d_re,d_im
///   auto:a_re,a_im
///   bpair:a_re,a_im,l_re,l_im
///   rot:theta
///   file:path            (series JSON; becomes a CustomSymbol)
/// Unknown families and malformed numbers raise usage_error; family
/// validity conditions raise domain_error as usual.
SymbolSpec parse_symbol(const std::string& text, int order);

/// Grammar-form description of a spec, suitable for report echoing. Custom
/// symbols render as "custom:order=<n>".
std::string describe_symbol(const SymbolSpec& s);

}  // namespace koenigslab

#endif  // KOENIGSLAB_SYMBOLS_HPP
