#pragma once

#include <optional>
#include <string>
#include <vector>

#include "evoform/evolution.hpp"

namespace evoform {

// Orthonormal basis of {v : contraction of K with v vanishes at point}.
// Singular values below tol * sigma_max count as zero; a zero matrix
// yields all n coordinate directions. Empty result means K is
// nonsingular there.
std::vector<Point> degeneracy_directions(const CommutatorField& K, const Point& point,
                                         double tol);

struct LocusReport {
  struct Entry {
    Point point;
    int null_dim = 0;
  };
  std::vector<Entry> points;   // where null_dim > generic_null_dim
  int generic_null_dim = 0;
  int sampled = 0;
  double tol = 0.0;
};

// Grid points where extra degeneracy conditions hold, i.e. the null
// dimension exceeds the generic value (p = 1: 1 for odd n, 0 for even n;
// higher degree: the minimum observed over the grid).
LocusReport degeneracy_locus(const CommutatorField& K, const SamplePlan& plan,
                             double tol);

enum class TraceStop { Boundary, MaxLength, NullLost, AngleJump };

struct Trace {
  Point seed;
  std::vector<Point> points;
  std::vector<double> params;            // arc length, uniform step
  std::vector<Point> directions;         // unit tangent at each point
  double step = 0.0;
  double max_residual = 0.0;             // max |K . direction| along the trace
  TraceStop stop = TraceStop::MaxLength;
  bool integrability_ok = true;          // direction field stayed continuous
};

struct Pseudostructure {
  ChartPtr chart;
  int tangent_dim = 0;                   // null dimension at the seed
  std::vector<Trace> curves;
  double max_residual = 0.0;
};

// Integral curve of the re-oriented null direction field, fourth-order
// explicit steps of size h, up to arc length L. Stops at the domain
// boundary, at length L, when the null direction disappears, or when the
// direction field turns by more than 30 degrees in one step (the trace is
// then flagged non-integrable).
Pseudostructure trace_pseudostructure(const CommutatorField& K, const Point& seed,
                                      double h, double max_length, double tol);

struct PseudostructureVerdict {
  bool identical = false;
  double max_residual = 0.0;
  bool psi_known = false;
  bool loops_available = false;
};

// Along each curve: d/ds psi(gamma(s)) = omega . gamma'(s) by cumulative
// quadrature when psi is known; path-consistency of the omega integral
// otherwise.
PseudostructureVerdict identical_on_pseudostructure(const EvolutionaryRelation& rel,
                                                    const Pseudostructure& ps,
                                                    double tol);

struct RecoveryResult {
  struct Sample {
    Point point;
    double value = 0.0;
    int curve = 0;
  };
  std::vector<Sample> samples;
  double loop_defect = 0.0;
  bool valid = false;
  int connected_curves = 0;
  int disconnected_curves = 0;
};

// psi(x) = integral of omega from base along the traced curves; curves are
// chained through near-coincident points. Declared valid iff the loop
// defect stays below tol.
RecoveryResult recover_state_function(const EvolutionaryRelation& rel,
                                      const Pseudostructure& ps, const Point& base,
                                      double tol = 1e-8);

struct CascadeConfig {
  SamplePlan plan = SamplePlan::grid();
  double tol = 1e-9;
  double trace_step = 1e-3;
  double max_length = 1.0;
  std::vector<Point> seeds;
  std::optional<Point> base_point;
  int max_locus_seeds = 4;  // fallback seeds drawn from the locus
};

struct CascadeStep {
  int k = 0;
  long locus_size = 0;
  int pseudostructure_dim = 0;  // n + 1 - k by construction
  double max_residual = 0.0;
  std::vector<RecoveryResult::Sample> state_function_samples;
  std::string note;
};

enum class CascadeOutcome { GlobalIdentity, Realized, NoRealization };

struct CascadeReport {
  CascadeOutcome outcome = CascadeOutcome::NoRealization;
  std::vector<CascadeStep> steps;
  std::vector<Pseudostructure> pseudostructures;
  std::vector<std::string> interpretation_notes;
};

// Sequential-integration driver. Fully implemented for p = 1 (trace,
// identity on the pseudostructure, state-function recovery down to k = 0);
// for p >= 2 it records locus and restricted-closure certificates per
// degree and reduces by contraction with a chosen null direction, stopping
// above the 1-form machinery.
CascadeReport cascade_integrate(const EvolutionaryRelation& rel,
                                const CascadeConfig& config);

}  // namespace evoform
