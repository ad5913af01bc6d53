#pragma once

// Bounded-degree computation of Der, InnDer and HH^1 for O_q(G(k,n)).
//
// Derivations of shift s send each generator to a combination of standard
// monomials of degree 1+s. The unknowns split by content shift
// delta = content(image) - content(generator); each block is solved
// independently against the Leibniz extension of the relation kernel.

#include "qgrass/deriv.hpp"
#include "qgrass/exec.hpp"
#include "qgrass/qgrass.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace qgrass {

struct RelationKernel {
  Ambient ambient;
  int degree = 0;
  std::size_t words = 0;                // size of the spanning word set
  std::vector<GrassElement> basis;      // formal combinations of words
};

/// Null space of formal degree-d words -> standard monomials, over the word
/// set {S g : S standard of degree d-1, g a generator} (all pairs for d = 2).
const RelationKernel& relation_kernel(Ambient a, int degree, ExecPolicy policy = ExecPolicy::parallel);

struct DerivationSpace {
  Ambient ambient;
  int shift = 0;
  int cap = 0;
  std::vector<GrassDerivation> basis;
};

struct SolveOptions {
  ExecPolicy policy = ExecPolicy::parallel;
  /// Also compare every constraint matrix rank with its rank at this point.
  std::optional<mpq_class> specialisation;
};

DerivationSpace solve_der_space(Ambient a, int shift, int cap, const SolveOptions& opt = {});
DerivationSpace inner_space(Ambient a, int shift, ExecPolicy policy = ExecPolicy::parallel);

struct ShiftRecord {
  int shift = 0;
  std::size_t dim_der = 0;
  std::size_t dim_inn = 0;
  std::size_t dim_hh1 = 0;
  std::map<int, std::size_t> dim_der_by_cap;  // caps 2..cap
  std::vector<std::string> coset_labels;
  bool inner_contained = false;   // every ad_z satisfies the constraints
  bool closure = false;           // coset + inner stays in Der
  bool leibniz = false;           // random product test
  bool specialisation_agrees = true;
  std::size_t blocks = 0;
  std::string certificate;        // FNV-1a of the exact data
};

struct HH1Report {
  Ambient ambient;
  int cap = 0;
  std::vector<ShiftRecord> shifts;
  /// Independence of D_1..D_n modulo inner, via [I_r] and [J_r]; set when shift 0 is in the window.
  std::optional<bool> column_independence;
  std::string cap_label;
  std::string limitation;
  std::optional<mpq_class> specialisation;
};

struct WindowOptions {
  ExecPolicy policy = ExecPolicy::parallel;
  std::optional<mpq_class> specialisation;
  std::uint64_t seed = 1;
  /// Random product pairs per basis derivation in the Leibniz test.
  int leibniz_samples = 3;
};

/// Throws PreconditionError unless 2 <= k <= n-2.
HH1Report hh1_window(Ambient a, const std::vector<int>& shifts, int cap, const WindowOptions& opt = {});

/// Test vectors [I_r] = [1..k-1, k-1+r] (r = 1..n+1-k) and [J_r] = [n-k+1-r, n-k+2..n] (r = 0..n-k).
std::vector<PluckerIndex> column_test_vectors(Ambient a);

/// Degree-preserving derivations of O_q(M(m,n)) (images of degree one) that
/// satisfy the Leibniz rule on the quadratic relations, optionally also
/// killing the rightmost m x m minor (m < n).
std::vector<QMDerivation> qm_derivation_space(MatShape s, bool kill_rightmost_minor,
                                              ExecPolicy policy = ExecPolicy::parallel);

/// 64-bit FNV-1a.
std::uint64_t fnv1a(const std::string& data);

} // namespace qgrass
