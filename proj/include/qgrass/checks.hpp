#pragma once

// Named exact checks shared by the command line and the acceptance runner.
// Each returns pass/fail with a short witness or summary.

#include "qgrass/deriv.hpp"
#include "qgrass/exec.hpp"
#include "qgrass/hh1solver.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace qgrass {

struct CheckResult {
  std::string name;
  bool pass = false;
  bool skipped = false;
  std::string detail;
};

namespace checks {

CheckResult basis(Ambient a, int max_degree, ExecPolicy policy = ExecPolicy::parallel);
CheckResult uw_commutation(Ambient a);
/// [v][alpha] = q^t [alpha][v] modulo <[u]> with v = {1..k-1, k+1}.
CheckResult commutation_mod_u(Ambient a);
/// Generators against the rightmost m x m minor of O_q(M(m,n)), m < n.
CheckResult minor_commutation(MatShape s);
/// Quantum matrix relations for the x_ij, y x = q x y, minor and coordinate
/// formulas, and (2k <= n) the rightmost coordinate against the rightmost minor.
CheckResult dehomogenisation(Ambient a);

CheckResult column_derivations(Ambient a);
CheckResult extended_row_column(Ambient a);
CheckResult extension_identities(Ambient a);
CheckResult extended_column_sum(Ambient a);
CheckResult row_column_sum(MatShape s);
/// y-weight and minor-weight decompositions; weight-one elements of minor weight 0 or 1 lie in R.
CheckResult weight_gradings(Ambient a, std::uint64_t seed);
/// Adjusted derivations kill the rightmost minor and map R into R.
CheckResult restriction_to_R(Ambient a, std::uint64_t seed, int samples = 3);
CheckResult normalization(Ambient a, int samples, std::uint64_t seed);
CheckResult hh1_dimension(Ambient a, const std::vector<int>& shifts, int cap,
                          const WindowOptions& opt = {});
CheckResult nonsquare_decomposition(MatShape s, ExecPolicy policy = ExecPolicy::parallel);

CheckResult confluence(MatShape s, int max_length, int samples, std::uint64_t seed);
CheckResult associativity(MatShape s, int samples, std::uint64_t seed);
CheckResult determinant_centrality(int m);
CheckResult leibniz(Ambient a, int samples, std::uint64_t seed);
/// Equal quotient dimension at shift 0 for G(k,n) and G(n-k,n), and the
/// transported column derivations stay independent derivations.
CheckResult psi_agreement(Ambient a, int cap);
CheckResult specialisation(Ambient a, const std::vector<int>& shifts, int cap, const mpq_class& q0);

} // namespace checks

/// Names accepted by run_named_check, in suite order.
const std::vector<std::string>& lemma_names();
/// Empty when the check applies to the ambient; otherwise the reason.
std::string check_precondition(const std::string& name, Ambient a);
/// Throws DomainError for an unknown name and PreconditionError when the check does not apply.
CheckResult run_named_check(const std::string& name, Ambient a, std::uint64_t seed,
                            ExecPolicy policy = ExecPolicy::parallel);

} // namespace qgrass
