// Copyright 2026 The trotterobs Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TROTTEROBS_BOUNDS_H
#define TROTTEROBS_BOUNDS_H

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "trotterobs/dense.h"
#include "trotterobs/hamiltonian.h"
#include "trotterobs/product_formula.h"

namespace trotterobs {

enum class BoundFamily {
    lloyd,
    commutator,
    random_input,
    observation,
    kernel_exact,
    principal_integral,
    empirical,
};

const char *family_name(BoundFamily family);
BoundFamily parse_family(std::string_view name);

/// One evaluated error metric. `value` is finite and non-negative.
struct BoundReport {
    BoundFamily family = BoundFamily::lloyd;
    int formula_order = 1;
    std::uint64_t r = 1;
    double t = 0;
    double value = 0;
    std::map<std::string, std::string> metadata;
};

BoundReport make_report(BoundFamily family, const FormulaSpec &spec, double value);

// ---------------------------------------------------------------------------
// Operator-norm bounds on ||U - V||.

/// (t L Lambda)^2 / r * e^{t L Lambda / r} for PF1 and
/// (2 t L Lambda)^3 / (3 r^2) * e^{2 t L Lambda / r} for PF2.
BoundReport lloyd_bound(const FormulaSpec &spec, std::size_t num_summands, double max_summand_norm);

/// r-independent commutator sums, with A_j the summands in evolution order and
/// B_j = sum_{k>j} A_k:
///   PF1: first = sum_j ||[B_j, A_j]||
///   PF2: first = sum_j ||[B_j, [B_j, A_j]]||, second = sum_j ||[A_j, [A_j, B_j]]||
struct CommutatorSums {
    int formula_order = 1;
    double first = 0;
    double second = 0;
};

enum class NormKind { spectral, frobenius };

CommutatorSums commutator_sums(const HamiltonianModel &model, int formula_order, NormKind norm);

/// PF1: t^2/(2r) first;  PF2: t^3/(12 r^2) first + t^3/(24 r^2) second.
double commutator_bound_value(const CommutatorSums &sums, double t, std::uint64_t r);
/// PF1: 2^-n t^2/(2r) first;  PF2: 2^-n t^3/r^2 (first/12 + second/24).
double random_input_bound_value(const CommutatorSums &sums, unsigned n, double t, std::uint64_t r);

BoundReport commutator_bound(const HamiltonianModel &model, const FormulaSpec &spec);
BoundReport random_input_bound(const HamiltonianModel &model, const FormulaSpec &spec);

// ---------------------------------------------------------------------------
// Observation cost L = (t/r) sum_{k=1}^r ||[H-bar, S^{-k} O S^k]||.

enum class CostSummation {
    /// Every k = 1..r.
    exact,
    /// Trapezoid rule on a nested integer grid over k in [1, r] plus the
    /// Euler-Maclaurin endpoint term, refined by doubling until successive
    /// estimates agree to `relative_tolerance`. Falls back to the exact sum
    /// once the grid reaches every integer.
    nested_grid,
};

struct CostOptions {
    CostSummation summation = CostSummation::exact;
    double relative_tolerance = 1e-6;
    std::uint64_t initial_intervals = 64;
    std::uint64_t max_intervals = 4096;
};

struct CostEvaluation {
    double value = 0;
    std::uint64_t terms_evaluated = 0;
    bool exact = true;
    bool converged = true;
};

/// Evaluates L for a fixed model, observable, formula order and time at any
/// evolution order and Trotter number. Dense summand spectra are computed once.
class ObservationCost {
   public:
    ObservationCost(const HamiltonianModel &model, const PauliSum &observable, int formula_order, double t,
                    CostOptions options = {});

    CostEvaluation evaluate(const EvolutionOrder &order, std::uint64_t r) const;
    double operator()(const EvolutionOrder &order, std::uint64_t r) const {
        return evaluate(order, r).value;
    }

    const HamiltonianModel &model() const {
        return model_;
    }
    int formula_order() const {
        return formula_order_;
    }
    double time() const {
        return t_;
    }

   private:
    HamiltonianModel model_;
    DenseOperator observable_;
    int formula_order_;
    double t_;
    CostOptions options_;
    SummandPropagators props_;
};

/// L at the model's current evolution order; reported with approx=true.
BoundReport observation_cost(const HamiltonianModel &model, const PauliSum &observable, const FormulaSpec &spec,
                             const CostOptions &options = {});

// ---------------------------------------------------------------------------
// Error kernel.

struct ErrorKernel {
    DenseOperator e;
    double eigenphase_bound = 0;  // ||E||_inf
    bool branch_ambiguous = false;
};

/// E with e^{-itE} = U V^dagger and every eigenphase of tE in (-pi, pi].
ErrorKernel error_kernel(const DenseOperator &u, const DenseOperator &v, double t);

/// (1/t) arccos(1 - B^2/2) for 0 <= B <= 2.
double kernel_norm_bound(double b, double t);

/// t ||[E, O]||_inf.
double kernel_observation_bound(const DenseOperator &e, const DenseOperator &o, double t);
/// (t / 2^n) ||[E, O]||_1; never exceeds kernel_observation_bound.
double kernel_random_input_bound(const DenseOperator &e, const DenseOperator &o, double t, unsigned n);

/// || [E/||E||, O/||O||] ||_inf, in [0, 2].
double commutativity_alpha(const DenseOperator &e, const DenseOperator &o);

// ---------------------------------------------------------------------------
// Observation error.

/// |Tr(O U rho U^dagger) - Tr(O V rho V^dagger)|.
double observation_error_fixed_state(const DenseOperator &u, const DenseOperator &v, const DenseOperator &o,
                                     const DenseOperator &rho);
/// ||U^dagger O U - V^dagger O V||_inf: the maximum of the fixed-state error
/// over all density matrices.
double observation_error_worst_case(const DenseOperator &u, const DenseOperator &v, const DenseOperator &o);

/// Worst-case observation error of the product formula as a function of r,
/// for repeated evaluation at a fixed evolution order.
class EmpiricalObservationError {
   public:
    EmpiricalObservationError(const HamiltonianModel &model, const PauliSum &observable, int formula_order, double t);

    double operator()(const EvolutionOrder &order, std::uint64_t r) const;

   private:
    int formula_order_;
    double t_;
    DenseOperator observable_;
    DenseOperator evolved_observable_;  // U^dagger O U
    SummandPropagators props_;
};

// ---------------------------------------------------------------------------
// Principal error.

struct QuadratureResult {
    double value = 0;
    bool converged = false;
    int panels = 0;
};

/// Composite Simpson with panel doubling from 1 to `max_panels`; stops once
/// successive estimates differ by less than `relative_tolerance`.
QuadratureResult simpson_integrate(const std::function<std::complex<double>(double)> &f, double a, double b,
                                   double relative_tolerance = 1e-8, int max_panels = 64);

/// | int_0^t Tr([e^{-i tau H~} H' e^{i tau H~}, O] e^{-i t H~} rho e^{i t H~}) d tau |.
QuadratureResult principal_observation_error(const DenseOperator &h_tilde, const DenseOperator &h_prime,
                                             const DenseOperator &o, const DenseOperator &rho, double t);

/// int_0^t || [H', e^{i tau H~} O e^{-i tau H~}] ||_inf d tau.
QuadratureResult principal_bound_integral(const DenseOperator &h_tilde, const DenseOperator &h_prime,
                                          const DenseOperator &o, double t);

/// ||O|| e^{2t||H||} (e^{2t||H'||} - 1 - 2t||H'||).
double residual_bound(double norm_o, double norm_h, double norm_hp, double t);

/// Which prefactor to use for the two-part shortcut M = c H^(1).
enum class TwoTermConvention {
    /// c = t/(2r): the value for which [iM, H] equals the PF1 leading term.
    verified,
    /// c = t/r, as the shortcut is usually quoted.
    literal,
};

/// M for a two-summand PF1 model with [iM, H] = H-bar (see TwoTermConvention).
DenseOperator two_term_M(const HamiltonianModel &model, const FormulaSpec &spec,
                         TwoTermConvention convention = TwoTermConvention::verified);

/// ||O||_inf ||[rho, M]||_1 + ||[O, M]||_inf.
double two_term_M_bound(const DenseOperator &o, const DenseOperator &rho, const DenseOperator &m);

// ---------------------------------------------------------------------------
// Trotter number search.

inline constexpr std::uint64_t kTrotterNumberCap = std::uint64_t{1} << 24;

struct TrotterSearchResult {
    std::uint64_t r_star = 0;
    double value = 0;  // bound_fn(r_star)
    std::size_t evaluations = 0;
};

/// Smallest r with bound_fn(r) <= epsilon. Doubling from r = 1 finds a
/// feasible power of two (rejected if bound_fn(2r) > epsilon, which marks a
/// transient dip), bisection narrows it, and the window [r*-4, r*-1] is
/// rescanned. Throws NumericalError when no r <= cap qualifies.
TrotterSearchResult trotter_number_search(const std::function<double(std::uint64_t)> &bound_fn, double epsilon,
                                          std::uint64_t cap = kTrotterNumberCap);

}  // namespace trotterobs

#endif
