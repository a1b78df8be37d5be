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

#include "trotterobs/bounds.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <unordered_map>

#include "trotterobs/errors.h"

namespace trotterobs {

namespace {

void require_formula_1_or_2(int order, const char *what) {
    if (order != 1 && order != 2) {
        throw UnsupportedOrderError(std::string(what) + ": only orders 1 and 2 are supported, got " +
                                    std::to_string(order));
    }
}

void require_same_dim(const DenseOperator &a, const DenseOperator &b, const char *what) {
    if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows()) {
        throw DimensionError(std::string(what) + ": operator dimensions disagree");
    }
}

void require_hermitian(const DenseOperator &a, const char *what) {
    if (!is_hermitian(a)) {
        throw DomainError(std::string(what) + ": operator is not Hermitian");
    }
}

double dense_norm(const PauliSum &p, NormKind kind) {
    if (p.empty()) {
        return 0.0;
    }
    if (kind == NormKind::frobenius) {
        // Pauli strings are orthogonal with ||P||_F^2 = 2^n.
        double sq = 0;
        for (const auto &[s, c] : p.terms()) {
            sq += std::norm(c);
        }
        return std::sqrt(sq * std::ldexp(1.0, static_cast<int>(p.num_qubits())));
    }
    return spectral_norm(p.to_dense());
}

// Spectral norm of an anti-Hermitian matrix through the eigenvalues of iK.
double anti_hermitian_norm(const DenseOperator &k) {
    DenseOperator ik = std::complex<double>(0, 1) * k;
    ik = hermitian_part(ik);
    RealVector ev = herm_eigenvalues(ik);
    return std::max(std::abs(ev(0)), std::abs(ev(ev.size() - 1)));
}

}  // namespace

const char *family_name(BoundFamily family) {
    switch (family) {
        case BoundFamily::lloyd:
            return "lloyd";
        case BoundFamily::commutator:
            return "commutator";
        case BoundFamily::random_input:
            return "random_input";
        case BoundFamily::observation:
            return "observation";
        case BoundFamily::kernel_exact:
            return "kernel_exact";
        case BoundFamily::principal_integral:
            return "principal_integral";
        case BoundFamily::empirical:
            return "empirical";
    }
    return "unknown";
}

BoundFamily parse_family(std::string_view name) {
    for (auto f : {BoundFamily::lloyd, BoundFamily::commutator, BoundFamily::random_input, BoundFamily::observation,
                   BoundFamily::kernel_exact, BoundFamily::principal_integral, BoundFamily::empirical}) {
        if (name == family_name(f)) {
            return f;
        }
    }
    throw std::invalid_argument("unknown bound family '" + std::string(name) + "'");
}

BoundReport make_report(BoundFamily family, const FormulaSpec &spec, double value) {
    if (!std::isfinite(value) || value < 0) {
        throw NumericalError(std::string(family_name(family)) + ": bound value is not a finite non-negative number");
    }
    BoundReport rep;
    rep.family = family;
    rep.formula_order = spec.order;
    rep.r = spec.r;
    rep.t = spec.t;
    rep.value = value;
    return rep;
}

// ---------------------------------------------------------------------------

BoundReport lloyd_bound(const FormulaSpec &spec, std::size_t num_summands, double max_summand_norm) {
    validate(spec);
    require_formula_1_or_2(spec.order, "lloyd_bound");
    if (!(max_summand_norm >= 0) || !std::isfinite(max_summand_norm)) {
        throw std::invalid_argument("lloyd_bound: summand norm must be finite and non-negative");
    }
    const double r = static_cast<double>(spec.r);
    const double x = std::abs(spec.t) * static_cast<double>(num_summands) * max_summand_norm;
    double value;
    if (spec.order == 1) {
        value = x * x / r * std::exp(x / r);
    } else {
        value = std::pow(2 * x, 3) / (3 * r * r) * std::exp(2 * x / r);
    }
    auto rep = make_report(BoundFamily::lloyd, spec, value);
    rep.metadata["L"] = std::to_string(num_summands);
    return rep;
}

CommutatorSums commutator_sums(const HamiltonianModel &model, int formula_order, NormKind norm) {
    require_formula_1_or_2(formula_order, "commutator_sums");
    const unsigned n = model.num_qubits();
    const std::size_t length = model.num_summands();
    std::vector<PauliSum> tail(length + 1, PauliSum(n));
    for (std::size_t j = length; j-- > 0;) {
        tail[j] = tail[j + 1] + model.ordered_summand(j);
    }
    CommutatorSums out;
    out.formula_order = formula_order;
    for (std::size_t j = 0; j + 1 < length; ++j) {
        const auto &a = model.ordered_summand(j);
        const auto &b = tail[j + 1];
        PauliSum ba = commutator_sum(b, a);
        if (formula_order == 1) {
            out.first += dense_norm(ba, norm);
        } else {
            out.first += dense_norm(commutator_sum(b, ba), norm);
            out.second += dense_norm(commutator_sum(a, commutator_sum(a, b)), norm);
        }
    }
    return out;
}

double commutator_bound_value(const CommutatorSums &sums, double t, std::uint64_t r) {
    const double rr = static_cast<double>(r);
    const double at = std::abs(t);
    if (sums.formula_order == 1) {
        return at * at / (2 * rr) * sums.first;
    }
    const double c = at * at * at / (rr * rr);
    return c * sums.first / 12 + c * sums.second / 24;
}

double random_input_bound_value(const CommutatorSums &sums, unsigned n, double t, std::uint64_t r) {
    return std::ldexp(commutator_bound_value(sums, t, r), -static_cast<int>(n));
}

BoundReport commutator_bound(const HamiltonianModel &model, const FormulaSpec &spec) {
    validate(spec);
    require_formula_1_or_2(spec.order, "commutator_bound");
    auto sums = commutator_sums(model, spec.order, NormKind::spectral);
    auto rep = make_report(BoundFamily::commutator, spec, commutator_bound_value(sums, spec.t, spec.r));
    rep.metadata["order"] = format_order(model.order());
    return rep;
}

BoundReport random_input_bound(const HamiltonianModel &model, const FormulaSpec &spec) {
    validate(spec);
    require_formula_1_or_2(spec.order, "random_input_bound");
    auto sums = commutator_sums(model, spec.order, NormKind::frobenius);
    auto rep = make_report(BoundFamily::random_input, spec,
                           random_input_bound_value(sums, model.num_qubits(), spec.t, spec.r));
    rep.metadata["order"] = format_order(model.order());
    rep.metadata["n"] = std::to_string(model.num_qubits());
    return rep;
}

// ---------------------------------------------------------------------------

ObservationCost::ObservationCost(const HamiltonianModel &model, const PauliSum &observable, int formula_order,
                                 double t, CostOptions options)
    : model_(model),
      observable_(observable.to_dense()),
      formula_order_(formula_order),
      t_(t),
      options_(options),
      props_(model) {
    require_formula_1_or_2(formula_order, "observation_cost");
    if (observable.num_qubits() != model.num_qubits()) {
        throw DimensionError("observation_cost: observable and Hamiltonian qubit counts differ");
    }
    if (!observable.is_hermitian()) {
        throw DomainError("observation_cost: observable is not Hermitian");
    }
    if (!std::isfinite(t)) {
        throw std::invalid_argument("observation_cost: t must be finite");
    }
    if (options_.initial_intervals < 2 || options_.max_intervals < options_.initial_intervals ||
        !(options_.relative_tolerance > 0)) {
        throw std::invalid_argument("observation_cost: invalid summation options");
    }
}

CostEvaluation ObservationCost::evaluate(const EvolutionOrder &order, std::uint64_t r) const {
    if (r == 0) {
        throw std::invalid_argument("observation_cost: Trotter number must be positive");
    }
    if (!is_permutation(order, model_.num_summands())) {
        throw std::invalid_argument("observation_cost: order is not a permutation of the summands");
    }
    const double tau = t_ / static_cast<double>(r);
    const auto ordered = model_.with_order(order);
    const PauliSum coeff = leading_difference_coefficient(ordered, formula_order_);
    CostEvaluation out;
    if (coeff.empty() || t_ == 0) {
        return out;
    }
    const double scale = formula_order_ == 1 ? tau : tau * tau;
    const DenseOperator hbar = coeff.to_dense() * std::complex<double>(scale, 0);

    // S = V diag(e^{i phi}) V^dagger, so S^{-k} O S^k has entries
    // e^{-ik phi_a} O_ab e^{ik phi_b} in that basis.
    const DenseOperator block = trotter_block(props_, order, formula_order_, tau);
    const UnitarySpectrum spec = unitary_eig(block);
    const DenseOperator &v = spec.vectors;
    const DenseOperator h_hat = v.adjoint() * hbar * v;
    const DenseOperator o_hat = v.adjoint() * observable_ * v;
    const Eigen::Index d = o_hat.rows();

    DenseOperator o_k(d, d);
    DenseOperator x(d, d);
    DenseOperator ik(d, d);
    ComplexVector w(d);
    Eigen::SelfAdjointEigenSolver<DenseOperator> solver(d);
    auto g = [&](std::uint64_t k) {
        const double kk = static_cast<double>(k);
        for (Eigen::Index a = 0; a < d; ++a) {
            w(a) = std::polar(1.0, kk * spec.phases(a));
        }
        for (Eigen::Index b = 0; b < d; ++b) {
            for (Eigen::Index a = 0; a < d; ++a) {
                o_k(a, b) = std::conj(w(a)) * o_hat(a, b) * w(b);
            }
        }
        x.noalias() = h_hat * o_k;
        // [H, O_k] = X - X^dagger; i(X - X^dagger) is Hermitian bit for bit
        ik.noalias() = std::complex<double>(0, 1) * (x - x.adjoint());
        solver.compute(ik, Eigen::EigenvaluesOnly);
        const auto &ev = solver.eigenvalues();
        return std::max(std::abs(ev(0)), std::abs(ev(d - 1)));
    };

    const double prefactor = std::abs(t_) / static_cast<double>(r);
    auto exact_sum = [&]() {
        double sum = 0;
        for (std::uint64_t k = 1; k <= r; ++k) {
            sum += g(k);
        }
        return sum;
    };

    if (options_.summation == CostSummation::exact || r - 1 <= options_.initial_intervals) {
        out.value = prefactor * exact_sum();
        out.terms_evaluated = r;
        return out;
    }

    // Nested grid k_m = 1 + round(m (r-1) / M); M a power-of-two multiple of
    // initial_intervals, so every refinement keeps the previous nodes.
    std::unordered_map<std::uint64_t, double> cache;
    auto g_cached = [&](std::uint64_t k) {
        auto it = cache.find(k);
        if (it != cache.end()) {
            return it->second;
        }
        double value = g(k);
        cache.emplace(k, value);
        return value;
    };
    const std::uint64_t span = r - 1;
    auto estimate = [&](std::uint64_t m_intervals) {
        auto node = [&](std::uint64_t m) {
            return 1 + static_cast<std::uint64_t>(
                           (static_cast<unsigned __int128>(m) * span + m_intervals / 2) / m_intervals);
        };
        double sum = 0;
        std::uint64_t k_prev = node(0);
        double g_prev = g_cached(k_prev);
        for (std::uint64_t m = 1; m <= m_intervals; ++m) {
            const std::uint64_t k = node(m);
            const double gk = g_cached(k);
            sum += 0.5 * static_cast<double>(k - k_prev) * (g_prev + gk);
            k_prev = k;
            g_prev = gk;
        }
        return sum + 0.5 * (g_cached(1) + g_cached(r));
    };

    std::uint64_t m_intervals = options_.initial_intervals;
    double previous = estimate(m_intervals);
    out.exact = false;
    out.converged = false;
    double current = previous;
    while (true) {
        const std::uint64_t next = m_intervals * 2;
        if (next >= span) {
            current = exact_sum();
            out.exact = true;
            out.converged = true;
            out.terms_evaluated = r;
            break;
        }
        if (next > options_.max_intervals) {
            out.terms_evaluated = cache.size();
            break;
        }
        m_intervals = next;
        current = estimate(m_intervals);
        if (std::abs(current - previous) <= options_.relative_tolerance * std::abs(current)) {
            out.converged = true;
            out.terms_evaluated = cache.size();
            break;
        }
        previous = current;
    }
    out.value = prefactor * current;
    return out;
}

BoundReport observation_cost(const HamiltonianModel &model, const PauliSum &observable, const FormulaSpec &spec,
                             const CostOptions &options) {
    validate(spec);
    require_formula_1_or_2(spec.order, "observation_cost");
    ObservationCost cost(model, observable, spec.order, spec.t, options);
    auto eval = cost.evaluate(model.order(), spec.r);
    auto rep = make_report(BoundFamily::observation, spec, eval.value);
    rep.metadata["approx"] = "true";
    rep.metadata["order"] = format_order(model.order());
    rep.metadata["summation"] = eval.exact ? "exact" : "nested_grid";
    return rep;
}

// ---------------------------------------------------------------------------

ErrorKernel error_kernel(const DenseOperator &u, const DenseOperator &v, double t) {
    require_same_dim(u, v, "error_kernel");
    if (!is_unitary(u) || !is_unitary(v)) {
        throw DomainError("error_kernel: U and V must be unitary");
    }
    if (!(t > 0) || !std::isfinite(t)) {
        throw std::invalid_argument("error_kernel: t must be positive");
    }
    auto log = log_unitary_principal(u * v.adjoint());
    ErrorKernel out;
    out.e = log.generator * (-1.0 / t);
    out.eigenphase_bound = spectral_norm(out.e);
    out.branch_ambiguous = log.branch_ambiguous;
    return out;
}

double kernel_norm_bound(double b, double t) {
    if (!(b >= 0 && b <= 2)) {
        throw DomainError("kernel_norm_bound: B must lie in [0, 2]");
    }
    if (!(t > 0) || !std::isfinite(t)) {
        throw std::invalid_argument("kernel_norm_bound: t must be positive");
    }
    // arccos(1 - B^2/2) = 2 asin(B/2), without the cancellation near B = 0.
    return 2 * std::asin(b / 2) / t;
}

double kernel_observation_bound(const DenseOperator &e, const DenseOperator &o, double t) {
    require_same_dim(e, o, "kernel_observation_bound");
    require_hermitian(e, "kernel_observation_bound");
    require_hermitian(o, "kernel_observation_bound");
    return std::abs(t) * spectral_norm(commutator(e, o));
}

double kernel_random_input_bound(const DenseOperator &e, const DenseOperator &o, double t, unsigned n) {
    require_same_dim(e, o, "kernel_random_input_bound");
    require_hermitian(e, "kernel_random_input_bound");
    require_hermitian(o, "kernel_random_input_bound");
    if (e.rows() != (Eigen::Index{1} << n)) {
        throw DimensionError("kernel_random_input_bound: dimension is not 2^n");
    }
    const DenseOperator c = commutator(e, o);
    const double random = std::abs(t) * std::ldexp(trace_norm(c), -static_cast<int>(n));
    const double worst = std::abs(t) * spectral_norm(c);
    if (random > worst * (1 + 1e-12) + 1e-300) {
        throw NumericalError("kernel_random_input_bound: random-input value exceeds the worst-case value");
    }
    return random;
}

double commutativity_alpha(const DenseOperator &e, const DenseOperator &o) {
    require_same_dim(e, o, "commutativity_alpha");
    const double ne = spectral_norm(e);
    const double no = spectral_norm(o);
    if (ne == 0 || no == 0) {
        throw DomainError("commutativity_alpha: E and O must be nonzero");
    }
    return std::min(2.0, spectral_norm(commutator(e, o)) / (ne * no));
}

// ---------------------------------------------------------------------------

double observation_error_fixed_state(const DenseOperator &u, const DenseOperator &v, const DenseOperator &o,
                                     const DenseOperator &rho) {
    require_same_dim(u, v, "observation_error_fixed_state");
    require_same_dim(u, o, "observation_error_fixed_state");
    require_same_dim(u, rho, "observation_error_fixed_state");
    require_hermitian(o, "observation_error_fixed_state");
    if (!is_density_matrix(rho)) {
        throw DomainError("observation_error_fixed_state: rho is not a density matrix");
    }
    const DenseOperator ru = hermitian_part(conjugate(u, rho));
    const DenseOperator rv = hermitian_part(conjugate(v, rho));
    return std::abs(expectation(o, ru) - expectation(o, rv));
}

double observation_error_worst_case(const DenseOperator &u, const DenseOperator &v, const DenseOperator &o) {
    require_same_dim(u, v, "observation_error_worst_case");
    require_same_dim(u, o, "observation_error_worst_case");
    require_hermitian(o, "observation_error_worst_case");
    const DenseOperator diff = u.adjoint() * o * u - v.adjoint() * o * v;
    return spectral_norm(hermitian_part(diff));
}

EmpiricalObservationError::EmpiricalObservationError(const HamiltonianModel &model, const PauliSum &observable,
                                                     int formula_order, double t)
    : formula_order_(formula_order), t_(t), observable_(observable.to_dense()), props_(model) {
    validate(FormulaSpec{formula_order, t, 1});
    if (observable.num_qubits() != model.num_qubits()) {
        throw DimensionError("empirical error: observable and Hamiltonian qubit counts differ");
    }
    if (!observable.is_hermitian()) {
        throw DomainError("empirical error: observable is not Hermitian");
    }
    const DenseOperator u = exact_evolution(model, t);
    evolved_observable_ = u.adjoint() * observable_ * u;
}

double EmpiricalObservationError::operator()(const EvolutionOrder &order, std::uint64_t r) const {
    if (r == 0) {
        throw std::invalid_argument("empirical error: Trotter number must be positive");
    }
    const DenseOperator block = trotter_block(props_, order, formula_order_, t_ / static_cast<double>(r));
    const DenseOperator v = matrix_power(block, r);
    return spectral_norm(hermitian_part(evolved_observable_ - v.adjoint() * observable_ * v));
}

// ---------------------------------------------------------------------------

QuadratureResult simpson_integrate(const std::function<std::complex<double>(double)> &f, double a, double b,
                                   double relative_tolerance, int max_panels) {
    QuadratureResult out;
    if (a == b) {
        out.converged = true;
        return out;
    }
    // Node i of the grid with 2*panels intervals; values reused across levels.
    std::vector<std::complex<double>> values{f(a), f(0.5 * (a + b)), f(b)};
    auto simpson = [&](int panels) {
        const double h = (b - a) / (2.0 * panels);
        std::complex<double> sum = values.front() + values.back();
        for (int i = 1; i < 2 * panels; ++i) {
            sum += (i % 2 == 1 ? 4.0 : 2.0) * values[i];
        }
        return sum * (h / 3.0);
    };
    int panels = 1;
    std::complex<double> previous = simpson(panels);
    out.value = std::abs(previous);
    out.panels = panels;
    while (panels < max_panels) {
        const int next = panels * 2;
        std::vector<std::complex<double>> refined(2 * next + 1);
        for (int i = 0; i <= 2 * panels; ++i) {
            refined[2 * i] = values[i];
        }
        const double h = (b - a) / (2.0 * next);
        for (int i = 1; i < 2 * next; i += 2) {
            refined[i] = f(a + h * i);
        }
        values = std::move(refined);
        panels = next;
        const std::complex<double> current = simpson(panels);
        out.value = std::abs(current);
        out.panels = panels;
        const double diff = std::abs(current - previous);
        if (diff <= relative_tolerance * std::abs(current) || diff <= 1e-15 * std::abs(b - a)) {
            out.converged = true;
            return out;
        }
        previous = current;
    }
    return out;
}

QuadratureResult principal_observation_error(const DenseOperator &h_tilde, const DenseOperator &h_prime,
                                             const DenseOperator &o, const DenseOperator &rho, double t) {
    require_same_dim(h_tilde, h_prime, "principal_observation_error");
    require_same_dim(h_tilde, o, "principal_observation_error");
    require_same_dim(h_tilde, rho, "principal_observation_error");
    require_hermitian(h_tilde, "principal_observation_error");
    require_hermitian(h_prime, "principal_observation_error");
    require_hermitian(o, "principal_observation_error");
    if (!is_density_matrix(rho)) {
        throw DomainError("principal_observation_error: rho is not a density matrix");
    }
    const auto eig = herm_eig(h_tilde);
    const DenseOperator &w = eig.vectors;
    const RealVector &lambda = eig.values;
    // Tr([A, O] rho_t) = Tr(A [O, rho_t])
    const DenseOperator rho_t = hermitian_part(conjugate(exp_herm(eig, -t), rho));
    const DenseOperator q_hat = w.adjoint() * commutator(o, rho_t) * w;
    const DenseOperator hp_hat = w.adjoint() * h_prime * w;
    const Eigen::Index d = q_hat.rows();
    auto integrand = [&](double tau) {
        std::complex<double> sum = 0;
        for (Eigen::Index a = 0; a < d; ++a) {
            for (Eigen::Index b = 0; b < d; ++b) {
                sum += hp_hat(a, b) * std::polar(1.0, -tau * (lambda(a) - lambda(b))) * q_hat(b, a);
            }
        }
        return sum;
    };
    return simpson_integrate(integrand, 0.0, t);
}

QuadratureResult principal_bound_integral(const DenseOperator &h_tilde, const DenseOperator &h_prime,
                                          const DenseOperator &o, double t) {
    require_same_dim(h_tilde, h_prime, "principal_bound_integral");
    require_same_dim(h_tilde, o, "principal_bound_integral");
    require_hermitian(h_tilde, "principal_bound_integral");
    require_hermitian(h_prime, "principal_bound_integral");
    require_hermitian(o, "principal_bound_integral");
    const auto eig = herm_eig(h_tilde);
    const DenseOperator &w = eig.vectors;
    const RealVector &lambda = eig.values;
    const DenseOperator o_hat = w.adjoint() * o * w;
    const DenseOperator hp_hat = w.adjoint() * h_prime * w;
    const Eigen::Index d = o_hat.rows();
    DenseOperator o_tau(d, d);
    DenseOperator x(d, d);
    auto integrand = [&](double tau) {
        for (Eigen::Index b = 0; b < d; ++b) {
            for (Eigen::Index a = 0; a < d; ++a) {
                o_tau(a, b) = std::polar(1.0, tau * (lambda(a) - lambda(b))) * o_hat(a, b);
            }
        }
        x.noalias() = hp_hat * o_tau;
        return std::complex<double>(anti_hermitian_norm(x - x.adjoint()), 0);
    };
    auto out = simpson_integrate(integrand, 0.0, t);
    if (t < 0) {
        out.value = std::abs(out.value);
    }
    return out;
}

double residual_bound(double norm_o, double norm_h, double norm_hp, double t) {
    if (!(norm_o >= 0) || !(norm_h >= 0) || !(norm_hp >= 0)) {
        throw std::invalid_argument("residual_bound: norms must be non-negative");
    }
    const double x = 2 * std::abs(t) * norm_hp;
    return norm_o * std::exp(2 * std::abs(t) * norm_h) * (std::expm1(x) - x);
}

DenseOperator two_term_M(const HamiltonianModel &model, const FormulaSpec &spec, TwoTermConvention convention) {
    validate(spec);
    if (spec.order != 1) {
        throw UnsupportedOrderError("two_term_M: the two-part shortcut is for PF1");
    }
    if (model.num_summands() != 2) {
        throw std::invalid_argument("two_term_M: the Hamiltonian must have exactly two summands");
    }
    const double c = convention == TwoTermConvention::verified ? spec.step() / 2 : spec.step();
    // H^(1) is the summand applied first.
    return model.ordered_summand(0).to_dense() * std::complex<double>(c, 0);
}

double two_term_M_bound(const DenseOperator &o, const DenseOperator &rho, const DenseOperator &m) {
    require_same_dim(o, rho, "two_term_M_bound");
    require_same_dim(o, m, "two_term_M_bound");
    require_hermitian(m, "two_term_M_bound");
    return spectral_norm(o) * trace_norm(commutator(rho, m)) + spectral_norm(commutator(o, m));
}

// ---------------------------------------------------------------------------

TrotterSearchResult trotter_number_search(const std::function<double(std::uint64_t)> &bound_fn, double epsilon,
                                          std::uint64_t cap) {
    if (!(epsilon > 0)) {
        throw std::invalid_argument("trotter_number_search: epsilon must be positive");
    }
    if (cap == 0) {
        throw std::invalid_argument("trotter_number_search: cap must be positive");
    }
    std::unordered_map<std::uint64_t, double> memo;
    auto f = [&](std::uint64_t r) {
        auto it = memo.find(r);
        if (it != memo.end()) {
            return it->second;
        }
        const double value = bound_fn(r);
        if (std::isnan(value)) {
            throw NumericalError("trotter_number_search: bound evaluated to NaN at r = " + std::to_string(r));
        }
        memo.emplace(r, value);
        return value;
    };
    auto fail = [&]() -> TrotterSearchResult {
        throw NumericalError("trotter_number_search: bound does not reach epsilon for r <= " + std::to_string(cap));
    };

    // Doubling. A feasible r whose double is infeasible is a dip, not the tail.
    std::uint64_t lo = 0;  // last infeasible r (0: none)
    std::uint64_t hi = 0;
    for (std::uint64_t r = 1;; r *= 2) {
        if (r > cap) {
            if (lo < cap && f(cap) <= epsilon) {
                hi = cap;
                break;
            }
            return fail();
        }
        if (f(r) <= epsilon) {
            if (r == cap || f(std::min(2 * r, cap)) <= epsilon) {
                hi = r;
                break;
            }
        }
        lo = r;
    }
    if (hi == 1) {
        return {1, f(1), memo.size()};
    }
    // Bisection on (lo, hi]: f(lo) > eps or lo is a dip left behind, f(hi) <= eps.
    std::uint64_t low = std::max<std::uint64_t>(lo, hi / 2);
    std::uint64_t high = hi;
    while (high - low > 1) {
        const std::uint64_t mid = low + (high - low) / 2;
        if (f(mid) <= epsilon) {
            high = mid;
        } else {
            low = mid;
        }
    }
    std::uint64_t r_star = high;
    // Rescan the window just below; keep moving down while it stays feasible.
    bool moved = true;
    while (moved) {
        moved = false;
        for (std::uint64_t d = 4; d >= 1; --d) {
            if (r_star > d && f(r_star - d) <= epsilon) {
                r_star -= d;
                moved = true;
                break;
            }
        }
    }
    if (f(r_star) > epsilon || (r_star > 1 && f(r_star - 1) <= epsilon)) {
        throw NumericalError("trotter_number_search: verification failed at r = " + std::to_string(r_star));
    }
    return {r_star, f(r_star), memo.size()};
}

}  // namespace trotterobs
