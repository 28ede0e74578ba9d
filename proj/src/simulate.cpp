#include "schur/simulate.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "schur/oracle.hpp"
#include "schur/rng.hpp"
#include "schur/sampling.hpp"

namespace schur {

namespace {

// Task-specific pieces shared by both simulation modes.
struct TaskContext {
    SimTask task;
    int threshold_t = 1;
    bool parity_relabeled = false;
    Rational q0 = 1, q1 = 0;  // postprocess; unused for kWeight
    Rational theoretical;
};

TaskContext make_task_context(const ScenarioConfig& cfg) {
    TaskContext ctx;
    ctx.task = cfg.task;
    switch (cfg.task) {
        case SimTask::kWeight:
            ctx.theoretical = success_standard(cfg.n, cfg.k);
            break;
        case SimTask::kThreshold: {
            ctx.threshold_t = cfg.threshold_t;
            const auto post = threshold_two_sided(cfg.n, cfg.threshold_t);
            ctx.q0 = post.q0;
            ctx.q1 = post.q1;
            const auto f = SymmetricBooleanFunction::threshold(cfg.n, cfg.threshold_t);
            ctx.theoretical =
                function_success_profile(f, standard_strategy(cfg.n), post)[cfg.k];
            break;
        }
        case SimTask::kParity: {
            const auto alg = parity_algorithm(cfg.n);
            ctx.parity_relabeled = alg.relabeled;
            ctx.q0 = alg.post.q0;
            ctx.q1 = alg.post.q1;
            ctx.theoretical = alg.profile[cfg.k];
            break;
        }
    }
    return ctx;
}

// Given the sampled outcome l, decide success for this trial. Binary tasks
// consume one more exact uniform for the (q0, q1) relabeling.
bool trial_success(const TaskContext& ctx, int n, int k, int l, SplitMix64& rng) {
    switch (ctx.task) {
        case SimTask::kWeight:
            return l == k;
        case SimTask::kThreshold: {
            const int raw = l >= ctx.threshold_t ? 1 : 0;  // f(guess)
            const Rational out0 = raw == 0 ? ctx.q0 : ctx.q1;
            const int output = rng.uniform_rational_128() < out0 ? 0 : 1;
            return output == (k >= ctx.threshold_t ? 1 : 0);
        }
        case SimTask::kParity: {
            int raw = l % 2;  // 0 = reads even
            if (ctx.parity_relabeled) raw = 1 - raw;
            const Rational out0 = raw == 0 ? ctx.q0 : ctx.q1;
            const int output = rng.uniform_rational_128() < out0 ? 0 : 1;
            return output == k % 2;
        }
    }
    return false;
}

int sample_exact(const OutcomeDistribution& dist, SplitMix64& rng) {
    const Rational u = rng.uniform_rational_128();
    Rational cum = 0;
    int last = 0;
    for (const auto& [l, p] : dist.probs) {
        cum += p;
        last = l;
        if (u < cum) return l;
    }
    return last;
}

TrialReport finalize(const ScenarioConfig& cfg, const TaskContext& ctx, long successes) {
    TrialReport rep;
    rep.n = cfg.n;
    rep.k = cfg.k;
    rep.trials = cfg.trials;
    rep.successes = successes;
    rep.empirical_rate = static_cast<double>(successes) / static_cast<double>(cfg.trials);
    rep.theoretical = ctx.theoretical;
    // Agresti-style shrunk estimate keeps the error bar positive at the
    // boundary rates 0 and 1.
    const double pt = (static_cast<double>(successes) + 1.0) /
                      (static_cast<double>(cfg.trials) + 2.0);
    rep.standard_error = std::sqrt(pt * (1.0 - pt) / static_cast<double>(cfg.trials));
    rep.z_score = (rep.empirical_rate - ctx.theoretical.get_d()) / rep.standard_error;
    return rep;
}

TrialReport run_exact_sampled(const ScenarioConfig& cfg, const TaskContext& ctx) {
    const auto dist = weight_outcome_distribution(cfg.n, cfg.k);
    long successes = 0;
    for (long t = 0; t < cfg.trials; ++t) {
        SplitMix64 rng = SplitMix64::derive(cfg.seed, static_cast<std::uint64_t>(t));
        const int l = sample_exact(dist, rng);
        if (trial_success(ctx, cfg.n, cfg.k, l, rng)) ++successes;
    }
    return finalize(cfg, ctx, successes);
}

TrialReport run_statevector(const ScenarioConfig& cfg, const TaskContext& ctx) {
    const int n = cfg.n;
    std::vector<DenseOperator> projectors;
    for (int l = 0; l <= n / 2; ++l) {
        const Partition lambda(l == 0 ? std::vector<int>{n} : std::vector<int>{n - l, l});
        projectors.push_back(build_projector(n, lambda));
    }
    const StateVector input = basis_state(BitString::weight_string(n, cfg.k));

    long successes = 0;
    for (long t = 0; t < cfg.trials; ++t) {
        SplitMix64 rng = SplitMix64::derive(cfg.seed, static_cast<std::uint64_t>(t));
        const LocalUnitary u = haar_local_unitary(rng);
        // Fisher-Yates permutation of the qubits.
        std::vector<int> img(n);
        std::iota(img.begin(), img.end(), 0);
        for (int i = n - 1; i > 0; --i) {
            std::swap(img[i], img[rng.below(static_cast<std::uint64_t>(i + 1))]);
        }
        const StateVector psi = apply_scramble(input, u, QubitPermutation(img));

        double uniform = rng.uniform_double();
        int l = n / 2;
        for (int j = 0; j <= n / 2; ++j) {
            const double p = std::max(0.0, (psi.adjoint() * projectors[j] * psi).value().real());
            uniform -= p;
            if (uniform < 0) { l = j; break; }
        }
        if (trial_success(ctx, n, cfg.k, l, rng)) ++successes;
    }
    return finalize(cfg, ctx, successes);
}

}  // namespace

void ScenarioConfig::validate() const {
    if (n < 1 || k < 0 || 2 * k > n) throw std::domain_error("requires 0 <= k <= n/2");
    if (trials < 1) throw std::domain_error("trials must be >= 1");
    if (mode == SimMode::kStatevector && n > 6) {
        throw std::domain_error("statevector mode limited to n <= 6");
    }
    if (task == SimTask::kThreshold && (threshold_t < 1 || 2 * threshold_t > n)) {
        throw std::domain_error("threshold requires 1 <= t <= n/2");
    }
    if (task == SimTask::kParity && n < 2) {
        throw std::domain_error("parity requires n >= 2");
    }
}

TrialReport run_scenario(const ScenarioConfig& cfg) {
    cfg.validate();
    const TaskContext ctx = make_task_context(cfg);
    return cfg.mode == SimMode::kExactSampled ? run_exact_sampled(cfg, ctx)
                                              : run_statevector(cfg, ctx);
}

std::vector<TrialReport> sweep(const ScenarioConfig& base) {
    std::vector<TrialReport> reports;
    for (int k = 0; k <= base.n / 2; ++k) {
        ScenarioConfig cfg = base;
        cfg.k = k;
        cfg.seed = SplitMix64::derive_seed(base.seed, static_cast<std::uint64_t>(k));
        reports.push_back(run_scenario(cfg));
    }
    return reports;
}

std::string to_string(SimMode mode) {
    return mode == SimMode::kExactSampled ? "exact" : "statevector";
}

std::string to_string(SimTask task) {
    switch (task) {
        case SimTask::kWeight: return "weight";
        case SimTask::kThreshold: return "threshold";
        case SimTask::kParity: return "parity";
    }
    return "?";
}

}  // namespace schur
