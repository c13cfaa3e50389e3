#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <qroulette/quantum.hpp>
#include <qroulette/rng.hpp>

#include <cmath>
#include <cstdint>
#include <vector>

using namespace qroulette;
using namespace qroulette::quantum;

namespace {

StateVector random_unit_state(int n_qubits, SplitMix64& rng) {
    StateVector s{n_qubits,
                  std::vector<double>(std::size_t{1} << n_qubits, 0.0)};
    for (double& a : s.amplitudes) a = 2.0 * rng.next_double() - 1.0;
    const double norm = l2_norm(s);
    for (double& a : s.amplitudes) a /= norm;
    return s;
}

void check_close(const StateVector& a, const StateVector& b, double tol) {
    REQUIRE(a.amplitudes.size() == b.amplitudes.size());
    for (std::size_t i = 0; i < a.amplitudes.size(); ++i)
        CHECK(std::fabs(a.amplitudes[i] - b.amplitudes[i]) <= tol);
}

}  // namespace

TEST_CASE("basis_state is |0...0>") {
    const StateVector one = basis_state(1);
    REQUIRE(one.amplitudes.size() == 2);
    CHECK(one.amplitudes[0] == 1.0);
    CHECK(one.amplitudes[1] == 0.0);

    const StateVector two = basis_state(2);
    REQUIRE(two.amplitudes.size() == 4);
    CHECK(two.amplitudes[0] == 1.0);
    for (std::size_t i = 1; i < 4; ++i) CHECK(two.amplitudes[i] == 0.0);
    CHECK(l2_norm(two) == 1.0);

    CHECK_THROWS_AS(basis_state(0), std::invalid_argument);
    CHECK_THROWS_AS(basis_state(kMaxQubits + 1), std::invalid_argument);
}

TEST_CASE("walsh_hadamard single qubit column") {
    const StateVector s = walsh_hadamard(basis_state(1));
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    CHECK(std::fabs(s.amplitudes[0] - inv_sqrt2) <= 1e-15);
    CHECK(std::fabs(s.amplitudes[1] - inv_sqrt2) <= 1e-15);
}

TEST_CASE("walsh_hadamard two qubits gives the flat state") {
    const StateVector s = walsh_hadamard(basis_state(2));
    for (double a : s.amplitudes) CHECK(std::fabs(a - 0.5) <= 1e-15);
}

TEST_CASE("walsh_hadamard is an involution") {
    SplitMix64 rng(3);
    for (int nq : {1, 2, 5, 8}) {
        const StateVector s = random_unit_state(nq, rng);
        check_close(walsh_hadamard(walsh_hadamard(s)), s, 1e-12);
    }
}

TEST_CASE("walsh_hadamard rejects malformed states") {
    CHECK_THROWS_AS(walsh_hadamard(StateVector{2, {1.0, 0.0, 0.0}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(walsh_hadamard(StateVector{0, {1.0}}),
                    std::invalid_argument);
}

TEST_CASE("uniform_state amplitudes and success probability") {
    const StateVector s2 = uniform_state(2);
    for (double a : s2.amplitudes) CHECK(std::fabs(a - 0.5) <= 1e-15);

    const StateVector s10 = uniform_state(10);
    for (double a : s10.amplitudes) CHECK(std::fabs(a - 0.03125) <= 1e-15);
    for (std::size_t t : {0UL, 511UL, 1023UL})
        CHECK(success_probability(s10, t) == doctest::Approx(1.0 / 1024.0));
}

TEST_CASE("oracle_phase_flip worked example and properties") {
    const StateVector flipped =
        oracle_phase_flip(StateVector{2, {0.5, 0.5, 0.5, 0.5}}, 0);
    CHECK(flipped.amplitudes[0] == -0.5);
    CHECK(flipped.amplitudes[1] == 0.5);

    SplitMix64 rng(4);
    const StateVector s = random_unit_state(4, rng);
    check_close(oracle_phase_flip(oracle_phase_flip(s, 7), 7), s, 0.0);

    StateVector zero_target = s;
    zero_target.amplitudes[3] = 0.0;
    const StateVector after = oracle_phase_flip(zero_target, 3);
    check_close(after, zero_target, 0.0);

    CHECK_THROWS_AS(oracle_phase_flip(StateVector{1, {1.0, 0.0}}, 2),
                    std::invalid_argument);
}

TEST_CASE("diffusion worked example, fixed point, involution") {
    const StateVector out = diffusion(StateVector{2, {-0.5, 0.5, 0.5, 0.5}});
    CHECK(std::fabs(out.amplitudes[0] - 1.0) <= 1e-15);
    for (std::size_t i = 1; i < 4; ++i)
        CHECK(std::fabs(out.amplitudes[i]) <= 1e-15);

    const StateVector u = uniform_state(5);
    check_close(diffusion(u), u, 1e-15);

    SplitMix64 rng(6);
    for (int nq : {1, 3, 6}) {
        const StateVector s = random_unit_state(nq, rng);
        check_close(diffusion(diffusion(s)), s, 1e-12);
    }
}

TEST_CASE("diffusion equals the reflection matrix -I + (2/N) ones") {
    SplitMix64 rng(8);
    for (int nq : {1, 2, 3, 4}) {
        const std::size_t n = std::size_t{1} << nq;
        const StateVector s = random_unit_state(nq, rng);
        const StateVector fast = diffusion(s);
        for (std::size_t i = 0; i < n; ++i) {
            double acc = 0.0;
            for (std::size_t j = 0; j < n; ++j) {
                const double entry =
                    (i == j ? -1.0 : 0.0) + 2.0 / static_cast<double>(n);
                acc += entry * s.amplitudes[j];
            }
            CHECK(std::fabs(fast.amplitudes[i] - acc) <= 1e-12);
        }
    }
}

TEST_CASE("grover_iteration solves N=4 in one step") {
    const StateVector s = grover_iteration(uniform_state(2), 0);
    CHECK(std::fabs(s.amplitudes[0] - 1.0) <= 1e-12);
    for (std::size_t i = 1; i < 4; ++i) CHECK(std::fabs(s.amplitudes[i]) <= 1e-12);
    CHECK(success_probability(s, 0) == doctest::Approx(1.0));
}

TEST_CASE("grover_iteration at N=2 yields probability one half") {
    const StateVector s = grover_iteration(uniform_state(1), 0);
    CHECK(success_probability(s, 0) == doctest::Approx(0.5));
}

TEST_CASE("operators preserve the L2 norm on random states") {
    SplitMix64 rng(9);
    for (int nq = 1; nq <= 12; ++nq) {
        const int reps = 1000;
        for (int r = 0; r < reps; ++r) {
            const StateVector s = random_unit_state(nq, rng);
            CHECK(std::fabs(l2_norm(walsh_hadamard(s)) - 1.0) <= 1e-12);
            CHECK(std::fabs(l2_norm(oracle_phase_flip(s, 0)) - 1.0) <= 1e-12);
            CHECK(std::fabs(l2_norm(diffusion(s)) - 1.0) <= 1e-12);
            CHECK(std::fabs(l2_norm(grover_iteration(s, 0)) - 1.0) <= 1e-12);
        }
    }
}

TEST_CASE("success_probability worked values") {
    CHECK(success_probability(StateVector{2, {1, 0, 0, 0}}, 0) == 1.0);
    CHECK(success_probability(StateVector{2, {-0.5, 0.5, 0.5, 0.5}}, 0) ==
          doctest::Approx(0.25));
}

TEST_CASE("measure only returns states with weight") {
    const StateVector s{1, {0.0, 1.0}};
    SplitMix64 rng(10);
    for (int i = 0; i < 1000; ++i) CHECK(measure(s, rng) == 1);
}

TEST_CASE("measure frequencies on the flat state stay within 4 sigma") {
    const StateVector s = uniform_state(6);
    const DiscreteSampler sampler = measurement_sampler(s);
    SplitMix64 rng = derive_stream(42, {8});
    const int n = 100000;
    std::vector<int> counts(64, 0);
    for (int i = 0; i < n; ++i) ++counts[sampler.sample(rng)];
    const double p = 1.0 / 64.0;
    const double sigma = std::sqrt(p * (1.0 - p) / n);
    for (int c : counts)
        CHECK(std::fabs(static_cast<double>(c) / n - p) <= 4.0 * sigma);
}

TEST_CASE("measure is deterministic for a fixed seed") {
    const StateVector s = uniform_state(4);
    SplitMix64 a(777), b(777);
    for (int i = 0; i < 500; ++i) CHECK(measure(s, a) == measure(s, b));
}

TEST_CASE("measurement rejects unnormalized states") {
    SplitMix64 rng(12);
    const StateVector bad{1, {1.0, 1.0}};
    CHECK_THROWS_AS(measure(bad, rng), std::domain_error);
    CHECK_THROWS_AS(measurement_sampler(bad), std::domain_error);
}

TEST_CASE("closed_form_probability worked values") {
    CHECK(closed_form_probability(4, 1) == doctest::Approx(1.0));
    for (std::uint64_t n : {2ULL, 16ULL, 1024ULL})
        CHECK(closed_form_probability(n, 0) ==
              doctest::Approx(1.0 / static_cast<double>(n)));
    CHECK(std::fabs(closed_form_probability(1024, 25) - 0.999461244744) <= 1e-9);
}

TEST_CASE("iterated dynamics match the closed form") {
    for (int nq = 2; nq <= 12; ++nq) {
        const std::uint64_t n = std::uint64_t{1} << nq;
        const GroverTrace trace = grover_trace(nq, 0, 2 * ceil_sqrt(n));
        for (const auto& rec : trace)
            CHECK(std::fabs(rec.success_probability -
                            closed_form_probability(n, rec.k)) <= 1e-9);
    }
}

TEST_CASE("non-target amplitudes stay equal from a uniform start") {
    for (int nq : {2, 4, 7, 10}) {
        StateVector s = uniform_state(nq);
        const std::size_t target = 1;
        const std::uint64_t steps = 2 * ceil_sqrt(std::uint64_t{1} << nq);
        for (std::uint64_t k = 0; k < steps; ++k) {
            s = grover_iteration(std::move(s), target);
            double lo = 1e300, hi = -1e300;
            for (std::size_t i = 0; i < s.amplitudes.size(); ++i) {
                if (i == target) continue;
                lo = std::min(lo, s.amplitudes[i]);
                hi = std::max(hi, s.amplitudes[i]);
            }
            CHECK(hi - lo <= 1e-12);
        }
    }
}

TEST_CASE("iterations_to_threshold worked values") {
    const auto n4 = iterations_to_threshold(2, 0.5);
    CHECK(n4.k == 1);
    CHECK(n4.probability == doctest::Approx(1.0));
    CHECK(n4.reached);

    const auto n2 = iterations_to_threshold(1, 0.5);
    CHECK(n2.k == 1);
    CHECK(n2.probability == doctest::Approx(0.5));
    CHECK(n2.reached);

    const auto big = iterations_to_threshold(10, 0.5);
    CHECK(big.k == 13);
    CHECK(big.reached);
    CHECK(big.probability >= 0.55);
    CHECK(big.probability <= 0.56);
    CHECK(big.k <= ceil_sqrt(1024));
    CHECK(std::fabs(big.probability - closed_form_probability(1024, 13)) <= 1e-9);
    CHECK(closed_form_probability(1024, 12) < 0.5);
    CHECK(std::fabs(closed_form_probability(1024, 12) - 0.495979092430) <= 1e-9);
}

TEST_CASE("iteration counts across register sizes") {
    const std::uint64_t expected[][2] = {{3, 1},  {4, 2},  {5, 2},  {6, 3},
                                         {7, 4},  {8, 6},  {9, 9},  {10, 13},
                                         {11, 18}, {12, 25}};
    for (const auto& row : expected) {
        const auto r = iterations_to_threshold(static_cast<int>(row[0]), 0.5);
        CHECK(r.k == row[1]);
        CHECK(r.reached);
        CHECK(r.k <= ceil_sqrt(std::uint64_t{1} << row[0]));
    }
}

TEST_CASE("unreachable thresholds report the best step seen") {
    const auto r = iterations_to_threshold(1, 0.9);
    CHECK(!r.reached);
    CHECK(r.k == 1);
    CHECK(r.probability == doctest::Approx(0.5));
}

TEST_CASE("iterations_to_threshold validates its arguments") {
    CHECK_THROWS_AS(iterations_to_threshold(0, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(iterations_to_threshold(25, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(iterations_to_threshold(3, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(iterations_to_threshold(3, 1.5), std::invalid_argument);
    CHECK_THROWS_AS(iterations_to_threshold(3, 0.5, 8), std::invalid_argument);
}

TEST_CASE("grover_trace records every step") {
    const GroverTrace trace = grover_trace(3, 0, 5);
    REQUIRE(trace.size() == 6);
    CHECK(trace[0].k == 0);
    CHECK(trace[0].target_amplitude == doctest::Approx(1.0 / std::sqrt(8.0)));
    StateVector s = uniform_state(3);
    for (std::size_t i = 0; i < trace.size(); ++i) {
        CHECK(trace[i].k == i);
        CHECK(std::fabs(trace[i].target_amplitude - s.amplitudes[0]) <= 1e-15);
        CHECK(std::fabs(trace[i].norm - 1.0) <= 1e-12);
        CHECK(trace[i].success_probability ==
              doctest::Approx(trace[i].target_amplitude *
                              trace[i].target_amplitude));
        if (i + 1 < trace.size()) s = grover_iteration(std::move(s), 0);
    }
}

TEST_CASE("min_increase_audit accepts the search traces") {
    for (int nq = 3; nq <= 12; ++nq) {
        const std::uint64_t n = std::uint64_t{1} << nq;
        const auto search = iterations_to_threshold(nq, 0.5);
        const GroverTrace trace = grover_trace(nq, 0, search.k);
        const AuditResult audit = min_increase_audit(trace, n);
        CHECK(audit.pass);
        CHECK(!audit.first_violation.has_value());
        CHECK(audit.checked_pairs == search.k);
    }
}

TEST_CASE("min_increase_audit flags an artificially flattened step") {
    const GroverTrace trace = grover_trace(10, 0, 13);
    GroverTrace damaged = trace;
    damaged[5].target_amplitude = damaged[4].target_amplitude;
    damaged[5].success_probability =
        damaged[5].target_amplitude * damaged[5].target_amplitude;
    const AuditResult audit = min_increase_audit(damaged, 1024);
    CHECK(!audit.pass);
    REQUIRE(audit.first_violation.has_value());
    CHECK(*audit.first_violation == 5);
}

TEST_CASE("min_increase_audit requires N at least 8") {
    const GroverTrace trace = grover_trace(2, 0, 1);
    CHECK_THROWS_AS(min_increase_audit(trace, 4), std::invalid_argument);
}

TEST_CASE("ceil_sqrt exact values") {
    CHECK(ceil_sqrt(1) == 1);
    CHECK(ceil_sqrt(2) == 2);
    CHECK(ceil_sqrt(4) == 2);
    CHECK(ceil_sqrt(15) == 4);
    CHECK(ceil_sqrt(16) == 4);
    CHECK(ceil_sqrt(17) == 5);
    CHECK(ceil_sqrt(1024) == 32);
    CHECK(ceil_sqrt(1ULL << 40) == (1ULL << 20));
    CHECK(ceil_sqrt((1ULL << 40) + 1) == (1ULL << 20) + 1);
}
