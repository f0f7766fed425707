// Acceptance suite: every check is exact (equality over the field), each
// criterion prints one pass/fail line with its runtime, and the process
// exits with the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "hopfinv/constructions.hpp"
#include "hopfinv/invariants.hpp"
#include "oracle.hpp"
#include "specs.hpp"

using namespace hopfinv;

namespace {

const FieldSpec kQ = FieldSpec::rational();

void require(bool condition, const std::string& what) {
    if (!condition)
        throw std::runtime_error(what);
}

std::vector<std::vector<Scalar>> basis_coords(const ActionSpec& spec,
                                              const std::vector<FreePoly>& basis,
                                              std::uint32_t degree) {
    std::vector<std::vector<Scalar>> out;
    for (const auto& f : basis)
        out.push_back(oracle::coords(spec, f, degree));
    return out;
}

// 1. Scalar actions: Veronese dimensions and a single burst of generators.
void criterion_scalar_veronese() {
    struct Case {
        ActionSpec spec;
        std::uint32_t t;
    };
    const Case cases[] = {{testspecs::scalar_spec(kQ, 2, "-1"), 2},
                          {testspecs::scalar_spec(FieldSpec::prime(7), 2, "2"), 3}};
    for (const Case& c : cases) {
        const ProbeReport report = probe_generation(c.spec, 8);
        for (std::uint32_t n = 1; n <= 8; ++n) {
            const std::uint64_t expected_dim = n % c.t == 0 ? (1ull << n) : 0;
            require(report.rows[n - 1].dim_invariants == expected_dim,
                    "dim R^H_" + std::to_string(n) + " != expected Veronese dimension");
            const std::uint64_t expected_new = n == c.t ? (1ull << c.t) : 0;
            require(report.rows[n - 1].new_generators == expected_new,
                    "new generators at degree " + std::to_string(n) + " off");
            require(invariant_basis(c.spec, n).size() == expected_dim,
                    "direct basis dimension mismatch at degree " + std::to_string(n));
        }
        require(report.minimal_degree && *report.minimal_degree == c.t,
                "minimal degree != t");
    }
}

// 2. Non-scalar group action: one indispensable generator per degree.
void criterion_nonscalar_group() {
    const ActionSpec spec = testspecs::nonscalar_diag_spec();
    const ProbeReport report = probe_generation(spec, 8);
    std::vector<std::vector<FreePoly>> bases(9);
    for (std::uint32_t n = 1; n <= 8; ++n) {
        bases[n] = invariant_basis(spec, n);
        require(report.rows[n - 1].dim_invariants == (1ull << (n - 1)),
                "dim R^H_n != 2^{n-1} at degree " + std::to_string(n));
        require(report.rows[n - 1].new_generators == 1,
                "new_gens != 1 at degree " + std::to_string(n));
        if (n < 2)
            continue;
        // x2 x1^{n-2} x2 generates: inside R^H_n, outside G_n
        std::vector<GenIndex> indices{2};
        for (std::uint32_t k = 0; k < n - 2; ++k)
            indices.push_back(1);
        indices.push_back(2);
        const auto target = oracle::coords(
            spec, FreePoly::monomial(spec.field(), 2, Word(indices), Scalar::one(kQ)), n);
        require(oracle::in_span(basis_coords(spec, bases[n], n), target),
                "indispensable word not in R^H_n at degree " + std::to_string(n));
        const auto decomposable = decomposable_component(spec, n, bases);
        require(!oracle::in_span(basis_coords(spec, decomposable, n), target),
                "indispensable word lies in G_n at degree " + std::to_string(n));
    }
}

// 3. Sweedler action: sparse engine vs dense oracle, pinned degree-3 basis.
void criterion_sweedler() {
    const ActionSpec spec = testspecs::sweedler_spec();
    std::size_t degrees_with_new = 0;
    const ProbeReport report = probe_generation(spec, 6);
    for (std::uint32_t n = 1; n <= 6; ++n) {
        const auto basis = invariant_basis(spec, n);
        require(basis.size() == oracle::invariant_dim(spec, n),
                "sparse and dense dimensions differ at degree " + std::to_string(n));
        for (const auto& f : basis)
            require(oracle::vector_in_kernel(spec, n, oracle::coords(spec, f, n)),
                    "engine basis vector fails the dense kernel at degree " +
                        std::to_string(n));
        if (report.rows[n - 1].new_generators > 0)
            ++degrees_with_new;
    }
    const auto basis3 = invariant_basis(spec, 3);
    require(basis3.size() == 2, "degree-3 dimension != 2");
    require(basis3[0] == testspecs::poly(spec, "x1*x1*x1"), "degree-3 basis[0] off");
    require(basis3[1] == testspecs::poly(spec, "x1*x2*x2 - x2*x1*x2 + x2*x2*x1"),
            "degree-3 basis[1] off");
    require(degrees_with_new >= 3, "new generators in fewer than 3 degrees <= 6");
}

// 4. (y - z) c_n(y, z) = y^n - z^n.
void criterion_cn_identity() {
    for (const FieldSpec& field : {FieldSpec::rational(), FieldSpec::prime(101)}) {
        std::mt19937_64 rng(41);
        std::uniform_int_distribution<long> value(-99, 99);
        for (std::uint32_t n = 1; n <= 32; ++n)
            for (int trial = 0; trial < 100; ++trial) {
                const Scalar y = Scalar::from_int(field, value(rng));
                const Scalar z = Scalar::from_int(field, value(rng));
                require((y - z) * cn_eval(n, y, z) == y.pow(n) - z.pow(n),
                        "telescoping identity fails for n = " + std::to_string(n) +
                            " over " + field.to_string());
            }
    }
}

// 5. Block element: support guarantee, c = 0 kills the image, and the
// residual stays inside the block one index-sum higher.
void criterion_block_element() {
    for (const char* lambda : {"0", "1", "2"}) {
        const ActionSpec spec = testspecs::jordan_gf5_spec(lambda, "3");
        const Scalar eta = Scalar::one(spec.field());
        const Scalar mu = Scalar::from_int(spec.field(), 2);
        for (std::uint32_t i = 1; i <= 3; ++i) {
            const std::uint32_t s = i <= 2 ? 2 : 3;
            for (std::uint32_t n = 2; n <= 4; ++n) {
                const JairVerifyReport report = jair_verify(spec, "d", i, n);
                require(report.c == cn_eval(n, eta, mu), "reported c != c_n(eta, mu)");
                require(report.prefix_present,
                        "supp(f) misses x_i F at i = " + std::to_string(i));
                require(!report.element
                             .coeff(Word::single(i).concat(Word::repeated(s, n - 1)))
                             .is_zero(),
                        "x_i x_s^{n-1} missing from the support");
                if (n == 4) { // c_4(1, 2) = 15 = 0 over GF(5)
                    require(report.c_is_zero, "c_4(1,2) should vanish over GF(5)");
                    require(report.image_zero_when_c_zero && report.image.is_zero(),
                            "image nonzero although c = 0");
                } else {
                    require(!report.c_is_zero, "c_n unexpectedly zero");
                    require(report.residual_supported_ok,
                            "residual leaves the block support");
                }
            }
        }
    }
}

// 6. Splices of computed invariants stay invariant through total degree 6.
void criterion_insert_closure() {
    for (const ActionSpec& spec :
         {testspecs::nonscalar_diag_spec(), testspecs::sweedler_spec()}) {
        std::vector<std::vector<FreePoly>> bases(7);
        for (std::uint32_t d = 0; d <= 6; ++d)
            bases[d] = invariant_basis(spec, d);
        for (std::uint32_t df = 0; df <= 6; ++df)
            for (std::uint32_t dk = 0; df + dk <= 6; ++dk)
                for (std::uint32_t i = 0; i <= df; ++i)
                    for (const auto& f : bases[df])
                        for (const auto& g : bases[dk])
                            require(is_invariant(spec, insert(i, df - i, dk, f, g)),
                                    "insert(" + std::to_string(i) + "," +
                                        std::to_string(df - i) + "," +
                                        std::to_string(dk) + ") left the invariants");
    }
}

// 7. Prefix pumping keeps invariance and the pumped prefix, without
// cancellation.
void criterion_prefix_pumping() {
    const ActionSpec spec = testspecs::nonscalar_diag_spec();
    const FreePoly f = testspecs::poly(spec, "x2*x2");
    for (std::uint32_t k = 1; k <= 4; ++k) {
        FreePoly out = FreePoly::zero(kQ, 2);
        try {
            out = build_prefix_invariant(spec, f, 2, k);
        } catch (const Error& e) {
            require(false, std::string("unexpected error: ") + e.what());
        }
        require(is_invariant(spec, out), "pumped polynomial not invariant");
        require(out.has_prefix_in_support(Word::repeated(2, k)),
                "pumped prefix missing at k = " + std::to_string(k));
    }
}

// 8. Characteristic-p experiment: the 2x2 nilpotent block contradicts the
// commuting-case prediction; a 1x1 block confirms it.
void criterion_frobenius() {
    const JairVerifyReport nil =
        jair_verify(testspecs::frobenius_gf3_spec(), "d", 1, 1, true);
    require(nil.frobenius.has_value() && nil.frobenius->applicable,
            "Frobenius check not run");
    const ActionSpec& spec3 = testspecs::frobenius_gf3_spec();
    require(nil.frobenius->image ==
                testspecs::poly(spec3, "x2*x1*x1 + x1*x2*x1 + x1*x1*x2"),
            "delta(f^3) differs from the expected three-term sum");
    require(!nil.frobenius->image_is_zero, "delta(f^3) unexpectedly zero");
    require(!nil.frobenius->matches_commuting_case,
            "discrepancy with the commuting-case prediction not flagged");

    const JairVerifyReport diag =
        jair_verify(testspecs::frobenius_gf3_diag_spec(), "d", 1, 2, true);
    require(diag.frobenius.has_value() && diag.frobenius->applicable,
            "commuting-case check not run");
    require(diag.frobenius->image_is_zero, "commuting case: delta(f^p) != 0");
    require(diag.frobenius->matches_commuting_case, "commuting case not confirmed");
}

// 9. Twisted Leibniz rule and the diagonal weight formula, 500 cases each.
void criterion_action_properties() {
    const FieldSpec f7 = FieldSpec::prime(7);
    std::mt19937_64 rng(90001);
    std::uniform_int_distribution<long> entry(0, 6);
    std::uniform_int_distribution<long> unit(1, 6);
    std::uniform_int_distribution<std::size_t> word_len(0, 3);
    std::uniform_int_distribution<int> pick(0, 1);

    auto random_matrix = [&](std::uint32_t rank, bool invertible) {
        Matrix m(f7, rank, rank);
        do {
            for (std::uint32_t i = 0; i < rank; ++i)
                for (std::uint32_t j = 0; j < rank; ++j)
                    m.at(i, j) = Scalar::from_int(f7, entry(rng));
        } while (invertible && !m.is_invertible());
        return m;
    };
    auto random_homog = [&](const ActionSpec& spec, std::size_t degree) {
        std::uniform_int_distribution<std::uint32_t> index(1, spec.rank());
        FreePoly out(spec.field(), spec.rank());
        for (int t = 0; t < 3; ++t) {
            std::vector<GenIndex> w(degree);
            for (auto& i : w)
                i = index(rng);
            out.add_term(Word(std::move(w)), Scalar::from_int(f7, entry(rng)));
        }
        return out;
    };

    for (int trial = 0; trial < 500; ++trial) {
        const std::uint32_t rank = 2 + trial % 2;
        const char* names[] = {"1", "g"};
        const ActionSpec spec(f7, rank, {{"g", random_matrix(rank, true)}},
                              {{"d", names[pick(rng)], names[pick(rng)],
                                random_matrix(rank, false)}});
        const std::string sigma = spec.skew_primitives()[0].sigma;
        const std::string tau = spec.skew_primitives()[0].tau;
        const FreePoly f = random_homog(spec, word_len(rng));
        const FreePoly g = random_homog(spec, word_len(rng));
        require(apply_skew_primitive(spec, "d", f * g) ==
                    apply_skew_primitive(spec, "d", f) *
                            apply_group_like(spec, sigma, g) +
                        apply_group_like(spec, tau, f) *
                            apply_skew_primitive(spec, "d", g),
                "twisted Leibniz rule violated");
    }

    for (int trial = 0; trial < 500; ++trial) {
        const std::uint32_t rank = 2 + trial % 3;
        const Scalar eta = Scalar::from_int(f7, unit(rng));
        const Scalar mu = Scalar::from_int(f7, unit(rng));
        Matrix d(f7, rank, rank);
        std::vector<Scalar> lambdas;
        for (std::uint32_t i = 0; i < rank; ++i) {
            lambdas.push_back(Scalar::from_int(f7, entry(rng)));
            d.at(i, i) = lambdas.back();
        }
        const ActionSpec spec(
            f7, rank,
            {{"s", testspecs::scalar_matrix(f7, rank, eta.to_string())},
             {"t", testspecs::scalar_matrix(f7, rank, mu.to_string())}},
            {{"d", "s", "t", d}});
        std::uniform_int_distribution<std::size_t> len(1, 6);
        std::uniform_int_distribution<std::uint32_t> index(1, rank);
        std::vector<GenIndex> indices(len(rng));
        for (auto& i : indices)
            i = index(rng);
        const Word w{indices};
        Scalar xi = Scalar::zero(f7);
        for (std::size_t j = 1; j <= w.length(); ++j)
            xi = xi + lambdas[w[j - 1] - 1] * eta.pow(w.length() - j) * mu.pow(j - 1);
        const FreePoly word_poly = FreePoly::monomial(f7, rank, w, Scalar::one(f7));
        require(apply_skew_primitive(spec, "d", word_poly) == word_poly.scaled(xi),
                "diagonal weight formula violated");
    }
}

struct Criterion {
    int number;
    const char* name;
    double limit_seconds;
    std::function<void()> body;
};

} // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "scalar Veronese dimensions and generator burst (Q t=2, GF(7) t=3)", 10.0,
         criterion_scalar_veronese},
        {2, "non-scalar diag(1,-1): one indispensable generator per degree 1..8", 30.0,
         criterion_nonscalar_group},
        {3, "Sweedler action: sparse engine vs dense oracle, pinned degree-3 basis",
         30.0, criterion_sweedler},
        {4, "c_n telescoping identity, n in [1,32], 100 pairs over Q and GF(101)", 1.0,
         criterion_cn_identity},
        {5, "block element: support, c = 0 annihilation, residual confinement", 5.0,
         criterion_block_element},
        {6, "splice closure of invariant bases through total degree 6", 60.0,
         criterion_insert_closure},
        {7, "prefix pumping x2^k for k = 1..4, no cancellation", 60.0,
         criterion_prefix_pumping},
        {8, "characteristic-3 Frobenius experiment, both outcomes", 1.0,
         criterion_frobenius},
        {9, "twisted Leibniz and diagonal weight, 500 exact cases each", 10.0,
         criterion_action_properties},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        std::string failure;
        try {
            c.body();
        } catch (const std::exception& e) {
            failure = e.what();
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                .count();
        if (failure.empty() && seconds >= c.limit_seconds)
            failure = "runtime limit exceeded";
        if (failure.empty()) {
            std::printf("[PASS] criterion %d: %s (%.2fs, limit %.0fs)\n", c.number,
                        c.name, seconds, c.limit_seconds);
        } else {
            std::printf("[FAIL] criterion %d: %s (%.2fs, limit %.0fs) — %s\n", c.number,
                        c.name, seconds, c.limit_seconds, failure.c_str());
            ++failures;
        }
    }
    std::printf("acceptance: %zu/%zu criteria passed\n", criteria.size() - failures,
                criteria.size());
    return failures;
}
