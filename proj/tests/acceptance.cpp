// Acceptance suite: one pass/fail line per criterion. All checks are exact
// (zero tolerance); a criterion fails if any residual is nonzero, any
// dimension disagrees, or any structural assertion throws.

#include "parabose/verify.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <vector>

using namespace parabose;

namespace {

struct Criterion
{
    std::string label;
    std::function<std::vector<SuiteResult>()> run;
};

} // namespace

int main()
{
    std::vector<Criterion> criteria;

    criteria.push_back({"algebra suite: trilinear relations, n in {1,2}, p in 1..5, degree <= 3",
                        [] {
                            std::vector<SuiteResult> out;
                            for (int n : {1, 2})
                                for (int p = 1; p <= 5; ++p)
                                    out.push_back(verify_algebra(ModelParams(n, p), 3));
                            return out;
                        }});

    criteria.push_back({"gauge suite: [G,b] = [G,bd] = 0 and so(p) brackets, same scale",
                        [] {
                            std::vector<SuiteResult> out;
                            for (int n : {1, 2})
                                for (int p = 1; p <= 5; ++p)
                                    out.push_back(verify_gauge(ModelParams(n, p), 3));
                            return out;
                        }});

    criteria.push_back({"Qv = Ev subspace equals the vacuum subspace, degrees <= 4",
                        [] {
                            std::vector<SuiteResult> out;
                            for (auto [n, p] :
                                 {std::pair{1, 2}, {1, 3}, {2, 2}, {2, 3}})
                                out.push_back(verify_lemma1(ModelParams(n, p), 4));
                            return out;
                        }});

    criteria.push_back({"joint weight groups are at most 1-dim and satisfy sigma_k = s_{n-k}, "
                        "degrees <= 4",
                        [] {
                            std::vector<SuiteResult> out;
                            for (auto [n, p] :
                                 {std::pair{1, 2}, {1, 3}, {2, 2}, {2, 3}, {2, 4}})
                                out.push_back(verify_theorem1(ModelParams(n, p), 4));
                            return out;
                        }});

    criteria.push_back({"closed-form lowest-weight vectors reproduce every kernel vector exactly",
                        [] {
                            std::vector<SuiteResult> out;
                            for (auto [n, p] :
                                 {std::pair{1, 2}, {1, 3}, {2, 2}, {2, 3}, {2, 4}})
                                out.push_back(verify_lemma3_vectors(ModelParams(n, p), 4));
                            return out;
                        }});

    criteria.push_back({"multiplicities: counted lowest vectors equal the gauge irrep dimension",
                        [] {
                            std::vector<SuiteResult> out;
                            for (auto [n, p] :
                                 {std::pair{1, 2}, {1, 3}, {2, 2}, {2, 3}, {2, 4}})
                                out.push_back(verify_corollary1(ModelParams(n, p), 4));
                            // hand-checkable row: n=1, p=2, d=1 has multiplicity 2
                            SuiteResult hand{"corollary1-hand"};
                            auto rows = multiplicity_check(ModelParams(1, 2), 0);
                            hand.expect(rows.size() == 1 && rows[0].osp.d == HalfInt::of_int(1) &&
                                            rows[0].claimed == 2 && rows[0].counted == 2,
                                        "d=1 row should have multiplicity 2");
                            out.push_back(std::move(hand));
                            return out;
                        }});

    criteria.push_back({"every spin-orbit component hosts an sp(2n) lowest-weight vector, "
                        "degrees <= 3",
                        [] {
                            std::vector<SuiteResult> out;
                            for (auto [n, p] : {std::pair{1, 2}, {2, 2}, {1, 4}})
                                out.push_back(verify_theorem2(ModelParams(n, p), 3));
                            return out;
                        }});

    criteria.push_back({"signature sets stabilize: p = 3 vs p = 5 at n = 1, energies <= 4",
                        [] {
                            return std::vector<SuiteResult>{
                                verify_stabilization(1, 3, 5, HalfInt::of_int(4))};
                        }});

    criteria.push_back({"noncovariant map: sign flip, norm, gauge-decomposable image",
                        [] {
                            std::vector<SuiteResult> out;
                            for (int p : {2, 3})
                                out.push_back(verify_noncovariant(ModelParams(1, p)));
                            return out;
                        }});

    int failed = 0;
    for (size_t i = 0; i < criteria.size(); ++i) {
        auto start = std::chrono::steady_clock::now();
        long long checks = 0;
        std::vector<std::string> failures;
        try {
            for (SuiteResult &r : criteria[i].run()) {
                checks += r.checks;
                for (std::string &f : r.failures)
                    failures.push_back(r.name + ": " + std::move(f));
            }
        } catch (const std::exception &e) {
            failures.push_back(std::string("exception: ") + e.what());
        }
        auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start);
        bool ok = failures.empty();
        failed += ok ? 0 : 1;
        std::printf("%s criterion %zu: %s (%lld checks, %.1fs)\n", ok ? "PASS" : "FAIL", i + 1,
                    criteria[i].label.c_str(), checks, secs.count());
        for (size_t f = 0; f < failures.size() && f < 5; ++f)
            std::printf("       %s\n", failures[f].c_str());
        std::fflush(stdout);
    }
    if (failed)
        std::printf("%d of %zu criteria FAILED\n", failed, criteria.size());
    else
        std::printf("all %zu criteria passed\n", criteria.size());
    return failed ? 1 : 0;
}
