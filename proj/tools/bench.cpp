#include <chrono>
#include <cstdio>
#include <random>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "concord/cfk.hpp"
#include "concord/dinv.hpp"
#include "concord/gf2.hpp"
#include "concord/obstruction.hpp"

using namespace concord;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

template <typename F> double timed(F&& f) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    return seconds_since(t0);
}

gf2::Matrix random_matrix(int n, unsigned seed) {
    std::mt19937_64 gen(seed);
    gf2::Matrix m(n, n);
    for (auto& w : m.bits) w = gen();
    return m;
}

void bench_rank(int n) {
    gf2::Matrix m = random_matrix(n, 7);
    int rs = 0, rp = 0;
    double ts = timed([&] { rs = gf2::rank_serial(m); });
    double tp = timed([&] { rp = gf2::rank_parallel(m); });
    std::printf("gf2 rank  %5dx%-5d  serial %.3fs  parallel %.3fs  speedup %.2fx  %s\n", n, n, ts,
                tp, ts / tp, rs == rp ? "ranks agree" : "RANKS DIFFER");
}

void bench_oracle(const char* name, const StepVector& doubled, int smax) {
    std::vector<int> vs, vp;
    double ts = timed([&] { vs = oracle_v_sequence(doubled, smax, false); });
    double tp = timed([&] { vp = oracle_v_sequence(doubled, smax, true); });
    std::printf("oracle V  %-10s smax %2d  serial %.3fs  parallel %.3fs  speedup %.2fx  %s\n",
                name, smax, ts, tp, ts / tp, vs == vp ? "values agree" : "VALUES DIFFER");
}

void bench_scan(int k, int n) {
    KnotPtr K = make_torus(2, 3);
    KnotPtr fam = make_sum({make_cable(2, k, K), make_mirror(make_torus(2, k))});
    std::vector<Verdict> s, p;
    double ts = timed([&] { s = obstruct(fam, n, n, 0, false); });
    double tp = timed([&] { p = obstruct(fam, n, n, 0, true); });
    bool agree = s.size() == p.size();
    for (size_t i = 0; agree && i < s.size(); ++i) {
        agree = s[i].obstructed == p[i].obstructed && s[i].reports.size() == p[i].reports.size();
        for (size_t j = 0; agree && j < s[i].reports.size(); ++j) {
            const auto &a = s[i].reports[j].cert, &b = p[i].reports[j].cert;
            agree = a.has_value() == b.has_value() &&
                    (!a || (a->element == b->element && a->dbar == b->dbar));
        }
    }
    std::printf("met scan  k=%-2d n=%d        serial %.3fs  parallel %.3fs  speedup %.2fx  %s\n",
                k, n, ts, tp, ts / tp, agree ? "certificates agree" : "CERTIFICATES DIFFER");
}

} // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads: %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP disabled (serial build)\n");
#endif
    bench_rank(1024);
    bench_rank(2048);

    StepVector t34 = double_staircase({1, 2, 2, 1}).lat.steps;
    StepVector t35 = double_staircase({1, 2, 1, 1, 2, 1}).lat.steps;
    bench_oracle("T(3,4)^2", t34, 8);
    bench_oracle("T(3,5)^2", t35, 10);

    bench_scan(11, 2);
    bench_scan(13, 2);
    return 0;
}
