// Compares the serial reference implementation of the distance kernels
// against the OpenMP-parallel version on synthetic workloads, checking that
// both produce identical exact results while reporting wall times.

#include <omp.h>

#include <cstdio>
#include <random>

#include "hausconv/witness.hpp"

using namespace hausconv;

namespace {

Rat small_rat(std::mt19937_64& eng, long lo, long hi, long max_den) {
    long span = hi - lo + 1;
    Rat r(lo + static_cast<long>(eng() % static_cast<std::uint64_t>(span)),
          1 + static_cast<long>(eng() % static_cast<std::uint64_t>(max_den)));
    r.canonicalize();
    return r;
}

Polyhedron random_polytope(std::mt19937_64& eng, std::size_t n, std::size_t nverts) {
    VRep v;
    v.dim = n;
    for (std::size_t i = 0; i < nverts; ++i) {
        RatVec x(n);
        for (Rat& c : x) c = small_rat(eng, -12, 12, 4);
        v.vertices.push_back(std::move(x));
    }
    return Polyhedron::from_vrep(std::move(v));
}

struct Timing {
    double serial = 0;
    double parallel = 0;
    bool equal = false;
};

void report(const char* name, const Timing& t) {
    std::printf("%-28s serial %8.3fs   parallel %8.3fs   speedup %5.2fx   identical: %s\n", name,
                t.serial, t.parallel, t.serial / t.parallel, t.equal ? "yes" : "NO");
}

}  // namespace

int main() {
    std::printf("OpenMP max threads: %d\n\n", omp_get_max_threads());
    std::mt19937_64 eng(2024);

    {
        // Hausdorff distance between vertex-rich polytopes: one
        // nearest-point program per vertex, fanned over threads.
        std::vector<std::pair<Polyhedron, Polyhedron>> pairs;
        for (int i = 0; i < 6; ++i) {
            Polyhedron A = random_polytope(eng, 3, 36);
            RatVec shift(3);
            for (Rat& c : shift) c = small_rat(eng, -6, 6, 2);
            pairs.emplace_back(A, translate(A, shift));
        }
        Timing t;
        std::vector<ExtRat> serial_vals, parallel_vals;
        double t0 = omp_get_wtime();
        for (auto& [a, b] : pairs) serial_vals.push_back(hausdorff(a, b, ExecMode::Serial).value);
        t.serial = omp_get_wtime() - t0;
        t0 = omp_get_wtime();
        for (auto& [a, b] : pairs) parallel_vals.push_back(hausdorff(a, b, ExecMode::Parallel).value);
        t.parallel = omp_get_wtime() - t0;
        t.equal = serial_vals == parallel_vals;
        report("hausdorff (36-vertex, R^3)", t);
    }

    {
        // Witness family verification: quadratic number of pairwise
        // distances, each one an independent exact computation.
        PolyCone V = cone_from_generators(
            {{Rat(1), Rat(0), Rat(0)}, {Rat(1), Rat(1), Rat(0)}, {Rat(1), Rat(0), Rat(1)}}, {}, 3);
        WitnessFamily fam = witness_family(V, Rat(1, 2), 7);
        Timing t;
        double t0 = omp_get_wtime();
        WitnessReport rs = verify_witness(fam, ExecMode::Serial);
        t.serial = omp_get_wtime() - t0;
        t0 = omp_get_wtime();
        WitnessReport rp = verify_witness(fam, ExecMode::Parallel);
        t.parallel = omp_get_wtime() - t0;
        t.equal = rs.all_pass() == rp.all_pass() && rs.pairs.size() == rp.pairs.size();
        for (std::size_t i = 0; i < rs.pairs.size() && t.equal; ++i)
            t.equal = rs.pairs[i].dist == rp.pairs[i].dist;
        report("witness verification (N=7)", t);
    }

    {
        // Pairwise separation of the biorthogonal family on 4 coordinates:
        // 105 Hausdorff computations.
        std::vector<std::vector<std::size_t>> subsets;
        for (std::size_t mask = 1; mask < 16; ++mask) {
            std::vector<std::size_t> s;
            for (std::size_t i = 0; i < 4; ++i)
                if (mask & (1u << i)) s.push_back(i + 1);
            subsets.push_back(std::move(s));
        }
        BiorthFamily fam = biorthogonal_family(4, subsets);
        Timing t;
        double t0 = omp_get_wtime();
        Rat ds = pairwise_min_hausdorff(fam.members, ExecMode::Serial);
        t.serial = omp_get_wtime() - t0;
        t0 = omp_get_wtime();
        Rat dp = pairwise_min_hausdorff(fam.members, ExecMode::Parallel);
        t.parallel = omp_get_wtime() - t0;
        t.equal = ds == dp;
        report("biorthogonal pairwise (105)", t);
    }

    return 0;
}
