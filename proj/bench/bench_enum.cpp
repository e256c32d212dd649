// Compares the OpenMP enumeration kernel against the serial reference on a
// moderately large counting box and reports timings plus the speedup.

#include <omp.h>

#include <cstdlib>
#include <iostream>

#include "inchilb/hilbert.hpp"

using namespace inchilb;

int main(int argc, char** argv) {
  int rows = 3, nmax = 6, dmax = 7;
  if (argc == 4) {
    rows = std::atoi(argv[1]);
    nmax = std::atoi(argv[2]);
    dmax = std::atoi(argv[3]);
  } else if (argc != 1) {
    std::cerr << "usage: bench_enum [rows nmax dmax]\n";
    return 2;
  }

  Problem p;
  p.rows = rows;
  p.grading = Grading::standard_total(rows);
  p.gens = {Monomial::parse("x[1,0]^2", rows),
            Monomial::parse("x[1,0]*x[1,1]", rows)};
  if (rows >= 2) p.gens.push_back(Monomial::parse("x[1,0]*x[2,1]", rows));

  std::cout << "brute-force coefficient counts: rows=" << rows
            << " nmax=" << nmax << " dmax=" << dmax
            << " threads=" << omp_get_max_threads() << "\n";

  double t0 = omp_get_wtime();
  CoeffTable serial = brute_counts_serial(p, nmax, dmax);
  double t1 = omp_get_wtime();
  CoeffTable parallel = brute_counts(p, nmax, dmax);
  double t2 = omp_get_wtime();

  if (!(serial == parallel)) {
    std::cerr << "MISMATCH between serial and parallel kernels\n";
    return 1;
  }

  const double ts = t1 - t0, tp = t2 - t1;
  std::cout << "serial:   " << ts << " s\n";
  std::cout << "parallel: " << tp << " s\n";
  std::cout << "speedup:  " << (tp > 0 ? ts / tp : 0.0) << "x\n";
  std::cout << "entries:  " << serial.entries.size() << " (tables agree)\n";
  return 0;
}
