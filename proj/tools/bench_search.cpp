// Timing harness: the plain combinations-times-verify reference against the
// pruned parallel kernel, on the same hypercube instances. The two must agree
// on every value — the table doubles as an equivalence spot check.
//
//   bench_search [--d-min 1] [--d-max 5] [--kinds metric,edge,mixed]
//                [--workers 1,4] [--repeat 3] [--skip-serial]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "metdim/host.hpp"
#include "metdim/serial_reference.hpp"
#include "metdim/solvers.hpp"

namespace {

using namespace metdim;

template <class F>
double time_ms(int repeat, F&& fn) {
  double best = 1e300;
  for (int r = 0; r < repeat; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    const auto t1 = std::chrono::steady_clock::now();
    best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
  }
  return best;
}

std::vector<int> parse_ints(const std::string& s) {
  std::vector<int> out;
  std::size_t start = 0;
  while (start < s.size()) {
    std::size_t comma = s.find(',', start);
    if (comma == std::string::npos) comma = s.size();
    out.push_back(std::stoi(s.substr(start, comma - start)));
    start = comma + 1;
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"serial reference vs pruned parallel search"};
  int d_min = 1, d_max = 5, repeat = 3;
  std::string kinds_s = "metric,edge,mixed", workers_s = "1,4";
  bool skip_serial = false;
  app.add_option("--d-min", d_min, "first hypercube dimension");
  app.add_option("--d-max", d_max, "last hypercube dimension");
  app.add_option("--kinds", kinds_s, "comma-separated kinds");
  app.add_option("--workers", workers_s, "comma-separated worker counts for the kernel");
  app.add_option("--repeat", repeat, "timing repetitions (best-of)");
  app.add_flag("--skip-serial", skip_serial, "kernel timings only (large d)");
  CLI11_PARSE(app, argc, argv);

  std::vector<Kind> kinds;
  for (std::size_t start = 0; start < kinds_s.size();) {
    std::size_t comma = kinds_s.find(',', start);
    if (comma == std::string::npos) comma = kinds_s.size();
    kinds.push_back(kind_from_string(kinds_s.substr(start, comma - start)));
    start = comma + 1;
  }
  const std::vector<int> workers = parse_ints(workers_s);

  std::printf("%-5s %-7s %-6s %12s", "host", "kind", "value", "serial_ms");
  for (int w : workers) std::printf("  kernel_ms(w=%d)", w);
  std::printf("\n");

  for (int d = d_min; d <= d_max; ++d) {
    const HypercubeHost h(d);
    for (Kind kind : kinds) {
      int serial_value = -1;
      double serial_ms = -1.0;
      if (!skip_serial) {
        serial_ms = time_ms(repeat, [&] { serial_value = exact_dimension_serial(h, kind).value; });
      }

      std::vector<double> kernel_ms;
      int kernel_value = -1;
      for (int w : workers) {
        SolveOptions opts;
        opts.kind = kind;
        opts.workers = w;
        kernel_ms.push_back(time_ms(repeat, [&] { kernel_value = exact_dimension(h, opts).value; }));
      }

      if (!skip_serial && serial_value != kernel_value) {
        std::fprintf(stderr, "MISMATCH %s %s: serial=%d kernel=%d\n", h.id().c_str(),
                     to_string(kind).c_str(), serial_value, kernel_value);
        return 1;
      }

      std::printf("%-5s %-7s %-6d", h.id().c_str(), to_string(kind).c_str(), kernel_value);
      if (skip_serial)
        std::printf("%12s", "-");
      else
        std::printf("%12.2f", serial_ms);
      for (double ms : kernel_ms) std::printf("  %14.2f", ms);
      std::printf("\n");
    }
  }
  return 0;
}
