// Shared helpers for the test suites: independent oracles (glibc tgamma,
// full brute-force enumerations, hand-nested mixed norms) and a CLI harness.
#pragma once

#include <sys/wait.h>

#include <array>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "bhhl/tensor.hpp"

namespace testsupport {

// Hand-nested mixed norm for m = 2: outer j1 with q1, inner j2 with q2.
inline double mixed_norm_2(const std::vector<double>& a, int n, double q1, double q2) {
  double outer = 0.0;
  for (int j1 = 0; j1 < n; ++j1) {
    double inner = 0.0;
    for (int j2 = 0; j2 < n; ++j2) {
      inner += std::pow(std::abs(a[static_cast<std::size_t>(j1) * n + j2]), q2);
    }
    outer += std::pow(std::pow(inner, 1.0 / q2), q1);
  }
  return std::pow(outer, 1.0 / q1);
}

// Hand-nested mixed norm for m = 3.
inline double mixed_norm_3(const std::vector<double>& a, int n, double q1, double q2,
                           double q3) {
  double s1 = 0.0;
  for (int j1 = 0; j1 < n; ++j1) {
    double s2 = 0.0;
    for (int j2 = 0; j2 < n; ++j2) {
      double s3 = 0.0;
      for (int j3 = 0; j3 < n; ++j3) {
        std::size_t idx = (static_cast<std::size_t>(j1) * n + j2) * n + j3;
        s3 += std::pow(std::abs(a[idx]), q3);
      }
      s2 += std::pow(std::pow(s3, 1.0 / q3), q2);
    }
    s1 += std::pow(std::pow(s2, 1.0 / q2), q1);
  }
  return std::pow(s1, 1.0 / q1);
}

// Exhaustive sup over sign vectors in EVERY argument (no pinning, no analytic
// last argument): an independent oracle for the real l_inf operator norm.
inline double brute_force_linf_norm(const bhhl::CoefficientTensor& t) {
  const int m = t.m();
  const int n = t.n();
  const std::vector<double> a = t.real_entries();
  const long total_bits = static_cast<long>(m) * n;
  double best = 0.0;
  for (long mask = 0; mask < (1L << total_bits); ++mask) {
    std::vector<int> sign(static_cast<std::size_t>(m) * n);
    for (long b = 0; b < total_bits; ++b) {
      sign[static_cast<std::size_t>(b)] = (mask >> b) & 1 ? -1 : 1;
    }
    double value = 0.0;
    std::vector<int> idx(m, 0);
    for (std::size_t flat = 0; flat < a.size(); ++flat) {
      std::size_t rem = flat;
      int prod = 1;
      for (int k = m - 1; k >= 0; --k) {
        const int jk = static_cast<int>(rem % n);
        rem /= n;
        prod *= sign[static_cast<std::size_t>(k) * n + jk];
      }
      value += prod * a[flat];
    }
    best = std::max(best, std::abs(value));
  }
  return best;
}

inline bhhl::CoefficientTensor random_real_tensor(int m, int n, std::mt19937& rng) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::size_t size = 1;
  for (int k = 0; k < m; ++k) {
    size *= static_cast<std::size_t>(n);
  }
  std::vector<double> entries(size);
  for (double& e : entries) {
    e = dist(rng);
  }
  return bhhl::CoefficientTensor::real_tensor(m, n, std::move(entries));
}

struct CliResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Runs the CLI binary with the given argument string inside `workdir`,
// capturing stdout/stderr. Uses the shell, so args must be pre-quoted.
inline CliResult run_cli(const std::string& cli_path, const std::string& args,
                         const std::string& workdir) {
  static int counter = 0;
  const std::string tag = std::to_string(++counter);
  const std::string out_path = workdir + "/cli_stdout_" + tag + ".txt";
  const std::string err_path = workdir + "/cli_stderr_" + tag + ".txt";
  const std::string cmd = "cd '" + workdir + "' && '" + cli_path + "' " + args + " > '" +
                          out_path + "' 2> '" + err_path + "'";
  const int raw = std::system(cmd.c_str());
  CliResult r;
  r.exit_code = (raw >= 0 && WIFEXITED(raw)) ? WEXITSTATUS(raw) : -1;
  r.out = read_file(out_path);
  r.err = read_file(err_path);
  std::remove(out_path.c_str());
  std::remove(err_path.c_str());
  return r;
}

inline std::string make_temp_dir(const std::string& stem) {
  std::string tmpl = "/tmp/" + stem + "_XXXXXX";
  std::vector<char> buf(tmpl.begin(), tmpl.end());
  buf.push_back('\0');
  const char* dir = mkdtemp(buf.data());
  return dir ? std::string(dir) : std::string("/tmp");
}

}  // namespace testsupport
