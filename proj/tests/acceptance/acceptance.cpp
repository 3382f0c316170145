// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "chipart/criteria.hpp"
#include "chipart/hurwitz.hpp"
#include "chipart/interval.hpp"
#include "chipart/roots.hpp"
#include "chipart/sampling.hpp"

using namespace chipart;

namespace {

using R = Rational;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void fail(const std::string& why) {
    if (pass) detail.str("");
    pass = false;
    detail << why;
  }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// 1. Delta_4 triple identity over rationals.
void triple_identity(Outcome& o) {
  const auto start = std::chrono::steady_clock::now();
  Rng rng(1001);
  std::size_t failures = 0;
  for (int k = 0; k < 10000; ++k) {
    const auto p = sample_rational_polynomial(rng, sample_degree(rng, 4, 9), 100);
    const R f = delta4_factored(p);
    if (f != delta4_expanded(p) || f != hurwitz_minor_det(p, 4)) ++failures;
  }
  const double secs = seconds_since(start);
  if (failures > 0) o.fail(std::to_string(failures) + " mismatches");
  if (secs >= 60.0) o.fail("took " + std::to_string(secs) + " s");
  if (o.pass) o.detail << "10000 samples, degrees 4-9, 0 mismatches, " << secs << " s";
}

struct FloatSample {
  Polynomial<double> p;
  Status even;
  RootReport roots;
};

std::vector<FloatSample> float_samples() {
  Rng rng(1002);
  std::vector<FloatSample> out;
  out.reserve(10000);
  for (int k = 0; k < 10000; ++k) {
    auto p = sample_float_polynomial(rng, sample_degree(rng, 1, 9));
    const Status even = lienard_chipart(p).status;
    auto report = find_roots(p);
    out.push_back({std::move(p), even, std::move(report)});
  }
  return out;
}

// 2. Even / odd / full minor tests agree.
void criterion_equivalence(Outcome& o, const std::vector<FloatSample>& samples) {
  std::size_t disagree = 0, stable = 0;
  for (const auto& s : samples) {
    if (s.even != lienard_chipart_odd(s.p).status || s.even != routh_hurwitz_full(s.p).status) {
      ++disagree;
    }
    if (s.even == Status::Stable) ++stable;
  }
  if (disagree > 0) o.fail(std::to_string(disagree) + " disagreements");
  else o.detail << samples.size() << " samples, degrees 1-9, " << stable << " stable, 0 disagreements";
}

// 3. Minor test vs root oracle, and oracle reconstruction.
void oracle_agreement(Outcome& o, const std::vector<FloatSample>& samples) {
  std::size_t compared = 0, disagree = 0, bad_reconstruction = 0;
  double worst = 0.0;
  for (const auto& s : samples) {
    const double err = reconstruction_error(s.p, s.roots.roots);
    worst = std::max(worst, err);
    if (!(err < 1e-6)) ++bad_reconstruction;
    if (std::abs(s.roots.max_real_part) <= 1e-6) continue;
    ++compared;
    const bool oracle_stable = s.roots.max_real_part < 0.0;
    if (oracle_stable != (s.even == Status::Stable)) ++disagree;
  }
  if (disagree > 0) o.fail(std::to_string(disagree) + " disagreements");
  if (bad_reconstruction > 0) {
    o.fail(std::to_string(bad_reconstruction) + " reconstructions >= 1e-6");
  }
  if (o.pass) {
    o.detail << compared << " compared, " << samples.size() - compared
             << " within 1e-6 excluded, 0 disagreements, worst reconstruction " << worst;
  }
}

// 4. Cor 1/2/3 soundness on their hypothesis regions.
void corollary_soundness(Outcome& o) {
  using Sampler = Polynomial<double> (*)(Rng&, int);
  using Check = std::optional<Certificate<double>> (*)(const Polynomial<double>&);
  struct Case {
    const char* name;
    Sampler sample;
    Check check;
  };
  const Case cases[] = {{"Cor1", sample_cor1_region, cor1_certificate<double>},
                        {"Cor2", sample_cor2_region, cor2_certificate<double>},
                        {"Cor3", sample_cor3_region, cor3_certificate<double>}};
  Rng rng(1004);
  for (const auto& c : cases) {
    std::size_t certified = 0, stable = 0, indeterminate = 0;
    for (int k = 0; k < 10000; ++k) {
      const auto p = c.sample(rng, sample_degree(rng, 5, 9));
      const auto cert = c.check(p);
      if (!cert) continue;
      ++certified;
      const auto cls = find_roots(p).classification;
      if (cls == OracleClass::Stable || !replay(*cert)) ++stable;
      if (cls == OracleClass::Indeterminate) ++indeterminate;
    }
    if (stable > 0) o.fail(std::string(c.name) + ": " + std::to_string(stable) + " Stable");
    if (certified == 0) o.fail(std::string(c.name) + ": nothing certified");
    if (o.pass) {
      o.detail << c.name << " " << certified << "/10000 certified, 0 Stable ("
               << indeterminate << " indeterminate) ";
    }
  }
}

// 5. Constructed vertex-equality quintics are stable.
void cor5_soundness(Outcome& o) {
  Rng rng(1005);
  std::size_t bad = 0;
  for (int k = 0; k < 1000; ++k) {
    const auto p = sample_cor5_polynomial(rng);
    const R a2 = p.coeff(2), a4 = p.coeff(4);
    const R A = p.coeff(5) - p.coeff(1) * a4;
    const bool identity = delta4_factored(p) == (a2 * a2 - R(4) * a4) / (R(4) * a4) * A * A;
    const bool lc = lienard_chipart(p).status == Status::Stable;
    const bool roots = find_roots(to_float(p)).classification == OracleClass::Stable;
    if (!(identity && lc && roots && all_coeffs_positive(p) && delta2(p) > R(0))) ++bad;
  }
  if (bad > 0) o.fail(std::to_string(bad) + " of 1000 failed");
  else o.detail << "1000 samples: all Stable by minors and oracle, Delta4 identity exact";
}

bool has_kind(const StabilityVerdict<R>& v, CertificateKind kind) {
  if (v.certificate.kind == kind) return true;
  for (const auto& c : v.corroborating) {
    if (c.kind == kind) return true;
  }
  return false;
}

// 6. Named exemplars.
void exemplars(Outcome& o) {
  auto check = [&](bool ok, const std::string& what) {
    if (!ok) o.fail(what);
  };
  const auto binomial = make_polynomial<R>(5, {5, 10, 10, 5, 1});
  const auto vb = analyze(binomial);
  check(vb.status == Status::Stable, "(s+1)^5 not Stable");
  check(delta2(binomial) == R(40) && hurwitz_minor_det(binomial, 4) == R(1024),
        "(s+1)^5 minors");
  check(find_roots(to_float(binomial)).classification == OracleClass::Stable,
        "(s+1)^5 oracle");

  const auto c2 = make_polynomial<R>(5, {1, 2, 1, 1, R(1, 2)});
  const auto v2 = analyze(c2);
  check(v2.status == Status::NotStable && v2.certificate.kind == CertificateKind::Cor2,
        "Cor2 exemplar verdict");
  check(hurwitz_minor_det(c2, 4) == R(-1, 4) && delta4_factored(c2) == R(-1, 4),
        "Cor2 exemplar Delta4");
  check(find_roots(to_float(c2)).classification == OracleClass::Unstable, "Cor2 exemplar oracle");

  const auto c5 = make_polynomial<R>(5, {1, 3, R(9, 4), 1, R(1, 2)});
  const auto v5 = analyze(c5);
  check(v5.status == Status::Stable && v5.certificate.kind == CertificateKind::Cor5,
        "Cor5 exemplar verdict");
  check(hurwitz_minor_det(c5, 4) == R(5, 16) && delta4_factored(c5) == R(5, 16),
        "Cor5 exemplar Delta4");
  check(find_roots(to_float(c5)).classification == OracleClass::Stable, "Cor5 exemplar oracle");

  const auto six = make_polynomial<R>(5, {1, 1, 1, 1, 1});
  const auto v6 = analyze(six);
  check(v6.status == Status::NotStable && has_kind(v6, CertificateKind::Cor3) &&
            cor3_certificate(six).has_value(),
        "sixth-roots exemplar verdict");
  const double max_re = find_roots(to_float(six)).max_real_part;
  check(std::abs(max_re - 0.5) <= 1e-8, "sixth-roots max real part " + std::to_string(max_re));
  if (o.pass) {
    o.detail << "4 exemplars; sixth-roots max real part " << max_re << ", primary "
             << to_string(v6.certificate.kind) << " with Cor3 also certifying";
  }
}

// 7. Degree 5, a4 = 1, 0 < a2 <= 2: never stable.
void small_a2(Outcome& o) {
  Rng rng(1007);
  std::size_t stable = 0;
  for (int k = 0; k < 1000; ++k) {
    if (analyze(sample_small_a2_quintic(rng)).status != Status::NotStable) ++stable;
  }
  if (stable > 0) o.fail(std::to_string(stable) + " of 1000 not NotStable");
  else o.detail << "1000 samples, all NotStable";
}

// 8. Certified boxes: sampled members are never stable.
void certified_boxes(Outcome& o) {
  Rng rng(1008);
  std::size_t analyze_stable = 0, oracle_stable = 0, by_cor1 = 0, by_cor3 = 0;
  for (int b = 0; b < 100; ++b) {
    const auto box = sample_certified_box(rng);
    const bool c1 = box_cor1(box).has_value();
    const bool c3 = box_cor3(box).has_value();
    if (!c1 && !c3) {
      o.fail("box " + std::to_string(b) + " not certified");
      return;
    }
    by_cor1 += c1;
    by_cor3 += c3;
    const std::uint64_t seed = 5000 + static_cast<std::uint64_t>(b);
    analyze_stable += box_sample_verdicts(box, 1000, seed).stable;
    Rng member_rng(seed);
    for (int k = 0; k < 1000; ++k) {
      if (find_roots(sample_box_member(box, member_rng)).classification == OracleClass::Stable) {
        ++oracle_stable;
      }
    }
  }
  if (analyze_stable > 0) o.fail(std::to_string(analyze_stable) + " Stable verdicts");
  if (oracle_stable > 0) o.fail(std::to_string(oracle_stable) + " Stable oracle classifications");
  if (o.pass) {
    o.detail << "100 boxes (" << by_cor1 << " by Cor1, " << by_cor3
             << " by Cor3) x 1000 samples, 0 Stable";
  }
}

std::string capture(const std::string& cmd, int& exit_code) {
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) {
    exit_code = -1;
    return out;
  }
  std::array<char, 8192> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int status = pclose(pipe);
  exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return out;
}

// 9. Byte-identical fuzz output.
void determinism(Outcome& o) {
  const std::string cmd = std::string(CHIPART_CLI_PATH) + " fuzz --count 10000 --seed 42 --json";
  int e1 = 0, e2 = 0;
  const std::string a = capture(cmd, e1);
  const std::string b = capture(cmd, e2);
  if (a.empty()) o.fail("no output");
  else if (a != b) o.fail("outputs differ");
  else if (e1 != 0 || e2 != 0) o.fail("fuzz exit code " + std::to_string(e1));
  if (o.pass) o.detail << "two runs, " << a.size() << " bytes each, identical, exit 0";
}

}  // namespace

int main() {
  int failures = 0;
  auto report = [&](int id, const char* title, const std::function<void(Outcome&)>& body) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      body(o);
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    if (!o.pass) ++failures;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << id << ": " << title << " -- "
              << o.detail.str() << " [" << seconds_since(start) << " s]" << std::endl;
  };

  report(1, "Delta4 triple identity", triple_identity);
  std::vector<FloatSample> samples;
  report(2, "criterion equivalence", [&](Outcome& o) {
    samples = float_samples();
    criterion_equivalence(o, samples);
  });
  report(3, "oracle agreement", [&](Outcome& o) { oracle_agreement(o, samples); });
  report(4, "Cor1/2/3 soundness", corollary_soundness);
  report(5, "Cor5 soundness", cor5_soundness);
  report(6, "named exemplars", exemplars);
  report(7, "small-a2 quintics", small_a2);
  report(8, "certified boxes", certified_boxes);
  report(9, "fuzz determinism", determinism);

  std::cout << (failures == 0 ? "all 9 criteria passed" : std::to_string(failures) + " criteria failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
