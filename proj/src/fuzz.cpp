#include "chipart/fuzz.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "chipart/criteria.hpp"
#include "chipart/hurwitz.hpp"
#include "chipart/io.hpp"
#include "chipart/sampling.hpp"

namespace chipart {

namespace {

constexpr double kReconstructionTolerance = 1e-6;

enum Property : std::size_t {
  kDelta4Identity,
  kCriteriaAgreement,
  kOracleAgreement,
  kOracleReconstruction,
  kCorollarySoundness,
  kAnalyzeConsistency,
  kPropertyCount,
};

constexpr const char* kPropertyNames[kPropertyCount] = {
    "delta4_identity",   "criteria_agreement",  "oracle_agreement",
    "oracle_reconstruction", "corollary_soundness", "analyze_consistency",
};

class Recorder {
 public:
  Recorder() {
    for (const char* name : kPropertyNames) result_.properties.push_back({name, 0, 0, 0});
  }

  template <Scalar T>
  void check(Property prop, std::size_t sample, bool ok, const Polynomial<T>& p,
             const std::string& detail) {
    auto& tally = result_.properties[prop];
    ++tally.checked;
    if (ok) return;
    ++tally.failed;
    if (result_.counterexamples.size() < FuzzResult::kMaxCounterexamples) {
      result_.counterexamples.push_back({kPropertyNames[prop], sample, polynomial_json(p), detail});
    }
  }

  void skip(Property prop) { ++result_.properties[prop].skipped; }

  FuzzResult take() { return std::move(result_); }

 private:
  FuzzResult result_;
};

std::string status_triple(Status a, Status b, Status c) {
  std::ostringstream os;
  os << "even=" << to_string(a) << " odd=" << to_string(b) << " full=" << to_string(c);
  return os.str();
}

}  // namespace

bool FuzzResult::passed() const {
  return std::all_of(properties.begin(), properties.end(),
                     [](const PropertyTally& t) { return t.failed == 0; });
}

FuzzResult run_fuzz(const FuzzOptions& options) {
  Rng rng(options.seed);
  Recorder rec;

  for (std::size_t i = 0; i < options.count; ++i) {
    const int degree = sample_degree(rng, options.min_degree, options.max_degree);
    const Polynomial<Rational> exact = sample_rational_polynomial(rng, degree);
    const Polynomial<double> fp = sample_float_polynomial(rng, degree);

    if (degree >= 4) {
      Rational factored = delta4_factored(exact);
      if (options.flip_delta4_sign) factored = -factored;
      const Rational expanded = delta4_expanded(exact);
      const Rational det = hurwitz_minor_det(exact, 4);
      rec.check(kDelta4Identity, i, factored == expanded && expanded == det, exact,
                "factored=" + factored.to_string() + " expanded=" + expanded.to_string() +
                    " determinant=" + det.to_string());
    }

    const Status even = lienard_chipart(fp).status;
    const Status odd = lienard_chipart_odd(fp).status;
    const Status full = routh_hurwitz_full(fp).status;
    rec.check(kCriteriaAgreement, i, even == odd && odd == full, fp,
              status_triple(even, odd, full));

    std::optional<RootReport> report;
    try {
      report = find_roots(fp, options.margin);
    } catch (const Error& e) {
      rec.check(kOracleReconstruction, i, false, fp, e.what());
    }
    if (report) {
      const double err = reconstruction_error(fp, report->roots);
      rec.check(kOracleReconstruction, i, err < kReconstructionTolerance, fp,
                "reconstruction error " + to_display_string(err));
      if (report->classification == OracleClass::Indeterminate) {
        rec.skip(kOracleAgreement);
      } else {
        const bool oracle_stable = report->classification == OracleClass::Stable;
        rec.check(kOracleAgreement, i, oracle_stable == (even == Status::Stable), fp,
                  "criterion=" + std::string(to_string(even)) +
                      " oracle=" + std::string(to_string(report->classification)) +
                      " max_real_part=" + to_display_string(report->max_real_part));
      }
    }

    rec.check(kAnalyzeConsistency, i, analyze(fp).status == even, fp, "float domain");
    rec.check(kAnalyzeConsistency, i, analyze(exact).status == lienard_chipart(exact).status,
              exact, "exact domain");

    // Corollary soundness on a sample drawn from one certificate's region.
    const int cor_degree = std::max(degree, 5);
    Polynomial<double> region = fp;
    std::optional<Certificate<double>> cert;
    switch (i % 3) {
      case 0:
        region = sample_cor1_region(rng, cor_degree);
        cert = cor1_certificate(region);
        break;
      case 1:
        region = sample_cor2_region(rng, cor_degree);
        cert = cor2_certificate(region);
        break;
      default:
        region = sample_cor3_region(rng, cor_degree);
        cert = cor3_certificate(region);
        break;
    }
    if (!cert) {
      rec.skip(kCorollarySoundness);
      continue;
    }
    std::string detail = std::string(to_string(cert->kind));
    bool ok = replay(*cert);
    if (!ok) detail += " certificate does not replay";
    try {
      const RootReport r = find_roots(region, options.margin);
      if (r.classification == OracleClass::Stable) {
        ok = false;
        detail += " but oracle says Stable (max_real_part " + to_display_string(r.max_real_part) + ")";
      }
    } catch (const Error& e) {
      ok = false;
      detail += std::string(" oracle failed: ") + e.what();
    }
    rec.check(kCorollarySoundness, i, ok, region, detail);
  }
  return rec.take();
}

nlohmann::json fuzz_result_json(const FuzzOptions& options, const FuzzResult& result) {
  nlohmann::json props = nlohmann::json::array();
  for (const auto& t : result.properties) {
    props.push_back({{"name", t.name},
                     {"checked", t.checked},
                     {"passed", t.checked - t.failed},
                     {"failed", t.failed},
                     {"skipped", t.skipped}});
  }
  nlohmann::json examples = nlohmann::json::array();
  for (const auto& c : result.counterexamples) {
    examples.push_back({{"property", c.property},
                        {"sample", c.sample},
                        {"polynomial", c.polynomial},
                        {"detail", c.detail}});
  }
  return {{"schema", kSchemaVersion},
          {"command", "fuzz"},
          {"seed", options.seed},
          {"count", options.count},
          {"degrees", {options.min_degree, options.max_degree}},
          {"margin", options.margin},
          {"properties", std::move(props)},
          {"counterexamples", std::move(examples)},
          {"passed", result.passed()}};
}

std::string fuzz_result_text(const FuzzOptions& options, const FuzzResult& result) {
  std::ostringstream os;
  os << "fuzz: " << options.count << " samples, degrees " << options.min_degree << ".."
     << options.max_degree << ", seed " << options.seed << ", margin "
     << to_display_string(options.margin) << "\n";
  for (const auto& t : result.properties) {
    os << "  " << t.name << ": " << (t.checked - t.failed) << "/" << t.checked << " passed";
    if (t.skipped) os << ", " << t.skipped << " skipped";
    os << (t.failed ? "  FAIL\n" : "\n");
  }
  for (const auto& c : result.counterexamples) {
    os << "counterexample [" << c.property << "] sample " << c.sample << ": "
       << c.polynomial.dump() << "  " << c.detail << "\n";
  }
  os << (result.passed() ? "all properties passed\n" : "property failures found\n");
  return os.str();
}

}  // namespace chipart
